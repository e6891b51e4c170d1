// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.
//
//   acceptance [--only N[,M...]] [--long] [--verbose]
//
// --long adds the measured sixth moment over [0, 50000] to criterion 7
// (about a quarter of an hour on one core).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "zetamoments/determinants.hpp"
#include "zetamoments/errors.hpp"
#include "zetamoments/local_factors.hpp"
#include "zetamoments/method1.hpp"
#include "zetamoments/method2.hpp"
#include "zetamoments/special_functions.hpp"
#include "zetamoments/verifier.hpp"

using namespace zm;

namespace {

bool g_verbose = false;
bool g_long = false;

// Collects the sub-checks of one criterion.
struct Report {
    bool ok = true;
    std::vector<std::string> failures;
    std::ostringstream notes;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
        if (g_verbose) std::cerr << "    " << (cond ? "ok   " : "FAIL ") << what << "\n";
    }
};

std::string fmt(double x, int digits = 6) { return format_double(x, digits); }

// |value - printed| within half a unit in the last printed place.
bool matches_printed(const BigReal& value, const std::string& printed) {
    const auto dot = printed.find('.');
    const auto e = printed.find_first_of("eE");
    const std::string mant = printed.substr(0, e);
    const int decimals = dot == std::string::npos ? 0 : static_cast<int>(mant.size() - dot - 1);
    const int exp10 = e == std::string::npos ? 0 : std::stoi(printed.substr(e + 1));
    const BigReal ref(printed, value.bits());
    const BigReal ulp = pow(BigReal(10L, value.bits()), exp10 - decimals);
    return abs(value - ref) <= ulp * BigReal(BigRational(1, 2), value.bits()) * BigReal(1.000001, value.bits());
}

std::string show(const BigReal& x, int digits = 20) { return format_complex(BigComplex(x), digits); }

std::vector<ExponentShape> shapes_of_weight(int w, int width) {
    auto basis = shape_basis(w, width);
    auto [lo, hi] = basis->weight_range(w);
    std::vector<ExponentShape> out;
    for (std::size_t i = lo; i < hi; ++i) out.push_back(basis->shape(i));
    return out;
}

KPolynomial kpoly(std::initializer_list<BigRational> c) {
    KPolynomial p;
    for (const auto& x : c) p.coefficients.push_back(x);
    p.trim();
    return p;
}

void criterion_nk(Report& rep) {
    const BigRational h(1, 2);
    rep.check(nk_polynomial(ExponentShape::parse("(1;)")) == kpoly({0, 0, 1}), "N(1;) = k^2");
    rep.check(nk_polynomial(ExponentShape::parse("(2;)")).is_zero(), "N(2;) = 0");
    rep.check(nk_polynomial(ExponentShape::parse("(1,1;)")) == kpoly({0, 0, -h, 0, h}),
              "N(1,1;) = k^2 (k-1)(k+1) / 2");
    rep.check(nk_polynomial(ExponentShape::parse("(1;1)")) == kpoly({0, 0, 1, 0, -1}),
              "N(1;1) = -k^2 (k-1)(k+1)");
}

void criterion_leading(Report& rep) {
    const PrecisionContext ctx(30);
    const BigReal gamma = BigReal::euler_gamma(ctx.bits());
    const BigReal pi = BigReal::pi(ctx.bits());

    const MomentPolynomial p1 = build_polynomial(BigComplex(1L, ctx.bits()), 1, 30);
    const double d0 = agreeing_digits(p1.coefficients[0], BigComplex(1L, ctx.bits()), 60);
    const double d1 = agreeing_digits(p1.coefficients[1], BigComplex(gamma * 2L), 60);
    rep.check(d0 >= 25, "c_0(1) = 1 (" + fmt(d0, 3) + " digits)");
    rep.check(d1 >= 25, "c_1(1) = 2 gamma (" + fmt(d1, 3) + " digits)");

    const MomentPolynomial p2 = build_polynomial(BigComplex(2L, ctx.bits()), 0, 25);
    const double d2 = agreeing_digits(p2.coefficients[0], BigComplex(BigReal(1L, ctx.bits()) / (pi * pi * 2L)), 60);
    rep.check(d2 >= 20, "c_0(2) = 1/(2 pi^2) (" + fmt(d2, 3) + " digits)");

    Method1Options big;
    big.prime_cutoff = 100000;
    const MomentPolynomial ph = build_polynomial(BigComplex(0.5, 0, ctx.bits()), 0, 20, big);
    rep.check(matches_printed(ph.coefficients[0].re(), "1.1299287453321533"),
              "c_0(1/2) = 1.1299287453321533 at P = 1e5 (got " + show(ph.coefficients[0].re()) + ")");
}

void criterion_tables(Report& rep) {
    const PrecisionContext ctx(30);
    const MomentPolynomial half = build_polynomial(BigComplex(0.5, 0, ctx.bits()), 7, 22);
    const char* printed[] = {"1.1299287453321533", ".19628236755422853", ".03248602185728907",
                             "-.5289095729314908", "3.2346669444094671", "-21.381296730027876",
                             "166.38844209028643", "-1529.2695739774642"};
    for (int r = 0; r <= 7; ++r)
        rep.check(matches_printed(half.coefficients[r].re(), printed[r]) &&
                      abs(half.coefficients[r].im()).to_double() < 1e-22,
                  "k = 1/2, c_" + std::to_string(r) + " = " + printed[r] + " (got " +
                      show(half.coefficients[r].re()) + ")");

    const MomentPolynomial cx = build_polynomial(BigComplex(0.5, 1, ctx.bits()), 7, 22);
    const char* re[] = {"1.3117481341987813", "-3.0693034820213132", "23.861826126198446", "-111.54278536885322",
                        "828.16689710582718", "-5808.11341189128",   "15613.29091863494",  "188541.27977634034"};
    const char* im[] = {"1.211708767666727", "2.309977688777579",  "-5.4045694962616631", "-35.79807241977336",
                        "437.514818042632",  "-8339.592888954564", "101218.4464636376",   "-1175857.723687032"};
    for (int r = 0; r <= 7; ++r) {
        rep.check(matches_printed(cx.coefficients[r].re(), re[r]),
                  "k = 1/2 + i, Re c_" + std::to_string(r) + " = " + re[r] + " (got " +
                      show(cx.coefficients[r].re()) + ")");
        rep.check(matches_printed(cx.coefficients[r].im(), im[r]),
                  "k = 1/2 + i, Im c_" + std::to_string(r) + " = " + im[r] + " (got " +
                      show(cx.coefficients[r].im()) + ")");
    }
}

void criterion_shift_k4(Report& rep) {
    ShiftDiagnostics diag;
    const MomentPolynomial p = coefficients_via_shifts(4, 20, {}, &diag);
    const mpfr_prec_t bits = p.coefficients[0].bits();
    const double d0 = agreeing_digits(p.coefficients[0], BigComplex(BigReal("2.4650183919342276e-13", bits)), 60);
    rep.check(d0 >= 12, "c_0(4) = 2.4650183919342276e-13 (" + fmt(d0, 3) + " digits, got " +
                            show(p.coefficients[0].re()) + ")");
    rep.check(matches_printed(p.coefficients[13].re(), "38.203306"),
              "c_13(4) = 38.203306 (got " + show(p.coefficients[13].re()) + ")");
    double worst = 1e9;
    for (double a : diag.agreement_digits) worst = std::min(worst, a);
    rep.notes << "epsilon certification >= " << fmt(worst, 3) << " digits";
}

void criterion_crosscheck(Report& rep) {
    double worst = 1e9;
    for (int k : {2, 3}) {
        const MomentPolynomial m2 = coefficients_via_shifts(k, 25);
        const MomentPolynomial m1 = build_polynomial(BigComplex(static_cast<long>(k), 128), k * k, 30);
        for (int r = 0; r <= std::min(k * k, 9); ++r) {
            const double d = agreeing_digits(m1.coefficients[r], m2.coefficients[r], 60);
            worst = std::min(worst, d);
            rep.check(d >= 15, "k = " + std::to_string(k) + ", r = " + std::to_string(r) + ": " + fmt(d, 3) +
                                   " digits");
        }
    }
    rep.notes << "worst agreement " << fmt(worst, 3) << " digits";
}

void criterion_conjecture(Report& rep) {
    const PrecisionContext ctx(25);
    const MomentPolynomial p = build_polynomial(BigComplex(3L, ctx.bits()), 9, 20);
    const char* printed[] = {"7.23687e9", "1.56965e10", "2.15687e10"};
    for (int n = 0; n < 3; ++n) {
        const BigComplex v = conjecture_integral(p, BigReal(50000.0 * n, ctx.bits()),
                                                 BigReal(50000.0 * (n + 1), ctx.bits()), ctx);
        rep.check(matches_printed(v.re(), printed[n]),
                  "block " + std::to_string(n) + " = " + printed[n] + " (got " + show(v.re(), 12) + ")");
    }
}

void criterion_data(Report& rep) {
    const BigComplex half(0.5, 0, 128);
    struct Row {
        double C, D, printed;
    };
    for (const Row& row : {Row{100, 1000, 1521.27}, Row{100, 10000, 18257.1}}) {
        const DataMoment d = data_moment(half, row.C, row.D);
        const double rel = std::fabs(d.value.real() / row.printed - 1);
        rep.notes << fmt(row.D) << ": " << fmt(d.value.real(), 10) << "; ";
        rep.check(rel < 5e-3, "k = 1/2 on [" + fmt(row.C) + ", " + fmt(row.D) + "] = " + fmt(d.value.real(), 10) +
                                  " against " + fmt(row.printed) + " (" + fmt(rel, 2) + " relative)");
    }
    if (g_long) {
        DataOptions opt;
        opt.threads = std::max(1u, std::thread::hardware_concurrency());
        const DataMoment d = data_moment(BigComplex(3L, 128), 0, 50000, opt);
        const double rel = std::fabs(d.value.real() / 7.23101e9 - 1);
        rep.notes << "k = 3 on [0, 50000]: " << fmt(d.value.real(), 10);
        rep.check(rel < 1e-3, "k = 3 on [0, 50000] = " + fmt(d.value.real(), 8) + " (" + fmt(rel, 2) + " relative)");
    } else {
        rep.notes << "k = 3 on [0, 50000] skipped (--long)";
    }
}

// Property suites.

using Cd = std::complex<double>;
using Monomial = std::vector<int>;
using Explicit = std::map<Monomial, Cd>;

Cd to_cd(const BigComplex& z) { return {z.re().to_double(), z.im().to_double()}; }

void monomials_rec(int vars, int left, Monomial& cur, std::vector<Monomial>& out) {
    if (static_cast<int>(cur.size()) == vars) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= left; ++e) {
        cur.push_back(e);
        monomials_rec(vars, left - e, cur, out);
        cur.pop_back();
    }
}

std::vector<Monomial> monomials(int vars, int max_degree) {
    std::vector<Monomial> out;
    Monomial cur;
    monomials_rec(vars, max_degree, cur, out);
    return out;
}

Explicit expand(const SymmetricSeries& s, int k) {
    Explicit out;
    for (const auto& m : monomials(2 * k, s.order())) {
        Cd v = to_cd(s.at({{m.begin(), m.begin() + k}, {m.begin() + k, m.end()}}));
        if (v != Cd(0)) out[m] = v;
    }
    return out;
}

bool brute_product_matches(const SymmetricSeries& a, const SymmetricSeries& b, const SymmetricSeries& ab, int k) {
    const int order = ab.order();
    Explicit prod;
    for (const auto& [ma, va] : expand(a, k))
        for (const auto& [mb, vb] : expand(b, k)) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            if (std::accumulate(m.begin(), m.end(), 0) <= order) prod[m] += va * vb;
        }
    const Explicit want = expand(ab, k);
    for (const auto& m : monomials(2 * k, order)) {
        const Cd got = prod.count(m) ? prod.at(m) : Cd(0);
        const Cd ref = want.count(m) ? want.at(m) : Cd(0);
        if (std::abs(got - ref) > 1e-12 * (1.0 + std::abs(ref))) return false;
    }
    return true;
}

void criterion_properties(Report& rep) {
    {
        bool ok = true;
        for (int w = 0; w <= 4; ++w)
            for (const auto& s : shapes_of_weight(w, 4))
                for (long k = std::max<long>({1, (long)s.alpha.size(), (long)s.beta.size()}); k <= 4; ++k)
                    ok = ok && nk_raw(k, s, true) == nk_raw(k, s, false);
        rep.check(ok, "pruned and unpruned N_k agree (weight <= 4, k <= 4)");
    }
    {
        bool ok = true;
        for (long k = 1; k <= 3; ++k)
            for (int w = 0; w <= 4; ++w)
                for (const auto& s : shapes_of_weight(w, static_cast<int>(k)))
                    for (const auto& t : rearrangements(s.alpha, k, true))
                        for (const auto& b : rearrangements(s.beta, k, true)) {
                            BigRational m = mtilde(k, t, b);
                            bool outside = false;
                            for (long l = 0; l < k; ++l) outside = outside || b[l] + l > 2 * k - 1;
                            if (outside) {
                                ok = ok && m == 0;
                                continue;
                            }
                            if (std::accumulate(b.begin(), b.end(), 0) % 2) m = -m;
                            ok = ok && m == binomial_det_oracle(k, t, b);
                        }
        rep.check(ok, "determinant equals its binomial form (k <= 3)");
    }
    {
        constexpr mpfr_prec_t bits = 160;
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        auto random_series = [&](int order, int k) {
            SymmetricSeries s(shape_basis(order, k), bits);
            for (std::size_t i = 0; i < s.basis().size(); ++i) s[i] = BigComplex(u(rng), u(rng), bits);
            return s;
        };
        bool ok = true;
        for (int k = 1; k <= 4; ++k)
            for (int R = 1; R <= 4; ++R) {
                const SymmetricSeries a = random_series(R, k), b = random_series(R, k);
                ok = ok && brute_product_matches(a, b, series_multiply(a, b), k);
            }
        rep.check(ok, "series product equals explicit-variable expansion (k <= 4, R <= 4)");
    }
    {
        const PrecisionContext ctx(30);
        double worst = 1e9;
        for (const BigComplex& k : {BigComplex(0.5, 0, ctx.bits()), BigComplex(0.5, 1, ctx.bits()),
                                    BigComplex(3L, ctx.bits())}) {
            const SymmetricSeries a = compute_B(k, 4, 500, ctx), b = compute_B(k, 4, 1000, ctx);
            for (std::size_t i = 0; i < a.coefficients().size(); ++i)
                worst = std::min(worst, agreeing_digits(a[i], b[i], 60));
        }
        rep.check(worst >= ctx.decimal_digits, "local factor coefficients stable under doubling the prime cutoff (" +
                                                   fmt(worst, 3) + " digits)");
    }
    {
        bool ok = true;
        double worst = 1e9;
        for (int k : {2, 3}) {
            ShiftDiagnostics diag;
            coefficients_via_shifts(k, 20, {}, &diag);
            for (double a : diag.agreement_digits) {
                ok = ok && a >= 15;
                worst = std::min(worst, a);
            }
        }
        rep.check(ok, "shift results agree between epsilon and epsilon/10 (" + fmt(worst, 3) + " >= D - 5 digits)");
    }
    {
        const int digits = 20;
        bool ok = true;
        for (double k : {0.5, 1.8, 3.0}) {
            const MomentPolynomial p = build_polynomial(BigComplex(k, 0, 128), 5, digits);
            for (const auto& c : p.coefficients) ok = ok && abs(c.im()).to_double() < std::pow(10.0, -(digits - 10));
        }
        rep.check(ok, "coefficients are real for real k");
    }
    {
        const PrecisionContext ctx(30);
        const auto R = [&](const char* s) { return BigReal(std::string(s), ctx.bits()); };
        const auto C = [&](const char* re, const char* im) { return BigComplex(R(re), R(im)); };
        const BigReal x = R("0.37");
        const BigComplex a = C("1.25", "0.5"), b = C("2.5", "-0.25"), c = C("4", "0");
        const BigComplex one_minus_x(1L - x);
        const double d1 = agreeing_digits(gauss_2f1(C("1", "0"), C("1", "0"), C("2", "0"), x, ctx),
                                          BigComplex(-log(1L - x) / x));
        const double d2 = agreeing_digits(gauss_2f1(a, C("3.5", "0"), C("3.5", "0"), x, ctx),
                                          exp(-(a * log(one_minus_x))));
        const double d3 = agreeing_digits(gauss_2f1(a, b, c, x, ctx),
                                          exp((c - a - b) * log(one_minus_x)) * gauss_2f1(c - a, c - b, c, x, ctx));
        rep.check(std::min({d1, d2, d3}) >= 30, "2F1 closed forms and the Euler transformation");
    }
    {
        EulerianTable e(12);
        bool ok = true;
        for (int n = 1; n <= 12; ++n) {
            BigInteger sum = 0;
            for (int l = 0; l < n; ++l) sum += e(n, l);
            ok = ok && sum == factorial(n);
        }
        rep.check(ok, "Eulerian row sums are factorials");
    }
    {
        // the integrand is periodic and analytic, so the trapezoid rule
        // converges geometrically in the number of nodes
        const PrecisionContext ctx(30);
        const mpfr_prec_t bits = ctx.bits();
        const BigReal two_pi = BigReal::pi(bits) * 2L;
        struct Case {
            BigComplex A, B;
            long C;
            double t;
        };
        double worst = 1e9;
        for (const Case& cs : {Case{BigComplex(3L, bits), BigComplex(2L, bits), 1, 0.25},
                               Case{BigComplex(2L, bits), BigComplex(4L, bits), -2, 0.1},
                               Case{BigComplex(1.5, 1, bits), BigComplex(2.5, 1, bits), 0, 0.5}}) {
            const BigReal st = sqrt(BigReal(cs.t, bits));
            const int n = 400;
            BigComplex sum(bits);
            for (int j = 0; j < n; ++j) {
                const BigReal ang = two_pi * BigReal(BigRational(j, n), bits);
                const BigComplex e = polar(BigReal(1L, bits), ang);
                const BigComplex ei = polar(BigReal(1L, bits), -ang);
                const BigComplex one(1L, bits);
                sum += exp(-(cs.A * log(one - e * st)) - cs.B * log(one - ei * st)) *
                       polar(BigReal(1L, bits), ang * cs.C);
            }
            sum = sum / BigComplex(static_cast<long>(n), bits);
            worst = std::min(worst, agreeing_digits(theta_integral(cs.A, cs.B, cs.C, BigReal(cs.t, bits), ctx), sum, 60));
        }
        rep.check(worst >= 30, "theta integral equals direct quadrature (" + fmt(worst, 3) + " digits)");
    }
}

struct Criterion {
    int id;
    const char* title;
    std::function<void(Report&)> run;
};

std::set<int> parse_only(const std::string& s) {
    std::set<int> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.insert(std::stoi(tok));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--long") {
            g_long = true;
        } else if (a == "--verbose") {
            g_verbose = true;
        } else if (a == "--only" && i + 1 < argc) {
            only = parse_only(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--only N[,M...]] [--long] [--verbose]\n";
            return 2;
        }
    }

    const std::vector<Criterion> all = {
        {1, "N_k closed forms", criterion_nk},
        {2, "leading coefficients", criterion_leading},
        {3, "half-integer and complex coefficient tables", criterion_tables},
        {4, "shift method at k = 4", criterion_shift_k4},
        {5, "determinant and shift methods agree for k = 2, 3", criterion_crosscheck},
        {6, "conjectured sixth moment blocks", criterion_conjecture},
        {7, "measured moments at desk scale", criterion_data},
        {8, "property suites", criterion_properties},
    };

    int failed = 0;
    for (const auto& c : all) {
        if (!only.empty() && !only.count(c.id)) continue;
        Report rep;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(rep);
        } catch (const std::exception& e) {
            rep.check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d: %s  %s  (%.1f s)", c.id, rep.ok ? "PASS" : "FAIL", c.title, secs);
        const std::string notes = rep.notes.str();
        if (!notes.empty()) std::printf("  [%s]", notes.c_str());
        std::printf("\n");
        for (const auto& f : rep.failures) std::printf("    failed: %s\n", f.c_str());
        std::fflush(stdout);
        failed += rep.ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
