#include "zetamoments/verifier.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "zetamoments/errors.hpp"
#include "zetamoments/local_factors.hpp"
#include "zetamoments/method1.hpp"
#include "zetamoments/method2.hpp"
#include "zetamoments/special_functions.hpp"

namespace zm {

namespace {

// ------------------------------------------------------------ conjecture side

// Exponents k^2 - r are non-negative integers.
bool integer_exponents(const MomentPolynomial& poly) {
    const long n = integer_value(poly.k);
    return n > 0 && poly.order() <= n * n;
}

int terms_used(const MomentPolynomial& poly, int R) {
    if (poly.coefficients.empty()) throw ConfigurationError("empty moment polynomial");
    if (R > poly.order()) throw ConfigurationError("truncation order above the available coefficients");
    return R < 0 ? poly.order() : R;
}

void check_interval(const BigReal& C, const BigReal& D) {
    if (C.sign() < 0 || !(C < D)) throw DomainError("interval must satisfy 0 <= C < D");
}

// t sum_{j<=n} (-1)^{n-j} n!/j! L^j with L = log(t/2 pi); zero at t = 0.
std::vector<BigReal> antiderivatives(const BigReal& t, int n_max, mpfr_prec_t bits) {
    std::vector<BigReal> out(n_max + 1, BigReal(bits));
    if (t.is_zero()) return out;
    const BigReal L = log(t / (BigReal::pi(bits) * 2L));
    // G_n = L^n - n G_{n-1}, G_0 = 1, so F_n = t G_n
    BigReal G(1L, bits), Lp(1L, bits);
    out[0] = t;
    for (int n = 1; n <= n_max; ++n) {
        Lp *= L;
        G = Lp - G * static_cast<long>(n);
        out[n] = t * G;
    }
    return out;
}

struct GaussLegendre {
    std::vector<BigReal> x, w;  // nodes on [-1, 1]
};

const GaussLegendre& gauss_legendre(int m, mpfr_prec_t bits) {
    static std::mutex mu;
    static std::map<std::pair<int, mpfr_prec_t>, GaussLegendre> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({m, bits});
    if (it != cache.end()) return it->second;
    GaussLegendre g;
    const BigReal one(1L, bits);
    const BigReal tol = ldexp(one, -static_cast<long>(bits) + 4);
    for (int i = 1; i <= m; ++i) {
        BigReal x(std::cos(M_PI * (i - 0.25) / (m + 0.5)), bits);
        BigReal dp(bits);
        for (int iter = 0; iter < 100; ++iter) {
            BigReal p0 = one, p1 = x;
            for (int j = 2; j <= m; ++j) {
                BigReal p2 = (x * p1 * static_cast<long>(2 * j - 1) - p0 * static_cast<long>(j - 1)) / static_cast<long>(j);
                p0 = std::move(p1);
                p1 = std::move(p2);
            }
            dp = (x * p1 - p0) * static_cast<long>(m) / (x * x - one);
            BigReal dx = p1 / dp;
            x -= dx;
            if (abs(dx) < tol) break;
        }
        g.w.push_back(BigReal(2L, bits) / ((one - x * x) * dp * dp));
        g.x.push_back(std::move(x));
    }
    return cache.emplace(std::make_pair(m, bits), std::move(g)).first->second;
}

// Per-term integrals in u = log(t/2 pi), t = 2 pi e^u, over panels whose
// width is at most `width` and at most half their distance from u = 0.
std::vector<BigComplex> quadrature_terms(const MomentPolynomial& poly, const BigReal& uC, const BigReal& uD,
                                         int R, double width, mpfr_prec_t bits) {
    constexpr int kNodes = 24;
    const GaussLegendre& gl = gauss_legendre(kNodes, bits);
    const bool integral = integer_exponents(poly);
    const long top = integral ? integer_value(poly.k) * integer_value(poly.k) : 0;
    const BigComplex k2 = poly.k * poly.k;
    std::vector<BigComplex> acc(R + 1, BigComplex(bits));
    const BigReal two_pi = BigReal::pi(bits) * 2L;

    std::vector<BigReal> cuts{uC};
    while (cuts.back() < uD) {
        const BigReal& a = cuts.back();
        double w = width;
        if (!integral) w = std::min(w, 0.5 * a.to_double());
        BigReal b = a + BigReal(w, bits);
        cuts.push_back(b < uD ? b : uD);
    }
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
        const BigReal half = (cuts[p + 1] - cuts[p]) / 2L;
        const BigReal mid = (cuts[p + 1] + cuts[p]) / 2L;
        for (int i = 0; i < kNodes; ++i) {
            const BigReal u = mid + half * gl.x[i];
            const BigReal jac = gl.w[i] * half * two_pi * exp(u);
            if (integral) {
                BigReal pw = pow(u, top - R);
                for (int r = R; r >= 0; --r) {
                    acc[r] += poly.coefficients[r] * (pw * jac);
                    pw *= u;
                }
            } else {
                const BigReal lu = log(u);
                BigComplex pw = pow_from_log(lu, k2) * jac;
                const BigReal inv = BigReal(1L, bits) / u;
                for (int r = 0; r <= R; ++r) {
                    acc[r] += poly.coefficients[r] * pw;
                    pw *= inv;
                }
            }
        }
    }
    return acc;
}

std::vector<BigComplex> adaptive_terms(const MomentPolynomial& poly, const BigReal& C, const BigReal& D, int R,
                                       const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.widened(5).bits();
    const BigReal two_pi = BigReal::pi(bits) * 2L;
    const BigReal uC = log(BigReal(C, bits) / two_pi), uD = log(BigReal(D, bits) / two_pi);
    const BigReal tol = pow(BigReal(10L, bits), -static_cast<long>(ctx.decimal_digits - 5));
    double width = 0.5;
    std::vector<BigComplex> prev = quadrature_terms(poly, uC, uD, R, width, bits);
    for (int round = 0; round < 12; ++round) {
        width /= 2;
        std::vector<BigComplex> next = quadrature_terms(poly, uC, uD, R, width, bits);
        bool ok = true;
        for (int r = 0; r <= R && ok; ++r) ok = abs(next[r] - prev[r]) <= tol * abs(next[r]);
        if (ok) return next;
        prev = std::move(next);
    }
    throw NoConvergence("conjecture quadrature did not settle");
}

// ------------------------------------------------------------ data side

// Gauss-Kronrod 15/7 on [-1, 1], positive half of the symmetric nodes.
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

using cplx = std::complex<double>;

struct Neumaier {
    double sum = 0, comp = 0;
    void add(double x) {
        const double t = sum + x;
        comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// Absolute error per unit t accepted regardless of the relative target: the
// double precision zeta carries rounding noise of about this size, which
// would otherwise drive endless bisection where the integrand nearly vanishes.
constexpr double kNoiseFloor = 1e-12;

// Smallest height at which Z is watched for sign changes (below the first zero).
constexpr double kZeroSearchStart = 10.0;

struct Sample {
    cplx value;        // |zeta|^{2k}
    double z;          // Hardy's Z, or 0 where zeros are not tracked
    double noise = 0;  // rounding noise carried by |value|
};

// Absolute rounding error of the double precision zeta at height t: each
// phase t log n is off by a few ulps of its size, and the errors of the
// terms add up like a random walk.
double zeta_noise(double t) {
    const double l = std::log(t + 3.0);
    return 1e-15 + 2.2e-16 * t * l * std::sqrt(l);
}

class DataIntegrand {
public:
    DataIntegrand(const BigComplex& k, double t_max)
        : zeta_(t_max + 1), k_(k.re().to_double(), k.im().to_double()), power_(integer_value(k)) {}

    // d |zeta|^{2k} = 2 |k| |zeta|^{2 Re k - 1} d|zeta|, smoothed at zeros.
    double noise(double t, double m2) const {
        const double d = zeta_noise(t);
        return 2 * std::abs(k_) * d * std::pow(m2 + d * d, k_.real() - 0.5);
    }

    // |zeta|^{2k} is not analytic at a zero unless 2k is an even integer.
    bool needs_split() const { return power_ == 0; }

    Sample operator()(double t, long& evals) const {
        ++evals;
        const cplx zeta = zeta_(t);
        const double m2 = std::norm(zeta);
        Sample s{0, 0};
        if (power_ > 0)
            s.value = std::pow(m2, static_cast<int>(power_));
        else if (m2 > 0)
            s.value = std::exp(k_ * std::log(m2));
        s.noise = noise(t, m2);
        if (needs_split() && t >= kZeroSearchStart) {
            const double th = riemann_siegel_theta(t);
            s.z = std::cos(th) * zeta.real() - std::sin(th) * zeta.imag();
        }
        return s;
    }

    double hardy_z(double t, long& evals) const { return (*this)(t, evals).z; }

private:
    CriticalLineZeta zeta_;
    cplx k_;
    long power_;
};

struct Gk {
    cplx value;
    double error = 0;
    double noise = 0;  // integral of the integrand's rounding noise
    double zc = 0;  // Z at the centre node
    // nodes around a sign change of Z, if any
    bool bracket = false;
    double lo = 0, zlo = 0, hi = 0, zhi = 0;
    // neighbours of a node where |Z| dips without a sign change: a pair of
    // close zeros may hide between them
    bool dip = false;
    double dip_lo = 0, dip_hi = 0, dip_sign = 0;
};

// za, zb: Z at the ends when known, else 0.
Gk gauss_kronrod(const DataIntegrand& f, double a, double b, double za, double zb, long& evals) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double t[17];
    Sample v[17];
    t[0] = a, v[0] = {0, za};
    t[16] = b, v[16] = {0, zb};
    for (int j = 0; j < 7; ++j) {
        t[j + 1] = c - h * kXgk[j];
        t[15 - j] = c + h * kXgk[j];
    }
    t[8] = c;
    for (int i = 1; i < 16; ++i) v[i] = f(t[i], evals);
    cplx k = v[8].value * kWgk[7], g = v[8].value * kWg[3];
    double noise = v[8].noise * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const cplx s = v[j + 1].value + v[15 - j].value;
        k += s * kWgk[j];
        noise += (v[j + 1].noise + v[15 - j].noise) * kWgk[j];
        if (j % 2 == 1) g += s * kWg[j / 2];
    }
    Gk out{k * h, std::abs((k - g) * h), noise * h, v[8].z};
    for (int i = 0; i + 1 < 17 && !out.bracket; ++i) {
        if (v[i].z != 0 && v[i + 1].z != 0 && (v[i].z > 0) != (v[i + 1].z > 0)) {
            out.bracket = true;
            out.lo = t[i], out.zlo = v[i].z, out.hi = t[i + 1], out.zhi = v[i + 1].z;
        }
    }
    for (int i = 1; i + 1 < 17 && !out.bracket && !out.dip; ++i) {
        const double l = std::fabs(v[i - 1].z), m = std::fabs(v[i].z), r = std::fabs(v[i + 1].z);
        if (v[i - 1].z != 0 && v[i].z != 0 && v[i + 1].z != 0 && m < l && m < r) {
            out.dip = true;
            out.dip_lo = t[i - 1], out.dip_hi = t[i + 1], out.dip_sign = v[i].z > 0 ? 1 : -1;
        }
    }
    return out;
}

// Minimum of sign * Z on [lo, hi] by golden section; returns (t, Z(t)).
std::pair<double, double> hardy_dip(const DataIntegrand& f, double lo, double hi, double sign, long& evals) {
    const double g = 0.5 * (std::sqrt(5.0) - 1);
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = f.hardy_z(x1, evals), f2 = f.hardy_z(x2, evals);
    for (int it = 0; it < 40 && hi - lo > 1e-9 * hi; ++it) {
        if (sign * f1 < sign * f2) {
            hi = x2, x2 = x1, f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f.hardy_z(x1, evals);
        } else {
            lo = x1, x1 = x2, f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f.hardy_z(x2, evals);
        }
        if ((f1 > 0) != (sign > 0) && f1 != 0) return {x1, f1};
        if ((f2 > 0) != (sign > 0) && f2 != 0) return {x2, f2};
    }
    return sign * f1 < sign * f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

// Root of Z between lo and hi (opposite signs) by the Illinois method.
double hardy_zero(const DataIntegrand& f, double lo, double flo, double hi, double fhi, long& evals) {
    int side = 0;
    for (int it = 0; it < 100 && hi - lo > 1e-13 * hi; ++it) {
        double x = (lo * fhi - hi * flo) / (fhi - flo);
        // Z is only known to rounding near its zero; fall back to bisection
        if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
        const double fx = f.hardy_z(x, evals);
        if (fx == 0) return x;
        if ((fx > 0) == (fhi > 0)) {
            hi = x, fhi = fx;
            if (side == 1) flo /= 2;
            side = 1;
        } else {
            lo = x, flo = fx;
            if (side == -1) fhi /= 2;
            side = -1;
        }
    }
    return 0.5 * (lo + hi);
}

struct PanelResult {
    cplx value;
    double error = 0;
    long pieces = 0;
    long evals = 0;
};

// Adaptive Gauss-Kronrod on [a, b]. A sign change of Z between two nodes
// marks a zero inside the piece: the piece is cut there, so accepted pieces
// are free of interior zeros.
PanelResult integrate_panel(const DataIntegrand& f, double a, double b, double rel_tol) {
    PanelResult out;
    struct Piece {
        double a, b, za, zb;
        Gk gk;
        int depth;
        bool dip_cleared = false;  // a dip here was searched and Z kept its sign
    };
    const double za = f.needs_split() ? f.hardy_z(a, out.evals) : 0;
    const double zb = f.needs_split() ? f.hardy_z(b, out.evals) : 0;
    std::vector<Piece> todo{{a, b, za, zb, gauss_kronrod(f, a, b, za, zb, out.evals), 0}};
    // Absolute budget spread over the panel in proportion to width, fixed
    // from the first estimate.
    const double budget = rel_tol * std::abs(todo.front().gk.value);
    long splits = 0;
    std::vector<Piece> done;
    while (!todo.empty()) {
        Piece p = todo.back();
        todo.pop_back();
        if (p.depth >= 60)
            throw PrecisionExceeded("data quadrature: panel near t = " + format_double(p.a) + " does not settle");
        if (++splits > 100000) throw PrecisionExceeded("data quadrature: too many pieces near t = " + format_double(a));
        double cut = 0, zcut = 0;
        if (p.gk.bracket) {
            // zcut stays 0: Z vanishes at the cut
            cut = hardy_zero(f, p.gk.lo, p.gk.zlo, p.gk.hi, p.gk.zhi, out.evals);
            if (!(cut > p.a && cut < p.b)) cut = 0;
        } else if (p.gk.dip && !p.dip_cleared) {
            const auto [tm, zm] = hardy_dip(f, p.gk.dip_lo, p.gk.dip_hi, p.gk.dip_sign, out.evals);
            if ((zm > 0) != (p.gk.dip_sign > 0) && zm != 0 && tm > p.a && tm < p.b) {
                cut = tm, zcut = zm;
            } else {
                p.dip_cleared = true;
                todo.push_back(p);
                continue;
            }
        } else if (p.gk.error <= budget * (p.b - p.a) / (b - a) || p.gk.error <= 1e-15 * std::abs(p.gk.value) ||
                   p.gk.error <= kNoiseFloor * (p.b - p.a) || p.gk.error <= 2 * p.gk.noise ||
                   p.b - p.a < 1e-11 * p.b) {
            done.push_back(p);
            continue;
        }
        if (cut == 0) cut = 0.5 * (p.a + p.b), zcut = p.gk.zc;
        const bool cleared = p.dip_cleared && !p.gk.bracket;
        todo.push_back({cut, p.b, zcut, p.zb, gauss_kronrod(f, cut, p.b, zcut, p.zb, out.evals), p.depth + 1, cleared});
        todo.push_back({p.a, cut, p.za, zcut, gauss_kronrod(f, p.a, cut, p.za, zcut, out.evals), p.depth + 1, cleared});
    }
    std::sort(done.begin(), done.end(), [](const Piece& x, const Piece& y) { return x.a < y.a; });
    Neumaier re, im;
    for (const Piece& p : done) {
        re.add(p.gk.value.real());
        im.add(p.gk.value.imag());
        out.error += p.gk.error;
    }
    out.value = {re.value(), im.value()};
    out.pieces = static_cast<long>(done.size());
    return out;
}

// ------------------------------------------------------------ output

std::string k_string(const BigComplex& k) {
    return format_complex_double({k.re().to_double(), k.im().to_double()}, 17);
}

std::string conj_string(const IntervalResult& row, int digits) {
    BigComplex c = row.conjectured;
    if (row.k.is_real()) c = BigComplex(c.re());
    return format_complex(c, digits);
}

}  // namespace

std::vector<BigComplex> conjecture_terms(const MomentPolynomial& poly, const BigReal& C, const BigReal& D,
                                         const PrecisionContext& ctx, int R) {
    R = terms_used(poly, R);
    check_interval(C, D);
    const mpfr_prec_t bits = ctx.widened(5).bits();
    if (integer_exponents(poly)) {
        const long top = integer_value(poly.k) * integer_value(poly.k);
        const auto fd = antiderivatives(BigReal(D, bits), static_cast<int>(top), bits);
        const auto fc = antiderivatives(BigReal(C, bits), static_cast<int>(top), bits);
        std::vector<BigComplex> out;
        for (int r = 0; r <= R; ++r) out.push_back(poly.coefficients[r] * (fd[top - r] - fc[top - r]));
        return out;
    }
    const BigReal two_pi = BigReal::pi(bits) * 2L;
    if (!(BigReal(C, bits) > two_pi)) throw DomainError("non-integer exponents need C > 2 pi");
    return adaptive_terms(poly, C, D, R, ctx);
}

BigComplex conjecture_integral(const MomentPolynomial& poly, const BigReal& C, const BigReal& D,
                               const PrecisionContext& ctx, int R) {
    BigComplex sum(ctx.widened(5).bits());
    for (const BigComplex& t : conjecture_terms(poly, C, D, ctx, R)) sum += t;
    return sum;
}

BigComplex conjecture_integral_quadrature(const MomentPolynomial& poly, const BigReal& C, const BigReal& D,
                                          const PrecisionContext& ctx, int R) {
    R = terms_used(poly, R);
    check_interval(C, D);
    if (C.sign() <= 0) throw DomainError("quadrature needs C > 0");
    const mpfr_prec_t bits = ctx.widened(5).bits();
    if (!integer_exponents(poly) && !(BigReal(C, bits) > BigReal::pi(bits) * 2L))
        throw DomainError("non-integer exponents need C > 2 pi");
    BigComplex sum(bits);
    for (const BigComplex& t : adaptive_terms(poly, C, D, R, ctx)) sum += t;
    return sum;
}

std::vector<std::pair<int, BigComplex>> truncation_sweep(const MomentPolynomial& poly, const BigReal& C,
                                                         const BigReal& D, const PrecisionContext& ctx) {
    std::vector<std::pair<int, BigComplex>> out;
    BigComplex sum(ctx.widened(5).bits());
    const auto terms = conjecture_terms(poly, C, D, ctx);
    for (std::size_t r = 0; r < terms.size(); ++r) {
        sum += terms[r];
        out.emplace_back(static_cast<int>(r), sum);
    }
    return out;
}

DataMoment data_moment(const BigComplex& k, double C, double D, const DataOptions& opt) {
    if (!(C >= 0) || !(D > C)) throw DomainError("interval must satisfy 0 <= C < D");
    if (D > kDeskScaleHeight && !opt.allow_long)
        throw DomainError("data side above t = 1e5 is a long run; enable it explicitly");
    if (opt.digits < 1) throw ConfigurationError("data digits must be positive");
    if (opt.digits > 12) throw PrecisionExceeded("data side runs in double precision: at most 12 digits");
    if (!(opt.max_panel > 0)) throw ConfigurationError("panel width must be positive");
    if (k.re().sign() <= 0) throw DomainError("data side needs Re k > 0");

    const DataIntegrand f(k, D);
    const long n = std::max<long>(1, static_cast<long>(std::ceil((D - C) / opt.max_panel)));
    const double h = (D - C) / static_cast<double>(n);
    const double rel_tol = std::pow(10.0, -opt.digits);
    std::vector<PanelResult> panels(n);

    const int workers = std::max(1, std::min<int>(opt.threads, static_cast<int>(n)));
    std::atomic<long> next{0}, finished{0};
    std::mutex mu;
    std::exception_ptr failure;
    auto work = [&] {
        try {
            for (long i = next++; i < n; i = next++) {
                const double a = C + h * static_cast<double>(i);
                const double b = i + 1 == n ? D : C + h * static_cast<double>(i + 1);
                panels[i] = integrate_panel(f, a, b, rel_tol);
                const long done = ++finished;
                if (opt.progress && done % std::max<long>(1, n / 100) == 0) {
                    std::lock_guard<std::mutex> lock(mu);
                    opt.progress(static_cast<double>(done) / static_cast<double>(n));
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!failure) failure = std::current_exception();
            next = n;
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    // ascending order regardless of which worker finished first
    DataMoment out;
    Neumaier re, im;
    for (const PanelResult& p : panels) {
        re.add(p.value.real());
        im.add(p.value.imag());
        out.error_estimate += p.error;
        out.panels += p.pieces;
        out.evaluations += p.evals;
    }
    out.value = {re.value(), im.value()};
    return out;
}

std::vector<std::tuple<int, double, double>> block_intervals(int first, int last, double width) {
    std::vector<std::tuple<int, double, double>> out;
    for (int n = first; n <= last; ++n) out.emplace_back(n, width * n, width * (n + 1));
    return out;
}

std::vector<IntervalResult> run_table(const std::vector<MomentPolynomial>& polys,
                                      const std::vector<std::tuple<int, double, double>>& intervals,
                                      const TableOptions& opt) {
    std::vector<IntervalResult> rows;
    for (const MomentPolynomial& poly : polys) {
        const int R = opt.R < 0 ? poly.order() : opt.R;
        const PrecisionContext ctx(std::max(poly.digits, 15) + 5);
        for (const auto& [n, C, D] : intervals) {
            IntervalResult row;
            row.n = n, row.C = C, row.D = D, row.k = poly.k, row.R = R;
            row.conjectured =
                conjecture_integral(poly, BigReal(C, ctx.bits()), BigReal(D, ctx.bits()), ctx, R);
            if (opt.with_data) {
                row.has_data = true;
                row.data = data_moment(poly.k, C, D, opt.data).value;
                const cplx conj(row.conjectured.re().to_double(), row.conjectured.im().to_double());
                row.relative_error = (conj - row.data) / row.data;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<IntervalResult> run_table(const std::vector<BigComplex>& ks,
                                      const std::vector<std::tuple<int, double, double>>& intervals,
                                      const TableOptions& opt) {
    std::vector<MomentPolynomial> polys;
    for (const BigComplex& k : ks) {
        if (opt.method == 2) {
            const long n = integer_value(k);
            if (n <= 0) throw ConfigurationError("the shift method needs a positive integer k");
            Method2Options m2;
            if (opt.prime_cutoff) m2.prime_cutoff = opt.prime_cutoff;
            polys.push_back(coefficients_via_shifts(static_cast<int>(n), opt.digits + 5, m2));
        } else if (opt.method == 1) {
            Method1Options m1;
            if (opt.prime_cutoff) m1.prime_cutoff = opt.prime_cutoff;
            const int order = opt.R < 0 ? default_order(k) : opt.R;
            polys.push_back(build_polynomial(k, order, opt.digits, m1));
        } else {
            throw ConfigurationError("method must be 1 or 2");
        }
    }
    return run_table(polys, intervals, opt);
}

std::string format_double(double x, int digits) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, std::clamp(digits, 1, 17));
    return std::string(buf, res.ptr);
}

std::string format_complex_double(std::complex<double> z, int digits) {
    if (z.imag() == 0) return format_double(z.real(), digits);
    std::string im = format_double(z.imag(), digits);
    if (im[0] != '-') im = "+" + im;
    return format_double(z.real(), digits) + im + "i";
}

std::string results_to_csv(const std::vector<IntervalResult>& rows, int digits) {
    std::ostringstream os;
    os << "n,C,D,k,R,conjectured,data,rel_error\n";
    for (const IntervalResult& r : rows) {
        os << r.n << ',' << format_double(r.C, 17) << ',' << format_double(r.D, 17) << ','
           << k_string(r.k) << ',' << r.R << ',' << conj_string(r, digits) << ','
           << (r.has_data ? format_complex_double(r.data, std::min(digits, 12)) : "") << ','
           << (r.has_data ? format_complex_double(r.relative_error, 6) : "") << '\n';
    }
    return os.str();
}

std::string results_to_json(const std::vector<IntervalResult>& rows, int digits) {
    nlohmann::json j;
    j["format"] = "zetamoments.verification";
    j["version"] = 1;
    nlohmann::json arr = nlohmann::json::array();
    for (const IntervalResult& r : rows) {
        nlohmann::json e;
        e["n"] = r.n;
        e["C"] = format_double(r.C, 17);
        e["D"] = format_double(r.D, 17);
        e["k"] = k_string(r.k);
        e["R"] = r.R;
        e["conjectured"] = conj_string(r, digits);
        if (r.has_data) {
            e["data"] = format_complex_double(r.data, std::min(digits, 12));
            e["rel_error"] = format_complex_double(r.relative_error, 6);
        } else {
            e["data"] = nullptr;
            e["rel_error"] = nullptr;
        }
        arr.push_back(e);
    }
    j["rows"] = arr;
    return j.dump(2) + "\n";
}

std::string figure_data_csv(const std::vector<IntervalResult>& rows) {
    std::ostringstream os;
    os << "k,n,rel_error\n";
    for (const IntervalResult& r : rows)
        if (r.has_data) os << k_string(r.k) << ',' << r.n << ',' << format_complex_double(r.relative_error, 6) << '\n';
    return os.str();
}

}  // namespace zm
