#include "zetamoments/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "zetamoments/errors.hpp"
#include "zetamoments/primes.hpp"

namespace zm {

namespace {

// Bernoulli numbers are reused across calls; the table only grows.
std::mutex g_bernoulli_mutex;
std::vector<BigRational> g_bernoulli;

std::vector<BigRational> bernoulli_cached(int n) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    if (static_cast<int>(g_bernoulli.size()) <= n) g_bernoulli = bernoulli_even(std::max(n, 2 * static_cast<int>(g_bernoulli.size())));
    return std::vector<BigRational>(g_bernoulli.begin(), g_bernoulli.begin() + n + 1);
}

// log2 of a BigReal magnitude, -inf-ish for zero
long mag2(const BigComplex& z) { return std::max(z.re().exponent2(), z.im().exponent2()); }

double to_d(const BigComplex& z) { return std::hypot(z.re().to_double(), z.im().to_double()); }

mpfr_prec_t work_bits(const PrecisionContext& ctx, int extra_bits) { return ctx.bits() + extra_bits; }

}  // namespace

std::vector<BigRational> bernoulli_even(int n) {
    // Tangent numbers T_1..T_n (Brent-Harvey), then B_{2k} from T_k.
    std::vector<BigRational> out;
    out.emplace_back(1);
    if (n <= 0) return out;
    std::vector<BigInteger> t(static_cast<std::size_t>(n) + 1);
    t[1] = 1;
    for (int k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
    for (int k = 2; k <= n; ++k)
        for (int j = k; j <= n; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    for (int k = 1; k <= n; ++k) {
        BigInteger four_k = BigInteger(1) << (2 * k);
        BigRational b(BigInteger(2 * k) * t[k], four_k * (four_k - 1));
        b.canonicalize();
        if (k % 2 == 0) b = -b;
        out.push_back(b);
    }
    return out;
}

EulerianTable::EulerianTable(int c_max) : c_max_(c_max), rows_(static_cast<std::size_t>(c_max) + 1) {
    if (c_max < 0) throw DomainError("EulerianTable: negative size");
    rows_[0] = {BigInteger(1)};
    auto prev = [this](int c, int l) -> BigInteger {
        if (l < 0 || l >= static_cast<int>(rows_[c].size())) return 0;
        return rows_[c][l];
    };
    for (int c = 1; c <= c_max; ++c) {
        rows_[c].resize(static_cast<std::size_t>(c));
        for (int l = 0; l < c; ++l) rows_[c][l] = (l + 1) * prev(c - 1, l) + (c - l) * prev(c - 1, l - 1);
    }
}

const BigInteger& EulerianTable::operator()(int c, int l) const {
    static const BigInteger zero(0);
    if (c < 0 || c > c_max_) throw DomainError("EulerianTable: row out of range");
    if (c == 0) return l == 0 ? rows_[0][0] : zero;
    if (l < 0 || l >= c) return zero;
    return rows_[c][l];
}

// ------------------------------------------------------------ zeta jets

Jet<BigReal> zeta_jet(const BigReal& s_in, int order, const PrecisionContext& ctx) {
    if (order < 0) throw DomainError("zeta_jet: negative order");
    const int J = order;
    const bool at_pole = (s_in == BigReal(1L, s_in.bits()));
    const double s_d = s_in.to_double();
    if (!at_pole && std::fabs(s_d - 1.0) < 1e-6) throw PoleHit("zeta_jet: too close to s = 1");
    const mpfr_prec_t bits = work_bits(ctx, 32 + static_cast<int>(std::lgamma(J + 1.0) / std::log(2.0)));
    const double eps_log2 = -static_cast<double>(ctx.bits() + 8);

    long N = std::max<long>(16, static_cast<long>(0.6 * ctx.effective_digits()) + J + 10 +
                                    static_cast<long>(std::fabs(s_d)));
    for (int attempt = 0; attempt < 8; ++attempt, N *= 2) {
        BigReal s0(s_in, bits);
        Jet<BigReal> acc(J, bits);
        for (long n = 1; n < N; ++n) {
            BigReal ln = log(BigReal(n, bits));
            BigReal c = exp(-(s0 * ln));
            acc[0] += c;
            BigReal mln = -ln;
            for (int j = 1; j <= J; ++j) {
                c *= mln;
                c /= j;
                acc[j] += c;
            }
        }
        BigReal lnN = log(BigReal(N, bits));
        Jet<BigReal> E1 = jet_exp_linear(BigReal(-lnN), J + 1, bits);
        Jet<BigReal> E(std::vector<BigReal>(E1.coefficients().begin(), E1.coefficients().end() - 1));
        BigReal NS = exp(-(s0 * lnN));
        // integral of x^-s over [N, inf)
        if (at_pole) {
            for (int j = 0; j <= J; ++j) acc[j] += E1[j + 1];
        } else {
            BigReal sm1 = s0 - 1L;
            Jet<BigReal> g(J, bits);
            BigReal inv = 1L / sm1;
            BigReal p = inv;
            for (int j = 0; j <= J; ++j) {
                g[j] = (j % 2 == 0) ? p : -p;
                p *= inv;
            }
            Jet<BigReal> integral = E * g;
            BigReal NNS = NS * N;
            for (int j = 0; j <= J; ++j) acc[j] += integral[j] * NNS;
        }
        // N^-s / 2 + Bernoulli corrections, all sharing the factor N^-s E(h)
        Jet<BigReal> K(J, bits);
        K[0] = BigReal(1L, bits) / 2L;
        Jet<BigReal> R(J, bits);
        R[0] = s0;
        if (J >= 1) R[1] = BigReal(1L, bits);
        BigReal Npow = BigReal(1L, bits) / N;  // N^(1-2i)
        BigReal N2 = BigReal(N, bits) * N;
        double logfac = std::log2(1.0 + lnN.to_double()) * J;
        int max_i = static_cast<int>(3 * N);
        std::vector<BigRational> B = bernoulli_cached(max_i + 1);
        bool converged = false;
        double prev = 1e300;
        BigRational fact = 2;  // (2i)!
        for (int i = 1; i <= max_i; ++i) {
            if (i > 1) {
                R.mul_linear(s0 + (2L * i - 3));
                R.mul_linear(s0 + (2L * i - 2));
                fact *= BigRational((2 * i - 1) * (2 * i));
            }
            BigReal ci = BigReal(BigRational(B[i] / fact), bits) * Npow;
            double worst = -1e300;
            BigReal jf(1L, bits);
            for (int j = 0; j <= J; ++j) {
                if (j > 0) jf *= j;
                BigReal term = ci * R[j];
                K[j] += term;
                BigReal scaled = abs(term * jf * NS);
                if (!scaled.is_zero()) worst = std::max(worst, static_cast<double>(scaled.exponent2()));
            }
            worst += logfac;
            if (worst < eps_log2) {
                converged = true;
                break;
            }
            if (i > 3 && worst > prev) break;
            prev = worst;
            Npow /= N2;
        }
        if (!converged) continue;
        Jet<BigReal> corr = E * K;
        for (int j = 0; j <= J; ++j) {
            acc[j] += corr[j] * NS;
            acc[j].set_bits(ctx.bits());
        }
        return acc;
    }
    throw NoConvergence("zeta_jet: Euler-Maclaurin summation did not converge");
}

Jet<BigReal> log_zeta_jet(const BigReal& s, int order, const PrecisionContext& ctx) {
    if (s <= BigReal(1L, s.bits())) throw DomainError("log_zeta_jet: requires s > 1");
    PrecisionContext wide = ctx.widened(5);
    Jet<BigReal> z = zeta_jet(s, order, wide);
    return jet_log(z);
}

BigReal log_zeta_derivative(int r, const BigReal& s, const PrecisionContext& ctx) {
    if (r < 0) throw DomainError("log_zeta_derivative: negative order");
    Jet<BigReal> lj = log_zeta_jet(s, r, ctx);
    BigReal v = lj[r];
    for (int j = 2; j <= r; ++j) v *= j;
    v.set_bits(ctx.bits());
    return v;
}

std::vector<BigReal> stieltjes(int n_max, const PrecisionContext& ctx) {
    if (n_max < 0 || n_max > 80) throw DomainError("stieltjes: order out of range 0..80");
    const mpfr_prec_t bits = ctx.bits();
    Jet<BigReal> reg = zeta_jet(BigReal(1L, bits), n_max, ctx.widened(3));
    std::vector<BigReal> out;
    BigReal f(1L, bits);
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) f *= n;
        BigReal g = reg[n] * f;
        if (n % 2 == 1) g = -g;
        g.set_bits(bits);
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

// sum_p log(p)^r p^-s for r = 0..r_max through the Moebius inversion
// sum_p p^-s = sum_m mu(m)/m log zeta(m s).
std::vector<BigReal> prime_zeta_log_all(int r_max, const BigReal& s, const PrecisionContext& ctx) {
    if (r_max < 0) throw DomainError("prime_zeta_log: negative order");
    if (s <= BigReal(1L, s.bits())) throw DomainError("prime_zeta_log: requires s > 1");
    const PrecisionContext wide = ctx.widened(4);
    const mpfr_prec_t bits = wide.bits();
    const double sd = s.to_double();
    const double ln2 = std::log(2.0);
    std::vector<BigReal> sum(static_cast<std::size_t>(r_max) + 1, BigReal(bits));
    std::vector<BigReal> fact(static_cast<std::size_t>(r_max) + 1, BigReal(1L, bits));
    for (int r = 1; r <= r_max; ++r) fact[r] = fact[r - 1] * r;
    const double eps_log2 = -static_cast<double>(bits);
    std::vector<int> mu;
    for (long m = 1;; ++m) {
        if (m >= static_cast<long>(mu.size())) mu = moebius_table(static_cast<std::uint64_t>(2 * m + 64));
        // bound on the remaining terms from log zeta(ms) ~ 2^-ms
        bool done = m > 1;
        for (int r = 0; r <= r_max && done; ++r) {
            double lb = (r - 1) * std::log2(static_cast<double>(m)) + r * std::log2(ln2) - m * sd + 2.0;
            double ls = sum[r].is_zero() ? 0.0 : static_cast<double>(sum[r].exponent2());
            if (lb > ls + eps_log2) done = false;
        }
        if (done) break;
        if (m > 100000) throw NoConvergence("prime_zeta_log: Moebius series did not converge");
        if (mu[m] == 0) continue;
        BigReal ms = BigReal(s, bits) * m;
        Jet<BigReal> lj = log_zeta_jet(ms, r_max, wide);
        BigReal mpow = BigReal(1L, bits) / m;  // m^(r-1)
        for (int r = 0; r <= r_max; ++r) {
            BigReal term = lj[r] * fact[r] * mpow;
            if ((r % 2 == 1) != (mu[m] < 0)) sum[r] -= term;
            else sum[r] += term;
            mpow *= m;
        }
    }
    for (auto& v : sum) v.set_bits(ctx.bits());
    return sum;
}

}  // namespace

BigReal prime_zeta_log(int r, const BigReal& s, const PrecisionContext& ctx) {
    return prime_zeta_log_all(r, s, ctx)[r];
}

std::vector<BigReal> prime_tail_sums(int r_max, long s, std::uint64_t cutoff, const PrecisionContext& ctx) {
    if (s < 2) throw DomainError("prime_tail_sums: exponent must be at least 2");
    // the subtraction below cancels roughly (s-1) log10(cutoff) digits
    int lost = static_cast<int>((s - 1) * std::log10(static_cast<double>(std::max<std::uint64_t>(cutoff, 2)))) + 4;
    PrecisionContext wide = ctx.widened(lost);
    const mpfr_prec_t bits = wide.bits();
    std::vector<BigReal> total = prime_zeta_log_all(r_max, BigReal(s, bits), wide);
    for (std::uint32_t p : primes_up_to(cutoff)) {
        BigReal lp = log(BigReal(static_cast<long>(p), bits));
        BigReal term = pow(BigReal(static_cast<long>(p), bits), -s);
        for (int r = 0; r <= r_max; ++r) {
            total[r] -= term;
            term *= lp;
        }
    }
    for (auto& v : total) v.set_bits(ctx.bits());
    return total;
}

// ------------------------------------------------------------ hypergeometric

BigComplex gauss_2f1(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigReal& x,
                     const PrecisionContext& ctx) {
    if (x.sign() < 0 || x >= BigReal(1L, x.bits())) throw DomainError("gauss_2f1: requires 0 <= x < 1");
    const mpfr_prec_t bits = work_bits(ctx, 16);
    const bool c_int = c.is_real() && c.re().is_integer();
    const long cl = c_int ? c.re().to_long() : 0;
    if (c_int && cl <= 0) throw PoleHit("gauss_2f1: c is a non-positive integer");
    BigComplex sum(1L, bits);
    if (x.is_zero()) return sum;
    BigComplex term(1L, bits);
    BigReal xb(x, bits);
    const double ad = to_d(a), bd = to_d(b), cd = to_d(c), xd = x.to_double();
    const long n_safe = static_cast<long>(2.0 * (ad + bd + cd)) + 4;
    const long eps_log2 = -static_cast<long>(ctx.bits()) - 6;
    const bool ab_real = a.is_real() && b.is_real();
    BigReal ar(a.re(), bits), br(b.re(), bits);
    for (long n = 0; n < 2000000; ++n) {
        if (ab_real) {
            BigReal num = (ar + n) * (br + n);
            term *= num;
        } else {
            term *= (a + n) * (b + n);
        }
        if (c_int) {
            term /= (cl + n);
            term /= (n + 1);
        } else {
            term /= (c + n) * BigComplex(n + 1, bits);
        }
        term *= xb;
        sum += term;
        if (term.is_zero()) return sum;
        if (n >= n_safe) {
            double m = static_cast<double>(n + 1);
            double rho = std::hypot(a.re().to_double() + m, a.im().to_double()) *
                         std::hypot(b.re().to_double() + m, b.im().to_double()) /
                         (std::hypot(c.re().to_double() + m, c.im().to_double()) * (m + 1.0)) * xd;
            if (rho < 1.0) {
                double tail = std::log2(rho / (1.0 - rho));
                if (static_cast<double>(mag2(term)) + tail < static_cast<double>(mag2(sum) + eps_log2)) return sum;
            }
        }
    }
    throw NoConvergence("gauss_2f1: series did not converge");
}

BigComplex theta_integral(const BigComplex& A_in, const BigComplex& B_in, long C, const BigReal& t,
                          const PrecisionContext& ctx) {
    if (t.sign() <= 0 || t >= BigReal(1L, t.bits())) throw DomainError("theta_integral: requires 0 < t < 1");
    BigComplex A = A_in, B = B_in;
    if (C < 0) {
        std::swap(A, B);
        C = -C;
    }
    const mpfr_prec_t bits = work_bits(ctx, 8);
    // binom(B + C - 1, C) = (B)_C / C!
    BigComplex binom(1L, bits);
    for (long i = 0; i < C; ++i) {
        binom *= B + i;
        binom /= (i + 1);
    }
    BigReal tc = pow(sqrt(BigReal(t, bits)), C);
    BigComplex f = gauss_2f1(A, B + C, BigComplex(C + 1, bits), t, ctx);
    BigComplex r = f * binom * tc;
    r.set_bits(ctx.bits());
    return r;
}

// ------------------------------------------------------------ complex zeta

BigComplex zeta_complex(const BigComplex& s, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = work_bits(ctx, 24);
    BigComplex sb = s;
    sb.set_bits(bits);
    BigComplex sm1 = sb - BigComplex(1L, bits);
    if (abs(sm1).to_double() < 1e-30) throw PoleHit("zeta_complex: s = 1");
    const double abs_s = to_d(s);
    long N = static_cast<long>(abs_s / M_PI) + static_cast<long>(0.5 * ctx.effective_digits()) + 10;
    const long eps_log2 = -static_cast<long>(ctx.bits()) - 6;
    for (int attempt = 0; attempt < 6; ++attempt, N *= 2) {
        BigComplex sum(bits);
        for (long n = 1; n < N; ++n) sum += exp(-(sb * log(BigReal(n, bits))));
        BigReal lnN = log(BigReal(N, bits));
        BigComplex NS = exp(-(sb * lnN));  // N^-s
        sum += NS * BigReal(N, bits) / sm1;
        sum += NS / 2L;
        int max_i = static_cast<int>(3 * N);
        std::vector<BigRational> B = bernoulli_cached(max_i + 1);
        BigComplex rising = sb;  // (s)_{2i-1}
        BigComplex Npow = NS / BigReal(N, bits);
        BigReal N2 = BigReal(N, bits) * N;
        BigRational fact = 2;
        bool converged = false;
        long prev = 1L << 40;
        for (int i = 1; i <= max_i; ++i) {
            if (i > 1) {
                rising *= sb + (2L * i - 3);
                rising *= sb + (2L * i - 2);
                fact *= BigRational((2 * i - 1) * (2 * i));
                Npow /= N2;
            }
            BigComplex term = rising * Npow * BigReal(BigRational(B[i] / fact), bits);
            sum += term;
            long m = mag2(term);
            if (m < mag2(sum) + eps_log2) {
                converged = true;
                break;
            }
            if (i > 3 && m > prev) break;
            prev = m;
        }
        if (!converged) continue;
        sum.set_bits(ctx.bits());
        return sum;
    }
    throw NoConvergence("zeta_complex: Euler-Maclaurin summation did not converge");
}

BigComplex zeta_critical_line(const BigReal& t, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = work_bits(ctx, 8);
    BigComplex s(BigReal(1L, bits) / 2L, BigReal(t, bits));
    return zeta_complex(s, ctx);
}

namespace {

const std::vector<double>& em_coefficients() {
    static const std::vector<double> coeff = [] {
        std::vector<BigRational> B = bernoulli_even(40);
        std::vector<double> c(41, 0.0);
        BigRational fact = 1;
        for (int i = 1; i <= 40; ++i) {
            fact *= BigRational((2 * i - 1) * (2 * i));
            BigRational q = B[i] / fact;
            c[i] = q.get_d();
        }
        return c;
    }();
    return coeff;
}

long em_terms(double t) { return std::max<long>(12, static_cast<long>(std::fabs(t) / M_PI) + 12); }

}  // namespace

CriticalLineZeta::CriticalLineZeta(double t_max) {
    const long n = em_terms(t_max) + 1;
    log_.resize(n);
    rsqrt_.resize(n);
    for (long i = 1; i < n; ++i) {
        log_[i] = std::log(static_cast<double>(i));
        rsqrt_[i] = 1.0 / std::sqrt(static_cast<double>(i));
    }
    (void)em_coefficients();
}

// em_terms(t) must index the table: floor(t / pi) + 12 < size.
double CriticalLineZeta::t_max() const { return M_PI * static_cast<double>(static_cast<long>(log_.size()) - 12) * (1 - 1e-15); }

std::complex<double> CriticalLineZeta::operator()(double t) const {
    const std::vector<double>& coeff = em_coefficients();
    const std::complex<double> s(0.5, t);
    const long N = em_terms(t);
    if (!(std::fabs(t) <= t_max())) throw DomainError("CriticalLineZeta: t = " + std::to_string(t) + " beyond the table");
    double re = 0, im = 0;
    for (long n = 1; n < N; ++n) {
        const double a = t * log_[n];
        re += rsqrt_[n] * std::cos(a);
        im -= rsqrt_[n] * std::sin(a);
    }
    std::complex<double> sum(re, im);
    const std::complex<double> NS = std::polar(rsqrt_[N], -t * log_[N]);
    sum += NS * static_cast<double>(N) / (s - 1.0);
    sum += NS * 0.5;
    std::complex<double> rising = s;
    std::complex<double> Npow = NS / static_cast<double>(N);
    const double N2 = static_cast<double>(N) * static_cast<double>(N);
    for (int i = 1; i <= 40; ++i) {
        if (i > 1) {
            rising *= (s + static_cast<double>(2 * i - 3)) * (s + static_cast<double>(2 * i - 2));
            Npow /= N2;
        }
        std::complex<double> term = rising * Npow * coeff[i];
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

double CriticalLineZeta::hardy_z(double t) const {
    const std::complex<double> z = (*this)(t);
    const double th = riemann_siegel_theta(t);
    return std::cos(th) * z.real() - std::sin(th) * z.imag();
}

double riemann_siegel_theta(double t) {
    if (t < 10) throw DomainError("riemann_siegel_theta: asymptotic series needs t >= 10");
    const double inv = 1.0 / t, inv2 = inv * inv;
    // Stirling series of arg Gamma(1/4 + it/2)
    const double tail = inv * (1.0 / 48 + inv2 * (7.0 / 5760 + inv2 * (31.0 / 80640 + inv2 * (127.0 / 430080))));
    return t / 2 * std::log(t / (2 * M_PI)) - t / 2 - M_PI / 8 + tail;
}

std::complex<double> zeta_critical_line_fast(double t) { return CriticalLineZeta(std::fabs(t))(t); }

// ------------------------------------------------------------ gamma and Barnes G

BigComplex log_gamma(const BigComplex& z, const PrecisionContext& ctx) {
    if (z.re().sign() <= 0) throw DomainError("log_gamma: requires Re z > 0");
    const mpfr_prec_t bits = work_bits(ctx, 24);
    const double w0 = 0.8 * ctx.effective_digits() + 10.0;
    long N = std::max<long>(0, static_cast<long>(std::ceil(w0 - z.re().to_double())));
    BigComplex zb = z;
    zb.set_bits(bits);
    BigComplex w = zb + N;
    BigComplex lw = log(w);
    BigReal half(BigReal(1L, bits) / 2L);
    BigComplex res = (w - BigComplex(half)) * lw - w;
    res += BigComplex(log(BigReal::pi(bits) * 2L) / 2L);
    BigComplex winv = BigComplex(1L, bits) / w;
    BigComplex w2inv = winv * winv;
    BigComplex wp = winv;  // w^-(2n-1)
    std::vector<BigRational> B = bernoulli_cached(200);
    const long eps_log2 = -static_cast<long>(ctx.bits()) - 6;
    bool converged = false;
    for (int n = 1; n <= 200; ++n) {
        BigComplex term = wp * BigReal(BigRational(B[n] / BigRational(2L * n * (2L * n - 1))), bits);
        res += term;
        if (mag2(term) < mag2(res) + eps_log2) {
            converged = true;
            break;
        }
        wp *= w2inv;
    }
    if (!converged) throw NoConvergence("log_gamma: Stirling series did not converge");
    for (long j = 0; j < N; ++j) res -= log(zb + j);
    res.set_bits(ctx.bits());
    return res;
}

BigReal zeta_prime_minus_one(const PrecisionContext& ctx) {
    const PrecisionContext wide = ctx.widened(4);
    const mpfr_prec_t bits = wide.bits();
    Jet<BigReal> z2 = zeta_jet(BigReal(2L, bits), 1, wide);
    BigReal pi = BigReal::pi(bits);
    BigReal lnA = (BigReal::euler_gamma(bits) + log(pi * 2L)) / 12L - z2[1] / (pi * pi * 2L);
    BigReal r = BigReal(1L, bits) / 12L - lnA;
    r.set_bits(ctx.bits());
    return r;
}

BigComplex log_barnes_g(const BigComplex& z, const PrecisionContext& ctx) {
    if (z.re().sign() <= 0) throw DomainError("log_barnes_g: requires Re z > 0");
    const PrecisionContext wide = ctx.widened(8);
    const mpfr_prec_t bits = wide.bits();
    const double w0 = 0.8 * ctx.effective_digits() + 10.0;
    long N = std::max<long>(0, static_cast<long>(std::ceil(w0 - z.re().to_double())));
    BigComplex zb = z;
    zb.set_bits(bits);
    // log G(1 + x) asymptotics with x = z + N - 1
    BigComplex x = zb + (N - 1);
    BigComplex lx = log(x);
    BigComplex x2 = x * x;
    BigComplex res = x2 * lx / 2L - x2 * BigReal(3L, bits) / 4L;
    res += x * (log(BigReal::pi(bits) * 2L) / 2L);
    res -= lx / 12L;
    res += BigComplex(zeta_prime_minus_one(wide));
    BigComplex x2inv = BigComplex(1L, bits) / x2;
    BigComplex xp = x2inv;
    std::vector<BigRational> B = bernoulli_cached(202);
    const long eps_log2 = -static_cast<long>(ctx.bits()) - 6;
    bool converged = false;
    for (int n = 1; n <= 200; ++n) {
        BigComplex term = xp * BigReal(BigRational(B[n + 1] / BigRational(4L * n * (n + 1))), bits);
        res += term;
        if (mag2(term) < mag2(res) + eps_log2) {
            converged = true;
            break;
        }
        xp *= x2inv;
    }
    if (!converged) throw NoConvergence("log_barnes_g: asymptotic series did not converge");
    if (N > 0) {
        // G(z + N) = G(z) prod_{j<N} Gamma(z + j),  Gamma(z + j) = Gamma(z) (z)_j
        BigComplex lg = log_gamma(zb, wide);
        res -= lg * N;
        BigComplex prod(1L, bits);
        for (long i = 0; i + 2 <= N; ++i) prod *= pow(zb + i, N - 1 - i);
        res -= log(prod);
    }
    res.set_bits(ctx.bits());
    return res;
}

}  // namespace zm
