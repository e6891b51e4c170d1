#include "zetamoments/method2.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <numeric>
#include <string>

#include "zetamoments/determinants.hpp"
#include "zetamoments/errors.hpp"
#include "zetamoments/primes.hpp"
#include "zetamoments/shapes.hpp"
#include "zetamoments/special_functions.hpp"

namespace zm {

std::vector<std::vector<int>> xi_permutations(int k) {
    if (k < 1 || k > 9) throw DomainError("xi_permutations: k must lie in 1..9");
    const int n = 2 * k;
    std::vector<std::vector<int>> out;
    std::vector<char> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    // prev_permutation on a 1..10..0 mask walks the subsets lexicographically
    do {
        std::vector<int> sigma;
        sigma.reserve(n);
        for (int i = 0; i < n; ++i)
            if (pick[i]) sigma.push_back(i + 1);
        for (int i = 0; i < n; ++i)
            if (!pick[i]) sigma.push_back(i + 1);
        out.push_back(std::move(sigma));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

std::vector<BigComplex> ShiftScheme::shifts() const {
    std::vector<BigComplex> out;
    for (int j = 1; j <= 2 * k; ++j) out.push_back(epsilon * static_cast<long>(j));
    return out;
}

ShiftScheme default_scheme(int k, int D, mpfr_prec_t bits) {
    const BigReal mag = pow(BigReal(10L, bits), -D);
    const BigReal angle = BigReal::pi(bits) / 7L;
    return {polar(mag, angle), k};
}

namespace {

// Taylor coefficients of log((1-t)^{k^2} 2F1(k,k;1;t)) in double. Their
// absolute values bound the summed coefficient size of each degree of the
// large-prime expansion.
std::vector<double> degree_sizes(int k, int d_max) {
    std::vector<double> f(d_max + 1), l(d_max + 1, 0.0);
    f[0] = 1;
    for (int n = 1; n <= d_max; ++n) f[n] = f[n - 1] * (k + n - 1.0) * (k + n - 1.0) / (double(n) * n);
    // log f via n l_n = n f_n - sum_{j<n} j l_j f_{n-j}
    for (int n = 1; n <= d_max; ++n) {
        double s = n * f[n];
        for (int j = 1; j < n; ++j) s -= j * l[j] * f[n - j];
        l[n] = s / n;
    }
    for (int n = 1; n <= d_max; ++n) l[n] -= double(k) * k / n;  // log (1-t)^{k^2}
    for (auto& v : l) v = std::fabs(v);
    return l;
}

// Smallest degree whose dropped remainder is below 10^-(D+2). When the
// values feed the combinatorial sum, the Taylor coefficients up to degree
// m_top matter and not only the value at the point.
int choose_tail_degree(int k, int D, std::uint64_t cutoff, int m_top) {
    const double L = std::log(static_cast<double>(cutoff));
    const auto S = degree_sizes(k, 40);
    for (int d = 2; d < 39; ++d) {
        // Taylor coefficients of degree m of the dropped terms carry ((d+1) log p)^m / m!
        double blow = 0;
        for (int m = 0; m <= m_top; ++m) blow = std::max(blow, m * std::log10((d + 1) * L) - std::lgamma(m + 1.0) / std::log(10.0));
        // some k have vanishing odd degrees, so look two degrees ahead
        const double next = std::max(S[d + 1], S[d + 2] / double(cutoff));
        const double lg = std::log10(next + 1e-300) - d * std::log10(double(cutoff)) - std::log10(d * L) + blow;
        if (lg < -(D + 2)) return d;
    }
    throw PrecisionExceeded("no tail degree reaches " + std::to_string(D) + " digits at cutoff " +
                            std::to_string(cutoff));
}

// log10 |z| without overflowing a double.
double log10_abs(const BigComplex& z) {
    const BigReal a = abs(z);
    if (a.is_zero()) return -1e300;
    long e = 0;
    const double m = mpfr_get_d_2exp(&e, a.raw(), MPFR_RNDN);
    return std::log10(m) + e * std::log10(2.0);
}

// Digits the prime sums of degree d need: the degree contributes about
// S_d cutoff^(1-d) to log A_k, amplified in its Taylor coefficients.
int digits_for_degree(int k, int d, std::uint64_t cutoff, int digits) {
    const double L = std::log(static_cast<double>(cutoff));
    const double S = degree_sizes(k, d)[d];
    double blow = 0;
    for (int m = 0; m <= k * k; ++m) blow = std::max(blow, m * std::log10(d * L) - std::lgamma(m + 1.0) / std::log(10.0));
    const double size = std::log10(S + 1e-300) - (d - 1) * std::log10(double(cutoff)) + blow;
    return std::clamp(digits + static_cast<int>(std::ceil(size)) + 5, 20, digits);
}

// sum_{p > cutoff} log^r p / p^d for r = 0..r_top to the given digits.
// High degrees converge fast enough to sum directly, which avoids the
// cancellation in subtracting the small primes from the full prime sum.
std::vector<BigReal> tail_sums(int r_top, int d, std::uint64_t cutoff, int digits) {
    const PrecisionContext ctx(digits);
    const double L = std::log(static_cast<double>(cutoff));
    // stop where (Q/P)^(1-d) (log Q / log P)^r_top is below 10^-digits
    double ratio = 2;
    while ((1 - d) * std::log10(ratio) + r_top * std::log10(1 + std::log(ratio) / L) > -(digits + 3)) ratio *= 1.5;
    const double top = ratio * static_cast<double>(cutoff);
    if (top > 4e6) return prime_tail_sums(r_top, d, cutoff, ctx);
    const mpfr_prec_t bits = ctx.bits();
    std::vector<BigReal> out(r_top + 1, BigReal(bits));
    for (std::uint32_t p : primes_up_to(static_cast<std::uint64_t>(top))) {
        if (p <= cutoff) continue;
        const BigReal pb(static_cast<long>(p), bits);
        const BigReal lp = log(pb);
        BigReal term = pow(pb, -d);
        for (int r = 0; r <= r_top; ++r) {
            out[r] += term;
            term *= lp;
        }
    }
    return out;
}

// Equal to within 10 units in the last place.
bool coincident(const BigComplex& a, const BigComplex& b) {
    const BigReal gap = abs(a - b);
    const BigReal size = max_abs(abs(a), abs(b));
    if (size.is_zero()) return true;
    return gap <= ldexp(size, 4 - static_cast<long>(a.bits()));
}

// e^w - 1 accurate for small w.
BigComplex expm1_complex(const BigComplex& w) {
    const BigReal& a = w.re();
    const BigReal& b = w.im();
    const BigReal sh = sin(b / 2L);
    BigReal re = expm1(a) * cos(b) - sh * sh * 2L;
    BigReal im = exp(a) * sin(b);
    return {re, im};
}

double abs_double(const BigComplex& z) {
    const double re = z.re().to_double(), im = z.im().to_double();
    return std::hypot(re, im);
}

// Coefficients of log of the local factor for primes above the cutoff,
// as monomials u^a w^b of degree d = |a| = |b| (exponents stored flat,
// 2k per monomial) pointing at a coefficient per shape class.
struct TailExpansion {
    std::vector<int> mono_d, mono_cls, mono_exp;
    std::vector<BigReal> cls_coef;
};

std::shared_ptr<const TailExpansion> build_expansion(int k, int dmax, int digits) {
    auto out = std::make_shared<TailExpansion>();
    const mpfr_prec_t lb = PrecisionContext(digits).bits();
    auto basis = shape_basis(2 * dmax, k, true);
    // sum_n h_n(u) h_n(w) has every balanced coefficient equal to one
    SymmetricSeries F(basis, lb);
    for (std::size_t i = 0; i < basis->size(); ++i) F[i] = BigComplex(1L, lb);
    SymmetricSeries G = series_log(F);
    for (std::size_t i = 1; i < basis->size(); ++i) {
        const ExponentShape& s = basis->shape(i);
        const int d = part_sum(s.alpha);
        BigReal c = G[i].re();
        // log prod (1 - u_i w_j)
        if (s.alpha.size() == 1 && s.alpha == s.beta) c -= BigReal(1L, lb) / static_cast<long>(s.alpha[0]);
        if (d == 1) {
            if (std::fabs(c.to_double()) > 1e-20) throw ComputationError("degree one term of the local factor");
            continue;
        }
        if (c.is_zero()) continue;
        const int cls = static_cast<int>(out->cls_coef.size());
        out->cls_coef.push_back(c);
        auto add = [&](const Partition& top, const Partition& bottom) {
            auto as = rearrangements(top, k, false);
            auto bs = rearrangements(bottom, k, false);
            for (const auto& a : as)
                for (const auto& b : bs) {
                    out->mono_d.push_back(d);
                    out->mono_cls.push_back(cls);
                    out->mono_exp.insert(out->mono_exp.end(), a.begin(), a.end());
                    out->mono_exp.insert(out->mono_exp.end(), b.begin(), b.end());
                }
        };
        add(s.alpha, s.beta);
        if (s.alpha != s.beta) add(s.beta, s.alpha);
    }
    return out;
}

std::mutex cache_mutex;

std::shared_ptr<const TailExpansion> tail_expansion(int k, int dmax, int digits) {
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const TailExpansion>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& slot = cache[{k, dmax, digits}];
    if (!slot) slot = build_expansion(k, dmax, digits);
    return slot;
}

std::vector<BigReal> cached_tail_sums(int r_top, int d, std::uint64_t cutoff, int digits) {
    static std::map<std::tuple<int, std::uint64_t, int>, std::vector<BigReal>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& slot = cache[{d, cutoff, digits}];
    if (static_cast<int>(slot.size()) <= r_top) slot = tail_sums(r_top, d, cutoff, digits);
    return {slot.begin(), slot.begin() + r_top + 1};
}

}  // namespace

struct ShiftEvaluator::Impl {
    int k;
    std::vector<BigComplex> z;
    mpfr_prec_t bits;
    int work_digits;
    std::uint64_t cutoff;
    int dmax = 0;
    bool scheme = false;  // z[a] = (a + 1) z[0]

    int target_digits;
    std::shared_ptr<const TailExpansion> expansion;
    std::vector<std::vector<BigReal>> T;  // T[d][r] = sum_{p > cutoff} log^r p / p^d
    mutable std::map<std::pair<int, std::vector<int>>, BigComplex> gmemo;

    int lo_digits;
    mutable std::vector<BigReal> gam;
    mutable std::map<std::pair<int, int>, BigComplex> zmemo;

    Impl(int k_, std::vector<BigComplex> labels, const Method2Options& opt, int D, const PrecisionContext& ctx)
        : k(k_), z(std::move(labels)), bits(ctx.bits()), work_digits(bits_to_digits(ctx.bits())),
          cutoff(opt.prime_cutoff), target_digits(D) {
        if (k < 1) throw DomainError("shift evaluation needs k >= 1");
        if (static_cast<int>(z.size()) != 2 * k) throw DomainError("shift evaluation needs 2k labels");
        if (cutoff < 100) throw DomainError("prime cutoff must be at least 100");
        for (auto& v : z) v.set_bits(bits);
        scheme = true;
        for (int a = 1; a < 2 * k && scheme; ++a) {
            BigComplex m = z[0] * static_cast<long>(a + 1);
            scheme = m.re() == z[a].re() && m.im() == z[a].im();
        }
        lo_digits = opt.constant_digits > 0 ? opt.constant_digits : D + 20;
        const PrecisionContext lo(lo_digits);
        dmax = opt.tail_degree > 0 ? opt.tail_degree : choose_tail_degree(k, D, cutoff, k * k);
        if (dmax >= 2) build_tail(lo);
    }

    void build_tail(const PrecisionContext& lo) {
        expansion = tail_expansion(k, dmax, lo.decimal_digits);
        double zmax = 0;
        for (const auto& v : z) zmax = std::max(zmax, abs_double(v));
        // |w| <= 2 d zmax must stay well inside the radius d - 1 of the
        // expansion of p^-w against the prime sums
        if (zmax >= 0.2) throw DomainError("shifts are too large for the large-prime expansion");
        const double L = std::log(static_cast<double>(cutoff));
        T.assign(dmax + 1, {});
        for (int d = 2; d <= dmax; ++d) {
            const double w = 2.0 * d * zmax;
            // Powers of w above k^2 only reach the combinatorial sum at
            // relative order epsilon, so k^2 + 2 of them are always kept;
            // more when the value itself needs them.
            int r_top = k * k + 2;
            if (w > 0) {
                for (int r = 1;; ++r) {
                    if (r > 400) throw DomainError("shifts are too large for the large-prime expansion");
                    // log^r p / p^d summed over p > cutoff is at most about max(L, r/(d-1))^r times the r = 0 sum
                    const double lg = r * std::log10(w * std::max(L, r / (d - 1.0))) - std::lgamma(r + 1.0) / std::log(10.0);
                    if (lg < -(target_digits + 5)) {
                        r_top = std::max(r_top, r);
                        break;
                    }
                }
            }
            T[d] = cached_tail_sums(r_top, d, cutoff, digits_for_degree(k, d, cutoff, lo.decimal_digits));
        }
    }

    // sum_{p > cutoff} p^{-d-w}, w = sum_a c_a z_a
    const BigComplex& tail_value(int d, const std::vector<int>& key) const {
        auto it = gmemo.find({d, key});
        if (it != gmemo.end()) return it->second;
        BigComplex w(bits);
        if (scheme) {
            w = z[0] * static_cast<long>(key[0]);
        } else {
            for (int a = 0; a < 2 * k; ++a)
                if (key[a]) w += z[a] * static_cast<long>(key[a]);
        }
        const BigComplex mw = -w;
        BigComplex sum(bits), pw(1L, bits);
        for (std::size_t r = 0; r < T[d].size(); ++r) {
            sum += pw * BigReal(T[d][r], bits);
            pw *= mw;
            pw /= static_cast<long>(r + 1);
            if (pw.is_zero()) break;
        }
        return gmemo.emplace(std::make_pair(d, key), std::move(sum)).first->second;
    }

    BigComplex tail_log(const std::vector<int>& sigma) const {
        BigComplex total(bits);
        if (!expansion || expansion->mono_d.empty()) return total;
        const auto& mono_d = expansion->mono_d;
        const auto& mono_exp = expansion->mono_exp;
        const auto& mono_cls = expansion->mono_cls;
        const auto& cls_coef = expansion->cls_coef;
        const int n = 2 * k;
        // label index of each slot
        std::vector<int> slot(n);
        for (int i = 0; i < n; ++i) slot[i] = sigma[i] - 1;
        // Accumulate at full precision: the sums are then exact, so the
        // expansion stays one fixed polynomial in the shifts across sigma.
        std::map<std::pair<int, std::vector<int>>, BigReal> hist;
        std::vector<int> key(scheme ? 1 : n);
        for (std::size_t m = 0; m < mono_d.size(); ++m) {
            const int* e = &mono_exp[m * n];
            std::fill(key.begin(), key.end(), 0);
            if (scheme) {
                int s = 0;
                for (int i = 0; i < k; ++i) s += e[i] * (slot[i] + 1) - e[k + i] * (slot[k + i] + 1);
                key[0] = s;
            } else {
                for (int i = 0; i < k; ++i) {
                    key[slot[i]] += e[i];
                    key[slot[k + i]] -= e[k + i];
                }
            }
            auto [it, fresh] = hist.try_emplace({mono_d[m], key}, bits);
            it->second += cls_coef[mono_cls[m]];
        }
        for (const auto& [dk, c] : hist) total += tail_value(dk.first, dk.second) * c;
        return total;
    }

    const BigComplex& zeta_at(int a, int b) const {
        auto it = zmemo.find({a, b});
        if (it != zmemo.end()) return it->second;
        const BigComplex s = z[a] - z[b];
        const double as = abs_double(s);
        if (as == 0) throw PoleHit("zeta(1) in the shift product");
        BigComplex val(bits);
        bool done = false;
        if (as < 1e-3) {
            // Laurent series 1/s + sum (-1)^n gamma_n s^n / n!
            const double need = work_digits + 2 - std::log10(as);
            const int n_top = static_cast<int>(std::ceil(need / -std::log10(as))) + 1;
            if (n_top <= 80) {
                if (static_cast<int>(gam.size()) <= n_top)
                    gam = stieltjes(std::max(n_top, 30), PrecisionContext(lo_digits));
                val = BigComplex(1L, bits) / s;
                BigComplex pw(1L, bits);
                for (int n = 0; n <= n_top; ++n) {
                    BigComplex term = pw * BigReal(gam[n], bits);
                    if (n % 2) val -= term;
                    else val += term;
                    pw *= s;
                    pw /= static_cast<long>(n + 1);
                }
                done = true;
            }
        }
        if (!done) val = zeta_complex(BigComplex(1L, bits) + s, PrecisionContext(work_digits, 5));
        return zmemo.emplace(std::make_pair(a, b), std::move(val)).first->second;
    }
};

ShiftEvaluator::ShiftEvaluator(int k, std::vector<BigComplex> labels, const Method2Options& opt, int target_digits,
                               const PrecisionContext& ctx)
    : impl_(std::make_unique<Impl>(k, std::move(labels), opt, target_digits, ctx)) {}

ShiftEvaluator::~ShiftEvaluator() = default;

int ShiftEvaluator::k() const { return impl_->k; }
int ShiftEvaluator::tail_degree() const { return impl_->dmax; }

std::vector<BigComplex> ShiftEvaluator::ak(const std::vector<std::vector<int>>& sigmas) const {
    const Impl& m = *impl_;
    const int k = m.k, n = 2 * k;
    const mpfr_prec_t bits = m.bits;
    for (const auto& s : sigmas) {
        std::vector<int> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> ident(n);
        std::iota(ident.begin(), ident.end(), 1);
        if (sorted != ident) throw DomainError("ak: argument is not a permutation of 1..2k");
        for (int i = k; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coincident(m.z[s[i] - 1], m.z[s[j] - 1]))
                    throw CoincidentShifts("ak: the last k shifts must be distinct");
    }
    std::vector<BigComplex> acc(sigmas.size(), BigComplex(1L, bits));
    // E[x][y] = p^(z_x - z_y) - 1, formed without cancellation so that the
    // removable poles 1 / (1 - p^(z_x - z_y)) keep full relative accuracy
    std::vector<std::vector<BigComplex>> E(n, std::vector<BigComplex>(n, BigComplex(bits)));
    std::vector<std::vector<BigComplex>> R1 = E, R0 = E;
    std::vector<BigComplex> step(2 * n, BigComplex(bits));
    std::vector<BigComplex> N(k, BigComplex(bits)), pre(k + 1, BigComplex(bits)), suf(k + 1, BigComplex(bits));
    const BigComplex one(1L, bits);
    std::vector<BigComplex> diff;
    if (!m.scheme)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) diff.push_back(m.z[x] - m.z[y]);
    for (std::uint32_t p : primes_up_to(m.cutoff)) {
        const BigReal L = log(BigReal(static_cast<long>(p), bits));
        const BigReal invp = BigReal(1L, bits) / static_cast<long>(p);
        if (m.scheme) {
            // z_x - z_y = (x - y) z_0; (1+e)^j - 1 = (1+e)((1+e)^(j-1) - 1) + e
            const BigComplex e1 = expm1_complex(m.z[0] * L);
            step[n] = BigComplex(bits);
            step[n + 1] = e1;
            for (int j = 2; j < n; ++j) step[n + j] = (one + e1) * step[n + j - 1] + e1;
            for (int j = 1; j < n; ++j) step[n - j] = -step[n + j] / (one + step[n + j]);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) E[x][y] = step[n + x - y];
        } else {
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) E[x][y] = x == y ? BigComplex(bits) : expm1_complex(diff[x * n + y] * L);
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                R0[x][y] = -E[x][y];
                R1[x][y] = one - (one + E[x][y]) * invp;
            }
        for (std::size_t si = 0; si < sigmas.size(); ++si) {
            const auto& s = sigmas[si];
            for (int i = 0; i < k; ++i) {
                const int b = s[k + i] - 1;
                N[i] = R1[b][s[0] - 1];
                for (int a = 1; a < k; ++a) N[i] *= R1[b][s[a] - 1];
            }
            pre[0] = one;
            for (int i = 0; i < k; ++i) pre[i + 1] = pre[i] * N[i];
            suf[k] = one;
            for (int i = k; i-- > 0;) suf[i] = suf[i + 1] * N[i];
            BigComplex local(bits);
            for (int j = 0; j < k; ++j) {
                BigComplex den = one;
                for (int i = 0; i < k; ++i)
                    if (i != j) den *= R0[s[k + i] - 1][s[k + j] - 1];
                local += pre[j] * suf[j + 1] / den;
            }
            acc[si] *= local;
        }
    }
    for (std::size_t si = 0; si < sigmas.size(); ++si) acc[si] *= exp(m.tail_log(sigmas[si]));
    return acc;
}

BigComplex ShiftEvaluator::zeta_product(const std::vector<int>& sigma) const {
    const int k = impl_->k;
    BigComplex out(1L, impl_->bits);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out *= impl_->zeta_at(sigma[i] - 1, sigma[k + j] - 1);
    return out;
}

BigComplex ShiftEvaluator::shift_sum(const std::vector<int>& sigma) const {
    const int k = impl_->k;
    BigComplex out(impl_->bits);
    for (int j = 0; j < k; ++j) out += impl_->z[sigma[j] - 1] - impl_->z[sigma[k + j] - 1];
    return out;
}

namespace {

std::vector<int> identity_sigma(int k) {
    std::vector<int> s(2 * k);
    std::iota(s.begin(), s.end(), 1);
    return s;
}

// Options for a single point evaluation, where only the value matters.
Method2Options point_options(int k, std::uint64_t cutoff, const PrecisionContext& ctx) {
    Method2Options opt;
    opt.prime_cutoff = cutoff;
    if (k >= 1 && cutoff >= 100) opt.tail_degree = choose_tail_degree(k, ctx.effective_digits(), cutoff, 0);
    return opt;
}

// Widen the context by the digits that cancel: `per_gap` times the
// decimal size of the smallest gap among z[from..].
PrecisionContext cancellation_context(const std::vector<BigComplex>& z, std::size_t from, int per_gap,
                                      const PrecisionContext& ctx) {
    double worst = 0;
    for (std::size_t a = from; a < z.size(); ++a)
        for (std::size_t b = a + 1; b < z.size(); ++b) {
            const double g = abs_double(z[a] - z[b]);
            if (g > 0) worst = std::max(worst, -std::log10(g));
        }
    return ctx.widened(static_cast<int>(std::ceil(per_gap * worst)) + 5);
}

BigComplex narrowed(BigComplex v, const PrecisionContext& ctx) {
    v.set_bits(ctx.bits());
    return v;
}

}  // namespace

BigComplex ak_at_shifts(int k, const std::vector<BigComplex>& z, std::uint64_t cutoff, const PrecisionContext& ctx) {
    const PrecisionContext wide = cancellation_context(z, k, k - 1, ctx);
    ShiftEvaluator ev(k, z, point_options(k, cutoff, ctx), ctx.effective_digits(), wide);
    return narrowed(ev.ak({identity_sigma(k)})[0], ctx);
}

BigComplex h_r(int k, int r, const std::vector<BigComplex>& z, std::uint64_t cutoff, const PrecisionContext& ctx) {
    if (r < 0 || r > k * k) throw DomainError("h_r: r must lie in 0..k^2");
    const PrecisionContext wide = cancellation_context(z, k, k - 1, ctx);
    ShiftEvaluator ev(k, z, point_options(k, cutoff, ctx), ctx.effective_digits(), wide);
    const auto s = identity_sigma(k);
    return narrowed(pow(ev.shift_sum(s), k * k - r) * ev.ak({s})[0] * ev.zeta_product(s), ctx);
}

BigComplex shifted_sum(int k, const std::vector<BigComplex>& alphas, const BigReal& x, std::uint64_t cutoff,
                       const PrecisionContext& ctx) {
    for (std::size_t a = 0; a < alphas.size(); ++a)
        for (std::size_t b = a + 1; b < alphas.size(); ++b)
            if (coincident(alphas[a], alphas[b])) throw CoincidentShifts("shifted_sum: shifts must be distinct");
    Method2Options opt;
    opt.prime_cutoff = cutoff;
    const PrecisionContext wide = cancellation_context(alphas, 0, k * k + k - 1, ctx);
    ShiftEvaluator ev(k, alphas, opt, ctx.effective_digits(), wide);
    const auto sigmas = xi_permutations(k);
    const auto A = ev.ak(sigmas);
    BigComplex total(wide.bits());
    const BigReal half_x = BigReal(x, wide.bits()) / 2L;
    for (std::size_t i = 0; i < sigmas.size(); ++i)
        total += exp(ev.shift_sum(sigmas[i]) * half_x) * A[i] * ev.zeta_product(sigmas[i]);
    return narrowed(total, ctx);
}

namespace {

struct ShiftRun {
    std::vector<BigComplex> c;
    std::vector<double> log10_max_term;
    int working_digits = 0;
    int tail_degree = 0;
};

ShiftRun run_scheme(int k, int D, int eps_exp, const Method2Options& opt) {
    const int k2 = k * k;
    ShiftRun out;
    // the sum over sigma cancels about k^2 eps_exp digits and each local
    // factor another (k - 1) eps_exp through its removable poles
    out.working_digits = std::max((k2 + 8) * eps_exp, (k2 + k) * eps_exp + 2 * D + 20);
    const PrecisionContext ctx(out.working_digits, 0);
    const mpfr_prec_t bits = ctx.bits();
    ShiftScheme scheme = default_scheme(k, eps_exp, bits);
    ShiftEvaluator ev(k, scheme.shifts(), opt, D, ctx);
    out.tail_degree = ev.tail_degree();
    const auto sigmas = xi_permutations(k);
    const auto A = ev.ak(sigmas);
    std::vector<BigComplex> base(sigmas.size(), BigComplex(bits)), S(sigmas.size(), BigComplex(bits));
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        base[i] = A[i] * ev.zeta_product(sigmas[i]);
        S[i] = ev.shift_sum(sigmas[i]);
    }
    for (int r = 0; r <= k2; ++r) {
        BigComplex sum(bits);
        double big = -1e300;
        for (std::size_t i = 0; i < sigmas.size(); ++i) {
            BigComplex h = pow(S[i], k2 - r) * base[i];
            big = std::max(big, log10_abs(h));
            sum += h;
        }
        BigReal scale = BigReal(factorial(k2 - r), bits) * pow(BigReal(2L, bits), k2 - r);
        out.c.push_back(sum / scale);
        out.log10_max_term.push_back(big);
    }
    return out;
}

}  // namespace

MomentPolynomial coefficients_via_shifts(int k, int D, const Method2Options& opt, ShiftDiagnostics* diag) {
    if (k < 1) throw ConfigurationError("the shift method needs a positive integer k");
    if (k > kMethod2MaxK) throw ConfigurationError("the shift method is limited to k <= " + std::to_string(kMethod2MaxK));
    if (D < 15) throw ConfigurationError("at least 15 digits are required");
    const int eps_exp = opt.epsilon_exponent > 0 ? opt.epsilon_exponent : D;
    const int k2 = k * k;
    ShiftRun run = run_scheme(k, D, eps_exp, opt);

    ShiftDiagnostics d;
    d.working_digits = run.working_digits;
    d.tail_degree = run.tail_degree;
    d.log10_max_term = run.log10_max_term;
    for (int r = 0; r <= k2; ++r) {
        const BigComplex& c = run.c[r];
        const double mag = abs_double(c);
        const double scale = std::lgamma(k2 - r + 1.0) / std::log(10.0) + (k2 - r) * std::log10(2.0);
        if (mag == 0 || run.log10_max_term[r] - scale - log10_abs(c) > run.working_digits - D - 5)
            throw PrecisionExceeded("cancellation in c_" + std::to_string(r) + " exceeds the working precision");
        d.max_relative_imaginary = std::max(d.max_relative_imaginary, std::fabs(c.im().to_double()) / mag);
    }
    if (opt.certify) {
        ShiftRun check = run_scheme(k, D, eps_exp + 1, opt);
        for (int r = 0; r <= k2; ++r) {
            const double a = agreeing_digits(run.c[r], check.c[r], 1000);
            d.agreement_digits.push_back(a);
            if (a < D - 5)
                throw PrecisionExceeded("c_" + std::to_string(r) + " agrees to only " + std::to_string(a) +
                                        " digits between shift sizes");
        }
    }
    if (diag) *diag = d;

    const mpfr_prec_t out_bits = PrecisionContext(D).bits();
    MomentPolynomial poly;
    poly.k = BigComplex(static_cast<long>(k), out_bits);
    poly.method = "shift";
    poly.digits = D - 5;
    poly.prime_cutoff = opt.prime_cutoff;
    poly.is_full = true;
    for (int r = 0; r <= k2; ++r) poly.coefficients.emplace_back(BigReal(run.c[r].re().to_string(D - 5), out_bits));
    return poly;
}

}  // namespace zm
