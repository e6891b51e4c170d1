#include "zetamoments/local_factors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <tuple>

#include "zetamoments/errors.hpp"
#include "zetamoments/primes.hpp"
#include "zetamoments/special_functions.hpp"

namespace zm {

namespace {

using IntPoly = std::vector<BigInteger>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1, BigInteger(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Numerator of sum_{m>=0} m^c x^m = N_c(x) / (1-x)^{c+1}.
IntPoly eulerian_numerator(int c, const EulerianTable& E) {
    if (c == 0) return {BigInteger(1)};
    IntPoly p(c + 1, BigInteger(0));
    for (int l = 0; l < c; ++l) p[l + 1] = E(c, l);
    return p;
}

// One term x^p y^q of the product of block numerators.
struct ThetaTerm {
    int p;
    int q;
    BigInteger weight;
};

// Everything about a shape that does not depend on t or k.
struct ShapePlan {
    int a = 0;  // |alpha|
    int b = 0;  // |beta|
    BigRational scale;  // (-1)^{|beta|} / (prod alpha! prod beta!)
    std::vector<ThetaTerm> terms;
};

std::vector<ShapePlan> shape_plans(const ShapeBasis& basis) {
    EulerianTable E(std::max(basis.order(), 1));
    std::vector<ShapePlan> plans;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& s = basis.shape(i);
        ShapePlan sp;
        sp.a = part_sum(s.alpha);
        sp.b = part_sum(s.beta);
        IntPoly pa{BigInteger(1)}, pb{BigInteger(1)};
        BigInteger fact = 1;
        for (int x : s.alpha) {
            pa = poly_mul(pa, eulerian_numerator(x, E));
            fact *= factorial(x);
        }
        for (int x : s.beta) {
            pb = poly_mul(pb, eulerian_numerator(x, E));
            fact *= factorial(x);
        }
        sp.scale = BigRational(sp.b % 2 ? -1 : 1) / BigRational(fact);
        for (std::size_t p = 0; p < pa.size(); ++p)
            for (std::size_t q = 0; q < pb.size(); ++q)
                if (pa[p] != 0 && pb[q] != 0)
                    sp.terms.push_back({static_cast<int>(p), static_cast<int>(q), pa[p] * pb[q]});
        plans.push_back(std::move(sp));
    }
    return plans;
}

const std::vector<ShapePlan>& cached_plans(const std::shared_ptr<const ShapeBasis>& basis) {
    static std::mutex mu;
    static std::map<const ShapeBasis*, std::vector<ShapePlan>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(basis.get());
    if (it == cache.end()) it = cache.emplace(basis.get(), shape_plans(*basis)).first;
    return it->second;
}

BigComplex scaled(const BigComplex& z, const BigRational& q, mpfr_prec_t bits) {
    return z * BigReal(q, bits);
}

// Coefficients of log f_k(t; z) / log(t)^weight at a real t.
std::vector<BigComplex> unscaled_values(const BigComplex& k, const BigReal& t_in,
                                        const std::shared_ptr<const ShapeBasis>& basis, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    const BigReal t(t_in, bits);
    const auto& plans = cached_plans(basis);
    const int R = basis->order();

    std::vector<BigReal> tpow(R + 2, BigReal(1L, bits));
    for (int m = 1; m < R + 2; ++m) tpow[m] = tpow[m - 1] * t;
    // half powers: the block numerators are polynomials in sqrt(t)
    std::vector<BigReal> hpow(2 * R + 2, BigReal(1L, bits));
    const BigReal root = sqrt(t);
    for (int m = 1; m < 2 * R + 2; ++m) hpow[m] = hpow[m - 1] * root;

    std::map<std::tuple<int, int, int>, BigComplex> theta;
    auto theta_at = [&](int a, int b, int C) -> const BigComplex& {
        auto key = std::make_tuple(a, b, C);
        auto it = theta.find(key);
        if (it == theta.end())
            it = theta.emplace(key, theta_integral(k + BigComplex(long(a), bits), k + BigComplex(long(b), bits), C, t, ctx))
                     .first;
        return it->second;
    };

    std::vector<BigComplex> F(basis->size(), BigComplex(bits));
    for (std::size_t i = 0; i < basis->size(); ++i) {
        const ShapePlan& sp = plans[i];
        BigComplex acc(bits);
        for (const auto& term : sp.terms) {
            BigComplex v = theta_at(sp.a, sp.b, term.p - term.q) * hpow[term.p + term.q];
            acc += v * BigReal(term.weight, bits);
        }
        F[i] = scaled(acc, sp.scale, bits);
    }

    std::vector<BigComplex> G(basis->size(), BigComplex(bits));
    G[0] = log(F[0]);
    basis_log(*basis, F, BigComplex(1L, bits) / F[0], G);

    // log(1 - t e^s) = sum_n g_n s^n
    EulerianTable E(std::max(R, 1));
    const BigReal one_minus = BigReal(1L, bits) - t;
    std::vector<BigComplex> g(R + 1, BigComplex(bits));
    g[0] = BigComplex(log(one_minus));
    BigReal inv_pow = BigReal(1L, bits) / one_minus;
    BigReal nfact(1L, bits);
    for (int n = 1; n <= R; ++n) {
        nfact *= static_cast<long>(n);
        if (n > 1) inv_pow /= one_minus;
        // sum_{m>=1} m^{n-1} t^m
        BigReal num(bits);
        if (n == 1) {
            num = t;
        } else {
            for (int l = 0; l < n - 1; ++l) num += BigReal(E(n - 1, l), bits) * tpow[l + 1];
        }
        g[n] = BigComplex(-(num * inv_pow / nfact));
    }
    SymmetricSeries first = pair_series(basis, g, k, bits);
    for (std::size_t i = 0; i < G.size(); ++i) G[i] += first[i];
    return G;
}

// Same coefficients as power series in t.
std::vector<Jet<BigComplex>> unscaled_jets(const BigComplex& k, const std::shared_ptr<const ShapeBasis>& basis,
                                           int J, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    const auto& plans = cached_plans(basis);
    const int R = basis->order();
    using CJet = Jet<BigComplex>;

    // binom * 2F1 part of the theta integral, without the power of t in front
    std::map<std::tuple<int, int, int>, CJet> cache;
    auto base_jet = [&](int a, int b, int C) -> const CJet& {
        auto key = std::make_tuple(a, b, C);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        BigComplex A = k + BigComplex(long(a), bits), B = k + BigComplex(long(b), bits);
        if (C < 0) std::swap(A, B);
        const long m = std::labs(C);
        // binom(B + m - 1, m) as a rising factorial
        BigComplex lead(1L, bits);
        for (long j = 0; j < m; ++j) lead = lead * (B + BigComplex(j, bits)) / (j + 1);
        CJet jet(J, bits);
        jet[0] = lead;
        BigComplex Bm = B + BigComplex(m, bits);
        for (int n = 0; n < J; ++n) {
            BigComplex r = (A + BigComplex(long(n), bits)) * (Bm + BigComplex(long(n), bits));
            r /= (m + 1 + n) * static_cast<long>(n + 1);
            jet[n + 1] = jet[n] * r;
        }
        return cache.emplace(key, std::move(jet)).first->second;
    };

    std::vector<CJet> F(basis->size(), CJet(J, bits));
    for (std::size_t i = 0; i < basis->size(); ++i) {
        const ShapePlan& sp = plans[i];
        CJet acc(J, bits);
        for (const auto& term : sp.terms) {
            const CJet& u = base_jet(sp.a, sp.b, term.p - term.q);
            const int shift = std::max(term.p, term.q);
            BigReal w(term.weight, bits);
            for (int n = 0; n + shift <= J; ++n) acc[n + shift] += u[n] * w;
        }
        BigReal sc(sp.scale, bits);
        acc.scale(sc);
        F[i] = std::move(acc);
    }

    std::vector<CJet> G(basis->size(), CJet(J, bits));
    G[0] = jet_log(F[0]);
    basis_log(*basis, F, jet_inverse(F[0]), G);

    // log(1 - t e^s): s^n coefficient is -sum_{m>=1} m^{n-1} t^m / n!
    for (std::size_t i = 0; i < basis->size(); ++i) {
        const auto& s = basis->shape(i);
        if (s.alpha.size() > 1 || s.beta.size() > 1) continue;
        int n;
        BigComplex mult(bits);
        if (s.empty()) {
            n = 0;
            mult = k * k;
        } else if (s.beta.empty()) {
            n = s.alpha[0];
            mult = k;
        } else {
            n = s.alpha[0] + s.beta[0];
            mult = BigComplex(BigReal(binomial(n, s.alpha[0]), bits));
            if (s.beta[0] % 2) mult = -mult;
        }
        BigReal nfact(factorial(n), bits);
        for (int m = 1; m <= J; ++m) {
            BigReal c = n == 0 ? BigReal(1L, bits) / static_cast<long>(m)
                               : pow(BigReal(static_cast<long>(m), bits), n - 1) / nfact;
            G[i][m] -= mult * c;
        }
    }
    (void)R;
    return G;
}

// Solve V x = y for several right-hand sides by Gaussian elimination.
std::vector<std::vector<BigComplex>> solve_many(std::vector<std::vector<BigComplex>> V,
                                                std::vector<std::vector<BigComplex>> Y) {
    const std::size_t n = V.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(V[r][c]) > abs(V[piv][c])) piv = r;
        if (V[piv][c].is_zero()) throw TailFitSingular("tail fit system is singular, raise the prime cutoff");
        std::swap(V[piv], V[c]);
        std::swap(Y[piv], Y[c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            BigComplex f = V[r][c] / V[c][c];
            for (std::size_t j = c; j < n; ++j) V[r][j] -= f * V[c][j];
            for (std::size_t j = 0; j < Y[r].size(); ++j) Y[r][j] -= f * Y[c][j];
        }
    }
    std::vector<std::vector<BigComplex>> X(n);
    for (std::size_t c = n; c-- > 0;) {
        X[c] = Y[c];
        for (std::size_t j = c + 1; j < n; ++j)
            for (std::size_t m = 0; m < X[c].size(); ++m) X[c][m] -= V[c][j] * X[j][m];
        for (auto& x : X[c]) x /= V[c][c];
    }
    return X;
}

}  // namespace

int block_width(const BigComplex& k, int order) {
    long n = integer_value(k);
    if (n > 0) return static_cast<int>(std::min<long>(n, order));
    return order;
}

long integer_value(const BigComplex& k) {
    if (!k.is_real() || !k.re().is_integer()) return 0;
    if (k.re().sign() <= 0) return 0;
    return k.re().to_long();
}

SymmetricSeries local_log_series(const BigComplex& k, const BigReal& t, int order, const PrecisionContext& ctx) {
    if (t.sign() <= 0 || t >= BigReal(1L, t.bits())) throw DomainError("local_log_series: need 0 < t < 1");
    auto basis = shape_basis(order, block_width(k, order));
    std::vector<BigComplex> h = unscaled_values(k, t, basis, ctx);
    SymmetricSeries out(basis, ctx.bits());
    const BigReal L = log(BigReal(t, ctx.bits()));
    std::vector<BigReal> Lp(order + 1, BigReal(1L, ctx.bits()));
    for (int r = 1; r <= order; ++r) Lp[r] = Lp[r - 1] * L;
    for (std::size_t i = 0; i < basis->size(); ++i) out[i] = h[i] * Lp[basis->weight(i)];
    return out;
}

std::vector<Jet<BigComplex>> local_log_jets(const BigComplex& k, int order, int t_order, const PrecisionContext& ctx) {
    if (t_order < 2) throw DomainError("local_log_jets: order in t must be at least 2");
    return unscaled_jets(k, shape_basis(order, block_width(k, order)), t_order, ctx);
}

std::string to_string(TailMode m) { return m == TailMode::Taylor ? "taylor" : "fit"; }

TailMode tail_mode_from_string(const std::string& s) {
    if (s == "taylor") return TailMode::Taylor;
    if (s == "fit") return TailMode::Fit;
    throw ConfigurationError("unknown tail mode '" + s + "' (taylor or fit)");
}

SymmetricSeries compute_B(const BigComplex& k, int order, std::uint64_t cutoff, const PrecisionContext& ctx,
                          TailMode mode) {
    if (order < 0) throw DomainError("compute_B: negative order");
    if (cutoff < 100) throw DomainError("compute_B: prime cutoff must be at least 100");
    auto basis = shape_basis(order, block_width(k, order));
    const mpfr_prec_t bits = ctx.bits();
    SymmetricSeries B(basis, bits);
    if (k.is_zero()) return B;  // every factor is 1

    // primes up to the cutoff, ascending
    const auto primes = primes_up_to(cutoff);
    for (std::uint32_t p : primes) {
        BigReal t = BigReal(1L, bits) / BigReal(static_cast<long>(p), bits);
        SymmetricSeries s = local_log_series(k, t, order, ctx);
        B += s;
    }

    const double lg = std::log10(static_cast<double>(cutoff));
    // T[j][r] = sum_{p > cutoff} log(p)^r / p^j
    auto tails = [&](int jmax) {
        std::vector<std::vector<BigReal>> T(jmax + 1);
        for (int j = 2; j <= jmax; ++j) T[j] = prime_tail_sums(order, j, cutoff, ctx);
        return T;
    };

    std::vector<BigComplex> tail(basis->size(), BigComplex(bits));
    if (mode == TailMode::Taylor) {
        const int J = std::max(8, static_cast<int>(std::ceil((ctx.effective_digits() + 5) / lg)) + 3);
        auto jets = unscaled_jets(k, basis, J, ctx);
        auto T = tails(J);
        for (std::size_t i = 0; i < basis->size(); ++i) {
            const int r = basis->weight(i);
            for (int j = 2; j <= J; ++j) tail[i] += jets[i][j] * T[j][r];
            if (r % 2) tail[i] = -tail[i];
        }
    } else {
        // the fitted summand is smooth in t, so the probes need not be prime
        PrecisionContext wide = ctx.widened(60);
        const mpfr_prec_t wb = wide.bits();
        std::vector<std::vector<BigComplex>> V, Y;
        for (int e = 3; e <= 7; ++e) {
            BigReal q(static_cast<long>(cutoff), wb);
            q += BigReal(static_cast<long>(std::pow(10.0, e)), wb);
            BigReal t = BigReal(1L, wb) / q;
            std::vector<BigComplex> row;
            BigReal tp = t * t;
            for (int j = 2; j <= 6; ++j) {
                row.emplace_back(tp);
                tp *= t;
            }
            V.push_back(std::move(row));
            Y.push_back(unscaled_values(k, t, basis, wide));
        }
        auto D = solve_many(V, Y);
        auto T = tails(6);
        for (std::size_t i = 0; i < basis->size(); ++i) {
            const int r = basis->weight(i);
            for (int j = 2; j <= 6; ++j) tail[i] += D[j - 2][i] * T[j][r];
            if (r % 2) tail[i] = -tail[i];
            tail[i].set_bits(bits);
        }
    }
    for (std::size_t i = 0; i < basis->size(); ++i) B[i] += tail[i];
    return B;
}

BigComplex compute_ak(const BigComplex& k, std::uint64_t cutoff, const PrecisionContext& ctx, TailMode mode) {
    if (k.is_zero()) return BigComplex(1L, ctx.bits());
    SymmetricSeries B = compute_B(k, 0, cutoff, ctx, mode);
    return exp(B.constant());
}

SymmetricSeries zeta_product_series(const BigComplex& k, int order, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    auto basis = shape_basis(order, block_width(k, order));
    // s zeta(1+s) = 1 + sum_n (-1)^n gamma_n s^{n+1} / n!
    Jet<BigComplex> u(order, bits);
    u[0] = BigComplex(1L, bits);
    if (order >= 1) {
        std::vector<BigReal> g = stieltjes(order - 1, ctx);
        BigReal fact(1L, bits);
        for (int n = 0; n + 1 <= order; ++n) {
            if (n > 0) fact *= static_cast<long>(n);
            BigReal v = g[n] / fact;
            u[n + 1] = BigComplex(n % 2 ? -v : v);
        }
    }
    Jet<BigComplex> lu = jet_log(u);
    std::vector<BigComplex> coeffs(lu.coefficients().begin(), lu.coefficients().end());
    SymmetricSeries pairs = pair_series(basis, coeffs, k, bits);
    pairs.constant() = BigComplex(bits);
    return series_exp(pairs);
}

ArithmeticCoefficients compute_b(const BigComplex& k, int order, std::uint64_t cutoff, const PrecisionContext& ctx,
                                 TailMode mode) {
    ArithmeticCoefficients out;
    out.k = k;
    out.prime_cutoff = cutoff;
    out.order = order;
    out.digits = ctx.decimal_digits;
    out.tail = mode;
    auto basis = shape_basis(order, block_width(k, order));
    if (k.is_zero()) {
        out.a_k = BigComplex(1L, ctx.bits());
        out.B = SymmetricSeries(basis, ctx.bits());
        out.b = SymmetricSeries(basis, ctx.bits());
        out.b.constant() = BigComplex(1L, ctx.bits());
        return out;
    }
    SymmetricSeries B = compute_B(k, order, cutoff, ctx, mode);
    out.a_k = exp(B.constant());
    B.constant() = BigComplex(ctx.bits());
    SymmetricSeries Z = zeta_product_series(k, order, ctx);
    out.b = series_multiply(series_exp(B), Z);
    out.B = std::move(B);
    return out;
}

}  // namespace zm
