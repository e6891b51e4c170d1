#include "zetamoments/method1.hpp"

#include <string>

#include "zetamoments/errors.hpp"
#include "zetamoments/special_functions.hpp"

namespace zm {

BigComplex leading_factor(const BigComplex& k, const PrecisionContext& ctx) {
    const long n = integer_value(k);
    if (n > 0) {
        BigRational q(1);
        for (long l = 0; l < n; ++l) q *= BigRational(factorial(l), factorial(n + l));
        q.canonicalize();
        return BigComplex(BigReal(q, ctx.bits()));
    }
    if (k.is_zero()) return BigComplex(1L, ctx.bits());
    if (k.re().sign() <= 0) throw DomainError("leading_factor: Re k must be positive");
    const PrecisionContext wide = ctx.widened(5);
    BigComplex one(1L, wide.bits());
    BigComplex lg = log_barnes_g(k + one, wide) * 2L - log_barnes_g(k * 2L + one, wide);
    BigComplex out = exp(lg);
    out.set_bits(ctx.bits());
    return out;
}

BigComplex coefficient_sum(const BigComplex& k, int r, const ArithmeticCoefficients& arith, NkCache& cache,
                           const PrecisionContext& ctx) {
    if (r < 0 || r > arith.order)
        throw DomainError("coefficient r = " + std::to_string(r) + " is outside the arithmetic series order " +
                          std::to_string(arith.order));
    const ShapeBasis& basis = arith.b.basis();
    const long n = integer_value(k);
    BigComplex sum(ctx.bits());
    auto [lo, hi] = basis.weight_range(r);
    for (std::size_t i = lo; i < hi; ++i) {
        const ExponentShape& s = basis.shape(i);
        BigComplex nk(ctx.bits());
        if (n > 0 && !cache.contains(s)) {
            nk = BigComplex(BigReal(nk_raw(n, s), ctx.bits()));
        } else {
            nk = evaluate_kpoly(cache.get(s), k);
        }
        if (nk.is_zero()) continue;
        BigComplex term = arith.b[i] * nk;
        if (!shape_delta(s)) term *= 2L;
        sum += term;
    }
    return sum;
}

BigComplex coefficient_cr(const BigComplex& k, int r, const ArithmeticCoefficients& arith, NkCache& cache,
                          const PrecisionContext& ctx) {
    return arith.a_k * leading_factor(k, ctx) * coefficient_sum(k, r, arith, cache, ctx);
}

int default_order(const BigComplex& k) {
    const long n = integer_value(k);
    if (n > 0) return static_cast<int>(std::min<long>(kMethod1MaxOrder, n * n));
    return 7;
}

MomentPolynomial build_polynomial(const BigComplex& k, int R, int digits, const Method1Options& opt, NkCache* cache) {
    if (digits < 15) throw ConfigurationError("at least 15 digits are required");
    if (R < 0) throw ConfigurationError("order must be non-negative");
    const long n = integer_value(k);
    if (n > 0 && R > n * n)
        throw ConfigurationError("P_" + std::to_string(n) + " has degree " + std::to_string(n * n) +
                                 "; order " + std::to_string(R) + " is beyond it");
    if (n > 0 && R > kMethod1MaxOrder)
        throw ConfigurationError("orders above " + std::to_string(kMethod1MaxOrder) +
                                 " for integer k need the shift method");
    if (!k.is_zero() && k.re().sign() <= 0) throw DomainError("Re k must be positive");
    NkCache& nk = cache ? *cache : default_nk_cache();

    const PrecisionContext ctx(digits);
    ArithmeticCoefficients arith = compute_b(k, R, opt.prime_cutoff, ctx, opt.tail);
    const BigComplex lead = arith.a_k * leading_factor(k, ctx);

    MomentPolynomial poly;
    poly.k = k;
    poly.method = "determinant";
    poly.digits = digits;
    poly.prime_cutoff = opt.prime_cutoff;
    poly.is_full = n > 0 && R == n * n;
    for (int r = 0; r <= R; ++r) poly.coefficients.push_back(lead * coefficient_sum(k, r, arith, nk, ctx));
    return poly;
}

}  // namespace zm
