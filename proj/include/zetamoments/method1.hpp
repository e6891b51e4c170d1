#pragma once

// Moment coefficients from the arithmetic series b_k and the combinatorial
// factors N_k:
//   c_r(k) = a_k prod_{l<k} l!/(k+l)! sum_{weight r} 2^{1-delta} b_k N_k.

#include <cstdint>

#include "zetamoments/determinants.hpp"
#include "zetamoments/local_factors.hpp"
#include "zetamoments/moment_polynomial.hpp"

namespace zm {

// prod_{l=0}^{k-1} l!/(k+l)!, exact for positive integers and through the
// Barnes G ratio G(k+1)^2 / G(2k+1) otherwise.
BigComplex leading_factor(const BigComplex& k, const PrecisionContext& ctx);

// Weight r part of the coefficient sum, without the a_k and leading factor.
BigComplex coefficient_sum(const BigComplex& k, int r, const ArithmeticCoefficients& arith, NkCache& cache,
                           const PrecisionContext& ctx);

BigComplex coefficient_cr(const BigComplex& k, int r, const ArithmeticCoefficients& arith, NkCache& cache,
                          const PrecisionContext& ctx);

// Highest order the method supports for integer k.
constexpr int kMethod1MaxOrder = 9;

// min(9, k^2) for positive integer k, 7 otherwise.
int default_order(const BigComplex& k);

struct Method1Options {
    std::uint64_t prime_cutoff = 1000;
    TailMode tail = TailMode::Taylor;
};

MomentPolynomial build_polynomial(const BigComplex& k, int R, int digits, const Method1Options& opt = {},
                                  NkCache* cache = nullptr);

}  // namespace zm
