#pragma once

// Arithmetic part of the moment coefficients: the Euler product A_k near
// the origin, its logarithm as a symmetric series, and the Taylor
// coefficients of A_k times the product of (z_i - w_j) zeta(1 + z_i - w_j).
//
// Coefficients are plain Taylor coefficients of the representative
// monomial (no factorials folded in).

#include <cstdint>
#include <string>
#include <vector>

#include "zetamoments/bignum.hpp"
#include "zetamoments/jet.hpp"
#include "zetamoments/shapes.hpp"

namespace zm {

// Block width of the series for a given k: k itself for a positive
// integer below the order, otherwise the order.
int block_width(const BigComplex& k, int order);
// Exact positive integer value of k, or 0.
long integer_value(const BigComplex& k);

// Series of log f_k(t; z), f_k the local factor at t = 1/p, for 0 < t < 1.
SymmetricSeries local_log_series(const BigComplex& k, const BigReal& t, int order, const PrecisionContext& ctx);

// Coefficients of log f_k(t; z) divided by log(t)^weight, as power series in
// t through t^t_order. Index follows shape_basis(order, block_width(k, order)).
std::vector<Jet<BigComplex>> local_log_jets(const BigComplex& k, int order, int t_order, const PrecisionContext& ctx);

// How the primes above the cutoff are summed.
enum class TailMode {
    Taylor,  // exact Taylor coefficients in 1/p against prime sums of log^r p / p^j
    Fit,     // five point fit of the 1/p^2..1/p^6 coefficients
};
std::string to_string(TailMode m);
TailMode tail_mode_from_string(const std::string& s);

// Series of log A_k (constant term log a_k).
SymmetricSeries compute_B(const BigComplex& k, int order, std::uint64_t cutoff, const PrecisionContext& ctx,
                          TailMode mode = TailMode::Taylor);

// a_k = A_k(0).
BigComplex compute_ak(const BigComplex& k, std::uint64_t cutoff, const PrecisionContext& ctx,
                      TailMode mode = TailMode::Taylor);

// Series of prod_{i,j} (z_i - w_j) zeta(1 + z_i - w_j).
SymmetricSeries zeta_product_series(const BigComplex& k, int order, const PrecisionContext& ctx);

struct ArithmeticCoefficients {
    BigComplex k;
    BigComplex a_k;
    SymmetricSeries B;  // log A_k, constant removed
    SymmetricSeries b;  // A_k / a_k times the zeta product
    std::uint64_t prime_cutoff = 0;
    int order = 0;
    int digits = 0;
    TailMode tail = TailMode::Taylor;
};

ArithmeticCoefficients compute_b(const BigComplex& k, int order, std::uint64_t cutoff, const PrecisionContext& ctx,
                                 TailMode mode = TailMode::Taylor);

}  // namespace zm
