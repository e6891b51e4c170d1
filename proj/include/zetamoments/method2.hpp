#pragma once

// Moment coefficients for integer k from the combinatorial sum over the
// binom(2k, k) two-block permutations, evaluated at small distinct shifts
// with enough working precision to absorb the cancellation of the poles.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "zetamoments/bignum.hpp"
#include "zetamoments/moment_polynomial.hpp"

namespace zm {

// The k-subsets of {1..2k} in lexicographic order. Each entry is the
// permutation sigma written out: the subset ascending, then its complement
// ascending (values 1-based).
std::vector<std::vector<int>> xi_permutations(int k);

struct ShiftScheme {
    BigComplex epsilon;
    int k = 0;
    // j * epsilon for j = 1..2k.
    std::vector<BigComplex> shifts() const;
};

// epsilon = 10^-D e^{i pi/7}.
ShiftScheme default_scheme(int k, int D, mpfr_prec_t bits);

struct Method2Options {
    std::uint64_t prime_cutoff = 10000;
    // Highest power 1/p^d kept in the expansion of the local factor for
    // primes above the cutoff; 0 picks it from the target digits.
    int tail_degree = 0;
    // Digits for constants that enter analytically (prime sums, Stieltjes
    // constants, series coefficients); 0 means target digits + 20.
    int constant_digits = 0;
    // Override of epsilon's magnitude exponent; 0 means the target digits.
    int epsilon_exponent = 0;
    // Rerun at epsilon / 10 and require agreement to D - 5 digits.
    bool certify = true;
};

// Products A_k(z) prod zeta(1 + z_i - z_{k+j}) at all rearrangements of a
// fixed list of 2k distinct labels. Heavy per-prime work is shared across
// permutations.
class ShiftEvaluator {
public:
    ShiftEvaluator(int k, std::vector<BigComplex> labels, const Method2Options& opt, int target_digits,
                   const PrecisionContext& ctx);
    ~ShiftEvaluator();
    ShiftEvaluator(const ShiftEvaluator&) = delete;
    ShiftEvaluator& operator=(const ShiftEvaluator&) = delete;

    int k() const;
    int tail_degree() const;
    // A_k at z_i = labels[sigma(i) - 1], for each permutation.
    std::vector<BigComplex> ak(const std::vector<std::vector<int>>& sigmas) const;
    // prod_{i,j} zeta(1 + z_i - z_{k+j}).
    BigComplex zeta_product(const std::vector<int>& sigma) const;
    // sum_j z_j - z_{k+j}.
    BigComplex shift_sum(const std::vector<int>& sigma) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// A_k at an explicit point; the last k entries must be pairwise distinct
// (CoincidentShifts otherwise).
BigComplex ak_at_shifts(int k, const std::vector<BigComplex>& z, std::uint64_t cutoff, const PrecisionContext& ctx);

// (sum_j z_j - z_{k+j})^{k^2 - r} A_k(z) prod zeta(1 + z_i - z_{k+j}).
BigComplex h_r(int k, int r, const std::vector<BigComplex>& z, std::uint64_t cutoff, const PrecisionContext& ctx);

// Combinatorial sum of exp(x/2 sum_j z_j - z_{k+j}) A_k prod zeta over the
// rearrangements of the given distinct shifts.
BigComplex shifted_sum(int k, const std::vector<BigComplex>& alphas, const BigReal& x, std::uint64_t cutoff,
                       const PrecisionContext& ctx);

struct ShiftDiagnostics {
    int working_digits = 0;
    int tail_degree = 0;
    std::vector<double> log10_max_term;     // per r, log10 of the largest |H_r| summed
    std::vector<double> agreement_digits;   // per r, epsilon vs epsilon/10
    double max_relative_imaginary = 0;      // before rounding
};

constexpr int kMethod2MaxK = 7;

// All coefficients c_0..c_{k^2} for a positive integer k <= 7, rounded to
// D - 5 significant digits.
MomentPolynomial coefficients_via_shifts(int k, int D, const Method2Options& opt = {},
                                         ShiftDiagnostics* diag = nullptr);

}  // namespace zm
