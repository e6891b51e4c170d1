#pragma once

// Polynomials in k with exact rational coefficients.

#include <utility>
#include <vector>

#include "zetamoments/bignum.hpp"

namespace zm {

struct KPolynomial {
    std::vector<BigRational> coefficients;  // ascending powers of k

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return degree() < 0; }
    void trim();
};

bool operator==(const KPolynomial& a, const KPolynomial& b);

BigRational evaluate_kpoly(const KPolynomial& p, const BigRational& k);
BigComplex evaluate_kpoly(const KPolynomial& p, const BigComplex& k);

// Exact interpolation through the first degree_bound + 1 points; every
// further point must lie on the result, otherwise InconsistentInterpolation.
KPolynomial interpolate_kpoly(const std::vector<std::pair<BigRational, BigRational>>& points, int degree_bound);

}  // namespace zm
