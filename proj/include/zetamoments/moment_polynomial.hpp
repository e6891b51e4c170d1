#pragma once

// Moment polynomial P_k(x) = sum_r c_r(k) x^{k^2 - r} and its JSON form.

#include <cstdint>
#include <string>
#include <vector>

#include "zetamoments/bignum.hpp"

namespace zm {

struct MomentPolynomial {
    BigComplex k;
    std::vector<BigComplex> coefficients;  // c_0 .. c_R
    bool is_full = false;                  // positive integer k and R = k^2
    std::string method;                    // "determinant" or "shift"
    int digits = 0;                        // trustworthy decimal digits
    std::uint64_t prime_cutoff = 0;

    int order() const { return static_cast<int>(coefficients.size()) - 1; }
};

// sum_r c_r x^{k^2 - r}. Non-integer exponents need x > 0.
BigComplex evaluate_pk(const MomentPolynomial& poly, const BigReal& x);

// Decimal parsing of "a", "a+bi", "a-bi", "bi" (scientific notation allowed).
BigComplex parse_complex(const std::string& text, mpfr_prec_t bits);
// Decimal rendering with the given number of significant digits.
std::string format_complex(const BigComplex& z, int digits);

// JSON document {"format":"zetamoments.polynomial","version":1,...}.
std::string to_json(const MomentPolynomial& poly);
MomentPolynomial moment_polynomial_from_json(const std::string& text, mpfr_prec_t bits);

}  // namespace zm
