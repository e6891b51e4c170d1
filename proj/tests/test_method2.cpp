#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "zetamoments/errors.hpp"
#include "zetamoments/method1.hpp"
#include "zetamoments/method2.hpp"
#include "zetamoments/special_functions.hpp"

using namespace zm;

namespace {

BigComplex cval(double re, double im, mpfr_prec_t bits) { return BigComplex(re, im, bits); }

// Distinct complex shifts of size about `scale`.
std::vector<BigComplex> spread(int k, double scale, mpfr_prec_t bits) {
    std::vector<BigComplex> z;
    for (int j = 0; j < 2 * k; ++j) z.push_back(cval(scale * (0.3 + 0.17 * j), scale * (0.11 * j - 0.4), bits));
    return z;
}

double relative_gap(const BigComplex& a, const BigComplex& b) {
    return (abs(a - b) / abs(b)).to_double();
}

}  // namespace

TEST_CASE("two-block permutations") {
    CHECK(xi_permutations(1).size() == 2);
    CHECK(xi_permutations(2).size() == 6);
    CHECK(xi_permutations(3).size() == 20);
    const auto x = xi_permutations(3);
    CHECK(x.front() == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(x.back() == std::vector<int>{4, 5, 6, 1, 2, 3});
    std::set<std::vector<int>> firsts;
    for (const auto& s : x) {
        std::vector<int> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<int>{1, 2, 3, 4, 5, 6});
        CHECK(std::is_sorted(s.begin(), s.begin() + 3));
        CHECK(std::is_sorted(s.begin() + 3, s.end()));
        firsts.insert({s.begin(), s.begin() + 3});
    }
    CHECK(firsts.size() == 20);
}

TEST_CASE("arithmetic factor at explicit shifts") {
    const PrecisionContext ctx(30);
    const auto bits = ctx.bits();
    // k = 1: the factor is identically one
    CHECK(relative_gap(ak_at_shifts(1, spread(1, 0.05, bits), 1000, ctx), BigComplex(1L, bits)) < 1e-30);

    // tiny shifts recover a_2 = 6 / pi^2
    const BigReal pi = BigReal::pi(bits);
    const BigComplex a2(BigReal(6L, bits) / (pi * pi));
    CHECK(relative_gap(ak_at_shifts(2, spread(2, 1e-32, bits), 1000, ctx), a2) < 1e-28);

    // and a_3 from the closed-form local factors
    const BigComplex a3 = compute_ak(BigComplex(3L, bits), 1000, ctx);
    CHECK(relative_gap(ak_at_shifts(3, spread(3, 1e-32, bits), 1000, ctx), a3) < 1e-28);
}

TEST_CASE("large-prime expansion agrees with the exact local factors") {
    // Moving the cutoff swaps the expansion for the rational factors on
    // the primes in between.
    const PrecisionContext ctx(20);
    const auto z = spread(3, 0.02, ctx.bits());
    const BigComplex lo = ak_at_shifts(3, z, 1000, ctx);
    const BigComplex hi = ak_at_shifts(3, z, 4000, ctx);
    CHECK(relative_gap(lo, hi) < 1e-20);
    // the shifts move A_3 well away from a_3, so the check is not vacuous
    const BigComplex a3 = compute_ak(BigComplex(3L, ctx.bits()), 1000, ctx);
    CHECK(relative_gap(lo, a3) > 1e-3);
}

TEST_CASE("last-block shifts must be distinct") {
    const PrecisionContext ctx(20);
    auto z = spread(2, 0.01, ctx.bits());
    z[3] = z[2];
    CHECK_THROWS_AS(ak_at_shifts(2, z, 1000, ctx), CoincidentShifts);
    auto w = spread(2, 1e-10, ctx.bits());
    w[1] = w[0];
    CHECK_THROWS_AS(shifted_sum(2, w, BigReal(1L, ctx.bits()), 1000, ctx), CoincidentShifts);
    CHECK_THROWS_AS(ak_at_shifts(2, spread(2, 1.0, ctx.bits()), 1000, ctx), DomainError);
}

TEST_CASE("single summand for k = 1") {
    const PrecisionContext ctx(30);
    const auto z = spread(1, 0.01, ctx.bits());
    const BigComplex s = z[0] - z[1];
    const BigComplex zeta = zeta_complex(BigComplex(1L, ctx.bits()) + s, ctx);
    CHECK(relative_gap(h_r(1, 1, z, 1000, ctx), zeta) < 1e-28);
    CHECK(relative_gap(h_r(1, 0, z, 1000, ctx), s * zeta) < 1e-28);
    CHECK_THROWS_AS(h_r(1, 2, z, 1000, ctx), DomainError);
}

TEST_CASE("second moment from shifts") {
    ShiftDiagnostics diag;
    MomentPolynomial p = coefficients_via_shifts(1, 20, {}, &diag);
    REQUIRE(p.coefficients.size() == 2);
    CHECK(p.method == "shift");
    CHECK(p.is_full);
    CHECK(p.digits == 15);
    const mpfr_prec_t bits = p.coefficients[0].bits();
    const BigReal gamma = BigReal::euler_gamma(bits);
    CHECK(relative_gap(p.coefficients[0], BigComplex(1L, bits)) < 1e-15);
    CHECK(relative_gap(p.coefficients[1], BigComplex(gamma * 2L)) < 1e-14);
}

TEST_CASE("shift and determinant methods agree") {
    for (int k : {2, 3}) {
        CAPTURE(k);
        ShiftDiagnostics diag;
        MomentPolynomial m2 = coefficients_via_shifts(k, 20, {}, &diag);
        MomentPolynomial m1 = build_polynomial(BigComplex(static_cast<long>(k), 128), k * k, 25);
        REQUIRE(m2.coefficients.size() == m1.coefficients.size());
        for (int r = 0; r <= k * k; ++r) {
            CAPTURE(r);
            // within the rounding of the 15 published digits
            CHECK(relative_gap(m2.coefficients[r], m1.coefficients[r]) < 1e-14);
        }
        // certification, realness and the size of the cancellation
        REQUIRE(diag.agreement_digits.size() == static_cast<std::size_t>(k * k + 1));
        for (double a : diag.agreement_digits) CHECK(a >= 15);
        CHECK(diag.max_relative_imaginary < 1e-20);
        // each |H_r| at shift scale 10^-20 grows like 10^(20 r): fit a line
        // through log10 max |H_r| and check slope and scatter
        const int n = k * k + 1;
        double sr = 0, sy = 0, srr = 0, sry = 0;
        for (int r = 0; r < n; ++r) {
            const double y = diag.log10_max_term[r];
            sr += r, sy += y, srr += double(r) * r, sry += r * y;
        }
        const double slope = (n * sry - sr * sy) / (n * srr - sr * sr);
        const double icpt = (sy - slope * sr) / n;
        CHECK(std::fabs(slope - 20.0) < 1.5);
        for (int r = 0; r < n; ++r) {
            CAPTURE(r);
            CHECK(std::fabs(diag.log10_max_term[r] - (icpt + slope * r)) < 2);
        }
    }
}

TEST_CASE("shifted sum approaches the moment polynomial") {
    const int k = 2;
    const PrecisionContext ctx(30);
    const auto bits = ctx.bits();
    const auto z = default_scheme(k, 15, bits).shifts();
    const BigReal x(2.5, bits);
    const BigComplex s = shifted_sum(k, z, x, 1000, ctx);
    MomentPolynomial p = build_polynomial(BigComplex(2L, bits), 4, 25);
    CHECK(relative_gap(s, evaluate_pk(p, x)) < 1e-12);

    // the sum does not depend on how the shifts are labelled
    auto rev = z;
    std::reverse(rev.begin(), rev.end());
    CHECK(relative_gap(shifted_sum(k, rev, x, 1000, ctx), s) < 1e-28);
}

TEST_CASE("shift method arguments") {
    CHECK_THROWS_AS(coefficients_via_shifts(0, 20), ConfigurationError);
    CHECK_THROWS_AS(coefficients_via_shifts(2, 10), ConfigurationError);
    CHECK_THROWS_AS(coefficients_via_shifts(8, 20), ConfigurationError);
    CHECK_THROWS_AS(xi_permutations(0), DomainError);
    CHECK_THROWS_AS(xi_permutations(10), DomainError);
}
