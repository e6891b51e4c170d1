#include "doctest.h"
#include "zetamoments/bignum.hpp"
#include "zetamoments/errors.hpp"
#include "zetamoments/jet.hpp"
#include "zetamoments/kpoly.hpp"

using namespace zm;

TEST_CASE("context rejects fewer than 15 digits") {
    CHECK_THROWS_AS(PrecisionContext(10), std::invalid_argument);
    PrecisionContext ctx(30);
    CHECK(ctx.effective_digits() == 40);
    CHECK(ctx.bits() >= 133);
}

TEST_CASE("real arithmetic keeps the wider precision") {
    BigReal a(1L, 100), b(3L, 300);
    BigReal c = a / b;
    CHECK(c.bits() == 300);
    CHECK(c.to_string(5) == "3.3333e-1");
    CHECK(BigReal(-1234.5, 64).to_string(10) == "-1.2345e3");
    CHECK(BigReal(0L, 64).to_string(5) == "0");
}

TEST_CASE("moved-from values can be reassigned") {
    BigReal a(2L, 80);
    BigReal b = std::move(a);
    a = b;
    CHECK(a == b);
    BigReal c(5L, 64);
    c = std::move(b);
    CHECK(c.to_long() == 2);
}

TEST_CASE("complex arithmetic") {
    const mpfr_prec_t p = 200;
    BigComplex z(BigReal(1L, p), BigReal(2L, p));
    BigComplex w(BigReal(3L, p), BigReal(-1L, p));
    BigComplex prod = z * w;
    CHECK(prod.re().to_long() == 5);
    CHECK(prod.im().to_long() == 5);
    BigComplex q = prod / w;
    CHECK(agreeing_digits(q, z) > 55);
    BigComplex e = exp(log(z));
    CHECK(agreeing_digits(e, z) > 55);
    BigComplex acc(p), scratch(p);
    acc.add_product(z, w, scratch);
    acc.add_product(z, w, scratch);
    CHECK(acc.re().to_long() == 10);
    CHECK(pow(z, 3).re().to_long() == -11);
    CHECK(pow(z, 3).im().to_long() == -2);
    BigComplex s = sqrt(BigComplex(BigReal(-4L, p)));
    CHECK(s.im().to_long() == 2);
}

TEST_CASE("exact factorial and binomial helpers") {
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-2, 3) == -4);
}

TEST_CASE("rational strings round trip") {
    BigRational q(-22, 6);
    q.canonicalize();
    CHECK(rational_to_string(q) == "-11/3");
    CHECK(rational_from_string("-11/3") == q);
    CHECK(rational_from_string("7") == BigRational(7));
}

TEST_CASE("jet exp and log are inverse") {
    const mpfr_prec_t p = 160;
    Jet<BigReal> f(6, p);
    for (int i = 0; i <= 6; ++i) f[i] = BigReal(static_cast<long>(i * i - 2 * i + 1), p) / 7L;
    Jet<BigReal> g = jet_log(jet_exp(f));
    for (int i = 0; i <= 6; ++i) CHECK(agreeing_digits(g[i], f[i]) > 40);
    Jet<BigReal> one = f * jet_inverse(f);
    CHECK(agreeing_digits(one[0], BigReal(1L, p)) > 45);
    for (int i = 1; i <= 6; ++i) CHECK(abs(one[i]).to_double() < 1e-40);
}

TEST_CASE("interpolation recovers a polynomial exactly") {
    KPolynomial p{{BigRational(0), BigRational(0), BigRational(-1, 2), BigRational(0), BigRational(1, 2)}};
    std::vector<std::pair<BigRational, BigRational>> pts;
    for (int k = 1; k <= 11; ++k) pts.emplace_back(k, evaluate_kpoly(p, BigRational(k)));
    KPolynomial q = interpolate_kpoly(pts, 8);
    CHECK(q == p);
    CHECK(q.degree() == 4);
    pts.back().second += 1;
    CHECK_THROWS_AS(interpolate_kpoly(pts, 8), InconsistentInterpolation);
}

TEST_CASE("polynomial evaluation at complex k") {
    KPolynomial p{{BigRational(1), BigRational(2), BigRational(3)}};
    BigComplex k(BigReal(1L, 100), BigReal(1L, 100));
    BigComplex v = evaluate_kpoly(p, k);  // 1 + 2(1+i) + 3(2i) = 3 + 8i
    CHECK(v.re().to_long() == 3);
    CHECK(v.im().to_long() == 8);
}
