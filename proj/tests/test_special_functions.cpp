#include <cmath>

#include "doctest.h"
#include "zetamoments/errors.hpp"
#include "zetamoments/special_functions.hpp"

using namespace zm;

namespace {

const PrecisionContext kCtx(30);

BigReal R(const char* s) { return BigReal(std::string(s), kCtx.bits()); }
BigComplex C(const char* re, const char* im) { return BigComplex(R(re), R(im)); }

}  // namespace

// Reference values below come from tests/oracles/special_values.py.

TEST_CASE("Bernoulli numbers") {
    auto b = bernoulli_even(6);
    CHECK(b[1] == BigRational(1, 6));
    CHECK(b[2] == BigRational(-1, 30));
    CHECK(b[3] == BigRational(1, 42));
    CHECK(b[6] == BigRational(-691, 2730));
}

TEST_CASE("Eulerian numbers and row sums") {
    EulerianTable e(12);
    CHECK(e(3, 0) == 1);
    CHECK(e(3, 1) == 4);
    CHECK(e(3, 2) == 1);
    CHECK(e(4, 1) == 11);
    CHECK(e(5, 2) == 66);
    CHECK(e(0, 0) == 1);
    for (int c = 1; c <= 12; ++c) {
        BigInteger sum = 0;
        for (int l = 0; l < c; ++l) sum += e(c, l);
        CHECK(sum == factorial(c));
        for (int l = 0; l < c; ++l) CHECK(e(c, l) == e(c, c - 1 - l));
    }
}

TEST_CASE("Eulerian generating function for sum m^c w^m") {
    EulerianTable e(6);
    const double w = 0.3;
    for (int c = 1; c <= 6; ++c) {
        double direct = 0;
        for (int m = 0; m < 400; ++m) direct += std::pow(m, c) * std::pow(w, m);
        double poly = 0;
        for (int l = 0; l < c; ++l) poly += e(c, l).get_d() * std::pow(w, l + 1);
        CHECK(direct == doctest::Approx(poly / std::pow(1 - w, c + 1)).epsilon(1e-12));
    }
}

TEST_CASE("zeta jets against reference values and MPFR zeta") {
    Jet<BigReal> j2 = zeta_jet(BigReal(2L, kCtx.bits()), 2, kCtx);
    CHECK(agreeing_digits(j2[0], R("1.644934066848226436472415166646025189219")) > 38);
    CHECK(agreeing_digits(j2[1], R("-0.9375482543158437537025740945678649778979")) > 38);
    CHECK(agreeing_digits(j2[2], R("0.9946401171494505117104293437107581907472")) > 38);
    Jet<BigReal> j35 = zeta_jet(R("3.5"), 3, kCtx);
    CHECK(agreeing_digits(j35[0], zeta_real(R("3.5"))) > 38);
    CHECK(agreeing_digits(j35[3], R("-0.02539027354496977818481125997211869938919")) > 37);
    PrecisionContext high(200);
    Jet<BigReal> big = zeta_jet(BigReal(7L, high.bits()), 0, high);
    CHECK(agreeing_digits(big[0], zeta_real(BigReal(7L, high.bits()))) > 205);
}

TEST_CASE("Stieltjes constants") {
    auto g = stieltjes(20, kCtx);
    CHECK(agreeing_digits(g[0], BigReal::euler_gamma(kCtx.bits())) > 38);
    CHECK(agreeing_digits(g[1], R("-0.07281584548367672486058637587490131913774")) > 37);
    CHECK(agreeing_digits(g[2], R("-0.009690363192872318484530386035212529359066")) > 36);
    CHECK(agreeing_digits(g[5], R("0.0007933238173010627017533348774444448307315")) > 35);
    CHECK(agreeing_digits(g[10], R("0.0002053328149090647946837222892370653029599")) > 33);
    CHECK(agreeing_digits(g[20], R("0.0004663435615115594494005948244335505251131")) > 28);
    CHECK(std::fabs(g[1].to_double() + 0.0728158454836767) < 1e-16);
}

TEST_CASE("s zeta(1+s) expansion coefficients") {
    // s zeta(1+s) = 1 + gamma_0 s - gamma_1 s^2 + ...
    auto g = stieltjes(2, kCtx);
    Jet<BigReal> reg = zeta_jet(BigReal(1L, kCtx.bits()), 2, kCtx);
    CHECK(agreeing_digits(reg[0], g[0]) > 38);
    CHECK(agreeing_digits(reg[1], -g[1]) > 38);
    CHECK(agreeing_digits(reg[2], g[2] / 2L) > 38);
}

TEST_CASE("log zeta derivatives") {
    CHECK(agreeing_digits(log_zeta_derivative(1, BigReal(2L, kCtx.bits()), kCtx),
                          R("-0.5699609930945328063998643600197300024035")) > 38);
    CHECK(agreeing_digits(log_zeta_derivative(2, BigReal(2L, kCtx.bits()), kCtx),
                          R("0.8844818339635238851965361538706511685887")) > 38);
    CHECK(agreeing_digits(log_zeta_derivative(3, BigReal(4L, kCtx.bits()), kCtx),
                          R("-0.05615036693338425834773609111685075537205")) > 37);
    CHECK_THROWS_AS(log_zeta_derivative(1, BigReal(1L, kCtx.bits()), kCtx), DomainError);
}

TEST_CASE("prime zeta sums") {
    BigReal two(2L, kCtx.bits()), three(3L, kCtx.bits());
    CHECK(agreeing_digits(prime_zeta_log(0, two, kCtx), R("0.4522474200410654985065433648322479341732")) > 38);
    CHECK(agreeing_digits(prime_zeta_log(1, two, kCtx), R("0.4930911093687644621978262050564912580556")) > 38);
    CHECK(agreeing_digits(prime_zeta_log(0, three, kCtx), R("0.1747626392994435364231133146657067009754")) > 38);
    CHECK(agreeing_digits(prime_zeta_log(2, three, kCtx), R("0.149980584342086854561326491583983725113")) > 37);
    CHECK(std::fabs(prime_zeta_log(0, two, kCtx).to_double() - 0.4522474200410654) < 1e-15);
}

TEST_CASE("prime tail sums match direct summation") {
    // sum over 100 < p <= 200000 of log(p)/p^3 plus the remainder beyond 2e5,
    // which is below 1e-10 and far smaller than the tolerance used here
    auto tail = prime_tail_sums(1, 3, 100, kCtx);
    double direct = 0;
    for (long p = 101; p < 200000; ++p) {
        bool prime = true;
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (prime) direct += std::log(static_cast<double>(p)) / std::pow(static_cast<double>(p), 3);
    }
    CHECK(tail[1].to_double() == doctest::Approx(direct).epsilon(1e-8));
}

TEST_CASE("hypergeometric 2F1") {
    PrecisionContext ctx = kCtx;
    CHECK(agreeing_digits(gauss_2f1(C("1.5", "0"), C("2.5", "0"), C("1", "0"), R("0.3"), ctx),
                          C("3.55879727685615863087542286912066450526", "0")) > 38);
    CHECK(agreeing_digits(gauss_2f1(C("0.5", "1"), C("3.5", "1"), C("4", "0"), R("0.5"), ctx),
                          C("0.8277996480743429734049280499903418938007", "0.6876042263693202570477149744140637373454")) > 38);
    CHECK(agreeing_digits(gauss_2f1(C("2.25", "0"), C("2.25", "0"), C("1", "0"), R("0.9"), ctx),
                          C("7676.161029846788032497919955570151995096", "0")) > 37);
    CHECK_THROWS_AS(gauss_2f1(C("1", "0"), C("1", "0"), C("1", "0"), R("1"), ctx), DomainError);
}

TEST_CASE("hypergeometric identities") {
    // 2F1(1,1;2;x) = -log(1-x)/x and 2F1(a,b;b;x) = (1-x)^-a
    BigReal x = R("0.37");
    BigComplex v = gauss_2f1(C("1", "0"), C("1", "0"), C("2", "0"), x, kCtx);
    CHECK(agreeing_digits(v, BigComplex(-log(1L - x) / x)) > 38);
    BigComplex a = C("1.25", "0.5");
    BigComplex w = gauss_2f1(a, C("3.5", "0"), C("3.5", "0"), x, kCtx);
    CHECK(agreeing_digits(w, exp(-(a * log(BigComplex(1L - x))))) > 38);
    // Euler transformation 2F1(a,b;c;x) = (1-x)^(c-a-b) 2F1(c-a,c-b;c;x)
    BigComplex b = C("2.5", "-0.25"), c = C("4", "0");
    BigComplex lhs = gauss_2f1(a, b, c, x, kCtx);
    BigComplex rhs = exp((c - a - b) * log(BigComplex(1L - x))) * gauss_2f1(c - a, c - b, c, x, kCtx);
    CHECK(agreeing_digits(lhs, rhs) > 37);
}

TEST_CASE("theta integral matches quadrature") {
    CHECK(agreeing_digits(theta_integral(C("3", "0"), C("2", "0"), 1, R("0.25"), kCtx),
                          C("3.555555555555555555555555555555555555556", "0")) > 38);
    CHECK(agreeing_digits(theta_integral(C("2", "0"), C("4", "0"), -2, R("0.1"), kCtx),
                          C("0.5249877220613388880421344984673745533371", "0")) > 38);
    CHECK(agreeing_digits(theta_integral(C("1.5", "1"), C("2.5", "1"), 0, R("0.5"), kCtx),
                          C("-5.372910725060356883726592154056175429727", "8.127777353400726489801814150609647204613")) > 37);
}

TEST_CASE("complex zeta") {
    BigComplex z = zeta_critical_line(BigReal(0L, kCtx.bits()), kCtx);
    CHECK(agreeing_digits(z, C("-1.460354508809586812889499152515298012467", "0")) > 38);
    CHECK(std::fabs(z.re().to_double() + 1.4603545088095868) < 1e-15);
    CHECK(agreeing_digits(zeta_critical_line(R("1"), kCtx),
                          C("0.1439364270771890603243896664837215790356", "-0.7220997435316730891261751345803249250132")) > 38);
    CHECK(agreeing_digits(zeta_critical_line(R("100"), kCtx),
                          C("2.692619885681324090476096470521590577063", "-0.02038602960259816177072685329832152099173")) > 37);
    CHECK(agreeing_digits(zeta_complex(C("2", "3"), kCtx),
                          C("0.7980219851462757206222945007248126860252", "-0.1137443080529385002159133658573150755701")) > 38);
    // first nontrivial zero
    BigComplex z1 = zeta_critical_line(R("14.134725141734693790457251983562470270784"), kCtx);
    CHECK(abs(z1).to_double() < 1e-35);
}

TEST_CASE("fast critical-line zeta agrees with the precise one") {
    for (double t : {0.0, 1.0, 14.5, 100.0, 1234.5, 2000.25}) {
        std::complex<double> f = zeta_critical_line_fast(t);
        BigComplex p = zeta_critical_line(BigReal(t, kCtx.bits()), PrecisionContext(20));
        CHECK(std::abs(f - std::complex<double>(p.re().to_double(), p.im().to_double())) < 1e-10);
    }
}

TEST_CASE("log gamma and Barnes G") {
    CHECK(agreeing_digits(log_gamma(C("0.5", "1"), kCtx),
                          C("-0.6527906442043729152730650712207613681892", "-0.9550077243425691095632251287345195356053")) > 38);
    CHECK(agreeing_digits(log_gamma(C("3.7", "0"), kCtx), C("1.428072326665387921872381125047550334507", "0")) > 38);
    CHECK(agreeing_digits(zeta_prime_minus_one(kCtx), R("-0.165421143700450929213919660242780642764")) > 38);
    CHECK(agreeing_digits(exp(log_barnes_g(C("1.5", "0"), kCtx)), C("1.069222649266412949543008878697891604653", "0")) > 38);
    CHECK(agreeing_digits(exp(log_barnes_g(C("2.5", "1"), kCtx)),
                          C("0.7437983125142641203475139049563338623517", "-0.09531678493947238693144958811601071148479")) > 37);
    // G(n) = prod_{j<n-1} j!
    CHECK(agreeing_digits(exp(log_barnes_g(C("5", "0"), kCtx)), C("12", "0")) > 38);
    CHECK(agreeing_digits(exp(log_barnes_g(C("7", "0"), kCtx)), C("34560", "0")) > 38);
}
