#pragma once

// Special functions at arbitrary precision: Riemann zeta jets, Stieltjes
// constants, prime zeta sums, Gauss hypergeometric function, the theta
// integral of a product of geometric factors, log-gamma and Barnes G.

#include <complex>
#include <cstdint>
#include <vector>

#include "zetamoments/bignum.hpp"
#include "zetamoments/jet.hpp"

namespace zm {

// B_0, B_2, ..., B_{2n} exactly.
std::vector<BigRational> bernoulli_even(int n);

// Eulerian numbers E(c, l): permutations of c letters with l descents.
class EulerianTable {
public:
    explicit EulerianTable(int c_max);
    int c_max() const { return c_max_; }
    const BigInteger& operator()(int c, int l) const;

private:
    int c_max_;
    std::vector<std::vector<BigInteger>> rows_;
};

// zeta^{(j)}(s)/j! for j = 0..order at a real point s. At s = 1 the
// coefficients are those of the regular part zeta(1+h) - 1/h.
Jet<BigReal> zeta_jet(const BigReal& s, int order, const PrecisionContext& ctx);

// Taylor coefficients of log zeta(s + h), s > 1.
Jet<BigReal> log_zeta_jet(const BigReal& s, int order, const PrecisionContext& ctx);

// r-th derivative of log zeta at real s > 1.
BigReal log_zeta_derivative(int r, const BigReal& s, const PrecisionContext& ctx);

// gamma_0 .. gamma_{n_max}.
std::vector<BigReal> stieltjes(int n_max, const PrecisionContext& ctx);

// sum over all primes of log(p)^r / p^s, s > 1.
BigReal prime_zeta_log(int r, const BigReal& s, const PrecisionContext& ctx);

// sum over primes p > cutoff of log(p)^r / p^s for r = 0..r_max.
std::vector<BigReal> prime_tail_sums(int r_max, long s, std::uint64_t cutoff, const PrecisionContext& ctx);

// 2F1(a, b; c; x) for real 0 <= x < 1 by its defining series.
BigComplex gauss_2f1(const BigComplex& a, const BigComplex& b, const BigComplex& c, const BigReal& x,
                     const PrecisionContext& ctx);

// Integral over [0,1] of (1 - e(u) sqrt t)^-A (1 - e(-u) sqrt t)^-B e(C u) du.
BigComplex theta_integral(const BigComplex& A, const BigComplex& B, long C, const BigReal& t,
                          const PrecisionContext& ctx);

// zeta(s) for complex s != 1 by Euler-Maclaurin summation.
BigComplex zeta_complex(const BigComplex& s, const PrecisionContext& ctx);
BigComplex zeta_critical_line(const BigReal& t, const PrecisionContext& ctx);

// Double precision zeta(1/2 + it) for |t| <= t_max, with log n and n^-1/2
// tabulated once for the long quadratures.
class CriticalLineZeta {
public:
    explicit CriticalLineZeta(double t_max);
    double t_max() const;
    std::complex<double> operator()(double t) const;
    // Hardy's Z(t) = e^{i theta(t)} zeta(1/2 + it), real; t >= 10.
    double hardy_z(double t) const;

private:
    std::vector<double> log_;
    std::vector<double> rsqrt_;
};

// Riemann-Siegel theta by its Stirling series; t >= 10.
double riemann_siegel_theta(double t);

std::complex<double> zeta_critical_line_fast(double t);

// log Gamma(z) for Re z > 0, continuous branch that is real on the real axis.
BigComplex log_gamma(const BigComplex& z, const PrecisionContext& ctx);

// log G(z) for the Barnes G-function, Re z > 0 (up to multiples of 2 pi i).
BigComplex log_barnes_g(const BigComplex& z, const PrecisionContext& ctx);

// zeta'(-1).
BigReal zeta_prime_minus_one(const PrecisionContext& ctx);

}  // namespace zm
