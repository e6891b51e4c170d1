#pragma once

// Conjectured against measured moments: the integral of P_k(log(t/2 pi))
// over [C, D] next to the integral of |zeta(1/2 + it)|^{2k}.

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zetamoments/bignum.hpp"
#include "zetamoments/moment_polynomial.hpp"

namespace zm {

// Integral over [C, D] of c_r log(t/2 pi)^{k^2 - r}, one entry per r <= R
// (R < 0 means every coefficient). Integer exponents use the exact
// antiderivative and allow C = 0; other exponents are integrated in
// u = log(t/2 pi) by composite Gauss-Legendre and need C > 2 pi.
std::vector<BigComplex> conjecture_terms(const MomentPolynomial& poly, const BigReal& C, const BigReal& D,
                                         const PrecisionContext& ctx, int R = -1);

BigComplex conjecture_integral(const MomentPolynomial& poly, const BigReal& C, const BigReal& D,
                               const PrecisionContext& ctx, int R = -1);

// The same integral by quadrature even for integer exponents (needs C > 0).
// Independent check on the closed form.
BigComplex conjecture_integral_quadrature(const MomentPolynomial& poly, const BigReal& C, const BigReal& D,
                                          const PrecisionContext& ctx, int R = -1);

// (R, partial sum through c_R) for R = 0..order.
std::vector<std::pair<int, BigComplex>> truncation_sweep(const MomentPolynomial& poly, const BigReal& C,
                                                         const BigReal& D, const PrecisionContext& ctx);

// Above this height the data side is a long run and must be asked for.
constexpr double kDeskScaleHeight = 1e5;

struct DataOptions {
    int digits = 10;          // per-panel relative tolerance 10^-digits, at most 12
    double max_panel = 0.5;   // widest panel before error control
    int threads = 1;
    bool allow_long = false;  // permit D above the desk-scale height
    // Called with the finished fraction of panels.
    std::function<void(double)> progress;
};

struct DataMoment {
    std::complex<double> value;
    double error_estimate = 0;  // sum of per-panel estimates
    long panels = 0;            // accepted panels
    long evaluations = 0;       // zeta evaluations, root finding included
};

// Integral of |zeta(1/2 + it)|^{2k} over [C, D] in double precision.
// Panels are split at the zeros of Hardy's Z when 2k is not an even
// integer, so every panel integrand is analytic inside.
DataMoment data_moment(const BigComplex& k, double C, double D, const DataOptions& opt = {});

struct IntervalResult {
    int n = 0;
    double C = 0, D = 0;
    BigComplex k;
    int R = 0;
    BigComplex conjectured;
    bool has_data = false;
    std::complex<double> data;
    std::complex<double> relative_error;  // (conjectured - data) / data
};

struct TableOptions {
    int method = 1;                   // 1 determinant, 2 shifts (integer k)
    int R = -1;                       // -1: default order (all for integer k)
    int digits = 20;                  // coefficient digits
    std::uint64_t prime_cutoff = 0;   // 0: the method default
    bool with_data = true;
    DataOptions data;
};

// Each interval is (n, C, D). Rows come out ordered by k then interval.
std::vector<IntervalResult> run_table(const std::vector<BigComplex>& ks,
                                      const std::vector<std::tuple<int, double, double>>& intervals,
                                      const TableOptions& opt);

// The same from coefficients already at hand.
std::vector<IntervalResult> run_table(const std::vector<MomentPolynomial>& polys,
                                      const std::vector<std::tuple<int, double, double>>& intervals,
                                      const TableOptions& opt);

// [50000 n, 50000 (n + 1)] for n = first..last.
std::vector<std::tuple<int, double, double>> block_intervals(int first, int last, double width = 50000);

// Columns n,C,D,k,R,conjectured,data,rel_error; complex entries as a+bi.
std::string results_to_csv(const std::vector<IntervalResult>& rows, int digits = 12);
std::string results_to_json(const std::vector<IntervalResult>& rows, int digits = 12);
// k,n,rel_error rows for plotting the relative error against n.
std::string figure_data_csv(const std::vector<IntervalResult>& rows);

// Locale-independent rendering with the given significant digits.
std::string format_double(double x, int digits = 12);
std::string format_complex_double(std::complex<double> z, int digits = 12);

}  // namespace zm
