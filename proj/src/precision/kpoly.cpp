#include "zetamoments/kpoly.hpp"

#include "zetamoments/errors.hpp"

namespace zm {

int KPolynomial::degree() const {
    for (int i = static_cast<int>(coefficients.size()) - 1; i >= 0; --i)
        if (coefficients[i] != 0) return i;
    return -1;
}

void KPolynomial::trim() { coefficients.resize(static_cast<std::size_t>(degree() + 1)); }

bool operator==(const KPolynomial& a, const KPolynomial& b) {
    int d = a.degree();
    if (d != b.degree()) return false;
    for (int i = 0; i <= d; ++i)
        if (a.coefficients[i] != b.coefficients[i]) return false;
    return true;
}

BigRational evaluate_kpoly(const KPolynomial& p, const BigRational& k) {
    BigRational acc = 0;
    for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it) acc = acc * k + *it;
    return acc;
}

BigComplex evaluate_kpoly(const KPolynomial& p, const BigComplex& k) {
    mpfr_prec_t bits = k.bits();
    BigComplex acc(bits);
    for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it) {
        acc *= k;
        acc += BigComplex(BigReal(*it, bits));
    }
    return acc;
}

KPolynomial interpolate_kpoly(const std::vector<std::pair<BigRational, BigRational>>& points, int degree_bound) {
    if (degree_bound < 0) throw DomainError("interpolate_kpoly: negative degree bound");
    std::size_t n = static_cast<std::size_t>(degree_bound) + 1;
    if (points.size() < n) throw DomainError("interpolate_kpoly: not enough points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first) throw DomainError("interpolate_kpoly: repeated abscissa");

    // Newton divided differences on the first n points.
    std::vector<BigRational> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

    // Expand the Newton form into monomial coefficients.
    std::vector<BigRational> c(n, BigRational(0));
    for (std::size_t i = n; i-- > 0;) {
        // c <- c * (k - x_i) + dd_i
        const BigRational& xi = points[i].first;
        for (std::size_t j = n - 1; j > 0; --j) c[j] = c[j - 1] - xi * c[j];
        c[0] = -xi * c[0] + dd[i];
    }
    KPolynomial p{std::move(c)};
    p.trim();
    for (std::size_t i = n; i < points.size(); ++i)
        if (evaluate_kpoly(p, points[i].first) != points[i].second)
            throw InconsistentInterpolation("interpolate_kpoly: consistency point k=" +
                                            rational_to_string(points[i].first) + " off the polynomial");
    return p;
}

}  // namespace zm
