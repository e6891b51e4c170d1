#pragma once

// Truncated univariate power series a_0 + a_1 h + ... + a_n h^n.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zetamoments/bignum.hpp"

namespace zm {

template <class T>
class Jet {
public:
    Jet() = default;
    Jet(std::size_t order, mpfr_prec_t bits) : c_(order + 1, T(bits)), bits_(bits) {}
    explicit Jet(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("Jet: empty coefficient list");
        bits_ = c_[0].bits();
    }

    std::size_t order() const { return c_.size() - 1; }
    mpfr_prec_t bits() const { return bits_; }
    T& operator[](std::size_t i) { return c_[i]; }
    const T& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<T>& coefficients() const { return c_; }

    Jet& operator+=(const Jet& o) {
        for (std::size_t i = 0; i < c_.size() && i < o.c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (std::size_t i = 0; i < c_.size() && i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Jet& operator*=(long s) { return scale(s); }
    Jet& operator/=(long s) {
        for (auto& x : c_) x /= s;
        return *this;
    }
    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    Jet operator-() const {
        Jet r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    template <class S>
    Jet& scale(const S& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend Jet operator*(const Jet& a, const Jet& b) {
        std::size_t n = std::min(a.order(), b.order());
        Jet r(n, std::max(a.bits_, b.bits_));
        T scratch(r.bits_);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; i + j <= n; ++j) r.c_[i + j].add_product(a.c_[i], b.c_[j], scratch);
        return r;
    }

    // Multiply in place by (x + h).
    void mul_linear(const T& x) {
        for (std::size_t i = c_.size(); i-- > 0;) {
            T v = c_[i] * x;
            if (i > 0) v += c_[i - 1];
            c_[i] = std::move(v);
        }
    }

private:
    std::vector<T> c_;
    mpfr_prec_t bits_ = 64;
};

// 1/f, requires f[0] != 0.
template <class T>
Jet<T> jet_inverse(const Jet<T>& f) {
    std::size_t n = f.order();
    Jet<T> g(n, f.bits());
    g[0] = T(1L, f.bits()) / f[0];
    T scratch(f.bits());
    for (std::size_t m = 1; m <= n; ++m) {
        T s(f.bits());
        for (std::size_t j = 1; j <= m; ++j) s.add_product(f[j], g[m - j], scratch);
        g[m] = -(s * g[0]);
    }
    return g;
}

// exp(f) through the recurrence m g_m = sum_j j f_j g_{m-j}.
template <class T>
Jet<T> jet_exp(const Jet<T>& f) {
    std::size_t n = f.order();
    Jet<T> g(n, f.bits());
    g[0] = exp(f[0]);
    T scratch(f.bits());
    for (std::size_t m = 1; m <= n; ++m) {
        T s(f.bits());
        for (std::size_t j = 1; j <= m; ++j) {
            T fj = f[j] * static_cast<long>(j);
            s.add_product(fj, g[m - j], scratch);
        }
        g[m] = s / static_cast<long>(m);
    }
    return g;
}

// log(f), requires f[0] != 0 (principal branch for the constant).
template <class T>
Jet<T> jet_log(const Jet<T>& f) {
    std::size_t n = f.order();
    Jet<T> g(n, f.bits());
    g[0] = log(f[0]);
    T scratch(f.bits());
    for (std::size_t m = 1; m <= n; ++m) {
        T s = f[m] * static_cast<long>(m);
        for (std::size_t j = 1; j < m; ++j) {
            T gj = g[j] * static_cast<long>(j);
            T t = gj * f[m - j];
            s -= t;
        }
        g[m] = s / (f[0] * static_cast<long>(m));
    }
    return g;
}

// Series of exp(a h) with scalar a: a^j / j!.
template <class T>
Jet<T> jet_exp_linear(const T& a, std::size_t order, mpfr_prec_t bits) {
    Jet<T> g(order, bits);
    g[0] = T(1L, bits);
    for (std::size_t j = 1; j <= order; ++j) g[j] = g[j - 1] * a / static_cast<long>(j);
    return g;
}

}  // namespace zm
