#pragma once

// Exponent shapes (alpha; beta) and truncated power series in two blocks of
// variables that are symmetric within each block.
//
// A shape indexes the class of monomials
//   z_1^{a_1} ... z_k^{a_k} * w_1^{b_1} ... w_k^{b_k}
// obtained by permuting variables inside each block. Series store one
// coefficient per canonical shape: the coefficient of the representative
// monomial in which the exponents sit on the leading variables in
// decreasing order. The class of (beta; alpha) is folded onto (alpha; beta)
// through the reflection z <-> -w, which multiplies a coefficient by
// (-1)^{|alpha|+|beta|}. Every series handled here has that reflection
// symmetry.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "zetamoments/bignum.hpp"

namespace zm {

using Partition = std::vector<int>;  // weakly decreasing positive parts

struct ExponentShape {
    Partition alpha;
    Partition beta;

    int weight() const;
    bool empty() const { return alpha.empty() && beta.empty(); }
    // Canonical iff both lists are sorted, zero free, and alpha >= beta.
    bool is_canonical() const;
    std::string to_string() const;  // "(2,1;1)"
    static ExponentShape parse(const std::string& text);

    friend bool operator==(const ExponentShape&, const ExponentShape&) = default;
    friend auto operator<=>(const ExponentShape&, const ExponentShape&) = default;
};

int weight(const ExponentShape& s);
int part_sum(const Partition& p);

// 1 when alpha == beta.
int shape_delta(const ExponentShape& s);

// Canonical key and the sign relating the two coefficients.
struct SignedShape {
    ExponentShape shape;
    int sign = 1;
};
SignedShape canonicalize(std::vector<int> alpha, std::vector<int> beta);

// Partitions of n with at most max_parts parts, in decreasing lexicographic order.
std::vector<Partition> partitions(int n, int max_parts);

// Number of monomials in 2k variables whose shape, or its reflection, is s.
BigInteger shape_count_dk(const ExponentShape& s, long k);

// All canonical shapes of weight <= order whose blocks have at most
// width parts each, ordered by weight and then lexicographically. A
// balanced basis keeps only shapes with |alpha| = |beta|, which is closed
// under multiplication.
class ShapeBasis {
public:
    ShapeBasis(int order, int width, bool balanced = false);

    int order() const { return order_; }
    int width() const { return width_; }
    bool balanced() const { return balanced_; }
    std::size_t size() const { return shapes_.size(); }
    const ExponentShape& shape(std::size_t i) const { return shapes_[i]; }
    int weight(std::size_t i) const { return weights_[i]; }
    // Index of a canonical shape, -1 if absent.
    long index(const ExponentShape& s) const;
    // Range of indices [first, last) with the given weight.
    std::pair<std::size_t, std::size_t> weight_range(int w) const;

    struct Term {
        std::uint32_t left;
        std::uint32_t right;
        long multiplicity;  // signed count of splittings
    };
    // Splittings of each target shape's representative monomial into a
    // product of two representatives.
    const std::vector<Term>& product_terms(std::size_t target) const;

private:
    int order_;
    int width_;
    bool balanced_;
    std::vector<ExponentShape> shapes_;
    std::vector<int> weights_;
    std::map<ExponentShape, std::uint32_t> index_;
    std::vector<std::size_t> weight_start_;
    std::vector<std::vector<Term>> terms_;
};

// Shared basis instance for (order, width, balanced).
std::shared_ptr<const ShapeBasis> shape_basis(int order, int width, bool balanced = false);

// Kernels on raw coefficient vectors indexed by a basis. The coefficient
// type needs +=, -=, *, *= long, /= long and is_zero(); outputs must be
// sized to the basis and zero filled.

template <class C>
void basis_multiply(const ShapeBasis& B, const std::vector<C>& a, const std::vector<C>& b, std::vector<C>& out) {
    for (std::size_t t = 0; t < B.size(); ++t) {
        for (const auto& term : B.product_terms(t)) {
            if (a[term.left].is_zero() || b[term.right].is_zero()) continue;
            C prod = a[term.left] * b[term.right];
            if (term.multiplicity != 1) prod *= term.multiplicity;
            out[t] += prod;
        }
    }
}

// exp through the degree recurrence n F_v = sum (weight of left) G_left F_right;
// the caller sets out[0] to the unit.
template <class C>
void basis_exp(const ShapeBasis& B, const std::vector<C>& s, std::vector<C>& out) {
    for (int n = 1; n <= B.order(); ++n) {
        auto [lo, hi] = B.weight_range(n);
        for (std::size_t t = lo; t < hi; ++t) {
            for (const auto& term : B.product_terms(t)) {
                const int wl = B.weight(term.left);
                if (wl == 0 || s[term.left].is_zero() || out[term.right].is_zero()) continue;
                C prod = s[term.left] * out[term.right];
                prod *= term.multiplicity * wl;
                out[t] += prod;
            }
            out[t] /= static_cast<long>(n);
        }
    }
}

// log through the same recurrence solved for the left factor; the caller
// sets out[0] to log f[0] and passes 1/f[0].
template <class C>
void basis_log(const ShapeBasis& B, const std::vector<C>& f, const C& inv_f0, std::vector<C>& out) {
    for (int n = 1; n <= B.order(); ++n) {
        auto [lo, hi] = B.weight_range(n);
        for (std::size_t t = lo; t < hi; ++t) {
            C acc = f[t];
            acc *= static_cast<long>(n);
            for (const auto& term : B.product_terms(t)) {
                const int wl = B.weight(term.left);
                if (wl == 0 || term.left == t || out[term.left].is_zero() || f[term.right].is_zero()) continue;
                C prod = out[term.left] * f[term.right];
                prod *= term.multiplicity * wl;
                acc -= prod;
            }
            C scaled = acc * inv_f0;
            scaled /= static_cast<long>(n);
            out[t] = std::move(scaled);
        }
    }
}

class SymmetricSeries {
public:
    SymmetricSeries() = default;
    SymmetricSeries(std::shared_ptr<const ShapeBasis> basis, mpfr_prec_t bits);

    const ShapeBasis& basis() const { return *basis_; }
    std::shared_ptr<const ShapeBasis> basis_ptr() const { return basis_; }
    int order() const { return basis_->order(); }
    mpfr_prec_t bits() const { return bits_; }

    BigComplex& constant() { return c_[0]; }
    const BigComplex& constant() const { return c_[0]; }
    BigComplex& operator[](std::size_t i) { return c_[i]; }
    const BigComplex& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<BigComplex>& coefficients() const { return c_; }

    // Coefficient of an arbitrary (possibly non-canonical) shape.
    BigComplex at(const ExponentShape& s) const;
    void set(const ExponentShape& canonical, const BigComplex& v);

    SymmetricSeries& operator+=(const SymmetricSeries& o);
    SymmetricSeries& operator-=(const SymmetricSeries& o);
    SymmetricSeries& operator*=(const BigComplex& s);

private:
    std::shared_ptr<const ShapeBasis> basis_;
    mpfr_prec_t bits_ = 64;
    std::vector<BigComplex> c_;
};

SymmetricSeries series_multiply(const SymmetricSeries& a, const SymmetricSeries& b);
// exp(s); throws NonzeroConstant unless s has zero constant term.
SymmetricSeries series_exp(const SymmetricSeries& s);
// log(s); requires a nonzero constant term, principal log of it.
SymmetricSeries series_log(const SymmetricSeries& s);

// Series of sum_{i,j} g(z_i - w_j) for a one-variable series g with
// coefficients g[0..order]; k is the block size.
SymmetricSeries pair_series(const std::shared_ptr<const ShapeBasis>& basis, const std::vector<BigComplex>& g,
                            const BigComplex& k, mpfr_prec_t bits);

}  // namespace zm
