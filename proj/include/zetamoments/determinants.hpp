#pragma once

// Reciprocal-factorial determinants attached to rearrangements of a shape,
// and the combinatorial factor N_k(alpha; beta) built from them.

#include <filesystem>
#include <map>
#include <mutex>
#include <vector>

#include "zetamoments/bignum.hpp"
#include "zetamoments/kpoly.hpp"
#include "zetamoments/shapes.hpp"

namespace zm {

// Exact value of the 2k x 2k determinant with rows
//   1/(2k - i - a_i - j)!                        (top rows i = 1..k)
//   (-1)^{i + j} / (2k - i - b_i - j)!          (bottom rows i = 1..k)
// over columns j = 0..2k-1, times (-1)^{sum b}. 1/m! is zero for m < 0.
BigRational mtilde(long k, const std::vector<int>& top, const std::vector<int>& bottom);

// The same determinant (without the (-1)^{sum b} factor) through the k x k
// binomial determinant det[binom(c_j, e_i + i - 1)], c the complement of
// {f_i + i - 1} in {0..2k-1}. Independent second implementation.
BigRational binomial_det_oracle(long k, const std::vector<int>& e, const std::vector<int>& f);

// True when a rearrangement can give a nonzero determinant: its leading
// k - |a| entries vanish.
bool prune(long k, const std::vector<int>& arrangement);
bool prune(long k, const std::vector<int>& top, const std::vector<int>& bottom);

// Distinct orderings of the parts padded with zeros to length k, in
// lexicographic order. With survivors_only, only those passing prune()
// whose shifted row indices i + a_i are distinct (otherwise two rows agree).
std::vector<std::vector<int>> rearrangements(const Partition& parts, long k, bool survivors_only);

// N_k(alpha; beta) at an integer k >= the number of parts of each block.
BigRational nk_raw(long k, const ExponentShape& s, bool use_pruning = true);

// N_k as an exact polynomial in k, found by interpolation with two extra
// consistency points.
KPolynomial nk_polynomial(const ExponentShape& s);

// Thread-safe memo of N_k polynomials with optional JSON persistence.
class NkCache {
public:
    NkCache() = default;
    explicit NkCache(std::filesystem::path file);

    const KPolynomial& get(const ExponentShape& s);
    bool contains(const ExponentShape& s) const;
    void insert(const ExponentShape& s, KPolynomial p);
    std::size_t size() const;

    void load(const std::filesystem::path& file);
    void save(const std::filesystem::path& file) const;
    // Saves to the file given at construction, if any.
    void flush() const;

private:
    mutable std::mutex mu_;
    std::map<ExponentShape, KPolynomial> polys_;
    std::filesystem::path file_;
};

// Process-wide cache, seeded from the data file shipped with the build.
NkCache& default_nk_cache();

}  // namespace zm
