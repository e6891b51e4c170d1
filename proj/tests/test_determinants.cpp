#include <doctest.h>

#include <filesystem>
#include <numeric>
#include <set>

#include "zetamoments/determinants.hpp"
#include "zetamoments/errors.hpp"

using namespace zm;

namespace {

KPolynomial poly(std::initializer_list<long> c) {
    KPolynomial p;
    for (long x : c) p.coefficients.emplace_back(x);
    p.trim();
    return p;
}

BigRational q(long n, long d = 1) {
    BigRational r(n, d);
    r.canonicalize();
    return r;
}

// every canonical shape of the given weight with at most `width` parts per block
std::vector<ExponentShape> shapes_of_weight(int w, int width) {
    auto basis = shape_basis(w, width);
    auto [lo, hi] = basis->weight_range(w);
    std::vector<ExponentShape> out;
    for (std::size_t i = lo; i < hi; ++i) out.push_back(basis->shape(i));
    return out;
}

}  // namespace

TEST_CASE("small determinants by hand") {
    CHECK(mtilde(1, {0}, {0}) == 2);
    CHECK(mtilde(2, {0, 0}, {0, 0}) == q(4, 3));
    // equal shifted rows in the top block
    CHECK(mtilde(2, {1, 0}, {0, 0}) == 0);
    CHECK(binomial_det_oracle(1, {0}, {0}) == 2);
    CHECK(binomial_det_oracle(2, {0, 0}, {1, 0}) == 0);
    CHECK_THROWS_AS(binomial_det_oracle(2, {0, 0}, {0, 3}), ComplementUndefined);
}

TEST_CASE("survivor test on rearrangements") {
    CHECK_FALSE(prune(3, {1, 0, 0}));
    CHECK(prune(3, {0, 0, 1}));
    CHECK_FALSE(prune(2, {1, 0}));
    CHECK(rearrangements({2, 1}, 3, false).size() == 6);
    CHECK(rearrangements({1, 1}, 3, false).size() == 3);
    // survivors are also free of coinciding rows
    for (const auto& r : rearrangements({2, 1, 1}, 5, true)) {
        CHECK(prune(5, r));
        std::set<int> keys;
        for (int i = 0; i < 5; ++i) keys.insert(i + r[i]);
        CHECK(keys.size() == 5u);
    }
}

TEST_CASE("pruning does not change N_k") {
    for (int w = 0; w <= 4; ++w)
        for (const auto& s : shapes_of_weight(w, 4))
            for (long k = std::max<long>({1, (long)s.alpha.size(), (long)s.beta.size()}); k <= 4; ++k)
                CHECK_MESSAGE(nk_raw(k, s, true) == nk_raw(k, s, false), s.to_string() << " k=" << k);
    // an explicit weight five case at k = 3
    ExponentShape s = ExponentShape::parse("(2,1;1)");
    CHECK(nk_raw(3, s, true) == nk_raw(3, s, false));
}

TEST_CASE("determinant agrees with the binomial form") {
    for (long k = 1; k <= 3; ++k)
        for (int w = 0; w <= 4; ++w)
            for (const auto& s : shapes_of_weight(w, static_cast<int>(k))) {
                for (const auto& t : rearrangements(s.alpha, k, true))
                    for (const auto& b : rearrangements(s.beta, k, true)) {
                        BigRational m = mtilde(k, t, b);
                        bool outside = false;
                        for (long l = 0; l < k; ++l) outside = outside || b[l] + l > 2 * k - 1;
                        if (outside) {
                            // a lower row runs off the matrix: zero, and no complement exists
                            CHECK(m == 0);
                            CHECK_THROWS_AS(binomial_det_oracle(k, t, b), ComplementUndefined);
                            continue;
                        }
                        if (std::accumulate(b.begin(), b.end(), 0) % 2) m = -m;
                        CHECK_MESSAGE(m == binomial_det_oracle(k, t, b), s.to_string() << " k=" << k);
                    }
            }
}

TEST_CASE("N_k values at fixed k") {
    for (long k = 1; k <= 5; ++k) {
        CHECK(nk_raw(k, ExponentShape::parse("(;)")) == 1);
        CHECK(nk_raw(k, ExponentShape::parse("(1;)")) == k * k);
        CHECK(nk_raw(k, ExponentShape::parse("(2;)")) == 0);
    }
    CHECK(nk_raw(3, ExponentShape::parse("(1;1)")) == -72);
}

TEST_CASE("N_k closed forms") {
    CHECK(nk_polynomial(ExponentShape::parse("(;)")) == poly({1}));
    CHECK(nk_polynomial(ExponentShape::parse("(1;)")) == poly({0, 0, 1}));
    CHECK(nk_polynomial(ExponentShape::parse("(2;)")).is_zero());
    KPolynomial half;
    for (long c : {0, 0, -1, 0, 1}) half.coefficients.push_back(q(c, 2));
    half.trim();
    CHECK(nk_polynomial(ExponentShape::parse("(1,1;)")) == half);
    CHECK(nk_polynomial(ExponentShape::parse("(1;1)")) == poly({0, 0, 1, 0, -1}));
}

TEST_CASE("interpolated polynomials reproduce held out values") {
    for (int w = 1; w <= 3; ++w)
        for (const auto& s : shapes_of_weight(w, w)) {
            KPolynomial p = nk_polynomial(s);
            CHECK(p.degree() <= 2 * w);
            const long k0 = std::max<long>({1, (long)s.alpha.size(), (long)s.beta.size()});
            for (long k : {k0 + 2 * w + 3, k0 + 2 * w + 5})
                CHECK(evaluate_kpoly(p, BigRational(k)) == nk_raw(k, s));
        }
}

TEST_CASE("reflected shapes have N_k of equal size") {
    for (int w = 1; w <= 4; ++w)
        for (const auto& s : shapes_of_weight(w, 4)) {
            ExponentShape r{s.beta, s.alpha};
            for (long k = std::max<long>({1, (long)s.alpha.size(), (long)s.beta.size()}); k <= 4; ++k)
                CHECK(abs(nk_raw(k, s)) == abs(nk_raw(k, r)));
        }
}

TEST_CASE("N_k cache round trip") {
    NkCache cache;
    const auto& p = cache.get(ExponentShape::parse("(1;1)"));
    CHECK(p == poly({0, 0, 1, 0, -1}));
    cache.get(ExponentShape::parse("(1,1;)"));
    auto path = std::filesystem::temp_directory_path() / "zm_nk_cache_test.json";
    cache.save(path);
    NkCache other(path);
    CHECK(other.size() == 2u);
    CHECK(other.get(ExponentShape::parse("(1;1)")) == p);
    std::filesystem::remove(path);
}

TEST_CASE("shipped cache agrees with fresh interpolation") {
    NkCache& shipped = default_nk_cache();
    int compared = 0;
    for (int w = 1; w <= 5; ++w)
        for (const auto& s : shapes_of_weight(w, w))
            if (shipped.contains(s)) {
                CHECK_MESSAGE(shipped.get(s) == nk_polynomial(s), s.to_string());
                ++compared;
            }
    MESSAGE("compared " << compared << " cached shapes");
}
