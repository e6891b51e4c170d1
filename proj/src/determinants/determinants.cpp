#include "zetamoments/determinants.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>

#include <json.hpp>

#include "zetamoments/errors.hpp"

#ifndef ZM_DATA_DIR
#define ZM_DATA_DIR ""
#endif

namespace zm {

namespace {

// Fraction-free Gaussian elimination; destroys the matrix.
BigInteger bareiss_det(std::vector<std::vector<BigInteger>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInteger prev = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                BigInteger& x = a[i][j];
                x *= a[c][c];
                x -= a[i][c] * a[c][j];
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[c][c];
    }
    BigInteger d = a[n - 1][n - 1];
    return sign > 0 ? d : BigInteger(-d);
}

BigRational pow2(long e) {
    BigInteger one = 1;
    if (e >= 0) return BigRational(BigInteger(one << static_cast<mp_bitcnt_t>(e)));
    return BigRational(one, BigInteger(one << static_cast<mp_bitcnt_t>(-e)));
}

void check_length(long k, const std::vector<int>& v, const char* what) {
    if (static_cast<long>(v.size()) != k)
        throw DomainError(std::string(what) + " must have exactly k entries");
    for (int x : v)
        if (x < 0) throw DomainError(std::string(what) + " entries must be non-negative");
}

// prod_{l<k} (k+l)!/l!
BigInteger inverse_leading_product(long k) {
    BigInteger r = 1;
    for (long l = 0; l < k; ++l) r *= factorial(k + l) / factorial(l);
    return r;
}

void survivors_rec(long slot, long k, std::map<int, int>& pool, std::vector<char>& used, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (slot > k) {
        out.push_back(cur);
        return;
    }
    for (auto& [value, count] : pool) {
        if (count == 0) continue;
        const long key = slot + value;
        if (used[key]) continue;
        --count;
        used[key] = 1;
        cur.push_back(value);
        survivors_rec(slot + 1, k, pool, used, cur, out);
        cur.pop_back();
        used[key] = 0;
        ++count;
    }
}

}  // namespace

BigRational mtilde(long k, const std::vector<int>& top, const std::vector<int>& bottom) {
    check_length(k, top, "top arrangement");
    check_length(k, bottom, "bottom arrangement");
    const long n = 2 * k;
    std::vector<long> rows(n);
    for (long i = 0; i < k; ++i) {
        rows[i] = 2 * k - (i + 1) - top[i];
        rows[k + i] = 2 * k - (i + 1) - bottom[i];
    }
    // a negative index gives a zero row, equal indices in one block give proportional rows
    for (long r : rows)
        if (r < 0) return 0;
    for (long blk = 0; blk < 2; ++blk) {
        std::set<long> seen(rows.begin() + blk * k, rows.begin() + (blk + 1) * k);
        if (static_cast<long>(seen.size()) != k) return 0;
    }
    std::vector<std::vector<BigInteger>> m(n, std::vector<BigInteger>(n));
    for (long i = 0; i < n; ++i) {
        const bool lower = i >= k;
        const long i1 = lower ? i - k + 1 : 0;
        for (long j = 0; j < n && j <= rows[i]; ++j) {
            m[i][j] = binomial(rows[i], j);
            if (lower && (i1 + j) % 2) m[i][j] = -m[i][j];
        }
    }
    BigRational det(bareiss_det(m));
    if (det == 0) return 0;
    BigInteger num = 1, den = 1;
    for (long j = 0; j < n; ++j) num *= factorial(j);
    for (long r : rows) den *= factorial(r);
    det *= BigRational(num, den);
    det.canonicalize();
    if (std::accumulate(bottom.begin(), bottom.end(), 0L) % 2) det = -det;
    return det;
}

BigRational binomial_det_oracle(long k, const std::vector<int>& e, const std::vector<int>& f) {
    check_length(k, e, "e");
    check_length(k, f, "f");
    std::vector<long> er(k), fr(k);
    for (long l = 0; l < k; ++l) {
        er[l] = e[l] + l;
        fr[l] = f[l] + l;
    }
    if (std::set<long>(er.begin(), er.end()).size() != static_cast<std::size_t>(k)) return 0;
    if (std::set<long>(fr.begin(), fr.end()).size() != static_cast<std::size_t>(k)) return 0;
    std::vector<char> taken(2 * k, 0);
    for (long x : fr) {
        if (x > 2 * k - 1) throw ComplementUndefined("f_i + i - 1 leaves {0..2k-1}");
        taken[x] = 1;
    }
    std::vector<long> c;
    for (long x = 0; x < 2 * k; ++x)
        if (!taken[x]) c.push_back(x);

    long inversions = 0;
    for (long a = 0; a < k; ++a)
        for (long b = a + 1; b < k; ++b)
            if (fr[a] > fr[b]) ++inversions;

    BigRational pref = 1;
    long two_exp = 0;
    for (long l = 0; l < k; ++l) {
        pref *= BigRational(factorial(er[l]) * factorial(fr[l]), factorial(l) * factorial(k + l));
        two_exp += c[l] - er[l];
    }
    pref *= pow2(two_exp);

    std::vector<std::vector<BigInteger>> m(k, std::vector<BigInteger>(k));
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) m[i][j] = er[i] <= c[j] ? binomial(c[j], er[i]) : BigInteger(0);
    BigRational out = pref * BigRational(bareiss_det(m));
    out.canonicalize();
    if (inversions % 2) out = -out;
    return out;
}

bool prune(long k, const std::vector<int>& arrangement) {
    const long total = std::accumulate(arrangement.begin(), arrangement.end(), 0L);
    for (long i = 0; i < k - total && i < static_cast<long>(arrangement.size()); ++i)
        if (arrangement[i] != 0) return false;
    return true;
}

bool prune(long k, const std::vector<int>& top, const std::vector<int>& bottom) {
    return prune(k, top) && prune(k, bottom);
}

std::vector<std::vector<int>> rearrangements(const Partition& parts, long k, bool survivors_only) {
    if (static_cast<long>(parts.size()) > k) throw ShapeTooWide("more parts than k");
    std::vector<std::vector<int>> out;
    if (!survivors_only) {
        std::vector<int> v(parts.begin(), parts.end());
        v.resize(k, 0);
        std::sort(v.begin(), v.end());
        do out.push_back(v);
        while (std::next_permutation(v.begin(), v.end()));
        return out;
    }
    const long total = part_sum(parts);
    const long free_slots = std::min(k, total);
    const long lead = k - free_slots;
    std::map<int, int> pool;
    for (int p : parts) ++pool[p];
    if (free_slots > static_cast<long>(parts.size())) pool[0] += static_cast<int>(free_slots - parts.size());
    const int biggest = parts.empty() ? 0 : parts.front();
    std::vector<char> used(k + biggest + 2, 0);
    std::vector<int> cur(lead, 0);
    for (long i = 1; i <= lead; ++i) used[i] = 1;
    survivors_rec(lead + 1, k, pool, used, cur, out);
    return out;
}

BigRational nk_raw(long k, const ExponentShape& s, bool use_pruning) {
    if (k < 1) throw DomainError("nk_raw needs k >= 1");
    auto tops = rearrangements(s.alpha, k, use_pruning);
    auto bottoms = rearrangements(s.beta, k, use_pruning);
    BigRational sum = 0;
    for (const auto& t : tops)
        for (const auto& b : bottoms) sum += mtilde(k, t, b);
    sum *= pow2(static_cast<long>(s.weight()) - k * k);
    sum *= BigRational(inverse_leading_product(k));
    sum.canonicalize();
    return sum;
}

KPolynomial nk_polynomial(const ExponentShape& s) {
    const int deg = 2 * s.weight();
    const long k0 = std::max<long>({1, static_cast<long>(s.alpha.size()), static_cast<long>(s.beta.size())});
    std::vector<std::pair<BigRational, BigRational>> pts;
    for (long k = k0; k <= k0 + deg + 2; ++k) pts.emplace_back(BigRational(k), nk_raw(k, s));
    return interpolate_kpoly(pts, deg);
}

// ---------------------------------------------------------------- cache

NkCache::NkCache(std::filesystem::path file) : file_(std::move(file)) {
    if (!file_.empty() && std::filesystem::exists(file_)) load(file_);
}

const KPolynomial& NkCache::get(const ExponentShape& s) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = polys_.find(s);
        if (it != polys_.end()) return it->second;
    }
    KPolynomial p = nk_polynomial(s);
    std::lock_guard<std::mutex> lock(mu_);
    return polys_.emplace(s, std::move(p)).first->second;
}

bool NkCache::contains(const ExponentShape& s) const {
    std::lock_guard<std::mutex> lock(mu_);
    return polys_.count(s) > 0;
}

void NkCache::insert(const ExponentShape& s, KPolynomial p) {
    std::lock_guard<std::mutex> lock(mu_);
    polys_[s] = std::move(p);
}

std::size_t NkCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return polys_.size();
}

namespace {
constexpr const char* kNkFormat = "zetamoments.nk";
constexpr int kNkVersion = 1;
}  // namespace

void NkCache::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigurationError("cannot read N_k cache " + file.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& ex) {
        throw ConfigurationError("malformed N_k cache " + file.string() + ": " + ex.what());
    }
    if (doc.value("format", "") != kNkFormat || doc.value("version", 0) != kNkVersion)
        throw ConfigurationError("N_k cache " + file.string() + " has an unsupported format or version");
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& e : doc.at("polynomials")) {
        ExponentShape s{e.at("alpha").get<Partition>(), e.at("beta").get<Partition>()};
        KPolynomial p;
        for (const auto& c : e.at("coefficients")) p.coefficients.push_back(rational_from_string(c.get<std::string>()));
        p.trim();
        polys_[s] = std::move(p);
    }
}

void NkCache::save(const std::filesystem::path& file) const {
    nlohmann::json list = nlohmann::json::array();
    {
        std::lock_guard<std::mutex> lock(mu_);
        for (const auto& [s, p] : polys_) {
            nlohmann::json coeffs = nlohmann::json::array();
            for (const auto& c : p.coefficients) coeffs.push_back(rational_to_string(c));
            list.push_back({{"alpha", s.alpha}, {"beta", s.beta}, {"coefficients", coeffs}});
        }
    }
    nlohmann::json doc = {{"format", kNkFormat}, {"version", kNkVersion}, {"polynomials", list}};
    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw ConfigurationError("cannot write N_k cache " + file.string());
        out << doc.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, file);
}

void NkCache::flush() const {
    if (!file_.empty()) save(file_);
}

NkCache& default_nk_cache() {
    static NkCache cache;
    static std::once_flag seeded;
    std::call_once(seeded, [] {
        std::filesystem::path shipped = std::filesystem::path(ZM_DATA_DIR) / "nk_cache.json";
        if (!std::string(ZM_DATA_DIR).empty() && std::filesystem::exists(shipped)) cache.load(shipped);
    });
    return cache;
}

}  // namespace zm
