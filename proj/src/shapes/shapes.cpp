#include "zetamoments/shapes.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "zetamoments/errors.hpp"

namespace zm {

int part_sum(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

int ExponentShape::weight() const { return part_sum(alpha) + part_sum(beta); }

int weight(const ExponentShape& s) { return s.weight(); }

int shape_delta(const ExponentShape& s) { return s.alpha == s.beta ? 1 : 0; }

namespace {

bool sorted_positive(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

std::string join(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

Partition parse_list(const std::string& s) {
    Partition out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        std::size_t used = 0;
        int v = std::stoi(item.substr(b), &used);
        if (v < 0) throw DomainError("shape entries must be non-negative: " + s);
        out.push_back(v);
    }
    return out;
}

void partitions_rec(int n, int max_part, int max_parts, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    if (max_parts == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, max_parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

bool ExponentShape::is_canonical() const {
    return sorted_positive(alpha) && sorted_positive(beta) && !(alpha < beta);
}

std::string ExponentShape::to_string() const { return "(" + join(alpha) + ";" + join(beta) + ")"; }

ExponentShape ExponentShape::parse(const std::string& text) {
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }),
            t.end());
    auto semi = t.find(';');
    if (semi == std::string::npos) throw DomainError("shape needs a ';' separator: " + text);
    ExponentShape s;
    s.alpha = parse_list(t.substr(0, semi));
    s.beta = parse_list(t.substr(semi + 1));
    return s;
}

SignedShape canonicalize(std::vector<int> alpha, std::vector<int> beta) {
    auto clean = [](std::vector<int>& v) {
        v.erase(std::remove(v.begin(), v.end(), 0), v.end());
        std::sort(v.begin(), v.end(), std::greater<int>());
    };
    clean(alpha);
    clean(beta);
    SignedShape out;
    if (alpha < beta) {
        int w = part_sum(alpha) + part_sum(beta);
        out.sign = (w % 2 == 0) ? 1 : -1;
        out.shape = {std::move(beta), std::move(alpha)};
    } else {
        out.shape = {std::move(alpha), std::move(beta)};
    }
    return out;
}

std::vector<Partition> partitions(int n, int max_parts) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    partitions_rec(n, n, max_parts, cur, out);
    return out;
}

BigInteger shape_count_dk(const ExponentShape& s, long k) {
    if (static_cast<long>(s.alpha.size()) > k || static_cast<long>(s.beta.size()) > k)
        throw ShapeTooWide("shape " + s.to_string() + " has more parts than k = " + std::to_string(k));
    auto block = [k](const Partition& p) {
        // k! / (prod over distinct values of multiplicity!), zeros included
        BigInteger r = factorial(static_cast<unsigned long>(k));
        r /= factorial(static_cast<unsigned long>(k - static_cast<long>(p.size())));
        std::size_t i = 0;
        while (i < p.size()) {
            std::size_t j = i;
            while (j < p.size() && p[j] == p[i]) ++j;
            r /= factorial(j - i);
            i = j;
        }
        return r;
    };
    BigInteger r = block(s.alpha) * block(s.beta);
    if (!shape_delta(s)) r *= 2;
    return r;
}

// ---------------------------------------------------------------- basis

ShapeBasis::ShapeBasis(int order, int width, bool balanced)
    : order_(order), width_(std::min(width, std::max(order, 0))), balanced_(balanced) {
    if (order < 0) throw DomainError("series order must be non-negative");
    if (width < 0) throw DomainError("block width must be non-negative");
    for (int w = 0; w <= order_; ++w) {
        weight_start_.push_back(shapes_.size());
        std::vector<ExponentShape> level;
        for (int a = w; a >= 0; --a) {
            if (balanced_ && 2 * a != w) continue;
            for (const auto& pa : partitions(a, width_))
                for (const auto& pb : partitions(w - a, width_)) {
                    ExponentShape s{pa, pb};
                    if (s.is_canonical()) level.push_back(std::move(s));
                }
        }
        std::sort(level.begin(), level.end());
        for (auto& s : level) {
            index_.emplace(s, static_cast<std::uint32_t>(shapes_.size()));
            weights_.push_back(w);
            shapes_.push_back(std::move(s));
        }
    }
    weight_start_.push_back(shapes_.size());

    terms_.resize(shapes_.size());
    for (std::size_t t = 0; t < shapes_.size(); ++t) {
        const auto& s = shapes_[t];
        std::vector<int> ex(s.alpha);
        ex.insert(ex.end(), s.beta.begin(), s.beta.end());
        const std::size_t na = s.alpha.size();
        std::vector<int> left(ex.size(), 0);
        std::map<std::pair<std::uint32_t, std::uint32_t>, long> acc;
        while (true) {
            std::vector<int> la(left.begin(), left.begin() + na), lb(left.begin() + na, left.end());
            std::vector<int> ra(na), rb(ex.size() - na);
            for (std::size_t v = 0; v < na; ++v) ra[v] = ex[v] - left[v];
            for (std::size_t v = na; v < ex.size(); ++v) rb[v - na] = ex[v] - left[v];
            if (!balanced_ || part_sum(la) == part_sum(lb)) {
                SignedShape L = canonicalize(std::move(la), std::move(lb));
                SignedShape R = canonicalize(std::move(ra), std::move(rb));
                acc[{index_.at(L.shape), index_.at(R.shape)}] += L.sign * R.sign;
            }
            std::size_t v = 0;
            while (v < ex.size() && left[v] == ex[v]) left[v++] = 0;
            if (v == ex.size()) break;
            ++left[v];
        }
        for (const auto& [key, m] : acc)
            if (m != 0) terms_[t].push_back({key.first, key.second, m});
    }
}

long ShapeBasis::index(const ExponentShape& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::pair<std::size_t, std::size_t> ShapeBasis::weight_range(int w) const {
    if (w < 0 || w > order_) return {0, 0};
    return {weight_start_[w], weight_start_[w + 1]};
}

const std::vector<ShapeBasis::Term>& ShapeBasis::product_terms(std::size_t target) const {
    return terms_.at(target);
}

std::shared_ptr<const ShapeBasis> shape_basis(int order, int width, bool balanced) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, bool>, std::shared_ptr<const ShapeBasis>> cache;
    width = std::min(width, std::max(order, 0));
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{order, width, balanced}];
    if (!slot) slot = std::make_shared<const ShapeBasis>(order, width, balanced);
    return slot;
}

// ---------------------------------------------------------------- series

SymmetricSeries::SymmetricSeries(std::shared_ptr<const ShapeBasis> basis, mpfr_prec_t bits)
    : basis_(std::move(basis)), bits_(bits), c_(basis_->size(), BigComplex(bits)) {}

BigComplex SymmetricSeries::at(const ExponentShape& s) const {
    SignedShape key = canonicalize(s.alpha, s.beta);
    long i = basis_->index(key.shape);
    if (i < 0) return BigComplex(bits_);
    return key.sign > 0 ? c_[i] : -c_[i];
}

void SymmetricSeries::set(const ExponentShape& canonical, const BigComplex& v) {
    long i = basis_->index(canonical);
    if (i < 0) throw MissingShape("shape " + canonical.to_string() + " is not in the series basis");
    c_[i] = v;
}

SymmetricSeries& SymmetricSeries::operator+=(const SymmetricSeries& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

SymmetricSeries& SymmetricSeries::operator-=(const SymmetricSeries& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

SymmetricSeries& SymmetricSeries::operator*=(const BigComplex& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

namespace {

void require_same_basis(const SymmetricSeries& a, const SymmetricSeries& b) {
    if (a.basis_ptr() != b.basis_ptr() &&
        (a.order() != b.order() || a.basis().width() != b.basis().width() ||
         a.basis().balanced() != b.basis().balanced()))
        throw DomainError("series have different truncation orders or block widths");
}

}  // namespace

SymmetricSeries series_multiply(const SymmetricSeries& a, const SymmetricSeries& b) {
    require_same_basis(a, b);
    SymmetricSeries out(a.basis_ptr(), std::max(a.bits(), b.bits()));
    std::vector<BigComplex> c(a.basis().size(), BigComplex(out.bits()));
    basis_multiply(a.basis(), a.coefficients(), b.coefficients(), c);
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = std::move(c[i]);
    return out;
}

SymmetricSeries series_exp(const SymmetricSeries& s) {
    if (!s.constant().is_zero()) throw NonzeroConstant("series_exp: constant term must be zero");
    SymmetricSeries f(s.basis_ptr(), s.bits());
    std::vector<BigComplex> c(s.basis().size(), BigComplex(s.bits()));
    c[0] = BigComplex(1L, s.bits());
    basis_exp(s.basis(), s.coefficients(), c);
    for (std::size_t i = 0; i < c.size(); ++i) f[i] = std::move(c[i]);
    return f;
}

SymmetricSeries series_log(const SymmetricSeries& s) {
    if (s.constant().is_zero()) throw DomainError("series_log: constant term is zero");
    SymmetricSeries g(s.basis_ptr(), s.bits());
    std::vector<BigComplex> c(s.basis().size(), BigComplex(s.bits()));
    c[0] = log(s.constant());
    basis_log(s.basis(), s.coefficients(), BigComplex(1L, s.bits()) / s.constant(), c);
    for (std::size_t i = 0; i < c.size(); ++i) g[i] = std::move(c[i]);
    return g;
}

SymmetricSeries pair_series(const std::shared_ptr<const ShapeBasis>& basis, const std::vector<BigComplex>& g,
                            const BigComplex& k, mpfr_prec_t bits) {
    if (static_cast<int>(g.size()) <= basis->order())
        throw DomainError("pair_series: one-variable series is shorter than the truncation order");
    SymmetricSeries out(basis, bits);
    for (std::size_t i = 0; i < basis->size(); ++i) {
        const auto& s = basis->shape(i);
        if (s.alpha.size() > 1 || s.beta.size() > 1) continue;
        if (s.empty()) {
            out[i] = g[0] * (k * k);
        } else if (s.beta.empty()) {
            out[i] = g[s.alpha[0]] * k;
        } else {
            const int a = s.alpha[0], b = s.beta[0];
            BigComplex v = g[a + b] * BigReal(binomial(a + b, a), bits);
            if (b % 2) v = -v;
            out[i] = std::move(v);
        }
    }
    return out;
}

}  // namespace zm
