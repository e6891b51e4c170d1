#include "zetamoments/moment_polynomial.hpp"

#include <json.hpp>

#include "zetamoments/errors.hpp"
#include "zetamoments/local_factors.hpp"

namespace zm {

namespace {

constexpr const char* kFormat = "zetamoments.polynomial";
constexpr int kVersion = 1;

nlohmann::json complex_json(const BigComplex& z, int digits) {
    return {{"re", z.re().to_string(digits)}, {"im", z.im().to_string(digits)}};
}

BigComplex complex_from_json(const nlohmann::json& j, mpfr_prec_t bits) {
    return BigComplex(BigReal(j.at("re").get<std::string>(), bits), BigReal(j.at("im").get<std::string>(), bits));
}

}  // namespace

BigComplex evaluate_pk(const MomentPolynomial& poly, const BigReal& x) {
    const mpfr_prec_t bits = std::max(x.bits(), poly.k.bits());
    BigComplex out(bits);
    const long n = integer_value(poly.k);
    if (n > 0 || poly.k.is_zero()) {
        // integer exponents: Horner from the lowest power present
        const long top = n * n;
        for (int r = 0; r <= poly.order(); ++r) {
            const long e = top - r;
            if (e < 0 && x.is_zero()) throw DomainError("evaluate_pk: negative power at x = 0");
            BigReal p = e >= 0 ? pow(x, e) : BigReal(1L, bits) / pow(x, -e);
            out += poly.coefficients[r] * p;
        }
        return out;
    }
    if (x.sign() <= 0) throw DomainError("evaluate_pk: x must be positive for non-integer k");
    const BigReal lx = log(BigReal(x, bits));
    const BigComplex k2 = poly.k * poly.k;
    for (int r = 0; r <= poly.order(); ++r) {
        BigComplex e = k2 - BigComplex(static_cast<long>(r), bits);
        out += poly.coefficients[r] * pow_from_log(lx, e);
    }
    return out;
}

BigComplex parse_complex(const std::string& text, mpfr_prec_t bits) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    if (s.empty()) throw ConfigurationError("empty complex number");
    auto real_part = [&](const std::string& t) {
        try {
            std::size_t used = 0;
            (void)std::stod(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
        } catch (const std::exception&) {
            throw ConfigurationError("cannot parse number '" + text + "'");
        }
        return BigReal(t, bits);
    };
    if (s.back() != 'i') return BigComplex(real_part(s));
    s.pop_back();
    // split at the last sign that is not an exponent sign
    std::size_t cut = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            cut = i;
            break;
        }
    }
    std::string re = cut == std::string::npos ? "0" : s.substr(0, cut);
    std::string im = cut == std::string::npos ? s : s.substr(cut);
    if (im == "+" || im == "-" || im.empty()) im += "1";
    if (im[0] == '+') im.erase(0, 1);
    return BigComplex(real_part(re), real_part(im));
}

std::string format_complex(const BigComplex& z, int digits) { return z.to_string(digits); }

std::string to_json(const MomentPolynomial& poly) {
    nlohmann::json j;
    j["format"] = kFormat;
    j["version"] = kVersion;
    j["k"] = complex_json(poly.k, 20);
    j["method"] = poly.method;
    j["digits"] = poly.digits;
    j["prime_cutoff"] = poly.prime_cutoff;
    j["is_full"] = poly.is_full;
    nlohmann::json cs = nlohmann::json::array();
    for (int r = 0; r <= poly.order(); ++r) {
        nlohmann::json c = complex_json(poly.coefficients[r], poly.digits);
        c["r"] = r;
        cs.push_back(c);
    }
    j["coefficients"] = cs;
    return j.dump(2);
}

MomentPolynomial moment_polynomial_from_json(const std::string& text, mpfr_prec_t bits) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigurationError(std::string("polynomial JSON: ") + e.what());
    }
    if (j.value("format", "") != kFormat || j.value("version", 0) != kVersion)
        throw ConfigurationError("polynomial JSON: unsupported format or version");
    MomentPolynomial p;
    try {
        p.k = complex_from_json(j.at("k"), bits);
        p.method = j.at("method").get<std::string>();
        p.digits = j.at("digits").get<int>();
        p.prime_cutoff = j.at("prime_cutoff").get<std::uint64_t>();
        p.is_full = j.at("is_full").get<bool>();
        for (const auto& c : j.at("coefficients")) p.coefficients.push_back(complex_from_json(c, bits));
    } catch (const nlohmann::json::exception& e) {
        throw ConfigurationError(std::string("polynomial JSON: ") + e.what());
    }
    return p;
}

}  // namespace zm
