#include "zetamoments/bignum.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace zm {

namespace {

constexpr double kBitsPerDigit = 3.3219280948873623;

mpfr_prec_t wider(mpfr_prec_t a, mpfr_prec_t b) { return a > b ? a : b; }

}  // namespace

mpfr_prec_t digits_to_bits(int decimal_digits) {
    return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * kBitsPerDigit)) + 8;
}

int bits_to_digits(mpfr_prec_t bits) { return static_cast<int>(std::floor((bits - 8) / kBitsPerDigit)); }

PrecisionContext::PrecisionContext(int digits, int guard) : decimal_digits(digits), guard_digits(guard) {
    if (digits < 15) throw std::invalid_argument("PrecisionContext: decimal_digits must be at least 15");
    if (guard < 0) throw std::invalid_argument("PrecisionContext: negative guard digits");
}

mpfr_prec_t PrecisionContext::bits() const { return digits_to_bits(effective_digits()); }

PrecisionContext PrecisionContext::widened(int extra_guard) const {
    PrecisionContext c = *this;
    c.guard_digits += extra_guard;
    return c;
}

// ---------------------------------------------------------------- BigReal

BigReal::BigReal() {
    mpfr_init2(v_, 64);
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(unsigned long value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_ui(v_, value, MPFR_RNDN);
}

BigReal::BigReal(double value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const BigInteger& value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigRational& value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const std::string& decimal, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("BigReal: cannot parse '" + decimal + "'");
    }
}

BigReal::BigReal(const BigReal& other) {
    mpfr_init2(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
    v_[0] = other.v_[0];
    other.v_->_mpfr_d = nullptr;
}

BigReal::~BigReal() {
    if (live()) mpfr_clear(v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this == &other) return *this;
    if (!live())
        mpfr_init2(v_, other.bits());
    else if (bits() != other.bits())
        mpfr_set_prec(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    if (this == &other) return *this;
    if (live()) mpfr_clear(v_);
    v_[0] = other.v_[0];
    other.v_->_mpfr_d = nullptr;
    return *this;
}

BigReal& BigReal::operator=(long value) {
    if (!live()) mpfr_init2(v_, 64);
    mpfr_set_si(v_, value, MPFR_RNDN);
    return *this;
}

void BigReal::set_bits(mpfr_prec_t b) {
    if (!live()) {
        mpfr_init2(v_, b);
        mpfr_set_zero(v_, 1);
        return;
    }
    mpfr_prec_round(v_, b, MPFR_RNDN);
}

long BigReal::exponent2() const {
    if (mpfr_zero_p(v_)) return -(1L << 40);
    return mpfr_get_exp(v_);
}

std::string BigReal::to_string(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(v_)) return "0";
    if (digits < 1) digits = 1;
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    std::string out;
    if (!m.empty() && m[0] == '-') {
        out.push_back('-');
        m.erase(0, 1);
    }
    // strip trailing zeros of the mantissa but keep at least one digit
    while (m.size() > 1 && m.back() == '0') m.pop_back();
    out.push_back(m[0]);
    if (m.size() > 1) {
        out.push_back('.');
        out.append(m, 1, std::string::npos);
    }
    long exp10 = static_cast<long>(e) - 1;
    if (exp10 != 0) out += "e" + std::to_string(exp10);
    return out;
}

BigReal BigReal::operator-() const {
    BigReal r(bits());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

#define ZM_COMPOUND(OP, FN)                                               \
    BigReal& BigReal::operator OP(const BigReal& o) {                     \
        if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN); \
        FN(v_, v_, o.v_, MPFR_RNDN);                                      \
        return *this;                                                     \
    }
ZM_COMPOUND(+=, mpfr_add)
ZM_COMPOUND(-=, mpfr_sub)
ZM_COMPOUND(*=, mpfr_mul)
ZM_COMPOUND(/=, mpfr_div)
#undef ZM_COMPOUND

BigReal& BigReal::operator+=(long o) {
    mpfr_add_si(v_, v_, o, MPFR_RNDN);
    return *this;
}
BigReal& BigReal::operator-=(long o) {
    mpfr_sub_si(v_, v_, o, MPFR_RNDN);
    return *this;
}
BigReal& BigReal::operator*=(long o) {
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
}
BigReal& BigReal::operator/=(long o) {
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

void BigReal::add_product(const BigReal& a, const BigReal& b, BigReal& scratch) {
    mpfr_prec_t need = wider(a.bits(), b.bits());
    if (need > bits()) mpfr_prec_round(v_, need, MPFR_RNDN);
    if (scratch.bits() != bits()) scratch = BigReal(bits());
    mpfr_mul(scratch.v_, a.v_, b.v_, MPFR_RNDN);
    mpfr_add(v_, v_, scratch.v_, MPFR_RNDN);
}

BigReal BigReal::pi(mpfr_prec_t b) {
    BigReal r(b);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::euler_gamma(mpfr_prec_t b) {
    BigReal r(b);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::ln2(mpfr_prec_t b) {
    BigReal r(b);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
}

#define ZM_BINARY(OP, FN)                                        \
    BigReal operator OP(const BigReal& a, const BigReal& b) {    \
        BigReal r(wider(a.bits(), b.bits()));                    \
        FN(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                \
        return r;                                                \
    }
ZM_BINARY(+, mpfr_add)
ZM_BINARY(-, mpfr_sub)
ZM_BINARY(*, mpfr_mul)
ZM_BINARY(/, mpfr_div)
#undef ZM_BINARY

BigReal operator+(const BigReal& a, long b) {
    BigReal r(a.bits());
    mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
BigReal operator-(const BigReal& a, long b) {
    BigReal r(a.bits());
    mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
BigReal operator-(long a, const BigReal& b) {
    BigReal r(b.bits());
    mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
BigReal operator*(const BigReal& a, long b) {
    BigReal r(a.bits());
    mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
BigReal operator*(long a, const BigReal& b) { return b * a; }
BigReal operator/(const BigReal& a, long b) {
    BigReal r(a.bits());
    mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
BigReal operator/(long a, const BigReal& b) {
    BigReal r(b.bits());
    mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
BigReal operator*(const BigReal& a, const BigRational& b) {
    BigReal r(a.bits());
    mpfr_mul_q(r.raw(), a.raw(), b.get_mpq_t(), MPFR_RNDN);
    return r;
}

bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }

#define ZM_UNARY(NAME, FN)                     \
    BigReal NAME(const BigReal& x) {           \
        BigReal r(x.bits());                   \
        FN(r.raw(), x.raw(), MPFR_RNDN);       \
        return r;                              \
    }
ZM_UNARY(abs, mpfr_abs)
ZM_UNARY(sqrt, mpfr_sqrt)
ZM_UNARY(exp, mpfr_exp)
ZM_UNARY(expm1, mpfr_expm1)
ZM_UNARY(log, mpfr_log)
ZM_UNARY(log1p, mpfr_log1p)
ZM_UNARY(sin, mpfr_sin)
ZM_UNARY(cos, mpfr_cos)
ZM_UNARY(gamma, mpfr_gamma)
ZM_UNARY(zeta_real, mpfr_zeta)
#undef ZM_UNARY

BigReal lngamma(const BigReal& x) {
    BigReal r(x.bits());
    int sgn = 0;
    mpfr_lgamma(r.raw(), &sgn, x.raw(), MPFR_RNDN);
    return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal r(wider(x.bits(), y.bits()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& x, long n) {
    BigReal r(x.bits());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
    BigReal r(wider(x.bits(), y.bits()));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

BigReal ldexp(const BigReal& x, long e) {
    BigReal r(x.bits());
    mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

BigReal max_abs(const BigReal& a, const BigReal& b) {
    BigReal x = abs(a), y = abs(b);
    return x > y ? x : y;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) {
    return os << x.to_string(bits_to_digits(x.bits()));
}

// ---------------------------------------------------------------- BigComplex

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re_ += o.re_;
    if (!o.im_.is_zero() || o.im_.bits() > im_.bits()) im_ += o.im_;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re_ -= o.re_;
    if (!o.im_.is_zero() || o.im_.bits() > im_.bits()) im_ -= o.im_;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    *this = *this * o;
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    *this = *this / o;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& o) {
    re_ *= o;
    im_ *= o;
    return *this;
}

BigComplex& BigComplex::operator/=(const BigReal& o) {
    re_ /= o;
    im_ /= o;
    return *this;
}

BigComplex& BigComplex::operator*=(long o) {
    re_ *= o;
    im_ *= o;
    return *this;
}

BigComplex& BigComplex::operator/=(long o) {
    re_ /= o;
    im_ /= o;
    return *this;
}

void BigComplex::add_product(const BigComplex& a, const BigComplex& b, BigComplex& s) {
    mpfr_prec_t need = wider(a.bits(), b.bits());
    if (need > bits()) set_bits(need);
    mpfr_prec_t p = bits();
    if (s.re_.bits() != p) s = BigComplex(p);
    bool ar = a.im_.is_zero(), br = b.im_.is_zero();
    if (ar && br) {
        mpfr_mul(s.re_.raw(), a.re_.raw(), b.re_.raw(), MPFR_RNDN);
        mpfr_add(re_.raw(), re_.raw(), s.re_.raw(), MPFR_RNDN);
        return;
    }
    if (br) {
        mpfr_mul(s.re_.raw(), a.re_.raw(), b.re_.raw(), MPFR_RNDN);
        mpfr_add(re_.raw(), re_.raw(), s.re_.raw(), MPFR_RNDN);
        mpfr_mul(s.im_.raw(), a.im_.raw(), b.re_.raw(), MPFR_RNDN);
        mpfr_add(im_.raw(), im_.raw(), s.im_.raw(), MPFR_RNDN);
        return;
    }
    if (ar) {
        mpfr_mul(s.re_.raw(), a.re_.raw(), b.re_.raw(), MPFR_RNDN);
        mpfr_add(re_.raw(), re_.raw(), s.re_.raw(), MPFR_RNDN);
        mpfr_mul(s.im_.raw(), a.re_.raw(), b.im_.raw(), MPFR_RNDN);
        mpfr_add(im_.raw(), im_.raw(), s.im_.raw(), MPFR_RNDN);
        return;
    }
    mpfr_mul(s.re_.raw(), a.re_.raw(), b.re_.raw(), MPFR_RNDN);
    mpfr_add(re_.raw(), re_.raw(), s.re_.raw(), MPFR_RNDN);
    mpfr_mul(s.re_.raw(), a.im_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_sub(re_.raw(), re_.raw(), s.re_.raw(), MPFR_RNDN);
    mpfr_mul(s.im_.raw(), a.re_.raw(), b.im_.raw(), MPFR_RNDN);
    mpfr_add(im_.raw(), im_.raw(), s.im_.raw(), MPFR_RNDN);
    mpfr_mul(s.im_.raw(), a.im_.raw(), b.re_.raw(), MPFR_RNDN);
    mpfr_add(im_.raw(), im_.raw(), s.im_.raw(), MPFR_RNDN);
}

std::string BigComplex::to_string(int digits) const {
    if (im_.is_zero()) return re_.to_string(digits);
    std::string i = im_.to_string(digits);
    if (i[0] != '-') i = "+" + i;
    return re_.to_string(digits) + i + "i";
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    BigComplex r = a;
    r += b;
    return r;
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    BigComplex r = a;
    r -= b;
    return r;
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    if (b.im().is_zero()) {
        BigComplex r(a.re() * b.re(), a.im() * b.re());
        return r;
    }
    if (a.im().is_zero()) return BigComplex(a.re() * b.re(), a.re() * b.im());
    return BigComplex(a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re());
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    if (b.im().is_zero()) return BigComplex(a.re() / b.re(), a.im() / b.re());
    BigReal d = b.re() * b.re() + b.im() * b.im();
    BigReal re = (a.re() * b.re() + a.im() * b.im()) / d;
    BigReal im = (a.im() * b.re() - a.re() * b.im()) / d;
    return {std::move(re), std::move(im)};
}

BigComplex operator*(const BigComplex& a, const BigReal& b) { return {a.re() * b, a.im() * b}; }
BigComplex operator*(const BigReal& a, const BigComplex& b) { return b * a; }
BigComplex operator/(const BigComplex& a, const BigReal& b) { return {a.re() / b, a.im() / b}; }
BigComplex operator+(const BigComplex& a, long b) { return {a.re() + b, a.im()}; }
BigComplex operator-(long a, const BigComplex& b) { return {a - b.re(), -b.im()}; }
BigComplex operator*(const BigComplex& a, long b) { return {a.re() * b, a.im() * b}; }
BigComplex operator/(const BigComplex& a, long b) { return {a.re() / b, a.im() / b}; }
BigComplex operator*(const BigComplex& a, const BigRational& b) { return {a.re() * b, a.im() * b}; }

BigReal norm(const BigComplex& z) { return z.re() * z.re() + z.im() * z.im(); }

BigReal abs(const BigComplex& z) {
    if (z.im().is_zero()) return abs(z.re());
    BigReal r(z.bits());
    mpfr_hypot(r.raw(), z.re().raw(), z.im().raw(), MPFR_RNDN);
    return r;
}

BigReal arg(const BigComplex& z) { return atan2(z.im(), z.re()); }

BigComplex conj(const BigComplex& z) { return {z.re(), -z.im()}; }

BigComplex exp(const BigComplex& z) {
    if (z.im().is_zero()) return BigComplex(exp(z.re()), BigReal(z.bits()));
    BigReal m = exp(z.re());
    BigReal s(z.bits()), c(z.bits());
    mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
    return {m * c, m * s};
}

BigComplex log(const BigComplex& z) {
    if (z.im().is_zero() && z.re().sign() > 0) return BigComplex(log(z.re()), BigReal(z.bits()));
    return {log(abs(z)), arg(z)};
}

BigComplex sqrt(const BigComplex& z) {
    if (z.im().is_zero() && z.re().sign() >= 0) return BigComplex(sqrt(z.re()), BigReal(z.bits()));
    BigReal r = abs(z);
    BigReal a = sqrt((r + z.re()) / 2);
    BigReal b = sqrt((r - z.re()) / 2);
    if (z.im().sign() < 0) b = -b;
    return {std::move(a), std::move(b)};
}

BigComplex pow(const BigComplex& z, long n) {
    mpfr_prec_t p = z.bits();
    if (n < 0) return BigComplex(1L, p) / pow(z, -n);
    BigComplex result(1L, p), base = z;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

BigComplex pow(const BigComplex& z, const BigComplex& w) { return exp(w * log(z)); }

BigComplex pow_from_log(const BigReal& log_base, const BigComplex& w) { return exp(w * log_base); }

BigComplex polar(const BigReal& r, const BigReal& theta) {
    BigReal s(theta.bits()), c(theta.bits());
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
    return {r * c, r * s};
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
    return os << z.to_string(bits_to_digits(z.bits()));
}

double agreeing_digits(const BigComplex& a, const BigComplex& b, double cap) {
    BigReal diff = abs(a - b);
    BigReal scale = max_abs(abs(a), abs(b));
    if (diff.is_zero()) return cap;
    if (scale.is_zero()) return 0.0;
    BigReal rel = diff / scale;
    double lg = mpfr_get_d(log(rel).raw(), MPFR_RNDN) / std::log(10.0);
    return std::min(cap, -lg);
}

double agreeing_digits(const BigReal& a, const BigReal& b, double cap) {
    return agreeing_digits(BigComplex(a), BigComplex(b), cap);
}

std::string rational_to_string(const BigRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational rational_from_string(const std::string& s) {
    BigRational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

BigInteger factorial(unsigned long n) {
    BigInteger r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInteger binomial(long n, long k) {
    if (k < 0) return 0;
    BigInteger r;
    if (n >= 0) {
        if (k > n) return 0;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }
    mpz_bin_ui(r.get_mpz_t(), BigInteger(n).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

}  // namespace zm
