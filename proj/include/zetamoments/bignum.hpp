#pragma once

// Arbitrary precision scalars backed by MPFR (reals) and GMP (rationals).
// Every BigReal carries its own precision; binary operations produce a
// result at the larger of the two operand precisions.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace zm {

using BigInteger = mpz_class;
using BigRational = mpq_class;

// Working precision handed explicitly to every numerical routine.
struct PrecisionContext {
    int decimal_digits = 30;
    int guard_digits = 10;

    PrecisionContext() = default;
    explicit PrecisionContext(int digits, int guard = 10);

    int effective_digits() const { return decimal_digits + guard_digits; }
    mpfr_prec_t bits() const;
    // Same target, extra guard digits.
    PrecisionContext widened(int extra_guard) const;
    // Tolerance 10^-(effective digits).
    double log10_eps() const { return -static_cast<double>(effective_digits()); }
};

mpfr_prec_t digits_to_bits(int decimal_digits);
int bits_to_digits(mpfr_prec_t bits);

class BigReal {
public:
    BigReal();
    explicit BigReal(mpfr_prec_t bits);
    BigReal(long value, mpfr_prec_t bits);
    BigReal(int value, mpfr_prec_t bits) : BigReal(static_cast<long>(value), bits) {}
    BigReal(unsigned long value, mpfr_prec_t bits);
    BigReal(double value, mpfr_prec_t bits);
    BigReal(const BigInteger& value, mpfr_prec_t bits);
    BigReal(const BigRational& value, mpfr_prec_t bits);
    BigReal(const std::string& decimal, mpfr_prec_t bits);
    BigReal(const BigReal& other);
    BigReal(const BigReal& other, mpfr_prec_t bits);
    BigReal(BigReal&& other) noexcept;
    ~BigReal();

    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    BigReal& operator=(long value);

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    void set_bits(mpfr_prec_t bits);  // rounds the stored value

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    long exponent2() const;  // binary exponent, very negative for zero
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Scientific decimal string with `digits` significant digits: "-1.2345e-7".
    std::string to_string(int digits) const;

    BigReal operator-() const;
    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);
    BigReal& operator+=(long o);
    BigReal& operator-=(long o);
    BigReal& operator*=(long o);
    BigReal& operator/=(long o);

    // this += a * b without a temporary allocation per call
    void add_product(const BigReal& a, const BigReal& b, BigReal& scratch);

    static BigReal pi(mpfr_prec_t bits);
    static BigReal euler_gamma(mpfr_prec_t bits);
    static BigReal ln2(mpfr_prec_t bits);

private:
    mpfr_t v_;
    bool live() const { return v_->_mpfr_d != nullptr; }
};

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator+(const BigReal& a, long b);
BigReal operator-(const BigReal& a, long b);
BigReal operator-(long a, const BigReal& b);
BigReal operator*(const BigReal& a, long b);
BigReal operator*(long a, const BigReal& b);
BigReal operator/(const BigReal& a, long b);
BigReal operator/(long a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigRational& b);

bool operator<(const BigReal& a, const BigReal& b);
bool operator>(const BigReal& a, const BigReal& b);
bool operator<=(const BigReal& a, const BigReal& b);
bool operator>=(const BigReal& a, const BigReal& b);
bool operator==(const BigReal& a, const BigReal& b);
bool operator!=(const BigReal& a, const BigReal& b);

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal expm1(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log1p(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow(const BigReal& x, long n);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal lngamma(const BigReal& x);  // log|Gamma(x)|
BigReal gamma(const BigReal& x);
BigReal zeta_real(const BigReal& x);  // library reference value
BigReal ldexp(const BigReal& x, long e);
BigReal max_abs(const BigReal& a, const BigReal& b);

std::ostream& operator<<(std::ostream& os, const BigReal& x);

class BigComplex {
public:
    BigComplex() = default;
    explicit BigComplex(mpfr_prec_t bits) : re_(bits), im_(bits) {}
    BigComplex(BigReal re) : re_(std::move(re)), im_(re_.bits()) {}
    BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(long re, mpfr_prec_t bits) : re_(re, bits), im_(bits) {}
    BigComplex(double re, double im, mpfr_prec_t bits) : re_(re, bits), im_(im, bits) {}

    const BigReal& re() const { return re_; }
    const BigReal& im() const { return im_; }
    BigReal& re() { return re_; }
    BigReal& im() { return im_; }
    mpfr_prec_t bits() const { return re_.bits() > im_.bits() ? re_.bits() : im_.bits(); }
    void set_bits(mpfr_prec_t bits) {
        re_.set_bits(bits);
        im_.set_bits(bits);
    }
    bool is_real() const { return im_.is_zero(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

    BigComplex operator-() const { return {-re_, -im_}; }
    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
    BigComplex& operator*=(const BigReal& o);
    BigComplex& operator/=(const BigReal& o);
    BigComplex& operator*=(long o);
    BigComplex& operator/=(long o);
    BigComplex& operator+=(long o) {
        re_ += o;
        return *this;
    }

    // this += a * b using caller supplied scratch storage
    void add_product(const BigComplex& a, const BigComplex& b, BigComplex& scratch);

    std::string to_string(int digits) const;

private:
    BigReal re_;
    BigReal im_;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigReal& b);
BigComplex operator*(const BigReal& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigReal& b);
BigComplex operator+(const BigComplex& a, long b);
BigComplex operator-(long a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, long b);
BigComplex operator/(const BigComplex& a, long b);
BigComplex operator*(const BigComplex& a, const BigRational& b);

BigReal abs(const BigComplex& z);
BigReal norm(const BigComplex& z);  // |z|^2
BigReal arg(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);  // principal branch
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& z, long n);
BigComplex pow(const BigComplex& z, const BigComplex& w);  // exp(w log z)
// b^w for a positive real base given through log(b)
BigComplex pow_from_log(const BigReal& log_base, const BigComplex& w);
BigComplex polar(const BigReal& r, const BigReal& theta);

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

// Number of agreeing significant decimal digits, capped at `cap`.
double agreeing_digits(const BigComplex& a, const BigComplex& b, double cap = 1000.0);
double agreeing_digits(const BigReal& a, const BigReal& b, double cap = 1000.0);

// Decimal rendering of an exact rational.
std::string rational_to_string(const BigRational& q);
BigRational rational_from_string(const std::string& s);

BigInteger factorial(unsigned long n);
BigInteger binomial(long n, long k);

}  // namespace zm
