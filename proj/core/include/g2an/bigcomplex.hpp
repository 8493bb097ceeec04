#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace g2an {

inline constexpr long kMinPrecisionBits = 64;
inline constexpr long kDefaultPrecisionBits = 256;

// Arbitrary-precision real backed by MPFR, round-to-nearest on every
// operation. Binary operations promote to the larger operand precision.
class BigReal {
public:
    explicit BigReal(long precision_bits = kDefaultPrecisionBits);
    BigReal(double v, long precision_bits);
    BigReal(long v, long precision_bits);
    BigReal(const std::string& decimal, long precision_bits);

    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    long precision() const { return mpfr_get_prec(v_); }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // One unit in the last place at this value's exponent; 0 for a zero value.
    BigReal ulp() const;

    // Exact decimal expansion (every MPFR value is a dyadic rational).
    std::string to_decimal_exact() const;
    // Scientific notation with the given number of significant digits.
    std::string to_decimal(int significant_digits) const;

    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator+(const BigReal& a, long b);
    friend BigReal operator-(const BigReal& a, long b);
    friend BigReal operator*(const BigReal& a, long b);
    friend BigReal operator/(const BigReal& a, long b);
    friend BigReal operator+(long a, const BigReal& b);
    friend BigReal operator-(long a, const BigReal& b);
    friend BigReal operator*(long a, const BigReal& b);
    friend BigReal operator/(long a, const BigReal& b);
    BigReal operator-() const;

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    friend BigReal abs(const BigReal& a);
    friend BigReal sqrt(const BigReal& a);
    friend BigReal max(const BigReal& a, const BigReal& b);
    friend BigReal min(const BigReal& a, const BigReal& b);
    friend BigReal hypot(const BigReal& a, const BigReal& b);
    // a * 2^e, exact.
    friend BigReal ldexp2(const BigReal& a, long e);

private:
    mpfr_t v_;
};

// Complex scalar over BigReal; both components share one precision.
class BigComplex {
public:
    explicit BigComplex(long precision_bits = kDefaultPrecisionBits)
        : re_(precision_bits), im_(precision_bits) {}
    BigComplex(BigReal re, BigReal im);
    BigComplex(double re, double im, long precision_bits)
        : re_(re, precision_bits), im_(im, precision_bits) {}
    BigComplex(long re, long precision_bits) : re_(re, precision_bits), im_(0L, precision_bits) {}

    static BigComplex from_decimal(const std::string& re, const std::string& im, long precision_bits) {
        return BigComplex(BigReal(re, precision_bits), BigReal(im, precision_bits));
    }

    const BigReal& re() const { return re_; }
    const BigReal& im() const { return im_; }
    long precision() const { return re_.precision(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o) { *this = *this * o; return *this; }
    BigComplex& operator/=(const BigComplex& o) { *this = *this / o; return *this; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    BigComplex operator-() const { return BigComplex(-re_, -im_); }

    friend BigComplex operator*(const BigComplex& a, const BigReal& s);
    friend BigComplex operator*(const BigReal& s, const BigComplex& a) { return a * s; }
    friend BigComplex operator/(const BigComplex& a, const BigReal& s);
    friend BigComplex operator*(const BigComplex& a, long s);
    friend BigComplex operator*(long s, const BigComplex& a) { return a * s; }
    friend BigComplex operator/(const BigComplex& a, long s);
    friend BigComplex operator/(long s, const BigComplex& a);
    friend BigComplex operator+(const BigComplex& a, long s) { return BigComplex(a.re_ + s, a.im_); }
    friend BigComplex operator+(long s, const BigComplex& a) { return a + s; }
    friend BigComplex operator-(const BigComplex& a, long s) { return BigComplex(a.re_ - s, a.im_); }
    friend BigComplex operator-(long s, const BigComplex& a) { return BigComplex(s - a.re_, -a.im_); }

    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend BigComplex conj(const BigComplex& a) { return BigComplex(a.re_, -a.im_); }
    friend BigReal abs(const BigComplex& a) { return hypot(a.re_, a.im_); }
    // |re|^2 + |im|^2
    friend BigReal norm(const BigComplex& a) { return a.re_ * a.re_ + a.im_ * a.im_; }
    // Principal branch: cut along the negative real axis, Re(sqrt) >= 0.
    friend BigComplex sqrt(const BigComplex& a);

    // Lexicographic (Re, Im) order; fixes reporting labels only.
    friend bool lex_less(const BigComplex& a, const BigComplex& b) {
        if (a.re_ < b.re_) return true;
        if (b.re_ < a.re_) return false;
        return a.im_ < b.im_;
    }

    std::string to_string(int significant_digits = 20) const;

private:
    BigReal re_, im_;
};

// Integer power by repeated squaring; exponent may be negative.
BigComplex pow_i(const BigComplex& base, long exponent);
BigReal pow_i(const BigReal& base, long exponent);

// |a - b| / max(|a|, |b|); zero when both vanish.
BigReal rel_diff(const BigComplex& a, const BigComplex& b);

} // namespace g2an
