#include "g2an/bigcomplex.hpp"

#include "g2an/errors.hpp"

#include <gmp.h>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <vector>

namespace g2an {

namespace {
long clamp_prec(long bits) { return std::max(bits, kMinPrecisionBits); }
} // namespace

BigReal::BigReal(long precision_bits) {
    mpfr_init2(v_, clamp_prec(precision_bits));
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(double v, long precision_bits) {
    mpfr_init2(v_, clamp_prec(precision_bits));
    mpfr_set_d(v_, v, MPFR_RNDN);
}

BigReal::BigReal(long v, long precision_bits) {
    mpfr_init2(v_, clamp_prec(precision_bits));
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigReal::BigReal(const std::string& decimal, long precision_bits) {
    mpfr_init2(v_, clamp_prec(precision_bits));
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw DomainError("BigReal: unparsable decimal string '" + decimal + "'");
    }
}

BigReal::BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
    v_[0] = o.v_[0];
    o.v_[0]._mpfr_d = nullptr;
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        if (v_[0]._mpfr_d) mpfr_clear(v_);
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    if (this != &o) {
        if (v_[0]._mpfr_d) mpfr_clear(v_);
        v_[0] = o.v_[0];
        o.v_[0]._mpfr_d = nullptr;
    }
    return *this;
}

BigReal::~BigReal() {
    if (v_[0]._mpfr_d) mpfr_clear(v_);
}

BigReal BigReal::ulp() const {
    if (is_zero()) return BigReal(0L, precision());
    BigReal one(1L, precision());
    return ldexp2(one, mpfr_get_exp(v_) - precision());
}

namespace {

BigReal binop(const BigReal& a, const BigReal& b,
              int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
    BigReal r(std::max(a.precision(), b.precision()));
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

} // namespace

BigReal& BigReal::operator+=(const BigReal& o) { *this = *this + o; return *this; }
BigReal& BigReal::operator-=(const BigReal& o) { *this = *this - o; return *this; }
BigReal& BigReal::operator*=(const BigReal& o) { *this = *this * o; return *this; }
BigReal& BigReal::operator/=(const BigReal& o) { *this = *this / o; return *this; }

BigReal operator+(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_add); }
BigReal operator-(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_sub); }
BigReal operator*(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_mul); }
BigReal operator/(const BigReal& a, const BigReal& b) { return binop(a, b, mpfr_div); }

BigReal operator+(const BigReal& a, long b) {
    BigReal r(a.precision());
    mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
BigReal operator-(const BigReal& a, long b) {
    BigReal r(a.precision());
    mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
BigReal operator*(const BigReal& a, long b) {
    BigReal r(a.precision());
    mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
BigReal operator/(const BigReal& a, long b) {
    BigReal r(a.precision());
    mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
BigReal operator+(long a, const BigReal& b) { return b + a; }
BigReal operator-(long a, const BigReal& b) {
    BigReal r(b.precision());
    mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
BigReal operator*(long a, const BigReal& b) { return b * a; }
BigReal operator/(long a, const BigReal& b) {
    BigReal r(b.precision());
    mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}

BigReal BigReal::operator-() const {
    BigReal r(precision());
    mpfr_neg(r.raw(), v_, MPFR_RNDN);
    return r;
}

BigReal abs(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

BigReal sqrt(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return (a < b) ? b : a; }
BigReal min(const BigReal& a, const BigReal& b) { return (b < a) ? b : a; }

BigReal hypot(const BigReal& a, const BigReal& b) {
    BigReal r(std::max(a.precision(), b.precision()));
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigReal ldexp2(const BigReal& a, long e) {
    BigReal r(a.precision());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

std::string BigReal::to_decimal_exact() const {
    if (is_zero()) return "0";
    // v = m * 2^e with m an integer.
    mpz_t m;
    mpz_init(m);
    mpfr_exp_t e = mpfr_get_z_2exp(m, v_);
    std::string out;
    if (e >= 0) {
        mpz_mul_2exp(m, m, static_cast<mp_bitcnt_t>(e));
        char* s = mpz_get_str(nullptr, 10, m);
        out = s;
        std::free(s);
    } else {
        // m * 2^-k = (m * 5^k) / 10^k: exact decimal with k fractional digits.
        unsigned long k = static_cast<unsigned long>(-e);
        mpz_t five;
        mpz_init_set_ui(five, 5);
        mpz_pow_ui(five, five, k);
        mpz_mul(m, m, five);
        mpz_clear(five);
        bool neg = mpz_sgn(m) < 0;
        mpz_abs(m, m);
        char* s = mpz_get_str(nullptr, 10, m);
        std::string digits = s;
        std::free(s);
        if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
        digits.insert(digits.size() - k, 1, '.');
        while (digits.back() == '0') digits.pop_back();
        if (digits.back() == '.') digits.pop_back();
        out = (neg ? "-" : "") + digits;
    }
    mpz_clear(m);
    return out;
}

std::string BigReal::to_decimal(int significant_digits) const {
    if (is_zero()) return "0";
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    mpfr_exp_t exp10 = 0;
    char* s = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(significant_digits), v_, MPFR_RNDN);
    std::string digits = s;
    mpfr_free_str(s);
    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits.erase(0, 1);
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string mant = digits.substr(0, 1);
    if (digits.size() > 1) mant += "." + digits.substr(1);
    // mpfr's exponent counts digits before the point; e10 = exp10 - 1 for d.ddd form.
    return (neg ? "-" : "") + mant + "e" + std::to_string(static_cast<long>(exp10) - 1);
}

BigComplex::BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {
    const long p = std::max(re_.precision(), im_.precision());
    if (re_.precision() != p) re_ = re_ + BigReal(0L, p);
    if (im_.precision() != p) im_ = im_ + BigReal(0L, p);
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal d = norm(b);
    return BigComplex((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
}

BigComplex operator*(const BigComplex& a, const BigReal& s) {
    return BigComplex(a.re_ * s, a.im_ * s);
}

BigComplex operator/(const BigComplex& a, const BigReal& s) {
    return BigComplex(a.re_ / s, a.im_ / s);
}

BigComplex operator*(const BigComplex& a, long s) {
    return BigComplex(a.re_ * s, a.im_ * s);
}

BigComplex operator/(const BigComplex& a, long s) {
    return BigComplex(a.re_ / s, a.im_ / s);
}

BigComplex operator/(long s, const BigComplex& a) {
    BigReal d = norm(a);
    return BigComplex(s * a.re_ / d, -s * a.im_ / d);
}

BigComplex sqrt(const BigComplex& a) {
    const long p = a.precision();
    if (a.im_.is_zero()) {
        if (!a.re_.is_negative()) return BigComplex(sqrt(a.re_), BigReal(0L, p));
        return BigComplex(BigReal(0L, p), sqrt(-a.re_));
    }
    // sqrt(r e^{i t}) via half-angle: re = sqrt((|a|+re)/2), im = sign(im) sqrt((|a|-re)/2)
    BigReal m = abs(a);
    BigReal w = sqrt((m + a.re_) / 2);
    BigReal v = sqrt((m - a.re_) / 2);
    if (a.im_.is_negative()) v = -v;
    return BigComplex(w, v);
}

std::string BigComplex::to_string(int significant_digits) const {
    return "(" + re_.to_decimal(significant_digits) + ", " + im_.to_decimal(significant_digits) + ")";
}

BigComplex pow_i(const BigComplex& base, long exponent) {
    if (exponent < 0) return 1L / pow_i(base, -exponent);
    BigComplex acc(1L, base.precision());
    BigComplex b = base;
    long e = exponent;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

BigReal pow_i(const BigReal& base, long exponent) {
    BigReal r(base.precision());
    mpfr_pow_si(r.raw(), base.raw(), exponent, MPFR_RNDN);
    return r;
}

BigReal rel_diff(const BigComplex& a, const BigComplex& b) {
    BigReal num = abs(a - b);
    BigReal den = max(abs(a), abs(b));
    if (den.is_zero()) return BigReal(0L, a.precision());
    return num / den;
}

} // namespace g2an
