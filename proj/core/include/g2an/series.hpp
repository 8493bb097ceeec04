#pragma once

#include "g2an/bigcomplex.hpp"

#include <cstddef>
#include <vector>

namespace g2an {

// Truncated power series sum_k c_k (z - center)^k, k < order. Products and
// reciprocals of order-m series are again order-m series; higher terms drop.
class TruncatedSeries {
public:
    TruncatedSeries(BigComplex center, std::size_t order, long precision_bits);
    TruncatedSeries(BigComplex center, std::vector<BigComplex> coeffs);

    static TruncatedSeries constant(const BigComplex& center, const BigComplex& value, std::size_t order);
    static TruncatedSeries unit(const BigComplex& center, std::size_t order, long precision_bits);

    const BigComplex& center() const { return center_; }
    std::size_t order() const { return coeffs_.size(); }
    const BigComplex& coeff(std::size_t k) const { return coeffs_[k]; }
    BigComplex& coeff(std::size_t k) { return coeffs_[k]; }
    long precision() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    TruncatedSeries operator-() const;

    friend TruncatedSeries operator*(const TruncatedSeries& a, const BigComplex& s);
    friend TruncatedSeries operator*(const BigComplex& s, const TruncatedSeries& a) { return a * s; }

    // Drop the constant term (must already be zero or negligible) and shift
    // every exponent down by one. Used to peel a known simple zero.
    TruncatedSeries shift_down() const;

    TruncatedSeries truncated(std::size_t new_order) const;

private:
    BigComplex center_;
    std::vector<BigComplex> coeffs_;
};

// Cauchy product truncated at the common order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Series b with series_mul(a, b) = 1 + O((z-center)^order); requires a_0 != 0.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

} // namespace g2an
