#include "g2an/series.hpp"

#include "g2an/errors.hpp"

namespace g2an {

TruncatedSeries::TruncatedSeries(BigComplex center, std::size_t order, long precision_bits)
    : center_(std::move(center)), coeffs_(order, BigComplex(precision_bits)) {
    if (order == 0) throw DomainError("TruncatedSeries: order must be positive");
}

TruncatedSeries::TruncatedSeries(BigComplex center, std::vector<BigComplex> coeffs)
    : center_(std::move(center)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("TruncatedSeries: order must be positive");
}

TruncatedSeries TruncatedSeries::constant(const BigComplex& center, const BigComplex& value,
                                          std::size_t order) {
    TruncatedSeries s(center, order, value.precision());
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::unit(const BigComplex& center, std::size_t order,
                                      long precision_bits) {
    return constant(center, BigComplex(1L, precision_bits), order);
}

long TruncatedSeries::precision() const { return coeffs_[0].precision(); }

namespace {
void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!(a.center() == b.center()))
        throw DomainError("TruncatedSeries: center mismatch");
    if (a.order() != b.order())
        throw DomainError("TruncatedSeries: order mismatch");
}
} // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_compatible(*this, o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_compatible(*this, o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = -r.coeffs_[k];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const BigComplex& s) {
    TruncatedSeries r = a;
    for (std::size_t k = 0; k < r.order(); ++k) r.coeff(k) = r.coeff(k) * s;
    return r;
}

TruncatedSeries TruncatedSeries::shift_down() const {
    if (coeffs_.size() < 2)
        throw DomainError("TruncatedSeries: cannot shift an order-1 series");
    std::vector<BigComplex> shifted(coeffs_.begin() + 1, coeffs_.end());
    shifted.push_back(BigComplex(precision()));
    return TruncatedSeries(center_, std::move(shifted));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
    if (new_order == 0 || new_order > coeffs_.size())
        throw DomainError("TruncatedSeries: bad truncation order");
    return TruncatedSeries(center_,
                           std::vector<BigComplex>(coeffs_.begin(), coeffs_.begin() + new_order));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!(a.center() == b.center()))
        throw DomainError("series_mul: center mismatch");
    if (a.order() != b.order())
        throw DomainError("series_mul: order mismatch");
    const std::size_t n = a.order();
    TruncatedSeries r(a.center(), n, std::max(a.precision(), b.precision()));
    for (std::size_t k = 0; k < n; ++k) {
        BigComplex acc(r.precision());
        for (std::size_t j = 0; j <= k; ++j) acc += a.coeff(j) * b.coeff(k - j);
        r.coeff(k) = acc;
    }
    return r;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
    if (a.coeff(0).is_zero())
        throw DomainError("series_reciprocal: constant term vanishes (shift the zero out first)");
    const std::size_t n = a.order();
    TruncatedSeries r(a.center(), n, a.precision());
    r.coeff(0) = 1L / a.coeff(0);
    for (std::size_t k = 1; k < n; ++k) {
        BigComplex acc(a.precision());
        for (std::size_t j = 1; j <= k; ++j) acc += a.coeff(j) * r.coeff(k - j);
        r.coeff(k) = -acc / a.coeff(0);
    }
    return r;
}

} // namespace g2an
