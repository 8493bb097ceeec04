#pragma once

#include "g2an/bigcomplex.hpp"

namespace g2an {

// Value of an identically-vanishing (or cross-checked) expression together
// with its termscale: the sum of the magnitudes of the constituent monomials.
// Relative residuals of vanishing identities are measured against the
// termscale, never against the (zero) value.
struct TermSum {
    BigComplex value;
    BigReal termscale;

    // |value| / termscale; zero when the termscale vanishes (empty sums).
    BigReal rel_residual() const {
        if (termscale.is_zero()) return BigReal(0L, abs(value).precision());
        return abs(value) / termscale;
    }
};

// Left-to-right monomial accumulator; the addition order is fixed by the call
// sequence so results are reproducible under any outer parallel schedule.
class TermAccumulator {
public:
    explicit TermAccumulator(long prec) : value_(prec), scale_(0L, prec) {}

    void add(const BigComplex& term) {
        value_ += term;
        scale_ += abs(term);
    }

    TermSum done() const { return TermSum{value_, scale_}; }

private:
    BigComplex value_;
    BigReal scale_;
};

// |a - b| relative to max(|a|, |b|, scale_floor); exact-zero agreement maps
// to zero, disagreement with no usable scale maps to one.
inline BigReal compare_against_scale(const BigComplex& a, const BigComplex& b,
                                     const BigReal& scale_floor) {
    BigReal num = abs(a - b);
    BigReal den = max(max(abs(a), abs(b)), scale_floor);
    if (den.is_zero()) return num.is_zero() ? BigReal(0L, num.precision()) : BigReal(1L, num.precision());
    return num / den;
}

} // namespace g2an
