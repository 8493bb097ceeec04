#pragma once

#include "g2an/bigcomplex.hpp"
#include "g2an/series.hpp"

#include <cstddef>
#include <vector>

namespace g2an {

// Dense univariate polynomial over BigComplex; coeffs[k] multiplies z^k.
// Exactly-zero leading coefficients are trimmed on construction.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigComplex> coeffs);

    static Poly zero(long precision_bits);
    static Poly from_roots(const std::vector<BigComplex>& roots, const BigComplex& leading);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<BigComplex>& coeffs() const { return coeffs_; }
    const BigComplex& coeff(std::size_t k) const { return coeffs_[k]; }
    const BigComplex& leading() const { return coeffs_.back(); }
    long precision() const;

    BigComplex eval(const BigComplex& z) const;
    Poly derivative(unsigned k = 1) const;

    // Taylor expansion at `center`, truncated to `order` terms.
    TruncatedSeries taylor(const BigComplex& center, std::size_t order) const;

    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, long s);

    // Largest coefficient magnitude; 0 for the zero polynomial.
    BigReal coeff_scale() const;

private:
    std::vector<BigComplex> coeffs_;
};

struct RootFindOptions {
    // Roots closer than this trigger RootClusterError (the caustic case).
    double cluster_threshold = 0.05;
    int aberth_max_iterations = 400;
    int newton_max_iterations = 100;
};

// All complex roots via Aberth-Ehrlich simultaneous iteration followed by a
// per-root Newton polish; sorted lexicographically by (Re, Im). Each returned
// root r satisfies |p(r)| <= 2^-(prec-8) * coeff_scale * max(1,|r|)^degree.
std::vector<BigComplex> find_roots(const Poly& p, const RootFindOptions& opts = {});

} // namespace g2an
