#include "g2an/poly.hpp"

#include "g2an/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

namespace g2an {

Poly::Poly(std::vector<BigComplex> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::zero(long precision_bits) {
    (void)precision_bits;
    return Poly();
}

Poly Poly::from_roots(const std::vector<BigComplex>& roots, const BigComplex& leading) {
    const long prec = leading.precision();
    std::vector<BigComplex> c{leading};
    for (const auto& r : roots) {
        std::vector<BigComplex> nc(c.size() + 1, BigComplex(prec));
        for (std::size_t k = 0; k < c.size(); ++k) {
            nc[k + 1] += c[k];
            nc[k] -= r * c[k];
        }
        c = std::move(nc);
    }
    return Poly(std::move(c));
}

long Poly::precision() const {
    long p = kMinPrecisionBits;
    for (const auto& c : coeffs_) p = std::max(p, c.precision());
    return p;
}

BigComplex Poly::eval(const BigComplex& z) const {
    if (coeffs_.empty()) return BigComplex(z.precision());
    BigComplex acc = coeffs_.back();
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * z + coeffs_[k];
    return acc;
}

Poly Poly::derivative(unsigned k) const {
    Poly d = *this;
    for (unsigned round = 0; round < k; ++round) {
        if (d.coeffs_.size() <= 1) return Poly();
        std::vector<BigComplex> c(d.coeffs_.size() - 1, BigComplex(precision()));
        for (std::size_t j = 1; j < d.coeffs_.size(); ++j)
            c[j - 1] = d.coeffs_[j] * static_cast<long>(j);
        d = Poly(std::move(c));
    }
    return d;
}

TruncatedSeries Poly::taylor(const BigComplex& center, std::size_t order) const {
    // Horner in series space: s <- s*(center + w) + c_k.
    TruncatedSeries s(center, order, std::max(precision(), center.precision()));
    if (coeffs_.empty()) return s;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        // multiply by (center + w): new[j] = s[j]*center + s[j-1]
        TruncatedSeries next(center, order, s.precision());
        for (std::size_t j = 0; j < order; ++j) {
            BigComplex v = s.coeff(j) * center;
            if (j > 0) v += s.coeff(j - 1);
            next.coeff(j) = v;
        }
        next.coeff(0) += coeffs_[k];
        s = next;
    }
    return s;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    const long prec = std::max(a.precision(), b.precision());
    std::vector<BigComplex> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigComplex(prec));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    const long prec = std::max(a.precision(), b.precision());
    std::vector<BigComplex> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigComplex(prec));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, long s) {
    std::vector<BigComplex> c = a.coeffs_;
    for (auto& x : c) x = x * s;
    return Poly(std::move(c));
}

BigReal Poly::coeff_scale() const {
    BigReal m(0L, precision());
    for (const auto& c : coeffs_) m = max(m, abs(c));
    return m;
}

namespace {

BigReal root_residual_bound(const Poly& p, const BigComplex& z, long prec) {
    BigReal scale = p.coeff_scale() * pow_i(max(BigReal(1L, prec), abs(z)), p.degree());
    return ldexp2(scale, -(prec - 8));
}

// Initial guesses on a perturbed circle inside the Cauchy root bound.
std::vector<BigComplex> initial_guesses(const Poly& p, long prec) {
    const long d = p.degree();
    double maxratio = 0.0;
    for (long k = 0; k < d; ++k) {
        double r = (abs(p.coeff(k)) / abs(p.leading())).to_double();
        maxratio = std::max(maxratio, r);
    }
    const double radius = 0.5 + 0.5 * (1.0 + maxratio);
    std::vector<BigComplex> z;
    z.reserve(d);
    for (long j = 0; j < d; ++j) {
        // Irrational angle offset breaks the symmetry of real-coefficient inputs.
        double theta = 2.0 * M_PI * (static_cast<double>(j) / d) + 0.53718 + 0.031 * j;
        double r = radius * (1.0 + 0.01 * std::cos(3.1 * j));
        z.emplace_back(r * std::cos(theta), r * std::sin(theta), prec);
    }
    return z;
}

} // namespace

std::vector<BigComplex> find_roots(const Poly& p, const RootFindOptions& opts) {
    const long d = p.degree();
    if (d < 1) throw DomainError("find_roots: degree must be >= 1");
    const long prec = p.precision();

    if (d == 1) {
        std::vector<BigComplex> out{-(p.coeff(0) / p.coeff(1))};
        return out;
    }

    const Poly dp = p.derivative();
    std::vector<BigComplex> z = initial_guesses(p, prec);

    // Aberth-Ehrlich: z_i <- z_i - w_i / (1 - w_i * sum_{j != i} 1/(z_i - z_j)),
    // w_i = p(z_i)/p'(z_i).
    const BigReal stop = ldexp2(BigReal(1L, prec), -(prec / 2));
    for (int iter = 0; iter < opts.aberth_max_iterations; ++iter) {
        BigReal max_step(0L, prec);
        for (long i = 0; i < d; ++i) {
            BigComplex pv = p.eval(z[i]);
            if (pv.is_zero()) continue;
            BigComplex dv = dp.eval(z[i]);
            BigComplex w = dv.is_zero() ? BigComplex(prec) : pv / dv;
            BigComplex s(prec);
            for (long j = 0; j < d; ++j) {
                if (j == i) continue;
                s += 1L / (z[i] - z[j]);
            }
            BigComplex denom = BigComplex(1L, prec) - w * s;
            BigComplex step = abs(denom).is_zero() ? w : w / denom;
            z[i] -= step;
            max_step = max(max_step, abs(step) / max(BigReal(1L, prec), abs(z[i])));
        }
        if (max_step < stop) break;
    }

    // Newton polish each approximation to the full residual bound.
    for (long i = 0; i < d; ++i) {
        for (int iter = 0; iter < opts.newton_max_iterations; ++iter) {
            BigComplex pv = p.eval(z[i]);
            if (abs(pv) <= root_residual_bound(p, z[i], prec)) break;
            BigComplex dv = dp.eval(z[i]);
            if (dv.is_zero()) break;
            z[i] -= pv / dv;
        }
    }

    // Cluster detection precedes the residual check: a double root polishes
    // into two nearby copies that both look converged.
    BigReal thr(opts.cluster_threshold, prec);
    for (long i = 0; i < d; ++i)
        for (long j = i + 1; j < d; ++j)
            if (abs(z[i] - z[j]) < thr)
                throw RootClusterError("find_roots: roots " + std::to_string(i) + " and " +
                                       std::to_string(j) + " closer than the cluster threshold");

    for (long i = 0; i < d; ++i) {
        if (!(abs(p.eval(z[i])) <= root_residual_bound(p, z[i], prec)))
            throw NonConvergenceError("find_roots: residual bound not met for root " +
                                      std::to_string(i));
    }

    std::sort(z.begin(), z.end(), [](const BigComplex& a, const BigComplex& b) {
        return lex_less(a, b);
    });
    return z;
}

} // namespace g2an
