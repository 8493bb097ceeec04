#pragma once

#include "g2an/bigcomplex.hpp"
#include "g2an/poly.hpp"

#include <cstdint>
#include <vector>

namespace g2an {

// Parameters (t_1, ..., t_n) of the unfolding z^{n+1} + t_n z^{n-1} + ... + t_1.
// t[alpha-1] holds t_alpha.
struct ParamPoint {
    int n = 0;
    std::vector<BigComplex> t;

    long precision() const;
};

// First and second x-derivatives of the canonical coordinates; the free jet
// arguments of the genus-two G-function. Every ux component must be nonzero
// wherever ratios u_{k,x}/u_{i,x} are evaluated.
struct Jet2 {
    std::vector<BigComplex> ux;
    std::vector<BigComplex> uxx;
};

// Full critical-point data bundle at one parameter point: superpotential,
// critical points z_i (sorted by (Re, Im)), canonical coordinates u_i,
// Lame data h_i^2 = 1/lambda''(z_i) and a fixed branch h_i, the normalized
// derivative table C_ik = lambda^(k)(z_i)/lambda''(z_i), rotation
// coefficients gamma_ij = h_i h_j / z_ij^2, and H_i.
struct FrobeniusPoint {
    int n = 0;
    std::vector<BigComplex> t;
    Poly lambda;
    std::vector<Poly> lambda_derivs; // [k] = d^k lambda / dz^k, k = 0..c_max
    std::vector<BigComplex> z;
    std::vector<BigComplex> u;
    std::vector<BigComplex> hsq;
    std::vector<BigComplex> h;
    std::vector<std::vector<BigComplex>> Ctab; // [i][k], k <= c_max; exact zeros for k > n+1
    std::vector<std::vector<BigComplex>> gam;  // symmetric, zero diagonal
    std::vector<BigComplex> H;

    int c_max() const { return n + 1 > 8 ? n + 1 : 8; }
    long precision() const;

    BigComplex zdiff(int i, int j) const { return z[i] - z[j]; }
    BigComplex udiff(int i, int j) const { return u[i] - u[j]; }
    const BigComplex& gamma(int i, int j) const { return gam[i][j]; }
    // C_ik for k >= 3; exact zero beyond the table (derivative order > degree).
    const BigComplex& C(int i, int k) const;
};

// Monic degree-(n+1) polynomial with zero z^n coefficient; t_alpha multiplies
// z^{alpha-1}.
Poly build_superpotential(const ParamPoint& p);

// Throws CausticError when the critical points of lambda collide.
FrobeniusPoint build_point(const ParamPoint& p);

// As build_point, but critical points are labeled by proximity to `ref` and
// the branch of each h_i follows ref's sign instead of the principal one.
// Used by finite-difference probes, where labels and branches must vary
// continuously with t.
FrobeniusPoint build_point_matched(const ParamPoint& p, const FrobeniusPoint& ref);

// H_i = (h_i^2/48)(C_i3^2 - C_i4).
std::vector<BigComplex> compute_H(const FrobeniusPoint& fp);
// H_i = 1/2 sum_{j != i} u_ij gamma_ij^2 (definitional cross-check).
std::vector<BigComplex> compute_H_definition(const FrobeniusPoint& fp);

// d h_i / d u_k: h_i h_k^2 / z_ik^2 off-diagonal,
// h_i^3 (C_i3^2/4 - C_i4/6) on the diagonal.
BigComplex lame_partial(const FrobeniusPoint& fp, int i, int k);

// d gamma_ij / d u_k for i != j; the three index cases of Lemma forms.
BigComplex rotation_partial(const FrobeniusPoint& fp, int i, int j, int k);

// Flat coordinates v^alpha via the residue at infinity of
// lambda^{(n+1-alpha)/(n+1)}, extracted from a binomial series.
std::vector<BigComplex> flat_coordinates(const ParamPoint& p);

// Multivariate Newton inversion of t -> u(t); Jacobian du_i/dt_alpha =
// z_i^{alpha-1}. u_target components must be labeled like build_point(t_guess).
ParamPoint invert_u_to_t(int n, const std::vector<BigComplex>& u_target, const ParamPoint& t_guess);

struct SampleOptions {
    double cluster_threshold = 0.05; // delta: min |z_i - z_j|
    double max_root_radius = 10.0;
    double min_u_separation = 5e-4; // delta * 1e-2
    int max_attempts = 10000;       // per requested point
};

// Deterministic admissible parameter points: each t_alpha uniform on the
// complex box [-1,1] x [-1,1], rejected unless the critical data passes the
// separation bounds above. Same (seed, n, count) always yields the same list.
std::vector<ParamPoint> sample_admissible(int n, std::uint64_t seed, int count,
                                          long precision_bits = kDefaultPrecisionBits,
                                          const SampleOptions& opts = {});

// Deterministic jet with |ux_i| bounded away from zero.
Jet2 sample_jet(int n, std::uint64_t seed, long precision_bits = kDefaultPrecisionBits);

// Copy with h_m (and hence gamma_mj for all j) negated; used by the
// branch-independence checks.
FrobeniusPoint flip_branch(const FrobeniusPoint& fp, int m);

} // namespace g2an
