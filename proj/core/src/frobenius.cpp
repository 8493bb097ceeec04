#include "g2an/frobenius.hpp"

#include "g2an/errors.hpp"
#include "g2an/rng.hpp"
#include "g2an/series.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace g2an {

long ParamPoint::precision() const {
    long p = kMinPrecisionBits;
    for (const auto& v : t) p = std::max(p, v.precision());
    return p;
}

long FrobeniusPoint::precision() const {
    long p = kMinPrecisionBits;
    for (const auto& v : z) p = std::max(p, v.precision());
    return p;
}

const BigComplex& FrobeniusPoint::C(int i, int k) const {
    static const BigComplex exact_zero(kMinPrecisionBits);
    if (k > c_max()) return exact_zero;
    return Ctab[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
}

Poly build_superpotential(const ParamPoint& p) {
    if (p.n < 1 || static_cast<int>(p.t.size()) != p.n)
        throw DomainError("build_superpotential: need n >= 1 values t_1..t_n");
    const long prec = p.precision();
    std::vector<BigComplex> c(static_cast<std::size_t>(p.n) + 2, BigComplex(prec));
    for (int a = 1; a <= p.n; ++a) c[static_cast<std::size_t>(a - 1)] = p.t[static_cast<std::size_t>(a - 1)];
    // z^n coefficient stays zero; leading coefficient is 1.
    c[static_cast<std::size_t>(p.n + 1)] = BigComplex(1L, prec);
    return Poly(std::move(c));
}

namespace {

// Permute `roots` so entry i is the unmatched root nearest ref[i].
std::vector<BigComplex> match_to_reference(std::vector<BigComplex> roots,
                                           const std::vector<BigComplex>& ref) {
    std::vector<BigComplex> out;
    out.reserve(roots.size());
    std::vector<bool> used(roots.size(), false);
    for (const auto& target : ref) {
        std::size_t best = roots.size();
        BigReal best_d(0L, target.precision());
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (used[j]) continue;
            BigReal d = abs(roots[j] - target);
            if (best == roots.size() || d < best_d) {
                best = j;
                best_d = d;
            }
        }
        used[best] = true;
        out.push_back(roots[best]);
    }
    return out;
}

FrobeniusPoint make_point(const ParamPoint& p, const FrobeniusPoint* ref) {
    FrobeniusPoint fp;
    fp.n = p.n;
    fp.t = p.t;
    fp.lambda = build_superpotential(p);
    const long prec = fp.lambda.precision();
    const int kmax = fp.c_max();

    fp.lambda_derivs.resize(static_cast<std::size_t>(kmax) + 1);
    fp.lambda_derivs[0] = fp.lambda;
    for (int k = 1; k <= kmax; ++k)
        fp.lambda_derivs[static_cast<std::size_t>(k)] =
            fp.lambda_derivs[static_cast<std::size_t>(k - 1)].derivative();

    try {
        fp.z = find_roots(fp.lambda_derivs[1]);
    } catch (const RootClusterError& e) {
        throw CausticError(std::string("build_point: parameter point lies on the caustic (") +
                           e.what() + ")");
    }
    if (ref) fp.z = match_to_reference(std::move(fp.z), ref->z);

    const std::size_t n = static_cast<std::size_t>(p.n);
    fp.u.reserve(n);
    fp.hsq.reserve(n);
    fp.h.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        fp.u.push_back(fp.lambda.eval(fp.z[i]));
        BigComplex d2 = fp.lambda_derivs[2].eval(fp.z[i]);
        if (d2.is_zero()) throw CausticError("build_point: lambda''(z_i) vanishes");
        fp.hsq.push_back(1L / d2);
        BigComplex hi = sqrt(fp.hsq.back());
        if (ref) {
            // Follow the reference branch rather than the principal one.
            if (abs(-hi - ref->h[i]) < abs(hi - ref->h[i])) hi = -hi;
        }
        fp.h.push_back(hi);
    }

    fp.Ctab.assign(n, std::vector<BigComplex>(static_cast<std::size_t>(kmax) + 1, BigComplex(prec)));
    for (std::size_t i = 0; i < n; ++i) {
        BigComplex d2 = fp.lambda_derivs[2].eval(fp.z[i]);
        for (int k = 3; k <= std::min(kmax, p.n + 1); ++k)
            fp.Ctab[i][static_cast<std::size_t>(k)] =
                fp.lambda_derivs[static_cast<std::size_t>(k)].eval(fp.z[i]) / d2;
        // k > n+1 stays an exact zero: derivative order exceeds the degree.
    }

    fp.gam.assign(n, std::vector<BigComplex>(n, BigComplex(prec)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            BigComplex g = fp.h[i] * fp.h[j] / pow_i(fp.zdiff(static_cast<int>(i), static_cast<int>(j)), 2);
            fp.gam[i][j] = g;
            fp.gam[j][i] = g;
        }

    fp.H = compute_H(fp);

    // Construction-time self-check: the closed form (used as the stored value)
    // must agree with the definitional sum.
    std::vector<BigComplex> Hdef = compute_H_definition(fp);
    BigReal tol = ldexp2(BigReal(1L, prec), -(prec / 2));
    for (std::size_t i = 0; i < n; ++i) {
        if (!(rel_diff(fp.H[i], Hdef[i]) <= tol))
            throw Error("build_point: H_i closed form disagrees with its definition");
    }
    return fp;
}

} // namespace

FrobeniusPoint build_point(const ParamPoint& p) { return make_point(p, nullptr); }

FrobeniusPoint build_point_matched(const ParamPoint& p, const FrobeniusPoint& ref) {
    return make_point(p, &ref);
}

std::vector<BigComplex> compute_H(const FrobeniusPoint& fp) {
    std::vector<BigComplex> H;
    H.reserve(static_cast<std::size_t>(fp.n));
    for (int i = 0; i < fp.n; ++i) {
        BigComplex c3 = fp.C(i, 3), c4 = fp.C(i, 4);
        H.push_back(fp.hsq[static_cast<std::size_t>(i)] * (c3 * c3 - c4) / 48);
    }
    return H;
}

std::vector<BigComplex> compute_H_definition(const FrobeniusPoint& fp) {
    const long prec = fp.precision();
    std::vector<BigComplex> H;
    H.reserve(static_cast<std::size_t>(fp.n));
    for (int i = 0; i < fp.n; ++i) {
        BigComplex acc(prec);
        for (int j = 0; j < fp.n; ++j) {
            if (j == i) continue;
            BigComplex g = fp.gamma(i, j);
            acc += fp.udiff(i, j) * g * g;
        }
        H.push_back(acc / 2);
    }
    return H;
}

BigComplex lame_partial(const FrobeniusPoint& fp, int i, int k) {
    const std::size_t si = static_cast<std::size_t>(i), sk = static_cast<std::size_t>(k);
    if (i != k) return fp.h[si] * fp.hsq[sk] / pow_i(fp.zdiff(i, k), 2);
    BigComplex c3 = fp.C(i, 3), c4 = fp.C(i, 4);
    return fp.h[si] * fp.hsq[si] * (c3 * c3 / 4 - c4 / 6);
}

BigComplex rotation_partial(const FrobeniusPoint& fp, int i, int j, int k) {
    if (i == j) throw DomainError("rotation_partial: requires i != j");
    const std::size_t si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j),
                      sk = static_cast<std::size_t>(k);
    if (k != i && k != j)
        return fp.h[si] * fp.h[sj] * fp.hsq[sk] /
               (pow_i(fp.zdiff(i, k), 2) * pow_i(fp.zdiff(j, k), 2));
    if (k == j) return rotation_partial(fp, j, i, j); // gamma is symmetric
    BigComplex zij = fp.zdiff(i, j);
    BigComplex c3 = fp.C(i, 3), c4 = fp.C(i, 4);
    BigComplex bracket = 3L / pow_i(zij, 2) + c3 / zij + c3 * c3 / 4 - c4 / 6;
    return fp.h[si] * fp.hsq[si] * fp.h[sj] / pow_i(zij, 2) * bracket;
}

std::vector<BigComplex> flat_coordinates(const ParamPoint& p) {
    const long prec = p.precision();
    const int n = p.n;
    const std::size_t order = static_cast<std::size_t>(n) + 3;
    const BigComplex s0(prec); // series variable centered at 0

    // lambda(1/s) = s^-(n+1) (1 + W(s)), W(s) = sum_a t_a s^{n+2-a}.
    TruncatedSeries W(s0, order, prec);
    for (int a = 1; a <= n; ++a) {
        std::size_t e = static_cast<std::size_t>(n + 2 - a);
        if (e < order) W.coeff(e) += p.t[static_cast<std::size_t>(a - 1)];
    }

    std::vector<BigComplex> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int a = 1; a <= n; ++a) {
        // (1 + W)^e by the binomial series; W has no constant term, so powers
        // of W contribute from strictly increasing orders.
        BigReal e = BigReal(static_cast<long>(n + 1 - a), prec) / static_cast<long>(n + 1);
        TruncatedSeries acc = TruncatedSeries::unit(s0, order, prec);
        TruncatedSeries wpow = TruncatedSeries::unit(s0, order, prec);
        BigReal binom(1L, prec);
        for (std::size_t j = 1; j < order; ++j) {
            binom = binom * (e - static_cast<long>(j - 1)) / static_cast<long>(j);
            wpow = series_mul(wpow, W);
            acc += wpow * BigComplex(binom, BigReal(0L, prec));
        }
        BigComplex coeff = acc.coeff(static_cast<std::size_t>(n + 2 - a));
        v.push_back(coeff * static_cast<long>(n + 1) / static_cast<long>(n + 1 - a));
    }
    return v;
}

namespace {

// Gaussian elimination with partial pivoting; A is row-major n x n.
std::vector<BigComplex> solve_linear(std::vector<std::vector<BigComplex>> A,
                                     std::vector<BigComplex> b, long prec) {
    const std::size_t n = b.size();
    BigReal scale(0L, prec);
    for (const auto& row : A)
        for (const auto& v : row) scale = max(scale, abs(v));
    BigReal tiny = ldexp2(max(scale, BigReal(1L, prec)), -(prec / 2));

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs(A[r][col]) > abs(A[piv][col])) piv = r;
        if (!(abs(A[piv][col]) > tiny))
            throw SingularJacobianError("solve_linear: pivot below threshold");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            BigComplex f = A[r][col] / A[col][col];
            for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<BigComplex> x(n, BigComplex(prec));
    for (std::size_t r = n; r-- > 0;) {
        BigComplex acc = b[r];
        for (std::size_t c = r + 1; c < n; ++c) acc -= A[r][c] * x[c];
        x[r] = acc / A[r][r];
    }
    return x;
}

} // namespace

ParamPoint invert_u_to_t(int n, const std::vector<BigComplex>& u_target,
                         const ParamPoint& t_guess) {
    if (t_guess.n != n || static_cast<int>(u_target.size()) != n)
        throw DomainError("invert_u_to_t: inconsistent dimensions");
    const long prec = t_guess.precision();
    const std::size_t sn = static_cast<std::size_t>(n);

    BigReal scale(1L, prec);
    for (const auto& v : u_target) scale = max(scale, abs(v));
    const BigReal tol = ldexp2(scale, -(prec - 16));

    ParamPoint t = t_guess;
    FrobeniusPoint fp = build_point(t);
    constexpr int kMaxIter = 60;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        BigReal err(0L, prec);
        std::vector<BigComplex> rhs(sn, BigComplex(prec));
        for (std::size_t i = 0; i < sn; ++i) {
            rhs[i] = u_target[i] - fp.u[i];
            err = max(err, abs(rhs[i]));
        }
        if (err <= tol) return t;

        // J[i][a] = du_i/dt_{a+1} = z_i^a; the chain rule kills the
        // lambda'(z_i) dz_i term.
        std::vector<std::vector<BigComplex>> J(sn, std::vector<BigComplex>(sn, BigComplex(prec)));
        for (std::size_t i = 0; i < sn; ++i)
            for (std::size_t a = 0; a < sn; ++a) J[i][a] = pow_i(fp.z[i], static_cast<long>(a));
        std::vector<BigComplex> dt = solve_linear(std::move(J), std::move(rhs), prec);
        for (std::size_t a = 0; a < sn; ++a) t.t[a] += dt[a];

        try {
            // Keep labels and branches continuous along the Newton path.
            fp = build_point_matched(t, fp);
        } catch (const CausticError& e) {
            throw NonConvergenceError(std::string("invert_u_to_t: path hit the caustic (") +
                                      e.what() + ")");
        }
    }
    throw NonConvergenceError("invert_u_to_t: iteration cap reached");
}

std::vector<ParamPoint> sample_admissible(int n, std::uint64_t seed, int count,
                                          long precision_bits, const SampleOptions& opts) {
    if (n < 1) throw DomainError("sample_admissible: n must be >= 1");
    SplitMix64 gen(mix_seed(seed, 0x616E5F73616D70ULL + static_cast<std::uint64_t>(n)));
    std::vector<ParamPoint> out;
    out.reserve(static_cast<std::size_t>(count));

    RootFindOptions ropts;
    ropts.cluster_threshold = opts.cluster_threshold;

    while (static_cast<int>(out.size()) < count) {
        bool accepted = false;
        for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
            ParamPoint p;
            p.n = n;
            p.t.reserve(static_cast<std::size_t>(n));
            for (int a = 0; a < n; ++a) {
                double re = gen.next_symmetric();
                double im = gen.next_symmetric();
                p.t.emplace_back(re, im, precision_bits);
            }
            Poly dlam = build_superpotential(p).derivative();
            std::vector<BigComplex> roots;
            try {
                roots = find_roots(dlam, ropts);
            } catch (const RootClusterError&) {
                continue;
            }
            BigReal rmax(opts.max_root_radius, precision_bits);
            bool ok = true;
            for (const auto& r : roots)
                if (abs(r) > rmax) { ok = false; break; }
            if (ok && n > 1) {
                Poly lam = build_superpotential(p);
                BigReal usep(opts.min_u_separation, precision_bits);
                std::vector<BigComplex> uvals;
                uvals.reserve(roots.size());
                for (const auto& r : roots) uvals.push_back(lam.eval(r));
                for (std::size_t i = 0; i < uvals.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < uvals.size(); ++j)
                        if (abs(uvals[i] - uvals[j]) < usep) { ok = false; break; }
            }
            if (ok) {
                out.push_back(std::move(p));
                accepted = true;
                break;
            }
        }
        if (!accepted)
            throw RejectionExhaustedError("sample_admissible: attempt budget exhausted for n=" +
                                          std::to_string(n));
    }
    return out;
}

Jet2 sample_jet(int n, std::uint64_t seed, long precision_bits) {
    SplitMix64 gen(mix_seed(seed, 0x616E5F6A6574ULL + static_cast<std::uint64_t>(n)));
    Jet2 jet;
    jet.ux.reserve(static_cast<std::size_t>(n));
    jet.uxx.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // ratios u_{k,x}/u_{i,x} appear downstream; keep magnitudes in [1/4, ~1.42]
        double re = 0.0, im = 0.0;
        do {
            re = gen.next_symmetric();
            im = gen.next_symmetric();
        } while (re * re + im * im < 0.0625);
        jet.ux.emplace_back(re, im, precision_bits);
    }
    for (int i = 0; i < n; ++i)
        jet.uxx.emplace_back(gen.next_symmetric(), gen.next_symmetric(), precision_bits);
    return jet;
}

FrobeniusPoint flip_branch(const FrobeniusPoint& fp, int m) {
    FrobeniusPoint out = fp;
    const std::size_t sm = static_cast<std::size_t>(m);
    out.h[sm] = -out.h[sm];
    for (int j = 0; j < out.n; ++j) {
        if (j == m) continue;
        const std::size_t sj = static_cast<std::size_t>(j);
        out.gam[sm][sj] = -out.gam[sm][sj];
        out.gam[sj][sm] = -out.gam[sj][sm];
    }
    return out;
}

} // namespace g2an
