#include "g2an/errors.hpp"
#include "g2an/frobenius.hpp"
#include "g2an/json_io.hpp"
#include "g2an/rng.hpp"

#include <doctest.h>

using namespace g2an;

namespace {

const long kPrec = 256;

ParamPoint pp(int n, std::initializer_list<double> re_vals) {
    ParamPoint p;
    p.n = n;
    for (double v : re_vals) p.t.emplace_back(v, 0.0, kPrec);
    return p;
}

// t = (0, -3): lambda = z^3 - 3z, critical points +-1
ParamPoint golden_a2() { return pp(2, {0, -3}); }

BigReal tol(double v) { return BigReal(v, kPrec); }

} // namespace

TEST_CASE("superpotential layout: t_alpha multiplies z^(alpha-1)") {
    Poly l1 = build_superpotential(pp(1, {5}));
    CHECK(l1.degree() == 2);
    CHECK(l1.coeff(0) == BigComplex(5L, kPrec));
    CHECK(l1.coeff(2) == BigComplex(1L, kPrec));

    Poly l2 = build_superpotential(golden_a2());
    CHECK(l2.degree() == 3);
    CHECK(l2.coeff(0).is_zero());
    CHECK(l2.coeff(1) == BigComplex(-3L, kPrec));
    CHECK(l2.coeff(2).is_zero()); // z^n coefficient is always zero
    CHECK(l2.coeff(3) == BigComplex(1L, kPrec));

    Poly l3 = build_superpotential(pp(3, {1, 0, 2}));
    CHECK(l3.degree() == 4);
    CHECK(l3.coeff(0) == BigComplex(1L, kPrec));
    CHECK(l3.coeff(1).is_zero());
    CHECK(l3.coeff(2) == BigComplex(2L, kPrec));
    CHECK(l3.coeff(3).is_zero());
}

TEST_CASE("golden A_2 critical data") {
    FrobeniusPoint fp = build_point(golden_a2());
    REQUIRE(fp.n == 2);
    CHECK(abs(fp.z[0] + 1L) <= tol(1e-70));
    CHECK(abs(fp.z[1] - 1L) <= tol(1e-70));
    CHECK(abs(fp.u[0] - 2L) <= tol(1e-70));
    CHECK(abs(fp.u[1] + 2L) <= tol(1e-70));
    // hsq = 1/lambda''(z) = 1/(6z)
    CHECK(abs(fp.hsq[0] + BigComplex(1L, kPrec) / 6) <= tol(1e-70));
    CHECK(abs(fp.hsq[1] - BigComplex(1L, kPrec) / 6) <= tol(1e-70));
    // C_3 = 6/(6 z_i) = 1/z_i; everything above the degree is an exact zero
    CHECK(abs(fp.C(1, 3) - 1L) <= tol(1e-70));
    CHECK(abs(fp.C(0, 3) + 1L) <= tol(1e-70));
    for (int k = 4; k <= fp.c_max() + 3; ++k) {
        CHECK(fp.C(0, k).is_zero());
        CHECK(fp.C(1, k).is_zero());
    }
    // H at the z=1 label: 1/288, equal to (1/2) u_12 gamma_12^2
    CHECK(abs(fp.H[1] - BigComplex(1L, kPrec) / 288) <= tol(1e-70));
    BigComplex g = fp.gamma(0, 1);
    CHECK(abs(fp.udiff(1, 0) * g * g / 2 - fp.H[1]) <= tol(1e-70));
    // h_i^2 lambda''(z_i) = 1
    for (int i = 0; i < 2; ++i)
        CHECK(abs(fp.hsq[static_cast<std::size_t>(i)] * fp.lambda_derivs[2].eval(fp.z[static_cast<std::size_t>(i)]) - 1L) <=
              tol(1e-70));
}

TEST_CASE("A_1 point is fully degenerate") {
    FrobeniusPoint fp = build_point(pp(1, {5}));
    CHECK(fp.z[0].is_zero());
    CHECK(abs(fp.u[0] - 5L) <= tol(1e-70));
    CHECK(abs(fp.hsq[0] - BigComplex(1L, kPrec) / 2).is_zero());
    for (int k = 3; k <= fp.c_max(); ++k) CHECK(fp.C(0, k).is_zero());
    CHECK(fp.H[0].is_zero());
}

TEST_CASE("caustic point raises CausticError") {
    CHECK_THROWS_AS((void)build_point(pp(2, {0, 0})), CausticError);
}

TEST_CASE("H closed form equals its definition on random samples") {
    auto pts = sample_admissible(5, 17, 3, kPrec);
    for (const auto& p : pts) {
        FrobeniusPoint fp = build_point(p);
        auto def = compute_H_definition(fp);
        for (int i = 0; i < fp.n; ++i) {
            BigReal den = max(max(abs(fp.H[static_cast<std::size_t>(i)]), abs(def[static_cast<std::size_t>(i)])),
                              BigReal(1e-3, kPrec));
            CHECK(abs(fp.H[static_cast<std::size_t>(i)] - def[static_cast<std::size_t>(i)]) / den <= tol(1e-60));
        }
    }
}

TEST_CASE("golden Lame partial: d h / d u at the opposite label") {
    FrobeniusPoint fp = build_point(golden_a2());
    // d_0 h_1 = h_1 h_0^2 / z_10^2 = h_1 (-1/6) / 4 = -h_1/24
    BigComplex expect = -fp.h[1] / 24;
    CHECK(abs(lame_partial(fp, 1, 0) - expect) <= tol(1e-70));
    // A_1 diagonal vanishes exactly
    FrobeniusPoint f1 = build_point(pp(1, {5}));
    CHECK(lame_partial(f1, 0, 0).is_zero());
}

TEST_CASE("e-invariance of h and gamma partials") {
    auto pts = sample_admissible(4, 23, 3, kPrec);
    for (const auto& p : pts) {
        FrobeniusPoint fp = build_point(p);
        for (int i = 0; i < fp.n; ++i) {
            BigComplex sum(kPrec);
            BigReal scale(0L, kPrec);
            for (int k = 0; k < fp.n; ++k) {
                BigComplex t = lame_partial(fp, i, k);
                sum += t;
                scale += abs(t);
            }
            CHECK(abs(sum) <= tol(1e-60) * scale);
        }
        for (int i = 0; i < fp.n; ++i)
            for (int j = i + 1; j < fp.n; ++j) {
                BigComplex sum(kPrec);
                BigReal scale(0L, kPrec);
                for (int k = 0; k < fp.n; ++k) {
                    BigComplex t = rotation_partial(fp, i, j, k);
                    sum += t;
                    scale += abs(t);
                }
                CHECK(abs(sum) <= tol(1e-60) * scale);
            }
    }
}

TEST_CASE("rotation partial requires distinct pair indices") {
    FrobeniusPoint fp = build_point(golden_a2());
    CHECK_THROWS_AS((void)rotation_partial(fp, 1, 1, 0), DomainError);
}

TEST_CASE("Darboux-Egoroff closure on random samples") {
    auto pts = sample_admissible(4, 29, 2, kPrec);
    for (const auto& p : pts) {
        FrobeniusPoint fp = build_point(p);
        for (int i = 0; i < fp.n; ++i)
            for (int j = 0; j < fp.n; ++j) {
                if (i == j) continue;
                for (int k = 0; k < fp.n; ++k) {
                    if (k == i || k == j) continue;
                    BigComplex lhs = rotation_partial(fp, i, j, k);
                    BigComplex rhs = fp.gamma(i, k) * fp.gamma(k, j);
                    CHECK(rel_diff(lhs, rhs) <= tol(1e-60));
                }
            }
    }
}

TEST_CASE("n=2 diagonal rotation partials match the defining relation") {
    FrobeniusPoint fp = build_point(golden_a2());
    // d_i gamma_ij = (sum_k (u_j - u_k) gamma_ik gamma_kj - gamma_ij)/u_ij,
    // which collapses to -gamma_ij/u_ij when n = 2.
    BigComplex expect01 = -fp.gamma(0, 1) / fp.udiff(0, 1);
    CHECK(rel_diff(rotation_partial(fp, 0, 1, 0), expect01) <= tol(1e-60));
    BigComplex expect10 = -fp.gamma(1, 0) / fp.udiff(1, 0);
    CHECK(rel_diff(rotation_partial(fp, 0, 1, 1), expect10) <= tol(1e-60));
    // their sum vanishes (e-invariance with two labels)
    CHECK(abs(rotation_partial(fp, 0, 1, 0) + rotation_partial(fp, 0, 1, 1)) <=
          tol(1e-60) * abs(fp.gamma(0, 1) / fp.udiff(0, 1)));
}

TEST_CASE("flat coordinates match the small-n closed forms") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 5; ++trial) {
        ParamPoint p1;
        p1.n = 1;
        p1.t.emplace_back(rng.next_symmetric(), rng.next_symmetric(), kPrec);
        auto v1 = flat_coordinates(p1);
        CHECK(rel_diff(v1[0], p1.t[0]) <= tol(1e-60));

        ParamPoint p2;
        p2.n = 2;
        for (int a = 0; a < 2; ++a) p2.t.emplace_back(rng.next_symmetric(), rng.next_symmetric(), kPrec);
        auto v2 = flat_coordinates(p2);
        CHECK(rel_diff(v2[0], p2.t[0]) <= tol(1e-60));
        CHECK(rel_diff(v2[1], p2.t[1]) <= tol(1e-60));

        ParamPoint p3;
        p3.n = 3;
        for (int a = 0; a < 3; ++a) p3.t.emplace_back(rng.next_symmetric(), rng.next_symmetric(), kPrec);
        auto v3 = flat_coordinates(p3);
        BigComplex expect = p3.t[0] - p3.t[2] * p3.t[2] / 8;
        CHECK(abs(v3[0] - expect) <= tol(1e-60) * max(BigReal(1L, kPrec), abs(expect)));
        CHECK(rel_diff(v3[1], p3.t[1]) <= tol(1e-60));
        CHECK(rel_diff(v3[2], p3.t[2]) <= tol(1e-60));
    }
}

TEST_CASE("u -> t inversion round trip and finite-difference consistency") {
    auto pts = sample_admissible(3, 57, 2, kPrec);
    for (const auto& p : pts) {
        FrobeniusPoint fp = build_point(p);
        ParamPoint back = invert_u_to_t(3, fp.u, p);
        for (std::size_t a = 0; a < 3; ++a)
            CHECK(abs(back.t[a] - p.t[a]) <= tol(1e-70) * max(BigReal(1L, kPrec), abs(p.t[a])));

        // perturb u_0 and confirm (t' - t)/eps approximates column 0 of
        // (du/dt)^{-1}; the Jacobian is the Vandermonde du_i/dt_a = z_i^a,
        // so its inverse columns solve J x = e_0
        BigReal eps = ldexp2(BigReal(1L, kPrec), -60);
        std::vector<BigComplex> target = fp.u;
        target[0] += BigComplex(eps, BigReal(0L, kPrec));
        ParamPoint shifted = invert_u_to_t(3, target, p);
        FrobeniusPoint fp2 = build_point_matched(shifted, fp);
        CHECK(abs(fp2.u[0] - target[0]) <= tol(1e-65));

        // invert the 3x3 Vandermonde by hand via Cramer-free elimination
        std::vector<std::vector<BigComplex>> J(3, std::vector<BigComplex>(3, BigComplex(kPrec)));
        for (int i = 0; i < 3; ++i)
            for (int a = 0; a < 3; ++a) J[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] = pow_i(fp.z[static_cast<std::size_t>(i)], a);
        // solve J x = e_0 by Gaussian elimination
        std::vector<BigComplex> rhs{BigComplex(1L, kPrec), BigComplex(kPrec), BigComplex(kPrec)};
        for (int col = 0; col < 3; ++col) {
            int piv = col;
            for (int r = col + 1; r < 3; ++r)
                if (abs(J[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
                    abs(J[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]))
                    piv = r;
            std::swap(J[static_cast<std::size_t>(piv)], J[static_cast<std::size_t>(col)]);
            std::swap(rhs[static_cast<std::size_t>(piv)], rhs[static_cast<std::size_t>(col)]);
            for (int r = col + 1; r < 3; ++r) {
                BigComplex f = J[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                               J[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
                for (int cc = col; cc < 3; ++cc)
                    J[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
                        f * J[static_cast<std::size_t>(col)][static_cast<std::size_t>(cc)];
                rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(col)];
            }
        }
        std::vector<BigComplex> x(3, BigComplex(kPrec));
        for (int r = 2; r >= 0; --r) {
            BigComplex acc = rhs[static_cast<std::size_t>(r)];
            for (int cc = r + 1; cc < 3; ++cc)
                acc -= J[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] * x[static_cast<std::size_t>(cc)];
            x[static_cast<std::size_t>(r)] = acc / J[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
        }
        for (std::size_t a = 0; a < 3; ++a) {
            BigComplex fd = (shifted.t[a] - p.t[a]) / BigComplex(eps, BigReal(0L, kPrec));
            CHECK(abs(fd - x[a]) <= BigReal(1e-10, kPrec) * max(BigReal(1L, kPrec), abs(x[a])));
        }
    }
}

TEST_CASE("inverting toward the caustic fails loudly") {
    ParamPoint guess = pp(2, {0.4, -0.8});
    // collapse both canonical coordinates: only caustic points do that
    std::vector<BigComplex> target{BigComplex(0.1, 0.0, kPrec), BigComplex(0.1, 0.0, kPrec)};
    CHECK_THROWS_AS((void)invert_u_to_t(2, target, guess), Error);
}

TEST_CASE("sampler determinism and admissibility") {
    auto a = sample_admissible(2, 1, 3, kPrec);
    auto b = sample_admissible(2, 1, 3, kPrec);
    REQUIRE(a.size() == 3);
    REQUIRE(b.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t alpha = 0; alpha < 2; ++alpha) CHECK(a[i].t[alpha] == b[i].t[alpha]);
    for (const auto& p : a) CHECK_NOTHROW((void)build_point(p));

    auto ones = sample_admissible(1, 9, 4, kPrec);
    CHECK(ones.size() == 4);

    SampleOptions strict;
    strict.max_attempts = 1;
    strict.cluster_threshold = 5.0; // unsatisfiable: roots of a box sample sit inside |z| < 5
    CHECK_THROWS_AS((void)sample_admissible(4, 3, 1, kPrec, strict), RejectionExhaustedError);
}

TEST_CASE("quasi-homogeneity covariance") {
    auto pts = sample_admissible(4, 77, 2, kPrec);
    BigComplex c(1.2, 0.3, kPrec);
    for (const auto& p : pts) {
        FrobeniusPoint fp = build_point(p);
        const int n = fp.n;
        ParamPoint scaled;
        scaled.n = n;
        for (int a = 1; a <= n; ++a) scaled.t.push_back(pow_i(c, n + 2 - a) * p.t[static_cast<std::size_t>(a - 1)]);
        FrobeniusPoint sp = build_point(scaled);
        for (int i = 0; i < n; ++i) {
            BigComplex zi = c * fp.z[static_cast<std::size_t>(i)];
            int best = 0;
            BigReal bd = abs(sp.z[0] - zi);
            for (int j = 1; j < n; ++j)
                if (abs(sp.z[static_cast<std::size_t>(j)] - zi) < bd) {
                    bd = abs(sp.z[static_cast<std::size_t>(j)] - zi);
                    best = j;
                }
            CHECK(rel_diff(sp.z[static_cast<std::size_t>(best)], zi) <= tol(1e-60));
            CHECK(rel_diff(sp.u[static_cast<std::size_t>(best)], pow_i(c, n + 1) * fp.u[static_cast<std::size_t>(i)]) <= tol(1e-60));
            CHECK(rel_diff(sp.hsq[static_cast<std::size_t>(best)], pow_i(c, 1 - n) * fp.hsq[static_cast<std::size_t>(i)]) <= tol(1e-60));
            for (int k = 3; k <= n + 1; ++k)
                CHECK(abs(sp.C(best, k) - pow_i(c, 2 - k) * fp.C(i, k)) <=
                      tol(1e-60) * max(BigReal(1L, kPrec), abs(fp.C(i, k))));
        }
    }
}

TEST_CASE("parameter point JSON round trip is exact") {
    auto pts = sample_admissible(3, 5, 1, kPrec);
    nlohmann::json j = param_point_to_json(pts[0]);
    ParamPoint back = param_point_from_json(j, kPrec);
    CHECK(back.n == 3);
    for (std::size_t a = 0; a < 3; ++a) CHECK(back.t[a] == pts[0].t[a]);
    // and exact across a precision bump
    ParamPoint wide = param_point_from_json(j, 512);
    for (std::size_t a = 0; a < 3; ++a) CHECK(abs(wide.t[a] - pts[0].t[a]).is_zero());
}
