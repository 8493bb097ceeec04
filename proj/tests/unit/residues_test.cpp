#include "g2an/errors.hpp"
#include "g2an/frobenius.hpp"
#include "g2an/residues.hpp"
#include "g2an/rng.hpp"

#include <doctest.h>

using namespace g2an;

namespace {

const long kPrec = 256;

ParamPoint golden_a2() {
    ParamPoint p;
    p.n = 2;
    p.t = {BigComplex(kPrec), BigComplex(-3L, kPrec)};
    return p;
}

BigReal tol(double v) { return BigReal(v, kPrec); }

} // namespace

TEST_CASE("residue of a bare simple pole") {
    RationalAtPoles f;
    f.numerator = Poly(std::vector<BigComplex>{BigComplex(1L, kPrec)});
    BigComplex a(0.7, -0.2, kPrec);
    f.pole_factors = {{a, 1}};
    CHECK(abs(residue_at(f, a, 1) - 1L) <= tol(1e-70));
    CHECK_THROWS_AS((void)residue_at(f, BigComplex(5L, kPrec), 1), DomainError);
}

TEST_CASE("log-derivative residue at a simple critical point is 1") {
    FrobeniusPoint fp = build_point(golden_a2());
    RationalAtPoles f;
    f.numerator = fp.lambda_derivs[2];
    f.include_lambda_prime_in_denominator = true;
    f.lambda_prime = fp.lambda_derivs[1];
    for (const auto& z : fp.z) CHECK(abs(residue_at(f, z, 1) - 1L) <= tol(1e-70));
}

TEST_CASE("golden residue: lambda''/((z_1 - z)^2 lambda') at z_1 = 1 is -1/4") {
    FrobeniusPoint fp = build_point(golden_a2());
    BigComplex oracle = oracle_R1(fp, 1, 2);
    CHECK(abs(oracle + BigComplex(1L, kPrec) / 4) <= tol(1e-70));
    CHECK(abs(closed_R1(fp, 1, 2) + BigComplex(1L, kPrec) / 4) <= tol(1e-70));
}

TEST_CASE("A_1: every closed form collapses to zero") {
    ParamPoint p;
    p.n = 1;
    p.t = {BigComplex(5L, kPrec)};
    FrobeniusPoint fp = build_point(p);
    for (int pw = 2; pw <= 6; ++pw) {
        CHECK(closed_R1(fp, 0, pw).is_zero());
        CHECK(abs(oracle_R1(fp, 0, pw)).is_zero());
    }
    for (int pw = 4; pw <= 8; ++pw) CHECK(closed_R3(fp, 0, pw).is_zero());
}

TEST_CASE("closed forms match the oracle across a random sweep") {
    auto pts = sample_admissible(6, 1234, 2, kPrec);
    for (const auto& p : pts) {
        FrobeniusPoint fp = build_point(p);
        for (int i = 0; i < fp.n; ++i) {
            for (int pw = 2; pw <= 6; ++pw) {
                auto c1 = closed_R1_terms(fp, i, pw);
                CHECK(compare_against_scale(c1.value, oracle_R1(fp, i, pw), c1.termscale) <= tol(1e-40));
                auto c2 = closed_R2_terms(fp, i, pw);
                CHECK(compare_against_scale(c2.value, oracle_R2(fp, i, pw), c2.termscale) <= tol(1e-40));
            }
            for (int pw = 4; pw <= 8; ++pw) {
                auto c3 = closed_R3_terms(fp, i, pw);
                CHECK(compare_against_scale(c3.value, oracle_R3(fp, i, pw), c3.termscale) <= tol(1e-40));
            }
            for (auto [pw, q] : {std::pair{5, 3}, {2, 4}, {3, 4}, {4, 4}}) {
                auto c4 = closed_R4_terms(fp, i, pw, q);
                CHECK(compare_against_scale(c4.value, oracle_R4(fp, i, pw, q), c4.termscale) <= tol(1e-40));
            }
            for (int j = 0; j < fp.n; ++j) {
                if (i == j) continue;
                for (auto [pw, q] : {std::pair{2, 2}, {2, 4}, {4, 2}}) {
                    auto c5 = closed_R5_terms(fp, i, j, pw, q);
                    CHECK(compare_against_scale(c5.value, oracle_R5(fp, i, j, pw, q), c5.termscale) <=
                          tol(1e-40));
                }
                for (auto [pw, q] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {4, 2}}) {
                    auto c6 = closed_R6_terms(fp, i, j, pw, q);
                    CHECK(compare_against_scale(c6.value, oracle_R6(fp, i, j, pw, q), c6.termscale) <=
                          tol(1e-40));
                }
            }
        }
    }
}

TEST_CASE("out-of-table arguments are rejected") {
    FrobeniusPoint fp = build_point(golden_a2());
    CHECK_THROWS_AS((void)closed_R1(fp, 0, 7), DomainError);
    CHECK_THROWS_AS((void)closed_R3(fp, 0, 3), DomainError);
    CHECK_THROWS_AS((void)closed_R4(fp, 0, 2, 3), DomainError);
    CHECK_THROWS_AS((void)closed_R5(fp, 0, 1, 3, 3), DomainError);
    CHECK_THROWS_AS((void)closed_R6(fp, 0, 1, 4, 4), DomainError);
}

TEST_CASE("golden sum-to-residue: single term 1/z_12^2 = 1/4") {
    FrobeniusPoint fp = build_point(golden_a2());
    auto r = sum_vs_residue(fp, SumKind::inv_z, 1, -1, 2, 0);
    CHECK(abs(r.direct_sum - BigComplex(1L, kPrec) / 4) <= tol(1e-70));
    CHECK(abs(r.residue_value - BigComplex(1L, kPrec) / 4) <= tol(1e-70));
    CHECK(r.rel_residual() <= tol(1e-60));
}

TEST_CASE("n=1: empty sums agree with vanishing residues") {
    ParamPoint p;
    p.n = 1;
    p.t = {BigComplex(5L, kPrec)};
    FrobeniusPoint fp = build_point(p);
    for (int pw = 2; pw <= 6; ++pw) {
        auto r = sum_vs_residue(fp, SumKind::inv_z, 0, -1, pw, 0);
        CHECK(r.direct_sum.is_zero());
        CHECK(r.rel_residual() <= tol(1e-60));
    }
}

TEST_CASE("all sum kinds agree with the oracle on a random n=7 sample") {
    auto pts = sample_admissible(7, 4321, 1, kPrec);
    FrobeniusPoint fp = build_point(pts[0]);
    for (int i = 0; i < fp.n; ++i) {
        for (int pw = 2; pw <= 6; ++pw) {
            CHECK(sum_vs_residue(fp, SumKind::inv_z, i, -1, pw, 0).rel_residual() <= tol(1e-40));
            CHECK(sum_vs_residue(fp, SumKind::hsq_inv_z, i, -1, pw, 0).rel_residual() <= tol(1e-40));
            for (int q : {3, 4})
                CHECK(sum_vs_residue(fp, SumKind::C_inv_z, i, -1, pw, q).rel_residual() <= tol(1e-40));
        }
        for (int pw = 4; pw <= 8; ++pw)
            CHECK(sum_vs_residue(fp, SumKind::hsq_u_inv_z, i, -1, pw, 0).rel_residual() <= tol(1e-40));
        for (int j = 0; j < fp.n; ++j) {
            if (i == j) continue;
            for (auto [pw, q] : {std::pair{2, 2}, {2, 4}, {4, 2}})
                CHECK(sum_vs_residue(fp, SumKind::two_pole_inv, i, j, pw, q).rel_residual() <= tol(1e-40));
            CHECK(sum_vs_residue(fp, SumKind::two_pole_C3, i, j, 2, 3).rel_residual() <= tol(1e-40));
            for (auto [pw, q] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {4, 2}})
                CHECK(sum_vs_residue(fp, SumKind::u_weighted_two_pole, i, j, pw, q).rel_residual() <=
                      tol(1e-40));
        }
    }
}

TEST_CASE("global residue theorem for a decaying rational function") {
    SplitMix64 rng(8);
    auto pts = sample_admissible(5, 99, 1, kPrec);
    FrobeniusPoint fp = build_point(pts[0]);
    for (int trial = 0; trial < 5; ++trial) {
        BigComplex extra(3.0 + rng.next_unit(), 3.0 + rng.next_unit(), kPrec);
        int total = fp.n + 2;
        std::vector<BigComplex> coeffs;
        for (int d = 0; d <= total - 2; ++d)
            coeffs.emplace_back(rng.next_symmetric(), rng.next_symmetric(), kPrec);
        RationalAtPoles f;
        f.numerator = Poly(std::move(coeffs));
        f.pole_factors = {{extra, 2}};
        f.include_lambda_prime_in_denominator = true;
        f.lambda_prime = fp.lambda_derivs[1];
        BigComplex sum(kPrec);
        BigReal scale(0L, kPrec);
        for (const auto& z : fp.z) {
            BigReal s(0L, kPrec);
            sum += residue_at(f, z, 1, 2, &s);
            scale += s;
        }
        BigReal s(0L, kPrec);
        sum += residue_at(f, extra, 2, 2, &s);
        scale += s;
        CHECK(abs(sum) <= tol(1e-50) * scale);
    }
}

TEST_CASE("doubling the guard terms barely moves the residue") {
    auto pts = sample_admissible(6, 55, 1, kPrec);
    FrobeniusPoint fp = build_point(pts[0]);
    for (int i = 0; i < fp.n; ++i) {
        BigComplex g2v = oracle_R6(fp, i, (i + 1) % fp.n, 4, 2, 2);
        BigComplex g4v = oracle_R6(fp, i, (i + 1) % fp.n, 4, 2, 4);
        CHECK(rel_diff(g2v, g4v) <= ldexp2(BigReal(1L, kPrec), -(kPrec - 16)));
    }
}

TEST_CASE("golden power sums: empty A, hand conversion values") {
    FrobeniusPoint fp = build_point(golden_a2());
    // i at z=1 (label 1), k at z=-1 (label 0)
    PowerSymmetric ps = power_sums_and_symmetric(fp, 1, 0, 6);
    for (const auto& a : ps.A) CHECK(a.is_zero());
    // z_ik C_k3 = 2*(-1) = -2 and the A-side gives 2(-1 + 0)
    CHECK(abs(ps.zh13_lhs + 2L) <= tol(1e-70));
    CHECK(abs(ps.zh13_rhs + 2L) <= tol(1e-70));
    // empty product convention: h_k^2/h_i^2 = -1
    CHECK(abs(ps.zh12_lhs + 1L) <= tol(1e-70));
    CHECK(abs(ps.zh12_rhs + 1L) <= tol(1e-70));
    CHECK_THROWS_AS((void)power_sums_and_symmetric(fp, 1, 1, 4), DomainError);
    CHECK_THROWS_AS((void)power_sums_and_symmetric(fp, 1, 0, 7), DomainError);
}

TEST_CASE("power-sum conversions hold on a random n=6 sample") {
    auto pts = sample_admissible(6, 2468, 2, kPrec);
    for (const auto& p : pts) {
        FrobeniusPoint fp = build_point(p);
        for (int i = 0; i < fp.n; ++i)
            for (int k = 0; k < fp.n; ++k) {
                if (i == k) continue;
                PowerSymmetric ps = power_sums_and_symmetric(fp, i, k, 6);
                for (int pw = 2; pw <= 6; ++pw)
                    CHECK(compare_against_scale(ps.elementary_newton[static_cast<std::size_t>(pw)],
                                                ps.elementary_direct[static_cast<std::size_t>(pw)],
                                                ps.elementary_newton_scale[static_cast<std::size_t>(pw)]) <=
                          tol(1e-50));
                CHECK(compare_against_scale(ps.zh13_lhs, ps.zh13_rhs, ps.zh13_scale) <= tol(1e-50));
                CHECK(compare_against_scale(ps.zh14_lhs, ps.zh14_rhs, ps.zh14_scale) <= tol(1e-50));
                CHECK(compare_against_scale(ps.zh12_lhs, ps.zh12_rhs, ps.zh12_scale) <= tol(1e-50));
            }
    }
}
