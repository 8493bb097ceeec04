#include "g2an/g2.hpp"

#include "g2an/errors.hpp"

#include <cstddef>

namespace g2an {

namespace {

using Accum = TermAccumulator;

void require_jet(const FrobeniusPoint& fp, const Jet2& jet) {
    if (static_cast<int>(jet.ux.size()) != fp.n || static_cast<int>(jet.uxx.size()) != fp.n)
        throw DomainError("jet dimension mismatch");
    for (const auto& v : jet.ux)
        if (v.is_zero()) throw DomainError("zero jet component: every u_{i,x} must be nonzero");
}

// Field shorthands; indices are plain ints throughout.
struct FP {
    const FrobeniusPoint& fp;
    const BigComplex& h(int a) const { return fp.h[static_cast<std::size_t>(a)]; }
    const BigComplex& hsq(int a) const { return fp.hsq[static_cast<std::size_t>(a)]; }
    const BigComplex& H(int a) const { return fp.H[static_cast<std::size_t>(a)]; }
    const BigComplex& g(int a, int b) const { return fp.gamma(a, b); }
    BigComplex z(int a, int b) const { return fp.zdiff(a, b); }
    BigComplex u(int a, int b) const { return fp.udiff(a, b); }
    BigComplex dh(int a, int b) const { return lame_partial(fp, a, b); }     // d h_a / d u_b
    BigComplex dg(int a, int b, int c) const { return rotation_partial(fp, a, b, c); }
};

} // namespace

TermSum g2_Gi(const FrobeniusPoint& fp, const Jet2& jet, int i) {
    require_jet(fp, jet);
    const long prec = fp.precision();
    FP d{fp};
    Accum acc(prec);
    const int n = fp.n;
    auto ux = [&](int a) { return jet.ux[static_cast<std::size_t>(a)]; };

    const BigComplex uix = ux(i);
    const BigComplex hi = d.h(i), hi2 = d.hsq(i);
    const BigComplex hi3 = hi * hi2, hi4 = hi2 * hi2;
    const BigComplex Hi = d.H(i);
    const BigComplex dhi = d.dh(i, i);

    // d_x h_i H_i / (60 u_ix h_i^3), expanded over the x-derivative sum
    for (int m = 0; m < n; ++m) acc.add(ux(m) * d.dh(i, m) * Hi / (60 * uix * hi3));
    // -3 d_i h_i H_i / (40 h_i^3)
    acc.add(-3 * dhi * Hi / (40 * hi3));
    // +19 (d_i h_i)^2 / (2880 h_i^4)
    acc.add(19 * dhi * dhi / (2880 * hi4));
    // -7 d_i h_i d_x h_i / (5760 u_ix h_i^4)
    for (int m = 0; m < n; ++m) acc.add(-7 * dhi * ux(m) * d.dh(i, m) / (5760 * uix * hi4));

    for (int k = 0; k < n; ++k) {
        if (k == i) continue;
        const BigComplex gik = d.g(i, k);
        const BigComplex hk = d.h(k), hk2 = d.hsq(k);
        const BigComplex Hk = d.H(k);
        const BigComplex dhk = d.dh(k, k);
        const BigComplex dgam_i = d.dg(i, k, i); // d gamma_ik / d u_i
        const BigComplex dgam_k = d.dg(i, k, k); // d gamma_ik / d u_k
        const BigComplex ukx = ux(k);

        // gamma_ik H_i / (120 h_i h_k)
        acc.add(gik * Hi / (120 * hi * hk));
        // gamma_ik H_k (7 + u_kx/u_ix) / (120 h_i h_k)
        acc.add(7 * gik * Hk / (120 * hi * hk));
        acc.add(gik * Hk * ukx / (120 * uix * hi * hk));
        // -gamma_ik (4 d_i h_i + d_x h_i/u_ix) / (5760 h_i^2 h_k)
        acc.add(-4 * gik * dhi / (5760 * hi2 * hk));
        for (int m = 0; m < n; ++m)
            acc.add(-gik * ux(m) * d.dh(i, m) / (5760 * uix * hi2 * hk));
        // -gamma_ik d_k h_k (u_kx/(1152 u_ix) + 7/2880) / (h_i h_k^2)
        acc.add(-gik * dhk * ukx / (1152 * uix * hi * hk2));
        acc.add(-7 * gik * dhk / (2880 * hi * hk2));
        // +gamma_ik d_k h_k / (384 h_i^3)
        acc.add(gik * dhk / (384 * hi3));
        // -d_k gamma_ik h_k / (384 h_i^3)
        acc.add(-dgam_k * hk / (384 * hi3));
        // +d_i gamma_ik h_k u_kx / (1920 u_ix h_i^3)
        acc.add(dgam_i * hk * ukx / (1920 * uix * hi3));
        // +d_i gamma_ik / (2880 h_i h_k)
        acc.add(dgam_i / (2880 * hi * hk));
        // +d_x gamma_ik / (5760 u_ix h_i h_k)
        for (int m = 0; m < n; ++m)
            acc.add(ux(m) * d.dg(i, k, m) / (5760 * uix * hi * hk));
        // +d_k gamma_ik (u_kx/(2880 u_ix) + 7/2880) / (h_i h_k)
        acc.add(dgam_k * ukx / (2880 * uix * hi * hk));
        acc.add(7 * dgam_k / (2880 * hi * hk));
        // +gamma_ik h_i d_k h_k / (2880 h_k^4)
        acc.add(gik * hi * dhk / (2880 * hk2 * hk2));
        // -gamma_ik^2 (7 u_kx/(1152 u_ix) + 19/720) / h_i^2
        acc.add(-7 * gik * gik * ukx / (1152 * uix * hi2));
        acc.add(-19 * gik * gik / (720 * hi2));
        // +gamma_ik^2 / (1440 h_k^2)
        acc.add(gik * gik / (1440 * hk2));
    }

    // -sum_{k,l} ( h_i gamma_il gamma_kl / (2880 h_k h_l^2)
    //            + u_kx h_k gamma_il gamma_kl / (1920 u_ix h_i h_l^2) )
    for (int l = 0; l < n; ++l) {
        if (l == i) continue;
        const BigComplex gil = d.g(i, l);
        const BigComplex hl2 = d.hsq(l);
        for (int k = 0; k < n; ++k) {
            if (k == l) continue;
            const BigComplex gkl = d.g(k, l);
            acc.add(-hi * gil * gkl / (2880 * d.h(k) * hl2));
            acc.add(-ux(k) * d.h(k) * gil * gkl / (1920 * uix * hi * hl2));
        }
    }
    return acc.done();
}

TermSum g2_Gij(const FrobeniusPoint& fp, int i, int j) {
    if (i == j) throw DomainError("g2_Gij: requires i != j");
    const long prec = fp.precision();
    FP d{fp};
    Accum acc(prec);
    const int n = fp.n;

    const BigComplex gij = d.g(i, j);
    const BigComplex hi = d.h(i), hj = d.h(j);
    const BigComplex hi2 = d.hsq(i), hj2 = d.hsq(j);
    const BigComplex Hj = d.H(j);
    const BigComplex dgam_i = d.dg(i, j, i), dgam_j = d.dg(i, j, j);
    const BigComplex dhi = d.dh(i, i), dhj = d.dh(j, j);

    // -gamma_ij^2 H_j / (120 h_j^2)
    acc.add(-gij * gij * Hj / (120 * hj2));
    // +gamma_ij^3 / (480 h_i h_j)
    acc.add(pow_i(gij, 3) / (480 * hi * hj));
    // -(gamma_ij/5760) (d_i gamma_ij / h_i^2 + d_j gamma_ij / h_j^2)
    acc.add(-gij * dgam_i / (5760 * hi2));
    acc.add(-gij * dgam_j / (5760 * hj2));
    // +(gamma_ij^2/5760) (d_i h_i / h_i^3 + 3 d_j h_j / h_j^3)
    acc.add(gij * gij * dhi / (5760 * hi * hi2));
    acc.add(3 * gij * gij * dhj / (5760 * hj * hj2));

    for (int k = 0; k < n; ++k) {
        // gamma_ij gamma_ik gamma_jk / (5760 h_k^2)
        if (k != i && k != j)
            acc.add(gij * d.g(i, k) * d.g(j, k) / (5760 * d.hsq(k)));
        // gamma_ij^2/(5760 h_k) (gamma_jk/h_j - gamma_ik/h_i)
        if (k != j) acc.add(gij * gij * d.g(j, k) / (5760 * hj * d.h(k)));
        if (k != i) acc.add(-gij * gij * d.g(i, k) / (5760 * hi * d.h(k)));
    }
    return acc.done();
}

TermSum g2_Gij_closed(const FrobeniusPoint& fp, int i, int j) {
    if (i == j) throw DomainError("g2_Gij_closed: requires i != j");
    const long prec = fp.precision();
    FP d{fp};
    Accum acc(prec);

    const BigComplex zij = d.z(i, j);
    const BigComplex pre = d.hsq(i) * d.hsq(j) / (5760 * pow_i(zij, 4));
    const BigComplex ci3 = fp.C(i, 3), cj3 = fp.C(j, 3), cj4 = fp.C(j, 4);
    acc.add(pre * (6L / pow_i(zij, 2)));
    acc.add(pre * (-(ci3 - cj3) / zij));
    acc.add(pre * (-cj3 * cj3 / 2));
    acc.add(pre * (2 * cj4 / 3));

    const BigComplex pre2 = d.hsq(i) * d.hsq(j) / (2880 * pow_i(zij, 3));
    for (int k = 0; k < fp.n; ++k) {
        if (k == i || k == j) continue;
        acc.add(pre2 / (d.z(i, k) * pow_i(d.z(j, k), 2)));
    }
    return acc.done();
}

TermSum g2_Pij(const FrobeniusPoint& fp, int i, int j) {
    const long prec = fp.precision();
    FP d{fp};
    Accum acc(prec);
    const int n = fp.n;
    const bool offdiag = (i != j);

    const BigComplex hi = d.h(i), hj = d.h(j);
    const BigComplex hi2 = d.hsq(i), hj2 = d.hsq(j);
    const BigComplex Hi = d.H(i), Hj = d.H(j);
    const BigComplex dhi = d.dh(i, i), dhj = d.dh(j, j);

    if (offdiag) {
        const BigComplex gij = d.g(i, j);
        const BigComplex dgam_ij_i = d.dg(i, j, i);
        // -2 gamma_ij H_i H_j / (5 h_i h_j)
        acc.add(-2 * gij * Hi * Hj / (5 * hi * hj));
        // +gamma_ij d_j h_j H_i / (20 h_i h_j^2)
        acc.add(gij * dhj * Hi / (20 * hi * hj2));
        // +gamma_ij h_i d_j h_j H_j / (20 h_j^4)
        acc.add(gij * hi * dhj * Hj / (20 * hj2 * hj2));
        // -19 gamma_ij^2 H_j / (30 h_j^2)
        acc.add(-19 * gij * gij * Hj / (30 * hj2));
        // -d_i gamma_ij H_j / (60 h_i h_j)
        acc.add(-dgam_ij_i * Hj / (60 * hi * hj));
        // +41 gamma_ij^3 / (240 h_i h_j)
        acc.add(41 * pow_i(gij, 3) / (240 * hi * hj));
        // -41 gamma_ij d_i gamma_ij / (1440 h_i^2)
        acc.add(-41 * gij * dgam_ij_i / (1440 * hi2));
        // +d_i gamma_ij d_j h_j / (1440 h_i h_j^2)
        acc.add(dgam_ij_i * dhj / (1440 * hi * hj2));
        // +79 gamma_ij^2 d_j h_j / (1440 h_j^3)
        acc.add(79 * gij * gij * dhj / (1440 * hj * hj2));
        // -gamma_ij d_i h_i d_j h_j / (720 h_i^2 h_j^2)
        acc.add(-gij * dhi * dhj / (720 * hi2 * hj2));
        // -gamma_ij h_i (d_j h_j)^2 / (288 h_j^5)
        acc.add(-gij * hi * dhj * dhj / (288 * hj * hj2 * hj2));
    }

    for (int k = 0; k < n; ++k) {
        const bool k_ne_i = (k != i), k_ne_j = (k != j);
        const BigComplex hk = d.h(k), hk2 = d.hsq(k);
        const BigComplex Hk = d.H(k);
        const BigComplex dhk = d.dh(k, k);

        if (offdiag && k_ne_i) {
            const BigComplex gij = d.g(i, j), gik = d.g(i, k);
            // +gamma_ij gamma_ik H_j / (60 h_j h_k)
            acc.add(gij * gik * Hj / (60 * hj * hk));
            // -gamma_ij gamma_ik d_j h_j / (720 h_j^2 h_k)
            acc.add(-gij * gik * dhj / (720 * hj2 * hk));
            // -h_j h_k gamma_ij d_i gamma_ik / (360 h_i^4)
            acc.add(-hj * hk * gij * d.dg(i, k, i) / (360 * hi2 * hi2));
            // -h_j (3 gamma_ik d_i gamma_ij + 2 gamma_ij d_i gamma_ik) / (1440 h_i^2 h_k)
            acc.add(-3 * hj * gik * d.dg(i, j, i) / (1440 * hi2 * hk));
            acc.add(-2 * hj * gij * d.dg(i, k, i) / (1440 * hi2 * hk));
            // -7 h_j gamma_ij d_k(h_k^{-1} gamma_ik) / (1440 h_i^2)
            acc.add(-7 * hj * gij * d.dg(i, k, k) / (1440 * hi2 * hk));
            acc.add(7 * hj * gij * d.g(i, k) * dhk / (1440 * hi2 * hk2));
        }
        if (k_ne_i && k_ne_j) {
            const BigComplex gik = d.g(i, k), gjk = d.g(j, k);
            // -gamma_ik gamma_jk h_i h_j H_k / (30 h_k^4)
            acc.add(-gik * gjk * hi * hj * Hk / (30 * hk2 * hk2));
            // +gamma_ik gamma_jk h_i H_j / (60 h_j h_k^2)
            acc.add(gik * gjk * hi * Hj / (60 * hj * hk2));
            // -gamma_ik gamma_jk h_i d_j h_j / (1440 h_j^2 h_k^2)
            acc.add(-gik * gjk * hi * dhj / (1440 * hj2 * hk2));
            // +gamma_ik gamma_jk h_i h_j d_k h_k / (288 h_k^5)
            acc.add(gik * gjk * hi * hj * dhk / (288 * hk * hk2 * hk2));
            // -h_i h_j gamma_ik d_k gamma_jk / (480 h_k^4)
            acc.add(-hi * hj * gik * d.dg(j, k, k) / (480 * hk2 * hk2));
            // +h_j gamma_ik^2 gamma_jk / (96 h_k^3)
            acc.add(hj * gik * gik * gjk / (96 * hk * hk2));
        }
        if (offdiag && k_ne_j) {
            const BigComplex gij = d.g(i, j), gjk = d.g(j, k);
            // -gamma_ij gamma_jk h_i H_j / (60 h_j^2 h_k)
            acc.add(-gij * gjk * hi * Hj / (60 * hj2 * hk));
            // -7 gamma_ij gamma_jk h_i H_k / (60 h_j^2 h_k)
            acc.add(-7 * gij * gjk * hi * Hk / (60 * hj2 * hk));
            // +gamma_ij gamma_jk h_i d_j h_j / (240 h_j^3 h_k)
            acc.add(gij * gjk * hi * dhj / (240 * hj * hj2 * hk));
            // +gamma_ij gamma_jk h_i d_k h_k / (720 h_k^4)
            acc.add(gij * gjk * hi * dhk / (720 * hk2 * hk2));
            // +gamma_jk d_i gamma_ij / (1440 h_i h_k)
            acc.add(gjk * d.dg(i, j, i) / (1440 * hi * hk));
            // +gamma_ij^2 gamma_jk / (120 h_j h_k)
            acc.add(d.g(i, j) * d.g(i, j) * gjk / (120 * hj * hk));
            // +7 h_i gamma_ij gamma_jk^2 / (160 h_j^3)
            acc.add(7 * hi * gij * gjk * gjk / (160 * hj * hj2));
        }
        if (offdiag && k_ne_i && k_ne_j) {
            // +11 gamma_ij gamma_ik gamma_jk / (2880 h_k^2)
            acc.add(11 * d.g(i, j) * d.g(i, k) * d.g(j, k) / (2880 * hk2));
        }
    }

    // sum_{k,l} ( h_i h_j gamma_il gamma_jl / (720 h_k h_l^2)
    //               (gamma_kl/h_l - gamma_jk/(2 h_j))
    //           - h_i gamma_ij gamma_jl gamma_kl / (720 h_k h_l^2) )
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            const BigComplex hk = d.h(k);
            const BigComplex hl2 = d.hsq(l);
            if (l != i && l != j) {
                const BigComplex gil = d.g(i, l), gjl = d.g(j, l);
                if (k != l)
                    acc.add(hi * hj * gil * gjl * d.g(k, l) / (720 * hk * hl2 * d.h(l)));
                if (k != j)
                    acc.add(-hi * gil * gjl * d.g(j, k) / (1440 * hk * hl2));
            }
            if (offdiag && l != j && k != l)
                acc.add(-hi * d.g(i, j) * d.g(j, l) * d.g(k, l) / (720 * hk * hl2));
        }
    }
    return acc.done();
}

TermSum g2_Qi(const FrobeniusPoint& fp, int i) {
    const long prec = fp.precision();
    FP d{fp};
    Accum acc(prec);
    const int n = fp.n;

    const BigComplex hi = d.h(i), hi2 = d.hsq(i);
    const BigComplex hi3 = hi * hi2, hi4 = hi2 * hi2, hi5 = hi * hi4;
    const BigComplex Hi = d.H(i);
    const BigComplex dhi = d.dh(i, i);

    // 4 H_i^3/(5 h_i^2) - 7 d_i h_i H_i^2/(10 h_i^3) + 7 (d_i h_i)^2 H_i/(48 h_i^4)
    //   - (d_i h_i)^3/(120 h_i^5)
    acc.add(4 * pow_i(Hi, 3) / (5 * hi2));
    acc.add(-7 * dhi * Hi * Hi / (10 * hi3));
    acc.add(7 * dhi * dhi * Hi / (48 * hi4));
    acc.add(-pow_i(dhi, 3) / (120 * hi5));

    for (int k = 0; k < n; ++k) {
        if (k == i) continue;
        const BigComplex gik = d.g(i, k);
        const BigComplex hk = d.h(k), hk2 = d.hsq(k);
        const BigComplex Hk = d.H(k);
        const BigComplex dhk = d.dh(k, k);
        const BigComplex dgam_i = d.dg(i, k, i); // d gamma_ik / d u_i
        const BigComplex dgam_k = d.dg(i, k, k); // d gamma_ik / d u_k
        const BigComplex uik = d.u(i, k);

        // +7 gamma_ik H_i H_k / (10 h_i h_k)
        acc.add(7 * gik * Hi * Hk / (10 * hi * hk));
        // -gamma_ik d_i h_i H_i / (120 h_i^2 h_k)
        acc.add(-gik * dhi * Hi / (120 * hi2 * hk));
        // +7 d_k(h_k^{-1} gamma_ik) H_i / (240 h_i)
        acc.add(7 * dgam_k * Hi / (240 * hi * hk));
        acc.add(-7 * gik * dhk * Hi / (240 * hi * hk2));
        // -7 gamma_ik d_i h_i H_k / (80 h_i^2 h_k)
        acc.add(-7 * gik * dhi * Hk / (80 * hi2 * hk));
        // +gamma_ik H_k / (576 u_ik h_i h_k)
        acc.add(gik * Hk / (576 * uik * hi * hk));
        // +(2 H_i + 7 H_k) d_i gamma_ik / (240 h_i h_k)
        acc.add(2 * Hi * dgam_i / (240 * hi * hk));
        acc.add(7 * Hk * dgam_i / (240 * hi * hk));
        // +gamma_ik h_k H_i / (576 u_ik h_i^3)
        acc.add(gik * hk * Hi / (576 * uik * hi3));
        // -31 gamma_ik^2 H_i / (144 h_i^2)
        acc.add(-31 * gik * gik * Hi / (144 * hi2));
        // +gamma_ik (d_i h_i)^2 / (720 h_i^3 h_k)
        acc.add(gik * dhi * dhi / (720 * hi3 * hk));
        // +253 gamma_ik^2 d_i h_i / (5760 h_i^3)
        acc.add(253 * gik * gik * dhi / (5760 * hi3));
        // -d_i gamma_ik d_i h_i / (960 h_i^2 h_k)
        acc.add(-dgam_i * dhi / (960 * hi2 * hk));
        // -gamma_ik^2 d_k h_k / (2880 h_k^3)
        acc.add(-gik * gik * dhk / (2880 * hk * hk2));
        // -7 d_k(h_k^{-1} gamma_ik) d_i h_i / (1920 h_i^2)
        acc.add(-7 * dgam_k * dhi / (1920 * hi2 * hk));
        acc.add(7 * gik * dhk * dhi / (1920 * hi2 * hk2));
        // -7 d_i gamma_ik d_k h_k / (5760 h_i h_k^2)
        acc.add(-7 * dgam_i * dhk / (5760 * hi * hk2));
        // -41 d_i gamma_ik d_i h_i h_k / (5760 h_i^4)
        acc.add(-41 * dgam_i * dhi * hk / (5760 * hi4));
        // +d_i(h_i gamma_ik) d_k h_k / (2880 h_k^4)
        acc.add(gik * dhi * dhk / (2880 * hk2 * hk2));
        acc.add(hi * dgam_i * dhk / (2880 * hk2 * hk2));
        // -113 gamma_ik d_i gamma_ik / (5760 h_i^2)
        acc.add(-113 * gik * dgam_i / (5760 * hi2));
        // +(3 d_i gamma_ik + d_k gamma_ik) gamma_ik / (1440 h_k^2)
        acc.add(3 * dgam_i * gik / (1440 * hk2));
        acc.add(dgam_k * gik / (1440 * hk2));
        // -d_i gamma_ik h_k / (576 u_ik h_i^3)
        acc.add(-dgam_i * hk / (576 * uik * hi3));
        // -d_k gamma_ik / (576 u_ik h_i h_k)
        acc.add(-dgam_k / (576 * uik * hi * hk));
        // -gamma_ik^3 / (240 h_i h_k)
        acc.add(-pow_i(gik, 3) / (240 * hi * hk));
    }

    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            const BigComplex hk = d.h(k), hl = d.h(l);
            // -gamma_kl d_i(h_i gamma_il) / (2880 h_k h_l^2)
            if (l != i && k != l) {
                acc.add(-d.g(k, l) * d.g(i, l) * dhi / (2880 * hk * d.hsq(l)));
                acc.add(-d.g(k, l) * hi * d.dg(i, l, i) / (2880 * hk * d.hsq(l)));
            }
            // +gamma_il^2 gamma_kl / (2880 h_k h_l)
            if (l != i && k != l)
                acc.add(d.g(i, l) * d.g(i, l) * d.g(k, l) / (2880 * hk * hl));
            // -gamma_ik gamma_il^2 / (240 h_i h_k)
            if (k != i && l != i)
                acc.add(-d.g(i, k) * d.g(i, l) * d.g(i, l) / (240 * hi * hk));
            // -gamma_kl d_i gamma_ik / (2880 h_i h_l)
            if (k != i && k != l)
                acc.add(-d.g(k, l) * d.dg(i, k, i) / (2880 * hi * hl));
            // +u_lk gamma_ik d_l gamma_kl / (1152 u_il h_i h_l)
            if (l != i && k != i && l != k)
                acc.add(d.u(l, k) * d.g(i, k) * d.dg(k, l, l) / (1152 * d.u(i, l) * hi * hl));
            // +u_kl gamma_ik gamma_kl d_i gamma_il / (144 h_i^2)
            if (k != i && k != l && l != i)
                acc.add(d.u(k, l) * d.g(i, k) * d.g(k, l) * d.dg(i, l, i) / (144 * d.hsq(i)));
            // +h_l gamma_ik d_i gamma_il / (1440 h_i^2 h_k)
            if (k != i && l != i)
                acc.add(hl * d.g(i, k) * d.dg(i, l, i) / (1440 * d.hsq(i) * hk));
            // +h_k u_kl gamma_kl d_i gamma_il / (1152 u_ik h_i^3)
            if (k != i && k != l && l != i)
                acc.add(hk * d.u(k, l) * d.g(k, l) * d.dg(i, l, i) / (1152 * d.u(i, k) * hi3));
            // +h_l u_ik gamma_ik^2 d_i gamma_il / (40 h_i^3)
            if (k != i && l != i)
                acc.add(hl * d.u(i, k) * d.g(i, k) * d.g(i, k) * d.dg(i, l, i) / (40 * hi3));
        }
    }
    return acc.done();
}

TermSum half_Pii_closed(const FrobeniusPoint& fp, int i) {
    const long prec = fp.precision();
    FP d{fp};
    Accum acc(prec);
    const BigComplex pre = d.hsq(i) * d.hsq(i) / 480;
    for (int k = 0; k < fp.n; ++k) {
        if (k == i) continue;
        acc.add(pre / pow_i(d.z(i, k), 6));
        acc.add(pre * fp.C(k, 3) / (2 * pow_i(d.z(i, k), 5)));
    }
    return acc.done();
}

TermSum g2_total(const FrobeniusPoint& fp, const Jet2& jet) {
    require_jet(fp, jet);
    const long prec = fp.precision();
    const int n = fp.n;
    BigComplex value(prec);
    BigReal scale(0L, prec);
    auto ux = [&](int a) { return jet.ux[static_cast<std::size_t>(a)]; };
    auto uxx = [&](int a) { return jet.uxx[static_cast<std::size_t>(a)]; };

    for (int i = 0; i < n; ++i) {
        TermSum gi = g2_Gi(fp, jet, i);
        value += gi.value * uxx(i);
        scale += gi.termscale * abs(uxx(i));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            TermSum gij = g2_Gij(fp, i, j);
            BigComplex w = pow_i(ux(j), 3) / ux(i);
            value += gij.value * w;
            scale += gij.termscale * abs(w);
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            TermSum pij = g2_Pij(fp, i, j);
            BigComplex w = ux(i) * ux(j) / 2;
            value += pij.value * w;
            scale += pij.termscale * abs(w);
        }
    for (int i = 0; i < n; ++i) {
        TermSum qi = g2_Qi(fp, i);
        BigComplex w = ux(i) * ux(i);
        value += qi.value * w;
        scale += qi.termscale * abs(w);
    }
    return TermSum{value, scale};
}

TermSum t_coefficient(const FrobeniusPoint& fp, int i, int k) {
    if (i == k) throw DomainError("t_coefficient: requires i != k");
    const long prec = fp.precision();
    FP d{fp};
    Accum acc(prec);
    const int n = fp.n;

    const BigComplex hi = d.h(i), hi2 = d.hsq(i), hi3 = hi * hi2, hi4 = hi2 * hi2;
    const BigComplex hk = d.h(k), hk2 = d.hsq(k);
    const BigComplex gik = d.g(i, k);
    const BigComplex Hi = d.H(i), Hk = d.H(k);
    const BigComplex dhi = d.dh(i, i), dhk = d.dh(k, k);
    const BigComplex dki_h = d.dh(i, k); // d h_i / d u_k
    const BigComplex dgam_i = d.dg(i, k, i), dgam_k = d.dg(i, k, k);

    // d_k h_i H_i / (60 h_i^3)
    acc.add(dki_h * Hi / (60 * hi3));
    // -7 d_i h_i d_k h_i / (5760 h_i^4)
    acc.add(-7 * dhi * dki_h / (5760 * hi4));
    // +gamma_ik H_k / (120 h_i h_k)
    acc.add(gik * Hk / (120 * hi * hk));
    // -sum_l gamma_il d_k h_i / (5760 h_i^2 h_l)
    for (int l = 0; l < n; ++l) {
        if (l == i) continue;
        acc.add(-d.g(i, l) * dki_h / (5760 * hi2 * d.h(l)));
    }
    // -gamma_ik d_k h_k / (1152 h_i h_k^2)
    acc.add(-gik * dhk / (1152 * hi * hk2));
    // +d_i gamma_ik h_k / (1920 h_i^3)
    acc.add(dgam_i * hk / (1920 * hi3));
    // +sum_{l != k,i} d_k gamma_il / (5760 h_i h_l)
    for (int l = 0; l < n; ++l) {
        if (l == k || l == i) continue;
        acc.add(d.dg(i, l, k) / (5760 * hi * d.h(l)));
    }
    // +d_k gamma_ik / (5760 h_i h_k) + d_k gamma_ik / (2880 h_i h_k)
    acc.add(dgam_k / (5760 * hi * hk));
    acc.add(dgam_k / (2880 * hi * hk));
    // -7 gamma_ik^2 / (1152 h_i^2)
    acc.add(-7 * gik * gik / (1152 * hi2));
    // -sum_{l != k,i} h_k gamma_il gamma_kl / (1920 h_i h_l^2)
    for (int l = 0; l < n; ++l) {
        if (l == k || l == i) continue;
        acc.add(-hk * d.g(i, l) * d.g(k, l) / (1920 * hi * d.hsq(l)));
    }
    return acc.done();
}

LemmaPair lemma31_check(const FrobeniusPoint& fp, int i, int which) {
    if (which < 1 || which > 4) throw DomainError("lemma31_check: which must be 1..4");
    const long prec = fp.precision();
    FP d{fp};
    const BigComplex hi2 = d.hsq(i);
    const BigComplex c3 = fp.C(i, 3), c4 = fp.C(i, 4), c5 = fp.C(i, 5), c6 = fp.C(i, 6),
                     c7 = fp.C(i, 7), c8 = fp.C(i, 8);

    BigComplex lhs(prec);
    for (int l = 0; l < fp.n; ++l) {
        if (l == i) continue;
        const BigComplex hl2 = d.hsq(l);
        const BigComplex zil = d.z(i, l);
        const BigComplex cl3 = fp.C(l, 3), cl4 = fp.C(l, 4);
        switch (which) {
        case 1:
            lhs += hl2 / pow_i(zil, 2) * (cl3 * cl3 - cl4 - 2 * cl3 / zil);
            break;
        case 2:
            lhs += hl2 * hl2 / pow_i(zil, 2) * (3L / pow_i(zil, 2) - cl3 / zil);
            break;
        case 3:
            lhs += hl2 / pow_i(zil, 3) * (cl3 * cl3 - cl4 - 3 * cl3 / zil);
            break;
        default:
            lhs += hl2 / pow_i(zil, 4) * (cl3 * cl3 - cl4 - 4 * cl3 / zil);
            break;
        }
    }

    BigComplex rhs(prec);
    switch (which) {
    case 1:
        rhs = -hi2 / 12 *
              (6 * pow_i(c3, 4) - 15 * c3 * c3 * c4 + 4 * c4 * c4 + 7 * c3 * c5 - 2 * c6);
        break;
    case 2:
        rhs = hi2 * hi2 / 240 *
              (75 * pow_i(c3, 4) - 120 * c3 * c3 * c4 + 20 * c4 * c4 + 30 * c3 * c5 - 4 * c6);
        break;
    case 3:
        rhs = -hi2 / 240 *
              (75 * pow_i(c3, 5) - 240 * pow_i(c3, 3) * c4 + 140 * c3 * c4 * c4 +
               120 * c3 * c3 * c5 - 60 * c4 * c5 - 44 * c3 * c6 + 10 * c7);
        break;
    default:
        rhs = -hi2 / 720 *
              (135 * pow_i(c3, 6) - 525 * pow_i(c3, 4) * c4 + 480 * c3 * c3 * c4 * c4 -
               60 * pow_i(c4, 3) + 270 * pow_i(c3, 3) * c5 - 300 * c3 * c4 * c5 + 30 * c5 * c5 -
               108 * c3 * c3 * c6 + 52 * c4 * c6 + 32 * c3 * c7 - 6 * c8);
        break;
    }
    return LemmaPair{lhs, rhs};
}

namespace {

// Y_ij of the antisymmetrized closed decomposition of P_ij.
void add_Y(Accum& acc, const FP& d, const FrobeniusPoint& fp, int i, int j, bool negate) {
    const BigComplex zij = d.z(i, j);
    const BigComplex ci3 = fp.C(i, 3), ci4 = fp.C(i, 4), ci5 = fp.C(i, 5), ci6 = fp.C(i, 6);
    const BigComplex cj3 = fp.C(j, 3);
    BigComplex pre = d.hsq(i) * d.hsq(j) / (5760 * pow_i(zij, 2));
    if (negate) pre = -pre;
    acc.add(pre * (-22 * ci3 / pow_i(zij, 3)));
    acc.add(pre * ((19 * ci3 * ci3 - 104 * ci4) / (2 * pow_i(zij, 2))));
    acc.add(pre * ((15 * pow_i(ci3, 3) - 34 * ci3 * ci4 + 21 * ci5) / zij));
    acc.add(pre * (45 * pow_i(ci3, 4) / 4));
    acc.add(pre * (-22 * ci3 * ci3 * ci4));
    acc.add(pre * (-cj3 * cj3 * ci4 / 6));
    acc.add(pre * (5 * ci4 * ci4));
    acc.add(pre * (49 * ci3 * ci5 / 6));
    acc.add(pre * (-23 * ci6 / 10));
}

} // namespace

DecompositionPair pij_decomposition_check(const FrobeniusPoint& fp, int i, int j) {
    if (i == j) throw DomainError("pij_decomposition_check: requires i != j");
    const long prec = fp.precision();
    FP d{fp};

    Accum anti(prec);
    const BigComplex zij2 = pow_i(d.z(i, j), 2);
    for (int k = 0; k < fp.n; ++k) {
        if (k != i)
            anti.add(7 * (2 * d.hsq(j) * d.hsq(k) * fp.C(k, 3)) /
                   (2880 * zij2 * pow_i(d.z(i, k), 3)));
        if (k != j)
            anti.add(-7 * (2 * d.hsq(i) * d.hsq(k) * fp.C(k, 3)) /
                   (2880 * zij2 * pow_i(d.z(j, k), 3)));
    }
    add_Y(anti, d, fp, i, j, false);
    add_Y(anti, d, fp, j, i, true);

    return DecompositionPair{g2_Pij(fp, i, j), anti.done()};
}

} // namespace g2an
