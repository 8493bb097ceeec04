#include "g2an/residues.hpp"

#include "g2an/errors.hpp"
#include "g2an/series.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace g2an {

BigComplex residue_at(const RationalAtPoles& f, const BigComplex& a, int total_order,
                      int guard_terms, BigReal* coeff_scale) {
    if (total_order < 1) throw DomainError("residue_at: total_order must be positive");
    long prec = std::max(a.precision(), f.numerator.precision());
    if (f.include_lambda_prime_in_denominator)
        prec = std::max(prec, f.lambda_prime.precision());

    int mult_here = 0;
    std::vector<PoleFactor> others;
    for (const auto& pf : f.pole_factors) {
        if (pf.location == a)
            mult_here += pf.multiplicity;
        else
            others.push_back(pf);
    }

    const bool lp = f.include_lambda_prime_in_denominator;
    const bool lp_vanishes_here = lp && total_order == mult_here + 1;
    if (lp && !lp_vanishes_here && total_order != mult_here)
        throw DomainError("residue_at: total_order inconsistent with pole data");
    if (!lp && total_order != mult_here)
        throw DomainError("residue_at: total_order inconsistent with pole data");
    if (mult_here == 0 && !lp_vanishes_here)
        throw DomainError("residue_at: a is not a pole");

    const std::size_t ord = static_cast<std::size_t>(total_order + guard_terms);
    TruncatedSeries unit = f.numerator.taylor(a, ord);

    for (const auto& pf : others) {
        // (z - loc) expanded at a is (a - loc) + w with nonzero constant term.
        TruncatedSeries fac(a, ord, prec);
        fac.coeff(0) = a - pf.location;
        fac.coeff(1) = BigComplex(1L, prec);
        TruncatedSeries inv = series_reciprocal(fac);
        for (int m = 0; m < pf.multiplicity; ++m) unit = series_mul(unit, inv);
    }

    if (lp) {
        TruncatedSeries lps = f.lambda_prime.taylor(a, ord + 1);
        if (lp_vanishes_here) {
            // Factor the claimed simple zero out of lambda'.
            BigReal scale(0L, prec);
            for (std::size_t m = 0; m < lps.order(); ++m) scale = max(scale, abs(lps.coeff(m)));
            if (!(abs(lps.coeff(0)) <= ldexp2(scale, -(prec / 2))) || lps.coeff(1).is_zero())
                throw DomainError("residue_at: lambda' has no simple zero at a");
            lps = lps.shift_down();
        }
        unit = series_mul(unit, series_reciprocal(lps.truncated(ord)));
    }

    if (coeff_scale) {
        BigReal s(0L, prec);
        for (int k = 0; k < total_order; ++k)
            s = max(s, abs(unit.coeff(static_cast<std::size_t>(k))));
        *coeff_scale = s;
    }
    return unit.coeff(static_cast<std::size_t>(total_order - 1));
}

namespace {

int parity_sign(int p) { return (p % 2 == 0) ? 1 : -1; }

Poly constant_poly(long value, long prec) {
    return Poly(std::vector<BigComplex>{BigComplex(value, prec)});
}

// (z_i - z)^p contributes (-1)^p relative to the stored (z - z_i)^p factor.
RationalAtPoles one_pole_integrand(const FrobeniusPoint& fp, const Poly& numerator, int i, int p) {
    RationalAtPoles f;
    f.numerator = numerator * static_cast<long>(parity_sign(p));
    f.pole_factors = {{fp.z[static_cast<std::size_t>(i)], p}};
    f.include_lambda_prime_in_denominator = true;
    f.lambda_prime = fp.lambda_derivs[1];
    return f;
}

RationalAtPoles two_pole_integrand(const FrobeniusPoint& fp, const Poly& numerator, int i, int p,
                                   int j, int q) {
    RationalAtPoles f;
    f.numerator = numerator * static_cast<long>(parity_sign(p + q));
    f.pole_factors = {{fp.z[static_cast<std::size_t>(i)], p},
                      {fp.z[static_cast<std::size_t>(j)], q}};
    f.include_lambda_prime_in_denominator = true;
    f.lambda_prime = fp.lambda_derivs[1];
    return f;
}

// value - lambda(z)
Poly lambda_minus_value(const FrobeniusPoint& fp, const BigComplex& value) {
    return Poly(std::vector<BigComplex>{value}) - fp.lambda;
}

void require_range(bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("closed residue formula: out-of-table arguments for ") + what);
}

} // namespace

TermSum closed_R1_terms(const FrobeniusPoint& fp, int i, int p) {
    require_range(p >= 2 && p <= 6, "R1");
    const long prec = fp.precision();
    const BigComplex c3 = fp.C(i, 3), c4 = fp.C(i, 4), c5 = fp.C(i, 5), c6 = fp.C(i, 6),
                     c7 = fp.C(i, 7), c8 = fp.C(i, 8);
    TermAccumulator acc(prec);
    switch (p) {
    case 2:
        acc.add(-(c3 * c3) / 4);
        acc.add(c4 / 3);
        break;
    case 3:
        acc.add(-pow_i(c3, 3) / 8);
        acc.add(2 * c3 * c4 / 8);
        acc.add(-c5 / 8);
        break;
    case 4:
        acc.add(-45 * pow_i(c3, 4) / 720);
        acc.add(120 * c3 * c3 * c4 / 720);
        acc.add(-40 * c4 * c4 / 720);
        acc.add(-60 * c3 * c5 / 720);
        acc.add(24 * c6 / 720);
        break;
    case 5:
        acc.add(-9 * pow_i(c3, 5) / 288);
        acc.add(30 * pow_i(c3, 3) * c4 / 288);
        acc.add(-20 * c3 * c4 * c4 / 288);
        acc.add(-15 * c3 * c3 * c5 / 288);
        acc.add(10 * c4 * c5 / 288);
        acc.add(6 * c3 * c6 / 288);
        acc.add(-2 * c7 / 288);
        break;
    default:
        acc.add(-945 * pow_i(c3, 6) / 60480);
        acc.add(3780 * pow_i(c3, 4) * c4 / 60480);
        acc.add(-3780 * c3 * c3 * c4 * c4 / 60480);
        acc.add(560 * pow_i(c4, 3) / 60480);
        acc.add(-1890 * pow_i(c3, 3) * c5 / 60480);
        acc.add(2520 * c3 * c4 * c5 / 60480);
        acc.add(-315 * c5 * c5 / 60480);
        acc.add(756 * c3 * c3 * c6 / 60480);
        acc.add(-504 * c4 * c6 / 60480);
        acc.add(-252 * c3 * c7 / 60480);
        acc.add(72 * c8 / 60480);
        break;
    }
    return acc.done();
}

TermSum closed_R2_terms(const FrobeniusPoint& fp, int i, int p) {
    require_range(p >= 2 && p <= 6, "R2");
    const long prec = fp.precision();
    const BigComplex hsq = fp.hsq[static_cast<std::size_t>(i)];
    const BigComplex c3 = fp.C(i, 3), c4 = fp.C(i, 4), c5 = fp.C(i, 5), c6 = fp.C(i, 6),
                     c7 = fp.C(i, 7), c8 = fp.C(i, 8);
    TermAccumulator acc(prec);
    switch (p) {
    case 2:
        acc.add(hsq * 3 * c3 * c3 / 12);
        acc.add(-hsq * 2 * c4 / 12);
        break;
    case 3:
        acc.add(hsq * 3 * pow_i(c3, 3) / 24);
        acc.add(-hsq * 4 * c3 * c4 / 24);
        acc.add(hsq * c5 / 24);
        break;
    case 4:
        acc.add(hsq * 45 * pow_i(c3, 4) / 720);
        acc.add(-hsq * 90 * c3 * c3 * c4 / 720);
        acc.add(hsq * 20 * c4 * c4 / 720);
        acc.add(hsq * 30 * c3 * c5 / 720);
        acc.add(-hsq * 6 * c6 / 720);
        break;
    case 5:
        acc.add(hsq * 45 * pow_i(c3, 5) / 1440);
        acc.add(-hsq * 120 * pow_i(c3, 3) * c4 / 1440);
        acc.add(hsq * 60 * c3 * c4 * c4 / 1440);
        acc.add(hsq * 45 * c3 * c3 * c5 / 1440);
        acc.add(-hsq * 20 * c4 * c5 / 1440);
        acc.add(-hsq * 12 * c3 * c6 / 1440);
        acc.add(hsq * 2 * c7 / 1440);
        break;
    default:
        acc.add(hsq * 945 * pow_i(c3, 6) / 60480);
        acc.add(-hsq * 3150 * pow_i(c3, 4) * c4 / 60480);
        acc.add(hsq * 2520 * c3 * c3 * c4 * c4 / 60480);
        acc.add(-hsq * 280 * pow_i(c4, 3) / 60480);
        acc.add(hsq * 1260 * pow_i(c3, 3) * c5 / 60480);
        acc.add(-hsq * 1260 * c3 * c4 * c5 / 60480);
        acc.add(hsq * 105 * c5 * c5 / 60480);
        acc.add(-hsq * 378 * c3 * c3 * c6 / 60480);
        acc.add(hsq * 168 * c4 * c6 / 60480);
        acc.add(hsq * 84 * c3 * c7 / 60480);
        acc.add(-hsq * 12 * c8 / 60480);
        break;
    }
    return acc.done();
}

TermSum closed_R3_terms(const FrobeniusPoint& fp, int i, int p) {
    require_range(p >= 4 && p <= 8, "R3");
    const long prec = fp.precision();
    const BigComplex c3 = fp.C(i, 3), c4 = fp.C(i, 4), c5 = fp.C(i, 5), c6 = fp.C(i, 6),
                     c7 = fp.C(i, 7), c8 = fp.C(i, 8);
    TermAccumulator acc(prec);
    switch (p) {
    case 4:
        acc.add(-(c3 * c3) / 24);
        acc.add(c4 / 24);
        break;
    case 5:
        acc.add(-15 * pow_i(c3, 3) / 720);
        acc.add(25 * c3 * c4 / 720);
        acc.add(-9 * c5 / 720);
        break;
    case 6:
        acc.add(-15 * pow_i(c3, 4) / 1440);
        acc.add(35 * c3 * c3 * c4 / 1440);
        acc.add(-10 * c4 * c4 / 1440);
        acc.add(-14 * c3 * c5 / 1440);
        acc.add(4 * c6 / 1440);
        break;
    case 7:
        acc.add(-315 * pow_i(c3, 5) / 60480);
        acc.add(945 * pow_i(c3, 3) * c4 / 60480);
        acc.add(-560 * c3 * c4 * c4 / 60480);
        acc.add(-399 * c3 * c3 * c5 / 60480);
        acc.add(231 * c4 * c5 / 60480);
        acc.add(126 * c3 * c6 / 60480);
        acc.add(-30 * c7 / 60480);
        break;
    default:
        acc.add(-315 * pow_i(c3, 6) / 120960);
        acc.add(1155 * pow_i(c3, 4) * c4 / 120960);
        acc.add(-1050 * c3 * c3 * c4 * c4 / 120960);
        acc.add(140 * pow_i(c4, 3) / 120960);
        acc.add(-504 * pow_i(c3, 3) * c5 / 120960);
        acc.add(602 * c3 * c4 * c5 / 120960);
        acc.add(-63 * c5 * c5 / 120960);
        acc.add(168 * c3 * c3 * c6 / 120960);
        acc.add(-98 * c4 * c6 / 120960);
        acc.add(-44 * c3 * c7 / 120960);
        acc.add(9 * c8 / 120960);
        break;
    }
    return acc.done();
}

TermSum closed_R4_terms(const FrobeniusPoint& fp, int i, int p, int q) {
    const long prec = fp.precision();
    const BigComplex c3 = fp.C(i, 3), c4 = fp.C(i, 4), c5 = fp.C(i, 5), c6 = fp.C(i, 6),
                     c7 = fp.C(i, 7), c8 = fp.C(i, 8);
    TermAccumulator acc(prec);
    if (p == 5 && q == 3) {
        acc.add(45 * pow_i(c3, 6) / 1440);
        acc.add(-210 * pow_i(c3, 4) * c4 / 1440);
        acc.add(240 * c3 * c3 * c4 * c4 / 1440);
        acc.add(-40 * pow_i(c4, 3) / 1440);
        acc.add(135 * pow_i(c3, 3) * c5 / 1440);
        acc.add(-200 * c3 * c4 * c5 / 1440);
        acc.add(30 * c5 * c5 / 1440);
        acc.add(-72 * c3 * c3 * c6 / 1440);
        acc.add(52 * c4 * c6 / 1440);
        acc.add(32 * c3 * c7 / 1440);
        acc.add(-12 * c8 / 1440);
    } else if (p == 2 && q == 4) {
        acc.add(3 * c3 * c3 * c4 / 12);
        acc.add(-2 * c4 * c4 / 12);
        acc.add(-6 * c3 * c5 / 12);
        acc.add(6 * c6 / 12);
    } else if (p == 3 && q == 4) {
        acc.add(3 * pow_i(c3, 3) * c4 / 24);
        acc.add(-4 * c3 * c4 * c4 / 24);
        acc.add(-6 * c3 * c3 * c5 / 24);
        acc.add(5 * c4 * c5 / 24);
        acc.add(6 * c3 * c6 / 24);
        acc.add(-4 * c7 / 24);
    } else if (p == 4 && q == 4) {
        acc.add(45 * pow_i(c3, 4) * c4 / 720);
        acc.add(-90 * c3 * c3 * c4 * c4 / 720);
        acc.add(20 * pow_i(c4, 3) / 720);
        acc.add(-90 * pow_i(c3, 3) * c5 / 720);
        acc.add(150 * c3 * c4 * c5 / 720);
        acc.add(-30 * c5 * c5 / 720);
        acc.add(90 * c3 * c3 * c6 / 720);
        acc.add(-66 * c4 * c6 / 720);
        acc.add(-60 * c3 * c7 / 720);
        acc.add(30 * c8 / 720);
    } else {
        throw DomainError("closed residue formula: out-of-table arguments for R4");
    }
    return acc.done();
}

TermSum closed_R5_terms(const FrobeniusPoint& fp, int i, int j, int p, int q) {
    const long prec = fp.precision();
    const BigComplex zij = fp.zdiff(i, j);
    const BigComplex ci3 = fp.C(i, 3), ci4 = fp.C(i, 4), ci5 = fp.C(i, 5), ci6 = fp.C(i, 6);
    const BigComplex cj3 = fp.C(j, 3), cj4 = fp.C(j, 4), cj5 = fp.C(j, 5), cj6 = fp.C(j, 6);
    TermAccumulator acc(prec);
    if (p == 2 && q == 2) {
        acc.add(6L / pow_i(zij, 4));
        acc.add(-(ci3 - cj3) / pow_i(zij, 3));
        acc.add(-(3 * ci3 * ci3) / (12 * pow_i(zij, 2)));
        acc.add(-(3 * cj3 * cj3) / (12 * pow_i(zij, 2)));
        acc.add(4 * ci4 / (12 * pow_i(zij, 2)));
        acc.add(4 * cj4 / (12 * pow_i(zij, 2)));
    } else if (p == 2 && q == 4) {
        acc.add(15L / pow_i(zij, 6));
        acc.add(-(2 * ci3 - 2 * cj3) / pow_i(zij, 5));
        acc.add(-3 * ci3 * ci3 / (12 * pow_i(zij, 4)));
        acc.add(-9 * cj3 * cj3 / (12 * pow_i(zij, 4)));
        acc.add(4 * ci4 / (12 * pow_i(zij, 4)));
        acc.add(12 * cj4 / (12 * pow_i(zij, 4)));
        acc.add(pow_i(cj3, 3) / (4 * pow_i(zij, 3)));
        acc.add(-2 * cj3 * cj4 / (4 * pow_i(zij, 3)));
        acc.add(cj5 / (4 * pow_i(zij, 3)));
        acc.add(-45 * pow_i(cj3, 4) / (720 * pow_i(zij, 2)));
        acc.add(120 * cj3 * cj3 * cj4 / (720 * pow_i(zij, 2)));
        acc.add(-40 * cj4 * cj4 / (720 * pow_i(zij, 2)));
        acc.add(-60 * cj3 * cj5 / (720 * pow_i(zij, 2)));
        acc.add(24 * cj6 / (720 * pow_i(zij, 2)));
    } else if (p == 4 && q == 2) {
        acc.add(15L / pow_i(zij, 6));
        acc.add(-(2 * ci3 - 2 * cj3) / pow_i(zij, 5));
        acc.add(-3 * cj3 * cj3 / (12 * pow_i(zij, 4)));
        acc.add(-9 * ci3 * ci3 / (12 * pow_i(zij, 4)));
        acc.add(4 * cj4 / (12 * pow_i(zij, 4)));
        acc.add(12 * ci4 / (12 * pow_i(zij, 4)));
        acc.add(-pow_i(ci3, 3) / (4 * pow_i(zij, 3)));
        acc.add(2 * ci3 * ci4 / (4 * pow_i(zij, 3)));
        acc.add(-ci5 / (4 * pow_i(zij, 3)));
        acc.add(-45 * pow_i(ci3, 4) / (720 * pow_i(zij, 2)));
        acc.add(120 * ci3 * ci3 * ci4 / (720 * pow_i(zij, 2)));
        acc.add(-40 * ci4 * ci4 / (720 * pow_i(zij, 2)));
        acc.add(-60 * ci3 * ci5 / (720 * pow_i(zij, 2)));
        acc.add(24 * ci6 / (720 * pow_i(zij, 2)));
    } else {
        throw DomainError("closed residue formula: out-of-table arguments for R5");
    }
    return acc.done();
}

TermSum closed_R6_terms(const FrobeniusPoint& fp, int i, int k, int p, int q) {
    const long prec = fp.precision();
    const BigComplex zik = fp.zdiff(i, k);
    const BigComplex uik = fp.udiff(i, k);
    const BigComplex hu = fp.hsq[static_cast<std::size_t>(i)] * uik;
    const BigComplex ci3 = fp.C(i, 3), ci4 = fp.C(i, 4), ci5 = fp.C(i, 5), ci6 = fp.C(i, 6);
    const BigComplex ck3 = fp.C(k, 3), ck4 = fp.C(k, 4);
    TermAccumulator acc(prec);
    if (p == 2 && q == 2) {
        acc.add(-1L / pow_i(zik, 2));
        acc.add(-hu * 3L / pow_i(zik, 4));
        acc.add(-hu * ci3 / pow_i(zik, 3));
        acc.add(-hu * ci3 * ci3 / (4 * pow_i(zik, 2)));
        acc.add(hu * ci4 / (6 * pow_i(zik, 2)));
    } else if (p == 2 && q == 3) {
        acc.add(3L / (2 * pow_i(zik, 3)));
        acc.add(-ck3 / (12 * pow_i(zik, 2)));
        acc.add(hu * 6L / pow_i(zik, 5));
        acc.add(hu * 3 * ci3 / (2 * pow_i(zik, 4)));
        acc.add(hu * ci3 * ci3 / (4 * pow_i(zik, 3)));
        acc.add(-hu * ci4 / (6 * pow_i(zik, 3)));
    } else if (p == 2 && q == 4) {
        acc.add(-2L / pow_i(zik, 4));
        acc.add(ck3 / (6 * pow_i(zik, 3)));
        acc.add(-(ck3 * ck3) / (24 * pow_i(zik, 2)));
        acc.add(ck4 / (24 * pow_i(zik, 2)));
        acc.add(-hu * 10L / pow_i(zik, 6));
        acc.add(-hu * 2 * ci3 / pow_i(zik, 5));
        acc.add(-hu * ci3 * ci3 / (4 * pow_i(zik, 4)));
        acc.add(hu * ci4 / (6 * pow_i(zik, 4)));
    } else if (p == 3 && q == 2) {
        acc.add(-3L / (2 * pow_i(zik, 3)));
        acc.add(-ci3 / (12 * pow_i(zik, 2)));
        acc.add(-hu * 4L / pow_i(zik, 5));
        acc.add(-hu * 3 * ci3 / (2 * pow_i(zik, 4)));
        acc.add(-hu * 2 * ci3 * ci3 / (4 * pow_i(zik, 3)));
        acc.add(hu * 2 * ci4 / (6 * pow_i(zik, 3)));
        acc.add(-hu * (3 * pow_i(ci3, 3)) / (24 * pow_i(zik, 2)));
        acc.add(hu * 4 * ci3 * ci4 / (24 * pow_i(zik, 2)));
        acc.add(-hu * ci5 / (24 * pow_i(zik, 2)));
    } else if (p == 4 && q == 2) {
        acc.add(-2L / pow_i(zik, 4));
        acc.add(-ci3 / (6 * pow_i(zik, 3)));
        acc.add(-(ci3 * ci3) / (24 * pow_i(zik, 2)));
        acc.add(ci4 / (24 * pow_i(zik, 2)));
        acc.add(-hu * 5L / pow_i(zik, 6));
        acc.add(-hu * 2 * ci3 / pow_i(zik, 5));
        acc.add(-hu * 3 * ci3 * ci3 / (4 * pow_i(zik, 4)));
        acc.add(hu * 3 * ci4 / (6 * pow_i(zik, 4)));
        acc.add(-hu * 3 * pow_i(ci3, 3) / (12 * pow_i(zik, 3)));
        acc.add(hu * 4 * ci3 * ci4 / (12 * pow_i(zik, 3)));
        acc.add(-hu * ci5 / (12 * pow_i(zik, 3)));
        acc.add(-hu * 45 * pow_i(ci3, 4) / (720 * pow_i(zik, 2)));
        acc.add(hu * 90 * ci3 * ci3 * ci4 / (720 * pow_i(zik, 2)));
        acc.add(-hu * 20 * ci4 * ci4 / (720 * pow_i(zik, 2)));
        acc.add(-hu * 30 * ci3 * ci5 / (720 * pow_i(zik, 2)));
        acc.add(hu * 6 * ci6 / (720 * pow_i(zik, 2)));
    } else {
        throw DomainError("closed residue formula: out-of-table arguments for R6");
    }
    return acc.done();
}

BigComplex closed_R1(const FrobeniusPoint& fp, int i, int p) { return closed_R1_terms(fp, i, p).value; }
BigComplex closed_R2(const FrobeniusPoint& fp, int i, int p) { return closed_R2_terms(fp, i, p).value; }
BigComplex closed_R3(const FrobeniusPoint& fp, int i, int p) { return closed_R3_terms(fp, i, p).value; }
BigComplex closed_R4(const FrobeniusPoint& fp, int i, int p, int q) {
    return closed_R4_terms(fp, i, p, q).value;
}
BigComplex closed_R5(const FrobeniusPoint& fp, int i, int j, int p, int q) {
    return closed_R5_terms(fp, i, j, p, q).value;
}
BigComplex closed_R6(const FrobeniusPoint& fp, int i, int k, int p, int q) {
    return closed_R6_terms(fp, i, k, p, q).value;
}

BigComplex oracle_R1(const FrobeniusPoint& fp, int i, int p, int guard_terms) {
    RationalAtPoles f = one_pole_integrand(fp, fp.lambda_derivs[2], i, p);
    return residue_at(f, fp.z[static_cast<std::size_t>(i)], p + 1, guard_terms);
}

BigComplex oracle_R2(const FrobeniusPoint& fp, int i, int p, int guard_terms) {
    RationalAtPoles f = one_pole_integrand(fp, constant_poly(1L, fp.precision()), i, p);
    return residue_at(f, fp.z[static_cast<std::size_t>(i)], p + 1, guard_terms);
}

BigComplex oracle_R3(const FrobeniusPoint& fp, int i, int p, int guard_terms) {
    RationalAtPoles f =
        one_pole_integrand(fp, lambda_minus_value(fp, fp.u[static_cast<std::size_t>(i)]), i, p);
    return residue_at(f, fp.z[static_cast<std::size_t>(i)], p + 1, guard_terms);
}

BigComplex oracle_R4(const FrobeniusPoint& fp, int i, int p, int q, int guard_terms) {
    RationalAtPoles f =
        one_pole_integrand(fp, fp.lambda_derivs[static_cast<std::size_t>(q)], i, p);
    return residue_at(f, fp.z[static_cast<std::size_t>(i)], p + 1, guard_terms);
}

BigComplex oracle_R5(const FrobeniusPoint& fp, int i, int j, int p, int q, int guard_terms) {
    RationalAtPoles f = two_pole_integrand(fp, fp.lambda_derivs[2], i, p, j, q);
    return residue_at(f, fp.z[static_cast<std::size_t>(i)], p + 1, guard_terms) +
           residue_at(f, fp.z[static_cast<std::size_t>(j)], q + 1, guard_terms);
}

BigComplex oracle_R6(const FrobeniusPoint& fp, int i, int k, int p, int q, int guard_terms) {
    RationalAtPoles f =
        two_pole_integrand(fp, lambda_minus_value(fp, fp.u[static_cast<std::size_t>(k)]), i, p, k, q);
    return residue_at(f, fp.z[static_cast<std::size_t>(i)], p + 1, guard_terms) +
           residue_at(f, fp.z[static_cast<std::size_t>(k)], q + 1, guard_terms);
}

SumVsResidue sum_vs_residue(const FrobeniusPoint& fp, SumKind kind, int i, int j, int p, int q) {
    const long prec = fp.precision();
    const std::size_t si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
    TermAccumulator direct(prec);
    BigComplex value(prec);
    BigReal residue_scale(0L, prec);

    auto one_pole = [&](const Poly& numerator, int sign) {
        RationalAtPoles f = one_pole_integrand(fp, numerator, i, p);
        BigReal s(0L, prec);
        BigComplex r = residue_at(f, fp.z[si], p + 1, 2, &s);
        residue_scale += s;
        value = sign * r;
    };
    auto two_pole = [&](const Poly& numerator, int sign) {
        RationalAtPoles f = two_pole_integrand(fp, numerator, i, p, j, q);
        BigReal s1(0L, prec), s2(0L, prec);
        BigComplex ri = residue_at(f, fp.z[si], p + 1, 2, &s1);
        BigComplex rj = residue_at(f, fp.z[sj], q + 1, 2, &s2);
        residue_scale += s1 + s2;
        value = sign * (ri + rj);
    };

    switch (kind) {
    case SumKind::inv_z:
        for (int k = 0; k < fp.n; ++k)
            if (k != i) direct.add(1L / pow_i(fp.zdiff(i, k), p));
        one_pole(fp.lambda_derivs[2], -1);
        break;
    case SumKind::hsq_inv_z:
        for (int k = 0; k < fp.n; ++k)
            if (k != i) direct.add(fp.hsq[static_cast<std::size_t>(k)] / pow_i(fp.zdiff(i, k), p));
        one_pole(constant_poly(1L, prec), -1);
        break;
    case SumKind::C_inv_z:
        for (int k = 0; k < fp.n; ++k)
            if (k != i) direct.add(fp.C(k, q) / pow_i(fp.zdiff(i, k), p));
        one_pole(fp.lambda_derivs[static_cast<std::size_t>(q)], -1);
        break;
    case SumKind::hsq_u_inv_z:
        for (int k = 0; k < fp.n; ++k)
            if (k != i)
                direct.add(fp.hsq[static_cast<std::size_t>(k)] * fp.udiff(i, k) /
                           pow_i(fp.zdiff(i, k), p));
        one_pole(lambda_minus_value(fp, fp.u[si]), -1);
        break;
    case SumKind::two_pole_inv:
        for (int k = 0; k < fp.n; ++k)
            if (k != i && k != j)
                direct.add(1L / (pow_i(fp.zdiff(i, k), p) * pow_i(fp.zdiff(j, k), q)));
        two_pole(fp.lambda_derivs[2], -1);
        break;
    case SumKind::two_pole_C3:
        for (int k = 0; k < fp.n; ++k)
            if (k != i && k != j)
                direct.add(fp.C(k, 3) / (pow_i(fp.zdiff(i, k), p) * pow_i(fp.zdiff(j, k), q)));
        two_pole(fp.lambda_derivs[3], -1);
        break;
    case SumKind::u_weighted_two_pole:
        // sum_{l != i,j} h_l^2 (u_l - u_j) / (z_il^p z_jl^q), equal to +R6(p,q)
        // at the excluded pair by the global residue theorem.
        for (int l = 0; l < fp.n; ++l)
            if (l != i && l != j)
                direct.add(fp.hsq[static_cast<std::size_t>(l)] * fp.udiff(l, j) /
                           (pow_i(fp.zdiff(i, l), p) * pow_i(fp.zdiff(j, l), q)));
        two_pole(lambda_minus_value(fp, fp.u[sj]), 1);
        break;
    }
    TermSum ds = direct.done();
    return SumVsResidue{ds.value, value, ds.termscale + residue_scale};
}

PowerSymmetric power_sums_and_symmetric(const FrobeniusPoint& fp, int i, int k, int pmax) {
    if (i == k) throw DomainError("power_sums_and_symmetric: requires i != k");
    if (pmax < 1 || pmax > 6) throw DomainError("power_sums_and_symmetric: pmax must be in 1..6");
    const long prec = fp.precision();
    const std::size_t si = static_cast<std::size_t>(i), sk = static_cast<std::size_t>(k);

    std::vector<int> others;
    for (int j = 0; j < fp.n; ++j)
        if (j != i && j != k) others.push_back(j);

    PowerSymmetric out;
    const int atop = std::max(pmax, 2);
    for (int p = 1; p <= atop; ++p) {
        BigComplex acc(prec);
        for (int j : others) acc += 1L / pow_i(fp.zdiff(k, j), p);
        out.A.push_back(acc);
    }

    // Elementary symmetric functions of {1/z_kj} by direct subset enumeration.
    const int etop = std::max(pmax, fp.n - 2);
    out.elementary_direct.assign(static_cast<std::size_t>(etop) + 1, BigComplex(prec));
    out.elementary_direct[0] = BigComplex(1L, prec);
    {
        std::vector<BigComplex> inv;
        inv.reserve(others.size());
        for (int j : others) inv.push_back(1L / fp.zdiff(k, j));
        std::function<void(std::size_t, int, BigComplex)> rec =
            [&](std::size_t start, int size, BigComplex prod) {
                if (size > 0 && size <= etop) out.elementary_direct[static_cast<std::size_t>(size)] += prod;
                if (size == etop) return;
                for (std::size_t j = start; j < inv.size(); ++j) rec(j + 1, size + 1, prod * inv[j]);
            };
        rec(0, 0, BigComplex(1L, prec));
    }

    // Power-sum conversion, valid for p = 2..6.
    out.elementary_newton.assign(static_cast<std::size_t>(pmax) + 1, BigComplex(prec));
    out.elementary_newton_scale.assign(static_cast<std::size_t>(pmax) + 1, BigReal(0L, prec));
    out.elementary_newton[0] = BigComplex(1L, prec);
    const BigComplex a1 = out.A[0];
    auto set_row = [&](int p, std::initializer_list<BigComplex> monomials) {
        TermAccumulator acc(prec);
        for (const auto& m : monomials) acc.add(m);
        TermSum s = acc.done();
        out.elementary_newton[static_cast<std::size_t>(p)] = s.value;
        out.elementary_newton_scale[static_cast<std::size_t>(p)] = s.termscale;
    };
    if (pmax >= 1) set_row(1, {a1});
    if (pmax >= 2) {
        const BigComplex a2 = out.A[1];
        set_row(2, {a1 * a1 / 2, -a2 / 2});
        if (pmax >= 3) {
            const BigComplex a3 = out.A[2];
            set_row(3, {pow_i(a1, 3) / 6, -3 * a1 * a2 / 6, 2 * a3 / 6});
            if (pmax >= 4) {
                const BigComplex a4 = out.A[3];
                set_row(4, {pow_i(a1, 4) / 24, -6 * a1 * a1 * a2 / 24, 8 * a1 * a3 / 24,
                            3 * a2 * a2 / 24, -6 * a4 / 24});
                if (pmax >= 5) {
                    const BigComplex a5 = out.A[4];
                    set_row(5, {pow_i(a1, 5) / 120, -10 * pow_i(a1, 3) * a2 / 120,
                                20 * a1 * a1 * a3 / 120, 15 * a1 * a2 * a2 / 120,
                                -30 * a1 * a4 / 120, -20 * a2 * a3 / 120, 24 * a5 / 120});
                    if (pmax >= 6) {
                        const BigComplex a6 = out.A[5];
                        set_row(6, {pow_i(a1, 6) / 720, -15 * pow_i(a1, 4) * a2 / 720,
                                    40 * pow_i(a1, 3) * a3 / 720, 45 * a1 * a1 * a2 * a2 / 720,
                                    -90 * a1 * a1 * a4 / 720, 144 * a1 * a5 / 720,
                                    -120 * a1 * a2 * a3 / 720, -15 * pow_i(a2, 3) / 720,
                                    90 * a2 * a4 / 720, 40 * a3 * a3 / 720, -120 * a6 / 720});
                    }
                }
            }
        }
    }

    const BigComplex zik = fp.zdiff(i, k);
    out.zh13_lhs = zik * fp.C(k, 3);
    out.zh13_rhs = 2 * (a1 * zik - 1L);
    out.zh13_scale = abs(out.zh13_lhs) + BigReal(2L, prec) + abs(2 * a1 * zik);
    out.zh14_lhs = pow_i(zik, 2) * fp.C(k, 4);
    out.zh14_rhs = 3 * (a1 * a1 - out.A[1]) * pow_i(zik, 2) - 6 * a1 * zik;
    out.zh14_scale = abs(out.zh14_lhs) + abs(3 * a1 * a1 * pow_i(zik, 2)) +
                     abs(3 * out.A[1] * pow_i(zik, 2)) + abs(6 * a1 * zik);
    out.zh12_lhs = fp.hsq[sk] / fp.hsq[si];
    BigComplex rhs(prec);
    BigReal rhs_scale = abs(out.zh12_lhs);
    for (int p = 0; p <= fp.n - 2; ++p) {
        BigComplex term = out.elementary_direct[static_cast<std::size_t>(p)] * pow_i(zik, p);
        rhs += term;
        rhs_scale += abs(term);
    }
    out.zh12_rhs = -rhs;
    out.zh12_scale = rhs_scale;
    return out;
}

} // namespace g2an
