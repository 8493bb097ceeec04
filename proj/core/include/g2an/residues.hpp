#pragma once

#include "g2an/bigcomplex.hpp"
#include "g2an/frobenius.hpp"
#include "g2an/poly.hpp"
#include "g2an/termsum.hpp"

#include <vector>

namespace g2an {

struct PoleFactor {
    BigComplex location;
    int multiplicity = 1;
};

// numerator(z) / ( prod (z - location)^multiplicity * [lambda'(z)] ).
// When lambda' is included, each of its simple zeros is one more pole order
// at that location.
struct RationalAtPoles {
    Poly numerator;
    std::vector<PoleFactor> pole_factors;
    bool include_lambda_prime_in_denominator = false;
    Poly lambda_prime; // consulted only when the flag is set
};

// Residue at `a` via truncated-series expansion with `guard_terms` spare
// orders. `total_order` is the full pole multiplicity at `a`, counting the
// lambda' zero when applicable. When `coeff_scale` is given it receives the
// largest magnitude among the quotient-series coefficients up to the residue
// order: the scale against which a vanishing residue is meaningful.
BigComplex residue_at(const RationalAtPoles& f, const BigComplex& a, int total_order,
                      int guard_terms = 2, BigReal* coeff_scale = nullptr);

// Closed residue formulas, valid on the tabulated ranges only.
// R1(p) = res_{z=z_i} lambda''(z) / ((z_i-z)^p lambda'(z)),            p in 2..6
// R2(p) = res_{z=z_i} 1 / ((z_i-z)^p lambda'(z)),                      p in 2..6
// R3(p) = res_{z=z_i} (lambda(z_i)-lambda(z)) / ((z_i-z)^p lambda'(z)), p in 4..8
// R4(p,q) = res_{z=z_i} lambda^(q)(z) / ((z_i-z)^p lambda'(z)),        (5,3),(2,4),(3,4),(4,4)
// R5(p,q) = (res_{z_i}+res_{z_j}) lambda'' / ((z_i-z)^p (z_j-z)^q lambda'), (2,2),(2,4),(4,2)
// R6(p,q) = (res_{z_i}+res_{z_k}) (lambda(z_k)-lambda) / ((z_i-z)^p (z_k-z)^q lambda'),
//           (2,2),(2,3),(2,4),(3,2),(4,2)
BigComplex closed_R1(const FrobeniusPoint& fp, int i, int p);
BigComplex closed_R2(const FrobeniusPoint& fp, int i, int p);
BigComplex closed_R3(const FrobeniusPoint& fp, int i, int p);
BigComplex closed_R4(const FrobeniusPoint& fp, int i, int p, int q);
BigComplex closed_R5(const FrobeniusPoint& fp, int i, int j, int p, int q);
BigComplex closed_R6(const FrobeniusPoint& fp, int i, int k, int p, int q);

// Same values with the formula's termscale attached. Needed when a residue is
// identically zero (so closed and oracle agree only up to roundoff that must
// be measured against the monomial magnitudes, not the vanishing value).
TermSum closed_R1_terms(const FrobeniusPoint& fp, int i, int p);
TermSum closed_R2_terms(const FrobeniusPoint& fp, int i, int p);
TermSum closed_R3_terms(const FrobeniusPoint& fp, int i, int p);
TermSum closed_R4_terms(const FrobeniusPoint& fp, int i, int p, int q);
TermSum closed_R5_terms(const FrobeniusPoint& fp, int i, int j, int p, int q);
TermSum closed_R6_terms(const FrobeniusPoint& fp, int i, int k, int p, int q);

// Series-oracle counterparts of the same residues.
BigComplex oracle_R1(const FrobeniusPoint& fp, int i, int p, int guard_terms = 2);
BigComplex oracle_R2(const FrobeniusPoint& fp, int i, int p, int guard_terms = 2);
BigComplex oracle_R3(const FrobeniusPoint& fp, int i, int p, int guard_terms = 2);
BigComplex oracle_R4(const FrobeniusPoint& fp, int i, int p, int q, int guard_terms = 2);
BigComplex oracle_R5(const FrobeniusPoint& fp, int i, int j, int p, int q, int guard_terms = 2);
BigComplex oracle_R6(const FrobeniusPoint& fp, int i, int k, int p, int q, int guard_terms = 2);

enum class SumKind {
    inv_z,               // sum_{k!=i} 1/z_ik^p
    hsq_inv_z,           // sum_{k!=i} h_k^2/z_ik^p
    C_inv_z,             // sum_{k!=i} C_kq/z_ik^p
    hsq_u_inv_z,         // sum_{k!=i} h_k^2 u_ik / z_ik^p
    two_pole_inv,        // sum_{k!=i,j} 1/(z_ik^p z_jk^q)
    two_pole_C3,         // sum_{k!=i,j} C_k3/(z_ik^p z_jk^q)
    u_weighted_two_pole, // sum_{l!=i,k} h_l^2 u_lk / (z_il^p z_kl^q)
};

struct SumVsResidue {
    BigComplex direct_sum;
    BigComplex residue_value; // what the direct sum must equal, from the oracle
    // Sum of |direct summands| plus |each pole residue| before cancellation;
    // the scale against which agreement of the two sides is judged.
    BigReal scale;

    BigReal rel_residual() const { return compare_against_scale(direct_sum, residue_value, scale); }
};

// Lattice sum over critical points against the (negated) oracle residues at
// the excluded point(s). `j` names the second excluded index for the
// two-pole kinds and is ignored otherwise.
SumVsResidue sum_vs_residue(const FrobeniusPoint& fp, SumKind kind, int i, int j, int p, int q);

struct PowerSymmetric {
    std::vector<BigComplex> A; // A[p-1] = A_{i,k,p} = sum_{j != k,i} 1/z_kj^p
    // e_p over indices j != i,k: [p] for p = 0..pmax (e_0 = 1, e_1 = A_1).
    std::vector<BigComplex> elementary_direct; // subset enumeration
    std::vector<BigComplex> elementary_newton; // power-sum conversion, p >= 2
    std::vector<BigReal> elementary_newton_scale; // termscale of each conversion row
    BigComplex zh13_lhs, zh13_rhs;             // z_ik C_k3 = 2(-1 + A_1 z_ik)
    BigComplex zh14_lhs, zh14_rhs; // z_ik^2 C_k4 = 3(A_1^2 - A_2) z_ik^2 - 6 A_1 z_ik
    BigComplex zh12_lhs, zh12_rhs; // h_k^2/h_i^2 = -sum_p e_p z_ik^p
    BigReal zh13_scale, zh14_scale, zh12_scale;
};

PowerSymmetric power_sums_and_symmetric(const FrobeniusPoint& fp, int i, int k, int pmax);

} // namespace g2an
