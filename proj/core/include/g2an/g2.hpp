#pragma once

#include "g2an/bigcomplex.hpp"
#include "g2an/frobenius.hpp"
#include "g2an/termsum.hpp"

namespace g2an {

// G_i^(2)(u, u_x): coefficient of u_{i,xx}. Depends on the jet only through
// the ratios u_{k,x}/u_{i,x}.
TermSum g2_Gi(const FrobeniusPoint& fp, const Jet2& jet, int i);

// G_ij^(2)(u) for i != j: coefficient of (u_{j,x})^3 / u_{i,x}.
TermSum g2_Gij(const FrobeniusPoint& fp, int i, int j);
// Closed form of the same coefficient: h_i^2 h_j^2/(5760 z_ij^4) ( ... ) plus
// the direct k-sum; vanishes identically.
TermSum g2_Gij_closed(const FrobeniusPoint& fp, int i, int j);

// P_ij^(2)(u). i == j is allowed: the diagonal keeps exactly the monomials
// whose denominators survive the index coincidence.
TermSum g2_Pij(const FrobeniusPoint& fp, int i, int j);

// Q_i^(2)(u).
TermSum g2_Qi(const FrobeniusPoint& fp, int i);

// (1/2) P_ii^(2) in closed form: (h_i^4/480) sum_{k != i} (1/z_ik^6 + C_k3/(2 z_ik^5)).
TermSum half_Pii_closed(const FrobeniusPoint& fp, int i);

// The assembled genus-two G-function
//   sum_i G_i u_{i,xx} + sum_{i!=j} G_ij (u_{j,x})^3/u_{i,x}
//   + (1/2) sum_{i,j} P_ij u_{i,x} u_{j,x} + sum_i Q_i (u_{i,x})^2.
TermSum g2_total(const FrobeniusPoint& fp, const Jet2& jet);

// The eleven-term coefficient sum T(u_{k,x}/u_{i,x}) extracted from G_i^(2);
// vanishes identically for every k != i.
TermSum t_coefficient(const FrobeniusPoint& fp, int i, int k);

struct LemmaPair {
    BigComplex lhs;
    BigComplex rhs;
};

// The four lattice-sum identities: LHS is the direct sum over l != i, RHS the
// closed polynomial in C_i3..C_i8; `which` selects 1..4.
LemmaPair lemma31_check(const FrobeniusPoint& fp, int i, int which);

struct DecompositionPair {
    TermSum defining;       // P_ij evaluated from its defining monomial list
    TermSum antisymmetrized; // closed decomposition of the form S_ij + Y_ij - Y_ji
};

// Cross-path comparison of P_ij (i != j). The antisymmetrized form negates
// under swapping (i, j) by construction; its agreement with the defining form
// is reported informationally.
DecompositionPair pij_decomposition_check(const FrobeniusPoint& fp, int i, int j);

} // namespace g2an
