// Decomposition multiplicities for the Morita representative with a basic
// regular exact Borel subalgebra.  For a quasi-hereditary algebra the
// multiplicity of P_i in that representative is
//
//   ℓ_i = 1 + Σ_{k ≤ j < i} ℓ_k · [∇_j : L_k] · dim Hom(Δ_j, Δ_i)
//           − Σ_{j < i} ℓ_j · [Δ_i : L_j],
//
// a recursion over the weight poset (well-defined along any linear
// extension).  ℓ_i = 1 at every minimal weight, and ℓ ≡ 1 exactly when the
// algebra itself already carries a regular exact Borel subalgebra, which
// happens iff rad Δ_i has a ∇-filtration for all i.
#pragma once

#include <vector>

#include "qhw/qh.hpp"

namespace qw {

// Exact evaluation of the recursion.  Throws NotQuasiHereditary if the
// standard system fails the quasi-heredity diagnosis.  The recursion is run
// along two different linear extensions of the poset and the results are
// asserted equal (extension independence); each ℓ_i is asserted positive.
std::vector<long long> conde_multiplicities(const StandardSystem& S);

// Combinatorial specialization driven by a poset alone, under the
// assumptions dim Hom(Δ_x, Δ_w) = 1 iff x ≤ w and all composition/filtration
// multiplicities 1.  The recursion collapses to
//   ℓ_x = 1 + Σ_{v < w < x} ℓ_v   (sum over strict chains v < w < x).
std::vector<long long> conde_poset(const Poset& poset);

// Bruhat order of the dihedral group combinatorics: one minimal element at
// height 0, two elements per height 1..H-1, one top element at height H,
// with x < y iff height(x) < height(y).  Elements are indexed by increasing
// height.  ℓ is 3^{height-1} at every non-minimal element.
Poset dihedral_poset(int height);

// True iff rad Δ_i has a ∇-filtration for every i, tested as a Δ-filtration
// of the dual module over the opposite algebra.  Throws NotQuasiHereditary.
bool conde_criterion(const StandardSystem& S);

}  // namespace qw
