// Quasi-hereditary structure analysis: standard and costandard modules,
// quasi-heredity diagnosis, Δ-filtration certificates, the essential order
// (computed two independent ways), and enumeration of all quasi-hereditary
// structures on a small algebra.
//
// Conventions.  Weights are the quiver vertices with a strict partial order
// (Poset).  The standard module Δ_i is the maximal quotient of P_i whose
// composition factors L_j all satisfy j ≤ i: concretely P_i divided by the
// trace of ⊕_{j ≰ i} P_j.  Costandard modules are computed on the opposite
// algebra and dualized back, so only one code path exists for the quotient
// construction.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhw/rep.hpp"

namespace qw {

struct StandardSystem {
  const Algebra* A = nullptr;
  Poset poset;
  std::vector<Rep> delta;  // Δ_i, one per vertex
  std::vector<Rep> nabla;  // ∇_i, one per vertex
  // Kernel of P_i -> Δ_i (the trace submodule), RREF-canonical per vertex;
  // two orders define the same quasi-hereditary structure iff these agree.
  std::vector<std::vector<Matrix>> delta_kernel;

  // Tables indexed [i][j]:
  std::vector<std::vector<int>> hom_dd;      // dim Hom(Δ_i, Δ_j)
  std::vector<std::vector<int>> ext_dd;      // dim Ext¹(Δ_i, Δ_j)
  std::vector<std::vector<int>> delta_comp;  // [Δ_i : L_j]
  std::vector<std::vector<int>> nabla_comp;  // [∇_i : L_j]
  std::vector<std::vector<int>> p_delta;     // (P_i : Δ_j) = dim Hom(P_i, ∇_j)
};

StandardSystem standard_modules(const Algebra& A, const Poset& poset);

// One stage of a Δ-filtration certificate.  Stage j refers to the module
// M_j (M_0 = the filtered module, M_{j+1} = stage j's `next`): `onto_delta`
// is a surjection M_j ->> Δ_{vertex} and `incl_next` embeds M_{j+1} as its
// kernel, so M_j / M_{j+1} ≅ Δ_{vertex}.  Factors are listed top quotient
// first.
struct FiltrationStage {
  int vertex = -1;
  Rep next;
  std::vector<Matrix> onto_delta;  // per vertex, dim Δ_v[u] x dim M_j[u]
  std::vector<Matrix> incl_next;   // per vertex, dim M_j[u] x dim next[u]
};

struct DeltaFiltration {
  bool ok = false;
  std::vector<FiltrationStage> stages;
  // On failure: the stage index reached and the dimension vector of the
  // submodule admitting no standard quotient.
  int failed_stage = -1;
  std::vector<int> failed_dims;

  std::vector<int> factor_counts(int nvertices) const;
};

// Greedy top-down construction with backtracking over the candidate top
// factors.  Throws NotFiltered when `must_succeed`, otherwise reports the
// failure witness in the result.
DeltaFiltration delta_filtration(const StandardSystem& S, const Rep& M,
                                 bool must_succeed = false);

// Independent re-verification of a certificate against A and S (used by the
// test suites; recomputes surjectivity, kernel equality, and factor dims).
bool verify_filtration(const StandardSystem& S, const Rep& M,
                       const DeltaFiltration& F);

struct QhDiagnosis {
  bool qh = false;
  std::vector<int> end_dims;     // dim End(Δ_i)
  std::vector<int> top_mult;     // [Δ_i : L_i]
  bool ext_vanishing = true;     // Ext¹(P_i, ∇_j) = 0 for all i, j
  bool regular_filtered = true;  // every P_i has a Δ-filtration
  bool counts_consistent = true; // filtration counts match dim Hom(P_i, ∇_j)
  std::vector<std::string> failures;
};

QhDiagnosis is_quasi_hereditary(const StandardSystem& S);

// The essential order: the coarsest partial order on the weights defining
// the same standard modules.  Generated either from the multiplicity tables
//   i < j  when  [Δ_j : L_i] ≠ 0  or  (P_i : Δ_j) ≠ 0   (i ≠ j)
// or from the homological pairs
//   i < j  when  Hom(Δ_i, Δ_j) ≠ 0  or  Ext¹(Δ_i, Δ_j) ≠ 0   (i ≠ j).
// Both transitive closures are returned; they must coincide.
struct EssentialOrder {
  Poset from_multiplicities;
  Poset from_hom_ext;
  bool agree = false;
};

// Throws NotQuasiHereditary if the system fails is_quasi_hereditary.
EssentialOrder essential_order(const StandardSystem& S);

// All quasi-hereditary structures (up to equal standard systems) obtained
// from total orders on the vertices.  Throws TooManyVertices above the cap.
struct QhStructure {
  Poset order;  // one total order producing the structure
  StandardSystem system;
};
std::vector<QhStructure> enumerate_qh_structures(const Algebra& A,
                                                 int max_vertices = 7);

}  // namespace qw
