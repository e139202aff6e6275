#pragma once

#include <string>
#include <vector>

#include "qhw/algebra.hpp"

namespace qw {

// Finite-dimensional left module over a bound quiver algebra, given as a
// representation: one vector space per vertex and one matrix per arrow
// (arrow a: i -> j acts by a matrix dims[j] x dims[i]).
struct Rep {
  const Algebra* A = nullptr;
  std::vector<int> dims;
  std::vector<Matrix> act;  // indexed by arrow

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  // Action matrix of a path / algebra element from vertex block src to dst.
  Matrix path_action(const Path& p) const;
  Matrix elt_action(const AElt& x) const;

  // All relations must annihilate; throws InconsistentRelation otherwise.
  void validate() const;
};

struct NamedRep {
  std::string name;
  Rep rep;
};

// Module map f: src -> dst given by one matrix per vertex.
struct ModMap {
  const Rep* src = nullptr;
  const Rep* dst = nullptr;
  std::vector<Matrix> f;

  bool is_zero() const;
};

Rep zero_rep(const Algebra& A);
Rep simple_rep(const Algebra& A, int v);
Rep projective_rep(const Algebra& A, int v);  // A e_v; basis = basis paths from v
Rep direct_sum(const Algebra& A, const std::vector<const Rep*>& parts);

ModMap compose(const ModMap& g, const ModMap& f);  // g after f
ModMap map_add(const ModMap& a, const ModMap& b);
ModMap map_scale(const Scalar& c, const ModMap& m);
bool map_equal(const ModMap& a, const ModMap& b);

// Morphism space basis, deterministic (kernel of the intertwining system in
// vertex-major, row-major coordinate order).
std::vector<ModMap> hom_basis(const Rep& M, const Rep& N);
int hom_dim(const Rep& M, const Rep& N);

// Substructures.  Each returns the subquotient together with the witnessing
// map; bases are RREF-canonical so results are deterministic.
struct SubWithMap {
  Rep rep;
  ModMap map;  // inclusion (kernel/image/radical) or projection (cokernel/top)
};

SubWithMap kernel(const ModMap& f);     // map: kernel -> src
SubWithMap image(const ModMap& f);      // map: image -> dst
SubWithMap cokernel(const ModMap& f);   // map: dst -> cokernel
SubWithMap radical(const Rep& M);       // map: rad M -> M
SubWithMap top(const Rep& M);           // map: M -> M/rad M

// Quotient of M by the submodule generated by the given vectors (per-vertex
// column lists); returns projection M -> Q.
SubWithMap quotient_by_generated(const Rep& M, const std::vector<Matrix>& gens);

// Trace of X in M: the submodule generated by images of all maps X -> M.
SubWithMap trace_submodule(const Rep& X, const Rep& M);

// Standard dual: left module over the opposite algebra (same vertex spaces,
// transposed actions).  Aop must be opposite-compatible with M.A.
Rep dualize(const Rep& M, const Algebra& Aop);

// Minimal projective cover P -> M (P described by its summand vertices).
struct ProjCover {
  std::vector<int> summand_vertices;
  Rep proj;    // the projective module ⊕ A e_v
  ModMap map;  // surjection onto M
  // Per-vertex basis layout of proj: bases.at(u) lists (summand, basis path id).
  std::vector<std::vector<std::pair<int, int>>> layout;
};
ProjCover minimal_cover(const Rep& M);

// dim Ext^1(M, N) from the minimal presentation of M (no second syzygy
// needed: Ext^1(M,N) = coker(Hom(P0,N) -> Hom(ΩM,N))).
int ext1_dim(const Rep& M, const Rep& N);

}  // namespace qw
