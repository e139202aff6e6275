#pragma once

#include <vector>

#include "qhw/rep.hpp"

namespace qw {

// One indecomposable projective summand A e_vertex, with an internal-degree
// shift when the algebra is length-graded and the syzygies stay homogeneous.
struct Summand {
  int vertex = -1;
  int shift = 0;
};

// Map between explicit finite direct sums of projectives, stored by its
// matrix of algebra elements: entries[s][t] lies in e_{w_t} A e_{v_s}
// (w_t = domain summand vertex, v_s = codomain summand vertex), acting by
// right multiplication on the generator of domain summand t.
struct AlgMat {
  std::vector<Summand> dom;  // domain summands
  std::vector<Summand> cod;  // codomain summands
  std::vector<std::vector<AElt>> entries;  // [s over cod][t over dom]
};

AlgMat zero_alg_mat(const Algebra& A, const std::vector<Summand>& dom,
                    const std::vector<Summand>& cod);
// F after G (domains: G.dom -> G.cod == F.dom -> F.cod).
AlgMat compose_mats(const Algebra& A, const AlgMat& F, const AlgMat& G);
bool alg_mat_zero(const AlgMat& m);

// Explicit realization of ⊕ A e_{v_s} as a representation, with a
// deterministic per-vertex basis layout: layout[u] lists (summand s, basis id)
// sorted lexicographically; the Rep coordinate is the list position.
struct ProjTermInfo {
  std::vector<Summand> sums;
  Rep rep;
  std::vector<std::vector<std::pair<int, int>>> layout;
};

ProjTermInfo projective_term(const Algebra& A, const std::vector<Summand>& sums);
ModMap realize(const Algebra& A, const AlgMat& F, const ProjTermInfo& domain,
               const ProjTermInfo& codomain);

// Minimal projective resolution of target, truncated at max_degree:
//   terms[0] <- terms[1] <- ... <- terms[k]   (d[i]: terms[i] -> terms[i-1]).
// `complete` reports whether the final kernel vanished (the resolution ends)
// and `graded` whether summand shifts are valid internal degrees.
struct Resolution {
  const Algebra* A = nullptr;
  Rep target;
  std::vector<ProjTermInfo> terms;
  std::vector<AlgMat> d;  // d[0] is unused
  ModMap aug;
  bool complete = false;
  bool graded = false;
  int max_degree = 0;

  int length() const { return static_cast<int>(terms.size()) - 1; }

  // aug points into this object's own storage, so relocation must re-aim it.
  Resolution() = default;
  Resolution(const Resolution& o) { *this = o; }
  Resolution& operator=(const Resolution& o) {
    if (this == &o) return *this;
    A = o.A;
    target = o.target;
    terms = o.terms;
    d = o.d;
    aug = o.aug;
    complete = o.complete;
    graded = o.graded;
    max_degree = o.max_degree;
    repoint();
    return *this;
  }
  Resolution(Resolution&& o) noexcept { *this = std::move(o); }
  Resolution& operator=(Resolution&& o) noexcept {
    if (this == &o) return *this;
    A = o.A;
    target = std::move(o.target);
    terms = std::move(o.terms);
    d = std::move(o.d);
    aug = std::move(o.aug);
    complete = o.complete;
    graded = o.graded;
    max_degree = o.max_degree;
    repoint();
    return *this;
  }
  void repoint() {
    if (!terms.empty()) {
      aug.src = &terms[0].rep;
      aug.dst = &target;
    }
  }
};

Resolution minimal_resolution(const Algebra& A, const Rep& target, int max_degree = 8);

// Betti-style data: for each degree, the multiset of summand vertices.
std::vector<std::vector<int>> resolution_summand_counts(const Resolution& R);

// dim Ext^n(M, simple_j) equals the multiplicity of j among degree-n summands
// of the minimal resolution of M; used as the independent cross-check of the
// dg-side cohomology.
int ext_dim_via_resolution(const Resolution& R, int degree, int vertex);

}  // namespace qw
