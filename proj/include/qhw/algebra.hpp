#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "qhw/field.hpp"
#include "qhw/matrix.hpp"
#include "qhw/quiver.hpp"

namespace qw {

struct RelTerm {
  Scalar coeff;
  Path path;
};

// k-linear combination of parallel paths (all sharing source and target).
struct Relation {
  std::vector<RelTerm> terms;
};

// Element of e_dst · A · e_src: a combination of basis paths src -> dst.
// Terms are sorted by basis index with zero coefficients dropped.
struct AElt {
  int src = -1;
  int dst = -1;
  std::vector<std::pair<int, Scalar>> terms;
  bool is_zero() const { return terms.empty(); }
};

// Finite-dimensional bound quiver algebra kQ/I presented by relations.
//
// The construction finds the least N with (arrow ideal)^N contained in
// I + higher terms by saturating the span of truncated ideal elements
// degree by degree, then takes as basis the paths of length < N that are
// not leading terms of that span.  For admissible I this is exactly kQ/I;
// for non-admissible input it is the documented truncation kQ/(I + J^N).
//
// Conventions: a path [a, b] means "first a, then b" and prints as b*a.
// e_j·A·e_i is spanned by paths i -> j, and P_i = A·e_i has (P_i)_j given by
// those paths, so Hom(A e_i, A e_j) = e_i·A·e_j acting by right multiplication.
class Algebra {
public:
  const Field& field() const { return F_; }
  const Quiver& quiver() const { return Q_; }
  int nilpotency() const { return N_; }
  bool length_graded() const { return graded_; }
  const std::vector<Relation>& relations() const { return rels_; }
  const std::optional<Poset>& declared_order() const { return order_; }
  void set_declared_order(Poset p) { order_ = std::move(p); }

  int dim() const { return static_cast<int>(basis_.size()); }
  const Path& basis_path(int id) const { return basis_[id]; }
  // Basis indices of e_dst · A · e_src (paths src -> dst), ascending.
  const std::vector<int>& basis_at(int src, int dst) const { return by_pair_[src][dst]; }
  int pair_dim(int src, int dst) const { return static_cast<int>(by_pair_[src][dst].size()); }
  int unit_basis_id(int v) const { return unit_ids_[v]; }

  AElt zero(int src, int dst) const { return AElt{src, dst, {}}; }
  AElt unit(int v) const;
  AElt arrow_elt(int a) const;
  AElt from_basis(int id) const;
  AElt normal_form(const Path& p) const;

  AElt add(const AElt& x, const AElt& y) const;
  AElt scale(const Scalar& c, const AElt& x) const;
  // Composition product: x*y = "first y, then x"; needs y.dst == x.src.
  AElt mul(const AElt& x, const AElt& y) const;
  const AElt& mul_basis(int bx, int by) const;  // basis bx after basis by

  std::string to_string(const AElt& x) const;

private:
  friend Algebra build_algebra(const Quiver&, const std::vector<Relation>&, const Field&, int);

  Field F_ = Field::rationals();
  Quiver Q_;
  int N_ = 1;
  bool graded_ = true;
  std::vector<Relation> rels_;
  std::optional<Poset> order_;

  std::vector<Path> basis_;                       // deglex order
  std::vector<std::vector<std::vector<int>>> by_pair_;
  std::vector<int> unit_ids_;
  std::map<std::pair<int, std::vector<int>>, int> basis_lookup_;  // (src, arrows) -> id

  // Reduction data: echelon rows of the truncated ideal over path columns of
  // length 2..N-1, keyed by pivot path.
  std::vector<Path> red_cols_;
  std::map<std::pair<int, std::vector<int>>, int> col_lookup_;
  std::vector<std::vector<Scalar>> red_rows_;
  std::vector<std::size_t> red_pivots_;

  mutable std::map<std::pair<int, int>, AElt> mult_memo_;
};

// Constructs the algebra.  Throws NonAdmissible (relation term of length < 2),
// InconsistentRelation (non-parallel terms), InfiniteDimensional (no
// saturation within max_nilpotency or path blow-up).
Algebra build_algebra(const Quiver& q, const std::vector<Relation>& rels, const Field& F,
                      int max_nilpotency = 64);

// Same vertices, arrows reversed (same names), relation paths reversed,
// declared order carried over.
Algebra opposite_algebra(const Algebra& A);

}  // namespace qw
