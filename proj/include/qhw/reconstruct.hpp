#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "qhw/ainfinity.hpp"

namespace qw {

// Dual presentation extracted from an A∞-model on any block family:
//   * one vertex per block,
//   * one arrow j -> i per basis class of Ext^1(M_j, M_i) (a degree-1 class
//     of maps R_b -> R_a is such an element with j = b, i = a),
//   * one relation per Ext^2 class xi, with coefficient of the word
//     a(x_n)...a(x_1) given by the xi-component of m_n(x_1, ..., x_n).
// The words are paths in application order (a(x_n) first), so each relation
// is a parallel path combination from block(source) to block(target).
struct ModelPresentation {
  Quiver quiver;
  std::vector<Relation> relations;
  std::vector<int> arrow_gid;  // arrow id -> degree-1 generator id in the model
};

// Throws TruncationTooLow when a contributing product lies outside the
// trusted window or an Ext^2 class yields no relation within the arity bound.
// `max_arity <= 0` defaults from the model's algebra nilpotency.
ModelPresentation model_presentation(const Model& M, int max_arity = 0);

// Koszul-dual reconstruction of a bound quiver algebra from the A∞-structure
// on the Ext-algebra of its simple modules (blocks in vertex order).
struct ReconstructionResult {
  Quiver quiver;
  std::vector<Relation> relations;
  Algebra algebra;
  bool dims_match = false;
  // (i, j, dim e_j A e_i, dim e_j A' e_i) per vertex pair under the identity
  // vertex correspondence.
  std::vector<std::tuple<int, int, int, int>> dim_table;
};

// `original` must be the algebra whose simples were resolved (same instance
// as the model's).  Throws ReconstructionInfinite when the reconstructed
// presentation fails to be finite-dimensional within the nilpotency cap, and
// TruncationTooLow when an untrusted product would contribute.
ReconstructionResult koszul_reconstruct(const Model& M, int max_arity = 0);

}  // namespace qw
