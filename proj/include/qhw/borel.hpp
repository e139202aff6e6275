// Exact Borel subalgebras through A∞-Koszul duality on standard modules.
//
// Given a quasi-hereditary structure and the transferred A∞-structure on
// Ext*(⊕Δ, ⊕Δ), three stages are computed:
//
//   1. borel_data:  the directed algebra B presented by the dual of the
//      products on Ext^1(Δ,Δ) (one arrow j -> i per basis class of
//      Ext^1(Δ_j, Δ_i), relations dual to the m_n into Ext^2), the free
//      B-bimodule V̄ on the dual basis ĝ of rad Hom(Δ,Δ), and the degree-+1
//      differential pair
//         ∂₀ : B -> V̄        from m_n with exactly one Hom argument,
//         ∂₁ : V̄ -> V̄⊗_B V̄   from m_n with exactly two Hom arguments,
//      dualized with reversed tensor factors and no extra sign, extended as
//      a derivation with Koszul signs.  ∂₀ must kill the relations of B and
//      the extension must square to zero; both are verified exactly.
//
//   2. roiter_coring:  V = B ⊕ V̄ with the left action twisted by ∂₀,
//      ω = (1,0), ε the projection to B, and
//         μ(ω) = ω⊗ω,   μ(0,u) = ∂₁(u) + u⊗ω + ω⊗u,
//      extended left-linearly.  Right-linearity, coassociativity, the
//      counit laws and group-likeness of ω are verified exactly; any
//      failure signals a sign-convention fault and throws NotADifferential.
//
//   3. right_algebra:  R = Hom_B(V, B) (left-linear maps) with the
//      convolution opposite to Hom(μ, B), unit ε, and the embedding
//      ι(b) = ε(b·−).  The report certifies dim(R ⊗_B L_i) against the
//      expected standard dimensions, projectivity of R as a right
//      B-module, and the count of primitive orthogonal idempotents via the
//      semisimple quotient R/J.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhw/ainfinity.hpp"
#include "qhw/qh.hpp"

namespace qw {

// Basis class of rad Hom(Δ_b, Δ_a): a degree-0 non-identity model class.
struct BorelGenerator {
  int gid = -1;  // model class id
  int a = -1;    // target weight (left vertex of the dual generator ĝ)
  int b = -1;    // source weight (right vertex of ĝ)
  std::string label;
};

// Basis element p·ĝ·q of V̄ = ⊕_g B e_{a_g} ⊗ e_{b_g} B: `p` is a basis path
// of B starting at a_g and `q` one ending at b_g (both Borel basis ids).
struct VbarBasisElt {
  int gen = -1;
  int p = -1;
  int q = -1;
};

// Left part p·ĝ of a basis element; tensors over B are written with all
// right-hand factors slid across ⊗_B, so a canonical n-tensor key is
// (n-1) token ids followed by one V̄ basis id.
struct VbarToken {
  int gen = -1;
  int p = -1;
};

using VbarVec = std::vector<std::pair<int, Scalar>>;  // sparse V̄ coordinates
using TensorKey = std::vector<int>;                   // tokens..., vbar id
using Tensor = std::map<TensorKey, Scalar>;           // canonical V̄^{⊗n} element

struct BorelData {
  Poset poset;
  std::vector<std::string> weights;  // vertex names, shared with the original

  Algebra borel;               // B, directed (arrows go upward in the poset)
  std::vector<int> arrow_gid;  // B arrow id -> degree-1 model class id

  std::vector<BorelGenerator> gens;  // rad Hom(Δ,Δ) basis
  std::vector<VbarBasisElt> vbar;    // V̄ basis
  std::vector<VbarToken> tokens;
  std::map<std::tuple<int, int, int>, int> vbar_idx;  // (gen,p,q) -> id
  std::map<std::pair<int, int>, int> token_idx;       // (gen,p) -> id

  std::vector<VbarVec> d0;  // ∂₀ per B basis element
  std::vector<Tensor> d1;   // ∂ per V̄ basis element (canonical 2-tensor)

  bool d0_well_defined = false;  // ∂₀ annihilates every relation of B
  bool d_squared_zero = false;   // ∂² = 0 on B, on V̄, and on V̄⊗V̄ basis keys

  // Carried over for the right-algebra report.
  std::vector<long long> ell;                  // Conde multiplicities
  std::vector<std::vector<int>> delta_comp;    // [Δ_i : L_j]

  int vbar_id(int gen, int p, int q) const;    // -1 when not a basis triple
  int token_id(int gen, int p) const;
};

// The model must live on the standard modules of `S` in vertex order
// (degree-0 blocks included).  Throws NotQuasiHereditary when the diagnosis
// fails, TruncationTooLow when an untrusted product would contribute, and
// MismatchedAlgebra when the model blocks do not match the system.
// `max_arity <= 0` uses the model's arity bound.
BorelData borel_data(const StandardSystem& S, const Model& M, int max_arity = 0);

struct CoringData {
  BorelData base;

  // V = B ⊕ V̄: basis ids 0..dim B-1 are the B part, dim B + k is vbar[k].
  int dim_v = 0;
  // V ⊗_B V basis: (token id or -1 for ω, V basis id), deterministic order.
  std::vector<std::pair<int, int>> vv_keys;
  std::map<std::pair<int, int>, int> vv_idx;
  std::vector<std::vector<std::pair<int, Scalar>>> mu;  // per V basis id

  bool group_like = false;
  bool counital = false;
  bool coassociative = false;
  bool right_linear = false;
};

// Throws NotADifferential when ∂ fails its exactness checks or any coring
// axiom fails.
CoringData roiter_coring(const BorelData& B);

struct RightAlgebraData {
  CoringData coring;

  int dim_r = 0;
  int dim_b = 0;  // ι(B) spans basis ids 0..dim_b-1
  // Structure constants: mult[i][j] = coordinates of basis_i · basis_j.
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> mult;
  std::vector<std::pair<int, Scalar>> unit;  // ε

  bool associative = false;
  bool unit_ok = false;
  bool iota_homomorphism = false;  // ι(x)·ι(y) = ι(x·y)

  std::vector<int> induced_dims;           // dim(R ⊗_B L_i)
  std::vector<long long> induced_expected; // Σ_j ℓ_j [Δ_i : L_j]
  bool induced_match = false;

  bool right_projective = false;
  std::vector<int> summand_vertices;  // cover layout of R over B^op

  int radical_dim = -1;       // dim J(R) via the regular trace form
  bool radical_exact = false; // true over characteristic 0 only
  std::vector<int> top_dims;  // n_i = dim (R⊗L_i) / J(R⊗L_i)
  bool semisimple_certified = false;  // R/J ≅ ⊕ Mat(n_i) proven exactly
  long long primitive_idempotents = -1;  // Σ n_i (valid when certified)
};

// Throws UnitFailure when ε is not a two-sided unit for the convolution.
RightAlgebraData right_algebra(const CoringData& C);

}  // namespace qw
