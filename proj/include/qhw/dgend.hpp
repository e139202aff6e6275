#pragma once

#include <map>
#include <memory>
#include <vector>

#include "qhw/resolution.hpp"

namespace qw {

// One basis element ("cell") of the dg endomorphism algebra of a finite
// collection of truncated minimal projective resolutions R_0, ..., R_{B-1}.
//
// A degree-n homogeneous map f: R_b -> R_a is a family of A-linear components
// R_b[k] -> R_a[k-n].  The cell (k, s, t, path) is the component sending the
// generator of summand t of R_b[k] to the algebra basis element `path` placed
// in summand s of R_a[k-n]; `path` lies in e_{w} A e_{v} where v is the
// vertex of the target summand s and w the vertex of the source summand t
// (an A-linear map A e_v <- A e_w is right multiplication by such an element).
struct DgCell {
  int blk_a = 0;  // target block: component maps into R_{blk_a}
  int blk_b = 0;  // source block
  int deg = 0;    // cohomological degree n
  int k = 0;      // source level; the target level is k - n
  int s = 0;      // target summand index in R_{blk_a}[k - n]
  int t = 0;      // source summand index in R_{blk_b}[k]
  int path = 0;   // algebra basis id in e_{w_t} A e_{v_s}
  int internal = 0;  // shift_a(s) + len(path) - shift_b(t); 0 when ungraded
};

// The dg algebra End(R_0 ⊕ ... ⊕ R_{B-1}) with differential
//   δ(f) = d ∘ f − (−1)^{|f|} f ∘ d
// and composition product.  Cohomology in degree n computes Ext^n between the
// resolved modules blockwise; when some resolution is truncated (incomplete),
// only degrees |n| <= trust_bound() agree with the true Ext groups, but the
// complex itself is still an honest dg algebra (so transferred structures
// satisfy their identities exactly at every degree).
class DgEnd {
 public:
  DgEnd(std::shared_ptr<const Algebra> A, std::vector<Resolution> blocks);

  const Algebra& algebra() const { return *A_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const { return A_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const Resolution& block(int b) const { return blocks_.at(b); }
  bool graded() const { return graded_; }
  bool all_complete() const { return all_complete_; }
  // Largest d such that H^d of the truncated complex is guaranteed to be the
  // true Ext^d; effectively unbounded when every block is complete.  For a
  // truncation the junk classes concentrate in degrees <= 0 (the top level of
  // a truncated resolution is no longer exact, and that pollutes exactly the
  // total degrees -T..0 of the endomorphism complex), so degree 0 is only
  // trusted when every block is complete; Hom itself is computed directly
  // from the modules instead.
  int trust_bound() const { return trust_bound_; }
  bool trusted_degree(int deg) const {
    if (all_complete_) return true;
    return deg >= 1 && deg <= trust_bound_;
  }

  int min_deg() const { return lo_; }
  int max_deg() const { return hi_; }
  int dim(int deg) const;
  const std::vector<DgCell>& cells(int deg) const;
  // Index of the cell with the given data in cells(deg), or -1.
  int cell_index(int deg, int blk_a, int blk_b, int k, int s, int t,
                 int path) const;

  // Sparse vector in the cell basis of a single degree.
  struct Vec {
    int deg = 0;
    std::map<int, Scalar> c;  // cell index -> coefficient (nonzero)
    bool is_zero() const { return c.empty(); }
  };
  Vec zero(int deg) const { return Vec{deg, {}}; }
  void add_term(Vec& v, int idx, const Scalar& coeff) const;
  bool vec_equal(const Vec& x, const Vec& y) const;

  Vec delta(const Vec& v) const;
  // Composition product x ∘ y (y applied first); degrees add.
  Vec product(const Vec& x, const Vec& y) const;
  // The identity chain map of block b, a degree-0 cocycle.
  Vec unit_cocycle(int b) const;

  // Dense matrix of δ from degree deg to degree deg + 1.
  const Matrix& delta_matrix(int deg) const;

  Vec from_dense(int deg, const std::vector<Scalar>& coords) const;
  std::vector<Scalar> to_dense(const Vec& v) const;

 private:
  std::shared_ptr<const Algebra> A_;
  std::vector<Resolution> blocks_;
  bool graded_ = false;
  bool all_complete_ = false;
  int trust_bound_ = 0;
  int lo_ = 0, hi_ = 0;
  std::vector<std::vector<DgCell>> cells_;            // by deg - lo_
  std::vector<std::map<std::array<int, 6>, int>> lookup_;
  std::vector<Matrix> delta_;                         // delta_[deg - lo_]
  std::vector<DgCell> none_;

  void build_cells();
  void build_delta();
};

enum class SplitPolicy { Deterministic, DeterministicAlt };

// Hodge-style splitting of the dg endomorphism complex: in each degree d a
// decomposition C^d = B^d ⊕ H^d ⊕ L^d with B = im δ, B ⊕ H = ker δ and
// δ: L^d -> B^{d+1} an isomorphism.  The contraction h is (δ|_L)^{-1} on B
// and zero on H ⊕ L; p projects onto H along B ⊕ L; i includes the chosen
// representatives.  These satisfy the side conditions h²=0, h i = 0, p h = 0
// by construction, and δh + hδ = id − i p.
//
// The identity chain maps are always seeded as the leading degree-0
// representatives, so transferred higher products vanish whenever an identity
// is among the arguments.  The two deterministic policies differ in the order
// in which kernel vectors and complement cells are drafted (ascending versus
// descending cell index), giving genuinely different contractions whose
// transferred structures must agree up to quasi-isomorphism invariants.
class MerkulovSplitting {
 public:
  MerkulovSplitting(std::shared_ptr<const DgEnd> dg,
                    SplitPolicy policy = SplitPolicy::Deterministic);
  // Caller-provided cohomology representatives (cell-coordinate vectors per
  // degree, replacing the deterministic choice in just those degrees); the
  // complement L is drafted ascending.  Throws SplittingInvalid when the data
  // fails to split the complex.
  MerkulovSplitting(
      std::shared_ptr<const DgEnd> dg,
      const std::map<int, std::vector<std::vector<Scalar>>>& provided_reps);

  const DgEnd& dg() const { return *dg_; }
  const std::shared_ptr<const DgEnd>& dg_ptr() const { return dg_; }

  struct HClass {
    int deg = 0;
    int blk_a = 0, blk_b = 0;  // block component (a class of maps R_b -> R_a)
    int internal = 0;          // internal degree; INT_MIN when mixed/ungraded
    bool is_identity = false;  // a seeded identity chain map
    std::vector<Scalar> vec;   // dense cell coordinates in degree deg
  };
  int hdim(int deg) const;
  const std::vector<HClass>& hbasis(int deg) const;

  DgEnd::Vec include(int deg, int idx) const;
  // H-coordinates of the projection p(v), as (index into hbasis(v.deg), coeff).
  std::vector<std::pair<int, Scalar>> project(const DgEnd::Vec& v) const;
  DgEnd::Vec contract(const DgEnd::Vec& v) const;  // h: degree d -> d - 1

  // Re-checks every axiom on the stored data (δ-closedness of representatives,
  // the homotopy identity δh + hδ = id − ip on all cells, h i = 0, p h = 0);
  // throws SplittingInvalid with a description on failure.
  void validate() const;

 private:
  std::shared_ptr<const DgEnd> dg_;
  std::vector<std::vector<HClass>> h_;       // by deg - lo
  std::vector<std::vector<int>> lcells_;     // chosen complement cells, by deg
  std::vector<Matrix> inv_basis_;            // inverse of [B | H | L] per deg
  std::vector<int> bdim_;                    // dim B per degree
  std::vector<Matrix> hmat_;                 // dense matrix of h per degree
  std::vector<std::vector<std::vector<Scalar>>> bbasis_;  // B rows per degree

  void build(SplitPolicy policy,
             const std::map<int, std::vector<std::vector<Scalar>>>* provided);
  void finish_degree(int deg);
  void label_class(HClass& cls) const;
};

}  // namespace qw
