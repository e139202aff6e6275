#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "qhw/dgend.hpp"

namespace qw {

// Minimal A∞-model on the cohomology of a dg endomorphism algebra, obtained
// by homotopy transfer through a chosen splitting (Merkulov's recursion):
//
//   hλ(x)            = i(x)                       for a single argument,
//   λ(x_1,...,x_n)   = Σ_{r=1}^{n-1} (−1)^{r−1} (−1)^{(1−s)(|x_1|+...+|x_r|)}
//                        hλ(x_1..x_r) ∘ hλ(x_{r+1}..x_n),   s = n − r,
//   hλ(x_1,...,x_n)  = h(λ(x_1,...,x_n)),
//   m_n              = p ∘ λ_n   (n ≥ 2),   m_1 = 0 on cohomology.
//
// Values are exact for the (possibly truncated) dg algebra, so the Stasheff
// identities hold on the nose everywhere; `trusted_tuple` flags the tuples
// whose value moreover agrees with the true Ext-algebra A∞-structure.
class Model {
 public:
  Model(std::shared_ptr<const DgEnd> dg,
        std::shared_ptr<const MerkulovSplitting> split, int arity_bound);

  const DgEnd& dg() const { return *dg_; }
  const MerkulovSplitting& splitting() const { return *split_; }
  int arity_bound() const { return arity_bound_; }

  struct HInfo {
    int deg = 0;
    int idx = 0;  // index within hbasis(deg)
    int blk_a = 0, blk_b = 0;
    int internal = 0;
    bool is_identity = false;
  };
  int hcount() const { return static_cast<int>(infos_.size()); }
  const HInfo& info(int gid) const { return infos_.at(gid); }
  int hindex(int deg, int idx) const;  // global id
  const std::vector<int>& hids(int deg) const;
  std::string hlabel(int gid) const;

  // Sparse value of m_n on a tuple of global H ids (coefficients over global
  // H ids of the output degree).  Zero when the blocks do not chain.
  using HValue = std::vector<std::pair<int, Scalar>>;
  const HValue& m(const std::vector<int>& tuple) const;

  bool trusted_tuple(const std::vector<int>& tuple) const;

  // Test hook: additively corrupt the stored value of m at `tuple`.
  void corrupt_m(const std::vector<int>& tuple, const HValue& delta) const;

 private:
  std::shared_ptr<const DgEnd> dg_;
  std::shared_ptr<const MerkulovSplitting> split_;
  int arity_bound_ = 8;
  std::vector<HInfo> infos_;
  std::vector<std::vector<int>> by_degree_;  // deg - lo -> gids
  mutable std::map<std::vector<int>, DgEnd::Vec> hl_memo_;
  mutable std::map<std::vector<int>, HValue> m_memo_;

  DgEnd::Vec hl(const std::vector<int>& tuple) const;
  DgEnd::Vec lambda(const std::vector<int>& tuple) const;
  bool chained(const std::vector<int>& tuple) const;
};

// Everything needed to work with one transferred structure, with shared
// ownership so the pieces keep each other alive.
struct ModelBundle {
  std::shared_ptr<const Algebra> A;
  std::shared_ptr<const DgEnd> dg;
  std::shared_ptr<const MerkulovSplitting> splitting;
  std::shared_ptr<Model> model;
};

// Resolve the given modules to max_degree and transfer; arity_bound <= 0
// picks min(nilpotency + 1, 8).
ModelBundle build_model(std::shared_ptr<const Algebra> A,
                        const std::vector<Rep>& modules, int max_degree = 8,
                        SplitPolicy policy = SplitPolicy::Deterministic,
                        int arity_bound = 0);
// The blocks are the simple modules in vertex order.
ModelBundle build_simples_model(std::shared_ptr<const Algebra> A,
                                int max_degree = 8,
                                SplitPolicy policy = SplitPolicy::Deterministic,
                                int arity_bound = 0);

// Ext-dimension table read off the splitting: dims[deg][a][b] counts classes
// of maps R_b -> R_a, i.e. dim Ext^deg(M_b, M_a), for trusted degrees only.
struct ExtTable {
  int max_degree = 0;
  bool complete = false;
  std::vector<std::vector<std::vector<int>>> dims;
};
ExtTable ext_table(const MerkulovSplitting& S, int max_degree_req);

// Exhaustive Stasheff-identity audit over block-chained tuples of cohomology
// classes up to the given arity:
//   Σ_{r+s+t=n} (−1)^{r+st} m_{r+1+t}(x_1..x_r, m_s(x_{r+1}..x_{r+s}), ..) = 0
// with the Koszul evaluation sign (−1)^{s(|x_1|+...+|x_r|)}.
struct StasheffReport {
  bool ok = true;
  long long tuples_checked = 0;
  long long branches_pruned_untrusted = 0;
  std::vector<std::string> violations;  // capped descriptions
};
StasheffReport check_stasheff(const Model& M, int max_arity);

// Does degree 1 (optionally together with degree 0) generate Ext^{>=1} under
// all higher products?  Coverage is reported per trusted degree >= 2.
struct GenerationReport {
  bool generated = true;
  std::vector<std::tuple<int, int, int>> coverage;  // (deg, dim generated, dim H)
  std::vector<std::string> uncovered;               // labels of missed classes
};
GenerationReport check_degree_one_generation(const Model& M, int max_arity,
                                             bool include_degree_zero = false);

// Koszulity probe: over a length-graded algebra, all m_n with n != 2 must
// vanish on tuples of degree-1 classes; with `check_everywhere`, m_n for
// n >= 3 must vanish on every tuple (the hereditary expectation).  Throws
// NoInternalGrading when the dg algebra carries no internal grading.
struct QuadraticReport {
  bool quadratic = true;
  bool all_higher_vanish = true;
  std::vector<std::string> witnesses;
};
QuadraticReport quadratic_vanishing_check(const Model& M, int max_arity,
                                          bool check_everywhere);

// Maurer–Cartan flatness audit for a filtration-shaped twist: `type[a]` names
// the block of slot a, and each strictly upper entry (a, b) carries a
// degree-1 class of block (type[a], type[b]).  The obstruction at (a, b) is
//   O_{ab} = Σ_{t>=2} (−1)^{t(t−1)/2} Σ_{a=c_0<c_1<...<c_t=b}
//              m_t(x_{c_0 c_1}, ..., x_{c_{t-1} c_t}),
// and the twist is flat when every obstruction vanishes.
struct MCInput {
  std::vector<int> type;
  std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> entries;
};
struct MCReport {
  bool flat = true;
  std::vector<std::tuple<int, int, std::string>> obstructions;
};
MCReport maurer_cartan_check(const Model& M, const MCInput& in);

// The class in Ext^1(target(blk_quot), target(blk_sub)) of a short exact
// sequence 0 -> target(blk_sub) -> E -> target(blk_quot) -> 0, expressed in
// the model's degree-1 basis of block (blk_sub, blk_quot): pairs
// (index into hbasis(1), coefficient).
std::vector<std::pair<int, Scalar>> extension_class(const Model& M, int blk_sub,
                                                    int blk_quot, const Rep& E,
                                                    const ModMap& incl,
                                                    const ModMap& proj);

}  // namespace qw
