#include "qhw/dgend.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "qhw/common.hpp"

namespace qw {

DgEnd::DgEnd(std::shared_ptr<const Algebra> A, std::vector<Resolution> blocks)
    : A_(std::move(A)), blocks_(std::move(blocks)) {
  require(A_ != nullptr, "MismatchedAlgebra", "dg End needs an algebra");
  require(!blocks_.empty(), "MismatchedAlgebra", "dg End needs at least one block");
  for (auto& R : blocks_) {
    require(R.A == A_.get(), "MismatchedAlgebra",
            "all resolutions must live over the same algebra instance");
    R.repoint();
  }
  graded_ = true;
  all_complete_ = true;
  trust_bound_ = INT_MAX / 2;
  int maxlen = 0;
  for (const auto& R : blocks_) {
    graded_ = graded_ && R.graded;
    if (!R.complete) {
      all_complete_ = false;
      trust_bound_ = std::min(trust_bound_, R.max_degree - 1);
    }
    maxlen = std::max(maxlen, R.length());
  }
  lo_ = -maxlen;
  hi_ = maxlen;
  build_cells();
  build_delta();
}

void DgEnd::build_cells() {
  cells_.assign(hi_ - lo_ + 1, {});
  lookup_.assign(hi_ - lo_ + 1, {});
  const int nb = block_count();
  for (int n = lo_; n <= hi_; ++n) {
    auto& out = cells_[n - lo_];
    auto& look = lookup_[n - lo_];
    for (int a = 0; a < nb; ++a) {
      const Resolution& Ra = blocks_[a];
      for (int b = 0; b < nb; ++b) {
        const Resolution& Rb = blocks_[b];
        const int klo = std::max(0, n);
        const int khi = std::min(Rb.length(), Ra.length() + n);
        for (int k = klo; k <= khi; ++k) {
          const auto& tgt = Ra.terms[k - n].sums;
          const auto& src = Rb.terms[k].sums;
          for (int s = 0; s < static_cast<int>(tgt.size()); ++s) {
            for (int t = 0; t < static_cast<int>(src.size()); ++t) {
              for (int pid : A_->basis_at(tgt[s].vertex, src[t].vertex)) {
                DgCell c;
                c.blk_a = a;
                c.blk_b = b;
                c.deg = n;
                c.k = k;
                c.s = s;
                c.t = t;
                c.path = pid;
                c.internal =
                    graded_ ? tgt[s].shift +
                                  static_cast<int>(A_->basis_path(pid).length()) -
                                  src[t].shift
                            : 0;
                look[{a, b, k, s, t, pid}] = static_cast<int>(out.size());
                out.push_back(c);
              }
            }
          }
        }
      }
    }
  }
}

int DgEnd::dim(int deg) const {
  if (deg < lo_ || deg > hi_) return 0;
  return static_cast<int>(cells_[deg - lo_].size());
}

const std::vector<DgCell>& DgEnd::cells(int deg) const {
  if (deg < lo_ || deg > hi_) return none_;
  return cells_[deg - lo_];
}

int DgEnd::cell_index(int deg, int blk_a, int blk_b, int k, int s, int t,
                      int path) const {
  if (deg < lo_ || deg > hi_) return -1;
  const auto& look = lookup_[deg - lo_];
  auto it = look.find({blk_a, blk_b, k, s, t, path});
  return it == look.end() ? -1 : it->second;
}

void DgEnd::add_term(Vec& v, int idx, const Scalar& coeff) const {
  if (A_->field().is_zero(coeff)) return;
  auto it = v.c.find(idx);
  if (it == v.c.end()) {
    v.c.emplace(idx, A_->field().reduce(coeff));
  } else {
    it->second = A_->field().add(it->second, coeff);
    if (A_->field().is_zero(it->second)) v.c.erase(it);
  }
}

bool DgEnd::vec_equal(const Vec& x, const Vec& y) const {
  return x.deg == y.deg && x.c == y.c;
}

void DgEnd::build_delta() {
  const Field& F = A_->field();
  delta_.clear();
  delta_.reserve(hi_ - lo_ + 1);
  for (int n = lo_; n <= hi_; ++n) {
    const auto& cs = cells_[n - lo_];
    Matrix D(F, dim(n + 1), dim(n));
    for (int j = 0; j < static_cast<int>(cs.size()); ++j) {
      const DgCell& c = cs[j];
      const Resolution& Ra = blocks_[c.blk_a];
      const Resolution& Rb = blocks_[c.blk_b];
      const AElt cell_elt = A_->from_basis(c.path);
      // d ∘ f: post-compose with the target-block differential.
      const int m = c.k - n;
      if (m >= 1) {
        const AlgMat& Dm = Ra.d[m];
        for (int s2 = 0; s2 < static_cast<int>(Dm.cod.size()); ++s2) {
          AElt e = A_->mul(cell_elt, Dm.entries[s2][c.s]);
          for (const auto& [bid, coeff] : e.terms) {
            int idx = cell_index(n + 1, c.blk_a, c.blk_b, c.k, s2, c.t, bid);
            require(idx >= 0, "SplittingInvalid", "differential left the cell basis");
            D.set(idx, j, F.add(D.at(idx, j), coeff));
          }
        }
      }
      // − (−1)^n f ∘ d: pre-compose with the source-block differential.
      if (c.k + 1 <= Rb.length()) {
        const AlgMat& Dk = Rb.d[c.k + 1];
        const Scalar sign = (n % 2 == 0) ? Scalar(-1) : Scalar(1);
        for (int t2 = 0; t2 < static_cast<int>(Dk.dom.size()); ++t2) {
          AElt e = A_->mul(Dk.entries[c.t][t2], cell_elt);
          for (const auto& [bid, coeff] : e.terms) {
            int idx = cell_index(n + 1, c.blk_a, c.blk_b, c.k + 1, c.s, t2, bid);
            require(idx >= 0, "SplittingInvalid", "differential left the cell basis");
            D.set(idx, j, F.add(D.at(idx, j), F.mul(sign, coeff)));
          }
        }
      }
    }
    delta_.push_back(std::move(D));
  }
}

const Matrix& DgEnd::delta_matrix(int deg) const {
  require(deg >= lo_ && deg <= hi_, "SplittingInvalid",
          "differential requested outside the enumerated window");
  return delta_[deg - lo_];
}

DgEnd::Vec DgEnd::delta(const Vec& v) const {
  Vec out = zero(v.deg + 1);
  if (v.deg < lo_ || v.deg > hi_) return out;
  const Matrix& D = delta_[v.deg - lo_];
  const Field& F = A_->field();
  for (const auto& [j, coeff] : v.c) {
    for (std::size_t i = 0; i < D.rows(); ++i) {
      if (!F.is_zero(D.at(i, j))) add_term(out, static_cast<int>(i), F.mul(D.at(i, j), coeff));
    }
  }
  return out;
}

DgEnd::Vec DgEnd::product(const Vec& x, const Vec& y) const {
  Vec out = zero(x.deg + y.deg);
  const auto& cx_all = cells(x.deg);
  const auto& cy_all = cells(y.deg);
  const Field& F = A_->field();
  for (const auto& [ix, cxc] : x.c) {
    const DgCell& cx = cx_all[ix];
    for (const auto& [iy, cyc] : y.c) {
      const DgCell& cy = cy_all[iy];
      // x ∘ y: y is applied first, so y's target block/level/summand must
      // match x's source block/level/summand.
      if (cx.blk_b != cy.blk_a) continue;
      if (cx.k != cy.k - cy.deg) continue;
      if (cx.t != cy.s) continue;
      const AElt& prod = A_->mul_basis(cy.path, cx.path);
      if (prod.is_zero()) continue;
      const Scalar cc = F.mul(cxc, cyc);
      for (const auto& [bid, coeff] : prod.terms) {
        int idx = cell_index(out.deg, cx.blk_a, cy.blk_b, cy.k, cx.s, cy.t, bid);
        require(idx >= 0, "SplittingInvalid", "product left the cell basis");
        add_term(out, idx, F.mul(cc, coeff));
      }
    }
  }
  return out;
}

DgEnd::Vec DgEnd::unit_cocycle(int b) const {
  Vec out = zero(0);
  const Resolution& R = blocks_.at(b);
  for (int k = 0; k <= R.length(); ++k) {
    const auto& sums = R.terms[k].sums;
    for (int s = 0; s < static_cast<int>(sums.size()); ++s) {
      int pid = A_->unit_basis_id(sums[s].vertex);
      int idx = cell_index(0, b, b, k, s, s, pid);
      require(idx >= 0, "SplittingInvalid", "identity cell missing");
      add_term(out, idx, Scalar(1));
    }
  }
  return out;
}

DgEnd::Vec DgEnd::from_dense(int deg, const std::vector<Scalar>& coords) const {
  Vec out = zero(deg);
  require(static_cast<int>(coords.size()) == dim(deg), "SplittingInvalid",
          "coordinate vector has the wrong length");
  for (int i = 0; i < static_cast<int>(coords.size()); ++i) {
    add_term(out, i, coords[i]);
  }
  return out;
}

std::vector<Scalar> DgEnd::to_dense(const Vec& v) const {
  std::vector<Scalar> out(dim(v.deg), Scalar(0));
  for (const auto& [i, coeff] : v.c) out[i] = coeff;
  return out;
}

// ---------------------------------------------------------------------------
// Splitting

MerkulovSplitting::MerkulovSplitting(std::shared_ptr<const DgEnd> dg,
                                     SplitPolicy policy)
    : dg_(std::move(dg)) {
  build(policy, nullptr);
}

MerkulovSplitting::MerkulovSplitting(
    std::shared_ptr<const DgEnd> dg,
    const std::map<int, std::vector<std::vector<Scalar>>>& provided_reps)
    : dg_(std::move(dg)) {
  build(SplitPolicy::Deterministic, &provided_reps);
}

void MerkulovSplitting::label_class(HClass& cls) const {
  const auto& cs = dg_->cells(cls.deg);
  const Field& F = dg_->algebra().field();
  int ba = -1, bb = -1, internal = INT_MIN;
  bool mixed_block = false, mixed_internal = false, first = true;
  for (std::size_t i = 0; i < cls.vec.size(); ++i) {
    if (F.is_zero(cls.vec[i])) continue;
    const DgCell& c = cs[i];
    if (first) {
      ba = c.blk_a;
      bb = c.blk_b;
      internal = c.internal;
      first = false;
    } else {
      if (c.blk_a != ba || c.blk_b != bb) mixed_block = true;
      if (c.internal != internal) mixed_internal = true;
    }
  }
  require(!first, "SplittingInvalid", "zero cohomology representative");
  require(!mixed_block, "SplittingInvalid",
          "cohomology representative mixes block components");
  cls.blk_a = ba;
  cls.blk_b = bb;
  cls.internal = (dg_->graded() && !mixed_internal) ? internal : INT_MIN;
}

void MerkulovSplitting::build(
    SplitPolicy policy,
    const std::map<int, std::vector<std::vector<Scalar>>>* provided) {
  const DgEnd& D = *dg_;
  const Field& F = D.algebra().field();
  const int lo = D.min_deg(), hi = D.max_deg();
  const int nd = hi - lo + 1;
  h_.assign(nd, {});
  lcells_.assign(nd, {});
  inv_basis_.assign(nd, Matrix());
  bdim_.assign(nd, 0);
  hmat_.assign(nd, Matrix());
  bbasis_.assign(nd, {});

  for (int deg = lo; deg <= hi; ++deg) {
    const int n = D.dim(deg);
    if (n == 0) continue;
    // B = image of δ from the previous degree, in canonical echelon form.
    EchelonSpan bspan(F, n);
    if (deg - 1 >= lo) {
      const Matrix& Dprev = D.delta_matrix(deg - 1);
      for (std::size_t j = 0; j < Dprev.cols(); ++j) bspan.insert(Dprev.column(j));
    }
    bdim_[deg - lo] = static_cast<int>(bspan.size());
    bbasis_[deg - lo] = bspan.rows();

    // Z = kernel of δ at this degree.
    const Matrix& Dd = D.delta_matrix(deg);
    Matrix ker = Dd.kernel_basis();
    const int zdim = static_cast<int>(ker.cols());

    // H representatives: extend B to Z.  Identity chain maps are seeded
    // first in degree 0 (kept verbatim); the rest are the insertion-order
    // residues of the canonical kernel basis.
    EchelonSpan span(F, n);
    for (const auto& r : bspan.rows()) span.insert(r);
    auto& hs = h_[deg - lo];
    const bool deg_provided =
        provided != nullptr && provided->find(deg) != provided->end();
    if (deg == 0 && !deg_provided) {
      for (int b = 0; b < D.block_count(); ++b) {
        DgEnd::Vec u = D.unit_cocycle(b);
        if (u.is_zero()) continue;
        std::vector<Scalar> uv = D.to_dense(u);
        std::vector<Scalar> res = span.residue(uv);
        bool nonzero = false;
        for (const auto& x : res) {
          if (!F.is_zero(x)) {
            nonzero = true;
            break;
          }
        }
        require(nonzero, "SplittingInvalid",
                "identity chain map became a boundary");
        HClass cls;
        cls.deg = deg;
        cls.is_identity = true;
        cls.vec = uv;  // stored verbatim, not reduced
        label_class(cls);
        hs.push_back(std::move(cls));
        span.insert(uv);
      }
    }
    if (deg_provided) {
      auto it = provided->find(deg);
      {
        for (const auto& v : it->second) {
          require(static_cast<int>(v.size()) == n, "SplittingInvalid",
                  "provided representative has the wrong length");
          // Must be a cocycle...
          std::vector<Scalar> dv = Dd.apply(v);
          for (const auto& x : dv) {
            require(F.is_zero(x), "SplittingInvalid",
                    "provided representative is not a cocycle");
          }
          // ... independent modulo boundaries and earlier choices.
          std::vector<Scalar> res = span.residue(v);
          bool nonzero = false;
          for (const auto& x : res) {
            if (!F.is_zero(x)) {
              nonzero = true;
              break;
            }
          }
          require(nonzero, "SplittingInvalid",
                  "provided representative is dependent modulo boundaries");
          HClass cls;
          cls.deg = deg;
          cls.vec = v;
          // Detect seeded identities among provided data.
          for (int b = 0; b < D.block_count() && !cls.is_identity; ++b) {
            if (v == D.to_dense(D.unit_cocycle(b))) cls.is_identity = true;
          }
          label_class(cls);
          hs.push_back(std::move(cls));
          span.insert(v);
        }
        require(static_cast<int>(span.size()) == zdim, "SplittingInvalid",
                "provided representatives do not span the cohomology");
      }
    }
    if (static_cast<int>(span.size()) < zdim) {
      // Draft kernel vectors (policy order) until Z is filled.
      std::vector<int> order(ker.cols());
      for (std::size_t j = 0; j < ker.cols(); ++j) order[j] = static_cast<int>(j);
      if (policy == SplitPolicy::DeterministicAlt) {
        std::reverse(order.begin(), order.end());
      }
      for (int j : order) {
        if (static_cast<int>(span.size()) == zdim) break;
        std::vector<Scalar> v = ker.column(j);
        std::vector<Scalar> res = span.residue(v);
        bool nonzero = false;
        for (const auto& x : res) {
          if (!F.is_zero(x)) {
            nonzero = true;
            break;
          }
        }
        if (!nonzero) continue;
        HClass cls;
        cls.deg = deg;
        cls.vec = res;
        label_class(cls);
        hs.push_back(std::move(cls));
        span.insert(res);
      }
    }
    require(static_cast<int>(span.size()) == zdim, "SplittingInvalid",
            "failed to complete the cocycle space");

    // L: a complement of Z spanned by cells, drafted in policy order.
    std::vector<int> corder(n);
    for (int j = 0; j < n; ++j) corder[j] = j;
    if (policy == SplitPolicy::DeterministicAlt && provided == nullptr) {
      std::reverse(corder.begin(), corder.end());
    }
    for (int j : corder) {
      if (static_cast<int>(span.size()) == n) break;
      std::vector<Scalar> v(n, Scalar(0));
      v[j] = Scalar(1);
      if (span.insert(v)) lcells_[deg - lo].push_back(j);
    }
    require(static_cast<int>(span.size()) == n, "SplittingInvalid",
            "failed to complete the complement");
  }

  for (int deg = lo; deg <= hi; ++deg) finish_degree(deg);
}

void MerkulovSplitting::finish_degree(int deg) {
  const DgEnd& D = *dg_;
  const Field& F = D.algebra().field();
  const int lo = D.min_deg();
  const int n = D.dim(deg);
  if (n == 0) return;
  const auto& bb = bbasis_[deg - lo];
  const auto& hs = h_[deg - lo];
  const auto& ls = lcells_[deg - lo];
  const int nb = static_cast<int>(bb.size());
  const int nh = static_cast<int>(hs.size());
  const int nl = static_cast<int>(ls.size());
  require(nb + nh + nl == n, "SplittingInvalid", "basis count mismatch");

  Matrix M(F, n, n);
  for (int j = 0; j < nb; ++j) {
    for (int i = 0; i < n; ++i) M.set(i, j, bb[j][i]);
  }
  for (int j = 0; j < nh; ++j) {
    for (int i = 0; i < n; ++i) M.set(i, nb + j, hs[j].vec[i]);
  }
  for (int j = 0; j < nl; ++j) M.set(ls[j], nb + nh + j, Scalar(1));
  inv_basis_[deg - lo] = M.inverse();  // throws SplittingInvalid if singular

  // h on degree deg: solve δ(w) = b with w in L^{deg-1}, for each B-basis
  // vector b, then assemble the dense matrix  h = L · X · (B-coordinates).
  Matrix hm(F, D.dim(deg - 1), n);
  if (nb > 0) {
    require(deg - 1 >= lo, "SplittingInvalid", "boundary below the window");
    const auto& lprev = lcells_[deg - 1 - lo];
    const Matrix& Dprev = D.delta_matrix(deg - 1);
    const int nlp = static_cast<int>(lprev.size());
    require(nlp == nb, "SplittingInvalid",
            "complement does not match the boundary space");
    Matrix DL(F, n, nlp);
    for (int j = 0; j < nlp; ++j) DL.set_column(j, Dprev.column(lprev[j]));
    // X: B-coordinates -> L-coordinates with DL · X = B-basis matrix.
    Matrix X(F, nlp, nb);
    for (int j = 0; j < nb; ++j) {
      auto sol = DL.solve(bb[j]);
      require(sol.has_value(), "SplittingInvalid",
              "δ does not map the complement onto the boundaries");
      X.set_column(j, *sol);
    }
    // B-coordinate extractor: first nb rows of inv_basis_.
    Matrix Bcoord = inv_basis_[deg - lo].submatrix(0, 0, nb, n);
    Matrix LX = X * Bcoord;  // L-coordinates of h(v)
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < nlp; ++i) {
        hm.set(lprev[i], j, F.add(hm.at(lprev[i], j), LX.at(i, j)));
      }
    }
  }
  hmat_[deg - lo] = std::move(hm);
}

int MerkulovSplitting::hdim(int deg) const {
  const int lo = dg_->min_deg();
  if (deg < lo || deg > dg_->max_deg()) return 0;
  return static_cast<int>(h_[deg - lo].size());
}

const std::vector<MerkulovSplitting::HClass>& MerkulovSplitting::hbasis(
    int deg) const {
  static const std::vector<HClass> empty;
  const int lo = dg_->min_deg();
  if (deg < lo || deg > dg_->max_deg()) return empty;
  return h_[deg - lo];
}

DgEnd::Vec MerkulovSplitting::include(int deg, int idx) const {
  const auto& hs = hbasis(deg);
  return dg_->from_dense(deg, hs.at(idx).vec);
}

std::vector<std::pair<int, Scalar>> MerkulovSplitting::project(
    const DgEnd::Vec& v) const {
  std::vector<std::pair<int, Scalar>> out;
  const int lo = dg_->min_deg();
  if (v.deg < lo || v.deg > dg_->max_deg() || v.is_zero()) return out;
  const Field& F = dg_->algebra().field();
  const int nb = bdim_[v.deg - lo];
  const int nh = hdim(v.deg);
  if (nh == 0) return out;
  const Matrix& inv = inv_basis_[v.deg - lo];
  std::vector<Scalar> coords = inv.apply(dg_->to_dense(v));
  for (int i = 0; i < nh; ++i) {
    if (!F.is_zero(coords[nb + i])) out.emplace_back(i, coords[nb + i]);
  }
  return out;
}

DgEnd::Vec MerkulovSplitting::contract(const DgEnd::Vec& v) const {
  const int lo = dg_->min_deg();
  DgEnd::Vec out = dg_->zero(v.deg - 1);
  if (v.deg < lo || v.deg > dg_->max_deg() || v.is_zero()) return out;
  const Matrix& hm = hmat_[v.deg - lo];
  if (hm.rows() == 0) return out;
  std::vector<Scalar> res = hm.apply(dg_->to_dense(v));
  return dg_->from_dense(v.deg - 1, res);
}

void MerkulovSplitting::validate() const {
  const DgEnd& D = *dg_;
  const Field& F = D.algebra().field();
  for (int deg = D.min_deg(); deg <= D.max_deg(); ++deg) {
    const int n = D.dim(deg);
    // Representatives are cocycles.
    for (int i = 0; i < hdim(deg); ++i) {
      DgEnd::Vec dv = D.delta(include(deg, i));
      require(dv.is_zero(), "SplittingInvalid",
              "cohomology representative is not a cocycle");
    }
    // Homotopy identity δh + hδ = id − ip, plus the side conditions, on
    // every cell of this degree.
    for (int j = 0; j < n; ++j) {
      DgEnd::Vec e = D.zero(deg);
      D.add_term(e, j, Scalar(1));
      DgEnd::Vec lhs = D.delta(contract(e));
      DgEnd::Vec hd = contract(D.delta(e));
      for (const auto& [idx, coeff] : hd.c) D.add_term(lhs, idx, coeff);
      DgEnd::Vec rhs = e;
      for (const auto& [idx, coeff] : project(e)) {
        DgEnd::Vec inc = include(deg, idx);
        for (const auto& [ci, cc] : inc.c) {
          D.add_term(rhs, ci, F.mul(Scalar(-1), F.mul(coeff, cc)));
        }
      }
      require(D.vec_equal(lhs, rhs), "SplittingInvalid",
              "homotopy identity δh + hδ = id − ip fails");
      require(contract(contract(e)).is_zero(), "SplittingInvalid",
              "h² does not vanish");
    }
    // h ∘ i = 0 and p ∘ h = 0.
    for (int i = 0; i < hdim(deg); ++i) {
      require(contract(include(deg, i)).is_zero(), "SplittingInvalid",
              "h ∘ i does not vanish");
    }
    for (int j = 0; j < n; ++j) {
      DgEnd::Vec e = D.zero(deg);
      D.add_term(e, j, Scalar(1));
      require(project(contract(e)).empty(), "SplittingInvalid",
              "p ∘ h does not vanish");
    }
  }
}

}  // namespace qw
