#include "qhw/ainfinity.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qhw/common.hpp"

namespace qw {

Model::Model(std::shared_ptr<const DgEnd> dg,
             std::shared_ptr<const MerkulovSplitting> split, int arity_bound)
    : dg_(std::move(dg)), split_(std::move(split)), arity_bound_(arity_bound) {
  require(&split_->dg() == dg_.get(), "MismatchedAlgebra",
          "splitting belongs to a different dg algebra");
  const int lo = dg_->min_deg(), hi = dg_->max_deg();
  by_degree_.assign(hi - lo + 1, {});
  for (int deg = lo; deg <= hi; ++deg) {
    const auto& hs = split_->hbasis(deg);
    for (int i = 0; i < static_cast<int>(hs.size()); ++i) {
      HInfo inf;
      inf.deg = deg;
      inf.idx = i;
      inf.blk_a = hs[i].blk_a;
      inf.blk_b = hs[i].blk_b;
      inf.internal = hs[i].internal;
      inf.is_identity = hs[i].is_identity;
      by_degree_[deg - lo].push_back(static_cast<int>(infos_.size()));
      infos_.push_back(inf);
    }
  }
}

int Model::hindex(int deg, int idx) const {
  const int lo = dg_->min_deg();
  require(deg >= lo && deg <= dg_->max_deg(), "SplittingInvalid",
          "cohomology degree outside the window");
  return by_degree_[deg - lo].at(idx);
}

const std::vector<int>& Model::hids(int deg) const {
  static const std::vector<int> empty;
  const int lo = dg_->min_deg();
  if (deg < lo || deg > dg_->max_deg()) return empty;
  return by_degree_[deg - lo];
}

std::string Model::hlabel(int gid) const {
  const HInfo& inf = info(gid);
  std::ostringstream os;
  if (inf.is_identity) {
    os << "1_" << (inf.blk_b + 1);
  } else {
    os << "x" << inf.deg << "_" << (inf.idx + 1);
  }
  return os.str();
}

bool Model::chained(const std::vector<int>& tuple) const {
  for (std::size_t i = 0; i + 1 < tuple.size(); ++i) {
    if (info(tuple[i]).blk_b != info(tuple[i + 1]).blk_a) return false;
  }
  return true;
}

DgEnd::Vec Model::hl(const std::vector<int>& tuple) const {
  if (tuple.size() == 1) {
    const HInfo& inf = info(tuple[0]);
    return split_->include(inf.deg, inf.idx);
  }
  auto it = hl_memo_.find(tuple);
  if (it != hl_memo_.end()) return it->second;
  DgEnd::Vec val = split_->contract(lambda(tuple));
  hl_memo_.emplace(tuple, val);
  return val;
}

DgEnd::Vec Model::lambda(const std::vector<int>& tuple) const {
  const int n = static_cast<int>(tuple.size());
  int degsum = 0;
  for (int g : tuple) degsum += info(g).deg;
  DgEnd::Vec out = dg_->zero(degsum + 2 - n);
  const Field& F = dg_->algebra().field();
  int prefix = 0;
  for (int r = 1; r <= n - 1; ++r) {
    prefix += info(tuple[r - 1]).deg;
    const int s = n - r;
    DgEnd::Vec left = hl(std::vector<int>(tuple.begin(), tuple.begin() + r));
    if (left.is_zero()) continue;
    DgEnd::Vec right = hl(std::vector<int>(tuple.begin() + r, tuple.end()));
    if (right.is_zero()) continue;
    DgEnd::Vec prod = dg_->product(left, right);
    if (prod.is_zero()) continue;
    int exp = (r - 1) + (1 - s) * prefix;
    exp = ((exp % 2) + 2) % 2;
    const Scalar sign = (exp == 0) ? Scalar(1) : Scalar(-1);
    for (const auto& [idx, coeff] : prod.c) {
      dg_->add_term(out, idx, F.mul(sign, coeff));
    }
  }
  return out;
}

const Model::HValue& Model::m(const std::vector<int>& tuple) const {
  auto it = m_memo_.find(tuple);
  if (it != m_memo_.end()) return it->second;
  HValue out;
  if (tuple.size() >= 2 && chained(tuple)) {
    DgEnd::Vec lam = lambda(tuple);
    for (const auto& [idx, coeff] : split_->project(lam)) {
      out.emplace_back(hindex(lam.deg, idx), coeff);
    }
  }
  return m_memo_.emplace(tuple, std::move(out)).first->second;
}

bool Model::trusted_tuple(const std::vector<int>& tuple) const {
  if (dg_->all_complete()) return true;
  const int T = dg_->trust_bound();
  const int n = static_cast<int>(tuple.size());
  std::vector<int> pre(n + 1, 0);
  for (int i = 0; i < n; ++i) pre[i + 1] = pre[i] + info(tuple[i]).deg;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const int len = j - i + 1;
      const int S = pre[j + 1] - pre[i];
      if (len == 1) {
        // Each argument must itself be a trustworthy class: an identity, or
        // a class in the pollution-free degree range.
        if (!(info(tuple[i]).is_identity || dg_->trusted_degree(S))) {
          return false;
        }
      } else {
        const int a = S + 2 - len;  // degree of λ on this window
        const int b = S + 1 - len;  // degree of hλ on this window
        if (a > T || -a > T || b > T || -b > T) return false;
      }
    }
  }
  return true;
}

void Model::corrupt_m(const std::vector<int>& tuple, const HValue& delta) const {
  m(tuple);  // materialize
  HValue& cur = m_memo_[tuple];
  const Field& F = dg_->algebra().field();
  std::map<int, Scalar> acc;
  for (const auto& [g, c] : cur) acc[g] = c;
  for (const auto& [g, c] : delta) {
    auto it = acc.find(g);
    if (it == acc.end()) {
      acc[g] = F.reduce(c);
    } else {
      it->second = F.add(it->second, c);
    }
  }
  cur.clear();
  for (const auto& [g, c] : acc) {
    if (!F.is_zero(c)) cur.emplace_back(g, c);
  }
}

// ---------------------------------------------------------------------------

ModelBundle build_model(std::shared_ptr<const Algebra> A,
                        const std::vector<Rep>& modules, int max_degree,
                        SplitPolicy policy, int arity_bound) {
  ModelBundle B;
  B.A = A;
  std::vector<Resolution> res;
  res.reserve(modules.size());
  for (const Rep& M : modules) {
    res.push_back(minimal_resolution(*A, M, max_degree));
  }
  B.dg = std::make_shared<DgEnd>(A, std::move(res));
  B.splitting = std::make_shared<MerkulovSplitting>(B.dg, policy);
  if (arity_bound <= 0) arity_bound = std::min(A->nilpotency() + 1, 8);
  B.model = std::make_shared<Model>(B.dg, B.splitting, arity_bound);
  return B;
}

ModelBundle build_simples_model(std::shared_ptr<const Algebra> A,
                                int max_degree, SplitPolicy policy,
                                int arity_bound) {
  std::vector<Rep> simples;
  for (int v = 0; v < A->quiver().vertex_count(); ++v) {
    simples.push_back(simple_rep(*A, v));
  }
  return build_model(A, simples, max_degree, policy, arity_bound);
}

ExtTable ext_table(const MerkulovSplitting& S, int max_degree_req) {
  const DgEnd& D = S.dg();
  ExtTable out;
  out.complete = D.all_complete();
  int top = std::min(max_degree_req, D.max_deg());
  if (!D.all_complete()) top = std::min(top, D.trust_bound());
  out.max_degree = top;
  const int nb = D.block_count();
  out.dims.assign(top + 1, std::vector<std::vector<int>>(
                               nb, std::vector<int>(nb, 0)));
  for (int deg = 1; deg <= top; ++deg) {
    for (const auto& cls : S.hbasis(deg)) {
      out.dims[deg][cls.blk_a][cls.blk_b] += 1;
    }
  }
  // Degree 0: for a truncated collection H^0 carries edge junk, so Hom is
  // always reported from the modules themselves.
  if (D.all_complete()) {
    for (const auto& cls : S.hbasis(0)) {
      out.dims[0][cls.blk_a][cls.blk_b] += 1;
    }
  } else {
    for (int a = 0; a < nb; ++a) {
      for (int b = 0; b < nb; ++b) {
        out.dims[0][a][b] = hom_dim(D.block(b).target, D.block(a).target);
      }
    }
  }
  return out;
}

namespace {

std::string fmt_hvalue(const Model& M,
                       const std::vector<std::pair<int, Scalar>>& v) {
  if (v.empty()) return "0";
  const Field& F = M.dg().algebra().field();
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : v) {
    if (!first) os << " + ";
    os << F.to_string(c) << "*" << M.hlabel(g);
    first = false;
  }
  return os.str();
}

std::string fmt_tuple(const Model& M, const std::vector<int>& tuple) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) os << ",";
    os << M.hlabel(tuple[i]);
  }
  os << ")";
  return os.str();
}

// Strong trust window used while extending tuples left-to-right: monotone
// under appending, and implies trusted_tuple.
bool windows_ok_after_append(const Model& M, const std::vector<int>& tuple,
                             const std::vector<int>& pre) {
  if (M.dg().all_complete()) return true;
  const int T = M.dg().trust_bound();
  const int n = static_cast<int>(tuple.size());
  for (int i = 0; i < n; ++i) {
    const int len = n - i;
    const int S = pre[n] - pre[i];
    if (len == 1) {
      if (!(M.info(tuple[i]).is_identity || M.dg().trusted_degree(S))) {
        return false;
      }
    } else {
      const int a = S + 2 - len;
      const int b = S + 1 - len;
      if (a > T || -a > T || b > T || -b > T) return false;
    }
  }
  return true;
}

}  // namespace

StasheffReport check_stasheff(const Model& M, int max_arity) {
  StasheffReport rep;
  const Field& F = M.dg().algebra().field();
  const int total = M.hcount();

  std::vector<int> tuple;
  std::vector<int> pre{0};

  auto check_tuple = [&](const std::vector<int>& t) {
    const int n = static_cast<int>(t.size());
    std::map<int, Scalar> residual;
    for (int s = 2; s <= n - 1; ++s) {
      for (int r = 0; r + s <= n; ++r) {
        const int tt = n - r - s;
        std::vector<int> inner(t.begin() + r, t.begin() + r + s);
        const auto& mv = M.m(inner);
        if (mv.empty()) continue;
        int exp = r + s * tt + s * (pre[r] - pre[0]);
        exp = ((exp % 2) + 2) % 2;
        const Scalar sign = (exp == 0) ? Scalar(1) : Scalar(-1);
        for (const auto& [g, c] : mv) {
          std::vector<int> outer(t.begin(), t.begin() + r);
          outer.push_back(g);
          outer.insert(outer.end(), t.begin() + r + s, t.end());
          for (const auto& [g2, c2] : M.m(outer)) {
            Scalar v = F.mul(sign, F.mul(c, c2));
            auto it = residual.find(g2);
            if (it == residual.end()) {
              residual[g2] = v;
            } else {
              it->second = F.add(it->second, v);
              if (F.is_zero(it->second)) residual.erase(it);
            }
          }
        }
      }
    }
    ++rep.tuples_checked;
    if (!residual.empty()) {
      rep.ok = false;
      if (rep.violations.size() < 20) {
        std::vector<std::pair<int, Scalar>> rv(residual.begin(), residual.end());
        rep.violations.push_back("residual at " + fmt_tuple(M, t) + " = " +
                                 fmt_hvalue(M, rv));
      }
    }
  };

  std::function<void()> dfs = [&]() {
    const int n = static_cast<int>(tuple.size());
    if (n >= 3) check_tuple(tuple);
    if (n == max_arity) return;
    for (int g = 0; g < total; ++g) {
      if (n > 0 && M.info(tuple.back()).blk_b != M.info(g).blk_a) continue;
      tuple.push_back(g);
      pre.push_back(pre.back() + M.info(g).deg);
      if (windows_ok_after_append(M, tuple, pre)) {
        dfs();
      } else {
        ++rep.branches_pruned_untrusted;
      }
      tuple.pop_back();
      pre.pop_back();
    }
  };
  dfs();
  return rep;
}

GenerationReport check_degree_one_generation(const Model& M, int max_arity,
                                             bool include_degree_zero) {
  GenerationReport rep;
  const Field& F = M.dg().algebra().field();
  const DgEnd& D = M.dg();
  const int lo = D.min_deg(), hi = D.max_deg();

  std::map<int, EchelonSpan> spans;
  for (int deg = lo; deg <= hi; ++deg) {
    if (!M.hids(deg).empty()) {
      spans.emplace(deg, EchelonSpan(F, M.hids(deg).size()));
    }
  }
  auto seed = [&](int deg, bool identities_only) {
    const auto& ids = M.hids(deg);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (identities_only && !M.info(ids[i]).is_identity) continue;
      std::vector<Scalar> v(ids.size(), Scalar(0));
      v[i] = Scalar(1);
      spans.at(deg).insert(v);
    }
  };
  if (!M.hids(1).empty()) seed(1, false);
  if (include_degree_zero && !M.hids(0).empty()) {
    // On a truncated collection only the identities are certified degree-0
    // classes; everything else in H^0 is edge junk.
    seed(0, !D.all_complete());
  }

  const int trust = D.trust_bound();

  // Fixed point: close the generated spans under all m_n up to max_arity,
  // expanding tuples of current span rows multilinearly over the H-basis.
  bool changed = true;
  while (changed) {
    changed = false;
    // Snapshot the pool: (degree, dense coordinates over hids(degree)).
    std::vector<std::pair<int, std::vector<Scalar>>> pool;
    for (const auto& [deg, span] : spans) {
      if (!D.all_complete() && (deg < 0 || deg > trust)) continue;
      for (const auto& r : span.rows()) pool.emplace_back(deg, r);
    }
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int degsum) {
      const int n = static_cast<int>(pick.size());
      if (n >= 2) {
        // Expand m_n over basis tuples of the chosen rows.
        std::map<int, Scalar> degs_out;  // accumulate per output gid
        std::vector<std::pair<int, Scalar>> chosen;  // (gid, coeff) per slot
        std::function<void(std::size_t, Scalar)> expand =
            [&](std::size_t slot, Scalar coeff) {
              if (slot == pick.size()) {
                std::vector<int> basis_tuple;
                basis_tuple.reserve(pick.size());
                for (const auto& [g, c] : chosen) basis_tuple.push_back(g);
                if (!M.trusted_tuple(basis_tuple)) return;
                for (const auto& [g, c] : M.m(basis_tuple)) {
                  Scalar v = F.mul(coeff, c);
                  auto it = degs_out.find(g);
                  if (it == degs_out.end()) {
                    degs_out[g] = v;
                  } else {
                    it->second = F.add(it->second, v);
                  }
                }
                return;
              }
              const auto& [pdeg, row] = pool[pick[slot]];
              const auto& ids = M.hids(pdeg);
              for (std::size_t i = 0; i < ids.size(); ++i) {
                if (F.is_zero(row[i])) continue;
                chosen.emplace_back(ids[i], row[i]);
                expand(slot + 1, F.mul(coeff, row[i]));
                chosen.pop_back();
              }
            };
        expand(0, Scalar(1));
        // Scatter the accumulated value into the span of its degree.
        std::map<int, std::vector<Scalar>> per_degree;
        for (const auto& [g, c] : degs_out) {
          if (F.is_zero(c)) continue;
          const auto& inf = M.info(g);
          auto& vec = per_degree
                          .try_emplace(inf.deg, std::vector<Scalar>(
                                                    M.hids(inf.deg).size(),
                                                    Scalar(0)))
                          .first->second;
          vec[inf.idx] = c;
        }
        for (auto& [deg, vec] : per_degree) {
          if (spans.at(deg).insert(vec)) changed = true;
        }
      }
      if (n == max_arity) return;
      for (int pi = 0; pi < static_cast<int>(pool.size()); ++pi) {
        pick.push_back(pi);
        rec(degsum + pool[pi].first);
        pick.pop_back();
      }
    };
    rec(0);
  }

  for (int deg = 2; deg <= std::min(hi, trust); ++deg) {
    const auto& ids = M.hids(deg);
    if (ids.empty()) continue;
    auto it = spans.find(deg);
    const int got = it == spans.end() ? 0 : static_cast<int>(it->second.size());
    rep.coverage.emplace_back(deg, got, static_cast<int>(ids.size()));
    if (got != static_cast<int>(ids.size())) {
      rep.generated = false;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        std::vector<Scalar> v(ids.size(), Scalar(0));
        v[i] = Scalar(1);
        if (it == spans.end() || !it->second.contains(v)) {
          rep.uncovered.push_back(M.hlabel(ids[i]));
        }
      }
    }
  }
  return rep;
}

QuadraticReport quadratic_vanishing_check(const Model& M, int max_arity,
                                          bool check_everywhere) {
  require(M.dg().graded(), "NoInternalGrading",
          "the algebra is not length-graded, so the quadratic test is undefined");
  QuadraticReport rep;

  auto run = [&](const std::vector<int>& pool, bool* flag) {
    std::vector<int> tuple;
    std::vector<int> pre{0};
    std::function<void()> dfs = [&]() {
      const int n = static_cast<int>(tuple.size());
      if (n >= 3) {
        if (!M.m(tuple).empty()) {
          *flag = false;
          if (rep.witnesses.size() < 20) {
            rep.witnesses.push_back("m_" + std::to_string(n) + " " +
                                    fmt_tuple(M, tuple) + " = " +
                                    fmt_hvalue(M, M.m(tuple)));
          }
        }
      }
      if (n == max_arity) return;
      for (int g : pool) {
        if (n > 0 && M.info(tuple.back()).blk_b != M.info(g).blk_a) continue;
        tuple.push_back(g);
        pre.push_back(pre.back() + M.info(g).deg);
        if (windows_ok_after_append(M, tuple, pre)) dfs();
        tuple.pop_back();
        pre.pop_back();
      }
    };
    dfs();
  };

  std::vector<int> deg1;
  for (int g = 0; g < M.hcount(); ++g) {
    if (M.info(g).deg == 1) deg1.push_back(g);
  }
  run(deg1, &rep.quadratic);

  if (check_everywhere) {
    std::vector<int> all(M.hcount());
    for (int g = 0; g < M.hcount(); ++g) all[g] = g;
    run(all, &rep.all_higher_vanish);
  }
  return rep;
}

MCReport maurer_cartan_check(const Model& M, const MCInput& in) {
  const Field& F = M.dg().algebra().field();
  const int sz = static_cast<int>(in.type.size());
  for (int b : in.type) {
    require(b >= 0 && b < M.dg().block_count(), "BlockMismatch",
            "filtration slot names a block outside the collection");
  }
  const auto& h1 = M.hids(1);
  for (const auto& [key, cls] : in.entries) {
    const auto& [a, b] = key;
    require(0 <= a && a < b && b < sz, "BlockMismatch",
            "twist entries must be strictly upper triangular");
    for (const auto& [idx, coeff] : cls) {
      (void)coeff;
      require(idx >= 0 && idx < static_cast<int>(h1.size()), "BlockMismatch",
              "twist entry refers to a missing degree-1 class");
      const auto& inf = M.info(h1[idx]);
      require(inf.blk_a == in.type[a] && inf.blk_b == in.type[b],
              "BlockMismatch", "twist entry lies in the wrong Ext-component");
    }
  }

  MCReport rep;
  for (int a = 0; a < sz; ++a) {
    for (int b = a + 1; b < sz; ++b) {
      std::map<int, Scalar> acc;
      std::vector<int> chain{a};
      std::function<void()> rec = [&]() {
        const int cur = chain.back();
        if (cur == b) {
          const int t = static_cast<int>(chain.size()) - 1;
          if (t < 2) return;
          std::vector<const std::vector<std::pair<int, Scalar>>*> steps;
          for (int i = 0; i < t; ++i) {
            steps.push_back(&in.entries.at({chain[i], chain[i + 1]}));
          }
          int exp = (t * (t - 1) / 2) % 2;
          const Scalar outer_sign = (exp == 0) ? Scalar(1) : Scalar(-1);
          std::vector<int> basis_tuple(t);
          std::function<void(int, Scalar)> expand = [&](int slot, Scalar coeff) {
            if (slot == t) {
              for (const auto& [g, c] : M.m(basis_tuple)) {
                Scalar v = F.mul(outer_sign, F.mul(coeff, c));
                auto it = acc.find(g);
                if (it == acc.end()) {
                  acc[g] = v;
                } else {
                  it->second = F.add(it->second, v);
                  if (F.is_zero(it->second)) acc.erase(it);
                }
              }
              return;
            }
            for (const auto& [idx, c] : *steps[slot]) {
              basis_tuple[slot] = M.hindex(1, idx);
              expand(slot + 1, F.mul(coeff, c));
            }
          };
          expand(0, Scalar(1));
          return;
        }
        for (int nxt = cur + 1; nxt <= b; ++nxt) {
          if (in.entries.find({cur, nxt}) == in.entries.end()) continue;
          chain.push_back(nxt);
          rec();
          chain.pop_back();
        }
      };
      rec();
      if (!acc.empty()) {
        rep.flat = false;
        std::vector<std::pair<int, Scalar>> av(acc.begin(), acc.end());
        rep.obstructions.emplace_back(a, b, fmt_hvalue(M, av));
      }
    }
  }
  return rep;
}

namespace {

std::vector<Scalar> flatten_map(const ModMap& m) {
  std::vector<Scalar> out;
  for (const auto& mat : m.f) {
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      for (std::size_t j = 0; j < mat.cols(); ++j) out.push_back(mat.at(i, j));
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<int, Scalar>> extension_class(const Model& M, int blk_sub,
                                                    int blk_quot, const Rep& E,
                                                    const ModMap& incl,
                                                    const ModMap& proj) {
  const DgEnd& D = M.dg();
  const Algebra& A = D.algebra();
  const Field& F = A.field();
  const Resolution& Rq = D.block(blk_quot);
  const Resolution& Rs = D.block(blk_sub);
  const int nv = A.quiver().vertex_count();
  for (int v = 0; v < nv; ++v) {
    require(static_cast<int>(incl.f[v].rows()) == E.dims[v] &&
                static_cast<int>(incl.f[v].cols()) == Rs.target.dims[v] &&
                static_cast<int>(proj.f[v].rows()) == Rq.target.dims[v] &&
                static_cast<int>(proj.f[v].cols()) == E.dims[v],
            "MismatchedAlgebra",
            "extension data does not match the resolved modules");
  }
  if (Rq.length() < 1) return {};  // the quotient is projective

  // Lift the augmentation of the quotient's resolution through proj.
  const ProjTermInfo& q0 = Rq.terms[0];
  std::vector<std::vector<Scalar>> gen_lift(q0.sums.size());
  for (std::size_t s = 0; s < q0.sums.size(); ++s) {
    const int v = q0.sums[s].vertex;
    int pos = -1;
    const auto& lay = q0.layout[v];
    for (std::size_t j = 0; j < lay.size(); ++j) {
      if (lay[j] == std::make_pair(static_cast<int>(s), A.unit_basis_id(v))) {
        pos = static_cast<int>(j);
        break;
      }
    }
    require(pos >= 0, "SplittingInvalid", "projective layout lost a generator");
    auto sol = proj.f[v].solve(Rq.aug.f[v].column(pos));
    require(sol.has_value(), "BlockMismatch",
            "the projection is not onto the quotient module");
    gen_lift[s] = *sol;
  }
  ModMap phi0;
  phi0.src = &q0.rep;
  phi0.dst = &E;
  for (int u = 0; u < nv; ++u) {
    Matrix fu(F, E.dims[u], q0.rep.dims[u]);
    for (std::size_t j = 0; j < q0.layout[u].size(); ++j) {
      const auto& [s, bid] = q0.layout[u][j];
      std::vector<Scalar> col =
          E.path_action(A.basis_path(bid)).apply(gen_lift[s]);
      fu.set_column(j, col);
    }
    phi0.f.push_back(std::move(fu));
  }

  // The connecting cocycle lands in the submodule; pull it back through incl.
  ModMap d1 = realize(A, Rq.d[1], Rq.terms[1], Rq.terms[0]);
  ModMap c = compose(phi0, d1);
  ModMap cbar;
  cbar.src = &Rq.terms[1].rep;
  cbar.dst = &Rs.target;
  for (int u = 0; u < nv; ++u) {
    Matrix zu(F, Rs.target.dims[u], Rq.terms[1].rep.dims[u]);
    for (std::size_t j = 0; j < zu.cols(); ++j) {
      auto sol = incl.f[u].solve(c.f[u].column(j));
      require(sol.has_value(), "BlockMismatch",
              "the connecting map does not land in the submodule");
      zu.set_column(j, *sol);
    }
    cbar.f.push_back(std::move(zu));
  }

  // Express cbar against the level-1 parts of the degree-1 classes of block
  // (blk_sub, blk_quot) modulo coboundaries g ∘ d_1.
  std::vector<int> class_rows;  // indices into hbasis(1)
  std::vector<std::vector<Scalar>> cols;
  const auto& h1 = M.splitting().hbasis(1);
  const auto& cells1 = D.cells(1);
  for (std::size_t i = 0; i < h1.size(); ++i) {
    if (h1[i].blk_a != blk_sub || h1[i].blk_b != blk_quot) continue;
    AlgMat level1 = zero_alg_mat(A, Rq.terms[1].sums, Rs.terms[0].sums);
    for (std::size_t ci = 0; ci < h1[i].vec.size(); ++ci) {
      if (F.is_zero(h1[i].vec[ci])) continue;
      const DgCell& cell = cells1[ci];
      if (cell.k != 1) continue;
      level1.entries[cell.s][cell.t] = A.add(
          level1.entries[cell.s][cell.t],
          A.scale(h1[i].vec[ci], A.from_basis(cell.path)));
    }
    ModMap w = compose(Rs.aug, realize(A, level1, Rq.terms[1], Rs.terms[0]));
    class_rows.push_back(static_cast<int>(i));
    cols.push_back(flatten_map(w));
  }
  const int nclasses = static_cast<int>(class_rows.size());
  for (const ModMap& g : hom_basis(q0.rep, Rs.target)) {
    cols.push_back(flatten_map(compose(g, d1)));
  }

  std::vector<Scalar> rhs = flatten_map(cbar);
  Matrix sys(F, rhs.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) sys.set_column(j, cols[j]);
  auto sol = sys.solve(rhs);
  require(sol.has_value(), "BlockMismatch",
          "the sequence does not define an extension class");

  std::vector<std::pair<int, Scalar>> out;
  for (int i = 0; i < nclasses; ++i) {
    if (!F.is_zero((*sol)[i])) out.emplace_back(class_rows[i], (*sol)[i]);
  }
  return out;
}

}  // namespace qw
