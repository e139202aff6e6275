#include "qhw/algebra.hpp"

#include <algorithm>

namespace qw {

namespace {

using PathKey = std::pair<int, std::vector<int>>;

PathKey key_of(const Path& p) { return {p.arrows.empty() ? p.src : -1, p.arrows}; }

}  // namespace

AElt Algebra::unit(int v) const { return from_basis(unit_ids_[v]); }

AElt Algebra::arrow_elt(int a) const {
  const Arrow& ar = Q_.arrow(a);
  return normal_form(Path{ar.src, {a}});
}

AElt Algebra::from_basis(int id) const {
  const Path& p = basis_[id];
  return AElt{p.src, p.dst(Q_), {{id, Scalar(1)}}};
}

AElt Algebra::normal_form(const Path& p) const {
  int src = p.src, dst = p.dst(Q_);
  if (p.length() >= N_) return zero(src, dst);
  auto bit = basis_lookup_.find(key_of(p));
  if (bit != basis_lookup_.end()) return AElt{src, dst, {{bit->second, Scalar(1)}}};
  // Reduce the indicator vector of p against the ideal rows; the residue is
  // supported on non-pivot (= basis) columns.
  auto cit = col_lookup_.find(key_of(p));
  require(cit != col_lookup_.end(), "BlockMismatch", "path outside the enumerated range");
  std::vector<Scalar> w(red_cols_.size(), Scalar(0));
  w[cit->second] = Scalar(1);
  for (std::size_t r = 0; r < red_rows_.size(); ++r) {
    const Scalar& c = w[red_pivots_[r]];
    if (c == 0) continue;
    Scalar f = c;
    for (std::size_t j = 0; j < red_cols_.size(); ++j)
      if (red_rows_[r][j] != 0) w[j] = F_.sub(w[j], F_.mul(f, red_rows_[r][j]));
  }
  AElt out = zero(src, dst);
  for (std::size_t j = 0; j < w.size(); ++j)
    if (w[j] != 0) {
      auto b = basis_lookup_.find(key_of(red_cols_[j]));
      require(b != basis_lookup_.end(), "BlockMismatch", "reduction left a pivot column");
      out.terms.push_back({b->second, w[j]});
    }
  std::sort(out.terms.begin(), out.terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

AElt Algebra::add(const AElt& x, const AElt& y) const {
  require(x.src == y.src && x.dst == y.dst, "BlockMismatch", "adding non-parallel elements");
  AElt r = zero(x.src, x.dst);
  std::size_t i = 0, j = 0;
  while (i < x.terms.size() || j < y.terms.size()) {
    if (j == y.terms.size() || (i < x.terms.size() && x.terms[i].first < y.terms[j].first)) {
      r.terms.push_back(x.terms[i++]);
    } else if (i == x.terms.size() || y.terms[j].first < x.terms[i].first) {
      r.terms.push_back(y.terms[j++]);
    } else {
      Scalar s = F_.add(x.terms[i].second, y.terms[j].second);
      if (s != 0) r.terms.push_back({x.terms[i].first, s});
      ++i, ++j;
    }
  }
  return r;
}

AElt Algebra::scale(const Scalar& c, const AElt& x) const {
  AElt r = zero(x.src, x.dst);
  Scalar cr = F_.reduce(c);
  if (cr == 0) return r;
  for (const auto& [id, v] : x.terms) {
    Scalar s = F_.mul(cr, v);
    if (s != 0) r.terms.push_back({id, s});
  }
  return r;
}

AElt Algebra::mul(const AElt& x, const AElt& y) const {
  require(y.dst == x.src, "BlockMismatch", "multiplying non-composable elements");
  AElt r = zero(y.src, x.dst);
  for (const auto& [bx, cx] : x.terms)
    for (const auto& [by, cy] : y.terms) r = add(r, scale(F_.mul(cx, cy), mul_basis(bx, by)));
  return r;
}

const AElt& Algebra::mul_basis(int bx, int by) const {
  auto it = mult_memo_.find({bx, by});
  if (it != mult_memo_.end()) return it->second;
  Path prod = concat(Q_, basis_[by], basis_[bx]);  // by applied first
  AElt nf = prod.length() >= N_ ? zero(prod.src, prod.dst(Q_)) : normal_form(prod);
  return mult_memo_.emplace(std::make_pair(bx, by), std::move(nf)).first->second;
}

std::string Algebra::to_string(const AElt& x) const {
  if (x.terms.empty()) return "0";
  std::string s;
  for (const auto& [id, c] : x.terms) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += F_.to_string(c) + " ";
    s += basis_[id].to_string(Q_);
  }
  return s;
}

Algebra build_algebra(const Quiver& q, const std::vector<Relation>& rels, const Field& F,
                      int max_nilpotency) {
  Algebra A;
  A.F_ = F;
  A.Q_ = q;

  // Validate relations: parallel terms of length >= 2, coefficients reduced.
  std::vector<Relation> clean;
  bool graded = true;
  for (const auto& r : rels) {
    Relation cr;
    int src = -1, dst = -1, len = -1;
    for (const auto& t : r.terms) {
      Scalar c = F.reduce(t.coeff);
      if (c == 0) continue;
      require(t.path.length() >= 2, "NonAdmissible",
              "relation term '" + t.path.to_string(q) + "' has length < 2");
      int ts = t.path.src, td = t.path.dst(q);
      if (src < 0) {
        src = ts;
        dst = td;
        len = t.path.length();
      } else {
        require(ts == src && td == dst, "InconsistentRelation",
                "relation mixes paths " + q.vertex_name(src) + "->" + q.vertex_name(dst) +
                    " and " + q.vertex_name(ts) + "->" + q.vertex_name(td));
      }
      if (t.path.length() != len) graded = false;
      cr.terms.push_back({c, t.path});
    }
    if (!cr.terms.empty()) clean.push_back(std::move(cr));
  }
  A.rels_ = clean;
  A.graded_ = graded;

  // Paths by length.  paths[d] is sorted by arrow sequence; cumulative cap
  // guards against free blow-up on wild quivers.
  std::vector<std::vector<Path>> paths;
  paths.push_back({});
  for (int v = 0; v < q.vertex_count(); ++v) paths[0].push_back(Path::trivial(v));
  std::size_t total_paths = paths[0].size();
  auto extend_paths = [&](int upto) {
    while (static_cast<int>(paths.size()) - 1 < upto) {
      std::vector<Path> next;
      for (const Path& p : paths.back()) {
        int d = p.dst(q);
        for (int a = 0; a < q.arrow_count(); ++a)
          if (q.arrow(a).src == d) {
            Path e = p;
            e.arrows.push_back(a);
            next.push_back(std::move(e));
          }
      }
      std::sort(next.begin(), next.end(), path_less);
      total_paths += next.size();
      require(total_paths < 2000000, "InfiniteDimensional",
              "path enumeration exploded; the algebra appears infinite-dimensional");
      paths.push_back(std::move(next));
    }
  };

  // Saturation: find the least n with  span(length-n paths) contained in
  // span{ truncation_{<=n}(p.r.q) }.  Then J^n is contained in I + J^(n+k)
  // for all k, and with the ideal generated in bounded degree this pins the
  // nilpotency N = n of the truncated algebra.
  auto build_span = [&](int bound, std::vector<Path>& cols,
                        std::map<PathKey, int>& col_ids) -> EchelonSpan {
    cols.clear();
    col_ids.clear();
    extend_paths(bound);
    for (int d = 2; d <= bound; ++d)
      for (const Path& p : paths[d]) {
        col_ids[key_of(p)] = static_cast<int>(cols.size());
        cols.push_back(p);
      }
    EchelonSpan span(F, cols.size());
    for (const auto& r : A.rels_) {
      int rs = r.terms.front().path.src, rd = r.terms.front().path.dst(q);
      int lmin = r.terms.front().path.length();
      for (const auto& t : r.terms) lmin = std::min(lmin, t.path.length());
      for (int ql = 0; ql + lmin <= bound; ++ql)
        for (const Path& qq : paths[ql]) {
          if (qq.dst(q) != rs) continue;
          for (int pl = 0; ql + lmin + pl <= bound; ++pl)
            for (const Path& pp : paths[pl]) {
              if (pp.src != rd) continue;
              std::vector<Scalar> vec(cols.size(), Scalar(0));
              bool any = false;
              for (const auto& t : r.terms) {
                if (ql + t.path.length() + pl > bound) continue;  // truncated away
                Path full = concat(q, concat(q, qq, t.path), pp);
                int cid = col_ids.at(key_of(full));
                vec[cid] = F.add(vec[cid], t.coeff);
                any = true;
              }
              if (any) span.insert(vec);
            }
        }
    }
    return span;
  };

  int N = -1;
  for (int n = 2; n <= max_nilpotency; ++n) {
    std::vector<Path> cols;
    std::map<PathKey, int> col_ids;
    EchelonSpan span = build_span(n, cols, col_ids);
    extend_paths(n);
    bool all_in = true;
    for (const Path& p : paths[n]) {
      std::vector<Scalar> vec(cols.size(), Scalar(0));
      vec[col_ids.at(key_of(p))] = Scalar(1);
      if (!span.contains(vec)) {
        all_in = false;
        break;
      }
    }
    if (all_in) {
      N = n;
      break;
    }
  }
  require(N > 0, "InfiniteDimensional",
          "no nilpotency bound found up to " + std::to_string(max_nilpotency) +
              "; the algebra appears infinite-dimensional");
  A.N_ = N;

  // Reduction data over columns of length 2..N-1 and the resulting basis.
  std::vector<Path> cols;
  std::map<PathKey, int> col_ids;
  EchelonSpan span = build_span(N - 1, cols, col_ids);
  A.red_cols_ = cols;
  for (const auto& [k, v] : col_ids) A.col_lookup_[k] = v;
  A.red_rows_ = span.rows();
  A.red_pivots_ = span.pivots();

  std::vector<bool> pivot_col(cols.size(), false);
  for (auto p : span.pivots()) pivot_col[p] = true;

  int nv = q.vertex_count();
  A.by_pair_.assign(nv, std::vector<std::vector<int>>(nv));
  A.unit_ids_.assign(nv, -1);
  for (int d = 0; d <= N - 1; ++d) {
    extend_paths(d);
    for (const Path& p : paths[d]) {
      if (d >= 2 && pivot_col[col_ids.at(key_of(p))]) continue;
      int id = static_cast<int>(A.basis_.size());
      A.basis_.push_back(p);
      A.basis_lookup_[key_of(p)] = id;
      A.by_pair_[p.src][p.dst(q)].push_back(id);
      if (d == 0) A.unit_ids_[p.src] = id;
    }
  }

  // Sanity: every declared relation reduces to zero in the quotient.
  for (const auto& r : A.rels_) {
    AElt acc = A.zero(r.terms.front().path.src, r.terms.front().path.dst(q));
    for (const auto& t : r.terms) acc = A.add(acc, A.scale(t.coeff, A.normal_form(t.path)));
    require(acc.is_zero(), "InconsistentRelation", "relation does not vanish in the quotient");
  }
  return A;
}

Algebra opposite_algebra(const Algebra& A) {
  const Quiver& q = A.quiver();
  Quiver rq;
  for (int v = 0; v < q.vertex_count(); ++v) rq.add_vertex(q.vertex_name(v));
  for (int a = 0; a < q.arrow_count(); ++a)
    rq.add_arrow(q.arrow(a).name, q.arrow(a).dst, q.arrow(a).src);
  std::vector<Relation> rrels;
  for (const auto& r : A.relations()) {
    Relation rr;
    for (const auto& t : r.terms) {
      Path p = t.path;
      std::reverse(p.arrows.begin(), p.arrows.end());
      p.src = t.path.dst(q);
      rr.terms.push_back({t.coeff, p});
    }
    rrels.push_back(std::move(rr));
  }
  Algebra R = build_algebra(rq, rrels, A.field(), std::max(A.nilpotency() + 1, 8));
  if (A.declared_order()) R.set_declared_order(*A.declared_order());
  return R;
}

}  // namespace qw
