#include "qhw/rep.hpp"

#include <algorithm>

namespace qw {

namespace {

// Solve incl * X = through, column by column (incl has full column rank).
Matrix restrict_through(const Matrix& incl, const Matrix& through) {
  Matrix X(incl.field(), incl.cols(), through.cols());
  for (std::size_t j = 0; j < through.cols(); ++j) {
    auto x = incl.solve(through.column(j));
    require(x.has_value(), "BlockMismatch", "subspace is not invariant");
    X.set_column(j, *x);
  }
  return X;
}

Matrix incl_from_span(const EchelonSpan& span, const Field& F, std::size_t ambient) {
  Matrix incl(F, ambient, span.size());
  for (std::size_t r = 0; r < span.size(); ++r) {
    const auto& row = span.rows()[r];
    for (std::size_t i = 0; i < ambient; ++i) incl.set(i, r, row[i]);
  }
  return incl;
}

// Quotient of M by an arrow-invariant subspace (given per vertex).
SubWithMap quotient_by_subspace(const Rep& M, const std::vector<EchelonSpan>& subs) {
  const Algebra& A = *M.A;
  const Field& F = A.field();
  const Quiver& q = A.quiver();
  int nv = q.vertex_count();
  SubWithMap out;
  out.rep.A = &A;
  std::vector<std::vector<std::size_t>> coords(nv);  // surviving coordinates
  std::vector<Matrix> proj(nv), sect(nv);
  for (int v = 0; v < nv; ++v) {
    std::vector<bool> is_pivot(M.dims[v], false);
    for (auto p : subs[v].pivots()) is_pivot[p] = true;
    for (int c = 0; c < M.dims[v]; ++c)
      if (!is_pivot[c]) coords[v].push_back(c);
    int qd = static_cast<int>(coords[v].size());
    out.rep.dims.push_back(qd);
    // projection: residue against the subspace, then keep free coordinates
    Matrix pr(F, qd, M.dims[v]);
    for (int c = 0; c < M.dims[v]; ++c) {
      std::vector<Scalar> e(M.dims[v], Scalar(0));
      e[c] = Scalar(1);
      std::vector<Scalar> res = subs[v].residue(e);
      for (int r = 0; r < qd; ++r) pr.set(r, c, res[coords[v][r]]);
    }
    proj[v] = pr;
    Matrix sc(F, M.dims[v], qd);
    for (int r = 0; r < qd; ++r) sc.set(coords[v][r], r, F.one());
    sect[v] = sc;
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    int i = q.arrow(a).src, j = q.arrow(a).dst;
    out.rep.act.push_back(proj[j] * M.act[a] * sect[i]);
  }
  out.map.src = &M;  // caller re-points at stable storage
  out.map.dst = nullptr;
  out.map.f = proj;
  return out;
}

std::vector<EchelonSpan> empty_spans(const Rep& M) {
  std::vector<EchelonSpan> s;
  for (int v = 0; v < static_cast<int>(M.dims.size()); ++v)
    s.push_back(EchelonSpan(M.A->field(), M.dims[v]));
  return s;
}

// Close the given per-vertex vectors under all arrow actions.
void close_under_action(const Rep& M, std::vector<EchelonSpan>& spans,
                        std::vector<std::pair<int, std::vector<Scalar>>> work) {
  const Quiver& q = M.A->quiver();
  std::vector<std::pair<int, std::vector<Scalar>>> todo;
  for (auto& [v, vec] : work)
    if (spans[v].insert(vec)) todo.push_back({v, vec});
  while (!todo.empty()) {
    auto [v, vec] = todo.back();
    todo.pop_back();
    for (int a = 0; a < q.arrow_count(); ++a) {
      if (q.arrow(a).src != v) continue;
      std::vector<Scalar> img = M.act[a].apply(vec);
      int w = q.arrow(a).dst;
      if (spans[w].insert(img)) todo.push_back({w, img});
    }
  }
}

SubWithMap sub_from_spans(const Rep& M, const std::vector<EchelonSpan>& spans) {
  const Algebra& A = *M.A;
  const Quiver& q = A.quiver();
  SubWithMap out;
  out.rep.A = &A;
  std::vector<Matrix> incl;
  for (int v = 0; v < q.vertex_count(); ++v) {
    out.rep.dims.push_back(static_cast<int>(spans[v].size()));
    incl.push_back(incl_from_span(spans[v], A.field(), M.dims[v]));
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    int i = q.arrow(a).src, j = q.arrow(a).dst;
    out.rep.act.push_back(restrict_through(incl[j], M.act[a] * incl[i]));
  }
  out.map.dst = &M;
  out.map.f = incl;
  return out;
}

}  // namespace

int Rep::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

Matrix Rep::path_action(const Path& p) const {
  Matrix m = Matrix::identity(A->field(), dims[p.src]);
  for (int a : p.arrows) m = act[a] * m;
  return m;
}

Matrix Rep::elt_action(const AElt& x) const {
  Matrix m(A->field(), dims[x.dst], dims[x.src]);
  for (const auto& [id, c] : x.terms) m = m + path_action(A->basis_path(id)).scaled(c);
  return m;
}

void Rep::validate() const {
  const Quiver& q = A->quiver();
  require(static_cast<int>(dims.size()) == q.vertex_count() &&
              static_cast<int>(act.size()) == q.arrow_count(),
          "BlockMismatch", "representation shape mismatch");
  for (int a = 0; a < q.arrow_count(); ++a)
    require(static_cast<int>(act[a].rows()) == dims[q.arrow(a).dst] &&
                static_cast<int>(act[a].cols()) == dims[q.arrow(a).src],
            "BlockMismatch", "arrow matrix shape mismatch");
  for (const auto& r : A->relations()) {
    int src = r.terms.front().path.src;
    int dst = r.terms.front().path.dst(q);
    Matrix m(A->field(), dims[dst], dims[src]);
    for (const auto& t : r.terms) m = m + path_action(t.path).scaled(t.coeff);
    require(m.is_zero(), "InconsistentRelation",
            "relations do not annihilate the given module");
  }
}

Rep zero_rep(const Algebra& A) {
  Rep r;
  r.A = &A;
  r.dims.assign(A.quiver().vertex_count(), 0);
  for (int a = 0; a < A.quiver().arrow_count(); ++a)
    r.act.push_back(Matrix(A.field(), 0, 0));
  return r;
}

Rep simple_rep(const Algebra& A, int v) {
  Rep r = zero_rep(A);
  r.dims[v] = 1;
  const Quiver& q = A.quiver();
  for (int a = 0; a < q.arrow_count(); ++a)
    r.act[a] = Matrix(A.field(), r.dims[q.arrow(a).dst], r.dims[q.arrow(a).src]);
  return r;
}

Rep projective_rep(const Algebra& A, int v) {
  // Basis of (A e_v)_u = basis paths v -> u, in algebra basis order.
  const Quiver& q = A.quiver();
  Rep r;
  r.A = &A;
  for (int u = 0; u < q.vertex_count(); ++u)
    r.dims.push_back(A.pair_dim(v, u));
  for (int a = 0; a < q.arrow_count(); ++a) {
    int i = q.arrow(a).src, j = q.arrow(a).dst;
    const auto& src_basis = A.basis_at(v, i);
    const auto& dst_basis = A.basis_at(v, j);
    Matrix m(A.field(), dst_basis.size(), src_basis.size());
    for (std::size_t c = 0; c < src_basis.size(); ++c) {
      AElt prod = A.mul(A.arrow_elt(a), A.from_basis(src_basis[c]));
      for (const auto& [id, coef] : prod.terms) {
        auto it = std::find(dst_basis.begin(), dst_basis.end(), id);
        require(it != dst_basis.end(), "BlockMismatch", "projective basis bookkeeping");
        m.set(it - dst_basis.begin(), c, coef);
      }
    }
    r.act.push_back(std::move(m));
  }
  return r;
}

Rep direct_sum(const Algebra& A, const std::vector<const Rep*>& parts) {
  const Quiver& q = A.quiver();
  Rep r;
  r.A = &A;
  r.dims.assign(q.vertex_count(), 0);
  for (const Rep* p : parts)
    for (int v = 0; v < q.vertex_count(); ++v) r.dims[v] += p->dims[v];
  for (int a = 0; a < q.arrow_count(); ++a) {
    int i = q.arrow(a).src, j = q.arrow(a).dst;
    Matrix m(A.field(), r.dims[j], r.dims[i]);
    int ro = 0, co = 0;
    for (const Rep* p : parts) {
      for (std::size_t x = 0; x < p->act[a].rows(); ++x)
        for (std::size_t y = 0; y < p->act[a].cols(); ++y)
          m.set(ro + x, co + y, p->act[a].at(x, y));
      ro += p->dims[j];
      co += p->dims[i];
    }
    r.act.push_back(std::move(m));
  }
  return r;
}

bool ModMap::is_zero() const {
  for (const auto& m : f)
    if (!m.is_zero()) return false;
  return true;
}

ModMap compose(const ModMap& g, const ModMap& f) {
  ModMap r;
  r.src = f.src;
  r.dst = g.dst;
  for (std::size_t v = 0; v < f.f.size(); ++v) r.f.push_back(g.f[v] * f.f[v]);
  return r;
}

ModMap map_add(const ModMap& a, const ModMap& b) {
  ModMap r;
  r.src = a.src;
  r.dst = a.dst;
  for (std::size_t v = 0; v < a.f.size(); ++v) r.f.push_back(a.f[v] + b.f[v]);
  return r;
}

ModMap map_scale(const Scalar& c, const ModMap& m) {
  ModMap r;
  r.src = m.src;
  r.dst = m.dst;
  for (const auto& mv : m.f) r.f.push_back(mv.scaled(c));
  return r;
}

bool map_equal(const ModMap& a, const ModMap& b) {
  if (a.f.size() != b.f.size()) return false;
  for (std::size_t v = 0; v < a.f.size(); ++v)
    if (!(a.f[v] == b.f[v])) return false;
  return true;
}

std::vector<ModMap> hom_basis(const Rep& M, const Rep& N) {
  const Algebra& A = *M.A;
  const Field& F = A.field();
  const Quiver& q = A.quiver();
  int nv = q.vertex_count();
  // Unknowns: entries of f_v (N.dims[v] x M.dims[v]), vertex-major, row-major.
  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + N.dims[v] * M.dims[v];
  int unknowns = offset[nv];
  auto idx = [&](int v, int r, int c) { return offset[v] + r * M.dims[v] + c; };

  std::vector<std::vector<Scalar>> rows;
  for (int a = 0; a < q.arrow_count(); ++a) {
    int i = q.arrow(a).src, j = q.arrow(a).dst;
    // f_j * M_a - N_a * f_i = 0
    for (int r = 0; r < N.dims[j]; ++r)
      for (int c = 0; c < M.dims[i]; ++c) {
        std::vector<Scalar> row(unknowns, Scalar(0));
        for (int k = 0; k < M.dims[j]; ++k)
          if (M.act[a].at(k, c) != 0)
            row[idx(j, r, k)] = F.add(row[idx(j, r, k)], M.act[a].at(k, c));
        for (int k = 0; k < N.dims[i]; ++k)
          if (N.act[a].at(r, k) != 0)
            row[idx(i, k, c)] = F.sub(row[idx(i, k, c)], N.act[a].at(r, k));
        rows.push_back(std::move(row));
      }
  }
  Matrix sys(F, rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < unknowns; ++c) sys.set(r, c, rows[r][c]);
  Matrix K = sys.kernel_basis();
  std::vector<ModMap> out;
  for (std::size_t b = 0; b < K.cols(); ++b) {
    ModMap m;
    m.src = &M;
    m.dst = &N;
    for (int v = 0; v < nv; ++v) {
      Matrix fv(F, N.dims[v], M.dims[v]);
      for (int r = 0; r < N.dims[v]; ++r)
        for (int c = 0; c < M.dims[v]; ++c) fv.set(r, c, K.at(idx(v, r, c), b));
      m.f.push_back(std::move(fv));
    }
    out.push_back(std::move(m));
  }
  return out;
}

int hom_dim(const Rep& M, const Rep& N) { return static_cast<int>(hom_basis(M, N).size()); }

SubWithMap kernel(const ModMap& f) {
  const Rep& M = *f.src;
  std::vector<EchelonSpan> spans = empty_spans(M);
  for (std::size_t v = 0; v < f.f.size(); ++v) {
    Matrix K = f.f[v].kernel_basis();
    for (std::size_t c = 0; c < K.cols(); ++c) spans[v].insert(K.column(c));
  }
  SubWithMap out = sub_from_spans(M, spans);
  out.map.src = nullptr;  // re-pointed by the caller once rep storage is stable
  return out;
}

SubWithMap image(const ModMap& f) {
  const Rep& N = *f.dst;
  std::vector<EchelonSpan> spans = empty_spans(N);
  for (std::size_t v = 0; v < f.f.size(); ++v)
    for (std::size_t c = 0; c < f.f[v].cols(); ++c) spans[v].insert(f.f[v].column(c));
  SubWithMap out = sub_from_spans(N, spans);
  out.map.src = nullptr;
  return out;
}

SubWithMap cokernel(const ModMap& f) {
  const Rep& N = *f.dst;
  std::vector<EchelonSpan> spans = empty_spans(N);
  for (std::size_t v = 0; v < f.f.size(); ++v)
    for (std::size_t c = 0; c < f.f[v].cols(); ++c) spans[v].insert(f.f[v].column(c));
  SubWithMap out = quotient_by_subspace(N, spans);
  out.map.src = &N;
  return out;
}

SubWithMap radical(const Rep& M) {
  const Quiver& q = M.A->quiver();
  std::vector<EchelonSpan> spans = empty_spans(M);
  for (int a = 0; a < q.arrow_count(); ++a) {
    int j = q.arrow(a).dst;
    for (std::size_t c = 0; c < M.act[a].cols(); ++c) spans[j].insert(M.act[a].column(c));
  }
  SubWithMap out = sub_from_spans(M, spans);
  out.map.src = nullptr;
  return out;
}

SubWithMap top(const Rep& M) {
  const Quiver& q = M.A->quiver();
  std::vector<EchelonSpan> spans = empty_spans(M);
  for (int a = 0; a < q.arrow_count(); ++a) {
    int j = q.arrow(a).dst;
    for (std::size_t c = 0; c < M.act[a].cols(); ++c) spans[j].insert(M.act[a].column(c));
  }
  SubWithMap out = quotient_by_subspace(M, spans);
  out.map.src = &M;
  return out;
}

SubWithMap quotient_by_generated(const Rep& M, const std::vector<Matrix>& gens) {
  std::vector<EchelonSpan> spans = empty_spans(M);
  std::vector<std::pair<int, std::vector<Scalar>>> work;
  for (std::size_t v = 0; v < gens.size(); ++v)
    for (std::size_t c = 0; c < gens[v].cols(); ++c) work.push_back({static_cast<int>(v), gens[v].column(c)});
  close_under_action(M, spans, work);
  SubWithMap out = quotient_by_subspace(M, spans);
  out.map.src = &M;
  return out;
}

SubWithMap trace_submodule(const Rep& X, const Rep& M) {
  std::vector<EchelonSpan> spans = empty_spans(M);
  for (const ModMap& h : hom_basis(X, M))
    for (std::size_t v = 0; v < h.f.size(); ++v)
      for (std::size_t c = 0; c < h.f[v].cols(); ++c) spans[v].insert(h.f[v].column(c));
  SubWithMap out = sub_from_spans(M, spans);
  out.map.src = nullptr;
  return out;
}

Rep dualize(const Rep& M, const Algebra& Aop) {
  const Quiver& q = M.A->quiver();
  const Quiver& rq = Aop.quiver();
  require(q.vertex_count() == rq.vertex_count() && q.arrow_count() == rq.arrow_count(),
          "MismatchedAlgebra", "dualize: algebras are not opposite to each other");
  Rep r;
  r.A = &Aop;
  r.dims = M.dims;
  for (int a = 0; a < rq.arrow_count(); ++a) {
    auto orig = q.find_arrow(rq.arrow(a).name);
    require(orig && q.arrow(*orig).src == rq.arrow(a).dst &&
                q.arrow(*orig).dst == rq.arrow(a).src,
            "MismatchedAlgebra", "dualize: arrow mismatch for '" + rq.arrow(a).name + "'");
    r.act.push_back(M.act[*orig].transposed());
  }
  return r;
}

ProjCover minimal_cover(const Rep& M) {
  const Algebra& A = *M.A;
  const Quiver& q = A.quiver();
  const Field& F = A.field();
  // Generators: standard basis vectors at the free coordinates of M_v mod rad.
  std::vector<EchelonSpan> rad = empty_spans(M);
  for (int a = 0; a < q.arrow_count(); ++a) {
    int j = q.arrow(a).dst;
    for (std::size_t c = 0; c < M.act[a].cols(); ++c) rad[j].insert(M.act[a].column(c));
  }
  ProjCover out;
  std::vector<std::pair<int, int>> gens;  // (vertex, coordinate)
  for (int v = 0; v < q.vertex_count(); ++v) {
    std::vector<bool> is_pivot(M.dims[v], false);
    for (auto p : rad[v].pivots()) is_pivot[p] = true;
    for (int c = 0; c < M.dims[v]; ++c)
      if (!is_pivot[c]) {
        out.summand_vertices.push_back(v);
        gens.push_back({v, c});
      }
  }
  // Assemble the projective ⊕ A e_{v_s} with per-vertex layout.
  Rep proj;
  proj.A = &A;
  proj.dims.assign(q.vertex_count(), 0);
  out.layout.assign(q.vertex_count(), {});
  for (std::size_t s = 0; s < out.summand_vertices.size(); ++s) {
    int v = out.summand_vertices[s];
    for (int u = 0; u < q.vertex_count(); ++u)
      for (int id : A.basis_at(v, u)) {
        out.layout[u].push_back({static_cast<int>(s), id});
        proj.dims[u]++;
      }
  }
  // Re-sort each vertex block by (summand, basis id) for a deterministic layout.
  for (int u = 0; u < q.vertex_count(); ++u)
    std::sort(out.layout[u].begin(), out.layout[u].end());
  for (int a = 0; a < q.arrow_count(); ++a) {
    int i = q.arrow(a).src, j = q.arrow(a).dst;
    Matrix m(F, proj.dims[j], proj.dims[i]);
    for (std::size_t c = 0; c < out.layout[i].size(); ++c) {
      auto [s, id] = out.layout[i][c];
      AElt prod = A.mul(A.arrow_elt(a), A.from_basis(id));
      for (const auto& [pid, coef] : prod.terms) {
        auto it = std::find(out.layout[j].begin(), out.layout[j].end(), std::make_pair(s, pid));
        require(it != out.layout[j].end(), "BlockMismatch", "cover layout bookkeeping");
        m.set(it - out.layout[j].begin(), c, coef);
      }
    }
    proj.act.push_back(std::move(m));
  }
  out.proj = std::move(proj);
  // Cover map: (s, basis path w: v -> u) |-> action(w) * gen_s.
  out.map.dst = &M;
  for (int u = 0; u < q.vertex_count(); ++u) {
    Matrix m(F, M.dims[u], out.proj.dims[u]);
    for (std::size_t c = 0; c < out.layout[u].size(); ++c) {
      auto [s, id] = out.layout[u][c];
      auto [v, coord] = gens[s];
      std::vector<Scalar> gen(M.dims[v], Scalar(0));
      gen[coord] = F.one();
      std::vector<Scalar> img = M.path_action(A.basis_path(id)).apply(gen);
      for (int r = 0; r < M.dims[u]; ++r) m.set(r, c, img[r]);
    }
    out.map.f.push_back(std::move(m));
  }
  return out;
}

int ext1_dim(const Rep& M, const Rep& N) {
  // 0 -> ΩM -> P0 -> M -> 0 gives Ext^1(M,N) = coker(Hom(P0,N) -> Hom(ΩM,N)).
  ProjCover cov = minimal_cover(M);
  cov.map.src = &cov.proj;
  SubWithMap ker = kernel(cov.map);
  ker.map.src = &ker.rep;
  int hom_omega = hom_dim(ker.rep, N);
  if (hom_omega == 0) return 0;
  std::vector<ModMap> hp = hom_basis(cov.proj, N);
  // Flatten φ∘incl into coordinates of Hom(ΩM, N).
  int nv = M.A->quiver().vertex_count();
  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + N.dims[v] * ker.rep.dims[v];
  EchelonSpan span(M.A->field(), offset[nv]);
  std::size_t rank = 0;
  for (const ModMap& phi : hp) {
    ModMap restr = compose(phi, ker.map);
    std::vector<Scalar> vec(offset[nv], Scalar(0));
    for (int v = 0; v < nv; ++v)
      for (std::size_t r = 0; r < restr.f[v].rows(); ++r)
        for (std::size_t c = 0; c < restr.f[v].cols(); ++c)
          vec[offset[v] + r * restr.f[v].cols() + c] = restr.f[v].at(r, c);
    if (span.insert(vec)) ++rank;
  }
  return hom_omega - static_cast<int>(rank);
}

}  // namespace qw
