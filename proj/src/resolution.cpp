#include "qhw/resolution.hpp"

#include <algorithm>

namespace qw {

AlgMat zero_alg_mat(const Algebra& A, const std::vector<Summand>& dom,
                    const std::vector<Summand>& cod) {
  AlgMat m;
  m.dom = dom;
  m.cod = cod;
  m.entries.assign(cod.size(), {});
  for (std::size_t s = 0; s < cod.size(); ++s)
    for (std::size_t t = 0; t < dom.size(); ++t)
      m.entries[s].push_back(A.zero(cod[s].vertex, dom[t].vertex));
  return m;
}

AlgMat compose_mats(const Algebra& A, const AlgMat& F, const AlgMat& G) {
  require(F.dom.size() == G.cod.size(), "BlockMismatch", "composing mismatched AlgMats");
  AlgMat r = zero_alg_mat(A, G.dom, F.cod);
  for (std::size_t s = 0; s < F.cod.size(); ++s)
    for (std::size_t u = 0; u < G.dom.size(); ++u) {
      AElt acc = A.zero(F.cod[s].vertex, G.dom[u].vertex);
      for (std::size_t t = 0; t < F.dom.size(); ++t) {
        if (G.entries[t][u].is_zero() || F.entries[s][t].is_zero()) continue;
        acc = A.add(acc, A.mul(G.entries[t][u], F.entries[s][t]));
      }
      r.entries[s][u] = std::move(acc);
    }
  return r;
}

bool alg_mat_zero(const AlgMat& m) {
  for (const auto& row : m.entries)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

ProjTermInfo projective_term(const Algebra& A, const std::vector<Summand>& sums) {
  const Quiver& q = A.quiver();
  ProjTermInfo out;
  out.sums = sums;
  out.rep.A = &A;
  out.rep.dims.assign(q.vertex_count(), 0);
  out.layout.assign(q.vertex_count(), {});
  for (std::size_t s = 0; s < sums.size(); ++s)
    for (int u = 0; u < q.vertex_count(); ++u)
      for (int id : A.basis_at(sums[s].vertex, u)) out.layout[u].push_back({static_cast<int>(s), id});
  for (int u = 0; u < q.vertex_count(); ++u) {
    std::sort(out.layout[u].begin(), out.layout[u].end());
    out.rep.dims[u] = static_cast<int>(out.layout[u].size());
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    int i = q.arrow(a).src, j = q.arrow(a).dst;
    Matrix m(A.field(), out.rep.dims[j], out.rep.dims[i]);
    for (std::size_t c = 0; c < out.layout[i].size(); ++c) {
      auto [s, id] = out.layout[i][c];
      AElt prod = A.mul(A.arrow_elt(a), A.from_basis(id));
      for (const auto& [pid, coef] : prod.terms) {
        auto it = std::find(out.layout[j].begin(), out.layout[j].end(), std::make_pair(s, pid));
        require(it != out.layout[j].end(), "BlockMismatch", "projective term layout");
        m.set(it - out.layout[j].begin(), c, coef);
      }
    }
    out.rep.act.push_back(std::move(m));
  }
  return out;
}

ModMap realize(const Algebra& A, const AlgMat& F, const ProjTermInfo& domain,
               const ProjTermInfo& codomain) {
  const Quiver& q = A.quiver();
  ModMap out;
  out.src = &domain.rep;
  out.dst = &codomain.rep;
  for (int u = 0; u < q.vertex_count(); ++u) {
    Matrix m(A.field(), codomain.rep.dims[u], domain.rep.dims[u]);
    for (std::size_t c = 0; c < domain.layout[u].size(); ++c) {
      auto [t, id] = domain.layout[u][c];
      AElt w = A.from_basis(id);  // basis path w_t -> u
      for (std::size_t s = 0; s < codomain.sums.size(); ++s) {
        const AElt& entry = F.entries[s][t];
        if (entry.is_zero()) continue;
        AElt val = A.mul(w, entry);  // in e_u A e_{v_s}
        for (const auto& [pid, coef] : val.terms) {
          auto it = std::find(codomain.layout[u].begin(), codomain.layout[u].end(),
                              std::make_pair(static_cast<int>(s), pid));
          require(it != codomain.layout[u].end(), "BlockMismatch", "realize layout");
          m.set(it - codomain.layout[u].begin(), c,
                A.field().add(m.at(it - codomain.layout[u].begin(), c), coef));
        }
      }
    }
    out.f.push_back(std::move(m));
  }
  return out;
}

Resolution minimal_resolution(const Algebra& A, const Rep& target, int max_degree) {
  const Quiver& q = A.quiver();
  const Field& F = A.field();
  Resolution R;
  R.A = &A;
  R.target = target;
  R.max_degree = max_degree;
  R.graded = A.length_graded();

  // Degree-0 term from the minimal cover.
  ProjCover cover = minimal_cover(target);
  std::vector<Summand> sums0;
  for (int v : cover.summand_vertices) sums0.push_back({v, 0});
  R.terms.push_back(projective_term(A, sums0));
  R.d.push_back(AlgMat{});  // placeholder at index 0
  R.aug = cover.map;
  R.aug.src = &R.terms[0].rep;
  R.aug.dst = &R.target;

  // Current boundary map realized on representations; its kernel feeds the
  // next cover.  Kernel vectors live in the coordinates of terms[k].
  ModMap boundary = R.aug;
  for (int k = 1; k <= max_degree; ++k) {
    SubWithMap ker = kernel(boundary);
    if (ker.rep.total_dim() == 0) {
      R.complete = true;
      return R;
    }
    ker.rep.A = &A;
    // Cover of the kernel: free coordinates modulo its radical.
    ProjCover kcov = minimal_cover(ker.rep);
    const ProjTermInfo& prev = R.terms.back();
    // New summands and the boundary entries: each generator is a vector in
    // terms[k-1] coordinates; decompose per summand into algebra elements.
    std::vector<Summand> sums;
    std::vector<std::vector<AElt>> gen_entries;  // [gen][s over prev.sums]
    // Identify the generator vectors: columns of ker.map composed with the
    // cover generators.  kcov.map: kcov.proj -> ker.rep at identity layout.
    // Generator g sits at the coordinate of its (vertex, free coord) pair;
    // we read it off via kcov.map applied to the unit vector of summand g's
    // generator position, i.e. the column of ker.map at that position --
    // minimal_cover picked standard-basis coordinates, so recover them:
    // generator s of kcov corresponds to a free coordinate c_s in ker.rep at
    // vertex v_s.  ker.map column c_s is the vector in prev coordinates.
    {
      // Recompute the free coordinates exactly as minimal_cover did.
      std::vector<EchelonSpan> rad;
      for (int v = 0; v < q.vertex_count(); ++v) rad.push_back(EchelonSpan(F, ker.rep.dims[v]));
      for (int a = 0; a < q.arrow_count(); ++a) {
        int j = q.arrow(a).dst;
        for (std::size_t c = 0; c < ker.rep.act[a].cols(); ++c)
          rad[j].insert(ker.rep.act[a].column(c));
      }
      int gi = 0;
      for (int v = 0; v < q.vertex_count(); ++v) {
        std::vector<bool> is_pivot(ker.rep.dims[v], false);
        for (auto p : rad[v].pivots()) is_pivot[p] = true;
        for (int c = 0; c < ker.rep.dims[v]; ++c) {
          if (is_pivot[c]) continue;
          require(gi < static_cast<int>(kcov.summand_vertices.size()) &&
                      kcov.summand_vertices[gi] == v,
                  "BlockMismatch", "cover generator bookkeeping");
          // Vector in prev coordinates:
          std::vector<std::vector<Scalar>> pervertex(q.vertex_count());
          for (int u = 0; u < q.vertex_count(); ++u)
            pervertex[u].assign(prev.rep.dims[u], Scalar(0));
          for (int r = 0; r < prev.rep.dims[v]; ++r) pervertex[v][r] = ker.map.f[v].at(r, c);
          // Decompose into AlgMat entries and detect homogeneity for grading.
          std::vector<AElt> row;
          int degree = -1;
          bool homogeneous = true;
          for (std::size_t s = 0; s < prev.sums.size(); ++s)
            row.push_back(A.zero(prev.sums[s].vertex, v));
          for (std::size_t pos = 0; pos < prev.layout[v].size(); ++pos) {
            const Scalar& coef = pervertex[v][pos];
            if (coef == 0) continue;
            auto [s, id] = prev.layout[v][pos];
            row[s] = A.add(row[s], A.scale(coef, A.from_basis(id)));
            int dg = prev.sums[s].shift + A.basis_path(id).length();
            if (degree < 0)
              degree = dg;
            else if (degree != dg)
              homogeneous = false;
          }
          if (!homogeneous) R.graded = false;
          sums.push_back({v, R.graded && degree >= 0 ? degree : 0});
          gen_entries.push_back(std::move(row));
          ++gi;
        }
      }
    }
    AlgMat dmat;
    dmat.cod = prev.sums;
    dmat.dom = sums;
    dmat.entries.assign(prev.sums.size(), {});
    for (std::size_t s = 0; s < prev.sums.size(); ++s)
      for (std::size_t t = 0; t < sums.size(); ++t) dmat.entries[s].push_back(gen_entries[t][s]);
    R.terms.push_back(projective_term(A, sums));
    R.d.push_back(std::move(dmat));
    if (k >= 2)
      require(alg_mat_zero(compose_mats(A, R.d[k - 1], R.d[k])), "BlockMismatch",
              "resolution differential does not square to zero");
    boundary = realize(A, R.d[k], R.terms[k], R.terms[k - 1]);
    boundary.src = &R.terms[k].rep;
    boundary.dst = &R.terms[k - 1].rep;
  }
  // One more kernel to decide completeness at the truncation edge.
  SubWithMap ker = kernel(boundary);
  R.complete = (ker.rep.total_dim() == 0);
  return R;
}

std::vector<std::vector<int>> resolution_summand_counts(const Resolution& R) {
  std::vector<std::vector<int>> out;
  int nv = R.A->quiver().vertex_count();
  for (const auto& t : R.terms) {
    std::vector<int> cnt(nv, 0);
    for (const auto& s : t.sums) cnt[s.vertex]++;
    out.push_back(cnt);
  }
  return out;
}

int ext_dim_via_resolution(const Resolution& R, int degree, int vertex) {
  if (degree > R.length()) return 0;
  int c = 0;
  for (const auto& s : R.terms[degree].sums)
    if (s.vertex == vertex) ++c;
  return c;
}

}  // namespace qw
