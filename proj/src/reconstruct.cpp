#include "qhw/reconstruct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "qhw/common.hpp"

namespace qw {

ModelPresentation model_presentation(const Model& M, int max_arity) {
  const DgEnd& D = M.dg();
  const Algebra& A = D.algebra();
  const int nb = D.block_count();
  if (max_arity <= 0) max_arity = std::min(A.nilpotency() + 1, 8);

  ModelPresentation out;
  for (int b = 0; b < nb; ++b) {
    out.quiver.add_vertex("b" + std::to_string(b + 1));
  }

  // One arrow per Ext^1 class: a class of maps R_b -> R_a is an element of
  // Ext^1(M_b, M_a), i.e. an arrow b -> a of the dual quiver.
  std::vector<std::vector<int>> pair_count(nb, std::vector<int>(nb, 0));
  const auto& h1 = M.hids(1);
  std::map<int, int> arrow_by_gid;
  for (std::size_t i = 0; i < h1.size(); ++i) {
    const auto& inf = M.info(h1[i]);
    std::ostringstream name;
    name << "u" << (inf.blk_b + 1) << "_" << (inf.blk_a + 1);
    if (++pair_count[inf.blk_b][inf.blk_a] > 1) {
      name << "_" << pair_count[inf.blk_b][inf.blk_a];
    }
    int aid = out.quiver.add_arrow(name.str(), inf.blk_b, inf.blk_a);
    out.arrow_gid.push_back(h1[i]);
    arrow_by_gid[h1[i]] = aid;
  }

  // One relation per Ext^2 class rho: scan chained tuples of Ext^1 classes
  // whose composite lands in rho's component and read off the coefficient of
  // rho in m_n; the word applies the last argument's arrow first.
  for (int gid2 : M.hids(2)) {
    const auto& rho = M.info(gid2);
    Relation rel;
    std::vector<int> tuple;
    std::function<void()> dfs = [&]() {
      const int n = static_cast<int>(tuple.size());
      if (n >= 2 && M.info(tuple.back()).blk_b == rho.blk_b) {
        bool contributes = false;
        Scalar coeff(0);
        for (const auto& [g, c] : M.m(tuple)) {
          if (g == gid2) {
            coeff = c;
            contributes = true;
          }
        }
        if (contributes) {
          require(M.trusted_tuple(tuple), "TruncationTooLow",
                  "a contributing product lies outside the trusted window; "
                  "raise the resolution degree");
          Path w{rho.blk_b, {}};
          for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) {
            w.arrows.push_back(arrow_by_gid.at(*it));
          }
          rel.terms.push_back(RelTerm{coeff, w});
        }
      }
      if (n == max_arity) return;
      for (int g : h1) {
        if (tuple.empty()) {
          if (M.info(g).blk_a != rho.blk_a) continue;
        } else if (M.info(tuple.back()).blk_b != M.info(g).blk_a) {
          continue;
        }
        tuple.push_back(g);
        dfs();
        tuple.pop_back();
      }
    };
    dfs();
    require(!rel.terms.empty(), "TruncationTooLow",
            "an Ext^2 class produced no relation within the arity bound");
    out.relations.push_back(std::move(rel));
  }
  return out;
}

ReconstructionResult koszul_reconstruct(const Model& M, int max_arity) {
  const DgEnd& D = M.dg();
  const Algebra& A = D.algebra();
  const Field& F = A.field();
  const int nb = D.block_count();
  require(nb == A.quiver().vertex_count(), "MismatchedAlgebra",
          "reconstruction expects one block per vertex, the simple modules");
  for (int b = 0; b < nb; ++b) {
    const Rep& tgt = D.block(b).target;
    for (int v = 0; v < nb; ++v) {
      require(tgt.dims[v] == (v == b ? 1 : 0), "MismatchedAlgebra",
              "block " + std::to_string(b + 1) + " is not the simple module");
    }
  }
  if (max_arity <= 0) max_arity = std::min(A.nilpotency() + 1, 8);

  ModelPresentation pres = model_presentation(M, max_arity);
  ReconstructionResult out;
  out.quiver = Quiver();
  for (int v = 0; v < nb; ++v) out.quiver.add_vertex(A.quiver().vertex_name(v));
  for (int a = 0; a < pres.quiver.arrow_count(); ++a) {
    const auto& ar = pres.quiver.arrow(a);
    out.quiver.add_arrow(ar.name, ar.src, ar.dst);
  }
  out.relations = pres.relations;

  try {
    out.algebra = build_algebra(out.quiver, out.relations, F,
                                std::max(64, A.nilpotency() + 2));
  } catch (const QwError& e) {
    if (std::string(e.code()) == "InfiniteDimensional") {
      fail("ReconstructionInfinite",
           "the reconstructed presentation is not finite-dimensional "
           "(arity bound " +
               std::to_string(max_arity) + ")");
    }
    throw;
  }

  out.dims_match = true;
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < nb; ++j) {
      const int d0 = A.pair_dim(i, j);
      const int d1 = out.algebra.pair_dim(i, j);
      out.dim_table.emplace_back(i, j, d0, d1);
      if (d0 != d1) out.dims_match = false;
    }
  }
  return out;
}

}  // namespace qw
