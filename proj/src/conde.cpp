#include "qhw/conde.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qhw/common.hpp"

namespace qw {

namespace {

void require_qh(const StandardSystem& S, const char* who) {
  QhDiagnosis d = is_quasi_hereditary(S);
  if (!d.qh) {
    std::string msg = std::string(who) + " requires a quasi-hereditary input";
    for (const auto& f : d.failures) msg += "; " + f;
    fail("NotQuasiHereditary", msg);
  }
}

// One evaluation pass along a fixed linear extension.  Every term only
// involves weights strictly below i, so the order of evaluation within the
// extension is immaterial — two different extensions are still run by the
// caller as a cross-check on that claim.
std::vector<long long> conde_pass(const StandardSystem& S,
                                  const std::vector<int>& order) {
  const int n = S.poset.size();
  std::vector<long long> ell(n, 0);
  for (int i : order) {
    long long v = 1;
    for (int j = 0; j < n; ++j) {
      if (!S.poset.lt(j, i)) continue;
      long long inner = 0;
      for (int k = 0; k < n; ++k) {
        if (!S.poset.leq(k, j)) continue;
        inner += ell[k] * (long long)S.nabla_comp[j][k];
      }
      v += inner * (long long)S.hom_dd[j][i];
      v -= ell[j] * (long long)S.delta_comp[i][j];
    }
    ell[i] = v;
  }
  return ell;
}

}  // namespace

std::vector<long long> conde_multiplicities(const StandardSystem& S) {
  require_qh(S, "conde_multiplicities");
  std::vector<long long> a = conde_pass(S, S.poset.linear_extension(false));
  std::vector<long long> b = conde_pass(S, S.poset.linear_extension(true));
  if (a != b) {
    throw std::logic_error(
        "multiplicity recursion depends on the linear extension");
  }
  for (int i = 0; i < (int)a.size(); ++i) {
    if (a[i] <= 0) {
      std::ostringstream msg;
      msg << "multiplicity recursion produced a non-positive value " << a[i]
          << " at vertex " << S.A->quiver().vertex_name(i);
      throw std::logic_error(msg.str());
    }
  }
  return a;
}

std::vector<long long> conde_poset(const Poset& poset) {
  const int n = poset.size();
  // Evaluate minimal elements first: process by increasing number of
  // predecessors, which is a linear extension for any finite poset.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int pa = 0, pb = 0;
    for (int v = 0; v < n; ++v) {
      pa += poset.lt(v, a) ? 1 : 0;
      pb += poset.lt(v, b) ? 1 : 0;
    }
    return pa < pb;
  });
  std::vector<long long> ell(n, 0);
  for (int x : order) {
    long long v = 1;
    for (int w = 0; w < n; ++w) {
      if (!poset.lt(w, x)) continue;
      for (int u = 0; u < n; ++u) {
        if (poset.lt(u, w)) v += ell[u];
      }
    }
    ell[x] = v;
  }
  return ell;
}

Poset dihedral_poset(int height) {
  require(height >= 1, "ParseError", "dihedral poset needs height >= 1");
  // Index 0 = bottom, then 2h-1 and 2h for height h in 1..H-1, last = top.
  const int n = 2 * height;
  auto idx_height = [&](int i) {
    if (i == 0) return 0;
    if (i == n - 1) return height;
    return (i + 1) / 2;
  };
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (idx_height(i) < idx_height(j)) rels.push_back({i, j});
    }
  }
  return transitive_closure_of(n, rels);
}

bool conde_criterion(const StandardSystem& S) {
  require_qh(S, "conde_criterion");
  const Algebra& A = *S.A;
  Algebra Aop = opposite_algebra(A);
  StandardSystem Sop = standard_modules(Aop, S.poset);
  for (const Rep& D : S.delta) {
    Rep radD = radical(D).rep;
    if (radD.is_zero()) continue;
    Rep dual = dualize(radD, Aop);
    DeltaFiltration f = delta_filtration(Sop, dual, false);
    if (!f.ok) return false;
  }
  return true;
}

}  // namespace qw
