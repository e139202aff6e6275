#include "corpus.hpp"
#include "doctest.h"
#include "qhw/rep.hpp"

using namespace qw;

TEST_SUITE("rep") {

TEST_CASE("simples and projectives") {
  Algebra A = corpus::lin_a3_monomial();
  Rep L1 = simple_rep(A, 0);
  CHECK(L1.dims == std::vector<int>{1, 0, 0});
  CHECK(L1.total_dim() == 1);
  CHECK(L1.validate());

  // With the length-2 composite killed, P1 only reaches vertex 2.
  Rep P1 = projective_rep(A, 0);
  CHECK(P1.dims == std::vector<int>{1, 1, 0});
  CHECK(P1.validate());

  Algebra H = corpus::lin_hereditary(3);
  Rep HP1 = projective_rep(H, 0);
  CHECK(HP1.dims == std::vector<int>{1, 1, 1});
}

TEST_CASE("validate detects a relation violation") {
  Algebra A = corpus::lin_a3_monomial();
  const Field& F = A.field();
  Rep M{&A, {1, 1, 1}, {}};
  M.act.resize(A.quiver().arrow_count());
  // Both arrows act by the identity scalar; then a2*a1 acts by 1, but the
  // relation says it must act by 0.
  for (int a = 0; a < A.quiver().arrow_count(); ++a) {
    Matrix m(F, 1, 1);
    m.set(0, 0, F.one());
    M.act[a] = m;
  }
  CHECK(!M.validate());
}

TEST_CASE("hom spaces respect direction") {
  Algebra H = corpus::lin_hereditary(3);
  Rep P1 = projective_rep(H, 0);
  Rep P2 = projective_rep(H, 1);
  CHECK(hom_dim(P2, P1) == 1);  // P2 embeds as the radical-column of P1
  CHECK(hom_dim(P1, P2) == 0);
  CHECK(hom_dim(P1, P1) == 1);
}

TEST_CASE("radical, top, kernel, image, cokernel") {
  Algebra H = corpus::lin_hereditary(3);
  Rep P1 = projective_rep(H, 0);

  SubWithMap rad = radical(P1);
  CHECK(rad.rep.dims == std::vector<int>{0, 1, 1});
  SubWithMap tp = top(P1);
  CHECK(tp.rep.dims == std::vector<int>{1, 0, 0});

  Rep P2 = projective_rep(H, 1);
  auto maps = hom_basis(P2, P1);
  REQUIRE(maps.size() == 1);
  ModMap f = maps[0];
  f.src = &P2;
  f.dst = &P1;
  SubWithMap im = image(f);
  CHECK(im.rep.dims == std::vector<int>{0, 1, 1});
  SubWithMap ker = kernel(f);
  CHECK(ker.rep.total_dim() == 0);
  SubWithMap coker = cokernel(f);
  CHECK(coker.rep.dims == std::vector<int>{1, 0, 0});
}

TEST_CASE("direct sums and trace submodules") {
  Algebra H = corpus::lin_hereditary(3);
  Rep P1 = projective_rep(H, 0);
  Rep P2 = projective_rep(H, 1);
  std::vector<const Rep*> parts{&P1, &P2};
  Rep D = direct_sum(H, parts);
  CHECK(D.dims == std::vector<int>{1, 2, 2});
  CHECK(D.validate());

  // The trace of P2 in P1 is exactly the radical.
  Rep T = trace_submodule(P2, P1);
  CHECK(T.dims == std::vector<int>{0, 1, 1});
}

TEST_CASE("quotients and duals") {
  Algebra H = corpus::lin_hereditary(3);
  Rep P1 = projective_rep(H, 0);
  SubWithMap rad = radical(P1);
  rad.map.src = &rad.rep;
  rad.map.dst = &P1;

  // Quotient by the radical generators (columns of the inclusion matrices)
  // leaves the simple top.
  SubWithMap q = quotient_by_generated(P1, rad.map.f);
  CHECK(q.rep.dims == std::vector<int>{1, 0, 0});

  // Dualizing a simple gives the simple over the opposite algebra.
  Algebra Hop = opposite_algebra(H);
  Rep L3 = simple_rep(H, 2);
  Rep DL3 = dualize(L3, Hop);
  CHECK(DL3.dims == std::vector<int>{0, 0, 1});
  CHECK(DL3.validate());
}

TEST_CASE("path and element actions agree with composition") {
  Algebra B = corpus::biserial();
  Rep P1 = projective_rep(B, 0);
  // Element action of normal_form(de*ga*al) equals action of path be*al.
  AElt x = B.normal_form(Path{0, {0, 2, 3}});
  Matrix via_elt = P1.elt_action(x);
  Matrix via_path = P1.path_action(Path{0, {0, 1}});
  CHECK((via_elt - via_path).is_zero());
}

}  // TEST_SUITE
