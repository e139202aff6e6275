#include "corpus.hpp"
#include "doctest.h"

using namespace qw;

namespace {

std::string thrown_code(const std::string& text) {
  try {
    corpus::from_text(text);
  } catch (const QwError& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("hereditary linear A3 basis") {
  Algebra A = corpus::lin_hereditary(3);
  CHECK(A.dim() == 6);
  CHECK(A.nilpotency() == 3);
  CHECK(A.length_graded());
  // One path per ordered pair i <= j.
  CHECK(A.pair_dim(0, 2) == 1);
  CHECK(A.pair_dim(2, 0) == 0);
  CHECK(A.pair_dim(1, 1) == 1);

  // Composition convention: mul(x, y) = "first y, then x".
  AElt a1 = A.arrow_elt(0);  // 1 -> 2
  AElt a2 = A.arrow_elt(1);  // 2 -> 3
  AElt composite = A.mul(a2, a1);
  CHECK(composite.src == 0);
  CHECK(composite.dst == 2);
  AElt nf = A.normal_form(Path{0, {0, 1}});
  CHECK(A.add(composite, A.scale(Scalar(-1), nf)).is_zero());
}

TEST_CASE("monomial relation kills the composite") {
  Algebra A = corpus::lin_a3_monomial();
  CHECK(A.dim() == 5);
  CHECK(A.pair_dim(0, 2) == 0);
  CHECK(A.normal_form(Path{0, {0, 1}}).is_zero());
  AElt a1 = A.arrow_elt(0), a2 = A.arrow_elt(1);
  CHECK(A.mul(a2, a1).is_zero());
}

TEST_CASE("biserial example: dimension and relation rewriting") {
  Algebra A = corpus::biserial();
  CHECK(A.dim() == 15);
  CHECK(!A.length_graded());  // be*al = de*ga*al mixes path lengths
  // Arrows: al=0, be=1, ga=2, de=3, ep=4.
  AElt lhs = A.normal_form(Path{0, {0, 1}});     // be after al
  AElt rhs = A.normal_form(Path{0, {0, 2, 3}});  // de after ga after al
  CHECK(!lhs.is_zero());
  CHECK(A.add(lhs, A.scale(Scalar(-1), rhs)).is_zero());
  // Second relation: ep*be = 0.
  CHECK(A.normal_form(Path{1, {1, 4}}).is_zero());
  // But ep*de is a nonzero path 3 -> 5.
  CHECK(!A.normal_form(Path{2, {3, 4}}).is_zero());
}

TEST_CASE("truncated polynomial algebra") {
  Algebra A = corpus::truncated_poly(3);
  CHECK(A.dim() == 3);
  CHECK(A.nilpotency() == 3);
  CHECK(!A.normal_form(Path{0, {0, 0}}).is_zero());
  CHECK(A.normal_form(Path{0, {0, 0, 0}}).is_zero());
  CHECK(A.unit_basis_id(0) == 0);  // deglex: the unit path comes first
}

TEST_CASE("semisimple, prime field, declared order") {
  Algebra S = corpus::semisimple(3);
  CHECK(S.dim() == 3);
  CHECK(S.length_graded());

  Algebra A5 = corpus::f5_lin_a3();
  CHECK(A5.field().characteristic() == 5);
  CHECK(A5.dim() == 5);

  Algebra M = corpus::multi_arrow(1, 2);
  REQUIRE(M.declared_order().has_value());
  const Poset& p = *M.declared_order();
  CHECK(p.lt(1, 2));  // 2 < 3 in file names
  CHECK(p.lt(2, 0));  // 3 < 1
  CHECK(!p.lt(0, 1));
}

TEST_CASE("construction rejects bad presentations") {
  CHECK(thrown_code("field Q\nvertex 1\narrow t : 1 -> 1\n") == "InfiniteDimensional");
  CHECK(thrown_code("field Q\nvertex 1 2\narrow a : 1 -> 2\nrelation a\n") == "NonAdmissible");
  CHECK(thrown_code("field Q\nvertex 1 2 3 4\n"
                    "arrow a : 1 -> 2\narrow b : 2 -> 3\n"
                    "arrow c : 1 -> 4\narrow d : 4 -> 2\n"
                    "relation b*a - d*c\n") == "InconsistentRelation");
}

TEST_CASE("opposite algebra reverses arrows and keeps dimensions") {
  Algebra A = corpus::biserial();
  Algebra B = opposite_algebra(A);
  CHECK(B.dim() == A.dim());
  const Arrow& al = A.quiver().arrow(0);
  const Arrow& alop = B.quiver().arrow(0);
  CHECK(al.name == alop.name);
  CHECK(al.src == alop.dst);
  CHECK(al.dst == alop.src);
  for (int i = 0; i < A.quiver().vertex_count(); ++i)
    for (int j = 0; j < A.quiver().vertex_count(); ++j)
      CHECK(A.pair_dim(i, j) == B.pair_dim(j, i));
}

TEST_CASE("poset closure and validation") {
  Poset p = Poset::from_covers(3, {{0, 1}, {1, 2}});
  CHECK(p.lt(0, 2));  // transitive closure
  CHECK(p.leq(1, 1));
  CHECK(p.comparable(0, 0));
  CHECK_THROWS_AS(Poset::from_covers(2, {{0, 1}, {1, 0}}), QwError);

  Poset t = Poset::total_order({2, 0, 1});
  CHECK(t.lt(2, 0));
  CHECK(t.lt(0, 1));
  CHECK(t.maximal_elements() == std::vector<int>{1});
  CHECK(t.linear_extension() == std::vector<int>{2, 0, 1});
}

}  // TEST_SUITE
