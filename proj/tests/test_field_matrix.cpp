#include "doctest.h"
#include "qhw/matrix.hpp"

using namespace qw;

TEST_SUITE("field_matrix") {

TEST_CASE("rational field arithmetic") {
  Field F = Field::rationals();
  CHECK(F.characteristic() == 0);
  CHECK(F.add(Scalar(1) / 2, Scalar(1) / 3) == Scalar(5) / 6);
  CHECK(F.mul(Scalar(2) / 3, Scalar(3) / 4) == Scalar(1) / 2);
  CHECK(F.inv(Scalar(-2)) == Scalar(-1) / 2);
  CHECK(F.is_zero(F.sub(F.one(), F.one())));
  CHECK(F.parse_scalar("3/4") == Scalar(3) / 4);
  CHECK(F.to_string(Scalar(-5) / 10) == "-1/2");
}

TEST_CASE("prime field arithmetic is mod p") {
  Field F = Field::prime(5);
  CHECK(F.characteristic() == 5);
  CHECK(F.from_long(7) == Scalar(2));
  CHECK(F.add(Scalar(3), Scalar(4)) == Scalar(2));
  CHECK(F.neg(Scalar(1)) == Scalar(4));
  // 2 * 3 = 6 = 1, so 3 is the inverse of 2.
  CHECK(F.inv(Scalar(2)) == Scalar(3));
  CHECK(F.is_zero(F.from_long(10)));
  CHECK(F.div(Scalar(1), Scalar(4)) == Scalar(4));
}

TEST_CASE("matrix rank, rref, kernel") {
  Field F = Field::rationals();
  Matrix a(F, 2, 3);
  a.set(0, 0, 1);
  a.set(0, 1, 2);
  a.set(0, 2, 3);
  a.set(1, 0, 2);
  a.set(1, 1, 4);
  a.set(1, 2, 6);
  CHECK(a.rank() == 1);

  Matrix k = a.kernel_basis();
  CHECK(k.cols() == 2);  // nullity = 3 - 1
  // Every kernel column is annihilated.
  for (std::size_t c = 0; c < k.cols(); ++c) {
    std::vector<Scalar> img = a.apply(k.column(c));
    for (const Scalar& x : img) CHECK(x == 0);
  }

  Matrix b = a;
  auto pivots = b.rref();
  CHECK(pivots == std::vector<std::size_t>{0});
  CHECK(b.at(0, 1) == Scalar(2));
  CHECK(b.at(1, 0) == Scalar(0));
}

TEST_CASE("rank over a prime field differs from the rational rank") {
  // det = 1*1 - 2*3 = -5: invertible over Q, singular over F5.
  Matrix q(Field::rationals(), 2, 2);
  q.set(0, 0, 1);
  q.set(0, 1, 2);
  q.set(1, 0, 3);
  q.set(1, 1, 1);
  CHECK(q.rank() == 2);

  Matrix p(Field::prime(5), 2, 2);
  p.set(0, 0, 1);
  p.set(0, 1, 2);
  p.set(1, 0, 3);
  p.set(1, 1, 1);
  CHECK(p.rank() == 1);
}

TEST_CASE("solve and inverse") {
  Field F = Field::rationals();
  Matrix a(F, 2, 2);
  a.set(0, 0, 2);
  a.set(1, 1, 4);
  auto sol = a.solve({3, 2});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Scalar(3) / 2);
  CHECK((*sol)[1] == Scalar(1) / 2);

  Matrix inv = a.inverse();
  CHECK((a * inv) == Matrix::identity(F, 2));

  // Inconsistent system.
  Matrix z(F, 2, 1);
  z.set(0, 0, 1);
  z.set(1, 0, 2);
  CHECK(!z.solve({1, 3}).has_value());
}

TEST_CASE("stacking and blocks") {
  Field F = Field::rationals();
  Matrix a = Matrix::identity(F, 2);
  Matrix b(F, 2, 1);
  b.set(0, 0, 5);
  Matrix h = Matrix::hstack({a, b});
  CHECK(h.rows() == 2);
  CHECK(h.cols() == 3);
  CHECK(h.at(0, 2) == Scalar(5));
  Matrix v = Matrix::vstack({a, a});
  CHECK(v.rows() == 4);
  CHECK(v.cols() == 2);
  CHECK(v.submatrix(2, 0, 2, 2) == a);
  CHECK(h.transposed().rows() == 3);
}

TEST_CASE("echelon span tracks membership deterministically") {
  Field F = Field::rationals();
  EchelonSpan sp(F, 3);
  CHECK(sp.insert({1, 1, 0}));
  CHECK(!sp.insert({2, 2, 0}));  // dependent
  CHECK(sp.insert({0, 0, 3}));
  CHECK(sp.size() == 2);
  CHECK(sp.contains({1, 1, 3}));
  CHECK(!sp.contains({1, 0, 0}));
  // Residue of a dependent vector vanishes.
  for (const Scalar& x : sp.residue({3, 3, 3})) CHECK(x == 0);
  CHECK(sp.pivots().size() == 2);
}

}  // TEST_SUITE
