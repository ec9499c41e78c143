// Exact linear algebra: elimination, kernels, characteristic polynomials,
// and canonical subspace arithmetic.

#include "doctest.h"

#include "core/matrix.hpp"

using namespace liegrade;

namespace {

CMat cmat(long rows, long cols, std::initializer_list<long> vals) {
  CMat m(rows, cols);
  auto it = vals.begin();
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) m(i, j) = Cyclo::from_long(*it++);
  return m;
}

}  // namespace

TEST_CASE("rank and row space canonical form") {
  CMat m = cmat(3, 3, {1, 2, 3, 2, 4, 6, 0, 1, 1});
  CHECK(rank_of(m) == 2);
  CMat rs = row_space(m);
  CHECK(rs.rows() == 2);
  // a different spanning set of the same space canonicalizes identically
  CMat m2 = cmat(2, 3, {1, 3, 4, 3, 7, 10});
  CHECK(row_space(m2) == rs);
}

TEST_CASE("kernel vectors are annihilated") {
  CMat m = cmat(2, 4, {1, 0, 2, -1, 0, 1, 1, 1});
  CMat k = kernel(m);
  CHECK(k.rows() == 2);
  for (long r = 0; r < k.rows(); ++r) {
    auto v = k.row(r);
    auto mv = m.apply(v);
    for (const auto& c : mv) CHECK(c.is_zero());
  }
  CHECK(rank_of(k) == 2);
}

TEST_CASE("solve finds coordinates and rejects inconsistent systems") {
  CMat a = cmat(3, 2, {1, 0, 1, 1, 0, 2});
  std::vector<Cyclo> b = {Cyclo::from_long(3), Cyclo::from_long(5),
                          Cyclo::from_long(4)};
  auto [ok, x] = solve(a, b);
  REQUIRE(ok);
  auto ax = a.apply(x);
  for (size_t i = 0; i < b.size(); ++i) CHECK(ax[i] == b[i]);

  std::vector<Cyclo> bad = {Cyclo::from_long(1), Cyclo::from_long(0),
                            Cyclo::from_long(0)};
  auto [ok2, x2] = solve(a, bad);
  CHECK(!ok2);
}

TEST_CASE("inverse multiplies to the identity") {
  CMat m = cmat(3, 3, {2, 1, 0, 0, 1, -1, 1, 0, 3});
  CMat inv = inverse(m);
  CHECK(m * inv == CMat::identity(3));
  CHECK(inv * m == CMat::identity(3));
  CMat sing = cmat(2, 2, {1, 2, 2, 4});
  CHECK_THROWS_AS(inverse(sing), Error);
}

TEST_CASE("characteristic polynomial of a rotation") {
  CMat r = cmat(2, 2, {0, -1, 1, 0});
  Poly<Cyclo> p = charpoly(r);
  // t^2 + 1
  CHECK(p.degree() == 2);
  CHECK(p[0] == Cyclo::one());
  CHECK(p[1].is_zero());
  CHECK(p[2] == Cyclo::one());
  // Cayley-Hamilton
  CHECK(poly_at_matrix(p, r).is_zero());
}

TEST_CASE("characteristic polynomial matches eigenvalues of a diagonal") {
  CMat d(3, 3);
  d(0, 0) = Cyclo::from_long(1);
  d(1, 1) = Cyclo::from_long(1);
  d(2, 2) = Cyclo::from_long(-2);
  Poly<Cyclo> p = charpoly(d);
  Poly<Cyclo> expected =
      Poly<Cyclo>({Cyclo::from_long(-1), Cyclo::one()}) *
      Poly<Cyclo>({Cyclo::from_long(-1), Cyclo::one()}) *
      Poly<Cyclo>({Cyclo::from_long(2), Cyclo::one()});
  CHECK(p == expected);
}

TEST_CASE("charpoly over a cyclotomic field") {
  CMat m(2, 2);
  m(0, 0) = Cyclo::root_of_unity(3);
  m(1, 1) = Cyclo::root_of_unity(3, 2);
  Poly<Cyclo> p = charpoly(m);
  // (t - w)(t - w^2) = t^2 + t + 1
  CHECK(p[0] == Cyclo::one());
  CHECK(p[1] == Cyclo::one());
  CHECK(p[2] == Cyclo::one());
}

TEST_CASE("subspace membership and inclusion") {
  CMat space = row_space(cmat(2, 3, {1, 0, 1, 0, 1, 1}));
  std::vector<Cyclo> in = {Cyclo::from_long(2), Cyclo::from_long(3),
                           Cyclo::from_long(5)};
  std::vector<Cyclo> out = {Cyclo::from_long(1), Cyclo::zero(), Cyclo::zero()};
  CHECK(subspace_contains(space, in));
  CHECK(!subspace_contains(space, out));
  CMat line = row_space(cmat(1, 3, {1, 1, 2}));
  CHECK(subspace_leq(line, space));
  CHECK(!subspace_leq(space, line));
}

TEST_CASE("subspace sum and intersection dimensions") {
  CMat a = row_space(cmat(2, 4, {1, 0, 0, 0, 0, 1, 0, 0}));
  CMat b = row_space(cmat(2, 4, {0, 1, 0, 0, 0, 0, 1, 0}));
  CMat s = subspace_sum(a, b);
  CMat i = subspace_intersection(a, b);
  CHECK(s.rows() == 3);
  CHECK(i.rows() == 1);
  // dim(a) + dim(b) = dim(a+b) + dim(a^b)
  CHECK(a.rows() + b.rows() == s.rows() + i.rows());
  CHECK(subspace_leq(i, a));
  CHECK(subspace_leq(i, b));
}

TEST_CASE("matrix keys agree exactly on equal matrices") {
  CMat a = cmat(2, 2, {1, 0, 0, 1});
  CMat b = CMat::identity(2);
  CHECK(mat_key(a) == mat_key(b));
  CMat c = cmat(2, 2, {1, 0, 0, -1});
  CHECK(mat_key(a) != mat_key(c));
  // values equal across field representations share a key
  CMat d(1, 1);
  d(0, 0) = Cyclo::root_of_unity(6, 3);  // -1 computed in Q(w_6)
  CMat e(1, 1);
  e(0, 0) = Cyclo::from_long(-1);
  CHECK(mat_key(d) == mat_key(e));
}

TEST_CASE("transpose and apply are consistent") {
  CMat m = cmat(2, 3, {1, 2, 3, 4, 5, 6});
  CMat t = m.transposed();
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 2);
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < 3; ++j) CHECK(m(i, j) == t(j, i));
}

TEST_CASE("rational matrices eliminate exactly") {
  QMat m(2, 2);
  m(0, 0) = Rational(1, 3);
  m(0, 1) = Rational(1, 7);
  m(1, 0) = Rational(2, 3);
  m(1, 1) = Rational(5, 7);
  CHECK(rank_of(m) == 2);
  QMat inv = inverse(m);
  CHECK(m * inv == QMat::identity(2));
}
