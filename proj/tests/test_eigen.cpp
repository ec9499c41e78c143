// Joint eigenspace decomposition over declared cyclotomic fields.

#include "doctest.h"

#include "core/eigenspaces.hpp"

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

TEST_CASE("swap matrix splits into symmetric and antisymmetric lines") {
  CMat s = cmat(2, 2, {0, 1, 1, 0});
  EigenOptions opt;
  auto spaces = simultaneous_eigenspaces({s}, opt);
  REQUIRE(spaces.size() == 2);
  for (const auto& es : spaces) {
    CHECK(es.basis.rows() == 1);
    REQUIRE(es.values.size() == 1);
    // the basis row really is an eigenvector
    auto v = es.basis.row(0);
    auto sv = s.apply(v);
    for (size_t i = 0; i < v.size(); ++i) CHECK(sv[i] == es.values[0] * v[i]);
  }
  CHECK(spaces[0].values[0] != spaces[1].values[0]);
}

TEST_CASE("rotation needs the fourth cyclotomic field") {
  CMat r = cmat(2, 2, {0, -1, 1, 0});
  EigenOptions narrow;
  narrow.field_order = 1;
  CHECK_THROWS_AS(simultaneous_eigenspaces({r}, narrow), Error);
  try {
    simultaneous_eigenspaces({r}, narrow);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::field_too_small);
  }

  EigenOptions wide;
  wide.field_order = 4;
  auto spaces = simultaneous_eigenspaces({r}, wide);
  REQUIRE(spaces.size() == 2);
  Cyclo i = Cyclo::root_of_unity(4);
  CHECK(((spaces[0].values[0] == i && spaces[1].values[0] == -i) ||
         (spaces[0].values[0] == -i && spaces[1].values[0] == i)));
}

TEST_CASE("nilpotent blocks are rejected as not diagonalizable") {
  CMat n = cmat(2, 2, {0, 1, 0, 0});
  EigenOptions opt;
  try {
    simultaneous_eigenspaces({n}, opt);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_diagonalizable);
  }
}

TEST_CASE("commuting pair refines to joint eigenspaces") {
  // a = diag(1,1,-1), b has the 2x2 swap on the first block
  CMat a = cmat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, -1});
  CMat b = cmat(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 5});
  EigenOptions opt;
  auto spaces = simultaneous_eigenspaces({a, b}, opt);
  REQUIRE(spaces.size() == 3);
  long total = 0;
  for (const auto& es : spaces) {
    total += es.basis.rows();
    REQUIRE(es.values.size() == 2);
    for (long r = 0; r < es.basis.rows(); ++r) {
      auto v = es.basis.row(r);
      auto av = a.apply(v);
      auto bv = b.apply(v);
      for (size_t i = 0; i < v.size(); ++i) {
        CHECK(av[i] == es.values[0] * v[i]);
        CHECK(bv[i] == es.values[1] * v[i]);
      }
    }
  }
  CHECK(total == 3);
}

TEST_CASE("the decomposition is deterministic") {
  CMat a = cmat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, -1});
  CMat b = cmat(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 5});
  EigenOptions opt;
  auto s1 = simultaneous_eigenspaces({a, b}, opt);
  auto s2 = simultaneous_eigenspaces({a, b}, opt);
  REQUIRE(s1.size() == s2.size());
  for (size_t k = 0; k < s1.size(); ++k) {
    CHECK(s1[k].basis == s2[k].basis);
    for (size_t i = 0; i < s1[k].values.size(); ++i)
      CHECK(s1[k].values[i] == s2[k].values[i]);
  }
}

TEST_CASE("split_invariant_subspace respects the ambient restriction") {
  CMat a = cmat(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 3});
  CMat sub = row_space(cmat(2, 3, {0, 1, 0, 0, 0, 1}));  // the eigenvalue-3 plane
  EigenOptions opt;
  auto spaces = split_invariant_subspace(a, sub, opt);
  REQUIRE(spaces.size() == 1);
  CHECK(spaces[0].values[0] == Cyclo::from_long(3));
  CHECK(spaces[0].basis.rows() == 2);
}
