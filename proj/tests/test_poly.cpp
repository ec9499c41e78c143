// Polynomial arithmetic and the cyclotomic root finder.

#include "doctest.h"

#include "core/poly.hpp"
#include "core/roots.hpp"

using namespace liegrade;

namespace {

Poly<Cyclo> cpoly(std::initializer_list<long> coeffs) {
  std::vector<Cyclo> c;
  for (long v : coeffs) c.push_back(Cyclo::from_long(v));
  return Poly<Cyclo>(std::move(c));
}

}  // namespace

TEST_CASE("division identity") {
  Poly<Cyclo> f = cpoly({-6, 11, -6, 1});  // (t-1)(t-2)(t-3)
  Poly<Cyclo> d = cpoly({-2, 1});          // t - 2
  auto [q, r] = f.divmod(d);
  CHECK(r.is_zero());
  CHECK(q * d + r == f);
  CHECK(q == cpoly({3, -4, 1}));
  CHECK_THROWS_AS(f.divmod(Poly<Cyclo>()), Error);
}

TEST_CASE("gcd of overlapping products") {
  Poly<Cyclo> a = cpoly({-1, 0, 1});     // t^2 - 1
  Poly<Cyclo> b = cpoly({-1, 0, 0, 1});  // t^3 - 1
  CHECK(poly_gcd(a, b) == cpoly({-1, 1}));
}

TEST_CASE("squarefree part drops multiplicities") {
  Poly<Cyclo> f = cpoly({-1, 1}) * cpoly({-1, 1}) * cpoly({2, 1});
  CHECK(squarefree_part(f) == cpoly({-1, 1}) * cpoly({2, 1}));
}

TEST_CASE("derivative and evaluation") {
  Poly<Cyclo> f = cpoly({1, -3, 0, 2});  // 2t^3 - 3t + 1
  CHECK(f.derivative() == cpoly({-3, 0, 6}));
  CHECK(f.eval(Cyclo::from_long(2)) == Cyclo::from_long(11));
  CHECK(f.eval(Cyclo::zero()) == Cyclo::one());
}

TEST_CASE("monic scales by the leading coefficient") {
  Poly<Cyclo> f = cpoly({2, 0, 4});
  Poly<Cyclo> m = f.monic();
  CHECK(m.leading() == Cyclo::one());
  CHECK(m.eval(Cyclo::one()) == Cyclo::from_rational(Rational(3, 2)));
}

TEST_CASE("roots of t^2 + 1 live in the fourth cyclotomic field") {
  Poly<Cyclo> f = cpoly({1, 0, 1});
  RootSearchOptions opt;
  opt.field_order = 4;
  RootSearchResult r = find_roots(f, opt);
  REQUIRE(r.complete);
  REQUIRE(r.roots.size() == 2);
  Cyclo i = Cyclo::root_of_unity(4);
  CHECK(((r.roots[0].value == i && r.roots[1].value == -i) ||
         (r.roots[0].value == -i && r.roots[1].value == i)));
}

TEST_CASE("roots of t^2 + 1 are not rational") {
  Poly<Cyclo> f = cpoly({1, 0, 1});
  RootSearchOptions opt;
  opt.field_order = 1;
  RootSearchResult r = find_roots(f, opt);
  CHECK(!r.complete);
  CHECK(r.roots.empty());
  CHECK(r.unresolved.degree() == 2);
  CHECK(!r.failure_reason.empty());
}

TEST_CASE("sqrt(2) is reconstructed inside the eighth cyclotomic field") {
  Poly<Cyclo> f = cpoly({-2, 0, 1});  // t^2 - 2
  RootSearchOptions opt;
  opt.field_order = 8;
  RootSearchResult r = find_roots(f, opt);
  REQUIRE(r.complete);
  REQUIRE(r.roots.size() == 2);
  // the two roots are w - w^3 and its negative, for w the eighth root
  Cyclo w = Cyclo::root_of_unity(8);
  Cyclo s = w - w.pow(3);
  CHECK(s * s == Cyclo::from_long(2));
  CHECK(((r.roots[0].value == s) || (r.roots[0].value == -s)));
  CHECK(r.roots[0].value + r.roots[1].value == Cyclo::zero());
}

TEST_CASE("multiplicities are reported") {
  Poly<Cyclo> f = cpoly({-1, 1}) * cpoly({-1, 1}) * cpoly({3, 1});
  RootSearchOptions opt;
  RootSearchResult r = find_roots(f, opt);
  REQUIRE(r.complete);
  REQUIRE(r.roots.size() == 2);
  long total = 0;
  for (const auto& fr : r.roots) {
    total += fr.multiplicity;
    if (fr.value == Cyclo::one()) CHECK(fr.multiplicity == 2);
    if (fr.value == Cyclo::from_long(-3)) CHECK(fr.multiplicity == 1);
  }
  CHECK(total == 3);
}

TEST_CASE("rational roots with large coordinates") {
  // (t - 15/2)(t + 4/3)
  Poly<Cyclo> f = cpoly({4, 3}) * cpoly({-15, 2});
  RootSearchOptions opt;
  RootSearchResult r = find_roots(f.monic(), opt);
  REQUIRE(r.complete);
  REQUIRE(r.roots.size() == 2);
  bool saw_a = false, saw_b = false;
  for (const auto& fr : r.roots) {
    if (fr.value == Cyclo::from_rational(Rational(15, 2))) saw_a = true;
    if (fr.value == Cyclo::from_rational(Rational(-4, 3))) saw_b = true;
  }
  CHECK(saw_a);
  CHECK(saw_b);
}

TEST_CASE("roots of unity themselves are found") {
  // t^3 - 1 over the third cyclotomic field
  Poly<Cyclo> f = cpoly({-1, 0, 0, 1});
  RootSearchOptions opt;
  opt.field_order = 3;
  RootSearchResult r = find_roots(f, opt);
  REQUIRE(r.complete);
  CHECK(r.roots.size() == 3);
}

TEST_CASE("constant and linear edge cases") {
  RootSearchOptions opt;
  RootSearchResult lin = find_roots(cpoly({-5, 1}), opt);
  REQUIRE(lin.complete);
  REQUIRE(lin.roots.size() == 1);
  CHECK(lin.roots[0].value == Cyclo::from_long(5));
  RootSearchResult c = find_roots(cpoly({7}), opt);
  CHECK(c.complete);
  CHECK(c.roots.empty());
}
