// Exact scalar arithmetic: rationals and cyclotomic field elements.

#include "doctest.h"

#include "core/cyclotomic.hpp"
#include "core/errors.hpp"

using namespace liegrade;

TEST_CASE("euler phi small values") {
  long expected[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (long m = 1; m <= 12; ++m) CHECK(euler_phi(m) == expected[m]);
}

TEST_CASE("fourth root of unity squares to minus one") {
  Cyclo i = Cyclo::root_of_unity(4);
  CHECK(i * i == Cyclo::from_long(-1));
  CHECK(i.pow(4) == Cyclo::one());
  CHECK(!i.is_rational());
}

TEST_CASE("third root of unity satisfies its minimal polynomial") {
  Cyclo w = Cyclo::root_of_unity(3);
  CHECK((w * w + w + Cyclo::one()).is_zero());
}

TEST_CASE("sixth root of unity reduces by x^2 - x + 1") {
  Cyclo w = Cyclo::root_of_unity(6);
  CHECK(w * w == w - Cyclo::one());
  CHECK(w.pow(3) == Cyclo::from_long(-1));
  CHECK(w.pow(6) == Cyclo::one());
}

TEST_CASE("rational values are stored at order one regardless of origin") {
  // Values that happen to be rational must compare equal and share a key,
  // no matter which field they were computed in.
  Cyclo a = Cyclo::root_of_unity(4, 2);               // -1 inside Q(w_4)
  Cyclo b = Cyclo::from_long(-1);                     // -1 at order 1
  Cyclo w3 = Cyclo::root_of_unity(3);
  Cyclo c = w3 + w3 * w3;                             // w + w^2 = -1
  CHECK(a == b);
  CHECK(c == b);
  CHECK(a.order() == 1);
  CHECK(c.order() == 1);
  CHECK(a.key() == b.key());
  CHECK(c.key() == b.key());
  CHECK(a.is_rational());
  CHECK(a.rational_value() == Rational(-1));
}

TEST_CASE("mixed order arithmetic promotes to the least common multiple") {
  Cyclo w6 = Cyclo::root_of_unity(6);
  Cyclo w4 = Cyclo::root_of_unity(4);
  Cyclo p = w6 * w4;  // a primitive 12th root
  CHECK(p.order() == 12);
  CHECK(p.pow(12) == Cyclo::one());
  CHECK(p.pow(6) == Cyclo::from_long(-1));
}

TEST_CASE("promoted keeps the value and pads the coordinates") {
  Cyclo half = Cyclo::from_rational(Rational(1, 2));
  Cyclo lifted = half.promoted(6);
  CHECK(lifted.order() == 6);
  CHECK(static_cast<long>(lifted.coords().size()) == euler_phi(6));
  CHECK(lifted == half);
  CHECK(lifted.coords()[0] == Rational(1, 2));
  CHECK(lifted.coords()[1] == Rational(0));
}

TEST_CASE("from_coords round trips through coords") {
  std::vector<Rational> c = {Rational(2, 3), Rational(-1)};
  Cyclo x = Cyclo::from_coords(3, c);
  CHECK(x.order() == 3);
  CHECK(x.coords() == c);
  Cyclo w = Cyclo::root_of_unity(3);
  CHECK(x == Cyclo::from_rational(Rational(2, 3)) - w);
}

TEST_CASE("conjugation inverts roots of unity") {
  for (long m : {3L, 4L, 5L, 8L, 12L}) {
    Cyclo w = Cyclo::root_of_unity(m);
    CHECK(w * w.conj() == Cyclo::one());
    CHECK(w.conj() == w.pow(m - 1));
  }
  Cyclo q = Cyclo::from_rational(Rational(-7, 3));
  CHECK(q.conj() == q);
}

TEST_CASE("inverse and division") {
  Cyclo w = Cyclo::root_of_unity(5);
  Cyclo x = w + w * w - Cyclo::from_long(3);
  CHECK(!x.is_zero());
  CHECK(x * x.inverse() == Cyclo::one());
  CHECK((x / x) == Cyclo::one());
  CHECK_THROWS_AS(Cyclo::zero().inverse(), Error);
  try {
    Cyclo::one() / Cyclo::zero();
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_field_element);
  }
}

TEST_CASE("deterministic comparison is a strict total order on samples") {
  std::vector<Cyclo> xs = {
      Cyclo::zero(),
      Cyclo::one(),
      Cyclo::from_long(-2),
      Cyclo::root_of_unity(3),
      Cyclo::root_of_unity(3, 2),
      Cyclo::root_of_unity(4),
      Cyclo::root_of_unity(4) + Cyclo::one(),
  };
  for (const auto& a : xs)
    for (const auto& b : xs) {
      int ab = Cyclo::compare(a, b);
      int ba = Cyclo::compare(b, a);
      CHECK(ab == -ba);
      CHECK((ab == 0) == (a == b));
    }
  // transitivity spot check over all triples
  for (const auto& a : xs)
    for (const auto& b : xs)
      for (const auto& c : xs)
        if (Cyclo::compare(a, b) < 0 && Cyclo::compare(b, c) < 0)
          CHECK(Cyclo::compare(a, c) < 0);
}

TEST_CASE("keys distinguish distinct values and agree on equal ones") {
  CHECK(Cyclo::one().key() == "1:[1]");
  CHECK(Cyclo::root_of_unity(3).key() != Cyclo::root_of_unity(3, 2).key());
  CHECK(Cyclo::root_of_unity(12, 6).key() == Cyclo::from_long(-1).key());
}

TEST_CASE("rational scalar multiplication from the left") {
  Cyclo w = Cyclo::root_of_unity(3);
  CHECK(Rational(3, 2) * w == (w + w) - w / Cyclo::from_long(2));
}

TEST_CASE("pow handles negative exponents via the inverse") {
  Cyclo w = Cyclo::root_of_unity(5);
  CHECK(w.pow(-1) == w.inverse());
  CHECK(w.pow(-3) * w.pow(3) == Cyclo::one());
  CHECK(w.pow(0) == Cyclo::one());
}

TEST_CASE("string forms are human readable") {
  CHECK(Cyclo::zero().str() == "0");
  Cyclo x = Cyclo::one() - (Rational(2, 5) * Cyclo::root_of_unity(5).pow(2));
  CHECK(x.str().find("w^2") != std::string::npos);
  CHECK(rational_str(Rational(-3, 7)) == "-3/7");
}
