// Exact scalars: arbitrary-precision rationals (GMP) and elements of
// cyclotomic fields Q(w_m), stored in the power basis 1, w, ..., w^(phi(m)-1)
// modulo the m-th cyclotomic polynomial.
//
// Every scalar carries its field order m explicitly; mixed-order arithmetic
// promotes both operands to the least common multiple order.  Order 1 is the
// rationals themselves (w = 1), order 2 represents w = -1, so rational work
// costs one short vector per value and no special cases.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace liegrade {

using Rational = mpq_class;

std::string rational_str(const Rational& q);

// Immutable per-order tables: the cyclotomic polynomial, reductions of the
// powers x^k (k up to 2*(phi(m)-1)) modulo it, and the power-basis
// coordinates of every root power w^k, k = 0..m-1.
struct CycOrderData {
  long m = 1;
  long degree = 1;  // phi(m)
  std::vector<Rational> phi;  // monic, length degree+1, integer entries
  // power_tail[t] = coordinates of x^(degree+t) mod phi, t = 0..degree-2
  std::vector<std::vector<Rational>> power_tail;
  // root_power[k] = coordinates of w^k, k = 0..m-1
  std::vector<std::vector<Rational>> root_power;
};

// Cached, thread-safe lookup of the order tables.
const CycOrderData& cyc_order(long m);

long euler_phi(long m);

class Cyclo {
 public:
  Cyclo() : m_(1), c_(1, Rational(0)) {}

  static Cyclo zero(long m = 1);
  static Cyclo one(long m = 1);
  static Cyclo from_rational(const Rational& q, long m = 1);
  static Cyclo from_long(long v, long m = 1);
  // w_m^power
  static Cyclo root_of_unity(long m, long power = 1);
  // Construct from raw power-basis coordinates (must have length phi(m)).
  static Cyclo from_coords(long m, std::vector<Rational> coords);

  long order() const { return m_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // The rational value; requires is_rational().
  Rational rational_value() const;

  // Re-express in Q(w_M); M must be a multiple of the current order.
  Cyclo promoted(long M) const;

  Cyclo operator-() const;
  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator/(const Cyclo& o) const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  // Multiplicative inverse; requires a nonzero value.
  Cyclo inverse() const;
  // Complex conjugate: w -> w^(m-1).
  Cyclo conj() const;
  Cyclo pow(long e) const;

  // Strict deterministic total order (promotes to a common field, then
  // compares coordinate vectors lexicographically).  Used only to make
  // enumeration orders and report bodies reproducible.
  static int compare(const Cyclo& a, const Cyclo& b);
  bool operator<(const Cyclo& o) const { return compare(*this, o) < 0; }

  // Canonical machine key, e.g. "3:[-1,2/5]".  Rational values always carry
  // order 1 (the constructor demotes them), so keys of equal values agree
  // whenever a computation stays inside a single Q(w_m) -- which every
  // pipeline in this library does.
  std::string key() const;
  // Human-readable form, e.g. "1 - 2/5*w^2" (w implicitly of this order).
  std::string str() const;

 private:
  // Values with a zero power-basis tail are rational; demoting them to
  // order 1 keeps the representation canonical across mixed-order
  // arithmetic.  promoted() bypasses this so callers can read full-length
  // coordinate vectors.
  Cyclo(long m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {
    if (m_ > 1) {
      bool tail_zero = true;
      for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) { tail_zero = false; break; }
      if (tail_zero) {
        m_ = 1;
        c_.resize(1);
      }
    }
  }

  struct raw_t {};
  Cyclo(raw_t, long m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {}

  long m_;
  std::vector<Rational> c_;  // length phi(m_)
};

inline Cyclo operator*(const Rational& q, const Cyclo& x) {
  return Cyclo::from_rational(q, x.order()) * x;
}

}  // namespace liegrade
