// Dense univariate polynomials over an exact field, low-degree-first.
//
// The coefficient type is either Rational or Cyclo (or a modular field used
// by the root finder); FieldTraits supplies the constants.  All arithmetic
// is exact; the zero polynomial is the empty coefficient vector and has
// degree -1.

#pragma once

#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"

namespace liegrade {

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return x == 0; }
};

template <>
struct FieldTraits<Cyclo> {
  static Cyclo zero() { return Cyclo::zero(1); }
  static Cyclo one() { return Cyclo::one(1); }
  static bool is_zero(const Cyclo& x) { return x.is_zero(); }
};

template <class F>
class Poly {
 public:
  using Traits = FieldTraits<F>;

  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const F& v) { return Poly(std::vector<F>{v}); }
  static Poly identity() {  // the polynomial t
    return Poly(std::vector<F>{Traits::zero(), Traits::one()});
  }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  const F& operator[](size_t i) const { return c_[i]; }
  const F& leading() const { return c_.back(); }

  Poly operator+(const Poly& o) const {
    std::vector<F> out(std::max(c_.size(), o.c_.size()), Traits::zero());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = out[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] = out[i] + o.c_[i];
    return Poly(std::move(out));
  }

  Poly operator-(const Poly& o) const {
    std::vector<F> out(std::max(c_.size(), o.c_.size()), Traits::zero());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = out[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] = out[i] - o.c_[i];
    return Poly(std::move(out));
  }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<F> out(c_.size() + o.c_.size() - 1, Traits::zero());
    for (size_t i = 0; i < c_.size(); ++i) {
      if (Traits::is_zero(c_[i])) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) {
        if (Traits::is_zero(o.c_[j])) continue;
        out[i + j] = out[i + j] + c_[i] * o.c_[j];
      }
    }
    return Poly(std::move(out));
  }

  Poly scaled(const F& s) const {
    std::vector<F> out(c_);
    for (F& v : out) v = v * s;
    return Poly(std::move(out));
  }

  // Quotient and remainder by a nonzero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) fail(ErrorCode::invalid_argument, "polynomial division by zero");
    if (degree() < d.degree()) return {Poly(), *this};
    std::vector<F> rem(c_);
    std::vector<F> quot(degree() - d.degree() + 1, Traits::zero());
    F lead_inv = Traits::one() / d.leading();
    for (long i = degree(); i >= d.degree(); --i) {
      F f = rem[i] * lead_inv;
      if (Traits::is_zero(f)) continue;
      quot[i - d.degree()] = f;
      for (long j = 0; j <= d.degree(); ++j)
        rem[i - d.degree() + j] = rem[i - d.degree() + j] - f * d.c_[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
  }

  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(Traits::one() / leading());
  }

  Poly derivative() const {
    if (degree() < 1) return Poly();
    std::vector<F> out(c_.size() - 1, Traits::zero());
    F k = Traits::one();
    for (size_t i = 1; i < c_.size(); ++i) {
      out[i - 1] = c_[i] * k;
      k = k + Traits::one();
    }
    return Poly(std::move(out));
  }

  F eval(const F& x) const {
    F acc = Traits::zero();
    for (long i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
  }

  bool operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!Traits::is_zero(c_[i] - o.c_[i])) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  void trim() {
    while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

// Monic greatest common divisor.
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// The product of the distinct irreducible factors: p / gcd(p, p').
template <class F>
Poly<F> squarefree_part(const Poly<F>& p) {
  if (p.degree() <= 0) return p.monic();
  Poly<F> g = poly_gcd(p, p.derivative());
  return (p / g).monic();
}

// Yun's decomposition: returns pieces s1, s2, ... with p ~ prod s_k^k and
// each s_k squarefree (possibly constant).
template <class F>
std::vector<Poly<F>> squarefree_decomposition(const Poly<F>& p) {
  std::vector<Poly<F>> out;
  if (p.degree() <= 0) return out;
  Poly<F> a = p.monic();
  Poly<F> g = poly_gcd(a, a.derivative());
  Poly<F> c = a / g;                       // product of distinct factors
  Poly<F> d = a.derivative() / g - c.derivative();
  while (c.degree() > 0) {
    Poly<F> s = poly_gcd(c, d);
    out.push_back(s.monic());
    c = c / s;
    d = d / s - c.derivative();
  }
  return out;
}

// a*b mod f
template <class F>
Poly<F> poly_mulmod(const Poly<F>& a, const Poly<F>& b, const Poly<F>& f) {
  return (a * b) % f;
}

// g(q) mod f, by Horner in the quotient ring.
template <class F>
Poly<F> poly_compose_mod(const Poly<F>& g, const Poly<F>& q, const Poly<F>& f) {
  Poly<F> acc;
  for (long i = g.degree(); i >= 0; --i) {
    acc = poly_mulmod(acc, q, f) + Poly<F>::constant(g[i]);
    acc = acc % f;
  }
  return acc;
}

// Inverse of a modulo f (gcd(a, f) must be 1).
template <class F>
Poly<F> poly_invmod(const Poly<F>& a, const Poly<F>& f) {
  using Traits = FieldTraits<F>;
  Poly<F> r0 = f, r1 = a % f;
  Poly<F> s0, s1 = Poly<F>::constant(Traits::one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Poly<F> snew = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = (std::move(snew)) % f;
  }
  if (r0.degree() != 0)
    fail(ErrorCode::invalid_argument, "polynomial is not invertible modulo the given modulus");
  return s0.scaled(Traits::one() / r0.leading()) % f;
}

}  // namespace liegrade
