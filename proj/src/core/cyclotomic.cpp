#include "cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace liegrade {

std::string rational_str(const Rational& q) {
  return q.get_str();
}

long euler_phi(long m) {
  long result = m, n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Dense polynomial helpers over the rationals, used only to build the order
// tables.  Coefficient vectors are low-degree-first and may carry trailing
// zeros; degree is tracked by hand where it matters.

std::vector<Rational> poly_x_pow_minus_one(long m) {
  std::vector<Rational> p(m + 1, Rational(0));
  p[0] = -1;
  p[m] = 1;
  return p;
}

// Exact division of a by b (monic b); remainder must be zero.
std::vector<Rational> poly_divide_exact(std::vector<Rational> a,
                                        const std::vector<Rational>& b) {
  long db = static_cast<long>(b.size()) - 1;
  long da = static_cast<long>(a.size()) - 1;
  std::vector<Rational> q(da - db + 1, Rational(0));
  for (long i = da; i >= db; --i) {
    Rational c = a[i];  // b is monic
    if (c == 0) continue;
    q[i - db] = c;
    for (long j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (const Rational& c : a) {
    if (c != 0) fail(ErrorCode::internal_error, "cyclotomic polynomial division left a remainder");
  }
  return q;
}

// Cyclotomic polynomial of order m: divide x^m - 1 by the cyclotomic
// polynomials of all proper divisors.
std::vector<Rational> cyclotomic_poly(long m,
                                      std::map<long, std::vector<Rational>>& memo) {
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  std::vector<Rational> p = poly_x_pow_minus_one(m);
  for (long d = 1; d < m; ++d) {
    if (m % d == 0) p = poly_divide_exact(std::move(p), cyclotomic_poly(d, memo));
  }
  memo[m] = p;
  return p;
}

std::unique_ptr<CycOrderData> build_order(long m) {
  auto data = std::make_unique<CycOrderData>();
  data->m = m;
  data->degree = euler_phi(m);
  std::map<long, std::vector<Rational>> memo;
  data->phi = cyclotomic_poly(m, memo);

  const long d = data->degree;
  // Rows for x^(d+t) mod phi, t = 0..d-2 (products of two reduced elements
  // have degree at most 2d-2).  Walk the recurrence x^(k+1) = x * x^k,
  // folding the overflow coefficient against the monic phi each step.
  std::vector<Rational> cur(d, Rational(0));
  cur[d - 1] = 1;  // x^(d-1)
  data->power_tail.clear();
  for (long t = 0; t < d - 1; ++t) {
    Rational top = cur[d - 1];
    for (long i = d - 1; i >= 1; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (long i = 0; i < d; ++i) cur[i] -= top * data->phi[i];
    }
    data->power_tail.push_back(cur);
  }

  // root_power[k]: coordinates of w^k.  For k < d this is the basis vector;
  // past that, walk the same multiply-by-x recurrence.
  data->root_power.assign(m, std::vector<Rational>(d, Rational(0)));
  std::vector<Rational> rp(d, Rational(0));
  rp[0] = 1;
  data->root_power[0] = rp;
  for (long k = 1; k < m; ++k) {
    Rational top = rp[d - 1];
    for (long i = d - 1; i >= 1; --i) rp[i] = rp[i - 1];
    rp[0] = 0;
    if (top != 0) {
      for (long i = 0; i < d; ++i) rp[i] -= top * data->phi[i];
    }
    data->root_power[k] = rp;
  }
  return data;
}

std::mutex g_order_mutex;
std::map<long, std::unique_ptr<CycOrderData>>& order_cache() {
  static std::map<long, std::unique_ptr<CycOrderData>> cache;
  return cache;
}

}  // namespace

const CycOrderData& cyc_order(long m) {
  if (m < 1) fail(ErrorCode::invalid_argument, "cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(g_order_mutex);
  auto& cache = order_cache();
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, build_order(m)).first;
  return *it->second;
}

Cyclo Cyclo::zero(long m) {
  const CycOrderData& od = cyc_order(m);
  return Cyclo(m, std::vector<Rational>(od.degree, Rational(0)));
}

Cyclo Cyclo::one(long m) { return from_rational(Rational(1), m); }

Cyclo Cyclo::from_rational(const Rational& q, long m) {
  const CycOrderData& od = cyc_order(m);
  std::vector<Rational> c(od.degree, Rational(0));
  c[0] = q;
  return Cyclo(m, std::move(c));
}

Cyclo Cyclo::from_long(long v, long m) { return from_rational(Rational(v), m); }

Cyclo Cyclo::root_of_unity(long m, long power) {
  const CycOrderData& od = cyc_order(m);
  long k = ((power % m) + m) % m;
  return Cyclo(m, od.root_power[k]);
}

Cyclo Cyclo::from_coords(long m, std::vector<Rational> coords) {
  const CycOrderData& od = cyc_order(m);
  if (static_cast<long>(coords.size()) != od.degree)
    fail(ErrorCode::invalid_argument, "coordinate vector length does not match phi(order)");
  return Cyclo(m, std::move(coords));
}

bool Cyclo::is_zero() const {
  for (const Rational& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclo::rational_value() const {
  if (!is_rational())
    fail(ErrorCode::not_a_field_element, "value is not rational: " + str());
  return c_[0];
}

Cyclo Cyclo::promoted(long M) const {
  if (M == m_) return *this;
  if (M % m_ != 0)
    fail(ErrorCode::invalid_argument, "target order is not a multiple of the current order");
  const CycOrderData& od = cyc_order(M);
  const long step = M / m_;  // w_m = w_M^step
  std::vector<Rational> out(od.degree, Rational(0));
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const std::vector<Rational>& rp = od.root_power[(step * static_cast<long>(j)) % M];
    for (long i = 0; i < od.degree; ++i) out[i] += c_[j] * rp[i];
  }
  // raw: keep the requested order even for rational values, so callers can
  // read coordinates positionally
  return Cyclo(raw_t{}, M, std::move(out));
}

Cyclo Cyclo::operator-() const {
  std::vector<Rational> out(c_);
  for (Rational& c : out) c = -c;
  return Cyclo(m_, std::move(out));
}

namespace {
long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }
}  // namespace

Cyclo Cyclo::operator+(const Cyclo& o) const {
  if (m_ != o.m_) {
    long M = lcm_long(m_, o.m_);
    return promoted(M) + o.promoted(M);
  }
  std::vector<Rational> out(c_);
  for (size_t i = 0; i < out.size(); ++i) out[i] += o.c_[i];
  return Cyclo(m_, std::move(out));
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
  if (m_ != o.m_) {
    long M = lcm_long(m_, o.m_);
    return promoted(M) - o.promoted(M);
  }
  std::vector<Rational> out(c_);
  for (size_t i = 0; i < out.size(); ++i) out[i] -= o.c_[i];
  return Cyclo(m_, std::move(out));
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  if (m_ != o.m_) {
    long M = lcm_long(m_, o.m_);
    return promoted(M) * o.promoted(M);
  }
  const CycOrderData& od = cyc_order(m_);
  const long d = od.degree;
  // Schoolbook product, then fold the tail back with the power table.
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (long i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (long j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + d);
  for (long t = 0; d + t <= 2 * d - 2; ++t) {
    const Rational& coeff = prod[d + t];
    if (coeff == 0) continue;
    const std::vector<Rational>& row = od.power_tail[t];
    for (long i = 0; i < d; ++i) out[i] += coeff * row[i];
  }
  return Cyclo(m_, std::move(out));
}

Cyclo Cyclo::operator/(const Cyclo& o) const { return *this * o.inverse(); }

bool Cyclo::operator==(const Cyclo& o) const {
  if (m_ == o.m_) return c_ == o.c_;
  long M = lcm_long(m_, o.m_);
  return promoted(M).c_ == o.promoted(M).c_;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) fail(ErrorCode::not_a_field_element, "inverse of zero");
  const CycOrderData& od = cyc_order(m_);
  if (od.degree == 1) {
    std::vector<Rational> out(1);
    out[0] = 1 / c_[0];
    return Cyclo(m_, std::move(out));
  }
  // Extended Euclid in Q[x] for gcd(value, phi) = 1: find u with
  // u*value + v*phi = 1, i.e. u = value^(-1) in the quotient field.
  using P = std::vector<Rational>;
  auto deg = [](const P& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return -1L;
  };
  auto scale = [](const P& p, const Rational& s) {
    P out(p);
    for (Rational& c : out) c *= s;
    return out;
  };
  auto sub_shifted = [](P a, const P& b, const Rational& s, long shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= s * b[i];
    return a;
  };
  P r0 = od.phi, r1(c_);
  P s0(1, Rational(0)), s1(1, Rational(1));  // coefficients of the value
  long d1 = deg(r1);
  while (d1 > 0) {
    long d0 = deg(r0);
    // divide r0 by r1
    P q(d0 - d1 + 1, Rational(0));
    P rem = r0;
    for (long i = d0; i >= d1; --i) {
      Rational lead = rem[i];
      if (lead == 0) continue;
      Rational f = lead / r1[d1];
      q[i - d1] = f;
      rem = sub_shifted(std::move(rem), r1, f, i - d1);
    }
    // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
    P snew = s0;
    for (long i = 0; i <= d0 - d1; ++i) {
      if (q[i] == 0) continue;
      snew = sub_shifted(std::move(snew), s1, q[i], i);
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
    d1 = deg(r1);
  }
  if (d1 != 0) fail(ErrorCode::internal_error, "nonzero value shares a factor with the cyclotomic polynomial");
  // r1 is a nonzero constant: normalize s1 by it.
  P u = scale(s1, 1 / r1[0]);
  u.resize(od.degree, Rational(0));
  return Cyclo(m_, std::move(u));
}

Cyclo Cyclo::conj() const {
  const CycOrderData& od = cyc_order(m_);
  std::vector<Rational> out(od.degree, Rational(0));
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const std::vector<Rational>& rp = od.root_power[(static_cast<long>(j) * (m_ - 1)) % m_];
    for (long i = 0; i < od.degree; ++i) out[i] += c_[j] * rp[i];
  }
  return Cyclo(m_, std::move(out));
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo result = Cyclo::one(m_);
  Cyclo base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

int Cyclo::compare(const Cyclo& a, const Cyclo& b) {
  long M = lcm_long(a.m_, b.m_);
  Cyclo pa = a.promoted(M), pb = b.promoted(M);
  for (size_t i = 0; i < pa.c_.size(); ++i) {
    int c = cmp(pa.c_[i], pb.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Cyclo::key() const {
  std::ostringstream os;
  os << m_ << ":[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << rational_str(c_[i]);
  }
  os << "]";
  return os.str();
}

std::string Cyclo::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational c = c_[i];
    if (first) {
      if (c < 0) { os << "-"; c = -c; }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (i == 0) {
      os << rational_str(c);
    } else {
      if (c != 1) os << rational_str(c) << "*";
      os << "w";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace liegrade
