#include "zmodp.hpp"

#include <algorithm>

namespace liegrade {

mpz_class mod_reduce(const mpz_class& a, const mpz_class& p) {
  mpz_class r = a % p;
  if (r < 0) r += p;
  return r;
}

mpz_class mod_mul(const mpz_class& a, const mpz_class& b, const mpz_class& p) {
  return mod_reduce(a * b, p);
}

mpz_class mod_pow(const mpz_class& a, const mpz_class& e, const mpz_class& p) {
  mpz_class out;
  mpz_powm(out.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return out;
}

mpz_class mod_inv(const mpz_class& a, const mpz_class& p) {
  mpz_class out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    fail(ErrorCode::internal_error, "element not invertible modulo prime power");
  return out;
}

mpz_class find_prime_one_mod(long M, const mpz_class& lower_bound) {
  mpz_class k = lower_bound / M + 1;
  for (;;) {
    mpz_class candidate = k * M + 1;
    if (mpz_probab_prime_p(candidate.get_mpz_t(), 40) > 0) return candidate;
    ++k;
  }
}

namespace {
std::vector<mpz_class> prime_factors(mpz_class n) {
  std::vector<mpz_class> out;
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}
}  // namespace

mpz_class element_of_order(long M, const mpz_class& p) {
  mpz_class grp = p - 1;
  if (grp % M != 0) fail(ErrorCode::internal_error, "order does not divide p-1");
  // Find a generator of F_p^* by checking against each prime factor of p-1,
  // then raise it to (p-1)/M.
  std::vector<mpz_class> factors = prime_factors(grp);
  for (mpz_class a = 2; ; ++a) {
    bool generator = true;
    for (const mpz_class& q : factors) {
      if (mod_pow(a, grp / q, p) == 1) { generator = false; break; }
    }
    if (generator) return mod_pow(a, grp / M, p);
  }
}

void zpoly_trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long zpoly_deg(const ZPoly& f) { return static_cast<long>(f.size()) - 1; }

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b, const mpz_class& p) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  for (mpz_class& c : out) c = mod_reduce(c, p);
  zpoly_trim(out);
  return out;
}

ZPoly zpoly_rem(ZPoly a, const ZPoly& b, const mpz_class& p) {
  zpoly_trim(a);
  long db = zpoly_deg(b);
  if (db < 0) fail(ErrorCode::invalid_argument, "polynomial remainder by zero");
  mpz_class lead_inv = mod_inv(b[db], p);
  while (zpoly_deg(a) >= db) {
    long da = zpoly_deg(a);
    mpz_class f = mod_mul(a[da], lead_inv, p);
    if (f != 0) {
      for (long j = 0; j <= db; ++j)
        a[da - db + j] = mod_reduce(a[da - db + j] - f * b[j], p);
    }
    a.pop_back();
    zpoly_trim(a);
  }
  return a;
}

ZPoly zpoly_gcd(ZPoly a, ZPoly b, const mpz_class& p) {
  zpoly_trim(a);
  zpoly_trim(b);
  while (!b.empty()) {
    ZPoly r = zpoly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  // monic normalization
  if (!a.empty()) {
    mpz_class inv = mod_inv(a.back(), p);
    for (mpz_class& c : a) c = mod_mul(c, inv, p);
  }
  return a;
}

ZPoly zpoly_xpow_mod(const mpz_class& e, const ZPoly& f, const mpz_class& p) {
  ZPoly result{1};
  ZPoly base{0, 1};
  base = zpoly_rem(base, f, p);
  mpz_class exp = e;
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) result = zpoly_rem(zpoly_mul(result, base, p), f, p);
    base = zpoly_rem(zpoly_mul(base, base, p), f, p);
    exp >>= 1;
  }
  return result;
}

mpz_class zpoly_eval(const ZPoly& f, const mpz_class& x, const mpz_class& p) {
  mpz_class acc = 0;
  for (long i = zpoly_deg(f); i >= 0; --i) acc = mod_reduce(acc * x + f[i], p);
  return acc;
}

namespace {

// Split a product of distinct linear factors into individual roots.
void split_linear_product(const ZPoly& f, const mpz_class& p,
                          std::mt19937_64& rng, std::vector<mpz_class>& out) {
  long d = zpoly_deg(f);
  if (d <= 0) return;
  if (d == 1) {
    // f = c1 x + c0 -> root = -c0 / c1
    out.push_back(mod_mul(mod_reduce(-f[0], p), mod_inv(f[1], p), p));
    return;
  }
  // Check for the root 0 explicitly, then work with f shifted so that the
  // quadratic-residue trick applies to the rest.
  if (f[0] == 0) {
    out.push_back(0);
    ZPoly g(f.begin() + 1, f.end());
    split_linear_product(g, p, rng, out);
    return;
  }
  mpz_class half = (p - 1) / 2;
  for (;;) {
    // gcd((x+a)^((p-1)/2) - 1, f) splits the roots into residues/nonresidues
    // of the shift; a random shift separates some pair with probability ~1/2.
    mpz_class a = mod_reduce(mpz_class(rng()), p);
    ZPoly shifted{a, 1};
    // compute (x+a)^((p-1)/2) mod f by square-and-multiply
    ZPoly result{1};
    ZPoly base = zpoly_rem(shifted, f, p);
    mpz_class exp = half;
    while (exp > 0) {
      if (mpz_odd_p(exp.get_mpz_t())) result = zpoly_rem(zpoly_mul(result, base, p), f, p);
      base = zpoly_rem(zpoly_mul(base, base, p), f, p);
      exp >>= 1;
    }
    // result - 1
    if (result.empty()) result = ZPoly{mod_reduce(mpz_class(-1), p)};
    else result[0] = mod_reduce(result[0] - 1, p);
    zpoly_trim(result);
    ZPoly g = zpoly_gcd(result, f, p);
    long dg = zpoly_deg(g);
    if (dg > 0 && dg < d) {
      ZPoly h = f;
      // f / g: divide exactly
      ZPoly quot;
      {
        ZPoly rem = f;
        long dgg = zpoly_deg(g);
        quot.assign(d - dgg + 1, mpz_class(0));
        mpz_class lead_inv = mod_inv(g[dgg], p);
        for (long i = d; i >= dgg; --i) {
          if (zpoly_deg(rem) < i) continue;
          mpz_class c = mod_mul(rem[i], lead_inv, p);
          quot[i - dgg] = c;
          if (c != 0)
            for (long j = 0; j <= dgg; ++j)
              rem[i - dgg + j] = mod_reduce(rem[i - dgg + j] - c * g[j], p);
          zpoly_trim(rem);
        }
      }
      zpoly_trim(quot);
      split_linear_product(g, p, rng, out);
      split_linear_product(quot, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<mpz_class> zpoly_roots(const ZPoly& f_in, const mpz_class& p,
                                   std::mt19937_64& rng) {
  ZPoly f = f_in;
  zpoly_trim(f);
  std::vector<mpz_class> out;
  if (zpoly_deg(f) < 1) return out;
  // keep only the linear-factor part: gcd(x^p - x, f)
  ZPoly xp = zpoly_xpow_mod(p, f, p);  // x^p mod f
  // x^p - x
  if (xp.size() < 2) xp.resize(2, mpz_class(0));
  xp[1] = mod_reduce(xp[1] - 1, p);
  zpoly_trim(xp);
  ZPoly lin = zpoly_gcd(xp, f, p);
  split_linear_product(lin, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<mpz_class, mpz_class> hensel_lift_root(const ZPoly& f_int,
                                                 const mpz_class& r0,
                                                 const mpz_class& p, long N) {
  mpz_class modulus = p;
  mpz_class r = mod_reduce(r0, p);
  // derivative of f
  ZPoly df(f_int.size() > 1 ? f_int.size() - 1 : 0);
  for (size_t i = 1; i < f_int.size(); ++i) df[i - 1] = f_int[i] * static_cast<long>(i);
  long k = 1;
  while (k < N) {
    long next = std::min(2 * k, N);
    mpz_class new_modulus;
    mpz_pow_ui(new_modulus.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(next));
    mpz_class fr = zpoly_eval(f_int, r, new_modulus);
    mpz_class dfr = zpoly_eval(df, r, new_modulus);
    // Newton step r <- r - f(r)/f'(r); f'(r) is a unit because the root is simple.
    mpz_class inv = mod_inv(mod_reduce(dfr, new_modulus), new_modulus);
    r = mod_reduce(r - fr * inv, new_modulus);
    modulus = new_modulus;
    k = next;
  }
  return {r, modulus};
}

std::optional<Rational> rational_reconstruct(const mpz_class& u, const mpz_class& M) {
  mpz_class bound;
  mpz_class half = M / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = M, r1 = mod_reduce(u, M);
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (t1 == 0) return std::nullopt;
  mpz_class num = r1, den = t1;
  if (den < 0) { den = -den; num = -num; }
  if (den > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) {
    num /= g;
    den /= g;
  }
  // Final check: num/den must really reduce to u mod M (den invertible).
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), M.get_mpz_t()) == 0) return std::nullopt;
  if (mod_reduce(num * dinv, M) != mod_reduce(u, M)) return std::nullopt;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace liegrade
