// Modular arithmetic support for the cyclotomic root finder: prime search,
// polynomial arithmetic over F_p, root extraction in F_p, Hensel lifting of
// simple roots to prime-power moduli, and rational reconstruction.
//
// All moduli are GMP integers, so prime powers can exceed machine words.

#pragma once

#include <gmpxx.h>

#include <optional>
#include <random>
#include <vector>

#include "cyclotomic.hpp"

namespace liegrade {

using ZPoly = std::vector<mpz_class>;  // low-degree-first, entries reduced mod the modulus

mpz_class mod_reduce(const mpz_class& a, const mpz_class& p);
mpz_class mod_mul(const mpz_class& a, const mpz_class& b, const mpz_class& p);
mpz_class mod_pow(const mpz_class& a, const mpz_class& e, const mpz_class& p);
mpz_class mod_inv(const mpz_class& a, const mpz_class& p);

// Smallest prime p = k*M + 1 with p > lower_bound.
mpz_class find_prime_one_mod(long M, const mpz_class& lower_bound);

// An element of exact multiplicative order M in F_p (requires M | p-1).
mpz_class element_of_order(long M, const mpz_class& p);

void zpoly_trim(ZPoly& f);
long zpoly_deg(const ZPoly& f);
ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b, const mpz_class& p);
// remainder of a modulo monic-normalizable b
ZPoly zpoly_rem(ZPoly a, const ZPoly& b, const mpz_class& p);
ZPoly zpoly_gcd(ZPoly a, ZPoly b, const mpz_class& p);
// x^e mod f
ZPoly zpoly_xpow_mod(const mpz_class& e, const ZPoly& f, const mpz_class& p);
mpz_class zpoly_eval(const ZPoly& f, const mpz_class& x, const mpz_class& p);

// All roots of f in F_p (p an odd prime), via gcd with x^p - x and
// randomized equal-degree splitting.  Deterministic given the rng state.
std::vector<mpz_class> zpoly_roots(const ZPoly& f, const mpz_class& p,
                                   std::mt19937_64& rng);

// Lift a simple root r of f (mod p) to a root mod p^N by Newton steps.
// Requires f'(r) invertible mod p.  Returns the lifted root and p^N.
std::pair<mpz_class, mpz_class> hensel_lift_root(const ZPoly& f_int,
                                                 const mpz_class& r,
                                                 const mpz_class& p, long N);

// Rational number with numerator and denominator bounded by sqrt(M/2)
// congruent to u mod M, if one exists.
std::optional<Rational> rational_reconstruct(const mpz_class& u, const mpz_class& M);

}  // namespace liegrade
