#include "roots.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "zmodp.hpp"

namespace liegrade {

namespace {

// Divide (x - root) out of f as long as it divides exactly; returns the
// number of times it divided.
long deflate_root(Poly<Cyclo>& f, const Cyclo& root) {
  long count = 0;
  Poly<Cyclo> lin(std::vector<Cyclo>{Cyclo::zero(root.order()) - root, Cyclo::one(root.order())});
  for (;;) {
    auto [q, r] = f.divmod(lin);
    if (!r.is_zero()) break;
    f = q;
    ++count;
  }
  return count;
}

// Trial evaluations: 0, +-1, +-2, +-1/2 and rational multiples c * w^k of
// root-of-unity powers with the same small c.  Purely a fast path; the
// modular stage finds everything these do.
std::vector<Cyclo> trial_candidates(long M) {
  std::vector<Rational> small = {Rational(0), Rational(1), Rational(-1),
                                 Rational(2), Rational(-2),
                                 Rational(1, 2), Rational(-1, 2)};
  std::vector<Cyclo> out;
  for (const Rational& c : small) out.push_back(Cyclo::from_rational(c, M));
  if (M > 2) {
    for (long k = 1; k < M; ++k) {
      Cyclo wk = Cyclo::root_of_unity(M, k);
      for (const Rational& c : small) {
        if (c == 0) continue;
        out.push_back(Cyclo::from_rational(c, M) * wk);
      }
    }
  }
  return out;
}

struct ModularContext {
  mpz_class p;
  long M = 1;
  long D = 1;                    // phi(M)
  std::vector<long> exponents;   // the t with gcd(t, M) = 1, ascending
  mpz_class zeta;                // order-M element mod p
};

// Integer coefficient table of f: coeff_ints[i][j] = integer a_{ij} with
// f = (1/den) * sum_{i,j} a_{ij} w^j x^i.
struct IntegerForm {
  std::vector<std::vector<mpz_class>> coeff_ints;
  long degree = -1;
  long D = 1;
};

IntegerForm integer_form(const Poly<Cyclo>& f, long M) {
  const long D = euler_phi(M);
  IntegerForm out;
  out.degree = f.degree();
  out.D = D;
  mpz_class den = 1;
  std::vector<std::vector<Rational>> coords(f.degree() + 1);
  for (long i = 0; i <= f.degree(); ++i) {
    coords[i] = f[i].promoted(M).coords();
    for (const Rational& q : coords[i]) {
      mpz_class d = q.get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
      den = den / g * d;
    }
  }
  out.coeff_ints.assign(f.degree() + 1, std::vector<mpz_class>(D, mpz_class(0)));
  for (long i = 0; i <= f.degree(); ++i)
    for (long j = 0; j < D; ++j) {
      Rational scaled = coords[i][j] * Rational(den);
      out.coeff_ints[i][j] = scaled.get_num();  // denominator is 1
    }
  return out;
}

// Image of f under w -> zeta_pow in Z/modulus.
ZPoly embed(const IntegerForm& form, const mpz_class& zeta_pow, const mpz_class& modulus) {
  // Precompute zeta_pow^j.
  std::vector<mpz_class> pw(form.D);
  pw[0] = 1;
  for (long j = 1; j < form.D; ++j) pw[j] = mod_mul(pw[j - 1], zeta_pow, modulus);
  ZPoly out(form.degree + 1, mpz_class(0));
  for (long i = 0; i <= form.degree; ++i) {
    mpz_class acc = 0;
    for (long j = 0; j < form.D; ++j) acc += form.coeff_ints[i][j] * pw[j];
    out[i] = mod_reduce(acc, modulus);
  }
  zpoly_trim(out);
  return out;
}

ZPoly zpoly_derivative(const ZPoly& f, const mpz_class& modulus) {
  ZPoly out(f.size() > 1 ? f.size() - 1 : 0);
  for (size_t i = 1; i < f.size(); ++i)
    out[i - 1] = mod_reduce(f[i] * static_cast<long>(i), modulus);
  zpoly_trim(out);
  return out;
}

// Find a prime p = 1 (mod M) for which every embedded image of f keeps full
// degree and stays squarefree.
ModularContext pick_prime(const IntegerForm& form, long M) {
  ModularContext ctx;
  ctx.M = M;
  ctx.D = form.D;
  for (long t = 0; t < std::max(M, 1L); ++t)
    if (std::gcd(t, M) == 1 || (M == 1 && t == 0)) ctx.exponents.push_back(t);
  if (M == 1) ctx.exponents = {0};

  mpz_class lower = mpz_class(1) << 31;
  for (int attempt = 0; attempt < 64; ++attempt) {
    mpz_class p = find_prime_one_mod(std::max(M, 1L), lower);
    mpz_class zeta = (M <= 1) ? mpz_class(1) : element_of_order(M, p);
    bool good = true;
    for (long t : ctx.exponents) {
      mpz_class zt = mod_pow(zeta, mpz_class(t), p);
      ZPoly img = embed(form, zt, p);
      if (zpoly_deg(img) != form.degree) { good = false; break; }
      ZPoly g = zpoly_gcd(img, zpoly_derivative(img, p), p);
      if (zpoly_deg(g) != 0) { good = false; break; }
    }
    if (good) {
      ctx.p = p;
      ctx.zeta = zeta;
      return ctx;
    }
    lower = p;  // try the next prime up
  }
  fail(ErrorCode::internal_error, "could not find a usable prime for modular root search");
}

// Solve the square system V b = r modulo a prime power, where V is
// invertible mod p.  Pivots are chosen among entries that are units.
std::vector<mpz_class> solve_mod(std::vector<std::vector<mpz_class>> V,
                                 std::vector<mpz_class> r,
                                 const mpz_class& modulus, const mpz_class& p) {
  const long n = static_cast<long>(V.size());
  std::vector<long> perm(n);
  for (long c = 0; c < n; ++c) {
    long pivot = -1;
    for (long i = c; i < n; ++i) {
      if (V[i][c] % p != 0) { pivot = i; break; }
    }
    if (pivot < 0) fail(ErrorCode::internal_error, "embedding system is singular");
    std::swap(V[pivot], V[c]);
    std::swap(r[pivot], r[c]);
    mpz_class inv = mod_inv(V[c][c], modulus);
    for (long j = c; j < n; ++j) V[c][j] = mod_mul(V[c][j], inv, modulus);
    r[c] = mod_mul(r[c], inv, modulus);
    for (long i = 0; i < n; ++i) {
      if (i == c || V[i][c] == 0) continue;
      mpz_class f = V[i][c];
      for (long j = c; j < n; ++j)
        V[i][j] = mod_reduce(V[i][j] - f * V[c][j], modulus);
      r[i] = mod_reduce(r[i] - f * r[c], modulus);
    }
  }
  return r;
}

// All roots of a squarefree polynomial inside Q(w_M), or a report of which
// part resisted.  Appends found roots; returns true when the factor is
// fully split over the field.
bool roots_of_squarefree(const Poly<Cyclo>& piece_in, const RootSearchOptions& opts,
                         std::vector<Cyclo>& out, Poly<Cyclo>& unresolved,
                         std::string& why) {
  const long M = opts.field_order;
  Poly<Cyclo> piece = piece_in.monic();

  // Trial fast path.
  for (const Cyclo& cand : trial_candidates(M)) {
    if (piece.degree() < 1) break;
    if (piece.eval(cand).is_zero()) {
      deflate_root(piece, cand);  // squarefree: divides exactly once
      out.push_back(cand);  // already canonical; arithmetic promotes on demand
    }
  }
  if (piece.degree() < 1) return true;

  // Modular stage, on the fixed residual `piece`.
  const IntegerForm form = integer_form(piece, M);
  const ModularContext ctx = pick_prime(form, M);
  std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);

  // Roots of every embedded image mod p.
  std::vector<std::vector<mpz_class>> image_roots;
  for (long t : ctx.exponents) {
    mpz_class zt = mod_pow(ctx.zeta, mpz_class(t), ctx.p);
    ZPoly img = embed(form, zt, ctx.p);
    std::vector<mpz_class> roots = zpoly_roots(img, ctx.p, rng);
    if (roots.empty()) {
      // A field root would be visible under every embedding, so there are none.
      unresolved = piece;
      why = "factor has no roots in the declared field";
      return false;
    }
    image_roots.push_back(std::move(roots));
  }

  // Candidate tuple count.
  long long tuples = 1;
  for (const auto& r : image_roots) {
    tuples *= static_cast<long long>(r.size());
    if (tuples > opts.tuple_cap) {
      unresolved = piece;
      std::ostringstream os;
      os << "cross-embedding tuple count exceeds cap " << opts.tuple_cap;
      why = os.str();
      return false;
    }
  }

  const long D = ctx.D;
  std::set<std::string> seen;
  std::vector<Cyclo> found;
  for (long N = 4; N <= opts.max_precision; N = N * 3) {
    // Lift the order-M generator and the image roots to mod p^N.
    mpz_class pN;
    mpz_pow_ui(pN.get_mpz_t(), ctx.p.get_mpz_t(), static_cast<unsigned long>(N));
    mpz_class zetaN = ctx.zeta;
    if (M > 1) {
      // lift as a (simple) root of x^M - 1; p does not divide M
      ZPoly xm(M + 1, mpz_class(0));
      xm[0] = -1;
      xm[M] = 1;
      zetaN = hensel_lift_root(xm, ctx.zeta, ctx.p, N).first;
    }
    std::vector<std::vector<mpz_class>> lifted(image_roots.size());
    for (size_t ti = 0; ti < ctx.exponents.size(); ++ti) {
      mpz_class ztN = mod_pow(zetaN, mpz_class(ctx.exponents[ti]), pN);
      ZPoly imgN = embed(form, ztN, pN);
      for (const mpz_class& r : image_roots[ti])
        lifted[ti].push_back(hensel_lift_root(imgN, r, ctx.p, N).first);
    }

    // Embedding matrix: row t, column j holds (zeta^t)^j.  Solving against a
    // tuple of lifted roots recovers power-basis coordinates mod p^N.
    std::vector<std::vector<mpz_class>> V(D, std::vector<mpz_class>(D));
    for (long ti = 0; ti < D; ++ti) {
      mpz_class ztN = mod_pow(zetaN, mpz_class(ctx.exponents[ti]), pN);
      V[ti][0] = 1;
      for (long j = 1; j < D; ++j) V[ti][j] = mod_mul(V[ti][j - 1], ztN, pN);
    }

    std::vector<size_t> idx(image_roots.size(), 0);
    for (;;) {
      std::vector<mpz_class> tuple(D);
      for (long ti = 0; ti < D; ++ti) tuple[ti] = lifted[ti][idx[ti]];
      std::vector<mpz_class> b = solve_mod(V, tuple, pN, ctx.p);
      bool reconstructed = true;
      std::vector<Rational> coords(D);
      for (long j = 0; j < D; ++j) {
        auto q = rational_reconstruct(b[j], pN);
        if (!q) { reconstructed = false; break; }
        coords[j] = *q;
      }
      if (reconstructed) {
        Cyclo cand = Cyclo::from_coords(M, coords);
        std::string k = cand.key();
        if (!seen.count(k)) {
          seen.insert(k);
          if (piece.eval(cand).is_zero()) found.push_back(cand);
        }
      }
      // advance the tuple odometer
      size_t pos = 0;
      while (pos < idx.size()) {
        if (++idx[pos] < lifted[pos].size()) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == idx.size()) break;
    }
    if (static_cast<long>(found.size()) == piece.degree()) break;
  }

  Poly<Cyclo> remaining = piece;
  for (const Cyclo& r : found) {
    deflate_root(remaining, r);  // squarefree: exactly one each
    out.push_back(r);
  }
  if (remaining.degree() >= 1) {
    unresolved = remaining;
    why = "roots of the residual factor do not lie in the declared field";
    return false;
  }
  return true;
}

}  // namespace

RootSearchResult find_roots(const Poly<Cyclo>& f, const RootSearchOptions& opts) {
  if (f.is_zero()) fail(ErrorCode::invalid_argument, "root search on the zero polynomial");
  RootSearchResult result;
  result.unresolved = Poly<Cyclo>::constant(Cyclo::one(opts.field_order));
  if (f.degree() == 0) {
    result.complete = true;
    return result;
  }

  // Promote every coefficient into the declared field up front; mixed orders
  // below would silently enlarge the search field.
  std::vector<Cyclo> promoted;
  for (long i = 0; i <= f.degree(); ++i) promoted.push_back(f[i].promoted(opts.field_order));
  Poly<Cyclo> g(std::move(promoted));

  std::vector<Poly<Cyclo>> pieces = squarefree_decomposition(g);
  bool all_complete = true;
  std::string why;
  for (size_t k = 0; k < pieces.size(); ++k) {
    if (pieces[k].degree() < 1) continue;
    std::vector<Cyclo> roots;
    Poly<Cyclo> unresolved = Poly<Cyclo>::constant(Cyclo::one(opts.field_order));
    bool complete = roots_of_squarefree(pieces[k], opts, roots, unresolved, why);
    for (const Cyclo& r : roots)
      result.roots.push_back(FoundRoot{r, static_cast<long>(k + 1)});
    if (!complete) {
      all_complete = false;
      result.unresolved = result.unresolved * unresolved;
    }
  }
  std::sort(result.roots.begin(), result.roots.end(),
            [](const FoundRoot& a, const FoundRoot& b) {
              return Cyclo::compare(a.value, b.value) < 0;
            });
  result.complete = all_complete;
  if (!all_complete) {
    if (why.empty()) why = "some roots lie outside the declared field";
    std::ostringstream os;
    os << why << "; unresolved factor degree " << result.unresolved.degree();
    result.failure_reason = os.str();
  }
  return result;
}

}  // namespace liegrade
