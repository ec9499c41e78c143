// Cartan subspace membership, search, and the toral closure computation.

#include "cartan.hpp"

#include <algorithm>
#include <optional>

#include "eigenspaces.hpp"
#include "errors.hpp"

namespace liegrade {

namespace {

// Sound nilpotency certificate for the span of V: the subalgebra S generated
// by V is nilpotent as an abstract algebra, and every basis vector of V acts
// nilpotently on the whole algebra.  The weights of a nilpotent algebra
// acting on a module are linear functionals, so vanishing on a basis of V
// forces every element of span(V) to act nilpotently.
bool span_is_nilpotent(const LieAlgebra& L, const CMat& v) {
  if (v.rows() == 0) return true;
  CMat s = L.generated_subalgebra(v);
  if (!L.is_nilpotent_subalgebra(s)) return false;
  for (long r = 0; r < v.rows(); ++r)
    if (!L.is_nilpotent_element(row_as_vec(v, r))) return false;
  return true;
}

// Candidate elements of a subspace: basis rows first, then the all-ones
// combination, then random integer combinations of growing spread.
class CandidateStream {
 public:
  CandidateStream(const CMat& space, unsigned long long seed)
      : space_(space), rng_(seed) {}

  std::optional<Vec> next() {
    ++count_;
    if (space_.rows() == 0) return std::nullopt;
    if (count_ <= space_.rows()) return row_as_vec(space_, count_ - 1);
    if (count_ == space_.rows() + 1) {
      Vec v = zero_vec(space_.cols());
      for (long r = 0; r < space_.rows(); ++r) v = vec_add(v, row_as_vec(space_, r));
      return v;
    }
    long spread = 1 + (count_ - space_.rows()) / 8;
    return random_element(space_, rng_, spread);
  }

 private:
  const CMat& space_;
  std::mt19937_64 rng_;
  long count_ = 0;
};

std::optional<Vec> find_non_nilpotent(const LieAlgebra& L, const CMat& v,
                                      unsigned long long seed, long cap) {
  CandidateStream stream(v, seed);
  for (long i = 0; i < cap; ++i) {
    auto cand = stream.next();
    if (!cand) return std::nullopt;
    if (!vec_is_zero(*cand) && !L.is_nilpotent_element(*cand)) return cand;
  }
  return std::nullopt;
}

}  // namespace

CartanCheck is_cartan_subspace(const GradedAlgebra& g, const CMat& h, long degree,
                               unsigned long long seed) {
  const LieAlgebra& L = g.algebra;
  CMat hb = row_space(h);

  for (long r = 0; r < hb.rows(); ++r) {
    Vec v = row_as_vec(hb, r);
    if (!subspace_contains(g.component(degree), v))
      return {false, "subspace is not contained in the requested component"};
    if (!L.is_semisimple_element(v))
      return {false, "subspace contains a non-semisimple basis vector"};
  }
  if (!L.is_abelian(hb)) return {false, "subspace is not abelian"};

  CMat z = L.centralizer_of(hb);
  CMat c = L.center_of(z);
  CMat cd = g.component_intersection(c, degree);
  if (!(cd == hb))
    return {false, "the center of the centralizer meets the component in a larger space"};

  CMat derived = L.derived_of(z);
  CMat vd = g.component_intersection(derived, degree);
  if (span_is_nilpotent(L, vd)) return {true, ""};
  if (find_non_nilpotent(L, vd, seed, 64))
    return {false, "derived part of the centralizer contains a non-nilpotent element"};
  fail(ErrorCode::search_failed,
       "nilpotency of the derived part could not be certified or refuted");
}

CMat cartan_subspace(const GradedAlgebra& g, const CartanSearchOptions& opt) {
  const LieAlgebra& L = g.algebra;
  long n = g.dim();

  CMat h = (opt.start.rows() == 0) ? CMat(0, n) : row_space(opt.start);
  if (h.cols() != n) fail(ErrorCode::invalid_argument, "starting subspace has the wrong width");
  for (long r = 0; r < h.rows(); ++r) {
    Vec v = row_as_vec(h, r);
    if (!subspace_contains(g.component(opt.degree), v))
      fail(ErrorCode::invalid_argument, "starting subspace leaves the component");
    if (!L.is_semisimple_element(v))
      fail(ErrorCode::invalid_argument, "starting subspace has a non-semisimple basis vector");
  }
  if (!L.is_abelian(h))
    fail(ErrorCode::invalid_argument, "starting subspace is not abelian");

  long comp_dim = g.component(opt.degree).rows();
  for (long round = 0; round <= comp_dim + 1; ++round) {
    CMat z = L.centralizer_of(h);
    CMat c = L.center_of(z);
    CMat cd = g.component_intersection(c, opt.degree);
    if (!subspace_leq(h, cd))
      fail(ErrorCode::internal_error, "toral subspace escaped the center of its centralizer");
    if (cd.rows() > h.rows()) {
      // The center of a reductive centralizer is toral, so the whole
      // component slice can be adopted at once.
      h = cd;
      continue;
    }

    CMat derived = L.derived_of(z);
    CMat vd = g.component_intersection(derived, opt.degree);
    if (span_is_nilpotent(L, vd)) return h;

    // Adjoin the semisimple part of a non-nilpotent witness; it commutes
    // with h because the separating polynomial has zero constant term.
    CandidateStream stream(vd, opt.seed + static_cast<unsigned long long>(round));
    bool extended = false;
    for (long i = 0; i < opt.witness_cap; ++i) {
      auto cand = stream.next();
      if (!cand) break;
      if (vec_is_zero(*cand) || L.is_nilpotent_element(*cand)) continue;
      auto [xs, xn] = graded_jordan(g, *cand);
      if (vec_is_zero(xs))
        fail(ErrorCode::internal_error, "non-nilpotent element with zero semisimple part");
      if (subspace_contains(h, xs)) continue;
      CMat wider(h.rows() + 1, n);
      for (long r = 0; r < h.rows(); ++r) wider.set_row(r, h.row(r));
      wider.set_row(h.rows(), xs);
      h = row_space(wider);
      extended = true;
      break;
    }
    if (!extended)
      fail(ErrorCode::search_failed,
           "no usable non-nilpotent witness found in the derived part");
  }
  fail(ErrorCode::internal_error, "Cartan search failed to terminate");
}

bool is_maximal_rank(const GradedAlgebra& g, const CMat& h) {
  const LieAlgebra& L = g.algebra;
  CMat z = L.centralizer_of(row_space(h));
  if (!L.is_abelian(z)) return false;
  return L.centralizer_of(z) == z;
}

ClosureResult algebraic_closure(const GradedAlgebra& g, const CMat& h,
                                unsigned long long seed) {
  const LieAlgebra& L = g.algebra;
  long n = g.dim();
  CMat hb = row_space(h);
  long s = hb.rows();

  ClosureResult out;
  if (s == 0) {
    out.closure = CMat(0, n);
    return out;
  }

  std::vector<CMat> ads;
  for (long r = 0; r < s; ++r) ads.push_back(L.ad(row_as_vec(hb, r)));

  EigenOptions eopt;
  eopt.field_order = g.m;
  eopt.seed = static_cast<unsigned long>(seed);
  std::vector<EigenSpace> spaces = simultaneous_eigenspaces(ads, eopt);
  long k = static_cast<long>(spaces.size());

  // Rational relations among the eigenvalue functionals: stack the
  // power-basis coordinates of every value and take the kernel.
  long common = 1;
  for (const auto& sp : spaces)
    for (const auto& v : sp.values) common = std::lcm(common, v.order());
  long deg = euler_phi(common);
  QMat rel(s * deg, k);
  for (long j = 0; j < k; ++j) {
    for (long r = 0; r < s; ++r) {
      Cyclo v = spaces[static_cast<size_t>(j)].values[static_cast<size_t>(r)].promoted(common);
      for (long t = 0; t < deg; ++t) rel(r * deg + t, j) = v.coords()[static_cast<size_t>(t)];
    }
  }
  QMat relations = kernel(rel);

  // Solve for pairs (y, c): y acts on the j-th eigenspace by the scalar c_j,
  // and the scalars satisfy every relation the eigenvalues do.
  long rows = 0;
  for (const auto& sp : spaces) rows += sp.basis.rows() * n;
  rows += relations.rows();
  CMat big(rows, n + k);
  long row = 0;
  for (long j = 0; j < k; ++j) {
    const CMat& basis = spaces[static_cast<size_t>(j)].basis;
    for (long b = 0; b < basis.rows(); ++b) {
      Vec v = row_as_vec(basis, b);
      CMat adv = L.ad(v);
      for (long r = 0; r < n; ++r) {
        for (long t = 0; t < n; ++t) big(row, t) = adv(r, t);
        big(row, n + j) = v[static_cast<size_t>(r)];
        ++row;
      }
    }
  }
  for (long q = 0; q < relations.rows(); ++q) {
    for (long j = 0; j < k; ++j)
      big(row, n + j) = Cyclo::from_rational(relations(q, j), 1);
    ++row;
  }

  CMat sol = kernel(big);
  CMat ys(sol.rows(), n);
  for (long r = 0; r < sol.rows(); ++r)
    for (long t = 0; t < n; ++t) ys(r, t) = sol(r, t);
  out.closure = row_space(ys);

  if (!subspace_leq(hb, out.closure))
    fail(ErrorCode::internal_error, "closure does not contain the input subspace");

  long graded_total = 0;
  for (long d = 0; d < g.m; ++d) {
    CMat inter = g.component_intersection(out.closure, d);
    if (inter.rows() > 0) out.support.push_back(d);
    graded_total += inter.rows();
  }
  if (graded_total != out.closure.rows())
    fail(ErrorCode::structure_violation, "closure is not graded");
  return out;
}

}  // namespace liegrade
