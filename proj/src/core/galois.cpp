// Real structures, twisted group actions, and nonabelian first cohomology.
//
// All cohomology here is for the two-element Galois group of C/R acting on a
// finite matrix group through an involutive twist sigma.  A cocycle is a
// single element z with z sigma(z) = 1, two cocycles are equivalent when
// z' = a z sigma(a)^-1, and the kernel of a restriction map counts the
// classes of the subgroup that become trivial in the ambient group.  The
// orbit form of the equivalence keeps everything inside the precomputed
// multiplication table, so no matrix arithmetic happens past the setup.

#include "galois.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace liegrade {

namespace {

Vec conj_vec(const Vec& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].conj();
  return out;
}

CMat conj_mat(const CMat& m) {
  CMat out(m.rows(), m.cols());
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j).conj();
  return out;
}

bool vecs_equal(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

Vec RealStructure::conj(const Vec& v) const { return r.apply(conj_vec(v)); }

std::string real_structure_check(const GradedAlgebra& g, const RealStructure& s) {
  const long n = g.dim();
  if (s.r.rows() != n || s.r.cols() != n) return "matrix size does not match the algebra";

  // Involution: applying the map twice is r * conj(r) on coordinates.
  if (!(s.r * conj_mat(s.r) == CMat::identity(n))) return "map is not an involution";

  // Bracket compatibility on basis pairs: sigma[e_i, e_j] = [sigma e_i, sigma e_j].
  // Basis vectors are real, so sigma(e_i) is column i of r.
  std::vector<Vec> image(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    Vec col(static_cast<size_t>(n));
    for (long k = 0; k < n; ++k) col[static_cast<size_t>(k)] = s.r.at(k, i);
    image[static_cast<size_t>(i)] = col;
  }
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      Vec lhs = s.conj(g.algebra.bracket(g.algebra.basis_vector(i), g.algebra.basis_vector(j)));
      Vec rhs = g.algebra.bracket(image[static_cast<size_t>(i)], image[static_cast<size_t>(j)]);
      if (!vecs_equal(lhs, rhs)) return "map does not respect the bracket";
    }
  }

  // sigma theta sigma = theta^-1, i.e. r conj(theta) conj(r) = theta^-1,
  // so the map exchanges the degree d and degree -d components.
  CMat lhs = s.r * conj_mat(g.theta) * conj_mat(s.r);
  if (!(lhs == inverse(g.theta))) return "map does not invert the grading automorphism";

  return "";
}

RealStructure split_structure(const GradedAlgebra& g) {
  RealStructure s{CMat::identity(g.dim())};
  std::string err = real_structure_check(g, s);
  if (!err.empty()) fail(ErrorCode::structure_violation, "split structure: " + err);
  return s;
}

RealStructure compact_structure(const GradedAlgebra& g) {
  if (g.type.empty() || g.rank <= 0)
    fail(ErrorCode::invalid_argument, "compact structure needs a root-datum-based algebra");
  ChevalleyBasis cb = build_chevalley(g.type, g.rank);
  if (cb.dim() != g.dim())
    fail(ErrorCode::invalid_argument, "root datum dimension does not match the algebra");

  // h_i -> -h_i and e_a -> -e_(-a): the matrix is -1 times the permutation
  // exchanging opposite root vectors.
  CMat r(g.dim(), g.dim());
  const Cyclo minus_one = Cyclo::from_long(-1);
  for (long i = 0; i < cb.rs.rank; ++i) r(cb.h_index(i), cb.h_index(i)) = minus_one;
  for (size_t k = 0; k < cb.rs.roots.size(); ++k) {
    RootCoords neg = cb.rs.roots[k];
    for (long& c : neg) c = -c;
    long nk = cb.rs.index_of(neg);
    if (nk < 0) fail(ErrorCode::internal_error, "root system is not symmetric");
    r(cb.e_index(nk), cb.e_index(static_cast<long>(k))) = minus_one;
  }

  RealStructure s{std::move(r)};
  std::string err = real_structure_check(g, s);
  if (!err.empty())
    fail(ErrorCode::hypothesis_not_met,
         "compact structure unavailable for this grading: " + err);
  return s;
}

bool conj_stable(const RealStructure& s, const CMat& space) {
  // An antilinear bijection preserves dimension, so containment of the
  // images is enough.
  for (long i = 0; i < space.rows(); ++i)
    if (!subspace_contains(space, s.conj(space.row(i)))) return false;
  return true;
}

CMat conj_on_subspace(const RealStructure& s, const CMat& space) {
  if (!conj_stable(s, space))
    fail(ErrorCode::structure_violation, "subspace is not stable under the conjugation");
  // For p = sum x_i v_i the image is sum conj(x_i) sigma(v_i), so column i
  // holds the coordinates of sigma(v_i).
  CMat c(space.rows(), space.rows());
  for (long i = 0; i < space.rows(); ++i) {
    Vec coords = coords_in(space, s.conj(space.row(i)));
    for (long k = 0; k < space.rows(); ++k) c(k, i) = coords[static_cast<size_t>(k)];
  }
  return c;
}

std::vector<long> twist_on_group(const MatrixGroup& w, const CMat& c) {
  if (c.rows() != w.dim || c.cols() != w.dim)
    fail(ErrorCode::invalid_argument, "conjugation matrix size does not match the group");
  CMat cinv = inverse(c);
  std::vector<long> sigma(static_cast<size_t>(w.size()), -1);
  for (long a = 0; a < w.size(); ++a) {
    CMat image = c * conj_mat(w.elements[static_cast<size_t>(a)]) * cinv;
    long b = w.index_of(image);
    if (b < 0)
      fail(ErrorCode::structure_violation, "twist does not map the group into itself");
    sigma[static_cast<size_t>(a)] = b;
  }
  // c conj(.) c^-1 is multiplicative for free; the involution property is
  // a genuine constraint on c.
  for (long a = 0; a < w.size(); ++a)
    if (sigma[static_cast<size_t>(sigma[static_cast<size_t>(a)])] != a)
      fail(ErrorCode::structure_violation, "twist is not an involution");
  return sigma;
}

namespace {

// Cohomology of the subgroup given by `members` (ascending group indices),
// with cocycles and representatives kept as indices into the big group.
Cohomology cohomology_over(const MatrixGroup& w, const std::vector<long>& sigma,
                           const std::vector<long>& members) {
  Cohomology h;
  for (long z : members)
    if (w.mul(z, sigma[static_cast<size_t>(z)]) == w.identity) h.cocycles.push_back(z);

  // position of each group index inside h.cocycles, -1 for non-cocycles
  std::vector<long> pos(static_cast<size_t>(w.size()), -1);
  for (size_t i = 0; i < h.cocycles.size(); ++i)
    pos[static_cast<size_t>(h.cocycles[i])] = static_cast<long>(i);

  h.class_of.assign(h.cocycles.size(), -1);
  for (size_t start = 0; start < h.cocycles.size(); ++start) {
    if (h.class_of[start] != -1) continue;
    long id = static_cast<long>(h.reps.size());
    h.reps.push_back(h.cocycles[start]);
    h.class_of[start] = id;
    std::vector<long> queue{h.cocycles[start]};
    while (!queue.empty()) {
      long z = queue.back();
      queue.pop_back();
      for (long a : members) {
        long moved = w.mul(w.mul(a, z), w.inv(sigma[static_cast<size_t>(a)]));
        long p = pos[static_cast<size_t>(moved)];
        if (p < 0) fail(ErrorCode::internal_error, "twisted conjugation left the cocycle set");
        if (h.class_of[static_cast<size_t>(p)] == -1) {
          h.class_of[static_cast<size_t>(p)] = id;
          queue.push_back(moved);
        }
      }
    }
  }

  for (size_t i = 0; i < h.cocycles.size(); ++i)
    if (h.cocycles[i] == w.identity) h.trivial_class = h.class_of[i];
  if (h.trivial_class < 0 &&
      std::find(members.begin(), members.end(), w.identity) != members.end())
    fail(ErrorCode::internal_error, "identity cocycle missing");
  return h;
}

}  // namespace

Cohomology group_cohomology(const MatrixGroup& w, const std::vector<long>& sigma) {
  if (static_cast<long>(sigma.size()) != w.size())
    fail(ErrorCode::invalid_argument, "twist size does not match the group");
  std::vector<long> all(static_cast<size_t>(w.size()));
  for (long i = 0; i < w.size(); ++i) all[static_cast<size_t>(i)] = i;
  return cohomology_over(w, sigma, all);
}

RealOrbitCount real_orbit_count(const MatrixGroup& w, const std::vector<long>& sigma,
                                const std::vector<long>& stab) {
  if (static_cast<long>(sigma.size()) != w.size())
    fail(ErrorCode::invalid_argument, "twist size does not match the group");

  // The subset must be a subgroup ...
  std::vector<bool> in_stab(static_cast<size_t>(w.size()), false);
  for (long s : stab) {
    if (s < 0 || s >= w.size()) fail(ErrorCode::invalid_argument, "stabilizer index out of range");
    in_stab[static_cast<size_t>(s)] = true;
  }
  if (!in_stab[static_cast<size_t>(w.identity)])
    fail(ErrorCode::invalid_argument, "stabilizer does not contain the identity");
  for (long a : stab)
    for (long b : stab)
      if (!in_stab[static_cast<size_t>(w.mul(a, b))])
        fail(ErrorCode::invalid_argument, "stabilizer is not closed under products");

  // ... stable under the twist, or restriction is meaningless.
  for (long s : stab)
    if (!in_stab[static_cast<size_t>(sigma[static_cast<size_t>(s)])])
      fail(ErrorCode::hypothesis_not_met, "stabilizer is not stable under the twist");

  Cohomology big = cohomology_over(w, sigma, [&] {
    std::vector<long> all(static_cast<size_t>(w.size()));
    for (long i = 0; i < w.size(); ++i) all[static_cast<size_t>(i)] = i;
    return all;
  }());
  Cohomology small = cohomology_over(w, sigma, stab);

  // class id in the big group per group index (cocycles of the subgroup are
  // cocycles of the whole group)
  std::map<long, long> big_class;
  for (size_t i = 0; i < big.cocycles.size(); ++i) big_class[big.cocycles[i]] = big.class_of[i];

  RealOrbitCount out;
  for (long rep : small.reps) {
    auto it = big_class.find(rep);
    if (it == big_class.end()) fail(ErrorCode::internal_error, "subgroup cocycle lost");
    if (it->second == big.trivial_class) ++out.count;
  }
  return out;
}

RealPointResult real_point_decision(const MatrixGroup& w, const CMat& c,
                                    const std::vector<Cyclo>& p) {
  if (c.rows() != w.dim || static_cast<long>(p.size()) != w.dim)
    fail(ErrorCode::invalid_argument, "point or conjugation size does not match the group");
  RealPointResult out;
  Vec q = c.apply(conj_vec(p));
  out.direct = vecs_equal(q, p);
  for (long a = 0; a < w.size(); ++a) {
    if (vecs_equal(w.elements[static_cast<size_t>(w.inv(a))].apply(p), q)) {
      out.gamma = a;
      break;
    }
  }
  for (long a = 0; a < w.size(); ++a) {
    Vec t = w.elements[static_cast<size_t>(a)].apply(p);
    if (vecs_equal(c.apply(conj_vec(t)), t)) {
      out.translate_found = true;
      out.translate = t;
      break;
    }
  }
  return out;
}

}  // namespace liegrade
