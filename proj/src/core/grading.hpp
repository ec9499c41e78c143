// Cyclic gradings of a semisimple Lie algebra: g = g_0 + g_1 + ... + g_(m-1)
// with [g_i, g_j] inside g_(i+j mod m), equivalently the eigenspace
// decomposition of a finite-order automorphism theta acting as w^d on g_d.
//
// Inner gradings are specified by nonnegative integer coordinates
// (s_0, s_1, ..., s_r) attached to the affine diagram nodes: the order is
// m = s_0 + sum_i a_i s_i (a_i the highest-root coefficients), a root vector
// e_b sits in degree sum_i b_i s_i mod m, and the Cartan generators sit in
// degree zero.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "rootdata.hpp"

namespace liegrade {

struct GradedAlgebra {
  LieAlgebra algebra;
  long m = 1;           // grading order
  CMat theta;           // automorphism matrix, order m
  std::vector<CMat> components;  // canonical bases of g_0 .. g_(m-1)

  // provenance when built from a root datum (informational)
  std::string type;
  long rank = 0;
  std::vector<long> kac;

  long dim() const { return algebra.dim(); }
  const CMat& component(long d) const;  // index taken mod m
  // intersection of a subspace with g_d
  CMat component_intersection(const CMat& space, long d) const;
  bool is_homogeneous(const Vec& x) const;
  // degree of a nonzero homogeneous element
  long degree_of(const Vec& x) const;
};

// Build the grading of the simple algebra of the given type from diagram
// coordinates s = (s_0, ..., s_rank), all >= 0, not all zero.
GradedAlgebra grade_from_kac(const std::string& type, long rank,
                             const std::vector<long>& s);

// Recover the grading from an explicit automorphism matrix of order dividing
// m: components are the kernels of (theta - w^d I).  Errors if theta is not
// an order-m automorphism of the algebra.
GradedAlgebra grading_from_theta(const LieAlgebra& L, const CMat& theta, long m);

// The automorphism matrix acting as w^d on the span of components[d].
// The components must be independent and fill the space.
CMat theta_from_components(const std::vector<CMat>& comps, long m);

// Full structural audit: theta^m = 1, theta is an automorphism, components
// are exactly its eigenspaces and sum directly to the whole algebra, and
// brackets respect degrees.  Returns "" or a description of the violation.
std::string grading_check(const GradedAlgebra& g);

// Jordan parts of a homogeneous element; both parts land in the same
// component (checked).
std::pair<Vec, Vec> graded_jordan(const GradedAlgebra& g, const Vec& x);

// Restrict the grading to a theta-invariant subalgebra (for example the
// centralizer of a homogeneous semisimple element).  The result is a
// standalone algebra in the subspace's canonical basis.
GradedAlgebra restrict_grading(const GradedAlgebra& g, const CMat& sub);

// Element of the row space with pseudorandom integer coefficients in
// [-spread, spread]; used by searches and randomized tests.
Vec random_element(const CMat& space, std::mt19937_64& rng, long spread = 3);

}  // namespace liegrade
