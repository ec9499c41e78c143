// Cartan subspaces of the degree-d component of a graded algebra: maximal
// abelian subspaces consisting of semisimple elements.
//
// The membership test uses the centralizer criterion: with z = z_g(h),
// h is a Cartan subspace iff h is toral, Z(z) meets g_d exactly in h, and
// every element of [z, z] meets g_d only in nilpotent elements.  The search
// grows a toral subspace by adjoining semisimple parts of non-nilpotent
// witnesses until the criterion holds; each step strictly increases the
// dimension, so it terminates.

#pragma once

#include <string>
#include <vector>

#include "grading.hpp"

namespace liegrade {

struct CartanCheck {
  bool is_cartan = false;
  std::string reason;  // empty when is_cartan
};

// Full membership test for a subspace h of g_d.
CartanCheck is_cartan_subspace(const GradedAlgebra& g, const CMat& h, long degree = 1,
                               unsigned long long seed = 0x5eed);

struct CartanSearchOptions {
  long degree = 1;
  unsigned long long seed = 0x5eed;
  long witness_cap = 64;  // attempts to find a non-nilpotent element
  CMat start;             // optional toral subspace to extend (may be empty)
};

// Find a Cartan subspace of g_degree.  Result rows are a canonical basis.
CMat cartan_subspace(const GradedAlgebra& g, const CartanSearchOptions& opt = {});

// Whether z_g(h) is a Cartan subalgebra of the whole algebra (abelian and
// self-centralizing); gradings with this property admit the direct
// root-space analysis of the reflection group machinery.
bool is_maximal_rank(const GradedAlgebra& g, const CMat& h);

struct ClosureResult {
  CMat closure;               // canonical basis of the closure
  std::vector<long> support;  // degrees whose component is nonzero, ascending
};

// Smallest algebraically closed toral subalgebra containing the toral
// subspace h: elements y acting on each joint ad-eigenspace of h by scalars
// c that satisfy every rational linear relation among the eigenvalue
// functionals.  The result is graded; `support` lists its degrees.
ClosureResult algebraic_closure(const GradedAlgebra& g, const CMat& h,
                                unsigned long long seed = 0x5eed);

}  // namespace liegrade
