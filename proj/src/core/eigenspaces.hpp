// Joint eigenspace decomposition of commuting semisimple matrices over a
// declared cyclotomic field.
//
// Works by iterative refinement: each invariant subspace is split along the
// eigenvalues of each matrix's restriction in turn.  Eigenvalues must lie in
// Q(w_M); anything else is reported as a structured error naming the factor
// of the characteristic polynomial that resisted.

#pragma once

#include <vector>

#include "matrix.hpp"
#include "roots.hpp"

namespace liegrade {

struct EigenSpace {
  std::vector<Cyclo> values;  // eigenvalue per input matrix, in input order
  CMat basis;                 // rows span the joint eigenspace
};

struct EigenOptions {
  long field_order = 1;
  unsigned long seed = 0x5eed;
};

// Decompose the common domain of `mats` (all n x n, pairwise commuting,
// individually semisimple over Q(w_M)) into joint eigenspaces.  The result
// is sorted by eigenvalue tuple and the basis rows are canonical, so the
// output is deterministic.
std::vector<EigenSpace> simultaneous_eigenspaces(const std::vector<CMat>& mats,
                                                 const EigenOptions& opts);

// Split a single subspace (rows of `space`) under one matrix; helper shared
// with the decomposition above.
std::vector<EigenSpace> split_invariant_subspace(const CMat& matrix,
                                                 const CMat& space,
                                                 const EigenOptions& opts);

}  // namespace liegrade
