// Weights of a toral subspace h acting on the graded algebra: the joint
// ad-eigenvalue functionals, their eigenspaces, and the hyperplane
// arrangement the nonzero weights cut out of h.  Points of h off the
// arrangement are the regular points.

#pragma once

#include <vector>

#include "grading.hpp"

namespace liegrade {

struct Weight {
  std::vector<Cyclo> values;      // functional evaluated on the base rows
  CMat space;                     // joint eigenspace
  std::vector<long> degree_dims;  // dim(space n g_d) for d = 0..m-1
};

struct WeightSystem {
  CMat base;                    // canonical basis of the toral subspace
  std::vector<Weight> weights;  // includes the zero weight; sorted by values
  // nonzero functionals normalized to leading coefficient 1 and deduplicated
  // up to scalar, i.e. one representative per hyperplane; sorted
  std::vector<std::vector<Cyclo>> arrangement;
};

WeightSystem weight_system(const GradedAlgebra& g, const CMat& h,
                           unsigned long long seed = 0x5eed);

// Coordinates of a point of the row space in the base's basis.
std::vector<Cyclo> coords_in(const CMat& base, const Vec& p);

// Scale so the first nonzero entry is 1; the zero vector is unchanged.
std::vector<Cyclo> normalize_functional(std::vector<Cyclo> f);

// Kernel of a functional on coordinate space, as a canonical subspace.
CMat functional_kernel(const std::vector<Cyclo>& f);

// Evaluate a functional (given on base-row coordinates) at a point.
Cyclo functional_value(const std::vector<Cyclo>& f, const std::vector<Cyclo>& coords);

// Whether the point (ambient coordinates, must lie in ws.base) avoids every
// hyperplane of the arrangement.
bool is_regular(const WeightSystem& ws, const Vec& p);

// Restriction of the arrangement functionals to a subspace of the base
// (rows ambient): each functional is re-expressed on the subspace's basis.
// Zero restrictions are dropped; the rest are normalized and deduplicated.
std::vector<std::vector<Cyclo>> restrict_arrangement(const WeightSystem& ws,
                                                     const CMat& sub);

}  // namespace liegrade
