// Root systems of the finite Cartan types A-G and the integral Chevalley
// basis of the corresponding semisimple Lie algebra.
//
// Roots are integer vectors in simple-root coordinates.  The structure
// constants N(a,b) are fixed by the extraspecial-pair normalization: the
// minimal decomposition of every positive root gets the sign +(p+1); all
// other constants follow from antisymmetry, negation symmetry, and the
// Jacobi identity, processed by ascending height.  The magnitude |N| = p+1
// is asserted along the way, and the assembled algebra passes a full Jacobi
// scan (exercised by the tests).
//
// Basis layout of the assembled algebra: coroot generators h_1..h_r first,
// then e_b for positive roots b in (height, lexicographic) order, then the
// matching negative-root vectors in the same order.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "liealg.hpp"

namespace liegrade {

using RootCoords = std::vector<long>;

struct RootSystem {
  std::string type;  // "A".."G"
  long rank = 0;
  std::vector<std::vector<long>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<Rational> norm;             // (alpha_i, alpha_i), shortest = 2
  std::vector<RootCoords> roots;          // positive roots first, then negatives
  long num_positive = 0;
  std::map<RootCoords, long> root_index;  // coords -> index into `roots`
  std::vector<long> highest_root;         // coefficients of the highest root

  bool is_root(const RootCoords& r) const { return root_index.count(r) > 0; }
  long index_of(const RootCoords& r) const;
  Rational root_norm(const RootCoords& r) const;  // (r, r)
  long height(const RootCoords& r) const;
};

// Build the root system for a type/rank; validates the rank range per type.
RootSystem build_root_system(const std::string& type, long rank);

struct ChevalleyBasis {
  RootSystem rs;
  LieAlgebra algebra;
  // basis index helpers
  long h_index(long i) const { return i; }                      // 0..rank-1
  long e_index(long root) const { return rs.rank + root; }      // root = index into rs.roots
  long dim() const { return rs.rank + static_cast<long>(rs.roots.size()); }
  // coroot of an arbitrary root, as integer coefficients over h_1..h_r
  std::vector<Rational> coroot_coeffs(const RootCoords& r) const;
};

// Assemble the Lie algebra with integer structure constants.
ChevalleyBasis build_chevalley(const std::string& type, long rank);

}  // namespace liegrade
