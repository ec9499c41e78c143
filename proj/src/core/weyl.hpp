// The reflection group of a Cartan subspace, its stratification of the
// subspace, and the family/centralizer comparisons built on top of it.
//
// When the centralizer t = z_g(h) is a Cartan subalgebra of the whole
// algebra (the maximal rank case), the group is computed from first
// principles: the roots of (g, t) give reflections, the subgroup commuting
// with the grading automorphism and preserving h restricts to h, and the
// restriction is validated to be generated by rank-one elements whose fixed
// hyperplanes appear in the weight arrangement.  Outside that case the
// caller supplies generators, which are validated against the arrangement.
//
// All group elements act on coordinates with respect to the canonical basis
// of h; strata are subspaces of that coordinate space.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weights.hpp"

namespace liegrade {

// A finite group of exact matrices, closed under product, with index-based
// multiplication and inverse tables.
struct MatrixGroup {
  long dim = 0;
  std::vector<CMat> elements;  // sorted by canonical key
  std::map<std::string, long> index;
  std::vector<std::vector<long>> table;  // table[a][b] = index of a*b
  std::vector<long> inverse;
  long identity = -1;

  long size() const { return static_cast<long>(elements.size()); }
  long index_of(const CMat& m) const;
  long mul(long a, long b) const { return table[a][b]; }
  long inv(long a) const { return inverse[a]; }
};

// Close a generating set under products (cap on the element count).
MatrixGroup group_closure(const std::vector<CMat>& gens, long dim, long cap);

struct WeylOptions {
  unsigned long long seed = 0x5eed;
  long cap = 200000;  // group size cap during closure
};

struct LittleWeyl {
  CMat h;                         // canonical ambient basis of the subspace
  MatrixGroup group;              // action on h-coordinates
  std::vector<long> reflections;  // indices of validated rank-one elements
};

// Little Weyl group via the root system of the Cartan subalgebra z_g(h).
// Errors: not_maximal_rank if z_g(h) is not Cartan, cap_exceeded if the
// ambient reflection group overflows, lifting_obstruction if the restricted
// group fails reflection validation.
LittleWeyl little_weyl_maximal_rank(const GradedAlgebra& g, const CMat& h,
                                    const WeylOptions& opt = {});

// Escape hatch for gradings without the maximal rank property: the caller
// supplies generator matrices on h-coordinates.  Every element of the
// closure must permute the weight hyperplanes; reflections are then
// identified and validated the same way.
LittleWeyl little_weyl_user(const GradedAlgebra& g, const CMat& h,
                            const std::vector<CMat>& gens,
                            const WeylOptions& opt = {});

// Indices of the elements fixing the point (h-coordinates).
std::vector<long> stabilizer_indices(const MatrixGroup& w, const std::vector<Cyclo>& p);

// Fix(w) as a canonical subspace of coordinate space.
CMat fixed_space(const CMat& w);

struct Stratum {
  CMat space;                    // subspace of h-coordinate space
  std::vector<long> stabilizer;  // pointwise stabilizer, ascending indices
  std::vector<Cyclo> rep;        // representative point with exact stabilizer
  long class_id = 0;             // orbit class under the group action
  bool class_rep = false;        // first member of its class
};

struct StrataResult {
  std::vector<Stratum> strata;  // sorted by (dim, key)
  long class_count = 0;
};

// Intersection lattice of the fixed spaces, pruned to the subspaces S with
// Fix(W_S) = S, grouped into orbit classes.
StrataResult strata_of(const LittleWeyl& lw, const WeightSystem& ws);

// For every group element w and every pair of strata: w S = S' holds exactly
// when w W_S w^-1 = W_S'.
bool verify_conjugation_equivalence(const LittleWeyl& lw, const StrataResult& sr);

// The walls of the stratum cut by reflections outside its stabilizer match
// the kernels of the weights that survive restriction to it.
bool circ_equals_reg(const LittleWeyl& lw, const WeightSystem& ws, const Stratum& s);

// Sample up to `count` rational points of the stratum with stabilizer
// exactly W_S and check they share one centralizer in g.  Requires the
// maximal rank property or a prime grading order (hypothesis_not_met).
bool verify_central(const GradedAlgebra& g, const LittleWeyl& lw,
                    const WeightSystem& ws, const Stratum& s, long count);

// Are the stabilizers of the two strata conjugate inside the group?
bool same_W_family(const MatrixGroup& w, const Stratum& a, const Stratum& b);

enum class TriState { yes, no, unknown };

// Same family in the stronger sense: equal centralizer type witnessed by a
// group element moving one representative onto the other's centralizer.
// `no` when dimensions or stabilizer classes already differ; `unknown` when
// no witness is found.
TriState same_gC_family(const GradedAlgebra& g, const LittleWeyl& lw,
                        const Stratum& a, const Stratum& b);

struct GammaResult {
  std::vector<long> rep_elements;  // one group index per quotient element
  MatrixGroup restricted;          // the action on stratum coordinates
  bool free_on_open_part = false;  // fixed sets stay inside proper lattice members
};

// N_W(W_S)/W_S acting on the stratum.
GammaResult gamma_of_stratum(const LittleWeyl& lw, const StrataResult& sr,
                             const Stratum& s);

// The little Weyl group of the centralizer of a point p of h (a graded
// reductive algebra), rebased to the same h-coordinates for comparison with
// the stabilizer of p in the ambient group.
LittleWeyl weyl_of_centralizer(const GradedAlgebra& g, const CMat& h,
                               const Vec& p_ambient, const WeylOptions& opt = {});

// Set equality of a group with a subset of another group's elements.
bool same_subgroup(const MatrixGroup& a, const MatrixGroup& b,
                   const std::vector<long>& b_subset);

}  // namespace liegrade
