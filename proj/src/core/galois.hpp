// Real structures on a graded algebra and the finite-group cohomology that
// counts real orbits.
//
// A real structure is an antilinear involution sigma(x) = R * conj(x) of the
// complexified algebra that respects the bracket and inverts the grading
// automorphism, so it exchanges g_d and g_(-d).  Restricting sigma to a
// stable Cartan subspace h induces a twist of the little Weyl group W:
// sigma(w) = C conj(w) C^-1 with C the conjugation matrix on h-coordinates.
// The orbits of a homogeneous semisimple element over the real points are
// then counted by the kernel of the map on nonabelian first cohomology
// H^1(W_p) -> H^1(W) for the twisted conjugation action, where W_p is the
// stabilizer of the point.

#pragma once

#include "weyl.hpp"

namespace liegrade {

// Antilinear map v -> r * conj(v); an involution when r * conj(r) = 1.
struct RealStructure {
  CMat r;

  Vec conj(const Vec& v) const;
};

// Entrywise conjugation (r = identity).  Valid whenever the structure
// constants are rational and theta is diagonal in the given basis, which
// holds for the gradings built from diagram coordinates; verified before
// returning.
RealStructure split_structure(const GradedAlgebra& g);

// The compact involution relative to the Chevalley basis of g's root datum:
// h_i -> -h_i, e_a -> -e_(-a), composed with entrywise conjugation.  It
// inverts theta only when theta^2 = 1, so grading orders above two are
// rejected (hypothesis_not_met).
RealStructure compact_structure(const GradedAlgebra& g);

// Full audit of a candidate structure: r * conj(r) = 1, the map respects
// the bracket on all basis pairs, and r * conj(theta) * conj(r) equals
// theta^-1.  Returns "" or a description of the first violation.
std::string real_structure_check(const GradedAlgebra& g, const RealStructure& s);

// Is the row space stable under the antilinear map?
bool conj_stable(const RealStructure& s, const CMat& space);

// Matrix of the antilinear map on a stable subspace: if p has coordinates x
// in the rows of `space`, then sigma(p) has coordinates c * conj(x).
// Errors (structure_violation) when the space is not stable.
CMat conj_on_subspace(const RealStructure& s, const CMat& space);

// The twist w -> c * conj(w) * c^-1 as a permutation of the group's element
// indices.  The image must land in the group and the permutation must be an
// involution (structure_violation otherwise); multiplicativity is automatic
// for maps of this shape.
std::vector<long> twist_on_group(const MatrixGroup& w, const CMat& c);

// First cohomology of a finite group with involutive twist sigma: cocycles
// are the z with z * sigma(z) = 1, cohomologous means z ~ a z sigma(a)^-1.
struct Cohomology {
  std::vector<long> cocycles;  // ascending group indices
  std::vector<long> class_of;  // class id per entry of `cocycles`
  std::vector<long> reps;      // first cocycle (group index) of each class
  long trivial_class = -1;     // class of the identity cocycle

  long size() const { return static_cast<long>(reps.size()); }
};

Cohomology group_cohomology(const MatrixGroup& w, const std::vector<long>& sigma);

struct RealOrbitCount {
  long count = 0;
  // The count equals the number of real orbits when the complex orbit meets
  // the real points at all; the computation itself does not certify that.
  bool assumes_rational_point = true;
};

// |ker(H^1(W_p) -> H^1(W))| for the subgroup given by ascending element
// indices `stab`.  The subset must be a subgroup stable under the twist
// (hypothesis_not_met when the twist moves it).
RealOrbitCount real_orbit_count(const MatrixGroup& w, const std::vector<long>& sigma,
                                const std::vector<long>& stab);

struct RealPointResult {
  bool direct = false;     // sigma fixes the point itself
  long gamma = -1;         // first w with sigma(p) = w^-1 p, -1 if none
  bool translate_found = false;
  std::vector<Cyclo> translate;  // a group translate of p fixed by sigma
};

// Decide how a point of h (coordinates in the rows of h) interacts with the
// conjugation c on h-coordinates: fixed directly, fixed up to the group
// (the cocycle witness gamma), and whether some translate w p is honestly
// fixed.
RealPointResult real_point_decision(const MatrixGroup& w, const CMat& c,
                                    const std::vector<Cyclo>& p);

}  // namespace liegrade
