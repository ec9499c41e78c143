// Finite-dimensional Lie algebras over exact cyclotomic scalars, presented
// by structure constants on a fixed basis.
//
// Elements are coordinate vectors; subspaces are matrices whose rows form a
// basis, canonicalized by reduced row echelon form, so subspace equality is
// matrix equality.  The additive Jordan decomposition is computed exactly
// from the characteristic polynomial of the adjoint action (no eigenvector
// computation), which keeps every result inside the declared field.

#pragma once

#include <utility>
#include <vector>

#include "eigenspaces.hpp"
#include "matrix.hpp"

namespace liegrade {

using Vec = std::vector<Cyclo>;

class LieAlgebra {
 public:
  LieAlgebra() : dim_(0) {}
  explicit LieAlgebra(long dim) : dim_(dim), table_(static_cast<size_t>(dim)) {
    for (auto& row : table_) row.resize(static_cast<size_t>(dim));
  }

  long dim() const { return dim_; }

  // Define [b_i, b_j] for i < j as a sparse list of (index, coefficient).
  void set_bracket(long i, long j, std::vector<std::pair<long, Cyclo>> terms);

  Vec bracket(const Vec& x, const Vec& y) const;
  Vec basis_vector(long i) const;

  // Matrix of ad(x): column j is [x, b_j].
  CMat ad(const Vec& x) const;

  // Full Jacobi scan over all basis triples (antisymmetry holds by
  // construction of the table); returns the empty string on success,
  // otherwise a description of the first failure.
  std::string structure_check() const;

  // ---- subspace operations (rows = basis vectors; results canonical) ----

  CMat full_space() const { return CMat::identity(dim_); }

  // {v : [v, s] = 0 for all rows s of space}
  CMat centralizer_of(const CMat& space) const;
  CMat centralizer_of_element(const Vec& x) const;

  // center of a subalgebra given by rows of space
  CMat center_of(const CMat& space) const;
  // span of all brackets of rows of space
  CMat derived_of(const CMat& space) const;
  // smallest subalgebra containing the rows of space
  CMat generated_subalgebra(const CMat& space) const;

  bool is_subalgebra(const CMat& space) const;
  bool is_abelian(const CMat& space) const;
  // lower central series of a subalgebra reaches zero
  bool is_nilpotent_subalgebra(const CMat& space) const;

  bool is_nilpotent_element(const Vec& x) const;
  bool is_semisimple_element(const Vec& x) const;

  // Additive Jordan decomposition x = s + n with s semisimple, n nilpotent,
  // [s, n] = 0.  Requires the ambient algebra to have a faithful adjoint
  // representation (trivial center).
  std::pair<Vec, Vec> jordan(const Vec& x) const;

  // The subalgebra spanned by the rows of `space`, as a standalone algebra in
  // that basis.  Rows must span a subalgebra.
  LieAlgebra restructure(const CMat& space) const;

 private:
  long dim_;
  // table_[i][j] for i < j: sparse coordinates of [b_i, b_j]
  std::vector<std::vector<std::vector<std::pair<long, Cyclo>>>> table_;
};

// Convenience: x as a 1 x n matrix (row).
CMat vec_as_row(const Vec& x);
Vec row_as_vec(const CMat& m, long row);
Vec zero_vec(long n);
bool vec_is_zero(const Vec& x);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Cyclo& c, const Vec& a);

}  // namespace liegrade
