#include "eigenspaces.hpp"

#include <algorithm>
#include <sstream>

namespace liegrade {

namespace {

// Coordinate matrix C of the action of `a` on the row space of `b`:
// column j holds the B-coordinates of A v_j, so A (B^T y) = B^T (C y) and
// eigenvectors of C give eigenvectors of A inside the subspace.
CMat restriction_matrix(const CMat& a, const CMat& b) {
  const long k = b.rows();
  CMat bt = b.transposed();          // n x k
  CMat rhs = a * bt;                 // n x k: images of the basis vectors
  CMat c(k, k);
  for (long j = 0; j < k; ++j) {
    std::vector<Cyclo> col(rhs.rows());
    for (long i = 0; i < rhs.rows(); ++i) col[i] = rhs.at(i, j);
    auto [ok, x] = solve(bt, col);
    if (!ok)
      fail(ErrorCode::structure_violation,
           "subspace is not invariant under the matrix being diagonalized");
    for (long i = 0; i < k; ++i) c.at(i, j) = x[i];
  }
  return c;
}

}  // namespace

std::vector<EigenSpace> split_invariant_subspace(const CMat& matrix,
                                                 const CMat& space,
                                                 const EigenOptions& opts) {
  std::vector<EigenSpace> out;
  if (space.rows() == 0) return out;
  CMat c = restriction_matrix(matrix, space);
  Poly<Cyclo> chi = charpoly(c);
  RootSearchOptions ropts;
  ropts.field_order = opts.field_order;
  ropts.seed = opts.seed;
  RootSearchResult rr = find_roots(chi, ropts);
  if (!rr.complete) {
    std::ostringstream os;
    os << "eigenvalue outside the declared field Q(w_" << opts.field_order
       << "): " << rr.failure_reason;
    fail(ErrorCode::field_too_small, os.str());
  }
  long total = 0;
  for (const FoundRoot& root : rr.roots) {
    CMat shifted = c;
    for (long i = 0; i < shifted.rows(); ++i)
      shifted.at(i, i) = shifted.at(i, i) - root.value;
    CMat coords = kernel(shifted);  // rows: coordinates w.r.t. `space` rows
    if (coords.rows() != root.multiplicity) {
      std::ostringstream os;
      os << "restriction is not semisimple: eigenvalue " << root.value.str()
         << " has multiplicity " << root.multiplicity << " but eigenspace dimension "
         << coords.rows();
      fail(ErrorCode::not_diagonalizable, os.str());
    }
    EigenSpace es;
    es.values.push_back(root.value);
    es.basis = row_space(coords * space);
    total += coords.rows();
    out.push_back(std::move(es));
  }
  if (total != space.rows())
    fail(ErrorCode::not_diagonalizable,
         "eigenspace dimensions do not exhaust the subspace");
  return out;
}

std::vector<EigenSpace> simultaneous_eigenspaces(const std::vector<CMat>& mats,
                                                 const EigenOptions& opts) {
  if (mats.empty()) fail(ErrorCode::invalid_argument, "no matrices to diagonalize");
  const long n = mats[0].rows();
  std::vector<EigenSpace> spaces;
  EigenSpace whole;
  whole.basis = CMat::identity(n);
  spaces.push_back(std::move(whole));

  for (const CMat& a : mats) {
    std::vector<EigenSpace> refined;
    for (const EigenSpace& s : spaces) {
      std::vector<EigenSpace> parts = split_invariant_subspace(a, s.basis, opts);
      for (EigenSpace& p : parts) {
        EigenSpace merged;
        merged.values = s.values;
        merged.values.push_back(p.values[0]);
        merged.basis = std::move(p.basis);
        refined.push_back(std::move(merged));
      }
    }
    spaces = std::move(refined);
  }

  std::sort(spaces.begin(), spaces.end(), [](const EigenSpace& a, const EigenSpace& b) {
    for (size_t i = 0; i < a.values.size(); ++i) {
      int c = Cyclo::compare(a.values[i], b.values[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  return spaces;
}

}  // namespace liegrade
