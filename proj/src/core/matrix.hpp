// Exact dense linear algebra over Rational or Cyclo entries: Gaussian
// elimination (reduced row echelon form, rank, kernel, solve, inverse),
// characteristic polynomials via an exact Hessenberg reduction, and
// canonical subspace arithmetic.
//
// Subspaces of F^n are represented by matrices whose rows form a basis; the
// canonical representative is the reduced row echelon form, so two subspaces
// are equal exactly when their canonical matrices are equal.

#pragma once

#include <string>
#include <vector>

#include "poly.hpp"

namespace liegrade {

template <class F>
class Mat {
 public:
  using Traits = FieldTraits<F>;

  Mat() : rows_(0), cols_(0) {}
  Mat(long rows, long cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows * cols), Traits::zero()) {}

  static Mat identity(long n) {
    Mat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = Traits::one();
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  F& at(long r, long c) { return data_[static_cast<size_t>(r * cols_ + c)]; }
  const F& at(long r, long c) const { return data_[static_cast<size_t>(r * cols_ + c)]; }
  F& operator()(long r, long c) { return at(r, c); }
  const F& operator()(long r, long c) const { return at(r, c); }

  Mat operator*(const Mat& o) const {
    Mat out(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
      for (long k = 0; k < cols_; ++k) {
        const F& a = at(i, k);
        if (Traits::is_zero(a)) continue;
        for (long j = 0; j < o.cols_; ++j) {
          const F& b = o.at(k, j);
          if (Traits::is_zero(b)) continue;
          out.at(i, j) = out.at(i, j) + a * b;
        }
      }
    return out;
  }

  Mat operator+(const Mat& o) const {
    Mat out(*this);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = out.data_[i] + o.data_[i];
    return out;
  }

  Mat operator-(const Mat& o) const {
    Mat out(*this);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = out.data_[i] - o.data_[i];
    return out;
  }

  Mat scaled(const F& s) const {
    Mat out(*this);
    for (F& v : out.data_) v = v * s;
    return out;
  }

  Mat transposed() const {
    Mat out(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    std::vector<F> out(rows_, Traits::zero());
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) {
        if (Traits::is_zero(at(i, j))) continue;
        out[i] = out[i] + at(i, j) * v[j];
      }
    return out;
  }

  std::vector<F> row(long i) const {
    std::vector<F> out(cols_, Traits::zero());
    for (long j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
  }

  void set_row(long i, const std::vector<F>& v) {
    for (long j = 0; j < cols_; ++j) at(i, j) = v[j];
  }

  bool operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
      if (!Traits::is_zero(data_[i] - o.data_[i])) return false;
    return true;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const F& v : data_)
      if (!Traits::is_zero(v)) return false;
    return true;
  }

 private:
  long rows_, cols_;
  std::vector<F> data_;
};

// In-place reduced row echelon form.  Pivots are normalized to 1 and fully
// reduced upward; the first nonzero candidate in column order is always the
// pivot, so the result is canonical.  Returns the pivot column indices.
template <class F>
std::vector<long> rref_in_place(Mat<F>& m) {
  using Traits = FieldTraits<F>;
  std::vector<long> pivots;
  long r = 0;
  for (long c = 0; c < m.cols() && r < m.rows(); ++c) {
    long pivot = -1;
    for (long i = r; i < m.rows(); ++i) {
      if (!Traits::is_zero(m.at(i, c))) { pivot = i; break; }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (long j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    }
    F inv = Traits::one() / m.at(r, c);
    for (long j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
    for (long i = 0; i < m.rows(); ++i) {
      if (i == r || Traits::is_zero(m.at(i, c))) continue;
      F f = m.at(i, c);
      for (long j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
long rank_of(Mat<F> m) {
  return static_cast<long>(rref_in_place(m).size());
}

// Canonical basis matrix of the row space: RREF with zero rows dropped.
template <class F>
Mat<F> row_space(const Mat<F>& m) {
  Mat<F> r = m;
  std::vector<long> pivots = rref_in_place(r);
  Mat<F> out(static_cast<long>(pivots.size()), m.cols());
  for (long i = 0; i < out.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) out.at(i, j) = r.at(i, j);
  return out;
}

// Canonical basis (as rows) of the right kernel {x : m x = 0}.
template <class F>
Mat<F> kernel(const Mat<F>& m) {
  using Traits = FieldTraits<F>;
  Mat<F> r = m;
  std::vector<long> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (long c : pivots) is_pivot[c] = true;
  std::vector<long> free_cols;
  for (long c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat<F> out(static_cast<long>(free_cols.size()), m.cols());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    long fc = free_cols[k];
    out.at(static_cast<long>(k), fc) = Traits::one();
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
      out.at(static_cast<long>(k), pivots[pi]) =
          Traits::zero() - r.at(static_cast<long>(pi), fc);
    }
  }
  return out;
}

// One solution x of m x = b, or empty if the system is inconsistent.
template <class F>
std::pair<bool, std::vector<F>> solve(const Mat<F>& m, const std::vector<F>& b) {
  using Traits = FieldTraits<F>;
  Mat<F> aug(m.rows(), m.cols() + 1);
  for (long i = 0; i < m.rows(); ++i) {
    for (long j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<long> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols())
    return {false, {}};  // pivot in the constants column
  std::vector<F> x(m.cols(), Traits::zero());
  for (size_t pi = 0; pi < pivots.size(); ++pi)
    x[pivots[pi]] = aug.at(static_cast<long>(pi), m.cols());
  return {true, std::move(x)};
}

// Inverse of a square matrix; fails if singular.
template <class F>
Mat<F> inverse(const Mat<F>& m) {
  using Traits = FieldTraits<F>;
  long n = m.rows();
  Mat<F> aug(n, 2 * n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Traits::one();
  }
  std::vector<long> pivots = rref_in_place(aug);
  if (static_cast<long>(pivots.size()) != n || pivots[n - 1] != n - 1)
    fail(ErrorCode::invalid_argument, "matrix is singular");
  Mat<F> out(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

// Characteristic polynomial det(tI - m), monic, exact.  The matrix is first
// brought to upper Hessenberg form by a Gaussian similarity, then the
// leading-principal-minor recurrence assembles the polynomial.
template <class F>
Poly<F> charpoly(const Mat<F>& m) {
  using Traits = FieldTraits<F>;
  long n = m.rows();
  if (n != m.cols()) fail(ErrorCode::invalid_argument, "characteristic polynomial of a non-square matrix");
  if (n == 0) return Poly<F>::constant(Traits::one());
  Mat<F> h = m;
  // Hessenberg reduction: for each column c, pick a nonzero entry below the
  // subdiagonal position, move it to (c+1, c) by a row+column swap, and
  // clear the rest of the column with row operations mirrored by column
  // operations (so the spectrum is preserved).
  for (long c = 0; c + 2 < n; ++c) {
    long pivot = -1;
    for (long i = c + 1; i < n; ++i) {
      if (!Traits::is_zero(h.at(i, c))) { pivot = i; break; }
    }
    if (pivot < 0) continue;
    if (pivot != c + 1) {
      for (long j = 0; j < n; ++j) std::swap(h.at(pivot, j), h.at(c + 1, j));
      for (long i = 0; i < n; ++i) std::swap(h.at(i, pivot), h.at(i, c + 1));
    }
    F inv = Traits::one() / h.at(c + 1, c);
    for (long i = c + 2; i < n; ++i) {
      if (Traits::is_zero(h.at(i, c))) continue;
      F f = h.at(i, c) * inv;
      // row_i -= f * row_{c+1}, then col_{c+1} += f * col_i
      for (long j = 0; j < n; ++j) h.at(i, j) = h.at(i, j) - f * h.at(c + 1, j);
      for (long r = 0; r < n; ++r) h.at(r, c + 1) = h.at(r, c + 1) + f * h.at(r, i);
    }
  }
  // p_k = (t - h[k][k]) p_{k-1} - sum_i h[i][k] * (prod of subdiagonals) * p_{i-1}
  std::vector<Poly<F>> p(static_cast<size_t>(n) + 1);
  p[0] = Poly<F>::constant(Traits::one());
  for (long k = 1; k <= n; ++k) {
    Poly<F> t_minus = Poly<F>(std::vector<F>{Traits::zero() - h.at(k - 1, k - 1), Traits::one()});
    Poly<F> acc = t_minus * p[k - 1];
    F beta = Traits::one();  // product of h[j+1][j] for j = i..k-2 (1-based i..k-1)
    for (long i = k - 1; i >= 1; --i) {
      beta = beta * h.at(i, i - 1);
      if (!Traits::is_zero(h.at(i - 1, k - 1))) {
        acc = acc - (p[i - 1] * Poly<F>::constant(h.at(i - 1, k - 1) * beta));
      }
      if (Traits::is_zero(beta)) break;
    }
    p[k] = std::move(acc);
  }
  return p[n];
}

// Evaluate a polynomial at a matrix argument, by Horner.
template <class F>
Mat<F> poly_at_matrix(const Poly<F>& p, const Mat<F>& m) {
  using Traits = FieldTraits<F>;
  long n = m.rows();
  Mat<F> acc(n, n);
  for (long i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    for (long d = 0; d < n; ++d) acc.at(d, d) = acc.at(d, d) + p[i];
  }
  return acc;
}

// ---- subspace arithmetic (rows = basis vectors, canonical form = RREF) ----

template <class F>
bool subspace_contains(const Mat<F>& space_rref, const std::vector<F>& v) {
  using Traits = FieldTraits<F>;
  std::vector<F> w = v;
  // Reduce w against the RREF rows.
  for (long i = 0; i < space_rref.rows(); ++i) {
    long pc = -1;
    for (long j = 0; j < space_rref.cols(); ++j) {
      if (!Traits::is_zero(space_rref.at(i, j))) { pc = j; break; }
    }
    if (pc < 0) continue;
    if (Traits::is_zero(w[pc])) continue;
    F f = w[pc];  // pivot is 1
    for (long j = 0; j < space_rref.cols(); ++j)
      w[j] = w[j] - f * space_rref.at(i, j);
  }
  for (const F& x : w)
    if (!Traits::is_zero(x)) return false;
  return true;
}

template <class F>
bool subspace_leq(const Mat<F>& a_rref, const Mat<F>& b_rref) {
  for (long i = 0; i < a_rref.rows(); ++i)
    if (!subspace_contains(b_rref, a_rref.row(i))) return false;
  return true;
}

template <class F>
Mat<F> subspace_sum(const Mat<F>& a, const Mat<F>& b) {
  Mat<F> stacked(a.rows() + b.rows(), a.cols());
  for (long i = 0; i < a.rows(); ++i) stacked.set_row(i, a.row(i));
  for (long i = 0; i < b.rows(); ++i) stacked.set_row(a.rows() + i, b.row(i));
  return row_space(stacked);
}

// Zassenhaus: intersection of the row spaces of a and b.
template <class F>
Mat<F> subspace_intersection(const Mat<F>& a, const Mat<F>& b) {
  using Traits = FieldTraits<F>;
  long n = a.cols();
  Mat<F> z(a.rows() + b.rows(), 2 * n);
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < n; ++j) {
      z.at(i, j) = a.at(i, j);
      z.at(i, n + j) = a.at(i, j);
    }
  for (long i = 0; i < b.rows(); ++i)
    for (long j = 0; j < n; ++j) z.at(a.rows() + i, j) = b.at(i, j);
  rref_in_place(z);
  // Rows whose left half is zero carry intersection vectors in the right half.
  std::vector<std::vector<F>> found;
  for (long i = 0; i < z.rows(); ++i) {
    bool left_zero = true;
    for (long j = 0; j < n && left_zero; ++j)
      if (!Traits::is_zero(z.at(i, j))) left_zero = false;
    if (!left_zero) continue;
    std::vector<F> v(n, Traits::zero());
    bool nonzero = false;
    for (long j = 0; j < n; ++j) {
      v[j] = z.at(i, n + j);
      if (!Traits::is_zero(v[j])) nonzero = true;
    }
    if (nonzero) found.push_back(std::move(v));
  }
  Mat<F> out(static_cast<long>(found.size()), n);
  for (size_t i = 0; i < found.size(); ++i) out.set_row(static_cast<long>(i), found[i]);
  return row_space(out);
}

// Deterministic serialization for hashing / ordering of group elements.
inline std::string mat_key(const Mat<Cyclo>& m) {
  std::string out;
  out.reserve(static_cast<size_t>(m.rows() * m.cols()) * 8);
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) {
      out += m.at(i, j).key();
      out += ';';
    }
  return out;
}

using QMat = Mat<Rational>;
using CMat = Mat<Cyclo>;

}  // namespace liegrade
