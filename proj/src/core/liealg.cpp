#include "liealg.hpp"

#include <sstream>

namespace liegrade {

CMat vec_as_row(const Vec& x) {
  CMat m(1, static_cast<long>(x.size()));
  for (size_t j = 0; j < x.size(); ++j) m.at(0, static_cast<long>(j)) = x[j];
  return m;
}

Vec row_as_vec(const CMat& m, long row) { return m.row(row); }

Vec zero_vec(long n) { return Vec(static_cast<size_t>(n), Cyclo::zero(1)); }

bool vec_is_zero(const Vec& x) {
  for (const Cyclo& c : x)
    if (!c.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec out(a);
  for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out(a);
  for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Vec vec_scale(const Cyclo& c, const Vec& a) {
  Vec out(a);
  for (Cyclo& v : out) v *= c;
  return out;
}

void LieAlgebra::set_bracket(long i, long j, std::vector<std::pair<long, Cyclo>> terms) {
  if (i >= j || i < 0 || j >= dim_)
    fail(ErrorCode::invalid_argument, "structure constants must be given for i < j");
  table_[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(terms);
}

Vec LieAlgebra::basis_vector(long i) const {
  Vec v = zero_vec(dim_);
  v[static_cast<size_t>(i)] = Cyclo::one(1);
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out = zero_vec(dim_);
  std::vector<long> xs, ys;
  for (long i = 0; i < dim_; ++i)
    if (!x[i].is_zero()) xs.push_back(i);
  for (long j = 0; j < dim_; ++j)
    if (!y[j].is_zero()) ys.push_back(j);
  for (long i : xs)
    for (long j : ys) {
      if (i == j) continue;
      Cyclo c = x[i] * y[j];
      if (c.is_zero()) continue;
      if (i < j)
        for (const auto& [k, v] : table_[i][j]) out[k] += c * v;
      else
        for (const auto& [k, v] : table_[j][i]) out[k] -= c * v;
    }
  return out;
}

CMat LieAlgebra::ad(const Vec& x) const {
  CMat out(dim_, dim_);
  for (long j = 0; j < dim_; ++j) {
    Vec col = bracket(x, basis_vector(j));
    for (long i = 0; i < dim_; ++i) out.at(i, j) = col[i];
  }
  return out;
}

std::string LieAlgebra::structure_check() const {
  // Jacobi scan over all basis triples, expanded straight from the structure
  // table: each nested bracket of basis vectors is a stored term list, so a
  // triple costs a few term-list walks instead of dense vector arithmetic.
  std::vector<std::pair<long, Cyclo>> acc;
  auto put = [&](long t, Cyclo c) {
    for (auto& e : acc)
      if (e.first == t) {
        e.second += c;
        return;
      }
    acc.emplace_back(t, std::move(c));
  };
  auto add_bracket = [&](long a, long b, const Cyclo& c) {
    // acc += c * [b_a, b_b]
    if (a == b) return;
    if (a < b)
      for (const auto& [k, v] : table_[a][b]) put(k, c * v);
    else
      for (const auto& [k, v] : table_[b][a]) put(k, -(c * v));
  };
  for (long i = 0; i < dim_; ++i)
    for (long j = i + 1; j < dim_; ++j) {
      const auto& tij = table_[i][j];
      for (long k = j + 1; k < dim_; ++k) {
        acc.clear();
        for (const auto& [t, c] : tij) add_bracket(t, k, c);           // [[i,j],k]
        for (const auto& [t, c] : table_[j][k]) add_bracket(t, i, c);  // [[j,k],i]
        for (const auto& [t, c] : table_[i][k]) add_bracket(t, j, -c); // [[k,i],j]
        bool ok = true;
        for (const auto& e : acc)
          if (!e.second.is_zero()) {
            ok = false;
            break;
          }
        if (!ok) {
          std::ostringstream os;
          os << "Jacobi identity fails on basis triple (" << i << "," << j << "," << k << ")";
          return os.str();
        }
      }
    }
  return "";
}

CMat LieAlgebra::centralizer_of(const CMat& space) const {
  if (space.rows() == 0) return row_space(full_space());
  CMat stacked(space.rows() * dim_, dim_);
  for (long s = 0; s < space.rows(); ++s) {
    CMat a = ad(space.row(s));
    for (long i = 0; i < dim_; ++i)
      for (long j = 0; j < dim_; ++j) stacked.at(s * dim_ + i, j) = a.at(i, j);
  }
  return row_space(kernel(stacked));
}

CMat LieAlgebra::centralizer_of_element(const Vec& x) const {
  return row_space(kernel(ad(x)));
}

CMat LieAlgebra::center_of(const CMat& space) const {
  return subspace_intersection(row_space(space), centralizer_of(space));
}

CMat LieAlgebra::derived_of(const CMat& space) const {
  const long k = space.rows();
  std::vector<Vec> brackets;
  for (long i = 0; i < k; ++i)
    for (long j = i + 1; j < k; ++j)
      brackets.push_back(bracket(space.row(i), space.row(j)));
  CMat m(static_cast<long>(brackets.size()), dim_);
  for (size_t r = 0; r < brackets.size(); ++r) m.set_row(static_cast<long>(r), brackets[r]);
  return row_space(m);
}

CMat LieAlgebra::generated_subalgebra(const CMat& space) const {
  CMat current = row_space(space);
  for (;;) {
    CMat bigger = subspace_sum(current, derived_of(current));
    if (bigger.rows() == current.rows()) return current;
    current = std::move(bigger);
  }
}

bool LieAlgebra::is_subalgebra(const CMat& space) const {
  CMat canon = row_space(space);
  for (long i = 0; i < canon.rows(); ++i)
    for (long j = i + 1; j < canon.rows(); ++j)
      if (!subspace_contains(canon, bracket(canon.row(i), canon.row(j)))) return false;
  return true;
}

bool LieAlgebra::is_abelian(const CMat& space) const {
  for (long i = 0; i < space.rows(); ++i)
    for (long j = i + 1; j < space.rows(); ++j)
      if (!vec_is_zero(bracket(space.row(i), space.row(j)))) return false;
  return true;
}

bool LieAlgebra::is_nilpotent_subalgebra(const CMat& space) const {
  CMat s = row_space(space);
  // lower central series s, [s,s], [s,[s,s]], ... within the subalgebra
  CMat term = s;
  for (long step = 0; step <= dim_ + 1; ++step) {
    if (term.rows() == 0) return true;
    // next term: span of [s_i, t_j]
    std::vector<Vec> brackets;
    for (long i = 0; i < s.rows(); ++i)
      for (long j = 0; j < term.rows(); ++j)
        brackets.push_back(bracket(s.row(i), term.row(j)));
    CMat m(static_cast<long>(brackets.size()), dim_);
    for (size_t r = 0; r < brackets.size(); ++r) m.set_row(static_cast<long>(r), brackets[r]);
    CMat next = row_space(m);
    if (next.rows() >= term.rows() && next == term) return false;  // series stalled
    term = std::move(next);
  }
  return term.rows() == 0;
}

bool LieAlgebra::is_nilpotent_element(const Vec& x) const {
  CMat a = ad(x);
  // square repeatedly: ad(x)^(2^k) with 2^k >= dim
  long k = 1;
  while (k < dim_) {
    a = a * a;
    if (a.is_zero()) return true;
    k *= 2;
  }
  return a.is_zero();
}

bool LieAlgebra::is_semisimple_element(const Vec& x) const {
  CMat a = ad(x);
  Poly<Cyclo> g = squarefree_part(charpoly(a));
  return poly_at_matrix(g, a).is_zero();
}

std::pair<Vec, Vec> LieAlgebra::jordan(const Vec& x) const {
  CMat a = ad(x);
  Poly<Cyclo> f = charpoly(a);
  Poly<Cyclo> g = squarefree_part(f);

  // Polynomial q with q = t mod the radical filtration and g(q) = 0 mod f:
  // Newton iteration in the quotient ring; quadratic convergence, so the
  // loop count is logarithmic in the largest multiplicity.
  Poly<Cyclo> q = Poly<Cyclo>::identity() % f;
  for (long guard = 0; ; ++guard) {
    Poly<Cyclo> gq = poly_compose_mod(g, q, f);
    if (gq.is_zero()) break;
    if (guard > dim_ + 2)
      fail(ErrorCode::internal_error, "semisimple-part iteration failed to converge");
    Poly<Cyclo> gpq = poly_compose_mod(g.derivative(), q, f);
    Poly<Cyclo> u = poly_invmod(gpq, f);
    q = (q - poly_mulmod(gq, u, f)) % f;
  }
  CMat s = poly_at_matrix(q, a);

  // Solve ad(y) = s for y: the adjoint representation is faithful here, and
  // the semisimple part of an adjoint matrix is again adjoint.
  CMat system(dim_ * dim_, dim_);
  for (long k = 0; k < dim_; ++k) {
    CMat adk = ad(basis_vector(k));
    for (long i = 0; i < dim_; ++i)
      for (long j = 0; j < dim_; ++j) system.at(i * dim_ + j, k) = adk.at(i, j);
  }
  std::vector<Cyclo> rhs(static_cast<size_t>(dim_ * dim_), Cyclo::zero(1));
  for (long i = 0; i < dim_; ++i)
    for (long j = 0; j < dim_; ++j) rhs[static_cast<size_t>(i * dim_ + j)] = s.at(i, j);
  auto [ok, y] = solve(system, rhs);
  if (!ok)
    fail(ErrorCode::structure_violation,
         "semisimple part is not an adjoint matrix; is the algebra semisimple?");
  Vec xs(y);
  Vec xn = vec_sub(x, xs);
  if (!vec_is_zero(bracket(xs, xn)))
    fail(ErrorCode::internal_error, "Jordan components do not commute");
  return {std::move(xs), std::move(xn)};
}

LieAlgebra LieAlgebra::restructure(const CMat& space) const {
  CMat canon = row_space(space);
  const long k = canon.rows();
  CMat basis_t = canon.transposed();
  LieAlgebra out(k);
  for (long i = 0; i < k; ++i)
    for (long j = i + 1; j < k; ++j) {
      Vec br = bracket(canon.row(i), canon.row(j));
      auto [ok, coords] = solve(basis_t, br);
      if (!ok)
        fail(ErrorCode::invalid_argument, "rows do not span a subalgebra");
      std::vector<std::pair<long, Cyclo>> terms;
      for (long t = 0; t < k; ++t)
        if (!coords[t].is_zero()) terms.emplace_back(t, coords[t]);
      out.set_bracket(i, j, std::move(terms));
    }
  return out;
}

}  // namespace liegrade
