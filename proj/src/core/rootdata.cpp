// Root system construction and Chevalley structure constants.

#include "rootdata.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace liegrade {

namespace {

// Cartan matrices, convention cartan[i][j] = <alpha_j, alpha_i^vee>, so the
// simple reflection acts by s_i(b) = b - (sum_j b_j * cartan[i][j]) * alpha_i.
std::vector<std::vector<long>> cartan_matrix(const std::string& type, long rank) {
  auto chain = [&](long n) {
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (long i = 0; i < n; ++i) c[i][i] = 2;
    for (long i = 0; i + 1 < n; ++i) { c[i][i + 1] = -1; c[i + 1][i] = -1; }
    return c;
  };
  if (type == "A") {
    if (rank < 1 || rank > 8) fail(ErrorCode::invalid_argument, "type A requires rank 1..8");
    return chain(rank);
  }
  if (type == "B") {
    if (rank < 2 || rank > 8) fail(ErrorCode::invalid_argument, "type B requires rank 2..8");
    auto c = chain(rank);
    c[rank - 1][rank - 2] = -2;  // short end node
    return c;
  }
  if (type == "C") {
    if (rank < 2 || rank > 8) fail(ErrorCode::invalid_argument, "type C requires rank 2..8");
    auto c = chain(rank);
    c[rank - 2][rank - 1] = -2;  // long end node
    return c;
  }
  if (type == "D") {
    if (rank < 4 || rank > 8) fail(ErrorCode::invalid_argument, "type D requires rank 4..8");
    auto c = chain(rank - 1);  // nodes 1..rank-1 form a chain
    c.resize(rank);
    for (auto& row : c) row.resize(rank, 0);
    c[rank - 1][rank - 1] = 2;
    // node `rank` attaches to node rank-2 (fork)
    c[rank - 1][rank - 3] = -1;
    c[rank - 3][rank - 1] = -1;
    return c;
  }
  if (type == "E") {
    if (rank < 6 || rank > 8) fail(ErrorCode::invalid_argument, "type E requires rank 6..8");
    std::vector<std::vector<long>> c(rank, std::vector<long>(rank, 0));
    for (long i = 0; i < rank; ++i) c[i][i] = 2;
    auto link = [&](long i, long j) { c[i - 1][j - 1] = -1; c[j - 1][i - 1] = -1; };
    link(1, 3); link(3, 4); link(4, 5); link(5, 6); link(2, 4);
    if (rank >= 7) link(6, 7);
    if (rank >= 8) link(7, 8);
    return c;
  }
  if (type == "F") {
    if (rank != 4) fail(ErrorCode::invalid_argument, "type F requires rank 4");
    auto c = chain(4);
    c[2][1] = -2;  // nodes 1,2 long; 3,4 short
    return c;
  }
  if (type == "G") {
    if (rank != 2) fail(ErrorCode::invalid_argument, "type G requires rank 2");
    return {{2, -3}, {-1, 2}};
  }
  fail(ErrorCode::invalid_argument, "unknown type '" + type + "' (expected A..G)");
}

long expected_root_count(const std::string& type, long rank) {
  if (type == "A") return rank * (rank + 1);
  if (type == "B" || type == "C") return 2 * rank * rank;
  if (type == "D") return 2 * rank * (rank - 1);
  if (type == "E") return rank == 6 ? 72 : (rank == 7 ? 126 : 240);
  if (type == "F") return 48;
  return 12;  // G
}

}  // namespace

long RootSystem::index_of(const RootCoords& r) const {
  auto it = root_index.find(r);
  if (it == root_index.end()) fail(ErrorCode::internal_error, "not a root");
  return it->second;
}

long RootSystem::height(const RootCoords& r) const {
  long h = 0;
  for (long c : r) h += c;
  return h;
}

Rational RootSystem::root_norm(const RootCoords& r) const {
  // (r, r) via the Gram matrix (alpha_i, alpha_j) = cartan[i][j] * norm[i] / 2
  Rational s = 0;
  for (long i = 0; i < rank; ++i) {
    if (r[i] == 0) continue;
    for (long j = 0; j < rank; ++j) {
      if (r[j] == 0) continue;
      s += Rational(r[i]) * Rational(r[j]) * Rational(cartan[i][j]) * norm[i] / 2;
    }
  }
  return s;
}

RootSystem build_root_system(const std::string& type, long rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.cartan = cartan_matrix(type, rank);

  // Simple-root norms from the symmetrization condition
  // norm[i] * cartan[i][j] = norm[j] * cartan[j][i], scaled so min norm = 2.
  rs.norm.assign(rank, Rational(0));
  rs.norm[0] = 2;
  bool progress = true;
  while (progress) {
    progress = false;
    for (long i = 0; i < rank; ++i) {
      for (long j = 0; j < rank; ++j) {
        if (i == j || rs.cartan[i][j] == 0) continue;
        if (rs.norm[i] != 0 && rs.norm[j] == 0) {
          rs.norm[j] = rs.norm[i] * Rational(rs.cartan[i][j]) / Rational(rs.cartan[j][i]);
          progress = true;
        }
      }
    }
  }
  Rational mn = rs.norm[0];
  for (const auto& v : rs.norm) {
    if (v == 0) fail(ErrorCode::internal_error, "disconnected Cartan diagram");
    if (v < mn) mn = v;
  }
  for (auto& v : rs.norm) v = v * 2 / mn;

  // Close the simple roots under all simple reflections.
  std::map<RootCoords, bool> seen;
  std::vector<RootCoords> work;
  for (long i = 0; i < rank; ++i) {
    RootCoords e(rank, 0);
    e[i] = 1;
    seen[e] = true;
    work.push_back(e);
  }
  while (!work.empty()) {
    RootCoords r = work.back();
    work.pop_back();
    for (long i = 0; i < rank; ++i) {
      long pairing = 0;
      for (long j = 0; j < rank; ++j) pairing += r[j] * rs.cartan[i][j];
      RootCoords s = r;
      s[i] -= pairing;
      if (!seen.count(s)) {
        seen[s] = true;
        work.push_back(s);
      }
    }
  }

  std::vector<RootCoords> pos, neg;
  for (const auto& [r, _] : seen) {
    bool nonneg = std::all_of(r.begin(), r.end(), [](long c) { return c >= 0; });
    bool nonpos = std::all_of(r.begin(), r.end(), [](long c) { return c <= 0; });
    if (nonneg)
      pos.push_back(r);
    else if (!nonpos)
      fail(ErrorCode::internal_error, "root with mixed-sign coordinates");
  }
  auto order = [&rs](const RootCoords& a, const RootCoords& b) {
    long ha = rs.height(a), hb = rs.height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  };
  std::sort(pos.begin(), pos.end(), order);
  for (const auto& r : pos) {
    RootCoords m(r);
    for (auto& c : m) c = -c;
    neg.push_back(m);
  }
  rs.roots = pos;
  rs.roots.insert(rs.roots.end(), neg.begin(), neg.end());
  rs.num_positive = static_cast<long>(pos.size());
  for (long k = 0; k < static_cast<long>(rs.roots.size()); ++k) rs.root_index[rs.roots[k]] = k;

  if (static_cast<long>(rs.roots.size()) != expected_root_count(type, rank))
    fail(ErrorCode::internal_error, "root count mismatch for " + type + std::to_string(rank));

  rs.highest_root = pos.back();
  if (pos.size() >= 2 && rs.height(pos[pos.size() - 2]) == rs.height(pos.back()))
    fail(ErrorCode::internal_error, "highest root is not unique");
  return rs;
}

namespace {

// Structure-constant builder.  Positive-pair constants are tabulated by
// ascending height of the sum; every other sign combination reduces to the
// table through antisymmetry, N(-a,-b) = -N(a,b), and the identity
// N(a,b)/(c,c) = N(b,c)/(a,a) for a+b+c = 0.
class ConstantTable {
 public:
  explicit ConstantTable(const RootSystem& rs) : rs_(rs) { build(); }

  // N(a, b) for roots with a + b a root.
  Rational n_of(const RootCoords& a, const RootCoords& b) const {
    bool apos = rs_.index_of(a) < rs_.num_positive;
    bool bpos = rs_.index_of(b) < rs_.num_positive;
    if (apos && bpos) return pos_lookup(a, b);
    if (!apos && !bpos) {
      RootCoords na = negate(a), nb = negate(b);
      return -n_of(na, nb);
    }
    if (!apos) return -n_of(b, a);
    // a positive, b negative, a + b a nonzero root
    RootCoords y = negate(b);          // positive
    RootCoords d = diff(a, y);         // a - y = a + b
    if (rs_.index_of(d) < rs_.num_positive) {
      // N(a,-y) = -N(y, a-y) * (a-y, a-y) / (a, a)
      return -n_of(y, d) * rs_.root_norm(d) / rs_.root_norm(a);
    }
    RootCoords t = negate(d);          // y - a, positive
    // N(a,-y) = N(y-a, a) * (y-a, y-a) / (y, y)
    return n_of(t, a) * rs_.root_norm(t) / rs_.root_norm(y);
  }

  // Length of the a-string through b in the negative direction:
  // the largest p >= 0 with b - p*a still a root.
  long string_down(const RootCoords& a, const RootCoords& b) const {
    long p = 0;
    RootCoords c = b;
    while (true) {
      c = diff(c, a);
      if (!rs_.is_root(c)) break;
      ++p;
    }
    return p;
  }

 private:
  static RootCoords negate(const RootCoords& r) {
    RootCoords m(r);
    for (auto& c : m) c = -c;
    return m;
  }
  static RootCoords diff(const RootCoords& a, const RootCoords& b) {
    RootCoords d(a);
    for (size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
    return d;
  }
  static RootCoords add(const RootCoords& a, const RootCoords& b) {
    RootCoords d(a);
    for (size_t i = 0; i < d.size(); ++i) d[i] += b[i];
    return d;
  }

  Rational pos_lookup(const RootCoords& a, const RootCoords& b) const {
    long ia = rs_.index_of(a), ib = rs_.index_of(b);
    if (ia < ib) {
      auto it = table_.find({ia, ib});
      if (it == table_.end()) fail(ErrorCode::internal_error, "missing structure constant");
      return it->second;
    }
    auto it = table_.find({ib, ia});
    if (it == table_.end()) fail(ErrorCode::internal_error, "missing structure constant");
    return -it->second;
  }

  void build() {
    // Group sums by height so lower constants are available when needed.
    for (long ig = 0; ig < rs_.num_positive; ++ig) {
      const RootCoords& gamma = rs_.roots[ig];
      if (rs_.height(gamma) < 2) continue;
      // Decompositions gamma = a + b with a, b positive, index(a) < index(b).
      std::vector<std::pair<long, long>> decomps;
      for (long ia = 0; ia < rs_.num_positive; ++ia) {
        RootCoords b = diff(gamma, rs_.roots[ia]);
        auto it = rs_.root_index.find(b);
        if (it == rs_.root_index.end() || it->second >= rs_.num_positive) continue;
        if (ia < it->second) decomps.emplace_back(ia, it->second);
      }
      if (decomps.empty()) fail(ErrorCode::internal_error, "positive root with no decomposition");
      std::sort(decomps.begin(), decomps.end());

      // The minimal decomposition carries the chosen positive sign.
      auto [ie, ih] = decomps.front();
      const RootCoords& eps = rs_.roots[ie];
      const RootCoords& eta = rs_.roots[ih];
      table_[{ie, ih}] = Rational(string_down(eps, eta) + 1);

      for (size_t k = 1; k < decomps.size(); ++k) {
        auto [iaa, ibb] = decomps[k];
        const RootCoords& a = rs_.roots[iaa];
        const RootCoords& b = rs_.roots[ibb];
        // Jacobi identity on (eps, eta, -b), all three brackets landing on
        // the a component:
        //   N(eps,eta) N(gamma,-b) + N(eta,-b) N(eta-b,eps)
        //                          + N(-b,eps) N(eps-b,eta) = 0
        // with N(gamma,-b) = N(a,b) (a,a)/(gamma,gamma).
        Rational t = 0;
        RootCoords d1 = diff(eta, b);
        if (rs_.is_root(d1)) t += n_of(eta, negate(b)) * n_of(d1, eps);
        RootCoords d2 = diff(eps, b);
        if (rs_.is_root(d2)) t += n_of(negate(b), eps) * n_of(d2, eta);
        Rational n_eps_eta = table_.at({ie, ih});
        Rational val = -t * rs_.root_norm(gamma) / (rs_.root_norm(a) * n_eps_eta);
        // Magnitude check: |N(a,b)| must equal (string length) + 1.
        Rational want(string_down(a, b) + 1);
        if (val != want && val != -want)
          fail(ErrorCode::internal_error, "structure constant magnitude mismatch");
        table_[{iaa, ibb}] = val;
      }
    }
    // All table entries must be integers.
    for (const auto& [key, v] : table_) {
      (void)key;
      if (v.get_den() != 1)
        fail(ErrorCode::internal_error, "non-integral structure constant");
    }
  }

  const RootSystem& rs_;
  std::map<std::pair<long, long>, Rational> table_;
};

}  // namespace

std::vector<Rational> ChevalleyBasis::coroot_coeffs(const RootCoords& r) const {
  // r_vee = sum_i r_i * (alpha_i, alpha_i)/(r, r) * alpha_i_vee
  std::vector<Rational> c(rs.rank);
  Rational nr = rs.root_norm(r);
  for (long i = 0; i < rs.rank; ++i) c[i] = Rational(r[i]) * rs.norm[i] / nr;
  return c;
}

ChevalleyBasis build_chevalley(const std::string& type, long rank) {
  ChevalleyBasis cb;
  cb.rs = build_root_system(type, rank);
  const RootSystem& rs = cb.rs;
  ConstantTable nt(rs);

  long n_roots = static_cast<long>(rs.roots.size());
  long dim = rs.rank + n_roots;
  LieAlgebra L(dim);

  auto ridx = [&](long k) { return rs.rank + k; };

  // [h_i, e_r] = <r, alpha_i^vee> e_r
  for (long i = 0; i < rs.rank; ++i) {
    for (long k = 0; k < n_roots; ++k) {
      long pairing = 0;
      for (long j = 0; j < rs.rank; ++j) pairing += rs.roots[k][j] * rs.cartan[i][j];
      if (pairing != 0)
        L.set_bracket(i, ridx(k), {{ridx(k), Cyclo::from_long(pairing, 1)}});
    }
  }

  // [e_r, e_s]
  for (long k = 0; k < n_roots; ++k) {
    for (long l = k + 1; l < n_roots; ++l) {
      RootCoords sum(rs.roots[k]);
      for (long j = 0; j < rs.rank; ++j) sum[j] += rs.roots[l][j];
      bool zero = std::all_of(sum.begin(), sum.end(), [](long c) { return c == 0; });
      if (zero) {
        // l indexes the negative of a positive root k: [e_r, e_-r] = h_r.
        std::vector<std::pair<long, Cyclo>> terms;
        auto cc = cb.coroot_coeffs(rs.roots[k]);
        for (long i = 0; i < rs.rank; ++i) {
          if (cc[i] == 0) continue;
          if (cc[i].get_den() != 1)
            fail(ErrorCode::internal_error, "coroot is not integral");
          terms.emplace_back(i, Cyclo::from_rational(cc[i], 1));
        }
        L.set_bracket(ridx(k), ridx(l), terms);
        continue;
      }
      if (!rs.is_root(sum)) continue;
      Rational n = nt.n_of(rs.roots[k], rs.roots[l]);
      L.set_bracket(ridx(k), ridx(l), {{ridx(rs.index_of(sum)), Cyclo::from_rational(n, 1)}});
    }
  }

  cb.algebra = std::move(L);
  return cb;
}

}  // namespace liegrade
