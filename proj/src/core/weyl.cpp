// Little Weyl groups, stratification, and family comparisons.

#include "weyl.hpp"

#include <algorithm>
#include <set>

#include "cartan.hpp"
#include "eigenspaces.hpp"
#include "errors.hpp"

namespace liegrade {

namespace {

bool is_prime_order(long m) {
  if (m < 2) return false;
  for (long d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

// Image of a row-space under a coordinate transformation.
CMat transform_subspace(const CMat& space, const CMat& w) {
  // Row r holds point coordinates; its image is w * r^T, i.e. r * w^T.
  CMat moved = space * w.transposed();
  return row_space(moved);
}

// Matrix of w restricted to an invariant subspace, on the subspace's
// row-basis coordinates.
CMat restriction_to(const CMat& w, const CMat& sub) {
  long r = sub.rows();
  CMat out(r, r);
  for (long i = 0; i < r; ++i) {
    Vec img = w.apply(row_as_vec(sub, i));
    auto [ok, coords] = solve(sub.transposed(), img);
    if (!ok) fail(ErrorCode::internal_error, "subspace is not invariant under the element");
    for (long j = 0; j < r; ++j) out(j, i) = coords[static_cast<size_t>(j)];
  }
  return out;
}

Vec point_to_ambient(const CMat& basis, const std::vector<Cyclo>& coords) {
  Vec v = zero_vec(basis.cols());
  for (long r = 0; r < basis.rows(); ++r)
    v = vec_add(v, vec_scale(coords[static_cast<size_t>(r)], row_as_vec(basis, r)));
  return v;
}

// Integer points of Z^d with infinity-norm exactly `level`, in
// lexicographic order.
std::vector<std::vector<long>> grid_shell(long d, long level) {
  std::vector<std::vector<long>> out;
  std::vector<long> c(static_cast<size_t>(d), -level);
  while (true) {
    long mx = 0;
    for (long v : c) mx = std::max(mx, std::abs(v));
    if (mx == level) out.push_back(c);
    long i = d - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == level) {
      c[static_cast<size_t>(i)] = -level;
      --i;
    }
    if (i < 0) break;
    ++c[static_cast<size_t>(i)];
  }
  return out;
}

// Validate that every element is a weight-arrangement symmetry and collect
// the rank-one elements whose fixed hyperplanes are weight kernels.
std::vector<long> validate_reflections(const MatrixGroup& grp, const WeightSystem& ws,
                                       bool require_arrangement_symmetry) {
  long s = grp.dim;
  std::set<std::string> functional_keys;
  std::set<std::string> kernel_keys;
  for (const auto& f : ws.arrangement) {
    std::string fk;
    for (const auto& c : f) fk += c.key() + ";";
    functional_keys.insert(fk);
    kernel_keys.insert(mat_key(functional_kernel(f)));
  }

  if (require_arrangement_symmetry) {
    for (const auto& el : grp.elements) {
      for (const auto& f : ws.arrangement) {
        // f composed with the element: row vector times matrix
        std::vector<Cyclo> g(static_cast<size_t>(s), Cyclo::zero());
        for (long j = 0; j < s; ++j)
          for (long i = 0; i < s; ++i) g[static_cast<size_t>(j)] += f[static_cast<size_t>(i)] * el(i, j);
        g = normalize_functional(std::move(g));
        std::string gk;
        for (const auto& c : g) gk += c.key() + ";";
        if (!functional_keys.count(gk))
          fail(ErrorCode::lifting_obstruction,
               "group element does not permute the weight hyperplanes");
      }
    }
  }

  std::vector<long> refl;
  std::vector<CMat> refl_mats;
  CMat id = CMat::identity(s);
  for (long a = 0; a < grp.size(); ++a) {
    CMat d = grp.elements[static_cast<size_t>(a)] - id;
    if (rank_of(d) != 1) continue;
    if (!kernel_keys.count(mat_key(row_space(kernel(d))))) continue;
    refl.push_back(a);
    refl_mats.push_back(grp.elements[static_cast<size_t>(a)]);
  }
  MatrixGroup gen = group_closure(refl_mats, s, grp.size() + 1);
  if (gen.size() != grp.size())
    fail(ErrorCode::lifting_obstruction,
         "group is not generated by its arrangement reflections");
  return refl;
}

}  // namespace

long MatrixGroup::index_of(const CMat& m) const {
  auto it = index.find(mat_key(m));
  return it == index.end() ? -1 : it->second;
}

MatrixGroup group_closure(const std::vector<CMat>& gens, long dim, long cap) {
  for (const auto& m : gens)
    if (m.rows() != dim || m.cols() != dim)
      fail(ErrorCode::invalid_argument, "generator has the wrong shape");

  std::map<std::string, CMat> pool;
  CMat id = CMat::identity(dim);
  pool.emplace(mat_key(id), id);
  std::vector<CMat> work{id};
  while (!work.empty()) {
    CMat cur = std::move(work.back());
    work.pop_back();
    for (const auto& s : gens) {
      CMat nx = cur * s;
      std::string key = mat_key(nx);
      if (pool.count(key)) continue;
      if (static_cast<long>(pool.size()) >= cap)
        fail(ErrorCode::cap_exceeded, "group closure exceeded the element cap");
      pool.emplace(std::move(key), nx);
      work.push_back(std::move(nx));
    }
  }

  MatrixGroup g;
  g.dim = dim;
  for (auto& [key, m] : pool) {
    g.index.emplace(key, g.size());
    g.elements.push_back(std::move(m));
  }
  g.identity = g.index_of(id);

  long n = g.size();
  g.table.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), -1));
  for (long a = 0; a < n; ++a) {
    for (long b = 0; b < n; ++b) {
      long c = g.index_of(g.elements[static_cast<size_t>(a)] * g.elements[static_cast<size_t>(b)]);
      if (c < 0) fail(ErrorCode::internal_error, "group closure is not closed");
      g.table[static_cast<size_t>(a)][static_cast<size_t>(b)] = c;
    }
  }
  g.inverse.assign(static_cast<size_t>(n), -1);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      if (g.table[static_cast<size_t>(a)][static_cast<size_t>(b)] == g.identity)
        g.inverse[static_cast<size_t>(a)] = b;
  return g;
}

LittleWeyl little_weyl_maximal_rank(const GradedAlgebra& g, const CMat& h,
                                    const WeylOptions& opt) {
  const LieAlgebra& L = g.algebra;
  CMat hb = row_space(h);
  long n = g.dim();

  CMat t = L.centralizer_of(hb);
  if (!L.is_abelian(t) || !(L.centralizer_of(t) == t))
    fail(ErrorCode::not_maximal_rank,
         "the centralizer of the subspace is not a Cartan subalgebra");
  long tdim = t.rows();

  // Root decomposition of g under t.
  std::vector<CMat> ads;
  for (long r = 0; r < tdim; ++r) ads.push_back(L.ad(row_as_vec(t, r)));
  EigenOptions eopt;
  eopt.field_order = g.m;
  eopt.seed = static_cast<unsigned long>(opt.seed);
  std::vector<EigenSpace> spaces = simultaneous_eigenspaces(ads, eopt);

  struct RootDatum {
    std::vector<Cyclo> vals;
    Vec vec;
    std::string key;
  };
  std::vector<RootDatum> roots;
  std::map<std::string, long> root_by_key;
  for (const auto& sp : spaces) {
    bool zero = std::all_of(sp.values.begin(), sp.values.end(),
                            [](const Cyclo& c) { return c.is_zero(); });
    if (zero) {
      if (!(sp.basis == t))
        fail(ErrorCode::internal_error, "zero weight space differs from the Cartan subalgebra");
      continue;
    }
    if (sp.basis.rows() != 1)
      fail(ErrorCode::internal_error, "root space of dimension greater than one");
    RootDatum rd;
    rd.vals = sp.values;
    rd.vec = row_as_vec(sp.basis, 0);
    for (const auto& c : rd.vals) rd.key += c.key() + ";";
    root_by_key.emplace(rd.key, static_cast<long>(roots.size()));
    roots.push_back(std::move(rd));
  }

  // One reflection per root: s(x) = x - a(x) * coroot.
  std::vector<CMat> reflections;
  for (const auto& rd : roots) {
    std::string neg_key;
    for (const auto& c : rd.vals) neg_key += (-c).key() + ";";
    auto it = root_by_key.find(neg_key);
    if (it == root_by_key.end())
      fail(ErrorCode::internal_error, "root without an opposite root");
    const RootDatum& op = roots[static_cast<size_t>(it->second)];

    Vec hp = L.bracket(rd.vec, op.vec);
    auto [ok, hc] = solve(t.transposed(), hp);
    if (!ok || vec_is_zero(hp))
      fail(ErrorCode::internal_error, "degenerate root pairing");
    Cyclo pairing = Cyclo::zero();
    for (long k = 0; k < tdim; ++k) pairing += rd.vals[static_cast<size_t>(k)] * hc[static_cast<size_t>(k)];
    if (pairing.is_zero())
      fail(ErrorCode::internal_error, "root vanishes on its own coroot");
    Cyclo scale = Cyclo::from_long(2) / pairing;

    CMat s = CMat::identity(tdim);
    for (long i = 0; i < tdim; ++i)
      for (long j = 0; j < tdim; ++j)
        s(i, j) -= scale * hc[static_cast<size_t>(i)] * rd.vals[static_cast<size_t>(j)];
    if (!(s * s == CMat::identity(tdim)))
      fail(ErrorCode::internal_error, "root reflection is not an involution");
    reflections.push_back(std::move(s));
  }

  MatrixGroup ambient = group_closure(reflections, tdim, opt.cap);

  // theta restricted to t.
  CMat theta_t = restriction_to(g.theta, t);

  // h expressed in t-coordinates.
  long r = hb.rows();
  CMat hc_rows(r, tdim);
  for (long i = 0; i < r; ++i) {
    auto [ok, coords] = solve(t.transposed(), row_as_vec(hb, i));
    if (!ok) fail(ErrorCode::internal_error, "subspace is not inside its centralizer");
    hc_rows.set_row(i, coords);
  }
  CMat hc_canon = row_space(hc_rows);

  // Keep the elements preserving h and commuting with theta, restricted to h.
  std::map<std::string, CMat> restricted;
  for (const auto& el : ambient.elements) {
    if (!(transform_subspace(hc_canon, el) == hc_canon)) continue;
    if (!(el * theta_t == theta_t * el)) continue;
    CMat rest = restriction_to(el, hc_canon);
    restricted.emplace(mat_key(rest), std::move(rest));
  }

  LittleWeyl lw;
  lw.h = hb;
  std::vector<CMat> members;
  for (auto& [k, m] : restricted) {
    (void)k;
    members.push_back(std::move(m));
  }
  lw.group = group_closure(members, r, opt.cap);
  if (lw.group.size() != static_cast<long>(members.size()))
    fail(ErrorCode::internal_error, "restricted elements do not form a group");

  // hc_canon coordinates vs hb coordinates: restriction_to used hc_canon,
  // whose rows are t-coordinates of the canonical ambient basis?  They are
  // the canonical basis of the coordinate image, which matches hb's basis
  // exactly when the solve-based coordinates preserve the row order; rebase
  // to hb-coordinates to make the action canonical.
  {
    // M columns: hb-coordinates of the ambient vectors behind hc_canon rows.
    CMat amb(r, n);
    for (long i = 0; i < r; ++i) {
      Vec v = zero_vec(n);
      for (long k = 0; k < tdim; ++k)
        v = vec_add(v, vec_scale(hc_canon(i, k), row_as_vec(t, k)));
      amb.set_row(i, v);
    }
    CMat mcol(r, r);
    for (long i = 0; i < r; ++i) {
      auto coords = coords_in(hb, row_as_vec(amb, i));
      for (long j = 0; j < r; ++j) mcol(j, i) = coords[static_cast<size_t>(j)];
    }
    CMat minv = inverse(mcol);
    std::vector<CMat> rebased;
    for (const auto& el : lw.group.elements) rebased.push_back(mcol * el * minv);
    lw.group = group_closure(rebased, r, opt.cap);
  }

  WeightSystem ws = weight_system(g, hb, opt.seed);
  lw.reflections = validate_reflections(lw.group, ws, false);
  return lw;
}

LittleWeyl little_weyl_user(const GradedAlgebra& g, const CMat& h,
                            const std::vector<CMat>& gens, const WeylOptions& opt) {
  LittleWeyl lw;
  lw.h = row_space(h);
  lw.group = group_closure(gens, lw.h.rows(), opt.cap);
  WeightSystem ws = weight_system(g, lw.h, opt.seed);
  lw.reflections = validate_reflections(lw.group, ws, true);
  return lw;
}

std::vector<long> stabilizer_indices(const MatrixGroup& w, const std::vector<Cyclo>& p) {
  std::vector<long> out;
  for (long a = 0; a < w.size(); ++a) {
    Vec img = w.elements[static_cast<size_t>(a)].apply(p);
    if (vec_is_zero(vec_sub(img, p))) out.push_back(a);
  }
  return out;
}

CMat fixed_space(const CMat& w) {
  return row_space(kernel(w - CMat::identity(w.rows())));
}

namespace {

std::vector<long> pointwise_stabilizer(const MatrixGroup& grp,
                                       const std::vector<CMat>& fixes, const CMat& s) {
  std::vector<long> out;
  for (long a = 0; a < grp.size(); ++a)
    if (subspace_leq(s, fixes[static_cast<size_t>(a)])) out.push_back(a);
  return out;
}

// Representative point search: integer grid combinations of the basis rows,
// ascending by infinity-norm then lexicographic order, requiring the exact
// stabilizer and avoidance of every hyperplane not containing the stratum.
std::vector<Cyclo> stratum_representative(const MatrixGroup& grp, const WeightSystem& ws,
                                          const CMat& s, const std::vector<long>& stab) {
  long sdim = s.rows();
  long amb = s.cols();
  if (sdim == 0) return std::vector<Cyclo>(static_cast<size_t>(amb), Cyclo::zero());

  std::vector<const std::vector<Cyclo>*> active;
  for (const auto& f : ws.arrangement) {
    bool vanishes = true;
    for (long r = 0; r < sdim; ++r) {
      if (!functional_value(f, s.row(r)).is_zero()) {
        vanishes = false;
        break;
      }
    }
    if (!vanishes) active.push_back(&f);
  }

  for (long level = 1; level <= 8; ++level) {
    for (const auto& c : grid_shell(sdim, level)) {
      std::vector<Cyclo> p(static_cast<size_t>(amb), Cyclo::zero());
      for (long r = 0; r < sdim; ++r) {
        if (c[static_cast<size_t>(r)] == 0) continue;
        Cyclo f = Cyclo::from_long(c[static_cast<size_t>(r)]);
        for (long j = 0; j < amb; ++j) p[static_cast<size_t>(j)] += f * s(r, j);
      }
      bool off_walls = true;
      for (const auto* f : active) {
        if (functional_value(*f, p).is_zero()) {
          off_walls = false;
          break;
        }
      }
      if (!off_walls) continue;
      if (stabilizer_indices(grp, p) != stab) continue;
      return p;
    }
  }
  fail(ErrorCode::search_failed, "no integer representative with the exact stabilizer");
}

}  // namespace

StrataResult strata_of(const LittleWeyl& lw, const WeightSystem& ws) {
  if (!(row_space(ws.base) == lw.h))
    fail(ErrorCode::invalid_argument, "weight system and group use different subspaces");
  const MatrixGroup& grp = lw.group;
  long s = grp.dim;

  std::vector<CMat> fixes;
  for (const auto& el : grp.elements) fixes.push_back(fixed_space(el));

  // Intersection lattice seeded by every fixed space.
  std::map<std::string, CMat> lattice;
  std::vector<CMat> work;
  for (const auto& f : fixes) {
    std::string key = mat_key(f);
    if (lattice.emplace(key, f).second) work.push_back(f);
  }
  while (!work.empty()) {
    CMat cur = std::move(work.back());
    work.pop_back();
    std::vector<CMat> snapshot;
    for (const auto& [k, m] : lattice) {
      (void)k;
      snapshot.push_back(m);
    }
    for (const auto& other : snapshot) {
      CMat inter = subspace_intersection(cur, other);
      std::string key = mat_key(inter);
      if (lattice.emplace(key, inter).second) work.push_back(lattice.at(key));
    }
  }

  // Keep S exactly when the joint fixed space of its pointwise stabilizer
  // is S itself.
  std::vector<Stratum> kept;
  for (const auto& [key, cand] : lattice) {
    (void)key;
    std::vector<long> stab = pointwise_stabilizer(grp, fixes, cand);
    CMat joint = CMat::identity(s);
    for (long a : stab) joint = subspace_intersection(joint, fixes[static_cast<size_t>(a)]);
    if (!(joint == cand)) continue;
    Stratum st;
    st.space = cand;
    st.stabilizer = std::move(stab);
    kept.push_back(std::move(st));
  }

  std::sort(kept.begin(), kept.end(), [](const Stratum& a, const Stratum& b) {
    if (a.space.rows() != b.space.rows()) return a.space.rows() < b.space.rows();
    return mat_key(a.space) < mat_key(b.space);
  });

  // Orbit classes under the group action.
  std::map<std::string, long> position;
  for (size_t i = 0; i < kept.size(); ++i) position[mat_key(kept[i].space)] = static_cast<long>(i);
  long next_class = 0;
  std::vector<long> cls(kept.size(), -1);
  for (size_t i = 0; i < kept.size(); ++i) {
    if (cls[i] >= 0) continue;
    long id = next_class++;
    cls[i] = id;
    kept[i].class_rep = true;
    for (const auto& el : grp.elements) {
      CMat img = transform_subspace(kept[i].space, el);
      auto it = position.find(mat_key(img));
      if (it == position.end())
        fail(ErrorCode::internal_error, "stratification is not stable under the group");
      if (cls[static_cast<size_t>(it->second)] < 0) cls[static_cast<size_t>(it->second)] = id;
    }
  }
  for (size_t i = 0; i < kept.size(); ++i) kept[i].class_id = cls[i];

  for (auto& st : kept)
    st.rep = stratum_representative(grp, ws, st.space, st.stabilizer);

  StrataResult out;
  out.strata = std::move(kept);
  out.class_count = next_class;
  return out;
}

bool verify_conjugation_equivalence(const LittleWeyl& lw, const StrataResult& sr) {
  const MatrixGroup& grp = lw.group;
  long n = static_cast<long>(sr.strata.size());
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      const Stratum& a = sr.strata[static_cast<size_t>(i)];
      const Stratum& b = sr.strata[static_cast<size_t>(j)];
      std::set<long> sb(b.stabilizer.begin(), b.stabilizer.end());
      for (long w = 0; w < grp.size(); ++w) {
        bool moves = transform_subspace(a.space, grp.elements[static_cast<size_t>(w)]) == b.space;
        std::set<long> conj;
        long wi = grp.inv(w);
        for (long x : a.stabilizer) conj.insert(grp.mul(grp.mul(w, x), wi));
        bool conjugates = conj == sb;
        if (moves != conjugates) return false;
      }
    }
  }
  return true;
}

bool circ_equals_reg(const LittleWeyl& lw, const WeightSystem& ws, const Stratum& s) {
  std::set<std::string> walls_from_reflections;
  std::set<long> stab(s.stabilizer.begin(), s.stabilizer.end());
  for (long a : lw.reflections) {
    if (stab.count(a)) continue;
    CMat f = fixed_space(lw.group.elements[static_cast<size_t>(a)]);
    CMat wall = subspace_intersection(f, s.space);
    if (wall == s.space)
      fail(ErrorCode::internal_error, "reflection fixing the stratum escaped its stabilizer");
    walls_from_reflections.insert(mat_key(wall));
  }

  std::set<std::string> walls_from_weights;
  for (const auto& f : ws.arrangement) {
    bool vanishes = true;
    for (long r = 0; r < s.space.rows(); ++r)
      if (!functional_value(f, s.space.row(r)).is_zero()) {
        vanishes = false;
        break;
      }
    if (vanishes) continue;
    CMat wall = subspace_intersection(functional_kernel(f), s.space);
    walls_from_weights.insert(mat_key(wall));
  }
  return walls_from_reflections == walls_from_weights;
}

bool verify_central(const GradedAlgebra& g, const LittleWeyl& lw,
                    const WeightSystem& ws, const Stratum& s, long count) {
  if (!is_prime_order(g.m) && !is_maximal_rank(g, lw.h))
    fail(ErrorCode::hypothesis_not_met,
         "requires a prime grading order or the maximal rank property");

  long sdim = s.space.rows();
  std::vector<std::vector<Cyclo>> points;
  if (sdim == 0) {
    points.push_back(s.rep);
  } else {
    std::vector<const std::vector<Cyclo>*> active;
    for (const auto& f : ws.arrangement) {
      bool vanishes = true;
      for (long r = 0; r < sdim; ++r)
        if (!functional_value(f, s.space.row(r)).is_zero()) {
          vanishes = false;
          break;
        }
      if (!vanishes) active.push_back(&f);
    }
    for (long level = 1; level <= 12 && static_cast<long>(points.size()) < count; ++level) {
      for (const auto& c : grid_shell(sdim, level)) {
        if (static_cast<long>(points.size()) >= count) break;
        std::vector<Cyclo> p(static_cast<size_t>(s.space.cols()), Cyclo::zero());
        for (long r = 0; r < sdim; ++r) {
          if (c[static_cast<size_t>(r)] == 0) continue;
          Cyclo f = Cyclo::from_long(c[static_cast<size_t>(r)]);
          for (long j = 0; j < s.space.cols(); ++j) p[static_cast<size_t>(j)] += f * s.space(r, j);
        }
        bool ok = true;
        for (const auto* f : active)
          if (functional_value(*f, p).is_zero()) {
            ok = false;
            break;
          }
        if (!ok) continue;
        if (stabilizer_indices(lw.group, p) != s.stabilizer) continue;
        points.push_back(std::move(p));
      }
    }
  }
  if (points.empty())
    fail(ErrorCode::search_failed, "no sample points with the exact stabilizer");

  CMat expected;
  bool first = true;
  for (const auto& p : points) {
    Vec amb = point_to_ambient(lw.h, p);
    CMat cent = g.algebra.centralizer_of_element(amb);
    if (first) {
      expected = cent;
      first = false;
    } else if (!(cent == expected)) {
      return false;
    }
  }
  return true;
}

bool same_W_family(const MatrixGroup& w, const Stratum& a, const Stratum& b) {
  if (a.stabilizer.size() != b.stabilizer.size()) return false;
  std::set<long> sb(b.stabilizer.begin(), b.stabilizer.end());
  for (long g = 0; g < w.size(); ++g) {
    long gi = w.inv(g);
    std::set<long> conj;
    for (long x : a.stabilizer) conj.insert(w.mul(w.mul(g, x), gi));
    if (conj == sb) return true;
  }
  return false;
}

TriState same_gC_family(const GradedAlgebra& g, const LittleWeyl& lw,
                        const Stratum& a, const Stratum& b) {
  if (a.space.rows() != b.space.rows()) return TriState::no;
  if (!same_W_family(lw.group, a, b)) return TriState::no;

  Vec pa = point_to_ambient(lw.h, a.rep);
  CMat target = g.algebra.centralizer_of_element(pa);
  for (const auto& el : lw.group.elements) {
    std::vector<Cyclo> moved = el.apply(b.rep);
    Vec q = point_to_ambient(lw.h, moved);
    if (g.algebra.centralizer_of_element(q) == target) return TriState::yes;
  }
  return TriState::unknown;
}

GammaResult gamma_of_stratum(const LittleWeyl& lw, const StrataResult& sr,
                             const Stratum& s) {
  const MatrixGroup& grp = lw.group;
  GammaResult out;

  std::map<std::string, long> seen;
  std::vector<CMat> restrictions;
  for (long a = 0; a < grp.size(); ++a) {
    const CMat& el = grp.elements[static_cast<size_t>(a)];
    if (!(transform_subspace(s.space, el) == s.space)) continue;
    CMat rest = restriction_to(el, s.space);
    std::string key = mat_key(rest);
    if (seen.emplace(key, a).second) {
      out.rep_elements.push_back(a);
      restrictions.push_back(std::move(rest));
    }
  }
  out.restricted = group_closure(restrictions, s.space.rows(), grp.size() + 1);
  if (out.restricted.size() != static_cast<long>(restrictions.size()))
    fail(ErrorCode::internal_error, "stratum action is not closed");

  // Fixed sets of nontrivial quotient elements must sit inside proper
  // members of the stratification.
  out.free_on_open_part = true;
  CMat id = CMat::identity(s.space.rows());
  for (size_t i = 0; i < restrictions.size(); ++i) {
    if (restrictions[i] == id) continue;
    long a = out.rep_elements[i];
    CMat fixed = subspace_intersection(
        fixed_space(grp.elements[static_cast<size_t>(a)]), s.space);
    bool covered = false;
    for (const auto& st : sr.strata) {
      if (st.space.rows() >= s.space.rows()) continue;
      if (subspace_leq(st.space, s.space) && subspace_leq(fixed, st.space)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.free_on_open_part = false;
  }
  return out;
}

LittleWeyl weyl_of_centralizer(const GradedAlgebra& g, const CMat& h,
                               const Vec& p_ambient, const WeylOptions& opt) {
  CMat hb = row_space(h);
  if (!subspace_contains(hb, p_ambient))
    fail(ErrorCode::invalid_argument, "point does not lie in the subspace");

  CMat z = g.algebra.centralizer_of_element(p_ambient);
  GradedAlgebra gz = restrict_grading(g, z);

  long r = hb.rows();
  CMat hz(r, z.rows());
  for (long i = 0; i < r; ++i) {
    auto [ok, coords] = solve(z.transposed(), row_as_vec(hb, i));
    if (!ok) fail(ErrorCode::internal_error, "subspace escapes the centralizer");
    hz.set_row(i, coords);
  }

  LittleWeyl inner = little_weyl_maximal_rank(gz, hz, opt);

  // Rebase the action from inner.h's coordinates (inside the centralizer)
  // to hb's ambient coordinates.
  CMat amb(r, g.dim());
  for (long i = 0; i < r; ++i) {
    Vec v = zero_vec(g.dim());
    for (long k = 0; k < z.rows(); ++k)
      v = vec_add(v, vec_scale(inner.h(i, k), row_as_vec(z, k)));
    amb.set_row(i, v);
  }
  CMat mcol(r, r);
  for (long i = 0; i < r; ++i) {
    auto coords = coords_in(hb, row_as_vec(amb, i));
    for (long j = 0; j < r; ++j) mcol(j, i) = coords[static_cast<size_t>(j)];
  }
  CMat minv = inverse(mcol);

  LittleWeyl out;
  out.h = hb;
  std::vector<CMat> rebased;
  for (const auto& el : inner.group.elements) rebased.push_back(mcol * el * minv);
  out.group = group_closure(rebased, r, opt.cap);

  WeightSystem ws = weight_system(g, hb, opt.seed);
  out.reflections = validate_reflections(out.group, ws, false);
  return out;
}

bool same_subgroup(const MatrixGroup& a, const MatrixGroup& b,
                   const std::vector<long>& b_subset) {
  std::set<std::string> ka, kb;
  for (const auto& m : a.elements) ka.insert(mat_key(m));
  for (long i : b_subset) kb.insert(mat_key(b.elements[static_cast<size_t>(i)]));
  return ka == kb;
}

}  // namespace liegrade
