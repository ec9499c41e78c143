// Acceptance gate: every shipped capability is exercised end to end, one
// line of output per criterion, nonzero exit when a required criterion
// fails.  Expected values are frozen from independent derivations: root
// count and dimension formulas, hand-computed ranks and group orders for
// the worked rank-one and rank-two gradings, and brute-force cohomology
// enumerations of groups with at most six elements.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/cartan.hpp"
#include "core/galois.hpp"
#include "core/job.hpp"
#include "core/rootdata.hpp"

using namespace liegrade;

namespace {

struct Failure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

CMat scalar1(const Cyclo& c) {
  CMat m(1, 1);
  m(0, 0) = c;
  return m;
}

struct Worked {
  GradedAlgebra g;
  CMat h;
  WeightSystem ws;
  LittleWeyl lw;
  StrataResult sr;
  Worked(const std::string& type, long rank, const std::vector<long>& kac)
      : g(grade_from_kac(type, rank, kac)),
        h(cartan_subspace(g)),
        ws(weight_system(g, h)),
        lw(little_weyl_maximal_rank(g, h)),
        sr(strata_of(lw, ws)) {}
};

Vec ambient_point(const CMat& h, const std::vector<Cyclo>& coords) {
  Vec p = zero_vec(h.cols());
  for (long r = 0; r < h.rows(); ++r)
    p = vec_add(p, vec_scale(coords[static_cast<size_t>(r)], row_as_vec(h, r)));
  return p;
}

std::vector<long> identity_twist(const MatrixGroup& w) {
  std::vector<long> s(static_cast<size_t>(w.size()));
  for (long i = 0; i < w.size(); ++i) s[static_cast<size_t>(i)] = i;
  return s;
}

// ------------------------------------------------------------- criteria

// 1. The integral structure-constant construction produces algebras of the
//    predicted dimensions that pass the full Jacobi scan, each within 1 s.
void c1_construction() {
  struct { const char* t; long r; long dim; } cases[] = {
      {"A", 1, 3}, {"A", 2, 8}, {"B", 2, 10}, {"G", 2, 14}};
  for (const auto& k : cases) {
    auto t0 = std::chrono::steady_clock::now();
    ChevalleyBasis cb = build_chevalley(k.t, k.r);
    require(cb.algebra.dim() == k.dim,
            std::string(k.t) + ": wrong dimension");
    require(cb.algebra.structure_check() == "",
            std::string(k.t) + ": Jacobi scan failed");
    require(seconds_since(t0) < 1.0, std::string(k.t) + ": over time budget");
  }
}

// 2. On 100 seeded degree-1 elements of each worked grading, the Jordan
//    decomposition is homogeneous, commuting, nilpotent/semisimple in the
//    exact sense, and equal to the ungraded decomposition.
void c2_graded_jordan() {
  const std::vector<std::tuple<std::string, long, std::vector<long>>> cases = {
      {"A", 1, {1, 1}}, {"A", 2, {1, 1, 1}}};
  for (const auto& [type, rank, kac] : cases) {
    GradedAlgebra g = grade_from_kac(type, rank, kac);
    std::mt19937_64 rng(0xACCE5501ull + static_cast<unsigned long long>(rank));
    for (int t = 0; t < 100; ++t) {
      Vec x = random_element(g.component(1), rng, 5);
      auto [xs, xn] = graded_jordan(g, x);
      require(vec_add(xs, xn) == x, "parts do not sum back");
      require(subspace_contains(g.component(1), xs), "semisimple part left g_1");
      require(subspace_contains(g.component(1), xn), "nilpotent part left g_1");
      require(vec_is_zero(g.algebra.bracket(xs, xn)), "parts do not commute");
      // ad(x_n)^dim = 0
      CMat an = g.algebra.ad(xn);
      CMat pw = CMat::identity(g.dim());
      for (long k = 0; k < g.dim(); ++k) pw = pw * an;
      require(pw.is_zero(), "nilpotent part has a surviving power");
      // the squarefree part of the characteristic polynomial annihilates
      // ad(x_s), i.e. the minimal polynomial is squarefree
      CMat as = g.algebra.ad(xs);
      require(poly_at_matrix(squarefree_part(charpoly(as)), as).is_zero(),
              "semisimple part has a repeated minimal-polynomial factor");
      auto [ps, pn] = g.algebra.jordan(x);
      require(xs == ps && xn == pn, "graded and plain decompositions differ");
    }
  }
}

// 3. The Cartan subspace rank is 1 for both worked gradings, across 20
//    independent search seeds each (hand-derived fixture values).
void c3_cartan_rank() {
  const std::vector<std::tuple<std::string, long, std::vector<long>>> cases = {
      {"A", 1, {1, 1}}, {"A", 2, {1, 1, 1}}};
  for (const auto& [type, rank, kac] : cases) {
    GradedAlgebra g = grade_from_kac(type, rank, kac);
    for (unsigned long long s = 1; s <= 20; ++s) {
      CartanSearchOptions opt;
      opt.seed = 0x5eed + s;
      CMat h = cartan_subspace(g, opt);
      require(h.rows() == 1, "rank differs from the fixture value 1");
      require(is_cartan_subspace(g, h, 1, opt.seed).is_cartan,
              "search result fails the membership test");
    }
  }
}

// 4. The algebraic closure of the Cartan subspace is supported in degrees
//    coprime to the grading order; for the rank-two example it has
//    dimension 2 with degrees {1, 2}.
void c4_closure() {
  GradedAlgebra g2 = grade_from_kac("A", 1, {1, 1});
  ClosureResult c2 = algebraic_closure(g2, cartan_subspace(g2));
  require(c2.support == std::vector<long>{1}, "unexpected support");
  for (long d : c2.support) require(std::gcd(d, g2.m) == 1, "degree not coprime");

  GradedAlgebra g3 = grade_from_kac("A", 2, {1, 1, 1});
  ClosureResult c3 = algebraic_closure(g3, cartan_subspace(g3));
  require(c3.closure.rows() == 2, "closure dimension is not 2");
  require(c3.support == (std::vector<long>{1, 2}), "support is not {1, 2}");
  for (long d : c3.support) require(std::gcd(d, g3.m) == 1, "degree not coprime");
}

// 5. Reflection group orders: 2 and 3 for the worked gradings, 2 and 6 for
//    the order-one gradings (classical values); the rank-one validation of
//    the generators is part of the construction and must have succeeded.
void c5_weyl_orders() {
  struct { const char* t; long r; std::vector<long> kac; long order; } cases[] = {
      {"A", 1, {1, 1}, 2},
      {"A", 2, {1, 1, 1}, 3},
      {"A", 1, {1, 0}, 2},
      {"A", 2, {1, 0, 0}, 6}};
  for (const auto& k : cases) {
    Worked w(k.t, k.r, k.kac);
    std::ostringstream tag;
    tag << k.t << k.r << " order";
    require(w.lw.group.size() == k.order, tag.str());
    require(!w.lw.reflections.empty(), "no validated reflections");
    // the validated reflections generate the whole group
    std::vector<CMat> gens;
    for (long i : w.lw.reflections) gens.push_back(w.lw.group.elements[i]);
    MatrixGroup regen = group_closure(gens, w.lw.group.dim, 1000);
    require(regen.size() == w.lw.group.size(),
            "reflections do not generate the group");
  }
}

// 6. Stratum counts are 2 for both worked gradings, and moving a stratum by
//    a group element conjugates its stabilizer, over all group elements and
//    stratum pairs.
void c6_strata() {
  Worked a("A", 1, {1, 1});
  require(a.sr.strata.size() == 2, "rank-one stratum count");
  require(verify_conjugation_equivalence(a.lw, a.sr),
          "conjugation equivalence (rank-one)");
  Worked b("A", 2, {1, 1, 1});
  require(b.sr.strata.size() == 2, "rank-two stratum count");
  require(verify_conjugation_equivalence(b.lw, b.sr),
          "conjugation equivalence (rank-two)");
}

// 7. Both worked gradings have the maximal rank property; every stratum's
//    wall set matches the restricted arrangement; and 10 sampled points per
//    stratum share one exact centralizer.
void c7_central() {
  const std::vector<std::tuple<std::string, long, std::vector<long>>> cases = {
      {"A", 1, {1, 1}}, {"A", 2, {1, 1, 1}}};
  for (const auto& [type, rank, kac] : cases) {
    Worked w(type, rank, kac);
    require(is_maximal_rank(w.g, w.h), "maximal rank hypothesis");
    for (const auto& s : w.sr.strata) {
      require(circ_equals_reg(w.lw, w.ws, s), "wall sets differ");
      require(verify_central(w.g, w.lw, w.ws, s, 10),
              "sampled centralizers differ");
    }
  }
}

// 8. The reflection group of the centralizer of p, recomputed from scratch
//    at p = 0 and at a regular representative, equals the stabilizer of p
//    in the ambient group.
void c8_centralizer_groups() {
  const std::vector<std::tuple<std::string, long, std::vector<long>>> cases = {
      {"A", 1, {1, 1}}, {"A", 2, {1, 1, 1}}};
  for (const auto& [type, rank, kac] : cases) {
    Worked w(type, rank, kac);
    // p = 0: stabilizer is everything
    LittleWeyl at0 = weyl_of_centralizer(w.g, w.h, zero_vec(w.g.dim()));
    std::vector<long> all;
    for (long i = 0; i < w.lw.group.size(); ++i) all.push_back(i);
    require(same_subgroup(at0.group, w.lw.group, all), "group at 0 differs");
    // p regular: stabilizer is trivial
    const Stratum& open = w.sr.strata.back();
    LittleWeyl atp =
        weyl_of_centralizer(w.g, w.h, ambient_point(w.h, open.rep));
    require(same_subgroup(atp.group, w.lw.group, open.stabilizer),
            "group at a regular point differs");
  }
}

// 9. Twisted first cohomology, brute force, against hand enumerations:
//    trivial group 1; order two (plain twist) 2; order three (inversion
//    twist) 1; symmetric group on three letters (plain twist) 2; cyclic of
//    order four (plain twist) 2.
void c9_cohomology() {
  MatrixGroup triv = group_closure({}, 1, 10);
  require(group_cohomology(triv, identity_twist(triv)).size() == 1, "trivial");

  MatrixGroup c2 = group_closure({scalar1(Cyclo::from_long(-1))}, 1, 100);
  require(group_cohomology(c2, identity_twist(c2)).size() == 2, "order two");

  MatrixGroup c3 = group_closure({scalar1(Cyclo::root_of_unity(3))}, 1, 100);
  std::vector<long> inv3(static_cast<size_t>(c3.size()));
  for (long i = 0; i < c3.size(); ++i) inv3[static_cast<size_t>(i)] = c3.inv(i);
  require(group_cohomology(c3, inv3).size() == 1, "order three, inversion");

  CMat s12(3, 3), s23(3, 3);
  s12(0, 1) = s12(1, 0) = s12(2, 2) = Cyclo::one();
  s23(0, 0) = s23(1, 2) = s23(2, 1) = Cyclo::one();
  MatrixGroup s3 = group_closure({s12, s23}, 3, 100);
  require(group_cohomology(s3, identity_twist(s3)).size() == 2,
          "symmetric group");

  MatrixGroup c4 = group_closure({scalar1(Cyclo::root_of_unity(4))}, 1, 100);
  require(group_cohomology(c4, identity_twist(c4)).size() == 2, "order four");
}

// 10. Real orbit counts through the twisted-cohomology kernel, with the
//     entrywise-conjugation real structure: one real orbit for a regular
//     representative and one for p = 0, in both worked gradings.  (For the
//     rank-one case this matches direct enumeration of the rotation action
//     on the real solutions of the invariant quadric.)
void c10_real_orbits() {
  const std::vector<std::tuple<std::string, long, std::vector<long>>> cases = {
      {"A", 1, {1, 1}}, {"A", 2, {1, 1, 1}}};
  for (const auto& [type, rank, kac] : cases) {
    Worked w(type, rank, kac);
    RealStructure split = split_structure(w.g);
    require(real_structure_check(w.g, split).empty(), "structure audit");
    require(conj_stable(split, w.lw.h), "subspace is not conjugation stable");
    CMat c = conj_on_subspace(split, w.lw.h);
    std::vector<long> tw = twist_on_group(w.lw.group, c);

    const Stratum& open = w.sr.strata.back();
    RealOrbitCount regular = real_orbit_count(w.lw.group, tw, open.stabilizer);
    require(regular.count == 1, "regular orbit count is not 1");
    require(regular.assumes_rational_point, "flag missing");

    std::vector<long> all;
    for (long i = 0; i < w.lw.group.size(); ++i) all.push_back(i);
    RealOrbitCount origin = real_orbit_count(w.lw.group, tw, all);
    require(origin.count == 1, "orbit count at 0 is not 1");
  }
}

// 11. Optional stretch: the order-three grading of the largest exceptional
//     algebra, whose reflection group is far beyond the default cap.  Only
//     attempted when LG_STRETCH=1; its failure does not gate acceptance.
void c11_stretch() {
  GradedAlgebra g = grade_from_kac("E", 8, {0, 0, 1, 0, 0, 0, 0, 0, 0});
  require(g.m == 3, "expected an order-three grading");
  CMat h = cartan_subspace(g);
  require(h.rows() == 4, "expected rank 4");
  WeylOptions opt;
  opt.cap = 200000;
  if (const char* cap = std::getenv("LG_STRETCH_CAP")) opt.cap = std::atol(cap);
  LittleWeyl lw = little_weyl_maximal_rank(g, h, opt);
  require(lw.group.size() == 155520, "unexpected group order");
  require(group_cohomology(lw.group, identity_twist(lw.group)).size() == 1,
          "first cohomology is not trivial");
}

// 12. Determinism: one job description produces byte-identical machine
//     reports across repeated runs and across serial/threaded execution.
void c12_determinism() {
  for (const char* text : {"type = A\nrank = 1\nkac = 1,1\n",
                           "type = A\nrank = 2\nkac = 1,1,1\n"}) {
    JobSpec s = parse_job_spec(text);
    std::string first = render_machine(run_job(s));
    std::string second = render_machine(run_job(s));
    require(first == second, "repeated runs differ");
    JobSpec p = s;
    p.parallel = true;
    std::string threaded = render_machine(run_job(p));
    require(first == threaded, "serial and threaded runs differ");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* label;
    std::function<void()> run;
    double budget;  // seconds; 0 = no budget
    bool optional;
  };
  const std::vector<Criterion> criteria = {
      {1, "structure constants: dimensions and Jacobi scans", c1_construction, 4.0, false},
      {2, "graded Jordan decomposition on 200 seeded elements", c2_graded_jordan, 5.0, false},
      {3, "Cartan subspace rank across 20 seeds per grading", c3_cartan_rank, 10.0, false},
      {4, "algebraic closure support and dimension", c4_closure, 2.0, false},
      {5, "reflection group orders and generator validation", c5_weyl_orders, 10.0, false},
      {6, "stratum counts and conjugation equivalence", c6_strata, 5.0, false},
      {7, "wall matching and centralizer constancy on strata", c7_central, 10.0, false},
      {8, "centralizer groups equal point stabilizers", c8_centralizer_groups, 5.0, false},
      {9, "twisted cohomology of five small groups", c9_cohomology, 1.0, false},
      {10, "real orbit counts for regular and zero orbits", c10_real_orbits, 1.0, false},
      {11, "order-three grading of the rank-eight exceptional algebra", c11_stretch, 0.0, true},
      {12, "byte-identical reports across runs and execution modes", c12_determinism, 0.0, false},
  };

  bool stretch = false;
  if (const char* env = std::getenv("LG_STRETCH"))
    stretch = std::strcmp(env, "1") == 0;

  int failed = 0, passed = 0, skipped = 0;
  for (const auto& c : criteria) {
    if (c.optional && !stretch) {
      std::printf("%2d. SKIP  %s (set LG_STRETCH=1 to attempt)\n", c.number,
                  c.label);
      ++skipped;
      continue;
    }
    auto t0 = std::chrono::steady_clock::now();
    std::string failure;
    try {
      c.run();
    } catch (const Failure& f) {
      failure = f.what;
    } catch (const Error& e) {
      failure = std::string(error_code_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      failure = e.what();
    }
    double dt = seconds_since(t0);
    if (failure.empty() && c.budget > 0 && dt > c.budget) {
      std::ostringstream os;
      os << "exceeded the " << c.budget << " s budget";
      failure = os.str();
    }
    if (failure.empty()) {
      std::printf("%2d. PASS  %s (%.2fs)\n", c.number, c.label, dt);
      ++passed;
    } else if (c.optional) {
      std::printf("%2d. FAIL  %s (%.2fs) [optional, not counted]: %s\n",
                  c.number, c.label, dt, failure.c_str());
      ++skipped;
    } else {
      std::printf("%2d. FAIL  %s (%.2fs): %s\n", c.number, c.label, dt,
                  failure.c_str());
      ++failed;
    }
  }
  std::printf("acceptance: %d passed, %d failed, %d skipped\n", passed, failed,
              skipped);
  return failed == 0 ? 0 : 1;
}
