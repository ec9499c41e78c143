// Weight decomposition under a toral subspace.

#include "weights.hpp"

#include <algorithm>
#include <map>

#include "eigenspaces.hpp"
#include "errors.hpp"

namespace liegrade {

WeightSystem weight_system(const GradedAlgebra& g, const CMat& h,
                           unsigned long long seed) {
  const LieAlgebra& L = g.algebra;
  WeightSystem ws;
  ws.base = row_space(h);
  long s = ws.base.rows();
  if (s == 0) fail(ErrorCode::invalid_argument, "weight system of the zero subspace");

  std::vector<CMat> ads;
  for (long r = 0; r < s; ++r) ads.push_back(L.ad(row_as_vec(ws.base, r)));

  EigenOptions eopt;
  eopt.field_order = g.m;
  eopt.seed = static_cast<unsigned long>(seed);
  std::vector<EigenSpace> spaces = simultaneous_eigenspaces(ads, eopt);

  for (auto& sp : spaces) {
    Weight w;
    w.values = sp.values;
    w.space = sp.basis;
    for (long d = 0; d < g.m; ++d)
      w.degree_dims.push_back(g.component_intersection(w.space, d).rows());
    ws.weights.push_back(std::move(w));
  }

  // One normalized representative per hyperplane.
  std::map<std::string, std::vector<Cyclo>> reps;
  for (const auto& w : ws.weights) {
    bool zero = std::all_of(w.values.begin(), w.values.end(),
                            [](const Cyclo& c) { return c.is_zero(); });
    if (zero) continue;
    std::vector<Cyclo> f = normalize_functional(w.values);
    std::string key;
    for (const auto& c : f) key += c.key() + ";";
    reps.emplace(std::move(key), std::move(f));
  }
  for (auto& [k, f] : reps) {
    (void)k;
    ws.arrangement.push_back(std::move(f));
  }
  return ws;
}

std::vector<Cyclo> coords_in(const CMat& base, const Vec& p) {
  auto [ok, coords] = solve(base.transposed(), p);
  if (!ok) fail(ErrorCode::invalid_argument, "point does not lie in the subspace");
  return coords;
}

std::vector<Cyclo> normalize_functional(std::vector<Cyclo> f) {
  for (const auto& c : f) {
    if (c.is_zero()) continue;
    Cyclo inv = c.inverse();
    for (auto& v : f) v = v * inv;
    break;
  }
  return f;
}

CMat functional_kernel(const std::vector<Cyclo>& f) {
  CMat row(1, static_cast<long>(f.size()));
  for (size_t i = 0; i < f.size(); ++i) row(0, static_cast<long>(i)) = f[i];
  return row_space(kernel(row));
}

Cyclo functional_value(const std::vector<Cyclo>& f, const std::vector<Cyclo>& coords) {
  if (f.size() != coords.size())
    fail(ErrorCode::invalid_argument, "functional and point have different lengths");
  Cyclo acc = Cyclo::zero();
  for (size_t i = 0; i < f.size(); ++i) acc += f[i] * coords[i];
  return acc;
}

bool is_regular(const WeightSystem& ws, const Vec& p) {
  std::vector<Cyclo> c = coords_in(ws.base, p);
  for (const auto& f : ws.arrangement)
    if (functional_value(f, c).is_zero()) return false;
  return true;
}

std::vector<std::vector<Cyclo>> restrict_arrangement(const WeightSystem& ws,
                                                     const CMat& sub) {
  // Rows of `sub` are ambient; express them in the base's basis first.
  CMat basis = row_space(sub);
  std::vector<std::vector<Cyclo>> sub_coords;
  for (long r = 0; r < basis.rows(); ++r)
    sub_coords.push_back(coords_in(ws.base, row_as_vec(basis, r)));

  std::map<std::string, std::vector<Cyclo>> reps;
  for (const auto& f : ws.arrangement) {
    std::vector<Cyclo> rf;
    bool zero = true;
    for (const auto& sc : sub_coords) {
      Cyclo v = functional_value(f, sc);
      if (!v.is_zero()) zero = false;
      rf.push_back(v);
    }
    if (zero) continue;
    rf = normalize_functional(std::move(rf));
    std::string key;
    for (const auto& c : rf) key += c.key() + ";";
    reps.emplace(std::move(key), std::move(rf));
  }
  std::vector<std::vector<Cyclo>> out;
  for (auto& [k, f] : reps) {
    (void)k;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace liegrade
