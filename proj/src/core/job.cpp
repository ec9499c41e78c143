// Job orchestration: section runners, the dependency-ordered driver, and the
// two report renderers.
//
// The pipeline is a linear chain grade -> cartan -> weights -> weyl ->
// strata followed by three independent consumers (families, central, h1)
// that only read the shared state.  Each section derives its random seed
// from the job seed and its own name, so the rendered body is a pure
// function of the job description.

#include "job.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "cartan.hpp"
#include "errors.hpp"
#include "galois.hpp"

namespace liegrade {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- parsing

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(v);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long parse_long(const std::string& v, const std::string& key) {
  try {
    size_t used = 0;
    long value = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return value;
  } catch (const std::exception&) {
    fail(ErrorCode::parse_error, "value of '" + key + "' is not an integer: " + v);
  }
}

unsigned long long parse_seed(const std::string& v) {
  try {
    size_t used = 0;
    unsigned long long value = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return value;
  } catch (const std::exception&) {
    fail(ErrorCode::parse_error, "value of 'seed' is not a nonnegative integer: " + v);
  }
}

// ---------------------------------------------------------------- sections

struct Pipeline {
  const JobSpec* spec = nullptr;
  GradedAlgebra g;
  CMat h;
  ClosureResult closure;
  WeightSystem ws;
  LittleWeyl lw;
  StrataResult sr;
};

void put(SectionReport& rep, const std::string& key, const json& value) {
  rep.data.emplace_back(key, value.dump());
}

json row_strings(const CMat& m) {
  json rows = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

void run_grade(Pipeline& p, unsigned long long, SectionReport& rep) {
  const JobSpec& spec = *p.spec;
  if (spec.type.empty() || spec.rank <= 0)
    fail(ErrorCode::invalid_argument, "job needs a type and a positive rank");
  if (static_cast<long>(spec.kac.size()) != spec.rank + 1)
    fail(ErrorCode::invalid_argument, "diagram coordinates must have rank+1 entries");
  p.g = grade_from_kac(spec.type, spec.rank, spec.kac);
  std::string err = grading_check(p.g);
  if (!err.empty()) fail(ErrorCode::structure_violation, err);

  put(rep, "type", spec.type);
  put(rep, "rank", spec.rank);
  put(rep, "order", p.g.m);
  put(rep, "dim", p.g.dim());
  json dims = json::array();
  for (long d = 0; d < p.g.m; ++d) dims.push_back(p.g.component(d).rows());
  put(rep, "component_dims", dims);
}

void run_cartan(Pipeline& p, unsigned long long seed, SectionReport& rep) {
  CartanSearchOptions opt;
  opt.degree = p.spec->degree;
  opt.seed = seed;
  p.h = cartan_subspace(p.g, opt);
  p.closure = algebraic_closure(p.g, p.h, seed);

  put(rep, "degree", p.spec->degree);
  put(rep, "rank", p.h.rows());
  put(rep, "basis", row_strings(p.h));
  put(rep, "closure_dim", p.closure.closure.rows());
  put(rep, "closure_support", json(p.closure.support));
}

void run_weights(Pipeline& p, unsigned long long seed, SectionReport& rep) {
  p.ws = weight_system(p.g, p.h, seed);

  put(rep, "weights", static_cast<long>(p.ws.weights.size()));
  json dims = json::array();
  for (const auto& w : p.ws.weights) dims.push_back(w.space.rows());
  put(rep, "weight_space_dims", dims);
  put(rep, "hyperplanes", static_cast<long>(p.ws.arrangement.size()));
}

void run_weyl(Pipeline& p, unsigned long long seed, SectionReport& rep) {
  WeylOptions opt;
  opt.seed = seed;
  opt.cap = p.spec->cap;
  p.lw = little_weyl_maximal_rank(p.g, p.h, opt);

  put(rep, "order", p.lw.group.size());
  put(rep, "reflections", static_cast<long>(p.lw.reflections.size()));
}

void run_strata(Pipeline& p, unsigned long long, SectionReport& rep) {
  p.sr = strata_of(p.lw, p.ws);

  put(rep, "count", static_cast<long>(p.sr.strata.size()));
  put(rep, "classes", p.sr.class_count);
  json dims = json::array();
  json classes = json::array();
  for (const auto& s : p.sr.strata) {
    dims.push_back(s.space.rows());
    classes.push_back(s.class_id);
  }
  put(rep, "dims", dims);
  put(rep, "class_ids", classes);
  put(rep, "conjugation_equivalence", verify_conjugation_equivalence(p.lw, p.sr));
}

std::vector<long> class_rep_indices(const StrataResult& sr) {
  std::vector<long> reps;
  for (size_t i = 0; i < sr.strata.size(); ++i)
    if (sr.strata[i].class_rep) reps.push_back(static_cast<long>(i));
  return reps;
}

Vec point_in_ambient(const CMat& h, const std::vector<Cyclo>& coords) {
  Vec p = zero_vec(h.cols());
  for (long i = 0; i < h.rows(); ++i)
    p = vec_add(p, vec_scale(coords[static_cast<size_t>(i)], h.row(i)));
  return p;
}

void run_families(const Pipeline& p, unsigned long long, SectionReport& rep) {
  std::vector<long> reps = class_rep_indices(p.sr);
  put(rep, "class_reps", json(reps));

  json same_w = json::array();
  json same_gc = json::array();
  for (long i : reps) {
    json wrow = json::array();
    json grow = json::array();
    for (long j : reps) {
      const Stratum& a = p.sr.strata[static_cast<size_t>(i)];
      const Stratum& b = p.sr.strata[static_cast<size_t>(j)];
      wrow.push_back(same_W_family(p.lw.group, a, b));
      TriState t = same_gC_family(p.g, p.lw, a, b);
      grow.push_back(t == TriState::yes ? "yes" : (t == TriState::no ? "no" : "unknown"));
    }
    same_w.push_back(wrow);
    same_gc.push_back(grow);
  }
  put(rep, "same_w_family", same_w);
  put(rep, "same_gc_family", same_gc);

  json orders = json::array();
  json free = json::array();
  for (long i : reps) {
    GammaResult gr = gamma_of_stratum(p.lw, p.sr, p.sr.strata[static_cast<size_t>(i)]);
    orders.push_back(gr.restricted.size());
    free.push_back(gr.free_on_open_part);
  }
  put(rep, "gamma_orders", orders);
  put(rep, "gamma_free", free);
}

void run_central(const Pipeline& p, unsigned long long seed, SectionReport& rep) {
  json circ = json::array();
  json constant = json::array();
  for (const auto& s : p.sr.strata) {
    circ.push_back(circ_equals_reg(p.lw, p.ws, s));
    constant.push_back(verify_central(p.g, p.lw, p.ws, s, p.spec->samples));
  }
  put(rep, "circ_equals_reg", circ);
  put(rep, "centralizer_constant", constant);

  // At each orbit class representative, the reflection group of the
  // centralizer algebra must equal the stabilizer of the point.
  WeylOptions opt;
  opt.seed = seed;
  opt.cap = p.spec->cap;
  json match = json::array();
  for (long i : class_rep_indices(p.sr)) {
    const Stratum& s = p.sr.strata[static_cast<size_t>(i)];
    LittleWeyl wc = weyl_of_centralizer(p.g, p.lw.h, point_in_ambient(p.lw.h, s.rep), opt);
    match.push_back(same_subgroup(wc.group, p.lw.group,
                                  stabilizer_indices(p.lw.group, s.rep)));
  }
  put(rep, "weyl_match_at_reps", match);
}

void run_h1(const Pipeline& p, unsigned long long, SectionReport& rep) {
  RealStructure structure =
      p.spec->real == "compact" ? compact_structure(p.g) : split_structure(p.g);
  put(rep, "structure", p.spec->real);

  if (!conj_stable(structure, p.lw.h))
    fail(ErrorCode::hypothesis_not_met,
         "Cartan subspace is not stable under the conjugation");
  CMat c = conj_on_subspace(structure, p.lw.h);
  std::vector<long> sigma = twist_on_group(p.lw.group, c);
  Cohomology coh = group_cohomology(p.lw.group, sigma);
  put(rep, "h1_of_group", coh.size());

  json counts = json::array();
  json direct = json::array();
  for (long i : class_rep_indices(p.sr)) {
    const Stratum& s = p.sr.strata[static_cast<size_t>(i)];
    counts.push_back(real_orbit_count(p.lw.group, sigma, s.stabilizer).count);
    direct.push_back(real_point_decision(p.lw.group, c, s.rep).direct);
  }
  put(rep, "real_orbit_counts", counts);
  put(rep, "rep_is_real", direct);
}

std::string dep_of(const std::string& name) {
  if (name == "grade") return "";
  if (name == "cartan") return "grade";
  if (name == "weights") return "cartan";
  if (name == "weyl") return "weights";
  if (name == "strata") return "weyl";
  return "strata";  // families, central, h1
}

void run_section(const std::string& name, Pipeline& p, unsigned long long seed,
                 SectionReport& rep) {
  if (name == "grade") run_grade(p, seed, rep);
  else if (name == "cartan") run_cartan(p, seed, rep);
  else if (name == "weights") run_weights(p, seed, rep);
  else if (name == "weyl") run_weyl(p, seed, rep);
  else if (name == "strata") run_strata(p, seed, rep);
  else if (name == "families") run_families(p, seed, rep);
  else if (name == "central") run_central(p, seed, rep);
  else if (name == "h1") run_h1(p, seed, rep);
  else fail(ErrorCode::internal_error, "no runner for section " + name);
}

const char* state_name(SectionState s) {
  switch (s) {
    case SectionState::ok: return "ok";
    case SectionState::failed: return "failed";
    case SectionState::skipped: return "skipped";
  }
  return "unknown";
}

}  // namespace

const std::vector<std::string>& section_names() {
  static const std::vector<std::string> names = {
      "grade", "cartan", "weights", "weyl", "strata", "families", "central", "h1"};
  return names;
}

unsigned long long section_seed(unsigned long long base, const std::string& name) {
  // FNV-1a; fixed constants keep the derivation stable across platforms.
  unsigned long long h = 14695981039346656037ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return base + h;
}

JobSpec parse_job_spec(const std::string& text) {
  JobSpec spec;
  std::istringstream in(text);
  std::string raw;
  long lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::parse_error,
           "line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "type") {
      spec.type = value;
    } else if (key == "rank") {
      spec.rank = parse_long(value, key);
    } else if (key == "kac") {
      spec.kac.clear();
      for (const auto& item : split_list(value)) spec.kac.push_back(parse_long(item, key));
    } else if (key == "degree") {
      spec.degree = parse_long(value, key);
    } else if (key == "seed") {
      spec.seed = parse_seed(value);
    } else if (key == "cap") {
      spec.cap = parse_long(value, key);
    } else if (key == "samples") {
      spec.samples = parse_long(value, key);
    } else if (key == "real") {
      if (value != "split" && value != "compact")
        fail(ErrorCode::parse_error, "real must be 'split' or 'compact'");
      spec.real = value;
    } else if (key == "sections") {
      spec.sections.clear();
      if (value != "all") {
        for (const auto& item : split_list(value)) {
          const auto& names = section_names();
          if (std::find(names.begin(), names.end(), item) == names.end())
            fail(ErrorCode::parse_error, "unknown section: " + item);
          spec.sections.push_back(item);
        }
      }
    } else if (key == "parallel") {
      if (value == "0" || value == "false") spec.parallel = false;
      else if (value == "1" || value == "true") spec.parallel = true;
      else fail(ErrorCode::parse_error, "parallel must be 0/1/true/false");
    } else {
      fail(ErrorCode::parse_error, "unknown key: " + key);
    }
  }
  if (spec.type.empty()) fail(ErrorCode::parse_error, "job needs a 'type' line");
  if (spec.rank <= 0) fail(ErrorCode::parse_error, "job needs a positive 'rank'");
  if (static_cast<long>(spec.kac.size()) != spec.rank + 1)
    fail(ErrorCode::parse_error, "kac must list rank+1 diagram coordinates");
  return spec;
}

bool JobResult::all_ok() const {
  for (const auto& s : sections)
    if (s.state != SectionState::ok) return false;
  return true;
}

JobResult run_job(const JobSpec& spec) {
  JobResult out;
  out.spec = spec;

  const auto& order = section_names();
  std::set<std::string> want;
  if (spec.sections.empty()) {
    want.insert(order.begin(), order.end());
  } else {
    for (const auto& s : spec.sections) {
      if (std::find(order.begin(), order.end(), s) == order.end())
        fail(ErrorCode::invalid_argument, "unknown section: " + s);
      for (std::string cur = s; !cur.empty(); cur = dep_of(cur)) want.insert(cur);
    }
  }

  for (const auto& name : order) {
    if (!want.count(name)) continue;
    SectionReport rep;
    rep.name = name;
    out.sections.push_back(std::move(rep));
  }
  auto slot = [&](const std::string& name) -> SectionReport& {
    for (auto& r : out.sections)
      if (r.name == name) return r;
    fail(ErrorCode::internal_error, "missing section slot: " + name);
  };

  Pipeline p;
  p.spec = &spec;
  std::map<std::string, SectionState> done;  // chain results, fixed before the tail runs

  auto execute = [&](const std::string& name) {
    SectionReport& rep = slot(name);
    std::string d = dep_of(name);
    if (!d.empty()) {
      auto it = done.find(d);
      if (it == done.end() || it->second != SectionState::ok) {
        rep.state = SectionState::skipped;
        rep.error = "requires " + d;
        return;
      }
    }
    try {
      run_section(name, p, section_seed(spec.seed, name), rep);
      rep.state = SectionState::ok;
    } catch (const Error& e) {
      rep.state = SectionState::failed;
      rep.error = std::string(error_code_name(e.code())) + ": " + e.what();
      rep.data.clear();
    } catch (const std::exception& e) {
      rep.state = SectionState::failed;
      rep.error = std::string("internal_error: ") + e.what();
      rep.data.clear();
    }
  };

  static const std::vector<std::string> chain = {"grade", "cartan", "weights", "weyl",
                                                 "strata"};
  for (const auto& name : chain) {
    if (!want.count(name)) continue;
    execute(name);
    done[name] = slot(name).state;
  }

  std::vector<std::string> tail;
  for (const char* name : {"families", "central", "h1"})
    if (want.count(name)) tail.emplace_back(name);

  if (spec.parallel && tail.size() > 1) {
    std::vector<std::thread> threads;
    threads.reserve(tail.size());
    for (const auto& name : tail)
      threads.emplace_back([&execute, name] { execute(name); });
    for (auto& t : threads) t.join();
  } else {
    for (const auto& name : tail) execute(name);
  }
  return out;
}

std::string render_text(const JobResult& r) {
  std::ostringstream out;
  out << "liegrade report\n";
  out << "job: type=" << r.spec.type << " rank=" << r.spec.rank << " kac=";
  out << json(r.spec.kac).dump();
  out << " degree=" << r.spec.degree << " seed=" << r.spec.seed
      << " cap=" << r.spec.cap << " samples=" << r.spec.samples
      << " real=" << r.spec.real << "\n";
  for (const auto& s : r.sections) {
    out << "section " << s.name << ": " << state_name(s.state);
    if (!s.error.empty()) out << " (" << s.error << ")";
    out << "\n";
    for (const auto& [key, value] : s.data) out << "  " << key << " = " << value << "\n";
  }
  return out.str();
}

std::string render_machine(const JobResult& r) {
  json doc;
  doc["schema"] = "liegrade.report.v1";
  json job;
  job["type"] = r.spec.type;
  job["rank"] = r.spec.rank;
  job["kac"] = r.spec.kac;
  job["degree"] = r.spec.degree;
  job["seed"] = r.spec.seed;
  job["cap"] = r.spec.cap;
  job["samples"] = r.spec.samples;
  job["real"] = r.spec.real;
  doc["job"] = job;
  json sections = json::array();
  for (const auto& s : r.sections) {
    json sec;
    sec["name"] = s.name;
    sec["state"] = state_name(s.state);
    if (!s.error.empty()) sec["error"] = s.error;
    json data = json::object();
    for (const auto& [key, value] : s.data) data[key] = json::parse(value);
    sec["data"] = std::move(data);
    sections.push_back(std::move(sec));
  }
  doc["sections"] = std::move(sections);
  return doc.dump(2) + "\n";
}

}  // namespace liegrade
