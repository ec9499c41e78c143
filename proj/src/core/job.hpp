// Job orchestration: parse a description of a graded algebra and the
// analyses to run on it, execute the sections in dependency order, and
// render the results as plain text or machine-readable JSON.
//
// Determinism contract: every randomized step inside a section draws from a
// seed derived only from the job seed and the section's name, so the report
// body is byte-identical across runs and independent of whether the
// independent tail sections execute serially or on threads.  Nothing
// time-dependent enters the rendered output.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace liegrade {

struct JobSpec {
  std::string type;       // simple type letter A..G
  long rank = 0;
  std::vector<long> kac;  // diagram coordinates s_0..s_rank
  long degree = 1;        // component carrying the Cartan subspace
  unsigned long long seed = 0x5eed;
  long cap = 200000;      // group closure size cap
  long samples = 10;      // points per stratum for the centralizer check
  std::string real = "split";         // real structure: split | compact
  std::vector<std::string> sections;  // requested sections; empty = all
  bool parallel = false;  // run independent tail sections on threads
};

// Parse "key = value" lines ('#' starts a comment; blank lines ignored).
// Keys: type, rank, kac, degree, seed, cap, samples, real, sections,
// parallel.  List values are comma-separated.  The description must name a
// type, a positive rank, and rank+1 diagram coordinates.  Errors: parse_error.
JobSpec parse_job_spec(const std::string& text);

// Canonical section names in dependency order:
// grade, cartan, weights, weyl, strata, families, central, h1.
// The first five form a chain; the last three depend only on strata.
const std::vector<std::string>& section_names();

// Seed used by a section: the job seed shifted by a hash of the name.
unsigned long long section_seed(unsigned long long base, const std::string& name);

enum class SectionState { ok, failed, skipped };

struct SectionReport {
  std::string name;
  SectionState state = SectionState::skipped;
  std::string error;  // failure reason, or the dependency that blocked a skip
  // ordered key/value results; values are JSON fragments (numbers, strings,
  // arrays) so both renderers agree on the content
  std::vector<std::pair<std::string, std::string>> data;
};

struct JobResult {
  JobSpec spec;
  std::vector<SectionReport> sections;  // canonical order, requested only

  bool all_ok() const;
};

// Run the requested sections (plus the prerequisites they need).  A failed
// section marks its dependents skipped; independent sections still run.
JobResult run_job(const JobSpec& spec);

// Human-readable report.
std::string render_text(const JobResult& r);

// JSON report with a schema tag.  The body carries no timing and no
// execution-mode echo, so equal results render to equal bytes.
std::string render_machine(const JobResult& r);

}  // namespace liegrade
