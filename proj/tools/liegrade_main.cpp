// Command-line front end for the liegrade shared library.
//
// Subcommands name the analysis to run: `build` checks and summarizes the
// graded algebra, the section names (grade, cartan, weights, weyl, strata,
// families, central, h1) run the pipeline up to that section, and `report`
// runs everything.  The job can come from flags, from a description file
// (--job), or both, with flags taking precedence.
//
// Everything goes through the public C interface; this program contains no
// algebra of its own.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "liegrade/liegrade.h"

namespace {

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

int api_error(const std::string& where, lg_status status) {
  std::cerr << "error: " << where << ": " << lg_status_name(status) << ": "
            << lg_last_error() << "\n";
  return 2;
}

std::vector<long> parse_long_list(const std::string& text, bool* ok) {
  std::vector<long> out;
  std::istringstream in(text);
  std::string item;
  *ok = true;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      *ok = false;
      return out;
    }
  }
  return out;
}

int run_build(const std::string& type, long rank, const std::string& kac_text) {
  if (type.empty() || rank <= 0 || kac_text.empty())
    return usage_error("build needs --type, --rank, and --kac");
  bool ok = false;
  std::vector<long> kac = parse_long_list(kac_text, &ok);
  if (!ok) return usage_error("--kac must be a comma-separated list of integers");

  lg_algebra* a = nullptr;
  lg_status status = lg_algebra_build(type.c_str(), rank, kac.data(), kac.size(), &a);
  if (status != LG_OK) return api_error("build", status);

  long m = lg_algebra_order(a);
  std::cout << "type " << type << " rank " << rank << ": dim " << lg_algebra_dim(a)
            << ", grading order " << m << ", component dims [";
  for (long d = 0; d < m; ++d)
    std::cout << (d ? ", " : "") << lg_algebra_component_dim(a, d);
  std::cout << "]\n";
  lg_algebra_free(a);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of cyclically graded semisimple Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string type, kac, real, job_file, format = "text", out_file;
  long rank = 0, degree = 0, cap = 0, samples = 0;
  unsigned long long seed = 0;
  bool parallel = false;

  app.add_option("--type", type, "simple type letter A..G");
  app.add_option("--rank", rank, "rank of the simple type");
  app.add_option("--kac", kac, "diagram coordinates s_0,...,s_rank");
  app.add_option("--degree", degree, "component carrying the Cartan subspace");
  app.add_option("--seed", seed, "seed for all randomized searches");
  app.add_option("--cap", cap, "group closure size cap");
  app.add_option("--samples", samples, "points per stratum for the centralizer check");
  app.add_option("--real", real, "real structure: split or compact")
      ->check(CLI::IsMember({"split", "compact"}));
  app.add_option("--job", job_file, "job description file (key=value lines)");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--out", out_file, "write the report to a file instead of stdout");
  app.add_flag("--parallel", parallel, "run independent sections on threads");

  const std::vector<std::pair<std::string, std::string>> subcommands = {
      {"build", "construct and audit the graded algebra"},
      {"grade", "grading structure and component dimensions"},
      {"cartan", "Cartan subspace and its algebraic closure"},
      {"weights", "weights and the hyperplane arrangement"},
      {"weyl", "little Weyl group"},
      {"strata", "stratification of the Cartan subspace"},
      {"families", "family structure of the strata"},
      {"central", "centralizer checks along the strata"},
      {"h1", "real structures and first cohomology"},
      {"report", "run every section"},
  };
  for (const auto& [name, description] : subcommands)
    app.add_subcommand(name, description);

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  if (command == "build") return run_build(type, rank, kac);

  std::string spec_text;
  if (!job_file.empty()) {
    std::ifstream in(job_file);
    if (!in) return usage_error("cannot read job file: " + job_file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    spec_text = buffer.str() + "\n";
  }
  if (app.count("--type")) spec_text += "type=" + type + "\n";
  if (app.count("--rank")) spec_text += "rank=" + std::to_string(rank) + "\n";
  if (app.count("--kac")) spec_text += "kac=" + kac + "\n";
  if (app.count("--degree")) spec_text += "degree=" + std::to_string(degree) + "\n";
  if (app.count("--seed")) spec_text += "seed=" + std::to_string(seed) + "\n";
  if (app.count("--cap")) spec_text += "cap=" + std::to_string(cap) + "\n";
  if (app.count("--samples")) spec_text += "samples=" + std::to_string(samples) + "\n";
  if (app.count("--real")) spec_text += "real=" + real + "\n";
  if (app.count("--parallel")) spec_text += "parallel=1\n";
  spec_text += "sections=" + (command == "report" ? std::string("all") : command) + "\n";

  lg_job* job = nullptr;
  lg_status status = lg_job_parse(spec_text.c_str(), &job);
  if (status != LG_OK) return api_error("job", status);

  lg_report* report = nullptr;
  status = lg_run_job(job, &report);
  if (status != LG_OK) {
    lg_job_free(job);
    return api_error("run", status);
  }

  const char* body = format == "machine" ? lg_report_json(report) : lg_report_text(report);
  if (out_file.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_file, std::ios::binary);
    if (!out) {
      lg_report_free(report);
      lg_job_free(job);
      return usage_error("cannot write: " + out_file);
    }
    out << body;
  }

  int exit_code = lg_report_all_ok(report) ? 0 : 1;
  if (exit_code != 0) {
    long n = lg_report_section_count(report);
    for (long i = 0; i < n; ++i) {
      std::string state = lg_report_section_state(report, i);
      if (state != "ok")
        std::cerr << "section " << lg_report_section_name(report, i) << ": " << state
                  << " (" << lg_report_section_error(report, i) << ")\n";
    }
  }
  lg_report_free(report);
  lg_job_free(job);
  return exit_code;
}
