// C API implementation: opaque handles wrapping the C++ core, status codes
// mirroring the internal error taxonomy, and a thread-local slot for the
// last failure message.

#include "liegrade/liegrade.h"

#include <memory>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/grading.hpp"
#include "core/job.hpp"

using liegrade::Error;
using liegrade::ErrorCode;

namespace {

thread_local std::string t_last_error;

template <class Fn>
lg_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return LG_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return static_cast<lg_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return LG_INTERNAL_ERROR;
  }
}

lg_status null_argument() {
  t_last_error = "null argument";
  return LG_INVALID_ARGUMENT;
}

}  // namespace

struct lg_algebra {
  liegrade::GradedAlgebra g;
};

struct lg_job {
  liegrade::JobSpec spec;
};

struct lg_report {
  liegrade::JobResult result;
  std::string text;
  std::string json;
};

extern "C" {

const char* lg_status_name(lg_status s) {
  if (s < LG_OK || s > LG_INTERNAL_ERROR) return "unknown";
  return liegrade::error_code_name(static_cast<ErrorCode>(static_cast<int>(s)));
}

const char* lg_last_error(void) { return t_last_error.c_str(); }

const char* lg_version(void) { return "0.1.0"; }

lg_status lg_algebra_build(const char* type, long rank, const long* kac,
                           size_t kac_len, lg_algebra** out) {
  if (!type || !out || (!kac && kac_len > 0)) return null_argument();
  *out = nullptr;
  return guarded([&] {
    std::vector<long> s(kac, kac + kac_len);
    auto handle = std::make_unique<lg_algebra>();
    handle->g = liegrade::grade_from_kac(type, rank, s);
    std::string err = liegrade::grading_check(handle->g);
    if (!err.empty()) liegrade::fail(ErrorCode::structure_violation, err);
    *out = handle.release();
  });
}

void lg_algebra_free(lg_algebra* a) { delete a; }

long lg_algebra_dim(const lg_algebra* a) { return a ? a->g.dim() : 0; }

long lg_algebra_order(const lg_algebra* a) { return a ? a->g.m : 0; }

long lg_algebra_component_dim(const lg_algebra* a, long degree) {
  return a ? a->g.component(degree).rows() : 0;
}

lg_status lg_job_parse(const char* text, lg_job** out) {
  if (!text || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<lg_job>();
    handle->spec = liegrade::parse_job_spec(text);
    *out = handle.release();
  });
}

void lg_job_free(lg_job* j) { delete j; }

lg_status lg_run_job(const lg_job* j, lg_report** out) {
  if (!j || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<lg_report>();
    handle->result = liegrade::run_job(j->spec);
    handle->text = liegrade::render_text(handle->result);
    handle->json = liegrade::render_machine(handle->result);
    *out = handle.release();
  });
}

void lg_report_free(lg_report* r) { delete r; }

const char* lg_report_text(const lg_report* r) { return r ? r->text.c_str() : ""; }

const char* lg_report_json(const lg_report* r) { return r ? r->json.c_str() : ""; }

int lg_report_all_ok(const lg_report* r) { return r && r->result.all_ok() ? 1 : 0; }

long lg_report_section_count(const lg_report* r) {
  return r ? static_cast<long>(r->result.sections.size()) : 0;
}

static const liegrade::SectionReport* section_at(const lg_report* r, long i) {
  if (!r || i < 0 || i >= static_cast<long>(r->result.sections.size())) return nullptr;
  return &r->result.sections[static_cast<size_t>(i)];
}

const char* lg_report_section_name(const lg_report* r, long i) {
  const auto* s = section_at(r, i);
  return s ? s->name.c_str() : nullptr;
}

const char* lg_report_section_state(const lg_report* r, long i) {
  const auto* s = section_at(r, i);
  if (!s) return nullptr;
  switch (s->state) {
    case liegrade::SectionState::ok: return "ok";
    case liegrade::SectionState::failed: return "failed";
    case liegrade::SectionState::skipped: return "skipped";
  }
  return "unknown";
}

const char* lg_report_section_error(const lg_report* r, long i) {
  const auto* s = section_at(r, i);
  return s ? s->error.c_str() : nullptr;
}

}  // extern "C"
