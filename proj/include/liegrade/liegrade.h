/* liegrade: exact computation with cyclically graded semisimple Lie algebras.
 *
 * C interface to the shared library.  All objects are opaque handles owned
 * by the library; every fallible call returns a status code and leaves a
 * message for the calling thread readable via lg_last_error().  Strings
 * returned by accessor functions point into the handle and stay valid until
 * the handle is freed.
 *
 * Typical use:
 *
 *   lg_job* job = NULL;
 *   lg_report* report = NULL;
 *   if (lg_job_parse("type=A\nrank=2\nkac=1,1,1\n", &job) != LG_OK) { ... }
 *   if (lg_run_job(job, &report) != LG_OK) { ... }
 *   puts(lg_report_text(report));
 *   lg_report_free(report);
 *   lg_job_free(job);
 */

#ifndef LIEGRADE_H
#define LIEGRADE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes, stable across releases. */
typedef enum lg_status {
  LG_OK = 0,
  LG_INVALID_ARGUMENT = 1,    /* malformed input (type tag, rank, sizes) */
  LG_NOT_A_FIELD_ELEMENT = 2, /* division by zero in exact arithmetic */
  LG_FIELD_TOO_SMALL = 3,     /* eigenvalue outside the declared field */
  LG_NOT_DIAGONALIZABLE = 4,  /* operator is not semisimple over the field */
  LG_STRUCTURE_VIOLATION = 5, /* algebraic invariant failed to hold */
  LG_SEARCH_FAILED = 6,       /* randomized search exhausted its budget */
  LG_CAP_EXCEEDED = 7,        /* enumeration outgrew its configured cap */
  LG_NOT_MAXIMAL_RANK = 8,    /* centralizer is not a Cartan subalgebra */
  LG_LIFTING_OBSTRUCTION = 9, /* group failed reflection validation */
  LG_HYPOTHESIS_NOT_MET = 10, /* mathematical precondition not satisfied */
  LG_PARSE_ERROR = 11,        /* malformed job description */
  LG_INTERNAL_ERROR = 12
} lg_status;

/* Stable name of a status code ("ok", "parse_error", ...). */
const char* lg_status_name(lg_status s);

/* Message of the most recent failure on the calling thread ("" if none). */
const char* lg_last_error(void);

/* Library version string. */
const char* lg_version(void);

/* ------------------------------------------------------------------ *
 * Graded algebras                                                     *
 * ------------------------------------------------------------------ */

typedef struct lg_algebra lg_algebra;

/* Build the graded simple algebra of the given type ("A".."G") and rank
 * from diagram coordinates kac[0..kac_len-1] (kac_len must be rank+1).
 * The structure is fully audited before the handle is returned. */
lg_status lg_algebra_build(const char* type, long rank, const long* kac,
                           size_t kac_len, lg_algebra** out);
void lg_algebra_free(lg_algebra* a);

long lg_algebra_dim(const lg_algebra* a);
long lg_algebra_order(const lg_algebra* a);           /* grading order m */
long lg_algebra_component_dim(const lg_algebra* a, long degree); /* mod m */

/* ------------------------------------------------------------------ *
 * Jobs and reports                                                    *
 * ------------------------------------------------------------------ */

typedef struct lg_job lg_job;
typedef struct lg_report lg_report;

/* Parse a job description: "key = value" lines, '#' comments.  Keys:
 * type, rank, kac, degree, seed, cap, samples, real (split|compact),
 * sections (comma list or "all"), parallel (0|1).  Later lines override
 * earlier ones. */
lg_status lg_job_parse(const char* text, lg_job** out);
void lg_job_free(lg_job* j);

/* Run the job's sections and render the report.  The report body is a
 * deterministic function of the job description. */
lg_status lg_run_job(const lg_job* j, lg_report** out);
void lg_report_free(lg_report* r);

const char* lg_report_text(const lg_report* r);
const char* lg_report_json(const lg_report* r);
int lg_report_all_ok(const lg_report* r); /* 1 when every section ran ok */

long lg_report_section_count(const lg_report* r);
/* Per-section accessors; NULL when the index is out of range. */
const char* lg_report_section_name(const lg_report* r, long i);
const char* lg_report_section_state(const lg_report* r, long i); /* ok|failed|skipped */
const char* lg_report_section_error(const lg_report* r, long i); /* "" when ok */

#ifdef __cplusplus
}
#endif

#endif /* LIEGRADE_H */
