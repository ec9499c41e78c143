/* Exercises the shared-library interface the way an external C consumer
 * would: build an algebra, run a job, read the report, and check that
 * failures surface as status codes with readable messages. */

#include <liegrade/liegrade.h>

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define CHECK(cond)                                                       \
  do {                                                                    \
    if (!(cond)) {                                                        \
      ++failures;                                                         \
      fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);     \
    }                                                                     \
  } while (0)

static void test_version_and_names(void) {
  CHECK(lg_version() != NULL);
  CHECK(strlen(lg_version()) > 0);
  CHECK(strcmp(lg_status_name(LG_OK), "ok") == 0);
  CHECK(strcmp(lg_status_name(LG_PARSE_ERROR), "parse_error") == 0);
  CHECK(strcmp(lg_status_name(LG_CAP_EXCEEDED), "cap_exceeded") == 0);
}

static void test_algebra_lifecycle(void) {
  long kac[3] = {1, 1, 1};
  lg_algebra* a = NULL;
  CHECK(lg_algebra_build("A", 2, kac, 3, &a) == LG_OK);
  CHECK(a != NULL);
  CHECK(lg_algebra_dim(a) == 8);
  CHECK(lg_algebra_order(a) == 3);
  CHECK(lg_algebra_component_dim(a, 0) == 2);
  CHECK(lg_algebra_component_dim(a, 1) == 3);
  CHECK(lg_algebra_component_dim(a, 2) == 3);
  CHECK(lg_algebra_component_dim(a, -1) == 3); /* wraps mod m */
  lg_algebra_free(a);
}

static void test_algebra_errors(void) {
  long kac[3] = {1, 1, 1};
  lg_algebra* a = NULL;
  CHECK(lg_algebra_build("Q", 2, kac, 3, &a) == LG_INVALID_ARGUMENT);
  CHECK(a == NULL);
  CHECK(strlen(lg_last_error()) > 0);
  CHECK(lg_algebra_build("A", 2, kac, 2, &a) == LG_INVALID_ARGUMENT);
  CHECK(lg_algebra_build("A", 2, NULL, 0, &a) == LG_INVALID_ARGUMENT);
  CHECK(lg_algebra_build("A", 2, kac, 3, NULL) == LG_INVALID_ARGUMENT);
}

static void test_job_roundtrip(void) {
  lg_job* job = NULL;
  lg_report* report = NULL;
  CHECK(lg_job_parse("type = A\nrank = 1\nkac = 1,1\n", &job) == LG_OK);
  CHECK(lg_run_job(job, &report) == LG_OK);
  CHECK(report != NULL);
  CHECK(lg_report_all_ok(report) == 1);
  CHECK(lg_report_section_count(report) == 8);
  CHECK(strcmp(lg_report_section_name(report, 0), "grade") == 0);
  CHECK(strcmp(lg_report_section_state(report, 0), "ok") == 0);
  CHECK(strlen(lg_report_section_error(report, 0)) == 0);
  CHECK(lg_report_text(report) != NULL);
  CHECK(strstr(lg_report_text(report), "section weyl: ok") != NULL);
  CHECK(lg_report_json(report) != NULL);
  CHECK(strstr(lg_report_json(report), "liegrade.report.v1") != NULL);
  lg_report_free(report);
  lg_job_free(job);
}

static void test_job_failure_paths(void) {
  lg_job* job = NULL;
  lg_report* report = NULL;

  CHECK(lg_job_parse("type = A\n", &job) == LG_PARSE_ERROR);
  CHECK(job == NULL);
  CHECK(strlen(lg_last_error()) > 0);
  CHECK(lg_job_parse("gibberish", &job) == LG_PARSE_ERROR);
  CHECK(lg_job_parse(NULL, &job) == LG_INVALID_ARGUMENT);
  CHECK(lg_job_parse("type = A\nrank = 1\nkac = 1,1\n", NULL) ==
        LG_INVALID_ARGUMENT);

  /* a job whose cartan section fails still runs: the report carries the
   * failure, the call itself succeeds */
  CHECK(lg_job_parse("type = G\nrank = 2\nkac = 1,0,1\n", &job) == LG_OK);
  CHECK(lg_run_job(job, &report) == LG_OK);
  CHECK(lg_report_all_ok(report) == 0);
  CHECK(strcmp(lg_report_section_state(report, 1), "failed") == 0);
  CHECK(strstr(lg_report_section_error(report, 1), "field_too_small") != NULL);
  CHECK(strcmp(lg_report_section_state(report, 2), "skipped") == 0);
  lg_report_free(report);
  lg_job_free(job);

  CHECK(lg_run_job(NULL, &report) == LG_INVALID_ARGUMENT);

  /* out-of-range section index */
  CHECK(lg_job_parse("type = A\nrank = 1\nkac = 1,1\n", &job) == LG_OK);
  CHECK(lg_run_job(job, &report) == LG_OK);
  CHECK(lg_report_section_name(report, 99) == NULL);
  CHECK(lg_report_section_name(report, -1) == NULL);
  lg_report_free(report);
  lg_job_free(job);
}

int main(void) {
  test_version_and_names();
  test_algebra_lifecycle();
  test_algebra_errors();
  test_job_roundtrip();
  test_job_failure_paths();
  if (failures == 0) {
    printf("capi: all checks passed\n");
    return 0;
  }
  fprintf(stderr, "capi: %d check(s) failed\n", failures);
  return 1;
}
