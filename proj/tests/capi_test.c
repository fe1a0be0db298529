#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "qsym/qsym.h"

static int failures = 0;

#define EXPECT(cond)                                                       \
  do {                                                                     \
    if (!(cond)) {                                                         \
      fprintf(stderr, "%s:%d: check failed: %s (%s)\n", __FILE__, __LINE__, \
              #cond, qsym_last_error());                                   \
      ++failures;                                                          \
    }                                                                      \
  } while (0)

static void count_lines(const char* line, int passed, void* user) {
  (void)line;
  (void)passed;
  ++*(int*)user;
}

int main(void) {
  qsym_poly* p = NULL;
  qsym_poly* q = NULL;
  qsym_poly* r = NULL;
  qsym_basis* g = NULL;
  qsym_certificate* cert = NULL;
  char* text = NULL;
  size_t count = 0;
  int flag = -1;

  EXPECT(strlen(qsym_version()) > 0);
  EXPECT(strcmp(qsym_status_name(QSYM_PARSE), "parse") == 0 || strlen(qsym_status_name(QSYM_PARSE)) > 0);

  EXPECT(qsym_poly_parse(4, "u[1,2]*u[2,1] - 3/2*u[1,1]", &p) == QSYM_OK);
  EXPECT(qsym_poly_size(p) == 4);
  EXPECT(qsym_poly_term_count(p) == 2);
  EXPECT(qsym_poly_to_string(p, &text) == QSYM_OK);
  EXPECT(text && strcmp(text, "u[1,2]*u[2,1] - 3/2*u[1,1]") == 0);
  qsym_string_free(text);
  text = NULL;
  qsym_poly_free(p);
  p = NULL;

  EXPECT(qsym_poly_parse(4, "u[5,1]", &p) == QSYM_INDEX);
  EXPECT(p == NULL);
  EXPECT(strlen(qsym_last_error()) > 0);
  EXPECT(qsym_poly_parse(4, "u[1,1] +", &p) == QSYM_PARSE);
  EXPECT(qsym_poly_parse(4, NULL, &p) == QSYM_INVALID_ARGUMENT);

  {
    int idx[] = {2, 2};
    EXPECT(qsym_relation_make(4, "ip", idx, 2, &p) == QSYM_OK);
    EXPECT(qsym_poly_parse(4, "u[2,2]*u[2,2] - u[2,2]", &q) == QSYM_OK);
    EXPECT(qsym_poly_equal(p, q) == 1);
    qsym_poly_free(p);
    qsym_poly_free(q);
    p = q = NULL;
    EXPECT(qsym_relation_make(4, "nope", idx, 2, &p) == QSYM_INVALID_ARGUMENT);
    EXPECT(qsym_relation_make(4, "rinj", idx, 2, &p) == QSYM_INDEX);
  }

  EXPECT(qsym_basis_named(3, "G", &g) == QSYM_UNSUPPORTED);
  EXPECT(qsym_basis_named(4, "G", &g) == QSYM_OK);
  EXPECT(qsym_basis_count(g, &count) == QSYM_OK);
  EXPECT(count == 78);

  EXPECT(qsym_poly_parse(4, "u[1,1]*u[1,2] + u[2,3]", &p) == QSYM_OK);
  EXPECT(qsym_normal_form(p, g, &r, &cert) == QSYM_OK);
  EXPECT(qsym_poly_to_string(r, &text) == QSYM_OK);
  EXPECT(text && strcmp(text, "u[2,3]") == 0);
  qsym_string_free(text);
  text = NULL;
  EXPECT(qsym_certificate_verify(cert, g, &flag) == QSYM_OK);
  EXPECT(flag == 1);
  EXPECT(qsym_certificate_to_string(cert, &text) == QSYM_OK);
  {
    qsym_certificate* back = NULL;
    char* again = NULL;
    EXPECT(qsym_certificate_parse(text, &back) == QSYM_OK);
    EXPECT(qsym_certificate_to_string(back, &again) == QSYM_OK);
    EXPECT(again && strcmp(text, again) == 0);
    qsym_string_free(again);
    qsym_certificate_free(back);
  }
  qsym_string_free(text);
  text = NULL;
  qsym_certificate_free(cert);
  cert = NULL;
  qsym_poly_free(r);
  r = NULL;
  qsym_poly_free(p);
  p = NULL;

  {
    qsym_groebner_report rep;
    memset(&rep, 0, sizeof rep);
    EXPECT(qsym_check_groebner(g, 1, 0, 0, &rep, NULL) == QSYM_OK);
    EXPECT(rep.is_groebner == 1);
    EXPECT(rep.failures == 0);
  }

  {
    qsym_poly* a = NULL;
    qsym_poly* b = NULL;
    qsym_poly* na = NULL;
    qsym_poly* nb = NULL;
    EXPECT(qsym_poly_parse(4, "u[2,2]*u[3,3]", &a) == QSYM_OK);
    EXPECT(qsym_poly_parse(4, "u[3,3]*u[2,2]", &b) == QSYM_OK);
    EXPECT(qsym_word_problem(a, b, &flag, &na, &nb) == QSYM_OK);
    EXPECT(flag == 0);
    EXPECT(qsym_poly_equal(na, nb) == 0);
    qsym_poly_free(a);
    qsym_poly_free(b);
    qsym_poly_free(na);
    qsym_poly_free(nb);
  }

  {
    qsym_basis* in = NULL;
    qsym_basis* out = NULL;
    int done = -1, rounds = -1;
    EXPECT(qsym_basis_parse(4, "# sums\nu[1,1] + u[1,2] + u[1,3] + u[1,4] - 1\nu[1,1] + u[2,1] + u[3,1] + u[4,1] - 1\n",
                            &in) == QSYM_OK);
    EXPECT(qsym_buchberger(in, 0, 0, 1, &out, &done, &rounds) == QSYM_OK);
    EXPECT(done == 1);
    EXPECT(qsym_basis_count(out, &count) == QSYM_OK);
    EXPECT(count == 2);
    qsym_basis_free(in);
    qsym_basis_free(out);
  }

  EXPECT(qsym_param_check("identity t\nfamily 2 | i1=1 ; i1>=2 | true\nlhs 2 | 1 | true\nrhs 2 | 1 | i1=1\nrhs 2 | 1 | i1>=2\n",
                          4, 5, &flag, &text) == QSYM_OK);
  EXPECT(flag == 1);
  qsym_string_free(text);
  text = NULL;
  EXPECT(qsym_param_check("garbage", 0, 0, &flag, &text) == QSYM_PARSE);

  {
    int lines = 0;
    EXPECT(qsym_run_suite(0, 0, 1, 11, count_lines, &lines, &flag) == QSYM_OK);
    EXPECT(lines == 1);
    EXPECT(flag == 1);
    EXPECT(qsym_run_suite(0, 0, 1, 12, count_lines, &lines, &flag) == QSYM_INVALID_ARGUMENT);
  }

  qsym_basis_free(g);
  qsym_poly_free(NULL);
  qsym_basis_free(NULL);

  if (failures) {
    fprintf(stderr, "%d C API checks failed\n", failures);
    return EXIT_FAILURE;
  }
  printf("C API checks passed\n");
  return EXIT_SUCCESS;
}
