/* C interface to the qsym engine. All handles are opaque and owned by the
 * caller once returned; free them with the matching *_free function.
 * Strings returned through char** are freed with qsym_string_free.
 * On failure a function returns a nonzero status and qsym_last_error()
 * describes the problem (per thread, valid until the next call). */
#ifndef QSYM_QSYM_H
#define QSYM_QSYM_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(QSYM_BUILDING_LIBRARY)
#define QSYM_API __declspec(dllexport)
#else
#define QSYM_API __declspec(dllimport)
#endif
#elif defined(QSYM_BUILDING_LIBRARY)
#define QSYM_API __attribute__((visibility("default")))
#else
#define QSYM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsym_status {
  QSYM_OK = 0,
  QSYM_INVALID_ARGUMENT = 1,
  QSYM_PARSE = 2,
  QSYM_INDEX = 3,
  QSYM_SIZE = 4,
  QSYM_UNSUPPORTED = 5,
  QSYM_IO = 6,
  QSYM_NOT_REPRESENTABLE = 7,
  QSYM_INTERNAL = 8
} qsym_status;

typedef struct qsym_poly qsym_poly;
typedef struct qsym_basis qsym_basis;
typedef struct qsym_certificate qsym_certificate;

QSYM_API const char* qsym_version(void);
QSYM_API const char* qsym_last_error(void);
QSYM_API const char* qsym_status_name(qsym_status s);
QSYM_API void qsym_string_free(char* s);

/* Polynomials over n x n generators u[i,j]. */
QSYM_API qsym_status qsym_poly_parse(int n, const char* text, qsym_poly** out);
QSYM_API qsym_status qsym_poly_to_string(const qsym_poly* p, char** out);
/* Matrix size n the polynomial lives over. */
QSYM_API int qsym_poly_size(const qsym_poly* p);
QSYM_API int qsym_poly_term_count(const qsym_poly* p);
QSYM_API int qsym_poly_is_zero(const qsym_poly* p);
QSYM_API int qsym_poly_equal(const qsym_poly* a, const qsym_poly* b);
QSYM_API void qsym_poly_free(qsym_poly* p);

/* family: rs, cs, ip, inj, wel, rinj, rwel, bg1..bg14, rrs, rcs, rinjcs, rwelcs. */
QSYM_API qsym_status qsym_relation_make(int n, const char* family, const int* indices, size_t count, qsym_poly** out);

/* set: Fpp, Fp, F, B, G. */
QSYM_API qsym_status qsym_basis_named(int n, const char* set, qsym_basis** out);
/* One polynomial per line, '#' comments. */
QSYM_API qsym_status qsym_basis_parse(int n, const char* text, qsym_basis** out);
QSYM_API qsym_status qsym_basis_count(const qsym_basis* b, size_t* out);
QSYM_API qsym_status qsym_basis_element(const qsym_basis* b, size_t index, qsym_poly** out);
/* One element per line in basis order. */
QSYM_API qsym_status qsym_basis_to_string(const qsym_basis* b, char** out);
QSYM_API void qsym_basis_free(qsym_basis* b);

/* certificate may be NULL. */
QSYM_API qsym_status qsym_normal_form(const qsym_poly* f, const qsym_basis* g, qsym_poly** remainder,
                                      qsym_certificate** certificate);

typedef struct qsym_groebner_report {
  int is_groebner;
  size_t tasks_total;
  size_t tasks_discharged;
  size_t tasks_checked;
  size_t failures;
  size_t certificates_verified;
  size_t certificates_rejected;
} qsym_groebner_report;

/* failures_text (may be NULL) receives one line per failing relation. */
QSYM_API qsym_status qsym_check_groebner(const qsym_basis* g, unsigned jobs, int strict_concatenation,
                                         int verify_certificates, qsym_groebner_report* report, char** failures_text);

/* max_degree / max_rounds <= 0 mean unbounded. *completed is 0 when a cap hit. */
QSYM_API qsym_status qsym_buchberger(const qsym_basis* input, int max_degree, int max_rounds, unsigned jobs,
                                     qsym_basis** out, int* completed, int* rounds);

/* Decides lhs = rhs modulo the closed-form Groebner basis (n >= 4). */
QSYM_API qsym_status qsym_word_problem(const qsym_poly* lhs, const qsym_poly* rhs, int* equivalent,
                                       qsym_poly** lhs_normal_form, qsym_poly** rhs_normal_form);

QSYM_API qsym_status qsym_certificate_parse(const char* text, qsym_certificate** out);
QSYM_API qsym_status qsym_certificate_to_string(const qsym_certificate* c, char** out);
QSYM_API int qsym_certificate_size(const qsym_certificate* c);
QSYM_API qsym_status qsym_certificate_verify(const qsym_certificate* c, const qsym_basis* g, int* valid);
QSYM_API void qsym_certificate_free(qsym_certificate* c);

/* Parametric identity file contents. sample_lo = 0 keeps the file's range. */
QSYM_API qsym_status qsym_param_check(const char* identity_text, int sample_lo, int sample_hi, int* passed,
                                      char** report);

typedef void (*qsym_line_callback)(const char* line, int passed, void* user);

/* criterion = 0 runs all; extra_size = 0 adds no size. */
QSYM_API qsym_status qsym_run_suite(int extended, int extra_size, unsigned jobs, int criterion,
                                    qsym_line_callback on_line, void* user, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
