/* Apache License, Version 2.0 */

/* C interface to the divisor-class calculus and the component sweep.
 *
 * Every function returns an es_status. On failure a message is available
 * through es_last_error() on the calling thread; parse failures also set
 * es_last_error_offset(). Handles are owned by the caller and released
 * with the matching *_free function. Returned strings stay valid as long
 * as the handle that owns them. */

#ifndef ENRIQUES_C_H
#define ENRIQUES_C_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#  define ES_API __attribute__((visibility("default")))
#else
#  define ES_API
#endif

typedef enum es_status {
  ES_OK = 0,
  ES_INVALID_ARGUMENT = 1,
  ES_MODEL_MISMATCH = 2,
  ES_UNSUPPORTED = 3,
  ES_UNSUPPORTED_GENERATOR = 4,
  ES_PARSE_ERROR = 5,
  ES_OUT_OF_THEOREM = 6,
  ES_OVERFLOW = 7,
  ES_INVARIANT_VIOLATION = 8,
  ES_INTERNAL = 9,
} es_status;

typedef enum es_filter {
  ES_FILTER_ALL = 0,
  ES_FILTER_NON_TWO_DIVISIBLE = 1,
} es_filter;

#define ES_NUM_COEFFICIENTS 11

typedef struct es_record es_record;
typedef struct es_record_list es_record_list;
typedef struct es_report es_report;

ES_API const char *es_version(void);
ES_API const char *es_status_name(es_status status);
ES_API const char *es_last_error(void);
/* Byte offset of the last parse error, or -1. */
ES_API long es_last_error_offset(void);
ES_API const char *es_tsv_header(void);
ES_API const char *es_tsv_columns(void);

/* Intersection number of two expressions on a model ("R4", "P5", "E"). */
ES_API es_status es_pair(const char *model, const char *a, const char *b, int64_t *out);
/* Canonical form of an expression; free the result with es_string_free. */
ES_API es_status es_canonical(const char *model, const char *expr, char **out);
ES_API void es_string_free(char *s);

/* "a0,a1,..,a7,a9,a10,eps" */
ES_API es_status es_parse_coefficients(const char *text, int64_t out[ES_NUM_COEFFICIENTS]);

ES_API es_status es_classify(const int64_t coeffs[ES_NUM_COEFFICIENTS], es_record **out);
ES_API es_status es_plan(const int64_t coeffs[ES_NUM_COEFFICIENTS], es_record **out);
ES_API const char *es_record_json(const es_record *r);
ES_API const char *es_record_tsv(const es_record *r);
/* 1 verified, 0 failed, -1 no plan. */
ES_API int es_record_verified(const es_record *r);
ES_API int64_t es_record_genus(const es_record *r);
ES_API void es_record_free(es_record *r);

ES_API es_status es_enumerate(int64_t genus_min,
                              int64_t genus_max,
                              es_filter filter,
                              int with_plans,
                              unsigned jobs,
                              es_record_list **out);
ES_API size_t es_record_list_size(const es_record_list *list);
ES_API const es_record *es_record_list_at(const es_record_list *list, size_t i);
ES_API void es_record_list_free(es_record_list *list);

ES_API es_status es_verify_range(int64_t genus_min, int64_t genus_max, unsigned jobs, es_report **out);
ES_API es_status es_selftest(es_report **out);
ES_API int64_t es_report_total(const es_report *r);
ES_API int64_t es_report_passed(const es_report *r);
ES_API int64_t es_report_failed(const es_report *r);
ES_API const char *es_report_json(const es_report *r);
ES_API void es_report_free(es_report *r);

#ifdef __cplusplus
}
#endif

#endif /* ENRIQUES_C_H */
