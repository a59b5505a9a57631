/* w123: counting 123-avoiding words with r copies of each letter.
 *
 * Every function that can fail returns a w123_status. On failure the
 * message is available from w123_last_error() on the same thread until the
 * next call into the library. Strings returned through char** are owned by
 * the caller and released with w123_string_free(). Handles are opaque and
 * released with their matching *_free function; passing NULL to a free
 * function is a no-op.
 */
#ifndef W123_W123_H
#define W123_W123_H

#include <stddef.h>

#if defined(W123_BUILDING_LIBRARY)
#define W123_API __attribute__((visibility("default")))
#else
#define W123_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum w123_status {
  W123_OK = 0,
  W123_ERR_INVALID_ARGUMENT = 1,
  W123_ERR_CAP_EXCEEDED = 2,
  W123_ERR_TIMEOUT = 3,
  W123_ERR_INSUFFICIENT_TERMS = 4,
  W123_ERR_NOT_AVAILABLE = 5,
  W123_ERR_SINGULAR_RECURRENCE = 6,
  W123_ERR_NON_INTEGRAL = 7,
  W123_ERR_NON_DIVISIBLE = 8,
  W123_ERR_DEGENERATE = 9,
  W123_ERR_DEFECT = 10,
  W123_ERR_IO = 11,
  W123_ERR_PARSE = 12,
  W123_ERR_INTERNAL = 13
} w123_status;

typedef enum w123_method {
  W123_METHOD_BRUTE = 0,
  W123_METHOD_RECURRENCE = 1,
  W123_METHOD_SCHEME = 2,
  W123_METHOD_LINEAR_REC = 3
} w123_method;

typedef enum w123_format { W123_FORMAT_TEXT = 0, W123_FORMAT_JSON = 1, W123_FORMAT_BFILE = 2 } w123_format;

typedef enum w123_backend { W123_BACKEND_RESULTANTS = 0, W123_BACKEND_BUCHBERGER = 1 } w123_backend;

typedef enum w123_verdict {
  W123_VERDICT_NONE = 0, /* no shipped equation for this r */
  W123_VERDICT_EQUAL = 1,
  W123_VERDICT_PROPER_MULTIPLE = 2,
  W123_VERDICT_MISMATCH = 3
} w123_verdict;

typedef struct w123_context w123_context;
typedef struct w123_sequence w123_sequence;
typedef struct w123_scheme w123_scheme;
typedef struct w123_equation w123_equation;
typedef struct w123_recurrence w123_recurrence;
typedef struct w123_report w123_report;

W123_API const char* w123_version(void);
W123_API const char* w123_last_error(void);
W123_API const char* w123_status_name(w123_status status);
W123_API void w123_string_free(char* s);

/* cache_dir NULL selects the default directory ($W123_CACHE_DIR, then the
 * XDG cache directory); use_cache 0 disables caching altogether. */
W123_API w123_status w123_context_new(const char* cache_dir, int use_cache, w123_context** out);
W123_API w123_status w123_context_set_brute_cap(w123_context* ctx, size_t cap);
W123_API void w123_context_free(w123_context* ctx);

/* Number of words with counts[i] copies of letter i+1 avoiding the pattern
 * ("123", "132", "231", ...), as a decimal string. Only W123_METHOD_BRUTE
 * and W123_METHOD_RECURRENCE apply; the latter counts 123-avoiders. */
W123_API w123_status w123_count_avoiders(const w123_context* ctx, const unsigned* counts, size_t len,
                                         const char* pattern, w123_method method, char** out);

/* w_r(0..nmax). */
W123_API w123_status w123_count(const w123_context* ctx, unsigned r, unsigned nmax, w123_method method,
                                w123_sequence** out);
W123_API size_t w123_sequence_length(const w123_sequence* seq);
W123_API w123_status w123_sequence_term(const w123_sequence* seq, size_t n, char** out);
W123_API w123_status w123_sequence_render(const w123_sequence* seq, w123_format format, char** out);
W123_API void w123_sequence_free(w123_sequence* seq);

W123_API w123_status w123_scheme_build(unsigned r, w123_scheme** out);
W123_API size_t w123_scheme_equation_count(const w123_scheme* scheme);
W123_API w123_status w123_scheme_render(const w123_scheme* scheme, w123_format format, char** out);
W123_API void w123_scheme_free(w123_scheme* scheme);

/* timeout_seconds <= 0 means unbounded. */
W123_API w123_status w123_eliminate(const w123_context* ctx, unsigned r, w123_backend backend,
                                    double timeout_seconds, w123_equation** out);
W123_API w123_verdict w123_equation_verdict(const w123_equation* eq);
/* 1 when the equation annihilates the series (and so does the shipped one,
 * if any) and the verdict is not a mismatch. */
W123_API int w123_equation_passed(const w123_equation* eq);
W123_API w123_status w123_equation_render(const w123_equation* eq, w123_format format, char** out);
W123_API void w123_equation_free(w123_equation* eq);

/* A search that finds nothing still succeeds; check w123_recurrence_found. */
W123_API w123_status w123_guess(const w123_context* ctx, unsigned r, unsigned max_order, unsigned max_degree,
                                w123_recurrence** out);
W123_API int w123_recurrence_found(const w123_recurrence* rec);
W123_API unsigned w123_recurrence_order(const w123_recurrence* rec);
W123_API unsigned w123_recurrence_degree(const w123_recurrence* rec);
/* -1 when there is no shipped recurrence or nothing was found, else 0 or 1. */
W123_API int w123_recurrence_matches_published(const w123_recurrence* rec);
W123_API w123_status w123_recurrence_render(const w123_recurrence* rec, w123_format format, char** out);
W123_API void w123_recurrence_free(w123_recurrence* rec);

W123_API w123_status w123_asymptotics(const w123_context* ctx, unsigned r, unsigned nmax, double tolerance,
                                      w123_report** out);
W123_API int w123_report_passed(const w123_report* rep);
W123_API w123_status w123_report_render(const w123_report* rep, w123_format format, char** out);
W123_API void w123_report_free(w123_report* rep);

#ifdef __cplusplus
}
#endif

#endif /* W123_W123_H */
