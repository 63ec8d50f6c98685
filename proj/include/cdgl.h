/* C interface to the cdgl engine: exact rational simplex models for
 * differential graded Lie algebras, verification suites, and loop-algebra
 * homology of finite simplicial sets.
 *
 * Every function that can fail returns a cdgl_status. On failure the
 * out-parameters are untouched and cdgl_last_error() returns a message for
 * the calling thread. Strings returned through char** out-parameters are
 * heap-allocated; release them with cdgl_string_free. Opaque handles are
 * released with their matching _free function; freeing NULL is a no-op. */
#ifndef CDGL_H
#define CDGL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cdgl_status {
  CDGL_OK = 0,
  CDGL_ERR_INVALID_ARGUMENT = 1, /* bad n, unknown suite, malformed JSON, ... */
  CDGL_ERR_INTERNAL = 2          /* an engine invariant failed */
} cdgl_status;

/* Message from the most recent failing call on this thread; empty string if
 * none. The pointer is owned by the library and stays valid until the next
 * failing call on the same thread. */
const char* cdgl_last_error(void);

/* ---- simplex models ------------------------------------------------- */

typedef struct cdgl_model cdgl_model;

/* Builds the level-n simplex model (n in 0..4) with brackets truncated at
 * the given word length (at least 1). Level 4 caps the truncation at 3 to
 * keep the computation tractable; the serialized output records the
 * truncation actually used. modified != 0 applies the degree-2 change of
 * generators at level 4 that removes the quadratic top term. On success
 * *out is owned by the caller. */
cdgl_status cdgl_model_build(int n, int truncation, int modified,
                             cdgl_model** out);

/* Serializes the model's presentation together with its solver trace. The
 * bytes are identical across runs for identical arguments. */
cdgl_status cdgl_model_to_json(const cdgl_model* m, char** out);

void cdgl_model_free(cdgl_model* m);

/* ---- verification suites -------------------------------------------- */

typedef struct cdgl_report cdgl_report;

/* Runs a named suite: lemma | ln-conditions | ez-aw | bch | phi | homotopy
 * | ce. truncation, cap, and seed are consumed only by the suites that use
 * them; model selects the homotopy suite target ("s2" or "wedge", NULL
 * means "s2"). Checks inside the report are ordered by check id. On
 * success *out is owned by the caller; a report whose checks fail is still
 * CDGL_OK. */
cdgl_status cdgl_suite_run(const char* suite, int truncation, int cap,
                           int seed, const char* model, cdgl_report** out);

/* 1 if every check passed, 0 otherwise. */
int cdgl_report_passed(const cdgl_report* r);

size_t cdgl_report_check_count(const cdgl_report* r);

/* Per-check accessors; index must be < cdgl_report_check_count. The
 * returned pointers are owned by the report. check_passed returns -1 and
 * the pointers NULL when the index is out of range; check_seconds returns
 * a negative value. */
const char* cdgl_report_check_id(const cdgl_report* r, size_t index);
int cdgl_report_check_passed(const cdgl_report* r, size_t index);
const char* cdgl_report_check_detail(const cdgl_report* r, size_t index);
double cdgl_report_check_seconds(const cdgl_report* r, size_t index);

/* Renders the report as text (json == 0) or JSON (json != 0). With
 * timings == 0 the bytes depend only on the suite arguments, so identical
 * flags and seed give identical output; timings != 0 appends wall-clock
 * seconds per check. */
cdgl_status cdgl_report_render(const cdgl_report* r, int json, int timings,
                               char** out);

void cdgl_report_free(cdgl_report* r);

/* ---- loop-algebra homology ------------------------------------------ */

/* Parses a finite simplicial set with a single vertex from JSON text,
 * forms its free loop Lie algebra truncated at the given word length, and
 * writes the homology dimensions in degrees 1..cap (cap at least 1) as a
 * JSON array. */
cdgl_status cdgl_lambda_homology(const char* json_text, int truncation,
                                 int cap, char** out);

void cdgl_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CDGL_H */
