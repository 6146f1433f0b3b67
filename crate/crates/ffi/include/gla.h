#ifndef GLA_H
#define GLA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes of every exported function.
typedef enum GlaStatus {
  GLA_STATUS_OK = 0,
  GLA_STATUS_NULL_POINTER = 1,
  GLA_STATUS_INVALID_UTF8 = 2,
  // Malformed document or unknown registry name.
  GLA_STATUS_PARSE = 3,
  // The input violates a mathematical precondition.
  GLA_STATUS_INVALID = 4,
  // A caller-supplied buffer is too small; the required length is still reported.
  GLA_STATUS_BUFFER_TOO_SMALL = 5,
  // Internal inconsistency or panic.
  GLA_STATUS_INTERNAL = 6,
} GlaStatus;

// An algebra together with the metric it was loaded with (identity if none).
typedef struct GlaAlgebra GlaAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failure on this thread; valid until the next call.
const char *gla_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void gla_string_free(char *s);

// Releases an algebra handle. Null is ignored.
//
// # Safety
// `h` must come from this library and not have been freed.
void gla_algebra_free(struct GlaAlgebra *h);

// Loads a built-in algebra by name.
//
// # Safety
// `name` must be a NUL-terminated string and `out` a valid pointer.
enum GlaStatus gla_algebra_from_registry(const char *name, struct GlaAlgebra **out);

// Parses an algebra document (JSON); its metric, if any, is attached to the handle.
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer.
enum GlaStatus gla_algebra_from_json(const char *json, struct GlaAlgebra **out);

// Serializes the algebra and its metric as a document.
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum GlaStatus gla_algebra_to_json(const struct GlaAlgebra *h, char **out);

// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum GlaStatus gla_algebra_dim(const struct GlaAlgebra *h, size_t *out);

// Checks the graded Lie algebra axioms; `fundamental` also requires a fundamental gradation.
//
// # Safety
// `h` must be a live handle and `valid` a valid pointer.
enum GlaStatus gla_algebra_validate(const struct GlaAlgebra *h, bool fundamental, bool *valid);

// Builds the cotangent algebra `t*(g)` (identity metric attached).
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum GlaStatus gla_algebra_cotangent(const struct GlaAlgebra *h, struct GlaAlgebra **out);

// `dim H^k_l(h₋, h)` for the handle's metric; harmonic and `ker/im` counts must agree.
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum GlaStatus gla_cohomology_dim(const struct GlaAlgebra *h, size_t k, int32_t l, size_t *out);

// Whether the handle's metric is admissible.
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum GlaStatus gla_check_admissible(const struct GlaAlgebra *h, bool *out);

// Tanaka prolongation level dimensions. Writes up to `cap` entries into `dims` and the
// number of levels into `len`; `BufferTooSmall` if `cap < *len`.
//
// # Safety
// `h` must be a live handle, `len` valid, and `dims` valid for `cap` writes (may be null
// when `cap` is 0).
enum GlaStatus gla_prolongation_dims(const struct GlaAlgebra *h,
                                     int32_t max_k,
                                     size_t *dims,
                                     size_t cap,
                                     size_t *len,
                                     bool *finite_type);

// Closed-form against general first cohomology of `t*(g)`, as JSON. `agree` receives the
// overall agreement flag.
//
// # Safety
// `h` must be a live handle and `out`, `agree` valid pointers.
enum GlaStatus gla_ctg_report_json(const struct GlaAlgebra *h, char **out, bool *agree);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GLA_H */
