#ifndef SCX_H
#define SCX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. `Ok` is zero.
 */
typedef enum ScxStatus {
  SCX_STATUS_OK = 0,
  SCX_STATUS_NULL_POINTER = 1,
  SCX_STATUS_INVALID_UTF8 = 2,
  SCX_STATUS_PARSE = 3,
  SCX_STATUS_NOT_PURE = 4,
  SCX_STATUS_INVALID_ARGUMENT = 5,
  SCX_STATUS_UNDEFINED = 6,
  SCX_STATUS_BUFFER_TOO_SMALL = 7,
  SCX_STATUS_PANIC = 8,
} ScxStatus;

/**
 * An immutable simplicial complex.
 */
typedef struct ScxComplex ScxComplex;

typedef struct ScxBannerClass {
  bool flag;
  bool strongly_banner;
  bool banner;
} ScxBannerClass;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or null. Valid until
 * the next call into the library on the same thread.
 */
const char *scx_last_error(void);

/**
 * Parses facet-list text (one facet per line, `#` comments).
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum ScxStatus scx_complex_parse(const char *text, struct ScxComplex **out);

/**
 * Builds a complex from a generator spec such as `"susp:cyclic(7,4)"`.
 *
 * # Safety
 * `spec` must be a nul-terminated string; `out` must be writable.
 */
enum ScxStatus scx_complex_generate(const char *spec, struct ScxComplex **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `c` must come from this library and not have been freed.
 */
void scx_complex_free(struct ScxComplex *c);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void scx_string_free(char *s);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum ScxStatus scx_complex_dim(const struct ScxComplex *c, size_t *out);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum ScxStatus scx_complex_num_vertices(const struct ScxComplex *c, size_t *out);

/**
 * Writes `(f₋₁, f₀, …, f_d)` into `buf`. `len` always receives the number of
 * entries; if it exceeds `cap` nothing is written and
 * [`ScxStatus::BufferTooSmall`] is returned.
 *
 * # Safety
 * `c` must be a live handle; `buf` must hold `cap` entries (may be null
 * when `cap` is 0); `len` must be writable.
 */
enum ScxStatus scx_complex_f_vector(const struct ScxComplex *c,
                                    size_t *buf,
                                    size_t cap,
                                    size_t *len);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum ScxStatus scx_classify(const struct ScxComplex *c, struct ScxBannerClass *out);

/**
 * [`ScxStatus::Undefined`] when no `j < d` qualifies.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum ScxStatus scx_banner_number(const struct ScxComplex *c, size_t *out);

/**
 * Vertex connectivity of the 1-skeleton.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum ScxStatus scx_connectivity(const struct ScxComplex *c, size_t *out);

/**
 * The `scx-report/1` JSON report. Free the result with [`scx_string_free`].
 *
 * # Safety
 * `c` must be a live handle; `name` a nul-terminated string; `out` writable.
 */
enum ScxStatus scx_analyze_json(const struct ScxComplex *c, const char *name, char **out);

/**
 * Facet-list text of a complex. Free the result with [`scx_string_free`].
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum ScxStatus scx_complex_to_text(const struct ScxComplex *c, char **out);

/**
 * Number of entries in the default corpus.
 */
size_t scx_catalog_len(void);

/**
 * The generator spec of corpus entry `i`; pass it to
 * [`scx_complex_generate`]. Free the result with [`scx_string_free`].
 *
 * # Safety
 * `out` must be writable.
 */
enum ScxStatus scx_catalog_spec(size_t i, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCX_H */
