#ifndef SNIPFORGE_H
#define SNIPFORGE_H

/* Generated by cbindgen from snipforge-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum {
  SF_STATUS_OK = 0,
  SF_STATUS_NULL_ARGUMENT = 1,
  SF_STATUS_INVALID_UTF8 = 2,
  /**
   * The unit (or text) did not parse; per-unit details are available via
   * `sf_unit_parse_error`.
   */
  SF_STATUS_PARSE_FAILED = 3,
  /**
   * Malformed request: bad edit JSON, stale locators, empty snippet.
   */
  SF_STATUS_BAD_INPUT = 4,
} SfStatus;

/**
 * An opaque parsed compilation unit.
 */
typedef struct SfUnit SfUnit;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse `text` into a unit handle. Always returns a handle on `SF_OK`;
 * parse failures are still `SF_OK` here and reported by
 * [`sf_unit_parse_ok`], so that failed units can be inspected.
 *
 * # Safety
 * `id` and `text` must be valid NUL-terminated strings; `out` must be a
 * valid pointer. The returned handle must be freed with [`sf_unit_free`].
 */
SfStatus sf_unit_parse(const char *id, const char *text, SfUnit **out);

/**
 * Release a unit handle. NULL is ignored.
 *
 * # Safety
 * `unit` must be a handle from [`sf_unit_parse`], not yet freed.
 */
void sf_unit_free(SfUnit *unit);

/**
 * Whether the unit parsed cleanly.
 *
 * # Safety
 * `unit` and `out` must be valid pointers.
 */
SfStatus sf_unit_parse_ok(const SfUnit *unit, bool *out);

/**
 * Parse error description (`reason at line:column`), or an empty string
 * for units that parsed.
 *
 * # Safety
 * `unit` and `out` must be valid pointers; free the string with
 * [`sf_string_free`].
 */
SfStatus sf_unit_parse_error(const SfUnit *unit, char **out);

/**
 * Number of method regions in the unit.
 *
 * # Safety
 * `unit` and `out` must be valid pointers.
 */
SfStatus sf_unit_method_count(const SfUnit *unit, uintptr_t *out);

/**
 * Number of statement nodes in the unit.
 *
 * # Safety
 * `unit` and `out` must be valid pointers.
 */
SfStatus sf_unit_statement_count(const SfUnit *unit, uintptr_t *out);

/**
 * Run the 21-rule performance catalog. `out` receives a JSON array of
 * `{"rule": ..., "line": ..., "message": ...}` records.
 *
 * # Safety
 * `unit` and `out` must be valid pointers; free the string with
 * [`sf_string_free`].
 */
SfStatus sf_unit_analyze_json(const SfUnit *unit, char **out);

/**
 * Debug dump of the statement tree (id, kind, line_range, children).
 *
 * # Safety
 * `unit` and `out` must be valid pointers; free the string with
 * [`sf_string_free`].
 */
SfStatus sf_unit_statement_tree_json(const SfUnit *unit, char **out);

/**
 * Apply one edit, given as JSON
 * `{"kind": "...", "target": {...}, "source": {...}|null}`, to the unit's
 * original text. `out` receives the patched text.
 *
 * # Safety
 * All pointers must be valid; free the string with [`sf_string_free`].
 */
SfStatus sf_unit_apply_edit_json(const SfUnit *unit, const char *edit_json, char **out);

/**
 * Check the validity proxy on a full unit text. `out` receives
 * `{"valid": bool, "reason": string|null}`.
 *
 * # Safety
 * `text` and `out` must be valid pointers; free the string with
 * [`sf_string_free`].
 */
SfStatus sf_check_validity(const char *text, char **out);

/**
 * Wrap a raw snippet into an analyzable compilation unit, applying the same
 * keyword check as corpus ingestion. `out` receives the wrapped text.
 *
 * # Safety
 * `id`, `raw`, and `out` must be valid pointers; free the string with
 * [`sf_string_free`].
 */
SfStatus sf_wrap_snippet(const char *id, const char *raw, char **out);

/**
 * Release a string returned by any entry point. NULL is ignored.
 *
 * # Safety
 * `s` must be a string returned by this library, not yet freed.
 */
void sf_string_free(char *s);

/**
 * Library version as a static string; do not free.
 */
const char *sf_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SNIPFORGE_H */
