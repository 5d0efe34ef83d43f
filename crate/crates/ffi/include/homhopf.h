#ifndef HOMHOPF_H
#define HOMHOPF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum HhStatus {
  HH_STATUS_OK = 0,
  // The structure was built or checked, and an axiom failed.
  HH_STATUS_AXIOM_FAILED = 1,
  HH_STATUS_NULL_ARGUMENT = 2,
  HH_STATUS_INVALID_UTF8 = 3,
  HH_STATUS_PARSE = 4,
  HH_STATUS_VALIDATION = 5,
  HH_STATUS_UNKNOWN_STRUCTURE = 6,
  HH_STATUS_NOT_BIJECTIVE = 7,
  HH_STATUS_DIMENSION_TOO_LARGE = 8,
  HH_STATUS_IO = 9,
  HH_STATUS_INTERNAL = 10,
} HhStatus;

// A Drinfeld double together with its R-matrix.
typedef struct HhDouble HhDouble;

// A Hom-Hopf algebra.
typedef struct HhHopf HhHopf;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message of the last failed call on this thread, or null. The pointer
// stays valid until the next call into the library on this thread.
const char *hh_last_error(void);

// Releases a string returned by the library.
//
// # Safety
// `s` is null or a string returned by this library and not yet freed.
void hh_string_free(char *s);

// Looks up a built-in structure by name.
//
// # Safety
// `name` is a nul-terminated string; `out` is a valid pointer.
enum HhStatus hh_hopf_from_catalog(const char *name, struct HhHopf **out);

// Parses a structure document and builds the Hom-Hopf algebra called
// `name`, or the last structure when `name` is null.
//
// # Safety
// `text` is a nul-terminated string; `name` is null or nul-terminated;
// `out` is a valid pointer.
enum HhStatus hh_hopf_from_json(const char *text, const char *name, struct HhHopf **out);

// # Safety
// `h` is null or a handle from this library not yet freed.
void hh_hopf_free(struct HhHopf *h);

// Dimension of the carrier, or 0 for a null handle.
//
// # Safety
// `h` is null or a live handle.
size_t hh_hopf_dim(const struct HhHopf *h);

// Runs the full Hom-Hopf suite. `HH_STATUS_OK` when every identity holds,
// `HH_STATUS_AXIOM_FAILED` otherwise. The report is written to
// `*report_json` when that pointer is non-null.
//
// # Safety
// `h` is a live handle; `report_json` is null or a valid pointer.
enum HhStatus hh_hopf_check(const struct HhHopf *h, char **report_json);

// Serializes the structure under `name` into the structure-file format.
//
// # Safety
// `h` is a live handle; `name` is nul-terminated; `out` is a valid pointer.
enum HhStatus hh_hopf_to_json(const struct HhHopf *h, const char *name, char **out);

// Builds the Drinfeld double. `limit` bounds the base dimension; 0 selects
// the default.
//
// # Safety
// `h` is a live handle; `out` is a valid pointer.
enum HhStatus hh_double_new(const struct HhHopf *h, size_t limit, struct HhDouble **out);

// # Safety
// `d` is null or a handle from this library not yet freed.
void hh_double_free(struct HhDouble *d);

// Dimension of the double, or 0 for a null handle.
//
// # Safety
// `d` is null or a live handle.
size_t hh_double_dim(const struct HhDouble *d);

// Hom-Hopf and quasitriangular checks on the double.
//
// # Safety
// `d` is a live handle; `report_json` is null or a valid pointer.
enum HhStatus hh_double_verify(const struct HhDouble *d, char **report_json);

// The double and its R-matrix in the structure-file format.
//
// # Safety
// `d` is a live handle; `out` is a valid pointer.
enum HhStatus hh_double_to_json(const struct HhDouble *d, char **out);

// The double as a standalone Hom-Hopf handle.
//
// # Safety
// `d` is a live handle; `out` is a valid pointer.
enum HhStatus hh_double_hopf(const struct HhDouble *d, struct HhHopf **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOMHOPF_H */
