#ifndef CRNMS_H
#define CRNMS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CrnmsStatus {
  CRNMS_STATUS_OK = 0,
  CRNMS_STATUS_NULL_ARGUMENT = 1,
  CRNMS_STATUS_INVALID_UTF8 = 2,
  CRNMS_STATUS_PARSE_ERROR = 3,
  CRNMS_STATUS_OUT_OF_SCOPE = 4,
  CRNMS_STATUS_WITNESS_FAILED = 5,
  CRNMS_STATUS_INVALID_ARGUMENT = 6,
  CRNMS_STATUS_PANIC = 7,
} CrnmsStatus;

typedef enum CrnmsCapacityKind {
  CRNMS_CAPACITY_KIND_EXACT = 0,
  CRNMS_CAPACITY_KIND_AT_LEAST = 1,
  CRNMS_CAPACITY_KIND_INFINITE = 2,
  CRNMS_CAPACITY_KIND_UNKNOWN = 3,
} CrnmsCapacityKind;

typedef enum CrnmsCapacityWhich {
  CRNMS_CAPACITY_WHICH_POSITIVE = 0,
  CRNMS_CAPACITY_WHICH_NONDEGENERATE = 1,
  CRNMS_CAPACITY_WHICH_STABLE = 2,
} CrnmsCapacityWhich;

/*
 Opaque parsed network.
 */
typedef struct CrnmsNetwork CrnmsNetwork;

/*
 Opaque classification result.
 */
typedef struct CrnmsVerdict CrnmsVerdict;

/*
 A capacity; `value` is meaningful for `Exact` and `AtLeast`.
 */
typedef struct CrnmsCapacity {
  enum CrnmsCapacityKind kind;
  uint64_t value;
} CrnmsCapacity;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Parses a network. With `semicolons` nonzero, reactions are separated by
 `;`; otherwise one reaction per line.

 # Safety
 `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum CrnmsStatus crnms_network_parse(const char *text,
                                     int32_t semicolons,
                                     struct CrnmsNetwork **out);

/*
 # Safety
 `net` must come from `crnms_network_parse` and not be used afterwards.
 */
void crnms_network_free(struct CrnmsNetwork *net);

/*
 # Safety
 `net` must be a live handle or null.
 */
uintptr_t crnms_network_num_species(const struct CrnmsNetwork *net);

/*
 # Safety
 `net` must be a live handle or null.
 */
uintptr_t crnms_network_num_reactions(const struct CrnmsNetwork *net);

/*
 Classifies a network. Out-of-scope networks still produce a verdict and
 return `Ok`; check `crnms_verdict_out_of_scope`.

 # Safety
 `net` must be a live handle and `out` a valid pointer.
 */
enum CrnmsStatus crnms_classify(const struct CrnmsNetwork *net, struct CrnmsVerdict **out);

/*
 # Safety
 `v` must come from `crnms_classify` and not be used afterwards.
 */
void crnms_verdict_free(struct CrnmsVerdict *v);

/*
 `which` is a `CrnmsCapacityWhich` value.

 # Safety
 `v` must be a live handle and `out` a valid pointer.
 */
enum CrnmsStatus crnms_verdict_capacity(const struct CrnmsVerdict *v,
                                        int32_t which,
                                        struct CrnmsCapacity *out);

/*
 1 if multistationary, 0 if not, -1 if undecided or `v` is null.

 # Safety
 `v` must be a live handle or null.
 */
int32_t crnms_verdict_multistationary(const struct CrnmsVerdict *v);

/*
 # Safety
 `v` must be a live handle or null.
 */
int32_t crnms_verdict_nondegenerately_multistationary(const struct CrnmsVerdict *v);

/*
 # Safety
 `v` must be a live handle or null.
 */
int32_t crnms_verdict_multistable(const struct CrnmsVerdict *v);

/*
 1 when the network is outside the decided shapes, 0 otherwise, -1 for null.

 # Safety
 `v` must be a live handle or null.
 */
int32_t crnms_verdict_out_of_scope(const struct CrnmsVerdict *v);

/*
 Verdict as JSON.

 # Safety
 `v` must be a live handle and `out` a valid pointer.
 */
enum CrnmsStatus crnms_verdict_json(const struct CrnmsVerdict *v, char **out);

/*
 Builds and certifies a witness with `count` nondegenerate steady states,
 or the classifier's lower bound when `count` is negative. Writes the
 witness JSON with a `certification` field.

 # Safety
 `net` must be a live handle and `out` a valid pointer.
 */
enum CrnmsStatus crnms_witness_json(const struct CrnmsNetwork *net, int64_t count, char **out);

/*
 Message of the last failed call on this thread, or null. Valid until the
 next call into this library on the same thread.
 */
const char *crnms_last_error(void);

/*
 # Safety
 `s` must come from this library and not be used afterwards.
 */
void crnms_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CRNMS_H */
