/* C interface for the regprod library. */

#ifndef REGPROD_H
#define REGPROD_H

/* Generated by cbindgen from regprod-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every API call.
typedef enum RpStatus {
  // success
  RP_OK = 0,
  // a required pointer argument was null
  RP_NULL_ARGUMENT = 1,
  // malformed or out-of-contract input
  RP_INVALID_INPUT = 2,
  // a validation check failed (Weil bound, leading coefficient, ...)
  RP_VALIDATION_FAILED = 3,
  // a precision or under-resolution fault
  RP_PRECISION_FAULT = 4,
  // enumeration budget exceeded
  RP_BUDGET_EXCEEDED = 5,
} RpStatus;

// Opaque result handle.
typedef struct RpReport RpReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Regularized product over all rational primes (4π²).
//
// # Safety
// `out` must point to writable storage for one report pointer.
enum RpStatus rp_all_primes(struct RpReport **out);

// Regularized product over primes p ≡ a (mod m).
//
// # Safety
// `out` must point to writable storage for one report pointer.
enum RpStatus rp_progression(uint64_t m, uint64_t a, struct RpReport **out);

// Regularized product of prime-ideal norms for a bundled field preset:
// "Q", "Q(i)", "Q(sqrt5)", or "Q(sqrt-3)".
//
// # Safety
// `preset` must be a valid NUL-terminated string; `out` must point to
// writable storage for one report pointer.
enum RpStatus rp_number_field_preset(const char *preset, struct RpReport **out);

// Regularized product over monic irreducibles of F_q[T]: exponent (3q−1)/(q−1).
//
// # Safety
// `out` must point to writable storage for one report pointer.
enum RpStatus rp_rational_function_field(uint64_t q, struct RpReport **out);

// Regularized product of closed-point norms of a plane projective curve,
// counted from the polynomial source (same mini-language as the CLI).
//
// # Safety
// `poly` must be a valid NUL-terminated string; `out` must point to writable
// storage for one report pointer.
enum RpStatus rp_curve_plane(const char *poly,
                             uint64_t q,
                             uint32_t genus,
                             double weil_tol,
                             struct RpReport **out);

// Regularized product for an explicitly supplied zeta numerator L(t),
// coefficients constant-term first (L(0) = 1, even degree 2g).
//
// # Safety
// `coefficients` must point to `len` readable values; `out` must point to
// writable storage for one report pointer.
enum RpStatus rp_curve_from_lpoly(const int64_t *coefficients,
                                  size_t len,
                                  uint64_t q,
                                  double weil_tol,
                                  struct RpReport **out);

// Value of the regularized product.
//
// # Safety
// `report` must be a live handle from this library, or null.
double rp_report_value(const struct RpReport *report);

// Exponent of the regularized product as a float.
//
// # Safety
// `report` must be a live handle from this library, or null.
double rp_report_exponent(const struct RpReport *report);

// Exact rational exponent, when one exists: returns 1 and fills the
// numerator and denominator, or returns 0 for transcendental exponents.
//
// # Safety
// `report` must be a live handle or null; the out-parameters must be
// writable or null.
int rp_report_exact_exponent(const struct RpReport *report,
                             int64_t *numerator,
                             int64_t *denominator);

// Weil status string ("validated" / "violated: ..."), or null when the
// report carries no Weil check. Free with rp_string_free.
//
// # Safety
// `report` must be a live handle from this library, or null.
char *rp_report_weil(const struct RpReport *report);

// Full JSON report. Free with rp_string_free.
//
// # Safety
// `report` must be a live handle from this library, or null.
char *rp_report_json(const struct RpReport *report);

// Release a report handle.
//
// # Safety
// `report` must be a handle returned by this library (freed at most once),
// or null.
void rp_report_free(struct RpReport *report);

// Release a string returned by this library.
//
// # Safety
// `s` must be a pointer previously returned by rp_report_json or
// rp_report_weil, or null.
void rp_string_free(char *s);

// Message of the most recent error on this thread, or null. The pointer is
// valid until the next failing call on the same thread; do not free it.
const char *rp_last_error(void);

// Library version packed as major·10⁴ + minor·10² + patch.
uint32_t rp_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* REGPROD_H */
