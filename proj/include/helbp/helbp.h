#ifndef HELBP_H
#define HELBP_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(HELBP_BUILDING)
#define HELBP_API __attribute__((visibility("default")))
#else
#define HELBP_API
#endif

/* Status codes. Every function except the free/name helpers returns one;
   on failure helbp_last_error() describes it (thread-local, valid until the
   next call on the same thread). */
typedef enum helbp_status {
  HELBP_OK = 0,
  HELBP_INVALID_ARGUMENT = 1,
  HELBP_INVALID_ORDER = 2,
  HELBP_POLE_IN_BOTTOM_PARAMETER = 3,
  HELBP_DIVISION_BY_ZERO_CONSTANT_TERM = 4,
  HELBP_DIVISION_BY_ZERO = 5,
  HELBP_MODULUS_OUT_OF_RANGE = 6,
  HELBP_ARGUMENT_OUT_OF_RANGE = 7,
  HELBP_ANGLE_OUT_OF_RANGE = 8,
  HELBP_DIVERGENT_MODULUS = 9,
  HELBP_DEGENERATE_FAMILY = 10,
  HELBP_ZERO_AT_ORIGIN = 11,
  HELBP_NOT_AN_LBP = 12,
  HELBP_COEFFICIENT_OUT_OF_RANGE = 13,
  HELBP_ZERO_AT_TRANSFORM_POINT = 14,
  HELBP_MOMENT_MAP_SINGULAR = 15,
  HELBP_DEGENERATE_PHI_RATIO = 16,
  HELBP_CHI_EQUALS_D0 = 17,
  HELBP_DEGENERATE_TRANSFORMED_FAMILY = 18,
  HELBP_NOT_PALINDROMIC = 19,
  HELBP_SINGULAR_DENOMINATOR = 20,
  HELBP_DOMAIN_ERROR = 21,
  HELBP_ZERO_DENOMINATOR = 22,
  HELBP_GRID_TOO_COARSE = 23,
  HELBP_PARSE_ERROR = 24,
  HELBP_INTERNAL_ERROR = 99
} helbp_status;

typedef enum helbp_format { HELBP_FORMAT_JSON = 0, HELBP_FORMAT_CSV = 1 } helbp_format;

/* Opaque coefficient family. */
typedef struct helbp_family helbp_family;

HELBP_API const char* helbp_status_name(helbp_status status);
HELBP_API const char* helbp_last_error(void);

/* Strings returned through char** out parameters are owned by the caller. */
HELBP_API void helbp_string_free(char* text);

/* selector: "hermite", "associated:j" or "stieltjes-carlitz:p2" (p2 as "num/den"). */
HELBP_API helbp_status helbp_family_create(const char* selector, helbp_family** out);
HELBP_API void helbp_family_destroy(helbp_family* family);
HELBP_API helbp_status helbp_family_name(const helbp_family* family, char** out);

/* b_n (n >= 1) and d_n (n >= 0) as "num/den". */
HELBP_API helbp_status helbp_family_b(const helbp_family* family, int n, char** out);
HELBP_API helbp_status helbp_family_d(const helbp_family* family, int n, char** out);

/* Monic P_n as a JSON array of "num/den", ascending degree. */
HELBP_API helbp_status helbp_family_poly(const helbp_family* family, int n, char** out);

/* transform: none | reciprocal | partner | christoffel | christoffel0 |
   geronimus | sc-check. mu and chi are "num/den" strings; NULL takes 1.
   sc-check needs a Stieltjes-Carlitz family. */
HELBP_API helbp_status helbp_coeffs(const helbp_family* family, int n_max, const char* transform, const char* mu,
                                    const char* chi, helbp_format format, char** out);

/* Moments c_{-(n_max-1)}..c_{n_max}; Hermite and associated families only. */
HELBP_API helbp_status helbp_moments(const helbp_family* family, int n_max, helbp_format format, char** out);

/* kind: rho | rho-tilde | w | w-theta. */
HELBP_API helbp_status helbp_weights(const char* kind, int points, helbp_format format, char** out);

/* Continued-fraction convergents 1..n_max at rational z. */
HELBP_API helbp_status helbp_cfrac(const char* z, int n_max, helbp_format format, char** out);

/* Reflection parameters, u_n and S_n for associated index j. */
HELBP_API helbp_status helbp_szego(int j, int n_max, helbp_format format, char** out);

/* suite: exactnum | elliptic | lbp | transforms | szego | verify | all.
   *all_pass is set to 1 when every check passed, else 0. */
HELBP_API helbp_status helbp_verify(const char* suite, int quad_nodes, double tol, helbp_format format, char** out,
                                    int* all_pass);

/* kind: szego | rho | geronimus | interval. chi is used by geronimus only. */
HELBP_API helbp_status helbp_gram(const char* kind, int n_max, int nodes, double tol, const char* chi,
                                  helbp_format format, char** out, int* pass);

#ifdef __cplusplus
}
#endif

#endif
