#ifndef REALRANK_REALRANK_H
#define REALRANK_REALRANK_H

/*
 * C interface to the realrank library.
 *
 * Every call returns an rr_status. On failure the message of the most recent
 * error on the calling thread is available from rr_last_error_message().
 * Strings returned through char** out-parameters are owned by the caller and
 * released with rr_string_free(). Handles are released with their *_free
 * function; passing NULL to a *_free function is a no-op.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define RR_API __attribute__((visibility("default")))
#else
#define RR_API
#endif

typedef enum rr_status {
  RR_OK = 0,
  RR_ERR_INVALID_ARGUMENT,
  RR_ERR_PARSE,
  RR_ERR_SHAPE_MISMATCH,
  RR_ERR_ARITY_TOO_SMALL,
  RR_ERR_INVALID_MODES,
  RR_ERR_INVALID_SELECTOR,
  RR_ERR_NOT_DIVISIBLE,
  RR_ERR_INCONSISTENT,
  RR_ERR_NOT_RANK_TWO,
  RR_ERR_ILL_CONDITIONED,
  RR_ERR_ZERO_TENSOR,
  RR_ERR_DEGREE_TOO_SMALL,
  RR_ERR_BAD_SHAPE,
  RR_ERR_NON_INTEGRAL,
  RR_ERR_DEGENERATE_QUERY,
  RR_ERR_RESULTANT_IDENTICALLY_ZERO,
  RR_ERR_REWRITE_FAILED,
  RR_ERR_INDEX_OUT_OF_RANGE,
  RR_ERR_DIMENSION_MISMATCH,
  RR_ERR_WRONG_DEGREE,
  RR_ERR_INVALID_CURVE,
  RR_ERR_INTERNAL
} rr_status;

typedef struct rr_tolerances {
  double rank;           /* relative singular value cutoff, default 1e-8 */
  double hyperdet;       /* relative zero band for hyperdeterminants, default 1e-10 */
  double tangential_gap; /* pencil root gap below which a tensor is tangential, default 1e-6 */
  double discriminant;   /* secant discriminant dead zone, default 1e-10 */
} rr_tolerances;

RR_API rr_tolerances rr_default_tolerances(void);
RR_API const char* rr_status_string(rr_status status);
RR_API const char* rr_last_error_message(void);
RR_API void rr_string_free(char* s);
RR_API const char* rr_version(void);
/* 0 restores the default (hardware concurrency). */
RR_API void rr_set_max_threads(unsigned n);

/* Tensors ---------------------------------------------------------------- */

typedef struct rr_tensor rr_tensor;

RR_API rr_status rr_tensor_create(const size_t* dims, size_t order, const double* entries, rr_tensor** out);
/* {"shape":[...],"entries":[...]} */
RR_API rr_status rr_tensor_from_json(const char* json, rr_tensor** out);
/* {"n":..,"d":..,"coeffs":{...}}: the symmetric tensor of a form. */
RR_API rr_status rr_tensor_from_symmetric_json(const char* json, rr_tensor** out);
RR_API rr_status rr_tensor_to_json(const rr_tensor* t, char** out);
RR_API size_t rr_tensor_order(const rr_tensor* t);
RR_API size_t rr_tensor_size(const rr_tensor* t);
RR_API rr_status rr_tensor_dims(const rr_tensor* t, size_t* dims, size_t capacity);
RR_API rr_status rr_tensor_entries(const rr_tensor* t, double* entries, size_t capacity);
RR_API void rr_tensor_free(rr_tensor* t);

/* Certificates ----------------------------------------------------------- */

typedef struct rr_certificate rr_certificate;

RR_API rr_status rr_certify(const rr_tensor* t, const rr_tolerances* tol, rr_certificate** out);
/* Symmetric forms: Hankel test for n = 2, reduced sub-blocks for n >= 3. */
RR_API rr_status rr_certify_symmetric_json(const char* json, const rr_tolerances* tol, rr_certificate** out);
/* Borrowed string, valid while the certificate lives. */
RR_API const char* rr_certificate_verdict(const rr_certificate* c);
/* 1 when the verdict places the tensor in the real border rank <= 2 locus. */
RR_API int rr_certificate_within_real_border_rank_two(const rr_certificate* c);
RR_API rr_status rr_certificate_to_json(const rr_certificate* c, char** out);
RR_API void rr_certificate_free(rr_certificate* c);

/* Decompositions --------------------------------------------------------- */

typedef struct rr_decomposition rr_decomposition;

RR_API rr_status rr_decompose(const rr_tensor* t, const rr_tolerances* tol, int check_certificate, rr_decomposition** out);
RR_API const char* rr_decomposition_kind(const rr_decomposition* d);
RR_API double rr_decomposition_residual(const rr_decomposition* d);
RR_API rr_status rr_decomposition_reconstruct(const rr_decomposition* d, rr_tensor** out);
RR_API rr_status rr_decomposition_to_json(const rr_decomposition* d, char** out);
RR_API void rr_decomposition_free(rr_decomposition* d);

RR_API rr_status rr_hyperdet_json(const rr_tensor* t, const rr_tolerances* tol, char** out);
RR_API rr_status rr_best_rank_one_json(const rr_tensor* t, size_t max_iters, double tol, char** out);

/* Polynomial lists ------------------------------------------------------- */

typedef struct rr_polylist rr_polylist;

/* Quadrics vanishing on the tangential variety of the degree-d Veronese of P^(n-1). */
RR_API rr_status rr_quadrics(unsigned n, unsigned d, rr_polylist** out);
/* Binary forms of degree d: curve, secant and tangential ideal generators. */
RR_API rr_status rr_ideal_report(unsigned d, rr_polylist** out);
RR_API size_t rr_polylist_size(const rr_polylist* l);
/* Borrowed strings, valid while the list lives; NULL when out of range. */
RR_API const char* rr_polylist_label(const rr_polylist* l, size_t i);
RR_API const char* rr_polylist_poly(const rr_polylist* l, size_t i);
RR_API const char* rr_polylist_group(const rr_polylist* l, size_t i);
RR_API rr_status rr_polylist_to_json(const rr_polylist* l, char** out);
RR_API void rr_polylist_free(rr_polylist* l);

RR_API rr_status rr_table1_json(char** out);

/* Binary forms ----------------------------------------------------------- */

/* Coordinates x_0..x_d as decimal or "num/den" strings; plain != 0 means the
 * inputs are monomial coefficients c_i = C(d,i) x_i. */
RR_API rr_status rr_binary_form_classify(const char* const* coords, size_t count, int plain, const rr_tolerances* tol,
                                         char** out_json);
/* d = 5 only; *result receives 1 or 0. */
RR_API rr_status rr_quintic_test(const char* const* coords, size_t count, int plain, int* result, char** out_json);

/* Space curves ----------------------------------------------------------- */

typedef struct rr_curve rr_curve;

/* {"d":4,"F":[[...],[...],[...],[...]]} */
RR_API rr_status rr_curve_from_json(const char* json, rr_curve** out);
RR_API rr_status rr_curve_to_json(const rr_curve* c, char** out);
RR_API rr_status rr_curve_plucker_json(const rr_curve* c, char** out);
/* u = (w,x,y,z) as decimal or "num/den" strings. */
RR_API rr_status rr_curve_classify_json(const rr_curve* c, const char* const* u, uint64_t seed, const rr_tolerances* tol,
                                        char** out);
/* Path JSON; samples = 0 keeps the value given there. */
RR_API rr_status rr_curve_scan_json(const rr_curve* c, const char* path_json, size_t samples, uint64_t seed,
                                    const rr_tolerances* tol, char** out);
RR_API void rr_curve_free(rr_curve* c);

#ifdef __cplusplus
}
#endif

#endif
