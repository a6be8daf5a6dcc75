#ifndef LNDKIT_H
#define LNDKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/*
 * Exact symbolic toolkit for polynomial derivations of Q[x,y]:
 * derivation calculus, locally nilpotent derivation certificates,
 * coordinate rectification, bracket closures, and triangularization.
 *
 * All objects are opaque handles. Every function that can fail returns
 * a status; on failure the handle/string outputs are left untouched and
 * a thread-local message is available via lndkit_last_error_message().
 * Strings handed out by the library must be released with
 * lndkit_string_free().
 */

typedef enum lndkit_status {
    LNDKIT_OK = 0,
    LNDKIT_ERR_ZERO_POLYNOMIAL,
    LNDKIT_ERR_NOT_IN_SUBALGEBRA,
    LNDKIT_ERR_NONZERO_DIVERGENCE,
    LNDKIT_ERR_NO_KERNEL_ELEMENT_WITHIN_BOUND,
    LNDKIT_ERR_NOT_LOCALLY_NILPOTENT,
    LNDKIT_ERR_CAP_EXCEEDED,
    LNDKIT_ERR_JACOBIAN_NOT_CONSTANT,
    LNDKIT_ERR_NOT_COORDINATE,
    LNDKIT_ERR_CONSTANT_INPUT,
    LNDKIT_ERR_RANK_DEFICIENT,
    LNDKIT_ERR_NOT_A_SQUARE,
    LNDKIT_ERR_DEGENERATE,
    LNDKIT_ERR_NOT_CLOSED,
    LNDKIT_ERR_PARSE,
    LNDKIT_ERR_INVALID_ARGUMENT,
    LNDKIT_ERR_INTERNAL,
} lndkit_status;

const char* lndkit_status_name(lndkit_status s);

/* message for the most recent failing call on this thread */
const char* lndkit_last_error_message(void);
/* byte offset of the most recent parse failure on this thread, or -1 */
long lndkit_last_error_position(void);

void lndkit_string_free(char* s);

typedef struct lndkit_poly lndkit_poly;
typedef struct lndkit_derivation lndkit_derivation;
typedef struct lndkit_aut lndkit_aut;

/* ---- polynomials -------------------------------------------------- */

/* grammar: sums of terms, '*' products, '^' powers, rationals as p/q */
lndkit_status lndkit_poly_parse(const char* text, lndkit_poly** out);
void lndkit_poly_free(lndkit_poly* p);
lndkit_status lndkit_poly_str(const lndkit_poly* p, char** out);

/* ---- derivations p*d/dx + q*d/dy ---------------------------------- */

lndkit_status lndkit_derivation_new(const lndkit_poly* p, const lndkit_poly* q,
                                    lndkit_derivation** out);
void lndkit_derivation_free(lndkit_derivation* d);
/* the two coefficient polynomials, printed */
lndkit_status lndkit_derivation_parts(const lndkit_derivation* d, char** p_out, char** q_out);

lndkit_status lndkit_bracket(const lndkit_derivation* a, const lndkit_derivation* b,
                             lndkit_derivation** out);
lndkit_status lndkit_apply(const lndkit_derivation* d, const lndkit_poly* h, lndkit_poly** out);
lndkit_status lndkit_divergence(const lndkit_derivation* d, lndkit_poly** out);
/* the derivation (-df/dy) d/dx + (df/dx) d/dy */
lndkit_status lndkit_jacobian_derivation(const lndkit_poly* f, lndkit_derivation** out);

/* ---- locally nilpotent derivations -------------------------------- */

/*
 * Verdict as JSON. is_lnd_out gets 1 or 0; a negative verdict is data,
 * not an error. Positive verdicts carry the certificate D = f'(a) D_a
 * plus nilpotency indices; negative ones carry a reason and witness.
 */
lndkit_status lndkit_is_lnd(const lndkit_derivation* d, char** json_out, int* is_lnd_out);

/* minimal-degree kernel generator; degree_bound <= 0 uses the default */
lndkit_status lndkit_kernel_generator(const lndkit_derivation* d, int degree_bound,
                                      char** poly_out);

/* certificate JSON {"a", "f", "mate"}; fails with
 * LNDKIT_ERR_NOT_LOCALLY_NILPOTENT on a negative verdict */
lndkit_status lndkit_rentschler(const lndkit_derivation* d, char** json_out);

/* ---- automorphisms (chains of elementary maps) -------------------- */

lndkit_status lndkit_aut_from_json(const char* text, lndkit_aut** out);
lndkit_status lndkit_aut_to_json(const lndkit_aut* a, char** out);
void lndkit_aut_free(lndkit_aut* a);
lndkit_status lndkit_aut_apply(const lndkit_aut* a, const lndkit_poly* h, lndkit_poly** out);
lndkit_status lndkit_aut_conjugate(const lndkit_aut* a, const lndkit_derivation* d,
                                   lndkit_derivation** out);
lndkit_status lndkit_aut_inverse(const lndkit_aut* a, lndkit_aut** out);
/* apply `first`, then `second` */
lndkit_status lndkit_aut_compose(const lndkit_aut* first, const lndkit_aut* second,
                                 lndkit_aut** out);

/*
 * Coordinate test for a polynomial. is_coordinate_out gets 1 or 0
 * (negative results are data). JSON carries either the automorphism
 * sending a to x plus the mate coordinate, or the failing stage and
 * witness.
 */
lndkit_status lndkit_rectify(const lndkit_poly* a, char** json_out, int* is_coordinate_out);

/* ---- Lie algebra level -------------------------------------------- */

/* bracket closure of the span; dim_cap <= 0 uses the default cap of 64.
 * JSON carries the reduced basis, dimensions, and when the closure is
 * uncapped the lower central series. */
lndkit_status lndkit_closure(const lndkit_derivation* const* gens, size_t n, int dim_cap,
                             char** json_out);

/* one automorphism conjugating all generators to triangular form */
lndkit_status lndkit_triangularize(const lndkit_derivation* const* gens, size_t n,
                                   char** json_out);

/* recheck of a claimed conjugation; ok_out gets 1 when every image is
 * triangular and the images close to a nilpotent algebra */
lndkit_status lndkit_verify_conjugation(const lndkit_aut* theta,
                                        const lndkit_derivation* const* gens, size_t n,
                                        char** json_out, int* ok_out);

/* ---- randomized property suite ------------------------------------ */

lndkit_status lndkit_fuzz(uint64_t seed, int identity_cases, int recovery_cases, int max_degree,
                          char** json_out, int* pass_out);

#ifdef __cplusplus
}
#endif

#endif /* LNDKIT_H */
