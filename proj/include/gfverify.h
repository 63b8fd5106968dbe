#ifndef GFVERIFY_H
#define GFVERIFY_H

/* C interface to the exact factorization verifier.
 *
 * The library checks claimed exact factorizations G = HK of almost simple
 * groups against a machine-readable catalog: groups are rebuilt from
 * explicit generators over finite fields (or as permutation groups), and
 * every verdict rests on exact integer identities -- no floating point, no
 * tolerances.  All functions return GFV_OK (0) on success or a nonzero
 * error code; gfv_last_error() describes the most recent failure on the
 * calling thread.
 *
 * Report records are line-delimited with a fixed field order:
 *   instance=<id> strategy=<s> G=<n> H=<n> K=<n> meet=<n> [orbit=<n>]
 *   verdict=<verified|screened-consistent|refuted> seed=0x5EED note=<text>
 * Numbers are decimal; output is byte-for-byte deterministic.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    GFV_OK = 0,
    GFV_ERR_USAGE = 1,  /* unknown row, malformed parameters or strategy */
    GFV_ERR_ENGINE = 2, /* exact computation failed (order mismatch, budget) */
    GFV_ERR_IO = 3      /* catalog file missing or malformed */
};

typedef struct gfv_catalog gfv_catalog; /* opaque catalog handle */
typedef struct gfv_reports gfv_reports; /* opaque list of report records */

/* message for the most recent error on this thread; never NULL */
const char* gfv_last_error(void);

/* Load a catalog; path NULL loads the data file shipped with the library.
 * On success *out owns the handle and must be released with
 * gfv_catalog_close. */
int gfv_catalog_open(const char* path, gfv_catalog** out);
void gfv_catalog_close(gfv_catalog* c);
unsigned gfv_catalog_version(const gfv_catalog* c);
size_t gfv_catalog_rows(const gfv_catalog* c);

/* Verify one catalog row.  params is "name=value,..." ("" or NULL when the
 * row has no parameters; NULL also selects the row's smallest tuple when it
 * has parameters).  strategy is one of "auto", "orbit", "oracle", "chain",
 * "screen"; NULL means "auto". */
int gfv_verify(const gfv_catalog* c, const char* table, const char* row,
               const char* params, const char* strategy, gfv_reports** out);

/* Every desk instance: each row at its smallest parameters plus the extra
 * tuples exercised by the acceptance gate, sorted by instance id. */
int gfv_selftest(const gfv_catalog* c, gfv_reports** out);

/* Screening sweep of one row: all parameter tuples with every parameter in
 * [1, max_param] (field-size-like parameters capped at max_q) that satisfy
 * the row's constraints, checked by the divisibility filter. */
int gfv_screen(const gfv_catalog* c, const char* table, const char* row,
               long max_param, long max_q, gfv_reports** out);

/* report access; index i must be < gfv_reports_count */
size_t gfv_reports_count(const gfv_reports* r);
const char* gfv_reports_line(const gfv_reports* r, size_t i);     /* full record */
const char* gfv_reports_instance(const gfv_reports* r, size_t i); /* instance id */
const char* gfv_reports_verdict(const gfv_reports* r, size_t i);
const char* gfv_reports_meet(const gfv_reports* r, size_t i); /* |H meet K| */
void gfv_reports_free(gfv_reports* r);

/* Exact group orders by family name (decimal string).  Families: Sp, PSp,
 * GOplus, GOminus, Omplus, Omminus, POmplus, POmminus, OmOdd, SL, SU, GL,
 * G2, Sz, Alt, Sym, M12, M24, PGammaL28, dihedral, cyclic.  The result is
 * heap-allocated; release it with gfv_string_free. */
int gfv_group_order(const char* family, long a, long b, char** out);

/* Primitive prime divisors of a^n - 1 as a comma-separated decimal list
 * (empty string when none); heap-allocated, release with gfv_string_free. */
int gfv_ppd(unsigned long a, unsigned n, char** out);

void gfv_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* GFVERIFY_H */
