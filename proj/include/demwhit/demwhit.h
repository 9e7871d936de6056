#ifndef DEMWHIT_H
#define DEMWHIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque handle over one enumerated Weyl group and its root system. */
typedef struct dw_system dw_system;

typedef enum dw_status {
  DW_OK = 0,
  DW_ERR_INVALID_ARGUMENT = 1, /* bad type/rank/index/weight/format/suite */
  DW_ERR_DOMAIN = 2,           /* operation undefined on the given input */
  DW_ERR_BOUND = 3,            /* group order exceeds the enumeration bound */
  DW_ERR_NOMEM = 4,
  DW_ERR_INTERNAL = 5
} dw_status;

/* Builds the root system of the given Cartan type (one of 'A','B','C','D',
 * 'G','F') and rank, and enumerates the Weyl group.  `bound` caps the group
 * order (0 selects the default of 10000); exceeding it fails with
 * DW_ERR_BOUND before any enumeration work is done. */
dw_status dw_system_create(char type, int rank, size_t bound, dw_system** out);
void dw_system_free(dw_system* sys);

int dw_system_rank(const dw_system* sys);
uint64_t dw_system_weyl_order(const dw_system* sys);

/* Message for the calling thread's most recent failure; empty string when the
 * last call succeeded.  The pointer stays valid until the thread's next call
 * into the library. */
const char* dw_last_error(void);

/* Renders the full table of the chosen basis family over the group.
 *   weight       coordinates in the fundamental-weight basis, length = rank
 *                (NULL selects rho = (1,...,1))
 *   basis        "X", "Y", "Z" or "demazure" (NULL selects "X")
 *   word, word_len
 *                only meaningful for basis "Z": when given, a single row for
 *                that generator word (reduced or not) replaces the per-element
 *                table
 *   v_at         NULL for coefficients in v, else a rational "p" or "p/q"
 *   format       "json", "csv" or "latex" (NULL selects "json")
 * On success *out receives a NUL-terminated string owned by the caller;
 * release it with dw_string_free. */
dw_status dw_table(const dw_system* sys, const long* weight, int weight_len,
                   const char* basis, const int* word, int word_len, const char* v_at,
                   const char* format, char** out);

/* Correction-coefficient census over all descent pairs, plus the smoothness
 * census for the given (regular dominant) weight. */
dw_status dw_census(const dw_system* sys, const long* weight, int weight_len,
                    const char* format, char** out);

/* Kazhdan-Lusztig polynomial table. */
dw_status dw_kl(const dw_system* sys, const char* format, char** out);

/* Runs one verification suite (braid, quadratic, recursion-vs-hecke, v0, v1,
 * bernstein, fibers, sign-rep, lusztig-conjugation, kl, all).  *report
 * receives the PASS/FAIL report, *failures the number of failed identities
 * (0 means everything passed). */
dw_status dw_verify(const dw_system* sys, const char* suite, const long* weight,
                    int weight_len, uint64_t seed, int trials, char** report,
                    int* failures);

/* Sets *out to 1 when the generator word is a reduced expression, else 0. */
dw_status dw_word_is_reduced(const dw_system* sys, const int* word, int word_len,
                             int* out);

void dw_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* DEMWHIT_H */
