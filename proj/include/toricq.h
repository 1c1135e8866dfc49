/* C API for the toricq engine: exact invariants of symplectic toric
 * quasifolds from simple convex polytopes.
 *
 * All functions returning tq_status set a thread-local error message
 * readable via tq_last_error() on failure. Handles are freed with the
 * matching *_free function; strings returned by accessors stay owned by
 * the handle and are valid until it is freed. */

#ifndef TORICQ_H
#define TORICQ_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tq_status {
  TQ_OK = 0,
  TQ_ERR_IO = 1,
  TQ_ERR_PARSE = 2,
  TQ_ERR_EMPTY = 3,
  TQ_ERR_UNBOUNDED = 4,
  TQ_ERR_NONSIMPLE = 5,
  TQ_ERR_REDUNDANT_FACET = 6,
  TQ_ERR_NOT_SURJECTIVE = 7,
  TQ_ERR_NONGENERIC = 8,
  TQ_ERR_OUTSIDE_DELTA = 9,
  TQ_ERR_FIELD_MISMATCH = 10,
  TQ_ERR_DIVISION_BY_ZERO = 11,
  TQ_ERR_INVALID_ARGUMENT = 12,
  TQ_ERR_AUDIT_FAILED = 13,
  TQ_ERR_INTERNAL = 14
} tq_status;

typedef struct tq_polytope tq_polytope;
typedef struct tq_report tq_report;

/* Load a polytope from a JSON file or an in-memory JSON string. */
tq_status tq_polytope_load_file(const char* path, tq_polytope** out);
tq_status tq_polytope_load_json(const char* json, tq_polytope** out);
void tq_polytope_free(tq_polytope* p);

/* Run the pipeline. xi is an optional explicit direction ("1,2" or a JSON
 * array of scalars); pass NULL to search deterministically from seed.
 * run_audits != 0 additionally runs the Morse-inequality, inclusion-
 * exclusion, Dehn-Sommerville, route-agreement and xi-independence audits. */
tq_status tq_analyze(const tq_polytope* p, const char* xi, long seed,
                     int run_audits, tq_report** out);

/* Report accessors. */
const char* tq_report_json(const tq_report* r);
const char* tq_report_text(const tq_report* r);
int tq_report_audits_passed(const tq_report* r); /* 1 pass, 0 fail */
void tq_report_free(tq_report* r);

/* Last error message for the calling thread; empty string if none. */
const char* tq_last_error(void);
const char* tq_status_name(tq_status s);

#ifdef __cplusplus
}
#endif

#endif /* TORICQ_H */
