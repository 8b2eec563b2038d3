/* C API for the reldiam library.
 *
 * Conventions:
 *   - Objects are opaque handles created from / serialized to JSON strings
 *     (see schemas/ for the wire formats). Free them with the matching
 *     rd_*_free function.
 *   - Functions returning int use RD_OK on success; on failure they return
 *     an error code and leave outputs untouched. rd_last_error() returns a
 *     thread-local message for the most recent failure on this thread.
 *   - Strings returned through char** outputs are heap-allocated; release
 *     them with rd_string_free.
 *   - All operations are pure; handles are immutable and safe to share
 *     across threads.
 */
#ifndef RELDIAM_H
#define RELDIAM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define RD_OK 0
#define RD_EINVAL 1 /* invalid argument / malformed or invalid input object */
#define RD_EFAIL 2  /* internal failure (construction or search failed) */

typedef struct rd_body rd_body;
typedef struct rd_partition rd_partition;
typedef struct rd_subdivision rd_subdivision;

const char* rd_last_error(void);
void rd_string_free(char* s);

/* Global geometric tolerance (defaults to 1e-9). */
void rd_set_epsilon(double eps);

/* ---- bodies ---------------------------------------------------------- */
int rd_body_from_json(const char* json_text, rd_body** out);
int rd_body_to_json(const rd_body* body, char** out);
void rd_body_free(rd_body* body);

/* kind: "disc" (param = radius, k ignored), "kgon" (param = circumradius),
 * "reuleaux" (odd k, param = width), "optimal" (param ignored). */
int rd_body_make(const char* kind, int k, double param, rd_body** out);

/* JSON object {area, perimeter, inradius, circumradius, diameter, width}. */
int rd_body_metrics(const rd_body* body, char** out);
int rd_body_check_symmetry(const rd_body* body, int k, int* holds);

/* ---- partitions and subdivisions ------------------------------------- */
int rd_partition_from_json(const char* json_text, rd_partition** out);
int rd_partition_to_json(const rd_partition* p, char** out);
void rd_partition_free(rd_partition* p);

int rd_subdivision_from_json(const char* json_text, rd_subdivision** out);
int rd_subdivision_to_json(const rd_subdivision* s, char** out);
void rd_subdivision_free(rd_subdivision* s);

int rd_standard_partition(const rd_body* body, int k, rd_partition** out);
int rd_partition_to_subdivision(const rd_partition* p, rd_subdivision** out);

/* Validation: *ok set to 1/0; on failure (not mere invalidity) returns an
 * error code. errors_json (may be NULL) receives a JSON array of messages. */
int rd_partition_validate(const rd_partition* p, int* ok, char** errors_json);
int rd_subdivision_validate(const rd_subdivision* s, int* ok, char** errors_json);

/* Maximum relative diameter with witness:
 * {value, region, p:[x,y], q:[x,y]}. */
int rd_partition_eval(const rd_partition* p, char** witness_json);
int rd_subdivision_eval(const rd_subdivision* s, char** witness_json);

/* ---- constructions --------------------------------------------------- */
int rd_heptagon_counterexample(double rho, rd_subdivision** out);
/* {rho, d_M, trace:[[rho,d_M]...]} plus the minimizing subdivision. */
int rd_heptagon_search(char** report_json, rd_subdivision** out);
int rd_circle8_counterexample(rd_subdivision** out);
int rd_perturb_partition(const rd_partition* p, double magnitude, uint64_t seed,
                         rd_partition** out);
/* info_json: {d_k, lattice_cells}. */
int rd_hex_subdivision(const rd_body* body, int k, rd_subdivision** out,
                       char** info_json);
int rd_random_partition(const rd_body* body, int k, uint64_t seed,
                        rd_partition** out);
int rd_random_subdivision(const rd_body* body, int k, uint64_t seed,
                          rd_subdivision** out);

/* ---- bounds ---------------------------------------------------------- */
/* JSON report: list of named lower/upper bounds for (body, k);
 * format "json" or "markdown". */
int rd_bounds_report(const rd_body* body, int k, const char* format, char** out);
/* LP packing-constant verification: {value, argmax:{...}}. */
int rd_lp_packing(int k, char** out);

/* ---- search ---------------------------------------------------------- */
/* mode: "partition" or "subdivision". config_json (may be NULL) overrides
 * {seed, iterations, move_scale, restarts, anneal, t0, cooling}.
 * Result JSON: {best_value, second_value, bounds_gap, trace:[...]}. */
int rd_search(const rd_body* body, int k, const char* mode,
              const char* config_json, char** report_json, rd_subdivision** best);

/* ---- rendering ------------------------------------------------------- */
int rd_render_body(const rd_body* body, char** svg);
int rd_render_partition(const rd_partition* p, char** svg);
int rd_render_subdivision(const rd_subdivision* s, char** svg);

/* ---- reproduction experiments ---------------------------------------- */
/* Comma-separated experiment names. */
int rd_repro_names(char** out);
/* Runs one experiment, writing <name>.json and <name>.md into outdir.
 * *pass set to 1/0. */
int rd_repro_run(const char* name, const char* outdir, int* pass);

#ifdef __cplusplus
}
#endif

#endif /* RELDIAM_H */
