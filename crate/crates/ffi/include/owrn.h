#ifndef OWRN_H
#define OWRN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum OwrnStatus {
  OWRN_STATUS_OK = 0,
  OWRN_STATUS_NULL_ARG = 1,
  OWRN_STATUS_INVALID_UTF8 = 2,
  OWRN_STATUS_PARSE = 3,
  OWRN_STATUS_VALIDATION = 4,
  OWRN_STATUS_TOO_LARGE = 5,
  OWRN_STATUS_NOT_FOUND = 6,
  OWRN_STATUS_PANIC = 7,
} OwrnStatus;

typedef enum OwrnStrategy {
  OWRN_STRATEGY_AUTO = 0,
  OWRN_STRATEGY_EXACT = 1,
  OWRN_STRATEGY_BIPARTITE = 2,
} OwrnStrategy;

// Output of the graph-to-scenario construction.
typedef struct OwrnReduction OwrnReduction;

// Parsed traffic configuration.
typedef struct OwrnScenario OwrnScenario;

// Result of a subset solve.
typedef struct OwrnSolution OwrnSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until the
// next call into the library on this thread.
const char *owrn_last_error(void);

// # Safety
// `s` must be NULL or a string returned by this library.
void owrn_string_free(char *s);

// Parses a scenario JSON document.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum OwrnStatus owrn_scenario_parse(const char *json, struct OwrnScenario **out);

// # Safety
// `scenario` must be NULL or a handle from this library, freed once.
void owrn_scenario_free(struct OwrnScenario *scenario);

// Canonical JSON text of the scenario.
//
// # Safety
// `scenario` must be a live handle; `out` must be writable.
enum OwrnStatus owrn_scenario_to_json(const struct OwrnScenario *scenario, char **out);

// # Safety
// `scenario` must be a live handle; `out` must be writable.
enum OwrnStatus owrn_scenario_vehicle_count(const struct OwrnScenario *scenario, size_t *out);

// # Safety
// `scenario` must be a live handle; `out` must be writable.
enum OwrnStatus owrn_strongly_connected(const struct OwrnScenario *scenario, bool *out);

// # Safety
// `scenario` must be a live handle; `out` must be writable.
enum OwrnStatus owrn_boundary_forms_cycle(const struct OwrnScenario *scenario, bool *out);

// # Safety
// `scenario` must be a live handle; `out` must be writable.
enum OwrnStatus owrn_collision_count(const struct OwrnScenario *scenario, size_t *out);

// Collision report as JSON (car labels 1-based, as in the CLI).
//
// # Safety
// `scenario` must be a live handle; `out` must be writable.
enum OwrnStatus owrn_collisions_json(const struct OwrnScenario *scenario, char **out);

// # Safety
// `scenario` must be a live handle; `out` must be writable.
enum OwrnStatus owrn_solve(const struct OwrnScenario *scenario,
                           enum OwrnStrategy strategy,
                           struct OwrnSolution **out);

// # Safety
// `solution` must be NULL or a handle from this library, freed once.
void owrn_solution_free(struct OwrnSolution *solution);

// # Safety
// `solution` must be a live handle; `out` must be writable.
enum OwrnStatus owrn_solution_size(const struct OwrnSolution *solution, size_t *out);

// Copies up to `capacity` selected car indices into `buffer` and writes the
// full count to `count`. `buffer` may be NULL when `capacity` is 0.
//
// # Safety
// `buffer` must have room for `capacity` elements; `count` must be writable.
enum OwrnStatus owrn_solution_selected(const struct OwrnSolution *solution,
                                       size_t *buffer,
                                       size_t capacity,
                                       size_t *count);

// Shortest path length and turn count between `v(from_i, from_j)` and
// `v(to_i, to_j)` (1-based). A negative `max_turns` means unbounded.
// Returns `OWRN_STATUS_NOT_FOUND` when no path exists.
//
// # Safety
// `scenario` must be a live handle; `length` and `turns` must be writable.
enum OwrnStatus owrn_shortest_path(const struct OwrnScenario *scenario,
                                   size_t from_i,
                                   size_t from_j,
                                   size_t to_i,
                                   size_t to_j,
                                   int32_t max_turns,
                                   int64_t *length,
                                   size_t *turns);

// Builds the scenario whose conflict graph is the given graph document
// (`{"n": 3, "edges": [[1, 2]]}`), with road spacing `delta` and speed
// `omega_num / omega_den`.
//
// # Safety
// `graph_json` must be a NUL-terminated string; `out` must be writable.
enum OwrnStatus owrn_reduce(const char *graph_json,
                            int64_t delta,
                            int64_t omega_num,
                            int64_t omega_den,
                            struct OwrnReduction **out);

// # Safety
// `reduction` must be NULL or a handle from this library, freed once.
void owrn_reduction_free(struct OwrnReduction *reduction);

// Simulates the construction and checks it; on failure the report text is
// available from `owrn_last_error` and `passed` is false.
//
// # Safety
// `reduction` must be a live handle; `passed` must be writable.
enum OwrnStatus owrn_reduction_verify(const struct OwrnReduction *reduction, bool *passed);

// Copy of the generated scenario as a new handle.
//
// # Safety
// `reduction` must be a live handle; `out` must be writable.
enum OwrnStatus owrn_reduction_scenario(const struct OwrnReduction *reduction,
                                        struct OwrnScenario **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OWRN_H */
