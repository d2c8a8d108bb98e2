/* C interface to the pyrene-chain matching engine.
 *
 * All functions return a pyrenic_status; on failure pyrenic_last_error()
 * holds a thread-local message valid until the next call on that thread.
 * Strings returned through char** are heap copies; release them with
 * pyrenic_string_free. Handles are opaque and single-owner.
 */
#ifndef PYRENIC_H
#define PYRENIC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef PYRENIC_API
#if defined(_WIN32)
#define PYRENIC_API __declspec(dllimport)
#else
#define PYRENIC_API __attribute__((visibility("default")))
#endif
#endif

typedef enum pyrenic_status {
  PYRENIC_OK = 0,
  PYRENIC_ERR_INVALID_PARAMETER = 1,
  PYRENIC_ERR_PARSE = 2,
  PYRENIC_ERR_UNSUPPORTED_GRAPH = 3,
  PYRENIC_ERR_NO_PERFECT_MATCHING = 4,
  PYRENIC_ERR_CAP_EXCEEDED = 5,
  PYRENIC_ERR_VALIDATION = 6,
  PYRENIC_ERR_INTERNAL = 7
} pyrenic_status;

/* A parsed input: the graph plus, when the input was cell-backed, its
 * hexagonal system. */
typedef struct pyrenic_system pyrenic_system;
/* An enumerated list of perfect matchings of one system. */
typedef struct pyrenic_matchings pyrenic_matchings;

PYRENIC_API const char* pyrenic_version(void);
PYRENIC_API const char* pyrenic_last_error(void);
PYRENIC_API void pyrenic_string_free(char* s);

/* json_text: one of
 *   {"family":"pyrene_chain","n":N} | {"family":"auxiliary","n":N}
 *   {"named":"pyrene"|"phenanthrene"|"diphenyl"} | {"cells":[[q,r],...]}   */
PYRENIC_API pyrenic_status pyrenic_system_parse(const char* json_text, pyrenic_system** out);
PYRENIC_API pyrenic_status pyrenic_system_chain(int n, pyrenic_system** out);
PYRENIC_API pyrenic_status pyrenic_system_auxiliary(int n, pyrenic_system** out);
PYRENIC_API void pyrenic_system_free(pyrenic_system* sys);

PYRENIC_API pyrenic_status pyrenic_system_stats(const pyrenic_system* sys, int* vertices,
                                                int* edges, int* faces);
/* Explicit sorted {"cells":[...]} form; fails for inputs with no cell backing
 * (diphenyl). */
PYRENIC_API pyrenic_status pyrenic_system_serialize(const pyrenic_system* sys, char** out_json);

/* cap > 0 fails with PYRENIC_ERR_CAP_EXCEEDED if the system has more perfect
 * matchings; cap = 0 enumerates everything. Order is deterministic
 * (lexicographic by sorted edge-id sequence). */
PYRENIC_API pyrenic_status pyrenic_matchings_enumerate(const pyrenic_system* sys, long long cap,
                                                       pyrenic_matchings** out);
PYRENIC_API pyrenic_status pyrenic_matchings_count(const pyrenic_matchings* ms, size_t* count);
/* Borrowed pointer into ms; valid until pyrenic_matchings_free. */
PYRENIC_API pyrenic_status pyrenic_matchings_edges(const pyrenic_matchings* ms, size_t index,
                                                   const int** ids, size_t* len);
PYRENIC_API void pyrenic_matchings_free(pyrenic_matchings* ms);

/* Per-matching values. method: "brute" (definition-level search, exact on any
 * graph) or "oracle" (minimax shortcut; requires a pyrene-chain or auxiliary
 * system). caps_json: NULL or a JSON object overriding work caps, keys
 * brute_matchings, antiforcing_matchings, antiforcing_width, oracle_max_n,
 * arith_max_n. */
PYRENIC_API pyrenic_status pyrenic_forcing_number(const pyrenic_system* sys,
                                                  const pyrenic_matchings* ms, size_t index,
                                                  const char* method, const char* caps_json,
                                                  int* value);
PYRENIC_API pyrenic_status pyrenic_antiforcing_number(const pyrenic_system* sys,
                                                      const pyrenic_matchings* ms, size_t index,
                                                      const char* method, const char* caps_json,
                                                      int* value);

/* One-shot renderers producing a complete output document (JSON or CSV,
 * trailing newline included). format: "json" | "csv". kind: "forcing" |
 * "antiforcing". method: "brute" | "oracle" | "recurrence" | "closed". */
PYRENIC_API pyrenic_status pyrenic_render_generate(const char* system_json, const char* format,
                                                   char** out);
PYRENIC_API pyrenic_status pyrenic_render_matchings(const char* system_json,
                                                    const char* kind_or_null, const char* method,
                                                    const char* format, const char* caps_json,
                                                    char** out);
PYRENIC_API pyrenic_status pyrenic_render_polynomial(const char* system_json, const char* kind,
                                                     const char* method, const char* format,
                                                     const char* caps_json, char** out);
PYRENIC_API pyrenic_status pyrenic_render_spectrum(const char* system_json, const char* kind,
                                                   const char* method, const char* format,
                                                   const char* caps_json, char** out);
/* name: "phi" | "idf" | "af" (alias "af_sum"). route: "recurrence" |
 * "closed_form" | "poly_eval" (phi) / "poly_derivative" (idf, af). */
PYRENIC_API pyrenic_status pyrenic_render_sequence(const char* name, const char* route, int max_n,
                                                   const char* format, const char* caps_json,
                                                   char** out);
/* Runs the consistency matrix up to max_n. The document is written even when
 * checks fail; failures return PYRENIC_ERR_VALIDATION. inject_fault_or_null:
 * NULL or "corrupt-forcing-seed". */
PYRENIC_API pyrenic_status pyrenic_render_validate(int max_n, const char* caps_json,
                                                   const char* inject_fault_or_null,
                                                   const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PYRENIC_H */
