/* conjforge — constructions and conjugacy invariants for automorphisms of
 * countable homogeneous structures, at finite scale.
 *
 * C API over the C++ core. All functions return cf_status; results come out
 * through opaque cf_object handles or malloc'd strings. On failure the
 * thread-local message from cf_last_error() describes what went wrong.
 */
#ifndef CONJFORGE_H
#define CONJFORGE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Matches the CLI exit-code taxonomy. */
typedef enum cf_status {
  CF_OK = 0,
  CF_INPUT_ERROR = 2,     /* malformed input or violated precondition */
  CF_INVARIANT_ERROR = 3, /* an internal invariant failed to hold */
  CF_BUDGET_ERROR = 4     /* an iteration or retry budget was exhausted */
} cf_status;

/* Opaque tagged value: a structure, PL map, registry automorphism, layered
 * structure, composite automorphism, forbidden family, decomposition,
 * invariant, or tuple code. */
typedef struct cf_object cf_object;

/* Message for the most recent failing call on this thread. The pointer is
 * valid until the next failing call. */
const char* cf_last_error(void);

/* Overrides the iteration budget for orbit-chasing loops (conjugator
 * evaluation, registry sampling retries). steps <= 0 restores the default
 * of 10000. */
void cf_set_iteration_budget(long steps);

/* --- object lifecycle --------------------------------------------------- */

/* type_name: "structure", "plmap", "registry", "snmap", "layered",
 * "composite", or "family". */
cf_status cf_parse(const char* type_name, const char* json_text, cf_object** out);
const char* cf_type(const cf_object* obj);
cf_status cf_to_json(const cf_object* obj, char** out);
/* DOT rendering for structures and layered structures. */
cf_status cf_to_dot(const cf_object* obj, char** out);
void cf_string_free(char* s);
void cf_free(cf_object* obj);

/* --- constructions ------------------------------------------------------ */

/* Linear order -> PL automorphism of Q fixing exactly an embedded copy. */
cf_status cf_build_phi_l(const cf_object* order, cf_object** out);
/* Linear order -> sampled S(n) automorphism. */
cf_status cf_build_sn_reduction(const cf_object* order, int n, cf_object** out);
/* K_n-free graph -> layered structure with propagated automorphism.
 * n = 0 disables the clique bound (the plain random-graph case). */
cf_status cf_build_graph_reduction(const cf_object* graph, int n, int levels, int cap,
                                   cf_object** out);
cf_status cf_build_tournament_reduction(const cf_object* tournament, int levels,
                                        int cap, cf_object** out);
cf_status cf_build_infree_reduction(const cf_object* tournament, int n, int levels,
                                    int cap, cf_object** out);
cf_status cf_build_forbidden_reduction(const cf_object* digraph, const cf_object* family,
                                       int levels, int cap, cf_object** out);
cf_status cf_build_multipartite_reduction(const cf_object* tournament, int n,
                                          int levels, int cap, cf_object** out);
/* Tournament -> hat digraph (plain structure). */
cf_status cf_build_hat(const cf_object* tournament, cf_object** out);

/* --- invariants and recovery -------------------------------------------- */

cf_status cf_orbital_decomposition(const cf_object* plmap, cf_object** out);
cf_status cf_recover_order(const cf_object* plmap, cf_object** out);
cf_status cf_recover_order_sn(const cf_object* snmap, cf_object** out);
/* Layered structure (structure + phi) -> recovered base quotient. */
cf_status cf_recover_base(const cf_object* layered, cf_object** out);
cf_status cf_composite_invariant(const cf_object* composite, cf_object** out);
/* The C3 composite digraph variants (infinity*C3 and C3[infinity]). */
cf_status cf_c3_invariant(const cf_object* composite, cf_object** out);
cf_status cf_eset_encode(const cf_object* composite, cf_object** out);

/* --- conjugacy ----------------------------------------------------------- */

/* Orbital matching + constructive conjugator for two PL maps. verdict gets
 * 0 or 1; on verdict 1 and non-null witness, a JSON report with the matched
 * regions and sampled graph of the conjugator is returned (seeded sampling,
 * `samples` points). */
cf_status cf_pl_conjugacy(const cf_object* phi, const cf_object* psi, uint64_t seed,
                          int samples, int* verdict, char** witness_json);
/* Invariant decision + explicit witness for two composite automorphisms. */
cf_status cf_composite_conjugacy(const cf_object* phi, const cf_object* psi,
                                 int* verdict, cf_object** witness);

/* --- verification -------------------------------------------------------- */

/* Runs a named verification suite; passed gets 0 or 1 and the serialized
 * report lands in report_json. samples <= 0 keeps each suite's built-in
 * case counts. */
cf_status cf_run_suite(const char* suite, uint64_t seed, int samples, int* passed,
                       char** report_json);
/* Newline-separated list of available suite names. */
cf_status cf_suite_names(char** out);

#ifdef __cplusplus
}
#endif

#endif /* CONJFORGE_H */
