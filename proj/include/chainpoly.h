/*
 * chainpoly: exact chain-polynomial and flag-vector computations on finite
 * lattices, with certified real-rootedness and interlacing.
 *
 * C interface to the shared library. All objects are opaque handles freed
 * with the matching *_free function; strings returned through char** are
 * allocated by the library and released with cp_string_free. Every function
 * returns CP_OK on success; on failure cp_last_error() describes the
 * problem for the calling thread.
 */
#ifndef CHAINPOLY_H
#define CHAINPOLY_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cp_status {
    CP_OK = 0,
    CP_ERR_INVALID_ARGUMENT = 1,
    CP_ERR_PARSE = 2,
    CP_ERR_CYCLE = 3,
    CP_ERR_NOT_BOUNDED = 4,
    CP_ERR_NOT_GRADED = 5,
    CP_ERR_CAP_EXCEEDED = 6,
    CP_ERR_UNSUPPORTED = 7,
    CP_ERR_HOST_MISMATCH = 8,
    CP_ERR_IO = 9,
    CP_ERR_ODD_COEFFICIENT = 10,
    CP_ERR_ASYMMETRIC = 11,
    CP_ERR_INTERNAL = 12,
} cp_status;

typedef struct cp_poset cp_poset;
typedef struct cp_poly cp_poly;
typedef struct cp_ab cp_ab;
typedef struct cp_matroid cp_matroid;

const char* cp_version(void);
const char* cp_last_error(void);

void cp_poset_free(cp_poset* p);
void cp_poly_free(cp_poly* p);
void cp_ab_free(cp_ab* p);
void cp_matroid_free(cp_matroid* m);
void cp_string_free(char* s);

/* ---- lattice constructors ------------------------------------------- */

cp_status cp_poset_boolean(int n, cp_poset** out);
cp_status cp_poset_subspace(int n, int q, int caps_override, cp_poset** out);
cp_status cp_poset_partition_a(int n, int caps_override, cp_poset** out);
cp_status cp_poset_partition_b(int n, int caps_override, cp_poset** out);
cp_status cp_poset_partition_d(int n, int caps_override, cp_poset** out);
cp_status cp_poset_uniform(int m, int n, cp_poset** out);
cp_status cp_poset_near_pencil(int m, int n, cp_poset** out);
cp_status cp_poset_simplex(int n, cp_poset** out);
cp_status cp_poset_cube(int n, cp_poset** out);

/* ---- poset io and queries ------------------------------------------- */

cp_status cp_poset_read_text(const char* text, cp_poset** out);
cp_status cp_poset_read_file(const char* path, cp_poset** out);
cp_status cp_poset_read_json(const char* text, cp_poset** out);
cp_status cp_poset_write_text(const cp_poset* p, char** out);
cp_status cp_poset_write_json(const cp_poset* p, char** out);

cp_status cp_poset_size(const cp_poset* p, int* out);
/* Rank of the top element; fails with CP_ERR_NOT_BOUNDED / NOT_GRADED when
 * the poset is not a bounded graded one. */
cp_status cp_poset_rank(cp_poset* p, int* out);
cp_status cp_poset_chain_poly(const cp_poset* p, cp_poly** out);
/* h-polynomial of the poset exactly as given. */
cp_status cp_poset_h_poly(const cp_poset* p, cp_poly** out);
/* h-polynomial of the proper part of a bounded graded poset. */
cp_status cp_poset_h_bounded(cp_poset* p, cp_poly** out);
/* Number of maximal chains, as a decimal string. */
cp_status cp_poset_maximal_chains(cp_poset* p, char** out);
/* Flag h-vector as a JSON table keyed by subset strings such as "1,3".
 * via: "rank-selection" works on any bounded graded poset; "labeling"
 * requires a type A or B partition lattice handle. */
cp_status cp_poset_flags_json(cp_poset* p, const char* via, int workers, char** out);

cp_status cp_poset_pyramid(cp_poset* p, cp_poset** out);
cp_status cp_poset_prism(cp_poset* p, cp_poset** out);
cp_status cp_poset_dual(const cp_poset* p, cp_poset** out);
cp_status cp_poset_interval(const cp_poset* p, int x, int y, cp_poset** out);
cp_status cp_poset_remove_extremes(cp_poset* p, cp_poset** out);
cp_status cp_poset_isomorphic(cp_poset* a, cp_poset* b, int* out);

cp_status cp_poset_ab_index(cp_poset* p, cp_ab** out);
/* h of the zonotope whose lattice of flats is p (Billera-Ehrenborg-Readdy
 * route through the flag h-vector). */
cp_status cp_poset_zonotope_h(cp_poset* p, cp_poly** out);

/* ---- polynomials ----------------------------------------------------- */

/* JSON arrays of coefficient strings, ascending degree: ["1","11","6"]. */
cp_status cp_poly_from_json(const char* text, cp_poly** out);
cp_status cp_poly_to_json(const cp_poly* p, char** out);
cp_status cp_poly_to_pretty(const cp_poly* p, char** out);
cp_status cp_poly_degree(const cp_poly* p, int* out);

cp_status cp_poly_eulerian_a(int n, cp_poly** out);
cp_status cp_poly_eulerian_b(int n, cp_poly** out);
/* q is a rational literal such as "2" or "1/2". */
cp_status cp_poly_eulerian_aq(int n, const char* q, cp_poly** out);

cp_status cp_poly_is_real_rooted(const cp_poly* p, int* out);
/* Distinct real roots in (lo, hi]; bounds are rational literals, "-inf" /
 * "inf" for the infinities. */
cp_status cp_poly_sturm_count(const cp_poly* p, const char* lo, const char* hi, long* out);
cp_status cp_poly_interlaces(const cp_poly* f, const cp_poly* g, int* out);
/* Isolating intervals with multiplicities as JSON; width NULL for the
 * default, otherwise a rational refinement target. */
cp_status cp_poly_isolate_json(const cp_poly* p, const char* width, char** out);
/* Gamma expansion about center n/2; CP_ERR_ASYMMETRIC when not symmetric. */
cp_status cp_poly_gamma_json(const cp_poly* p, int n, char** out);
cp_status cp_poly_pyr(const cp_poly* h, int rank, cp_poly** out);
cp_status cp_poly_prism(const cp_poly* h, int rank, cp_poly** out);

/* ---- ab-polynomials --------------------------------------------------- */

/* JSON maps from ab-words to integer coefficients: {"aab": 2, ...}. */
cp_status cp_ab_from_json(const char* text, cp_ab** out);
cp_status cp_ab_to_json(const cp_ab* psi, char** out);
cp_status cp_ab_omega(const cp_ab* v, cp_ab** out);
cp_status cp_ab_derivation(const cp_ab* v, cp_ab** out);
cp_status cp_ab_pyr(const cp_ab* psi, cp_ab** out);
cp_status cp_ab_prism(const cp_ab* psi, cp_ab** out);
cp_status cp_ab_zonotope(const cp_ab* psi, cp_ab** out);
cp_status cp_ab_specialize(const cp_ab* psi, cp_poly** out);

/* ---- word multisets --------------------------------------------------- */

/* kind: "A" | "B" | "A-star" | "B-star" | "A-signed";
 * by:   "set" | "count" | "lpeak". JSON histogram out. */
cp_status cp_stats_json(const char* kind, int n, const char* by, int caps_override, char** out);
cp_status cp_descent_h(const char* kind, int n, int caps_override, cp_poly** out);
/* The h_{n,k} sequence in interlacing order as a JSON array of coefficient
 * arrays. */
cp_status cp_hk_json(const char* kind, int n, int caps_override, char** out);
/* Second barycentric subdivision report: h, gamma, all routes in range,
 * agreement verdict. */
cp_status cp_sd2_json(int n, char** out, int* agree);

/* ---- matroids ---------------------------------------------------------- */

cp_status cp_matroid_read_text(const char* text, const char* name, cp_matroid** out);
cp_status cp_matroid_read_file(const char* path, cp_matroid** out);
/* Bases marked '*' (or '1') over the r-subsets of [m] in reverse
 * lexicographic order. */
cp_status cp_matroid_from_revlex(int ground, int rank, const char* encoding, const char* name,
                                 cp_matroid** out);
cp_status cp_matroid_to_text(const cp_matroid* m, char** out);
cp_status cp_matroid_ground(const cp_matroid* m, int* out);
cp_status cp_matroid_rank(const cp_matroid* m, int* out);
/* ok = 1 when the basis-exchange axiom holds; otherwise witness_json
 * carries the violating pair. */
cp_status cp_matroid_verify_exchange(const cp_matroid* m, int* ok, char** witness_json);
cp_status cp_matroid_add_coloop(const cp_matroid* m, cp_matroid** out);
cp_status cp_matroid_flats(const cp_matroid* m, cp_poset** out);
cp_status cp_matroid_rank_of(const cp_matroid* m, const int* elements, int count, int* out);
cp_status cp_matroid_closure(const cp_matroid* m, const int* elements, int count, int* out_elements,
                             int* out_count);
/* Writes the bundled corpus: every simple matroid on at most max_elements
 * (<= 6) ground elements plus the named 7- and 8-element spot set. */
cp_status cp_matroid_gen_corpus(const char* directory, int max_elements, int* files_written);

/* ---- tables, certification, batch runs -------------------------------- */

/* id: "piA" | "piB" | "piD" | "sd2" | "all". */
cp_status cp_tables_json(const char* id, char** out, int* all_match);
/* which: "4.2" | "4.3" | "4.5" | "triple". */
cp_status cp_check_suite_json(const char* which, int nmax, char** out, int* pass);
/* which: "geom-5.1" | "zonotope-5.10" | "pencil-uniform". */
cp_status cp_certify_poset_json(cp_poset* p, const char* which, const char* name, int with_timing,
                                char** out, int* pass);
cp_status cp_batch_check_json(const char* directory, const char* which, int workers,
                              int with_timing, char** out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* CHAINPOLY_H */
