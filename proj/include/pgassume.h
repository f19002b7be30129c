/*
 * Copyright 2026 the pgassume authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the pgassume shared library.
 *
 * The library computes cooperative winning regions and permissive
 * environment assumptions (unsafe edges, co-live edges, conditional live
 * groups) for two-player games on finite graphs with safety, Buchi,
 * co-Buchi, and parity objectives, and verifies them against brute-force
 * oracles at small scale.
 *
 * All handles are opaque; every function that can fail returns a
 * pga_status, with a human-readable message available from
 * pga_last_error() until the next failing call on the same thread.
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with pga_string_free().
 */

#ifndef PGASSUME_H
#define PGASSUME_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pga_status {
    PGA_OK = 0,
    PGA_E_PARSE = 1,        /* malformed pgsolver or JSON input */
    PGA_E_INVALID = 2,      /* bad arguments, ids out of range, bad schema */
    PGA_E_BOUND = 3,        /* oracle bound or product gate exceeded */
    PGA_E_PRECONDITION = 4, /* algorithm precondition violated */
    PGA_E_INTERNAL = 5
} pga_status;

typedef enum pga_objective {
    PGA_OBJ_SAFETY = 0,
    PGA_OBJ_BUCHI = 1,
    PGA_OBJ_COBUCHI = 2,
    PGA_OBJ_PARITY = 3
} pga_objective;

typedef enum pga_variant {
    PGA_VARIANT_STANDARD = 0,
    PGA_VARIANT_ACCELERATED = 1,
    PGA_VARIANT_LINEAR = 2
} pga_variant;

typedef struct pga_game pga_game;
typedef struct pga_result pga_result;

const char* pga_version(void);

/* Message for the most recent failing call on this thread. */
const char* pga_last_error(void);

void pga_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Games                                                               */
/* ------------------------------------------------------------------ */

/* Parses the pgsolver text format; rejects dead ends and duplicate ids. */
pga_status pga_game_parse(const char* text, pga_game** out);

/* Seeded random game; the seed fully determines the output. */
pga_status pga_game_generate(uint32_t n, uint32_t deg_lo, uint32_t deg_hi,
                             uint32_t max_priority, uint32_t p1_permille,
                             uint64_t seed, pga_game** out);

void pga_game_free(pga_game* g);

uint32_t pga_game_vertex_count(const pga_game* g);
uint32_t pga_game_edge_count(const pga_game* g);
uint32_t pga_game_max_priority(const pga_game* g);

/* Normalized pgsolver text (vertices in id order, successors ascending). */
pga_status pga_game_serialize(const pga_game* g, char** out);

/* {"vertices":[{"id","owner","priority","succ":[...]}]} */
pga_status pga_game_to_json(const pga_game* g, char** out);

/* Copy of the game with priorities replaced by the parity encoding of the
 * objective: 2/1 for Buchi targets, 0/1 for co-Buchi. Fails for safety and
 * parity objectives, which have no encoding. */
pga_status pga_game_encode(const pga_game* g, pga_objective obj,
                           const uint32_t* target, size_t target_len, pga_game** out);

/* ------------------------------------------------------------------ */
/* Regions and assumptions                                             */
/* ------------------------------------------------------------------ */

/*
 * Computes the cooperative winning region and the assumption templates for
 * the objective. target/target_len name the target vertex set and are
 * ignored for PGA_OBJ_PARITY (priorities come from the game). For the other
 * objectives target must be non-null; target_len may be 0 for the empty set.
 */
pga_status pga_compute(const pga_game* g, pga_objective obj,
                       const uint32_t* target, size_t target_len,
                       pga_variant variant, pga_result** out);

void pga_result_free(pga_result* r);

size_t pga_result_region_size(const pga_result* r);
int pga_result_region_contains(const pga_result* r, uint32_t v);

/* Copies the region's vertex ids (ascending) into buf; *len gets the count.
 * Fails with PGA_E_INVALID when cap is too small. */
pga_status pga_result_region_vertices(const pga_result* r, uint32_t* buf,
                                      size_t cap, size_t* len);

/* Iteration counters of the region fixpoint (least / greatest variable). */
uint64_t pga_result_mu_iterations(const pga_result* r);
uint64_t pga_result_nu_iterations(const pga_result* r);

/* {"unsafe":[[u,v],...],"colive":[[u,v],...],
 *  "cond_live":[{"condition":[...],"groups":[[[u,v],...],...]},...]} */
pga_status pga_result_assumption_json(const pga_result* r, char** out);

/* LTL rendering over vertex-name atoms; "true" for the empty assumption. */
pga_status pga_result_assumption_ltl(const pga_result* r, char** out);

/* Human-readable listing of the templates. */
pga_status pga_result_assumption_text(const pga_result* r, char** out);

/* Renders an externally supplied assumption (JSON schema above) as LTL. */
pga_status pga_assumption_render_ltl(const pga_game* g, const char* assumption_json,
                                     char** out);

/* ------------------------------------------------------------------ */
/* Verification                                                        */
/* ------------------------------------------------------------------ */

typedef struct pga_check_opts {
    uint32_t max_vertices;       /* witness search bound; 0 = default (8) */
    uint32_t max_strategies;     /* strategy list gate; 0 = default (3) */
    uint64_t max_product_states; /* strategy product gate; 0 = default (50000) */
    int run_permissive;
    int run_implementable;
    int run_sufficient;
    int run_agreement;           /* region agreement across variants and oracle */
} pga_check_opts;

/*
 * Runs the selected verification suites for the objective against either
 * the computed assumption (assumption_json == NULL) or a supplied one.
 * *report receives one line per check plus counterexample lassos;
 * *all_passed is 1 iff no selected check failed. Checks whose bounds are
 * exceeded are reported as skipped and do not fail the run.
 */
pga_status pga_check(const pga_game* g, pga_objective obj,
                     const uint32_t* target, size_t target_len,
                     pga_variant variant, const char* assumption_json,
                     const pga_check_opts* opts, char** report, int* all_passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PGASSUME_H */
