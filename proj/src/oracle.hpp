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

#pragma once

#include "apa.hpp"

namespace pga::oracle {

/**
 * Player-0 strategy as per-vertex round-robin choice lists. A memoryless
 * strategy has lists of length at most one; the parity proof strategy keeps
 * one modular counter per vertex with a longer list and cycles through the
 * list on every move from that vertex. Empty list = undefined (the strategy
 * makes no claim about that vertex).
 */
struct strategy0 {
    std::vector<std::vector<uint32_t>> choices;

    bool memoryless() const {
        for (const auto& l : choices)
            if (l.size() > 1) return false;
        return true;
    }
};

/**
 * Cooperative parity region by cycle analysis: v is winning iff for some even
 * priority p, a strongly connected component of the subgraph of priorities
 * <= p that contains a p-vertex and an internal cycle is reachable from v.
 * Independent of the fixpoint engine.
 */
vertex_set coop_region_bruteforce(const game_graph& g);

/// Cooperative safety region by iterative pruning of vertices without a
/// successor inside the candidate set.
vertex_set coop_safety_bruteforce(const game_graph& g, const vertex_set& u);

/// Cooperative region for any objective, via the brute-force machinery
/// (priority encodings 2/1 for Buchi and 0/1 for co-Buchi).
vertex_set coop_region_oracle(const game_graph& g, const objective& obj);

/**
 * Sure winning regions (W0, W1) of the parity game by the classical
 * recursive algorithm. A player who cannot move loses, so dead ends are
 * winning for the opponent of their owner.
 */
std::pair<vertex_set, vertex_set> zielonka(const game_graph& g);

/// Sure winning region of player 0 for the safety objective "always stay in u".
vertex_set sure_safety_region(const game_graph& g, const vertex_set& u);

struct check_bounds {
    uint32_t max_vertices = 8;       // exhaustive witness search bound
    uint32_t max_strategies = 3;     // per-vertex strategy list gate (parity)
    size_t max_product_states = 50000;
};

struct check_result {
    bool pass = true;
    std::string reason;
    std::optional<lasso> counterexample;
};

/**
 * Permissiveness check (language inclusion on ultimately periodic plays):
 * PASS iff no witness starting in the cooperative winning region satisfies
 * the objective but violates the assumption. On FAIL the counterexample
 * lasso is returned. Throws bound_error beyond the vertex bound.
 */
check_result check_permissive(const game_graph& g, const objective& obj,
                              const assumption& a, const check_bounds& b = {});

/**
 * Structural implementability check: every environment vertex keeps a
 * non-unsafe edge, every co-live source keeps an edge that is neither
 * co-live nor unsafe, and all template edges originate in environment
 * vertices with live-group edges neither unsafe nor co-live.
 */
check_result check_implementable_structural(const game_graph& g, const assumption& a);

/**
 * Builds the proof strategy for the given objective. Safety, Buchi and
 * co-Buchi strategies are memoryless and rank-decreasing with ties broken
 * toward the lowest successor id; Buchi ranks come from the accelerated
 * fixpoint trace, co-Buchi ranks from the attractor peel that also produces
 * the co-live edges. The parity strategy assigns each vertex the list of
 * Buchi strategies of its level in the priority-stripping recursion and
 * round-robins through it.
 */
strategy0 build_proof_strategy(const game_graph& g, const objective& obj);

/**
 * Sufficiency check: restricts the game to the strategy's choices (product
 * with the per-vertex counters when the strategy switches) and searches for
 * a play from the cooperative region that satisfies the assumption but not
 * the objective. PASS iff none exists. Throws bound_error when the strategy
 * lists or the product exceed the bounds.
 */
check_result check_sufficient(const game_graph& g, const objective& obj,
                              const assumption& a, const strategy0& strat,
                              const check_bounds& b = {});

} // namespace pga::oracle
