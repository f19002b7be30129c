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

#include "game.hpp"

namespace pga {

/**
 * Trace of a two-nested fixpoint run. steps is the X^i sequence of the least
 * fixpoint variable taken from the final iteration of the outer variable:
 * steps[0] = {} and the sequence grows strictly until the last element, which
 * equals result. mu_iterations counts every strict growth step of the least
 * fixpoint variable across the whole run (the quantity the accelerated
 * operator shrinks); nu_iterations counts greatest-fixpoint updates.
 */
struct fixpoint_trace {
    std::vector<vertex_set> steps;
    vertex_set result;
    size_t mu_iterations = 0;
    size_t nu_iterations = 0;
};

/// Vertices with at least one alive successor in u.
vertex_set pre(const game_graph& g, const vertex_set& u);

/**
 * Controllable predecessor for player a: P_a vertices with some successor in
 * u, plus P_{1-a} vertices all of whose successors lie in u. Dead ends are
 * never included (there is no move to control).
 */
vertex_set cpre(const game_graph& g, const vertex_set& u, int a);

/**
 * Attractor for player a, excluding u itself: vertices from which P_a forces
 * a visit to u in at least one and finitely many steps.
 */
vertex_set attr(const game_graph& g, const vertex_set& u, int a);

/**
 * Attractor with distance layers, for strategy extraction. Returns the
 * closure (u plus attracted vertices); layer[v] is 0 on u, the forcing
 * distance on attracted vertices, and UINT32_MAX elsewhere.
 */
vertex_set attr_layers(const game_graph& g, const vertex_set& u, int a,
                       std::vector<uint32_t>& layer);

/// tpre(u) = attr^0(u) | cpre^1(attr^0(u) | u).
vertex_set tpre(const game_graph& g, const vertex_set& u);

/**
 * Frontier of u: the environment vertices added by tpre beyond the player-0
 * attractor, front(u) = tpre(u) \ (attr^0(u) | u). Always a subset of the
 * P1 vertices.
 */
vertex_set front(const game_graph& g, const vertex_set& u);

/// Cooperative safety region, nu Y. u & pre(Y). iterations counts Y updates.
vertex_set safety_coop(const game_graph& g, const vertex_set& u,
                       size_t* iterations = nullptr);

/// Cooperative Buchi region with trace, nu Y. mu X. (u & pre(Y)) | pre(X).
fixpoint_trace buchi_coop(const game_graph& g, const vertex_set& u);

/// Accelerated variant, nu Y. mu X. (u & pre(Y)) | tpre(X). Same result.
fixpoint_trace tbuchi(const game_graph& g, const vertex_set& u);

/// Cooperative co-Buchi region with trace, mu X. nu Y. (u & pre(Y)) | pre(X).
fixpoint_trace cobuchi_coop(const game_graph& g, const vertex_set& u);

/// Accelerated variant, mu X. nu Y. (u & pre(Y)) | tpre(X). Same result.
fixpoint_trace tcobuchi(const game_graph& g, const vertex_set& u);

/**
 * Cooperative parity region by the naive nested fixpoint
 *
 *   tau X_d ... nu X_2 mu X_1 nu X_0 . Union_i (C_i & pre(X_i))
 *
 * over the priorities of g (nu on even indices, mu on odd, d the highest
 * priority among alive vertices). Empty priority classes contribute empty
 * terms and are not re-indexed.
 */
vertex_set parity_coop(const game_graph& g, size_t* pre_evaluations = nullptr);

/// Copy of g with priorities 2 on u and 1 elsewhere (Buchi encoding).
game_graph encode_buchi_priorities(const game_graph& g, const vertex_set& u);

/// Copy of g with priorities 0 on u and 1 elsewhere (co-Buchi encoding).
game_graph encode_cobuchi_priorities(const game_graph& g, const vertex_set& u);

} // namespace pga
