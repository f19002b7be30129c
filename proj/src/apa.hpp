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

#include "fixpoint.hpp"
#include "templates.hpp"

namespace pga {

class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class objective_kind { safety, buchi, cobuchi, parity };

/// Objective over a game graph; target is ignored for parity (priorities rule).
struct objective {
    objective_kind kind = objective_kind::parity;
    vertex_set target;
};

enum class variant { standard, accelerated, linear };

/**
 * Result of an assumption computation: the cooperative winning region, the
 * assumption templates, and the algorithm variant that produced them.
 */
struct apa_result {
    vertex_set region;
    assumption assum;
    variant var = variant::standard;
    objective_kind kind = objective_kind::parity;
};

/// Environment edges leaving w: {(u,v) in E | u in V1 & w, v not in w}.
edge_set unsafe_a(const game_graph& g, const vertex_set& w);

/// Safety assumption: region = cooperative safety region, unsafe edges only.
apa_result safety_apa(const game_graph& g, const vertex_set& u);

/**
 * Buchi assumption. The standard/accelerated variants extract one live group
 * per frontier of the accelerated fixpoint trace,
 *
 *   H_i = (front(X^i) x (X^{i+1} \ front(X^i))) & E,   H_i nonempty,
 *
 * stored as a conditional live group with condition src(H_i). The linear
 * variant computes the groups by attractor peeling in linear time.
 */
apa_result buchi_apa(const game_graph& g, const vertex_set& u,
                     variant var = variant::standard);

/**
 * Co-Buchi assumption: unsafe edges plus co-live edges on the frontiers of
 * the attractor peel toward the safety core (see colive_a_linear). The
 * variant selects the region computation (plain or accelerated fixpoint).
 */
apa_result cobuchi_apa(const game_graph& g, const vertex_set& u,
                       variant var = variant::standard);

/**
 * Parity assumption: computes the cooperative parity region, the unsafe
 * edges leaving it, and then recursively strips the highest priority,
 * collecting co-live edges for odd priorities and conditional live groups
 * for even ones. The variant selects how the per-level co-live edges and
 * live groups are extracted.
 */
apa_result parity_apa(const game_graph& g, variant var = variant::standard);

/// Dispatch on objective kind.
apa_result compute_apa(const game_graph& g, const objective& obj,
                       variant var = variant::standard);

/// Cooperative region only, for the given objective (variant picks pre/tpre).
vertex_set coop_region(const game_graph& g, const objective& obj,
                       variant var = variant::standard);

/**
 * Live groups by attractor peeling (linear time). Requires every alive
 * vertex of g to be cooperatively winning for the Buchi objective on
 * `target`; throws precondition_error otherwise.
 */
std::vector<edge_set> live_a_linear(const game_graph& g, const vertex_set& target);

/**
 * Co-live edges by attractor peeling (linear time). Requires every alive
 * vertex of g to be cooperatively winning for the co-Buchi objective on
 * `target`; throws precondition_error otherwise.
 */
edge_set colive_a_linear(const game_graph& g, const vertex_set& target);

/// Live groups read off a tpre trace (see buchi_apa); exposed for reuse.
std::vector<edge_set> live_groups_from_trace(const game_graph& g, const fixpoint_trace& tr);

} // namespace pga
