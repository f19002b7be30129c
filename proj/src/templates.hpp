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

#include <functional>
#include <optional>

#include "game.hpp"

namespace pga {

class bound_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Conditional live group (R, {H_1,...,H_k}): whenever R is visited infinitely
 * often, every group H_i whose sources are visited infinitely often must
 * contribute an edge infinitely often. The unconditional live group template
 * is the special case R = src(H_i).
 */
struct conditional_live_group {
    vertex_set condition;
    std::vector<edge_set> groups;
};

/**
 * Conjunction of an unsafe-edge, a co-live-edge, and a conditional live group
 * template. Sources of all template edges are environment vertices.
 */
struct assumption {
    edge_set unsafe;
    edge_set colive;
    std::vector<conditional_live_group> cond_live;

    bool is_true() const {
        return unsafe.empty() && colive.empty() && cond_live.empty();
    }
};

/**
 * Finite representation of an ultimately periodic play: a stem (possibly
 * empty) followed by a cycle repeated forever. Consecutive vertices, the
 * stem-to-cycle junction, and the cycle wrap-around must all be edges.
 */
struct lasso {
    std::vector<uint32_t> stem;
    std::vector<uint32_t> cycle;
};

/**
 * Canonical form of the edges a play takes infinitely often: an edge set
 * whose induced graph is strongly connected, plus the vertex where the play
 * enters it. An edge set is realizable as an infinite suffix exactly when it
 * is strongly connected on its incident vertices.
 */
struct inf_edge_set {
    edge_set edges;
    uint32_t entry = 0;
};

/**
 * Ultimately periodic play in witness form: the edges of a finite walk from
 * start to inf.entry, then the edges of inf taken infinitely often.
 */
struct witness {
    uint32_t start = 0;
    edge_set stem_edges;
    inf_edge_set inf;
};

/// Throws std::invalid_argument unless all lasso transitions are edges of g.
void validate_lasso(const game_graph& g, const lasso& l);

/// True iff the graph induced by the edge set on its incident vertices is
/// strongly connected (and the set is nonempty).
bool edges_strongly_connected(uint32_t n, const edge_set& es);

/// True iff edges is nonempty, strongly connected on its incident vertices,
/// contains entry, and every edge is an edge of g.
bool valid_inf_edge_set(const game_graph& g, const inf_edge_set& f);

/// Parity verdict on a lasso: the maximum priority on the cycle is even.
bool lasso_satisfies_parity(const game_graph& g, const lasso& l);

/// Parity verdict on an inf edge set (maximum priority over incident vertices).
bool inf_set_satisfies_parity(const game_graph& g, const inf_edge_set& f);

/**
 * Finite-witness semantics of the assumption templates, exact for ultimately
 * periodic plays:
 *   unsafe  - no unsafe edge occurs on the stem or in the cycle;
 *   colive  - no co-live edge occurs in the cycle (stem occurrences allowed);
 *   cond    - for each (R, {H_i}) with R intersecting the cycle vertices,
 *             every H_i with a source among the cycle vertices has an edge
 *             in the cycle.
 */
bool witness_satisfies_assumption(const game_graph& g, const edge_set& stem_edges,
                                  const inf_edge_set& inf, const assumption& a);

/// Lasso overload; throws std::invalid_argument if the lasso is not over g.
bool lasso_satisfies_assumption(const game_graph& g, const lasso& l, const assumption& a);

/// Splits a lasso into (stem edge set, inf edge set) witness form.
witness lasso_to_witness(const game_graph& g, const lasso& l);

/**
 * Renders the assumption as an LTL formula over vertex-name atoms, with edge
 * atoms desugared as "u & X v". The empty assumption renders as "true".
 */
std::string render_ltl(const game_graph& g, const assumption& a);

/// JSON round-trip using the schema
/// {"unsafe":[[u,v],...],"colive":[[u,v],...],
///  "cond_live":[{"condition":[...],"groups":[[[u,v],...],...]},...]}.
std::string assumption_to_json(const assumption& a);
assumption assumption_from_json(const game_graph& g, const std::string& text);

struct witness_limits {
    uint32_t max_vertices = 10;
    uint32_t max_edges = 20;
};

/**
 * Enumerates every witness rooted at `from`: each strongly connected edge
 * subset F of the alive graph paired with each simple stem from `from` to a
 * vertex of F (the entry), including the empty stem when `from` lies in F.
 * Combinatorial; throws bound_error when the alive graph exceeds the limit.
 * The callback returns false to stop early.
 */
void enumerate_witnesses(const game_graph& g, uint32_t from, const witness_limits& lim,
                         const std::function<bool(const witness&)>& visit);

} // namespace pga
