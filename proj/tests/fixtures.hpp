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

#include <initializer_list>

#include "game.hpp"
#include "gen.hpp"

namespace fixtures {

using namespace pga;

// p (env, prio 0): self-loop and e1 to q; q (sys, prio 1): self-loop.
// The safety/co-Buchi example where e1 must never (or only finitely often)
// be taken.
inline game_graph two_vertex_escape() {
    return parse_pgsolver("parity 1; 0 0 1 0,1 \"p\"; 1 1 0 1 \"q\";");
}

// p (env, prio 0): self-loop and e1 to q; q (sys, prio 1): edge back to p.
// The co-liveness example: e1 may be taken only finitely often.
inline game_graph two_vertex_return() {
    return parse_pgsolver("parity 1; 0 0 1 0,1 \"p\"; 1 1 0 0 \"q\";");
}

// p (sys, prio 2): edges to q and r; q, r (env, prio 1): self-loops, edges
// to each other and back to p (e1 = (q,p), e2 = (r,p)). The live-group
// example: {e1,e2} forms the group.
inline game_graph three_vertex_livegroup() {
    return parse_pgsolver(
        "parity 2; 0 2 0 1,2 \"p\"; 1 1 1 0,1,2 \"q\"; 2 1 1 0,1,2 \"r\";");
}

// v0 (sys): to v2; v1 (env): self-loop and e1 to v0; v2 (sys): self-loop
// and to v1. Buchi target {v0}: the live group on e1 is needed.
inline game_graph chain_left() {
    return parse_pgsolver("parity 2; 0 0 0 2 \"v0\"; 1 0 1 0,1 \"v1\"; 2 0 0 1,2 \"v2\";");
}

// v0 (env): to v1; v1 (env): self-loop, e1 to v0, e2 to v2; v2 (sys):
// self-loop e3 and back to v1. Used for the witness-semantics examples.
inline game_graph chain_middle() {
    return parse_pgsolver("parity 2; 0 0 1 1 \"v0\"; 1 0 1 0,1,2 \"v1\"; 2 0 0 1,2 \"v2\";");
}

// v0 (sys): to v2; v1 (sys): to v0; v2 (env): e1 to v0 and to v1. Buchi
// target {v0}: frontier extraction yields no live groups at all.
inline game_graph chain_right() {
    return parse_pgsolver("parity 2; 0 0 0 2 \"v0\"; 1 0 0 0 \"v1\"; 2 0 1 0,1 \"v2\";");
}

// The 7-vertex parity game (all env vertices, priorities 1..5) whose
// assumption combines all three template kinds: unsafe (v6,v7), co-live
// (v5,v5) and (v6,v5), conditional groups on v1 and v3.
inline game_graph seven_vertex_parity() {
    return parse_pgsolver(
        "parity 6;"
        "0 1 1 0,1 \"v1\";"
        "1 2 1 0,2,3 \"v2\";"
        "2 3 1 0 \"v3\";"
        "3 4 1 1 \"v4\";"
        "4 5 1 3,4,5 \"v5\";"
        "5 4 1 4,5,6 \"v6\";"
        "6 3 1 6 \"v7\";");
}

inline vertex_set vs(const game_graph& g, std::initializer_list<uint32_t> ids) {
    vertex_set s(g.n);
    for (uint32_t v : ids) s.insert(v);
    return s;
}

inline edge_set es(std::initializer_list<edge> edges) {
    return edge_set::of(std::vector<edge>(edges));
}

/// Seeded batch of random games for property suites.
inline std::vector<game_graph> random_games(size_t count, uint32_t max_n,
                                            uint32_t max_priority, uint64_t seed0,
                                            uint32_t deg_hi = 3) {
    std::vector<game_graph> out;
    splitmix64 rng(seed0);
    for (size_t i = 0; i < count; i++) {
        gen_spec spec;
        spec.n = 1 + uint32_t(rng.below(max_n));
        spec.deg_lo = 1;
        spec.deg_hi = deg_hi;
        spec.max_priority = max_priority;
        spec.p1_permille = 200 + uint32_t(rng.below(600));
        spec.seed = rng.next();
        out.push_back(generate(spec));
    }
    return out;
}

/// Deterministic nonempty target set drawn from the alive vertices.
inline vertex_set random_target(const game_graph& g, uint64_t seed) {
    splitmix64 rng(seed);
    vertex_set t(g.n);
    std::vector<uint32_t> alive = g.alive.to_vector();
    size_t want = 1 + rng.below(alive.size());
    for (size_t i = 0; i < want; i++) t.insert(alive[rng.below(alive.size())]);
    return t;
}

} // namespace fixtures
