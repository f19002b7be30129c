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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vertex_set.hpp"

namespace pga {

class parse_error : public std::runtime_error {
public:
    parse_error(size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    size_t line() const { return line_; }

private:
    size_t line_;
};

/**
 * Two-player turn-based game graph with per-vertex priorities.
 *
 * Vertex ids are stable: restrictions mark vertices dead via the alive mask
 * instead of renumbering, so edge sets computed on a restricted graph always
 * refer to the original ids. An edge (u,v) is present iff both endpoints are
 * alive. Graphs produced by parsing or generation have no dead ends;
 * restricted graphs may have them, and every operator treats a dead end as
 * having no outgoing edges.
 *
 * Immutable after construction; share freely across threads.
 */
struct game_graph {
    uint32_t n = 0;
    std::vector<uint8_t> owner;               // 0 = system (P0), 1 = environment (P1)
    std::vector<uint32_t> priority;
    std::vector<std::vector<uint32_t>> succ;  // input order, deduplicated
    std::vector<std::vector<uint32_t>> pred;
    std::vector<vertex_set> succ_bits;
    vertex_set alive;
    std::vector<std::string> name;            // empty string when unnamed

    bool is_alive(uint32_t v) const { return alive.contains(v); }

    /// True iff v has at least one alive successor.
    bool has_alive_succ(uint32_t v) const {
        return succ_bits[v].intersects(alive);
    }

    size_t alive_count() const { return alive.size(); }

    /// Alive out-edges as an edge set (used by oracle-scale code only).
    edge_set alive_edges() const;

    /// True iff both endpoints are alive and (u,v) is an input edge.
    bool has_edge(uint32_t u, uint32_t v) const {
        return u < n && v < n && alive.contains(u) && alive.contains(v) &&
               succ_bits[u].contains(v);
    }

    /// Display label: the pgsolver name when present, else "v<id>".
    std::string label(uint32_t v) const {
        return name[v].empty() ? "v" + std::to_string(v) : name[v];
    }

    /// Highest priority among alive vertices, or -1 if none are alive.
    int64_t max_alive_priority() const;

    /// Alive vertices of priority exactly p.
    vertex_set priority_class(uint32_t p) const;

    /// Rebuilds pred and succ_bits from succ; called by constructors/parsers.
    void finish();
};

/**
 * Parses the pgsolver text format:
 *
 *   parity <maxid>;
 *   <id> <priority> <owner> <succ>(,<succ>)* ["name"];
 *
 * Owner 0 is the system player, 1 the environment player. Every vertex in
 * [0, maxid] must be defined exactly once and must have at least one
 * successor. Throws parse_error on malformed input, duplicate ids, undefined
 * vertices, out-of-range successors, and dead ends.
 */
game_graph parse_pgsolver(const std::string& text);

/// Serializes in normalized form: vertices in id order, successors ascending.
std::string serialize_pgsolver(const game_graph& g);

/**
 * Restriction G|_U: vertices outside U become dead, which removes all edges
 * into and out of them. Owners and priorities are untouched. U must be a
 * subset of the alive vertices. The result may contain dead ends.
 */
game_graph restrict_to(const game_graph& g, const vertex_set& u);

/// JSON dump {"vertices":[{"id","owner","priority","succ":[...]}]} of the alive part.
std::string graph_to_json(const game_graph& g);

} // namespace pga
