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

#include "templates.hpp"

#include <sstream>

#include <json.hpp>

namespace pga {

void validate_lasso(const game_graph& g, const lasso& l) {
    if (l.cycle.empty()) throw std::invalid_argument("lasso cycle is empty");
    auto check = [&](uint32_t u, uint32_t v) {
        if (!g.has_edge(u, v))
            throw std::invalid_argument("lasso transition " + std::to_string(u) + "->" +
                                        std::to_string(v) + " is not an edge");
    };
    for (size_t i = 0; i + 1 < l.stem.size(); i++) check(l.stem[i], l.stem[i + 1]);
    if (!l.stem.empty()) check(l.stem.back(), l.cycle.front());
    for (size_t i = 0; i + 1 < l.cycle.size(); i++) check(l.cycle[i], l.cycle[i + 1]);
    check(l.cycle.back(), l.cycle.front());
}

bool edges_strongly_connected(uint32_t n, const edge_set& es) {
    if (es.empty()) return false;
    vertex_set verts = es.incident(n);
    uint32_t root = es.begin()->src;

    auto reach = [&](bool forward) {
        vertex_set seen(n);
        seen.insert(root);
        std::vector<uint32_t> stack{root};
        while (!stack.empty()) {
            uint32_t v = stack.back();
            stack.pop_back();
            for (const edge& e : es) {
                uint32_t from = forward ? e.src : e.dst;
                uint32_t to = forward ? e.dst : e.src;
                if (from == v && !seen.contains(to)) {
                    seen.insert(to);
                    stack.push_back(to);
                }
            }
        }
        return seen;
    };

    return verts.is_subset_of(reach(true)) && verts.is_subset_of(reach(false));
}

bool valid_inf_edge_set(const game_graph& g, const inf_edge_set& f) {
    if (f.edges.empty()) return false;
    for (const edge& e : f.edges)
        if (!g.has_edge(e.src, e.dst)) return false;
    if (!f.edges.incident(g.n).contains(f.entry)) return false;
    return edges_strongly_connected(g.n, f.edges);
}

bool lasso_satisfies_parity(const game_graph& g, const lasso& l) {
    validate_lasso(g, l);
    uint32_t best = 0;
    for (uint32_t v : l.cycle) best = std::max(best, g.priority[v]);
    return best % 2 == 0;
}

bool inf_set_satisfies_parity(const game_graph& g, const inf_edge_set& f) {
    uint32_t best = 0;
    f.edges.incident(g.n).for_each([&](uint32_t v) { best = std::max(best, g.priority[v]); });
    return best % 2 == 0;
}

bool witness_satisfies_assumption(const game_graph& g, const edge_set& stem_edges,
                                  const inf_edge_set& inf, const assumption& a) {
    for (const edge& e : stem_edges)
        if (!g.has_edge(e.src, e.dst))
            throw std::invalid_argument("witness stem edge is not an edge of the graph");
    if (!valid_inf_edge_set(g, inf))
        throw std::invalid_argument("witness infinite part is not valid over the graph");

    if (a.unsafe.intersects(stem_edges) || a.unsafe.intersects(inf.edges)) return false;
    if (a.colive.intersects(inf.edges)) return false;

    vertex_set inf_verts = inf.edges.incident(g.n);
    for (const conditional_live_group& cg : a.cond_live) {
        if (!cg.condition.intersects(inf_verts)) continue;
        for (const edge_set& h : cg.groups) {
            if (!h.sources(g.n).intersects(inf_verts)) continue;
            if (!h.intersects(inf.edges)) return false;
        }
    }
    return true;
}

witness lasso_to_witness(const game_graph& g, const lasso& l) {
    validate_lasso(g, l);
    witness w;
    w.start = l.stem.empty() ? l.cycle.front() : l.stem.front();
    std::vector<edge> stem;
    for (size_t i = 0; i + 1 < l.stem.size(); i++) stem.push_back({l.stem[i], l.stem[i + 1]});
    if (!l.stem.empty()) stem.push_back({l.stem.back(), l.cycle.front()});
    w.stem_edges = edge_set::of(std::move(stem));
    std::vector<edge> cyc;
    for (size_t i = 0; i + 1 < l.cycle.size(); i++) cyc.push_back({l.cycle[i], l.cycle[i + 1]});
    cyc.push_back({l.cycle.back(), l.cycle.front()});
    w.inf.edges = edge_set::of(std::move(cyc));
    w.inf.entry = l.cycle.front();
    return w;
}

bool lasso_satisfies_assumption(const game_graph& g, const lasso& l, const assumption& a) {
    witness w = lasso_to_witness(g, l);
    return witness_satisfies_assumption(g, w.stem_edges, w.inf, a);
}

namespace {

std::string edge_atom(const game_graph& g, const edge& e) {
    return "(" + g.label(e.src) + " & X " + g.label(e.dst) + ")";
}

std::string edge_disjunction(const game_graph& g, const edge_set& es) {
    std::ostringstream out;
    if (es.size() > 1) out << "(";
    bool first = true;
    for (const edge& e : es) {
        if (!first) out << " | ";
        out << edge_atom(g, e);
        first = false;
    }
    if (es.size() > 1) out << ")";
    return out.str();
}

std::string vertex_disjunction(const game_graph& g, const vertex_set& vs) {
    std::ostringstream out;
    out << "(";
    bool first = true;
    vs.for_each([&](uint32_t v) {
        if (!first) out << " | ";
        out << g.label(v);
        first = false;
    });
    out << ")";
    return out.str();
}

} // namespace

std::string render_ltl(const game_graph& g, const assumption& a) {
    if (a.is_true()) return "true";
    std::vector<std::string> parts;

    if (!a.unsafe.empty()) {
        std::ostringstream out;
        out << "G ";
        if (a.unsafe.size() > 1) out << "(";
        bool first = true;
        for (const edge& e : a.unsafe) {
            if (!first) out << " & ";
            out << "!" << edge_atom(g, e);
            first = false;
        }
        if (a.unsafe.size() > 1) out << ")";
        parts.push_back(out.str());
    }

    if (!a.colive.empty()) {
        std::ostringstream out;
        out << "F G ";
        if (a.colive.size() > 1) out << "(";
        bool first = true;
        for (const edge& e : a.colive) {
            if (!first) out << " & ";
            out << "!" << edge_atom(g, e);
            first = false;
        }
        if (a.colive.size() > 1) out << ")";
        parts.push_back(out.str());
    }

    for (const conditional_live_group& cg : a.cond_live) {
        std::vector<std::string> members;
        for (const edge_set& h : cg.groups) {
            members.push_back("G F " + vertex_disjunction(g, h.sources(g.n)) + " -> G F " +
                              edge_disjunction(g, h));
        }
        std::string body;
        if (members.size() == 1) {
            body = members[0];
        } else {
            for (size_t i = 0; i < members.size(); i++)
                body += (i ? " & " : "") + ("(" + members[i] + ")");
        }
        parts.push_back("G F " + vertex_disjunction(g, cg.condition) + " -> (" + body + ")");
    }

    std::string out;
    for (size_t i = 0; i < parts.size(); i++) {
        if (i) out += " & ";
        out += parts.size() > 1 ? "(" + parts[i] + ")" : parts[i];
    }
    return out;
}

std::string assumption_to_json(const assumption& a) {
    nlohmann::json j;
    auto edges_json = [](const edge_set& es) {
        nlohmann::json arr = nlohmann::json::array();
        for (const edge& e : es) arr.push_back({e.src, e.dst});
        return arr;
    };
    j["unsafe"] = edges_json(a.unsafe);
    j["colive"] = edges_json(a.colive);
    nlohmann::json groups = nlohmann::json::array();
    for (const conditional_live_group& cg : a.cond_live) {
        nlohmann::json jg;
        jg["condition"] = cg.condition.to_vector();
        nlohmann::json hs = nlohmann::json::array();
        for (const edge_set& h : cg.groups) hs.push_back(edges_json(h));
        jg["groups"] = std::move(hs);
        groups.push_back(std::move(jg));
    }
    j["cond_live"] = std::move(groups);
    return j.dump();
}

assumption assumption_from_json(const game_graph& g, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    auto parse_edges = [&](const nlohmann::json& arr) {
        std::vector<edge> es;
        for (const auto& e : arr) {
            uint32_t u = e.at(0).get<uint32_t>();
            uint32_t v = e.at(1).get<uint32_t>();
            if (!g.has_edge(u, v))
                throw std::invalid_argument("assumption edge " + std::to_string(u) + "->" +
                                            std::to_string(v) + " is not an edge of the game");
            es.push_back({u, v});
        }
        return edge_set::of(std::move(es));
    };
    assumption a;
    if (j.contains("unsafe")) a.unsafe = parse_edges(j["unsafe"]);
    if (j.contains("colive")) a.colive = parse_edges(j["colive"]);
    if (j.contains("cond_live")) {
        for (const auto& jg : j["cond_live"]) {
            conditional_live_group cg;
            cg.condition = vertex_set(g.n);
            for (const auto& v : jg.at("condition")) {
                uint32_t id = v.get<uint32_t>();
                if (id >= g.n) throw std::invalid_argument("condition vertex out of range");
                cg.condition.insert(id);
            }
            for (const auto& h : jg.at("groups")) cg.groups.push_back(parse_edges(h));
            a.cond_live.push_back(std::move(cg));
        }
    }
    return a;
}

namespace {

/// All simple paths from `from`, reported as (edge set, endpoint) pairs.
void simple_paths(const game_graph& g, uint32_t from,
                  const std::function<void(const std::vector<edge>&, uint32_t)>& emit) {
    std::vector<edge> path;
    vertex_set on_path(g.n);
    std::function<void(uint32_t)> dfs = [&](uint32_t v) {
        emit(path, v);
        on_path.insert(v);
        for (uint32_t w : g.succ[v]) {
            if (!g.alive.contains(w) || on_path.contains(w)) continue;
            path.push_back({v, w});
            dfs(w);
            path.pop_back();
        }
        on_path.erase(v);
    };
    dfs(from);
}

} // namespace

void enumerate_witnesses(const game_graph& g, uint32_t from, const witness_limits& lim,
                         const std::function<bool(const witness&)>& visit) {
    if (g.alive_count() > lim.max_vertices)
        throw bound_error("witness enumeration bound exceeded: " +
                          std::to_string(g.alive_count()) + " alive vertices > " +
                          std::to_string(lim.max_vertices));
    if (!g.alive.contains(from)) throw std::invalid_argument("start vertex is dead");

    std::vector<edge> all;
    for (const edge& e : g.alive_edges()) all.push_back(e);
    size_t m = all.size();
    if (m > lim.max_edges)
        throw bound_error("witness enumeration bound exceeded: " + std::to_string(m) +
                          " alive edges > " + std::to_string(lim.max_edges));

    // stems first: simple paths from `from`, grouped by endpoint
    std::vector<std::vector<edge_set>> stems_to(g.n);
    simple_paths(g, from, [&](const std::vector<edge>& path, uint32_t endpoint) {
        stems_to[endpoint].push_back(edge_set::of(path));
    });

    bool stop = false;
    for (uint64_t mask = 1; mask < (uint64_t(1) << m) && !stop; mask++) {
        std::vector<edge> chosen;
        for (size_t i = 0; i < m; i++)
            if (mask & (uint64_t(1) << i)) chosen.push_back(all[i]);
        edge_set f = edge_set::of(std::move(chosen));
        if (!edges_strongly_connected(g.n, f)) continue;
        vertex_set verts = f.incident(g.n);
        bool quit = false;
        verts.for_each([&](uint32_t entry) {
            if (quit) return;
            for (const edge_set& stem : stems_to[entry]) {
                witness w;
                w.start = from;
                w.stem_edges = stem;
                w.inf = {f, entry};
                if (!visit(w)) {
                    quit = true;
                    return;
                }
            }
        });
        stop = quit;
    }
}

} // namespace pga
