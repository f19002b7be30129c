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

#include "oracle.hpp"

#include <deque>
#include <unordered_map>

namespace pga::oracle {

namespace {

/// Iterative Tarjan over the alive subgraph induced by `within`.
std::vector<std::vector<uint32_t>> scc_decompose(const game_graph& g, const vertex_set& within) {
    constexpr uint32_t none = UINT32_MAX;
    std::vector<uint32_t> index(g.n, none), low(g.n, 0);
    std::vector<bool> on_stack(g.n, false);
    std::vector<uint32_t> stack;
    std::vector<std::vector<uint32_t>> sccs;
    uint32_t counter = 0;

    struct frame {
        uint32_t v;
        size_t next_succ;
    };

    std::vector<frame> call;
    within.for_each([&](uint32_t root) {
        if (index[root] != none) return;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            frame& f = call.back();
            uint32_t v = f.v;
            if (f.next_succ < g.succ[v].size()) {
                uint32_t w = g.succ[v][f.next_succ++];
                if (!within.contains(w)) continue;
                if (index[w] == none) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    std::vector<uint32_t> comp;
                    for (;;) {
                        uint32_t w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp.push_back(w);
                        if (w == v) break;
                    }
                    sccs.push_back(std::move(comp));
                }
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    });
    return sccs;
}

vertex_set backward_reach(const game_graph& g, const vertex_set& targets, const vertex_set& domain) {
    vertex_set seen = targets & domain;
    std::deque<uint32_t> queue;
    seen.for_each([&](uint32_t v) { queue.push_back(v); });
    while (!queue.empty()) {
        uint32_t w = queue.front();
        queue.pop_front();
        for (uint32_t v : g.pred[w]) {
            if (!domain.contains(v) || seen.contains(v)) continue;
            seen.insert(v);
            queue.push_back(v);
        }
    }
    return seen;
}

vertex_set forward_reach(const game_graph& g, const vertex_set& sources, const vertex_set& domain) {
    vertex_set seen = sources & domain;
    std::deque<uint32_t> queue;
    seen.for_each([&](uint32_t v) { queue.push_back(v); });
    while (!queue.empty()) {
        uint32_t v = queue.front();
        queue.pop_front();
        for (uint32_t w : g.succ[v]) {
            if (!domain.contains(w) || seen.contains(w)) continue;
            seen.insert(w);
            queue.push_back(w);
        }
    }
    return seen;
}

/// Shortest path (vertex sequence) within domain, or empty if unreachable.
std::vector<uint32_t> bfs_path(const game_graph& g, uint32_t from, const vertex_set& to,
                               const vertex_set& domain) {
    if (!domain.contains(from)) return {};
    std::vector<uint32_t> parent(g.n, UINT32_MAX);
    std::deque<uint32_t> queue{from};
    vertex_set seen(g.n);
    seen.insert(from);
    if (to.contains(from)) return {from};
    while (!queue.empty()) {
        uint32_t v = queue.front();
        queue.pop_front();
        for (uint32_t w : g.succ[v]) {
            if (!domain.contains(w) || seen.contains(w)) continue;
            seen.insert(w);
            parent[w] = v;
            if (to.contains(w)) {
                std::vector<uint32_t> path{w};
                while (path.back() != from) path.push_back(parent[path.back()]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(w);
        }
    }
    return {};
}

} // namespace

vertex_set coop_region_bruteforce(const game_graph& g) {
    vertex_set result(g.n);
    std::vector<uint32_t> evens;
    g.alive.for_each([&](uint32_t v) {
        if (g.priority[v] % 2 == 0) evens.push_back(g.priority[v]);
    });
    std::sort(evens.begin(), evens.end());
    evens.erase(std::unique(evens.begin(), evens.end()), evens.end());

    for (uint32_t p : evens) {
        vertex_set within(g.n);
        g.alive.for_each([&](uint32_t v) {
            if (g.priority[v] <= p) within.insert(v);
        });
        vertex_set good(g.n);
        for (const auto& comp : scc_decompose(g, within)) {
            bool has_p = false;
            for (uint32_t v : comp)
                if (g.priority[v] == p) has_p = true;
            if (!has_p) continue;
            bool cyclic = comp.size() > 1;
            if (!cyclic)
                cyclic = g.succ_bits[comp[0]].contains(comp[0]);
            if (!cyclic) continue;
            for (uint32_t v : comp) good.insert(v);
        }
        result |= backward_reach(g, good, g.alive);
    }
    return result;
}

vertex_set coop_safety_bruteforce(const game_graph& g, const vertex_set& u) {
    vertex_set z = u & g.alive;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<uint32_t> drop;
        z.for_each([&](uint32_t v) {
            if (!g.succ_bits[v].intersects(z)) drop.push_back(v);
        });
        for (uint32_t v : drop) {
            z.erase(v);
            changed = true;
        }
    }
    return z;
}

vertex_set coop_region_oracle(const game_graph& g, const objective& obj) {
    switch (obj.kind) {
        case objective_kind::safety: return coop_safety_bruteforce(g, obj.target);
        case objective_kind::buchi:
            return coop_region_bruteforce(encode_buchi_priorities(g, obj.target));
        case objective_kind::cobuchi:
            return coop_region_bruteforce(encode_cobuchi_priorities(g, obj.target));
        case objective_kind::parity: return coop_region_bruteforce(g);
    }
    throw std::invalid_argument("unknown objective");
}

namespace {

/// Sure attractor of player a toward t within subgame r, including t.
vertex_set sure_attr(const game_graph& g, const vertex_set& r, const vertex_set& t, int a) {
    vertex_set closure = t & r;
    std::deque<uint32_t> queue;
    closure.for_each([&](uint32_t v) { queue.push_back(v); });
    std::vector<uint32_t> escapes(g.n, 0);
    r.for_each([&](uint32_t v) {
        if (g.owner[v] != a) escapes[v] = uint32_t((g.succ_bits[v] & r).size());
    });
    while (!queue.empty()) {
        uint32_t w = queue.front();
        queue.pop_front();
        for (uint32_t v : g.pred[w]) {
            if (!r.contains(v) || closure.contains(v)) continue;
            bool attract = false;
            if (g.owner[v] == a) {
                attract = true;
            } else if (escapes[v] > 0 && --escapes[v] == 0) {
                attract = true;
            }
            if (attract) {
                closure.insert(v);
                queue.push_back(v);
            }
        }
    }
    return closure;
}

std::pair<vertex_set, vertex_set> zielonka_core(const game_graph& g, const vertex_set& r) {
    std::pair<vertex_set, vertex_set> out{vertex_set(g.n), vertex_set(g.n)};
    if (r.empty()) return out;

    uint32_t d = 0;
    r.for_each([&](uint32_t v) { d = std::max(d, g.priority[v]); });
    int a = int(d % 2);

    vertex_set cd(g.n);
    r.for_each([&](uint32_t v) {
        if (g.priority[v] == d) cd.insert(v);
    });

    vertex_set attr_a = sure_attr(g, r, cd, a);
    auto sub = zielonka_core(g, r - attr_a);
    vertex_set& opp_sub = (a == 0) ? sub.second : sub.first;

    if (opp_sub.empty()) {
        (a == 0 ? out.first : out.second) = r;
        return out;
    }
    vertex_set attr_opp = sure_attr(g, r, opp_sub, 1 - a);
    auto sub2 = zielonka_core(g, r - attr_opp);
    out.first = sub2.first;
    out.second = sub2.second;
    ((a == 0) ? out.second : out.first) |= attr_opp;
    return out;
}

} // namespace

std::pair<vertex_set, vertex_set> zielonka(const game_graph& g) {
    vertex_set w0(g.n), w1(g.n);
    vertex_set r = g.alive;
    // a player who cannot move loses: peel dead ends and their attractors
    for (;;) {
        vertex_set de0(g.n), de1(g.n);
        r.for_each([&](uint32_t v) {
            if ((g.succ_bits[v] & r).empty())
                (g.owner[v] == 0 ? de0 : de1).insert(v);
        });
        if (de0.empty() && de1.empty()) break;
        if (!de0.empty()) {
            vertex_set a = sure_attr(g, r, de0, 1);
            w1 |= a;
            r -= a;
        }
        de1 &= r;
        if (!de1.empty()) {
            vertex_set a = sure_attr(g, r, de1, 0);
            w0 |= a;
            r -= a;
        }
    }
    auto core = zielonka_core(g, r);
    return {w0 | core.first, w1 | core.second};
}

vertex_set sure_safety_region(const game_graph& g, const vertex_set& u) {
    vertex_set z = u & g.alive;
    for (;;) {
        vertex_set next(g.n);
        z.for_each([&](uint32_t v) {
            vertex_set succs = g.succ_bits[v] & g.alive;
            if (g.owner[v] == 0) {
                if (succs.intersects(z)) next.insert(v);
            } else {
                if (succs.is_subset_of(z)) next.insert(v);
            }
        });
        if (next == z) return z;
        z = next;
    }
}

check_result check_implementable_structural(const game_graph& g, const assumption& a) {
    auto fail = [](std::string why) {
        return check_result{false, std::move(why), std::nullopt};
    };

    for (const edge& e : a.unsafe)
        if (g.owner[e.src] != 1)
            return fail("unsafe edge " + g.label(e.src) + "->" + g.label(e.dst) +
                        " does not originate in an environment vertex");
    for (const edge& e : a.colive)
        if (g.owner[e.src] != 1)
            return fail("co-live edge " + g.label(e.src) + "->" + g.label(e.dst) +
                        " does not originate in an environment vertex");

    vertex_set env(g.n);
    g.alive.for_each([&](uint32_t v) {
        if (g.owner[v] == 1) env.insert(v);
    });

    bool ok = true;
    std::string why;
    env.for_each([&](uint32_t v) {
        if (!ok || !g.has_alive_succ(v)) return;
        bool has_safe = false;
        for (uint32_t w : g.succ[v])
            if (g.alive.contains(w) && !a.unsafe.contains({v, w})) has_safe = true;
        if (!has_safe) {
            ok = false;
            why = "every edge of " + g.label(v) + " is unsafe";
        }
    });
    if (!ok) return fail(why);

    for (const edge& e : a.colive) {
        bool has_free = false;
        for (uint32_t w : g.succ[e.src])
            if (g.alive.contains(w) && !a.unsafe.contains({e.src, w}) &&
                !a.colive.contains({e.src, w}))
                has_free = true;
        if (!has_free)
            return fail("co-live source " + g.label(e.src) +
                        " keeps no edge that is neither co-live nor unsafe");
    }

    for (const conditional_live_group& cg : a.cond_live) {
        for (const edge_set& h : cg.groups) {
            for (const edge& e : h) {
                if (g.owner[e.src] != 1)
                    return fail("live group edge " + g.label(e.src) + "->" + g.label(e.dst) +
                                " does not originate in an environment vertex");
                if (a.unsafe.contains(e))
                    return fail("live group edge " + g.label(e.src) + "->" + g.label(e.dst) +
                                " is unsafe");
                if (a.colive.contains(e))
                    return fail("live group edge " + g.label(e.src) + "->" + g.label(e.dst) +
                                " is co-live");
            }
        }
    }
    return {true, "", std::nullopt};
}

namespace {

uint32_t lowest_succ_in(const game_graph& g, uint32_t v, const vertex_set& target) {
    uint32_t best = UINT32_MAX;
    for (uint32_t w : g.succ[v])
        if (g.alive.contains(w) && target.contains(w)) best = std::min(best, w);
    return best;
}

/// Ranks over a trace: rank[v] = least i >= 1 with v in steps[i], 0 if never.
std::vector<uint32_t> trace_ranks(const game_graph& g, const fixpoint_trace& tr) {
    std::vector<uint32_t> rank(g.n, 0);
    for (size_t i = tr.steps.size(); i-- > 1;)
        tr.steps[i].for_each([&](uint32_t v) { rank[v] = uint32_t(i); });
    return rank;
}

/// Memoryless Buchi proof strategy: rank- and attractor-layer-decreasing.
void fill_buchi_choices(const game_graph& g, const fixpoint_trace& tr,
                        std::vector<std::vector<uint32_t>>& choices) {
    std::vector<uint32_t> rank = trace_ranks(g, tr);
    for (size_t i = 1; i < tr.steps.size(); i++) {
        vertex_set newly = tr.steps[i] - tr.steps[i - 1];
        std::vector<uint32_t> layer;
        if (i >= 2) attr_layers(g, tr.steps[i - 1], 0, layer);
        newly.for_each([&](uint32_t v) {
            if (g.owner[v] != 0) return;
            uint32_t pick = UINT32_MAX;
            if (i >= 2 && layer[v] != UINT32_MAX) {
                for (uint32_t w : g.succ[v])
                    if (g.alive.contains(w) && layer[w] < layer[v]) pick = std::min(pick, w);
            }
            if (pick == UINT32_MAX) {
                for (uint32_t w : g.succ[v])
                    if (g.alive.contains(w) && rank[w] != 0 && rank[w] < i) pick = std::min(pick, w);
            }
            if (pick == UINT32_MAX) pick = lowest_succ_in(g, v, tr.result);
            if (pick == UINT32_MAX)
                throw std::invalid_argument("no viable strategy choice at " + g.label(v));
            choices[v] = {pick};
        });
    }
}

/**
 * Memoryless co-Buchi proof strategy, aligned with the attractor peel that
 * produces the co-live edges: stay inside the safety core, and elsewhere
 * follow the attractor layers toward it. A trace-rank strategy is not good
 * enough here: it may step onto an environment vertex from which the play
 * can orbit back without crossing any co-live edge.
 */
void fill_cobuchi_choices(const game_graph& g, const vertex_set& target,
                          std::vector<std::vector<uint32_t>>& choices) {
    vertex_set u = safety_coop(g, target & g.alive);
    u.for_each([&](uint32_t v) {
        if (g.owner[v] != 0) return;
        uint32_t pick = lowest_succ_in(g, v, u);
        if (pick == UINT32_MAX)
            throw std::invalid_argument("no viable strategy choice at " + g.label(v));
        choices[v] = {pick};
    });
    while (u != g.alive) {
        std::vector<uint32_t> layer;
        vertex_set closure = attr_layers(g, u, 0, layer);
        (closure - u).for_each([&](uint32_t v) {
            if (g.owner[v] != 0) return;
            uint32_t pick = UINT32_MAX;
            for (uint32_t w : g.succ[v])
                if (g.alive.contains(w) && layer[w] < layer[v]) pick = std::min(pick, w);
            if (pick == UINT32_MAX)
                throw std::invalid_argument("no viable strategy choice at " + g.label(v));
            choices[v] = {pick};
        });
        vertex_set c = cpre(g, closure, 1) - closure;
        if (c.empty() && closure == u) break;  // remaining vertices are not winning
        u = closure | c;
    }
}

void fill_parity_choices(const game_graph& g0, std::vector<std::vector<uint32_t>>& choices) {
    game_graph g = restrict_to(g0, parity_coop(g0));
    for (;;) {
        int64_t d64 = g.max_alive_priority();
        if (d64 < 0) return;
        uint32_t d = uint32_t(d64);
        vertex_set cd = g.priority_class(d);
        vertex_set w_not_d(g.n);

        if (d % 2 == 1) {
            w_not_d = parity_coop(restrict_to(g, g.alive - cd));
            std::vector<std::vector<uint32_t>> piece(g.n);
            fill_cobuchi_choices(g, w_not_d, piece);
            (g.alive - w_not_d).for_each([&](uint32_t v) {
                if (g.owner[v] == 0 && !piece[v].empty()) choices[v] = piece[v];
            });
        } else {
            vertex_set wd = buchi_coop(g, cd).result;
            w_not_d = g.alive - wd;
            game_graph sub = restrict_to(g, wd);
            std::vector<std::vector<std::vector<uint32_t>>> pieces;
            for (uint32_t i = 1; i < std::max(d, 1u); i += 2) {
                vertex_set target(g.n);
                for (uint32_t j = i + 1; j <= d; j += 2) target |= sub.priority_class(j);
                std::vector<std::vector<uint32_t>> piece(g.n);
                fill_buchi_choices(sub, tbuchi(sub, target), piece);
                pieces.push_back(std::move(piece));
            }
            if (pieces.empty()) {
                // all priorities even at this level: any region-preserving move
                std::vector<std::vector<uint32_t>> piece(g.n);
                fill_buchi_choices(sub, tbuchi(sub, sub.priority_class(d) & wd), piece);
                pieces.push_back(std::move(piece));
            }
            wd.for_each([&](uint32_t v) {
                if (g.owner[v] != 0) return;
                std::vector<uint32_t> list;
                for (const auto& piece : pieces)
                    if (!piece[v].empty()) list.push_back(piece[v][0]);
                if (!list.empty()) choices[v] = std::move(list);
            });
        }

        if (d == 0) return;
        g = restrict_to(g, w_not_d);
        g.alive.for_each([&](uint32_t v) {
            if (g.priority[v] == d) g.priority[v] = 0;
        });
    }
}

} // namespace

strategy0 build_proof_strategy(const game_graph& g, const objective& obj) {
    strategy0 s;
    s.choices.assign(g.n, {});
    switch (obj.kind) {
        case objective_kind::safety: {
            vertex_set z = safety_coop(g, obj.target & g.alive);
            z.for_each([&](uint32_t v) {
                if (g.owner[v] != 0) return;
                uint32_t pick = lowest_succ_in(g, v, z);
                if (pick == UINT32_MAX)
                    throw std::invalid_argument("no viable strategy choice at " + g.label(v));
                s.choices[v] = {pick};
            });
            break;
        }
        case objective_kind::buchi:
            fill_buchi_choices(g, tbuchi(g, obj.target), s.choices);
            break;
        case objective_kind::cobuchi: {
            vertex_set region = cobuchi_coop(g, obj.target).result;
            fill_cobuchi_choices(restrict_to(g, region), obj.target, s.choices);
            break;
        }
        case objective_kind::parity:
            fill_parity_choices(g, s.choices);
            break;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Witness search machinery shared by the permissiveness and sufficiency checks.
//
// Both checks ask whether some ultimately periodic play exists whose cycle is
// a strongly connected edge set with certain membership properties. For a
// fixed cycle vertex set, satisfaction of the template conjunction is
// monotone in the cycle edge set, so it suffices to examine maximal edge
// sets; violation of a single live group is witnessed by the maximal edge
// set avoiding that group. This keeps the search exhaustive without
// enumerating all 2^m edge subsets.
// ---------------------------------------------------------------------------

namespace {

/// Closed walk from entry covering every edge of f (edges may repeat).
std::vector<uint32_t> cover_cycle(uint32_t n, const edge_set& f, uint32_t entry) {
    std::vector<std::vector<uint32_t>> adj(n);
    for (const edge& e : f) adj[e.src].push_back(e.dst);
    std::vector<edge> remaining(f.begin(), f.end());

    auto path_within = [&](uint32_t from, uint32_t to) {
        std::vector<uint32_t> parent(n, UINT32_MAX);
        std::deque<uint32_t> queue{from};
        std::vector<bool> seen(n, false);
        seen[from] = true;
        if (from == to) return std::vector<uint32_t>{from};
        while (!queue.empty()) {
            uint32_t v = queue.front();
            queue.pop_front();
            for (uint32_t w : adj[v]) {
                if (seen[w]) continue;
                seen[w] = true;
                parent[w] = v;
                if (w == to) {
                    std::vector<uint32_t> path{w};
                    while (path.back() != from) path.push_back(parent[path.back()]);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                queue.push_back(w);
            }
        }
        return std::vector<uint32_t>{};
    };

    std::vector<uint32_t> walk{entry};
    uint32_t cur = entry;
    while (!remaining.empty()) {
        // take a pending edge from cur if possible, else move to one
        auto it = std::find_if(remaining.begin(), remaining.end(),
                               [&](const edge& e) { return e.src == cur; });
        if (it == remaining.end()) {
            uint32_t target = remaining.front().src;
            std::vector<uint32_t> hop = path_within(cur, target);
            for (size_t i = 1; i < hop.size(); i++) walk.push_back(hop[i]);
            cur = target;
            continue;
        }
        walk.push_back(it->dst);
        cur = it->dst;
        remaining.erase(it);
    }
    if (cur != entry) {
        std::vector<uint32_t> hop = path_within(cur, entry);
        for (size_t i = 1; i < hop.size(); i++) walk.push_back(hop[i]);
    }
    walk.pop_back();  // wrap-around closes the cycle
    if (walk.empty()) walk.push_back(entry);
    return walk;
}

lasso make_lasso(const std::vector<uint32_t>& stem_path, uint32_t n, const edge_set& f,
                 uint32_t entry) {
    lasso l;
    l.cycle = cover_cycle(n, f, entry);
    if (stem_path.size() > 1 || (stem_path.size() == 1 && stem_path[0] != entry)) {
        l.stem = stem_path;
        // rotate-free: stem ends at entry's predecessor position
        if (!l.stem.empty() && l.stem.back() == entry && l.cycle.front() == entry)
            l.stem.pop_back();
    }
    return l;
}

bool tail_phi_on_vertices(const game_graph& g, const objective& obj, const vertex_set& t) {
    switch (obj.kind) {
        case objective_kind::safety: return t.is_subset_of(obj.target);
        case objective_kind::buchi: return t.intersects(obj.target);
        case objective_kind::cobuchi: return t.is_subset_of(obj.target);
        case objective_kind::parity: {
            uint32_t best = 0;
            t.for_each([&](uint32_t v) { best = std::max(best, g.priority[v]); });
            return best % 2 == 0;
        }
    }
    return false;
}

} // namespace

check_result check_permissive(const game_graph& g, const objective& obj, const assumption& a,
                              const check_bounds& b) {
    if (g.alive_count() > b.max_vertices)
        throw bound_error("permissiveness check bound exceeded: " +
                          std::to_string(g.alive_count()) + " alive vertices > " +
                          std::to_string(b.max_vertices));

    vertex_set domain = (obj.kind == objective_kind::safety) ? (obj.target & g.alive) : g.alive;
    vertex_set zstar = coop_region_oracle(g, obj);
    vertex_set from_z = forward_reach(g, zstar & domain, domain);

    std::vector<uint32_t> vs = g.alive.to_vector();
    size_t nn = vs.size();

    for (uint64_t mask = 1; mask < (uint64_t(1) << nn); mask++) {
        vertex_set t(g.n);
        for (size_t i = 0; i < nn; i++)
            if (mask & (uint64_t(1) << i)) t.insert(vs[i]);

        std::vector<edge> internal;
        t.for_each([&](uint32_t v) {
            for (uint32_t w : g.succ[v])
                if (g.alive.contains(w) && t.contains(w)) internal.push_back({v, w});
        });
        edge_set et = edge_set::of(std::move(internal));
        if (et.empty()) continue;
        if (et.incident(g.n) != t || !edges_strongly_connected(g.n, et)) continue;
        if (!tail_phi_on_vertices(g, obj, t)) continue;

        vertex_set to_t = backward_reach(g, t, domain);
        vertex_set starts = to_t & zstar;
        if (starts.empty()) continue;
        uint32_t start = starts.to_vector().front();

        auto finish = [&](const edge_set& f, const std::string& why) {
            std::vector<uint32_t> stem = bfs_path(g, start, f.incident(g.n), domain);
            uint32_t entry = stem.empty() ? start : stem.back();
            check_result r{false, why, make_lasso(stem, g.n, f, entry)};
            return r;
        };

        if (a.unsafe.intersects(et))
            return finish(et, "objective-satisfying play uses an unsafe edge in its cycle");
        if (a.colive.intersects(et))
            return finish(et, "objective-satisfying play uses a co-live edge in its cycle");

        for (const conditional_live_group& cg : a.cond_live) {
            if (!cg.condition.intersects(t)) continue;
            for (const edge_set& h : cg.groups) {
                if (!h.sources(g.n).intersects(t)) continue;
                edge_set reduced = et;
                reduced -= h;
                if (reduced.empty()) continue;
                if (reduced.incident(g.n) != t || !edges_strongly_connected(g.n, reduced))
                    continue;
                return finish(reduced,
                              "objective-satisfying play starves a live group whose sources "
                              "it visits infinitely often");
            }
        }

        for (const edge& e : a.unsafe) {
            if (!domain.contains(e.src) || !domain.contains(e.dst)) continue;
            if (!from_z.contains(e.src) || !to_t.contains(e.dst)) continue;
            vertex_set src_only(g.n);
            src_only.insert(e.src);
            vertex_set stem_starts = backward_reach(g, src_only, domain) & zstar;
            if (stem_starts.empty()) continue;
            uint32_t s0 = stem_starts.to_vector().front();
            std::vector<uint32_t> head = bfs_path(g, s0, src_only, domain);
            std::vector<uint32_t> tail = bfs_path(g, e.dst, t, domain);
            std::vector<uint32_t> stem = head;
            for (uint32_t v : tail) stem.push_back(v);
            uint32_t entry = stem.back();
            return {false, "objective-satisfying play crosses an unsafe edge on its stem",
                    make_lasso(stem, g.n, et, entry)};
        }
    }
    return {true, "", std::nullopt};
}

// ---------------------------------------------------------------------------
// Sufficiency: product of the game with the strategy's per-vertex counters,
// then a component-based search for a play satisfying the assumption but not
// the objective.
// ---------------------------------------------------------------------------

namespace {

struct product_graph {
    std::vector<uint32_t> base;                    // node -> base vertex
    std::vector<std::vector<uint32_t>> out;        // node -> successor nodes
    std::vector<std::vector<uint32_t>> in;         // node -> predecessor nodes
    std::vector<uint32_t> starts;

    size_t size() const { return base.size(); }
};

struct streett_pair {
    const vertex_set* cond;     // base vertices that must recur
    vertex_set src;             // base sources of the group
    const edge_set* edges;      // base edges that must then recur
};

struct product_searcher {
    const game_graph& g;
    const product_graph& p;
    const assumption& a;
    std::vector<streett_pair> pairs;

    bool edge_unsafe(uint32_t x, uint32_t y) const {
        return a.unsafe.contains({p.base[x], p.base[y]});
    }
    bool edge_colive(uint32_t x, uint32_t y) const {
        return a.colive.contains({p.base[x], p.base[y]});
    }

    /// SCCs of the assumption-respecting subgraph induced by `within`.
    std::vector<std::vector<uint32_t>> sccs(const std::vector<char>& within) const {
        constexpr uint32_t none = UINT32_MAX;
        uint32_t n = uint32_t(p.size());
        std::vector<uint32_t> index(n, none), low(n, 0);
        std::vector<bool> on_stack(n, false);
        std::vector<uint32_t> stack;
        std::vector<std::vector<uint32_t>> comps;
        uint32_t counter = 0;
        struct frame { uint32_t v; size_t next; };
        std::vector<frame> call;
        for (uint32_t root = 0; root < n; root++) {
            if (!within[root] || index[root] != none) continue;
            call.push_back({root, 0});
            index[root] = low[root] = counter++;
            stack.push_back(root);
            on_stack[root] = true;
            while (!call.empty()) {
                frame& f = call.back();
                uint32_t v = f.v;
                if (f.next < p.out[v].size()) {
                    uint32_t w = p.out[v][f.next++];
                    if (!within[w] || edge_unsafe(v, w) || edge_colive(v, w)) continue;
                    if (index[w] == none) {
                        index[w] = low[w] = counter++;
                        stack.push_back(w);
                        on_stack[w] = true;
                        call.push_back({w, 0});
                    } else if (on_stack[w]) {
                        low[v] = std::min(low[v], index[w]);
                    }
                } else {
                    if (low[v] == index[v]) {
                        std::vector<uint32_t> comp;
                        for (;;) {
                            uint32_t w = stack.back();
                            stack.pop_back();
                            on_stack[w] = false;
                            comp.push_back(w);
                            if (w == v) break;
                        }
                        std::sort(comp.begin(), comp.end());
                        comps.push_back(std::move(comp));
                    }
                    call.pop_back();
                    if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
                }
            }
        }
        std::sort(comps.begin(), comps.end(),
                  [](const auto& x, const auto& y) { return x.front() < y.front(); });
        return comps;
    }

    /// Internal F-edges of a component (unsafe and co-live edges excluded).
    std::vector<std::pair<uint32_t, uint32_t>> component_edges(
        const std::vector<uint32_t>& comp, const std::vector<char>& within) const {
        std::vector<std::pair<uint32_t, uint32_t>> es;
        for (uint32_t v : comp)
            for (uint32_t w : p.out[v])
                if (within[w] && std::binary_search(comp.begin(), comp.end(), w) &&
                    !edge_unsafe(v, w) && !edge_colive(v, w))
                    es.push_back({v, w});
        return es;
    }

    struct found {
        std::vector<uint32_t> comp;
        std::vector<std::pair<uint32_t, uint32_t>> edges;
        uint32_t entry;
    };

    /**
     * Searches `within` for a component whose maximal internal edge set
     * satisfies every activated live group, intersects `required` (when
     * nonempty), and is reachable per `reach`. When a component activates a
     * group without containing any of its edges, every admissible cycle
     * inside must drop either the condition or the group sources, so both
     * reductions are searched.
     */
    std::optional<found> search(std::vector<char> within, const vertex_set* required,
                                const std::vector<char>& reach) const {
        for (const auto& comp : sccs(within)) {
            auto es = component_edges(comp, within);
            if (es.empty()) continue;
            if (comp.size() == 1) {
                bool self = false;
                for (auto& e : es)
                    if (e.first == e.second) self = true;
                if (!self) continue;
            }

            vertex_set base_verts(g.n);
            for (uint32_t v : comp) base_verts.insert(p.base[v]);

            const streett_pair* bad = nullptr;
            for (const streett_pair& sp : pairs) {
                if (!sp.cond->intersects(base_verts)) continue;
                if (!sp.src.intersects(base_verts)) continue;
                bool hit = false;
                for (auto& e : es)
                    if (sp.edges->contains({p.base[e.first], p.base[e.second]})) hit = true;
                if (!hit) {
                    bad = &sp;
                    break;
                }
            }

            if (!bad) {
                if (required && !required->intersects(base_verts)) continue;
                uint32_t entry = UINT32_MAX;
                for (uint32_t v : comp)
                    if (reach[v]) { entry = v; break; }
                if (entry == UINT32_MAX) continue;
                return found{comp, es, entry};
            }

            for (int way = 0; way < 2; way++) {
                std::vector<char> sub(p.size(), 0);
                const vertex_set& drop = way == 0 ? *bad->cond : bad->src;
                bool shrunk = false;
                for (uint32_t v : comp) {
                    if (drop.contains(p.base[v])) { shrunk = true; continue; }
                    sub[v] = 1;
                }
                if (!shrunk) continue;
                auto r = search(sub, required, reach);
                if (r) return r;
            }
        }
        return std::nullopt;
    }
};

} // namespace

check_result check_sufficient(const game_graph& g, const objective& obj, const assumption& a,
                              const strategy0& strat, const check_bounds& b) {
    if (g.alive_count() > b.max_vertices)
        throw bound_error("sufficiency check bound exceeded: " +
                          std::to_string(g.alive_count()) + " alive vertices > " +
                          std::to_string(b.max_vertices));

    vertex_set zstar = coop_region_oracle(g, obj);

    // per-vertex counters: only vertices with genuine alternatives get a digit
    std::vector<uint32_t> digit_of(g.n, UINT32_MAX);
    std::vector<uint32_t> radix;
    uint64_t mem_states = 1;
    zstar.for_each([&](uint32_t v) {
        if (g.owner[v] != 0) return;
        if (strat.choices[v].empty())
            throw std::invalid_argument("strategy undefined on region vertex " + g.label(v));
        size_t k = strat.choices[v].size();
        if (k > b.max_strategies)
            throw bound_error("strategy list at " + g.label(v) + " exceeds the gate of " +
                              std::to_string(b.max_strategies));
        if (k > 1) {
            digit_of[v] = uint32_t(radix.size());
            radix.push_back(uint32_t(k));
            mem_states *= k;
            if (mem_states > b.max_product_states)
                throw bound_error("strategy product exceeds the state gate");
        }
    });

    auto decode_digit = [&](uint64_t mem, uint32_t digit) {
        for (uint32_t i = 0; i < digit; i++) mem /= radix[i];
        return uint32_t(mem % radix[digit]);
    };
    auto bump_digit = [&](uint64_t mem, uint32_t digit) {
        uint64_t scale = 1;
        for (uint32_t i = 0; i < digit; i++) scale *= radix[i];
        uint32_t cur = decode_digit(mem, digit);
        uint32_t next = (cur + 1) % radix[digit];
        return mem + (uint64_t(next) - cur) * scale;
    };

    product_graph p;
    std::unordered_map<uint64_t, uint32_t> node_of;
    std::deque<uint32_t> queue;
    std::vector<uint64_t> node_mem;

    auto intern = [&](uint32_t v, uint64_t mem) {
        uint64_t key = uint64_t(v) * mem_states + mem;
        auto it = node_of.find(key);
        if (it != node_of.end()) return it->second;
        uint32_t id = uint32_t(p.base.size());
        if (p.base.size() >= b.max_product_states)
            throw bound_error("strategy product exceeds the state gate");
        node_of.emplace(key, id);
        p.base.push_back(v);
        node_mem.push_back(mem);
        p.out.emplace_back();
        p.in.emplace_back();
        queue.push_back(id);
        return id;
    };

    zstar.for_each([&](uint32_t v) { p.starts.push_back(intern(v, 0)); });

    while (!queue.empty()) {
        uint32_t id = queue.front();
        queue.pop_front();
        uint32_t v = p.base[id];
        uint64_t mem = node_mem[id];
        std::vector<uint32_t> succs;
        if (g.owner[v] == 0 && !strat.choices[v].empty()) {
            const auto& list = strat.choices[v];
            uint32_t c = list.size() > 1 ? decode_digit(mem, digit_of[v]) : 0;
            uint32_t u = list[c];
            if (!g.has_edge(v, u))
                throw std::invalid_argument("strategy choice " + g.label(v) + "->" +
                                            g.label(u) + " is not an edge");
            uint64_t mem2 = list.size() > 1 ? bump_digit(mem, digit_of[v]) : mem;
            succs.push_back(intern(u, mem2));
        } else {
            for (uint32_t u : g.succ[v])
                if (g.alive.contains(u)) succs.push_back(intern(u, mem));
        }
        for (uint32_t s : succs) {
            p.out[id].push_back(s);
            p.in[s].push_back(id);
        }
    }

    product_searcher searcher{g, p, a, {}};
    for (const conditional_live_group& cg : a.cond_live)
        for (const edge_set& h : cg.groups)
            searcher.pairs.push_back({&cg.condition, h.sources(g.n), &h});

    size_t pn = p.size();

    // stem reachability: forward from the start nodes avoiding unsafe edges
    std::vector<char> reach(pn, 0);
    {
        std::deque<uint32_t> bfs;
        for (uint32_t s : p.starts)
            if (!reach[s]) { reach[s] = 1; bfs.push_back(s); }
        while (!bfs.empty()) {
            uint32_t v = bfs.front();
            bfs.pop_front();
            for (uint32_t w : p.out[v]) {
                if (reach[w] || searcher.edge_unsafe(v, w)) continue;
                reach[w] = 1;
                bfs.push_back(w);
            }
        }
    }

    auto base_set = [&](auto&& pred) {
        vertex_set s(g.n);
        g.alive.for_each([&](uint32_t v) {
            if (pred(v)) s.insert(v);
        });
        return s;
    };

    struct search_case {
        std::vector<char> within;
        std::optional<vertex_set> required;
        const std::vector<char>* reach;
    };

    std::vector<search_case> cases;
    std::vector<char> everywhere(pn, 1);

    std::vector<char> reach_via_bad;  // reach through a non-target node (safety only)
    switch (obj.kind) {
        case objective_kind::safety: {
            vertex_set bad = base_set([&](uint32_t v) { return !obj.target.contains(v); });
            cases.push_back({everywhere, bad, &reach});
            // cycle inside the target but the stem already left it
            reach_via_bad.assign(pn, 0);
            std::deque<uint32_t> bfs;
            for (uint32_t id = 0; id < pn; id++)
                if (reach[id] && bad.contains(p.base[id])) { reach_via_bad[id] = 1; bfs.push_back(id); }
            while (!bfs.empty()) {
                uint32_t v = bfs.front();
                bfs.pop_front();
                for (uint32_t w : p.out[v]) {
                    if (reach_via_bad[w] || searcher.edge_unsafe(v, w)) continue;
                    reach_via_bad[w] = 1;
                    bfs.push_back(w);
                }
            }
            cases.push_back({everywhere, std::nullopt, &reach_via_bad});
            break;
        }
        case objective_kind::buchi: {
            std::vector<char> within(pn, 0);
            for (uint32_t id = 0; id < pn; id++)
                if (!obj.target.contains(p.base[id])) within[id] = 1;
            cases.push_back({std::move(within), std::nullopt, &reach});
            break;
        }
        case objective_kind::cobuchi: {
            vertex_set outside = base_set([&](uint32_t v) { return !obj.target.contains(v); });
            cases.push_back({everywhere, outside, &reach});
            break;
        }
        case objective_kind::parity: {
            std::vector<uint32_t> odds;
            g.alive.for_each([&](uint32_t v) {
                if (g.priority[v] % 2 == 1) odds.push_back(g.priority[v]);
            });
            std::sort(odds.begin(), odds.end());
            odds.erase(std::unique(odds.begin(), odds.end()), odds.end());
            for (uint32_t pprio : odds) {
                std::vector<char> within(pn, 0);
                for (uint32_t id = 0; id < pn; id++)
                    if (g.priority[p.base[id]] <= pprio) within[id] = 1;
                vertex_set req = base_set([&](uint32_t v) { return g.priority[v] == pprio; });
                cases.push_back({std::move(within), req, &reach});
            }
            break;
        }
    }

    // BFS over product edges avoiding unsafe ones; returns parent pointers
    auto bfs_parents = [&](const std::vector<uint32_t>& seeds) {
        std::vector<uint32_t> parent(pn, UINT32_MAX);
        std::vector<char> seen(pn, 0);
        std::deque<uint32_t> bfs;
        for (uint32_t s : seeds)
            if (!seen[s]) { seen[s] = 1; bfs.push_back(s); }
        while (!bfs.empty()) {
            uint32_t v = bfs.front();
            bfs.pop_front();
            for (uint32_t w : p.out[v]) {
                if (seen[w] || searcher.edge_unsafe(v, w)) continue;
                seen[w] = 1;
                parent[w] = v;
                bfs.push_back(w);
            }
        }
        return std::pair{parent, seen};
    };
    auto chain_from = [&](const std::vector<uint32_t>& parent, uint32_t last) {
        std::vector<uint32_t> path{last};
        while (parent[path.back()] != UINT32_MAX) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
    };

    for (const search_case& sc : cases) {
        auto hit = searcher.search(sc.within, sc.required ? &*sc.required : nullptr, *sc.reach);
        if (!hit) continue;

        // project the product witness back to a base-graph lasso
        std::vector<uint32_t> stem_nodes;
        auto [parent1, seen1] = bfs_parents(p.starts);
        if (sc.reach == &reach_via_bad) {
            std::vector<uint32_t> seeds;
            for (uint32_t id = 0; id < pn; id++)
                if (seen1[id] && !obj.target.contains(p.base[id])) seeds.push_back(id);
            auto [parent2, seen2] = bfs_parents(seeds);
            (void)seen2;
            std::vector<uint32_t> tail = chain_from(parent2, hit->entry);
            std::vector<uint32_t> head = chain_from(parent1, tail.front());
            stem_nodes = head;
            for (size_t i = 1; i < tail.size(); i++) stem_nodes.push_back(tail[i]);
        } else {
            stem_nodes = chain_from(parent1, hit->entry);
        }

        std::vector<edge> fedges;
        for (auto& e : hit->edges) fedges.push_back({e.first, e.second});
        edge_set f = edge_set::of(std::move(fedges));
        std::vector<uint32_t> cyc_nodes = cover_cycle(uint32_t(pn), f, hit->entry);

        lasso l;
        for (size_t i = 0; i + 1 < stem_nodes.size(); i++) l.stem.push_back(p.base[stem_nodes[i]]);
        for (uint32_t nd : cyc_nodes) l.cycle.push_back(p.base[nd]);
        return {false, "assumption-compliant play violates the objective", l};
    }

    return {true, "", std::nullopt};
}

} // namespace pga::oracle
