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

#include "apa.hpp"

namespace pga {

edge_set unsafe_a(const game_graph& g, const vertex_set& w) {
    std::vector<edge> out;
    vertex_set inside = w & g.alive;
    inside.for_each([&](uint32_t u) {
        if (g.owner[u] != 1) return;
        for (uint32_t v : g.succ[u])
            if (g.alive.contains(v) && !inside.contains(v)) out.push_back({u, v});
    });
    return edge_set::of(std::move(out));
}

apa_result safety_apa(const game_graph& g, const vertex_set& u) {
    apa_result r;
    r.kind = objective_kind::safety;
    r.region = safety_coop(g, u & g.alive);
    r.assum.unsafe = unsafe_a(g, r.region);
    return r;
}

std::vector<edge_set> live_groups_from_trace(const game_graph& g, const fixpoint_trace& tr) {
    std::vector<edge_set> groups;
    // steps[0] is empty; the frontier of the last step is empty by fixpoint
    for (size_t i = 1; i + 1 < tr.steps.size(); i++) {
        vertex_set fr = front(g, tr.steps[i]);
        if (fr.empty()) continue;
        vertex_set targets = tr.steps[i + 1] - fr;
        std::vector<edge> es;
        fr.for_each([&](uint32_t v) {
            for (uint32_t w : g.succ[v])
                if (g.alive.contains(w) && targets.contains(w)) es.push_back({v, w});
        });
        if (!es.empty()) groups.push_back(edge_set::of(std::move(es)));
    }
    return groups;
}

std::vector<edge_set> live_a_linear(const game_graph& g, const vertex_set& target) {
    std::vector<edge_set> groups;
    vertex_set u = target & g.alive;
    while (u != g.alive) {
        vertex_set grown = u | attr(g, u, 0);
        vertex_set c = cpre(g, grown, 1) - grown;
        if (c.empty() && grown == u)
            throw precondition_error("live group peeling stuck: some alive vertex is not "
                                     "cooperatively winning for the Buchi objective");
        std::vector<edge> es;
        c.for_each([&](uint32_t v) {
            for (uint32_t w : g.succ[v])
                if (g.alive.contains(w) && grown.contains(w)) es.push_back({v, w});
        });
        if (!es.empty()) groups.push_back(edge_set::of(std::move(es)));
        u = grown | c;
    }
    return groups;
}

edge_set colive_a_linear(const game_graph& g, const vertex_set& target) {
    std::vector<edge> colive;
    vertex_set u = safety_coop(g, target & g.alive);
    // initial co-live edges: environment edges leaving the safety core
    u.for_each([&](uint32_t v) {
        if (g.owner[v] != 1) return;
        for (uint32_t w : g.succ[v])
            if (g.alive.contains(w) && !u.contains(w)) colive.push_back({v, w});
    });
    while (u != g.alive) {
        vertex_set grown = u | attr(g, u, 0);
        vertex_set c = cpre(g, grown, 1) - grown;
        if (c.empty() && grown == u)
            throw precondition_error("co-live peeling stuck: some alive vertex is not "
                                     "cooperatively winning for the co-Buchi objective");
        c.for_each([&](uint32_t v) {
            for (uint32_t w : g.succ[v])
                if (g.alive.contains(w) && !grown.contains(w)) colive.push_back({v, w});
        });
        u = grown | c;
    }
    return edge_set::of(std::move(colive));
}

namespace {

std::vector<edge_set> live_groups_of(const game_graph& g, const vertex_set& target,
                                     variant var) {
    if (var == variant::linear) {
        fixpoint_trace tr = buchi_coop(g, target);
        return live_a_linear(restrict_to(g, tr.result), target & tr.result);
    }
    return live_groups_from_trace(g, tbuchi(g, target));
}

/// Co-live edges for eventually settling in `target` (unsafe part suppressed).
/// The extraction is always the frontier peel of colive_a_linear: reading the
/// edges off the raw trace can mark the only outgoing edge of a forced
/// environment vertex co-live (a target vertex whose every successor sits at
/// the same trace rank), which the environment cannot implement when the
/// system forces revisits. The peel absorbs forced vertices into the
/// attractor, so their edges stay free. The variant selects which region
/// computation runs.
edge_set colive_of(const game_graph& g, const vertex_set& target, variant var) {
    vertex_set region(g.n);
    switch (var) {
        case variant::standard: region = cobuchi_coop(g, target).result; break;
        case variant::accelerated: region = tcobuchi(g, target).result; break;
        case variant::linear: region = cobuchi_coop(g, target).result; break;
    }
    return colive_a_linear(restrict_to(g, region), target & region);
}

} // namespace

apa_result buchi_apa(const game_graph& g, const vertex_set& u, variant var) {
    apa_result r;
    r.kind = objective_kind::buchi;
    r.var = var;

    std::vector<edge_set> groups;
    if (var == variant::linear) {
        r.region = buchi_coop(g, u).result;
        groups = live_a_linear(restrict_to(g, r.region), u & r.region);
    } else {
        fixpoint_trace tr = tbuchi(g, u);
        r.region = tr.result;
        groups = live_groups_from_trace(g, tr);
    }
    r.assum.unsafe = unsafe_a(g, r.region);
    for (edge_set& h : groups) {
        conditional_live_group cg;
        cg.condition = h.sources(g.n);
        cg.groups.push_back(std::move(h));
        r.assum.cond_live.push_back(std::move(cg));
    }
    return r;
}

apa_result cobuchi_apa(const game_graph& g, const vertex_set& u, variant var) {
    apa_result r;
    r.kind = objective_kind::cobuchi;
    r.var = var;
    r.region = (var == variant::accelerated ? tcobuchi(g, u) : cobuchi_coop(g, u)).result;
    r.assum.colive = colive_a_linear(restrict_to(g, r.region), u & r.region);
    r.assum.unsafe = unsafe_a(g, r.region);
    return r;
}

namespace {

/**
 * Recursive set computation of the parity algorithm: strips the highest
 * priority d of the (already region-restricted) game, adding co-live edges
 * when d is odd and conditional live groups when d is even, then relabels
 * the removed priority to 0 and recurses on the surviving region.
 */
void compute_sets(game_graph g, variant var, edge_set& colive,
                  std::vector<conditional_live_group>& cond) {
    for (;;) {
        int64_t d64 = g.max_alive_priority();
        if (d64 < 0) return;
        uint32_t d = uint32_t(d64);
        vertex_set cd = g.priority_class(d);
        vertex_set w_not_d(g.n);

        if (d % 2 == 1) {
            w_not_d = parity_coop(restrict_to(g, g.alive - cd));
            colive |= colive_of(g, w_not_d, var);
        } else {
            vertex_set wd = buchi_coop(g, cd).result;
            w_not_d = g.alive - wd;
            game_graph sub = restrict_to(g, wd);
            for (uint32_t i = 1; i < d; i += 2) {
                vertex_set cond_set = g.priority_class(i) & wd;
                if (cond_set.empty()) continue;
                vertex_set target(g.n);
                for (uint32_t j = i + 1; j <= d; j += 2) target |= sub.priority_class(j);
                std::vector<edge_set> groups = live_groups_of(sub, target, var);
                if (groups.empty()) continue;
                cond.push_back({cond_set, std::move(groups)});
            }
        }

        if (d == 0) return;
        g = restrict_to(g, w_not_d);
        // removed top priority is relabeled to 0 after the restriction
        g.alive.for_each([&](uint32_t v) {
            if (g.priority[v] == d) g.priority[v] = 0;
        });
    }
}

} // namespace

apa_result parity_apa(const game_graph& g, variant var) {
    apa_result r;
    r.kind = objective_kind::parity;
    r.var = var;
    r.region = parity_coop(g);
    r.assum.unsafe = unsafe_a(g, r.region);
    compute_sets(restrict_to(g, r.region), var, r.assum.colive, r.assum.cond_live);
    return r;
}

apa_result compute_apa(const game_graph& g, const objective& obj, variant var) {
    switch (obj.kind) {
        case objective_kind::safety: return safety_apa(g, obj.target);
        case objective_kind::buchi: return buchi_apa(g, obj.target, var);
        case objective_kind::cobuchi: return cobuchi_apa(g, obj.target, var);
        case objective_kind::parity: return parity_apa(g, var);
    }
    throw std::invalid_argument("unknown objective");
}

vertex_set coop_region(const game_graph& g, const objective& obj, variant var) {
    bool acc = var != variant::standard;
    switch (obj.kind) {
        case objective_kind::safety: return safety_coop(g, obj.target);
        case objective_kind::buchi:
            return (acc ? tbuchi(g, obj.target) : buchi_coop(g, obj.target)).result;
        case objective_kind::cobuchi:
            return (acc ? tcobuchi(g, obj.target) : cobuchi_coop(g, obj.target)).result;
        case objective_kind::parity: return parity_coop(g);
    }
    throw std::invalid_argument("unknown objective");
}

} // namespace pga
