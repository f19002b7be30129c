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

#include "fixpoint.hpp"

#include <deque>

namespace pga {

vertex_set pre(const game_graph& g, const vertex_set& u) {
    vertex_set target = u & g.alive;
    vertex_set out(g.n);
    g.alive.for_each([&](uint32_t v) {
        if (g.succ_bits[v].intersects(target)) out.insert(v);
    });
    return out;
}

vertex_set cpre(const game_graph& g, const vertex_set& u, int a) {
    vertex_set target = u & g.alive;
    vertex_set out(g.n);
    g.alive.for_each([&](uint32_t v) {
        vertex_set succs = g.succ_bits[v] & g.alive;
        if (succs.empty()) return;  // dead ends control nothing
        if (g.owner[v] == a) {
            if (succs.intersects(target)) out.insert(v);
        } else {
            if (succs.is_subset_of(target)) out.insert(v);
        }
    });
    return out;
}

vertex_set attr_layers(const game_graph& g, const vertex_set& u, int a,
                       std::vector<uint32_t>& layer) {
    constexpr uint32_t unreached = UINT32_MAX;
    layer.assign(g.n, unreached);

    vertex_set closure = u & g.alive;
    std::deque<uint32_t> queue;
    closure.for_each([&](uint32_t v) {
        layer[v] = 0;
        queue.push_back(v);
    });

    // escape counts for opponent vertices: alive successors not yet attracted
    std::vector<uint32_t> escapes(g.n, 0);
    g.alive.for_each([&](uint32_t v) {
        if (g.owner[v] != a) escapes[v] = uint32_t((g.succ_bits[v] & g.alive).size());
    });

    while (!queue.empty()) {
        uint32_t w = queue.front();
        queue.pop_front();
        for (uint32_t v : g.pred[w]) {
            if (!g.alive.contains(v) || closure.contains(v)) continue;
            if (g.owner[v] == a) {
                closure.insert(v);
                layer[v] = layer[w] + 1;
                queue.push_back(v);
            } else {
                if (escapes[v] > 0 && --escapes[v] == 0) {
                    closure.insert(v);
                    layer[v] = layer[w] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return closure;
}

vertex_set attr(const game_graph& g, const vertex_set& u, int a) {
    std::vector<uint32_t> layer;
    vertex_set closure = attr_layers(g, u, a, layer);
    return closure - u;
}

vertex_set tpre(const game_graph& g, const vertex_set& u) {
    vertex_set a0 = attr(g, u, 0);
    return a0 | cpre(g, a0 | (u & g.alive), 1);
}

vertex_set front(const game_graph& g, const vertex_set& u) {
    vertex_set a0 = attr(g, u, 0);
    vertex_set f = a0 | cpre(g, a0 | (u & g.alive), 1);
    f -= a0;
    f -= u;
    return f;
}

vertex_set safety_coop(const game_graph& g, const vertex_set& u, size_t* iterations) {
    vertex_set y = g.alive;
    for (;;) {
        vertex_set next = u & pre(g, y);
        if (next == y) return y;
        y = next;
        if (iterations) (*iterations)++;
    }
}

namespace {

fixpoint_trace buchi_run(const game_graph& g, const vertex_set& u, bool accelerated) {
    fixpoint_trace tr;
    vertex_set y = g.alive;
    for (;;) {
        vertex_set base = u & pre(g, y);
        std::vector<vertex_set> steps{vertex_set(g.n)};
        vertex_set x(g.n);
        for (;;) {
            // cumulative iteration: tpre is not monotone as a raw transformer
            // (its attractor part excludes the argument), but X_i | tpre(X_i)
            // is, and for pre it coincides with the plain chain
            vertex_set next = x | base | (accelerated ? tpre(g, x) : pre(g, x));
            if (next == x) break;
            x = next;
            steps.push_back(x);
            tr.mu_iterations++;
        }
        tr.steps = std::move(steps);
        if (x == y) {
            tr.result = x;
            return tr;
        }
        y = x;
        tr.nu_iterations++;
    }
}

fixpoint_trace cobuchi_run(const game_graph& g, const vertex_set& u, bool accelerated) {
    fixpoint_trace tr;
    vertex_set x(g.n);
    tr.steps.push_back(x);
    for (;;) {
        vertex_set reach = accelerated ? tpre(g, x) : pre(g, x);
        vertex_set y = g.alive;
        for (;;) {
            vertex_set next = (u & pre(g, y)) | reach;
            if (next == y) break;
            y = next;
            tr.nu_iterations++;
        }
        y |= x;  // cumulative outer iteration, see buchi_run
        if (y == x) {
            tr.result = x;
            return tr;
        }
        x = y;
        tr.steps.push_back(x);
        tr.mu_iterations++;
    }
}

} // namespace

fixpoint_trace buchi_coop(const game_graph& g, const vertex_set& u) {
    return buchi_run(g, u & g.alive, false);
}

fixpoint_trace tbuchi(const game_graph& g, const vertex_set& u) {
    return buchi_run(g, u & g.alive, true);
}

fixpoint_trace cobuchi_coop(const game_graph& g, const vertex_set& u) {
    return cobuchi_run(g, u & g.alive, false);
}

fixpoint_trace tcobuchi(const game_graph& g, const vertex_set& u) {
    return cobuchi_run(g, u & g.alive, true);
}

namespace {

/// Nested evaluator for the parity fixpoint; level k iterates variable X_k.
struct parity_eval {
    const game_graph& g;
    std::vector<vertex_set> prio_class;  // C_i over alive vertices
    std::vector<vertex_set> x;
    size_t pre_evaluations = 0;

    vertex_set body() {
        vertex_set out(g.n);
        for (size_t i = 0; i < x.size(); i++) {
            if (prio_class[i].empty()) continue;
            out |= prio_class[i] & pre(g, x[i]);
            pre_evaluations++;
        }
        return out;
    }

    vertex_set solve(int k) {
        x[k] = (k % 2 == 0) ? g.alive : vertex_set(g.n);
        for (;;) {
            vertex_set val = (k == 0) ? body() : solve(k - 1);
            if (val == x[k]) return val;
            x[k] = val;
        }
    }
};

} // namespace

vertex_set parity_coop(const game_graph& g, size_t* pre_evaluations) {
    int64_t d = g.max_alive_priority();
    if (d < 0) return vertex_set(g.n);
    parity_eval ev{g, {}, {}};
    ev.prio_class.reserve(d + 1);
    for (int64_t i = 0; i <= d; i++) ev.prio_class.push_back(g.priority_class(uint32_t(i)));
    ev.x.assign(d + 1, vertex_set(g.n));
    vertex_set out = ev.solve(int(d));
    if (pre_evaluations) *pre_evaluations = ev.pre_evaluations;
    return out;
}

game_graph encode_buchi_priorities(const game_graph& g, const vertex_set& u) {
    game_graph out = g;
    for (uint32_t v = 0; v < g.n; v++) out.priority[v] = u.contains(v) ? 2 : 1;
    return out;
}

game_graph encode_cobuchi_priorities(const game_graph& g, const vertex_set& u) {
    game_graph out = g;
    for (uint32_t v = 0; v < g.n; v++) out.priority[v] = u.contains(v) ? 0 : 1;
    return out;
}

} // namespace pga
