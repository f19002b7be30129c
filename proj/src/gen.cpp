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

#include "gen.hpp"

#include <algorithm>
#include <numeric>

namespace pga {

game_graph generate(const gen_spec& spec) {
    if (spec.n < 1) throw std::invalid_argument("generator needs n >= 1");
    if (spec.deg_lo < 1) throw std::invalid_argument("generator needs out-degree >= 1");
    if (spec.deg_hi < spec.deg_lo) throw std::invalid_argument("degree range is empty");

    splitmix64 rng(spec.seed);
    game_graph g;
    g.n = spec.n;
    g.owner.assign(g.n, 0);
    g.priority.assign(g.n, 0);
    g.succ.assign(g.n, {});
    g.name.assign(g.n, "");
    g.alive = vertex_set::full(g.n);

    uint32_t lo = std::min(spec.deg_lo, spec.n);
    uint32_t hi = std::min(spec.deg_hi, spec.n);

    std::vector<uint32_t> pool(g.n);
    for (uint32_t v = 0; v < g.n; v++) {
        g.owner[v] = rng.below(1000) < spec.p1_permille ? 1 : 0;
        g.priority[v] = uint32_t(rng.below(spec.max_priority + 1));
        uint32_t deg = lo + uint32_t(rng.below(hi - lo + 1));
        // partial Fisher-Yates: sample deg successors without replacement
        std::iota(pool.begin(), pool.end(), 0);
        for (uint32_t i = 0; i < deg; i++) {
            uint32_t j = i + uint32_t(rng.below(g.n - i));
            std::swap(pool[i], pool[j]);
            g.succ[v].push_back(pool[i]);
        }
        std::sort(g.succ[v].begin(), g.succ[v].end());
    }
    g.finish();
    return g;
}

} // namespace pga
