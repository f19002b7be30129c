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
 * Random game specification. The seed fully determines the output: the
 * generator draws from a splitmix64 stream and reduces values modulo the
 * needed range, so graphs are reproducible across platforms.
 */
struct gen_spec {
    uint32_t n = 8;
    uint32_t deg_lo = 1;          // at least 1: generated graphs have no dead ends
    uint32_t deg_hi = 3;
    uint32_t max_priority = 4;
    uint32_t p1_permille = 500;   // probability of an environment vertex, in 1/1000
    uint64_t seed = 1;
};

/// Deterministic splitmix64 stream.
class splitmix64 {
public:
    explicit splitmix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t bound) { return next() % bound; }

private:
    uint64_t state_;
};

/**
 * Generates a valid game graph: owners and priorities drawn per vertex,
 * successors sampled without replacement with at least one successor each.
 */
game_graph generate(const gen_spec& spec);

} // namespace pga
