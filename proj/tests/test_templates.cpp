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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "templates.hpp"

using namespace pga;
using fixtures::es;
using fixtures::vs;

namespace {

assumption cond_only(const game_graph& g, std::initializer_list<uint32_t> condition,
                     std::initializer_list<edge_set> groups) {
    assumption a;
    conditional_live_group cg;
    cg.condition = vs(g, condition);
    cg.groups = groups;
    a.cond_live.push_back(cg);
    return a;
}

/// Random lasso by walking until a vertex repeats.
lasso random_lasso(const game_graph& g, splitmix64& rng) {
    uint32_t v = g.alive.to_vector()[rng.below(g.alive_count())];
    std::vector<uint32_t> walk{v};
    std::map<uint32_t, size_t> seen{{v, 0}};
    for (;;) {
        std::vector<uint32_t> succs;
        for (uint32_t w : g.succ[walk.back()])
            if (g.alive.contains(w)) succs.push_back(w);
        uint32_t w = succs[rng.below(succs.size())];
        auto it = seen.find(w);
        if (it != seen.end()) {
            lasso l;
            l.stem.assign(walk.begin(), walk.begin() + it->second);
            l.cycle.assign(walk.begin() + it->second, walk.end());
            return l;
        }
        seen[w] = walk.size();
        walk.push_back(w);
    }
}

assumption random_assumption(const game_graph& g, splitmix64& rng) {
    std::vector<edge> all;
    for (const edge& e : g.alive_edges()) all.push_back(e);
    assumption a;
    std::vector<edge> s, d;
    for (const edge& e : all) {
        uint64_t roll = rng.below(6);
        if (roll == 0) s.push_back(e);
        if (roll == 1) d.push_back(e);
    }
    a.unsafe = edge_set::of(std::move(s));
    a.colive = edge_set::of(std::move(d));
    size_t ngroups = rng.below(3);
    for (size_t i = 0; i < ngroups && !all.empty(); i++) {
        conditional_live_group cg;
        cg.condition = fixtures::random_target(g, rng.next());
        size_t nh = 1 + rng.below(2);
        for (size_t j = 0; j < nh; j++) {
            std::vector<edge> h;
            size_t sz = 1 + rng.below(2);
            for (size_t k = 0; k < sz; k++) h.push_back(all[rng.below(all.size())]);
            cg.groups.push_back(edge_set::of(std::move(h)));
        }
        a.cond_live.push_back(std::move(cg));
    }
    return a;
}

} // namespace

TEST_CASE("lasso parity on the seven-vertex game") {
    game_graph g = fixtures::seven_vertex_parity();
    // v1 v2 v4 v2 cycle: highest recurring priority 4
    CHECK(lasso_satisfies_parity(g, {{}, {0, 1, 3, 1}}));
    // v5 self-loop: priority 5
    CHECK(!lasso_satisfies_parity(g, {{}, {4}}));
}

TEST_CASE("single even self-loop satisfies parity") {
    game_graph g = parse_pgsolver("parity 0; 0 2 0 0;");
    CHECK(lasso_satisfies_parity(g, {{}, {0}}));
}

TEST_CASE("lassos must follow edges") {
    game_graph g = fixtures::chain_middle();
    CHECK_THROWS_AS(validate_lasso(g, {{}, {0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_lasso(g, {{2, 0}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_lasso(g, {{}, {}}), std::invalid_argument);
}

TEST_CASE("witness semantics on the middle chain") {
    game_graph g = fixtures::chain_middle();
    lasso stay_v1{{}, {1}};

    // conditional live group "v1 recurs -> e2 recurs" rejects (v1)^w
    assumption live = cond_only(g, {1}, {es({{1, 2}})});
    CHECK(!lasso_satisfies_assumption(g, stay_v1, live));

    // co-liveness of e1 accepts (v1)^w
    assumption colive;
    colive.colive = es({{1, 0}});
    CHECK(lasso_satisfies_assumption(g, stay_v1, colive));

    // the empty assumption accepts everything
    CHECK(lasso_satisfies_assumption(g, stay_v1, assumption{}));

    // stem crossings of co-live edges are allowed, cycle crossings are not
    lasso through{{0}, {1, 2}};
    assumption colive_e2;
    colive_e2.colive = es({{1, 2}});
    CHECK(!lasso_satisfies_assumption(g, through, colive_e2));
    assumption colive_stem;
    colive_stem.colive = es({{0, 1}});
    CHECK(lasso_satisfies_assumption(g, through, colive_stem));
    assumption unsafe_stem;
    unsafe_stem.unsafe = es({{0, 1}});
    CHECK(!lasso_satisfies_assumption(g, through, unsafe_stem));
}

TEST_CASE("all-edges-unsafe rejects every witness") {
    game_graph g = fixtures::chain_middle();
    assumption a;
    a.unsafe = g.alive_edges();
    splitmix64 rng(99);
    for (int i = 0; i < 20; i++) CHECK(!lasso_satisfies_assumption(g, random_lasso(g, rng), a));
}

TEST_CASE("cycle rotation and unrolling preserve verdicts") {
    auto games = fixtures::random_games(25, 7, 4, 0x606);
    splitmix64 rng(17);
    for (const auto& g : games) {
        for (int rep = 0; rep < 6; rep++) {
            lasso l = random_lasso(g, rng);
            assumption a = random_assumption(g, rng);
            bool parity = lasso_satisfies_parity(g, l);
            bool sat = lasso_satisfies_assumption(g, l, a);
            for (size_t r = 1; r < l.cycle.size(); r++) {
                lasso rot = l;
                std::rotate(rot.cycle.begin(), rot.cycle.begin() + r, rot.cycle.end());
                // keep the junction valid: extend the stem to the old entry
                rot.stem = l.stem;
                for (size_t k = 0; k < r; k++) rot.stem.push_back(l.cycle[k]);
                CHECK(lasso_satisfies_parity(g, rot) == parity);
                CHECK(lasso_satisfies_assumption(g, rot, a) == sat);
            }
            lasso doubled = l;
            doubled.cycle.insert(doubled.cycle.end(), l.cycle.begin(), l.cycle.end());
            CHECK(lasso_satisfies_parity(g, doubled) == parity);
            CHECK(lasso_satisfies_assumption(g, doubled, a) == sat);
        }
    }
}

TEST_CASE("weakening an assumption never rejects a satisfied witness") {
    auto games = fixtures::random_games(20, 7, 4, 0x707);
    splitmix64 rng(23);
    for (const auto& g : games) {
        for (int rep = 0; rep < 8; rep++) {
            lasso l = random_lasso(g, rng);
            assumption a = random_assumption(g, rng);
            if (!lasso_satisfies_assumption(g, l, a)) continue;
            assumption weaker = a;
            if (!weaker.unsafe.empty()) {
                edge_set one = es({*weaker.unsafe.begin()});
                weaker.unsafe -= one;
            }
            if (!weaker.colive.empty()) {
                edge_set one = es({*weaker.colive.begin()});
                weaker.colive -= one;
            }
            if (!weaker.cond_live.empty()) weaker.cond_live.pop_back();
            CHECK(lasso_satisfies_assumption(g, l, weaker));
        }
    }
}

TEST_CASE("ltl rendering of the template shapes") {
    game_graph g7 = fixtures::seven_vertex_parity();
    assumption unsafe_only;
    unsafe_only.unsafe = es({{5, 6}});
    CHECK(render_ltl(g7, unsafe_only) == "G !(v6 & X v7)");

    CHECK(render_ltl(g7, assumption{}) == "true");

    game_graph gm = fixtures::chain_middle();
    assumption cond = cond_only(gm, {1}, {es({{1, 2}})});
    CHECK(render_ltl(gm, cond) == "G F (v1) -> (G F (v1) -> G F (v1 & X v2))");

    assumption colive;
    colive.colive = es({{1, 0}});
    CHECK(render_ltl(gm, colive) == "F G !(v1 & X v0)");

    assumption both = colive;
    both.unsafe = es({{1, 2}});
    std::string r = render_ltl(gm, both);
    CHECK(r == "(G !(v1 & X v2)) & (F G !(v1 & X v0))");
}

TEST_CASE("assumption json round-trip") {
    game_graph g = fixtures::seven_vertex_parity();
    assumption a;
    a.unsafe = es({{5, 6}});
    a.colive = es({{4, 4}, {5, 4}});
    conditional_live_group cg;
    cg.condition = vs(g, {0});
    cg.groups.push_back(es({{0, 1}}));
    a.cond_live.push_back(cg);

    std::string j = assumption_to_json(a);
    assumption b = assumption_from_json(g, j);
    CHECK(b.unsafe == a.unsafe);
    CHECK(b.colive == a.colive);
    REQUIRE(b.cond_live.size() == 1);
    CHECK(b.cond_live[0].condition == cg.condition);
    CHECK(b.cond_live[0].groups == cg.groups);

    CHECK_THROWS_AS(assumption_from_json(g, "{\"unsafe\":[[0,6]]}"), std::invalid_argument);
}

TEST_CASE("witness enumeration of the one-vertex loop") {
    game_graph g = parse_pgsolver("parity 0; 0 0 0 0;");
    size_t count = 0;
    enumerate_witnesses(g, 0, {}, [&](const witness& w) {
        count++;
        CHECK(w.stem_edges.empty());
        CHECK(w.inf.edges == es({{0, 0}}));
        return true;
    });
    CHECK(count == 1);
}

TEST_CASE("witness enumeration matches an independent count") {
    game_graph g = fixtures::three_vertex_livegroup();

    // independent recount: reachability closure per subset, simple paths by DFS
    std::vector<edge> all;
    for (const edge& e : g.alive_edges()) all.push_back(e);
    size_t expected = 0;
    std::set<std::pair<std::vector<edge>, std::vector<edge>>> seen_pairs;
    for (uint32_t mask = 1; mask < (1u << all.size()); mask++) {
        std::vector<edge> f;
        for (size_t i = 0; i < all.size(); i++)
            if (mask & (1u << i)) f.push_back(all[i]);
        std::set<uint32_t> verts;
        for (const edge& e : f) {
            verts.insert(e.src);
            verts.insert(e.dst);
        }
        bool connected = true;
        for (uint32_t a : verts) {
            std::set<uint32_t> reach{a};
            bool grew = true;
            while (grew) {
                grew = false;
                for (const edge& e : f)
                    if (reach.count(e.src) && !reach.count(e.dst)) {
                        reach.insert(e.dst);
                        grew = true;
                    }
            }
            for (uint32_t b : verts) connected = connected && reach.count(b);
        }
        if (!connected) continue;
        // simple paths from 0 to each incident vertex
        std::function<void(uint32_t, std::vector<uint32_t>&)> dfs = [&](uint32_t v,
                                                                        std::vector<uint32_t>& path) {
            if (verts.count(v)) expected++;
            for (uint32_t w : g.succ[v]) {
                if (std::find(path.begin(), path.end(), w) != path.end()) continue;
                path.push_back(w);
                dfs(w, path);
                path.pop_back();
            }
        };
        std::vector<uint32_t> path{0};
        dfs(0, path);
    }

    size_t count = 0;
    bool has_qp_loop = false, has_q_self = false;
    enumerate_witnesses(g, 0, {}, [&](const witness& w) {
        count++;
        if (w.inf.edges == es({{0, 1}, {1, 0}})) has_qp_loop = true;
        if (w.inf.edges == es({{1, 1}})) has_q_self = true;
        return true;
    });
    CHECK(count == expected);
    CHECK(has_qp_loop);
    CHECK(has_q_self);
}

TEST_CASE("witnesses never live in unreachable components") {
    game_graph g = parse_pgsolver("parity 3; 0 0 0 1; 1 0 0 0; 2 0 1 3; 3 0 1 2;");
    enumerate_witnesses(g, 0, {}, [&](const witness& w) {
        CHECK(!w.inf.edges.incident(g.n).contains(2));
        CHECK(!w.inf.edges.incident(g.n).contains(3));
        return true;
    });
}

TEST_CASE("witness enumeration enforces its bounds") {
    gen_spec spec;
    spec.n = 12;
    game_graph g = generate(spec);
    CHECK_THROWS_AS(enumerate_witnesses(g, 0, {}, [](const witness&) { return true; }),
                    bound_error);
}
