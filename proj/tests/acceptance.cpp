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

// End-to-end acceptance suite: ten criteria covering the golden examples,
// the acceleration and region-correctness properties, the assumption
// quality checks (permissive / implementable / sufficient), variant
// agreement, and a performance sanity bound. Prints one line per criterion
// and exits nonzero if any of them fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "naive.hpp"

using namespace pga;
using fixtures::es;
using fixtures::vs;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) failures++;
}

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

game_graph cycle_game(uint32_t n) {
    game_graph g;
    g.n = n;
    g.owner.assign(n, 0);
    g.priority.assign(n, 1);
    g.priority[0] = 2;
    g.succ.assign(n, {});
    g.name.assign(n, "");
    g.alive = vertex_set::full(n);
    for (uint32_t v = 0; v < n; v++) {
        g.owner[v] = v % 2;
        g.succ[v] = {(v + 1) % n};
    }
    g.finish();
    return g;
}

game_graph clique_game(uint32_t n) {
    game_graph g;
    g.n = n;
    g.owner.assign(n, 0);
    g.priority.assign(n, 0);
    g.succ.assign(n, {});
    g.name.assign(n, "");
    g.alive = vertex_set::full(n);
    for (uint32_t v = 0; v < n; v++) {
        g.owner[v] = v % 2;
        g.priority[v] = v % 5;
        g.succ[v].resize(n);
        for (uint32_t w = 0; w < n; w++) g.succ[v][w] = w;
    }
    g.finish();
    return g;
}

// one shared random suite for the assumption-quality criteria
struct suite_entry {
    game_graph g;
    vertex_set target;
};

std::vector<suite_entry> quality_suite(size_t count, uint32_t max_n, uint64_t seed) {
    std::vector<suite_entry> out;
    auto games = fixtures::random_games(count, max_n, 4, seed);
    splitmix64 rng(seed ^ 0x5a5a5a5a);
    for (auto& g : games) {
        vertex_set t = fixtures::random_target(g, rng.next());
        out.push_back({std::move(g), std::move(t)});
    }
    return out;
}

std::vector<std::pair<objective, apa_result>> all_apas(const suite_entry& e, variant var) {
    std::vector<std::pair<objective, apa_result>> out;
    objective par{objective_kind::parity, vertex_set(e.g.n)};
    out.emplace_back(par, parity_apa(e.g, var));
    objective bu{objective_kind::buchi, e.target};
    out.emplace_back(bu, buchi_apa(e.g, e.target, var));
    objective co{objective_kind::cobuchi, e.target};
    out.emplace_back(co, cobuchi_apa(e.g, e.target, var));
    if (var == variant::standard) {
        objective sa{objective_kind::safety, e.target};
        out.emplace_back(sa, safety_apa(e.g, e.target));
    }
    return out;
}

void criterion_1() {
    game_graph g = fixtures::seven_vertex_parity();
    apa_result r = parity_apa(g);

    bool golden = r.region == vs(g, {0, 1, 2, 3, 4, 5}) && r.assum.unsafe == es({{5, 6}}) &&
                  r.assum.colive == es({{4, 4}, {5, 4}}) && r.assum.cond_live.size() == 2 &&
                  r.assum.cond_live[0].condition == vs(g, {0}) &&
                  r.assum.cond_live[0].groups ==
                      std::vector<edge_set>{es({{0, 1}})} &&
                  r.assum.cond_live[1].condition == vs(g, {2}) &&
                  r.assum.cond_live[1].groups ==
                      std::vector<edge_set>{es({{1, 3}}), es({{0, 1}})};

    double best = 1e9;
    for (int rep = 0; rep < 5; rep++) {
        auto t0 = clock_type::now();
        apa_result again = parity_apa(g);
        best = std::min(best, ms_since(t0));
        golden = golden && again.region == r.region;
    }
    report(1, golden && best < 1.0,
           "seven-vertex parity assumption exact (" + std::to_string(best) + " ms)");
}

void criterion_2() {
    bool ok = true;

    game_graph a = fixtures::two_vertex_escape();
    apa_result ra = cobuchi_apa(a, vs(a, {0}));
    ok = ok && ra.assum.unsafe == es({{0, 1}}) && ra.assum.colive.empty();

    game_graph b = fixtures::two_vertex_return();
    apa_result rb = cobuchi_apa(b, vs(b, {0}));
    ok = ok && rb.assum.colive == es({{0, 1}}) && rb.assum.unsafe.empty();

    game_graph c = fixtures::three_vertex_livegroup();
    apa_result rc = buchi_apa(c, vs(c, {0}));
    ok = ok && rc.assum.unsafe.empty() && rc.assum.colive.empty() &&
         rc.assum.cond_live.size() == 1 && rc.assum.cond_live[0].groups.size() == 1 &&
         rc.assum.cond_live[0].groups[0] == es({{1, 0}, {2, 0}});

    report(2, ok, "two-vertex safety/co-live and three-vertex live-group templates exact");
}

void criterion_3() {
    game_graph g = fixtures::chain_right();
    apa_result r = buchi_apa(g, vs(g, {0}));
    report(3, r.region == g.alive && r.assum.is_true(),
           "frontier extraction yields the trivial assumption on the cooperative chain");
}

void criterion_4() {
    auto t0 = clock_type::now();
    size_t bad = 0;
    auto games = fixtures::random_games(1000, 12, 4, 0xACCE1);
    splitmix64 rng(0xACCE2);
    for (const auto& g : games) {
        vertex_set u = fixtures::random_target(g, rng.next());
        fixpoint_trace b = buchi_coop(g, u), tb = tbuchi(g, u);
        if (b.result != tb.result || tb.mu_iterations > b.mu_iterations) bad++;
        fixpoint_trace c = cobuchi_coop(g, u), tc = tcobuchi(g, u);
        if (c.result != tc.result || tc.mu_iterations > c.mu_iterations) bad++;
    }
    double ms = ms_since(t0);
    report(4, bad == 0 && ms < 60000.0,
           "acceleration equalities on 1000 games, " + std::to_string(bad) + " failures (" +
               std::to_string(ms / 1000.0) + " s)");
}

void criterion_5() {
    size_t bad = 0;
    auto games = fixtures::random_games(1000, 8, 4, 0xACCE5);
    for (const auto& g : games)
        if (parity_coop(g) != oracle::coop_region_bruteforce(g)) bad++;
    report(5, bad == 0,
           "parity region vs brute-force oracle on 1000 games, " + std::to_string(bad) +
               " failures");
}

void criterion_6(const std::vector<suite_entry>& suite) {
    size_t bad = 0;
    for (const auto& e : suite)
        for (auto& [obj, r] : all_apas(e, variant::standard))
            if (!oracle::check_permissive(e.g, obj, r.assum).pass) bad++;

    // the singleton-live-edge assumption must be flagged with a witness
    game_graph g = fixtures::three_vertex_livegroup();
    assumption live_edges;
    for (uint32_t src : {1u, 2u}) {
        conditional_live_group cg;
        cg.condition = vs(g, {src});
        cg.groups.push_back(es({{src, 0}}));
        live_edges.cond_live.push_back(cg);
    }
    objective buchi{objective_kind::buchi, vs(g, {0})};
    oracle::check_result res = oracle::check_permissive(g, buchi, live_edges);
    bool counterexample_ok =
        !res.pass && res.counterexample.has_value() &&
        lasso_satisfies_parity(encode_buchi_priorities(g, buchi.target), *res.counterexample) &&
        !lasso_satisfies_assumption(g, *res.counterexample, live_edges);

    report(6, bad == 0 && counterexample_ok,
           "permissiveness on every assumption (" + std::to_string(bad) +
               " failures), live-edge counterexample produced");
}

void criterion_7(const std::vector<suite_entry>& suite) {
    size_t bad = 0;
    for (const auto& e : suite) {
        for (auto& [obj, r] : all_apas(e, variant::standard)) {
            if (!oracle::check_implementable_structural(e.g, r.assum).pass) bad++;
            if (r.assum.unsafe.intersects(r.assum.colive)) bad++;
            for (const conditional_live_group& cg : r.assum.cond_live)
                for (const edge_set& h : cg.groups)
                    for (const edge& ed : h)
                        if (r.assum.unsafe.contains(ed) || r.assum.colive.contains(ed)) bad++;
        }
    }
    report(7, bad == 0,
           "implementability and template separation, " + std::to_string(bad) + " failures");
}

void criterion_8(const std::vector<suite_entry>& suite) {
    size_t bad = 0;

    for (const auto& e : suite) {
        // safety: deleting the unsafe edges makes the region surely winning
        apa_result sr = safety_apa(e.g, e.target);
        game_graph pruned = e.g;
        for (uint32_t v = 0; v < e.g.n; v++) {
            std::vector<uint32_t> keep;
            for (uint32_t w : pruned.succ[v])
                if (!sr.assum.unsafe.contains({v, w})) keep.push_back(w);
            pruned.succ[v] = keep;
        }
        pruned.finish();
        if (!sr.region.is_subset_of(oracle::sure_safety_region(pruned, e.target))) bad++;

        // Buchi and co-Buchi: the proof strategies win under the assumption
        objective bu{objective_kind::buchi, e.target};
        apa_result br = buchi_apa(e.g, e.target);
        if (!oracle::check_sufficient(e.g, bu, br.assum, oracle::build_proof_strategy(e.g, bu))
                 .pass)
            bad++;
        objective co{objective_kind::cobuchi, e.target};
        apa_result cr = cobuchi_apa(e.g, e.target);
        if (!oracle::check_sufficient(e.g, co, cr.assum, oracle::build_proof_strategy(e.g, co))
                 .pass)
            bad++;
    }

    // parity: gated switching-strategy check on smaller games
    size_t parity_pass = 0, parity_fail = 0, parity_skip = 0;
    auto small = fixtures::random_games(150, 6, 4, 0xACCE8);
    objective par{objective_kind::parity, {}};
    for (const auto& g : small) {
        par.target = vertex_set(g.n);
        apa_result r = parity_apa(g);
        oracle::strategy0 s = oracle::build_proof_strategy(g, par);
        oracle::check_bounds gate;
        gate.max_vertices = 6;
        gate.max_strategies = 3;
        try {
            if (oracle::check_sufficient(g, par, r.assum, s, gate).pass) parity_pass++;
            else parity_fail++;
        } catch (const bound_error&) {
            parity_skip++;
        }
    }

    report(8, bad == 0 && parity_fail == 0 && parity_pass >= 100,
           "sufficiency: " + std::to_string(bad) + " failures; parity gated check " +
               std::to_string(parity_pass) + " pass / " + std::to_string(parity_fail) +
               " fail / " + std::to_string(parity_skip) + " skipped");
}

void criterion_9(const std::vector<suite_entry>& suite) {
    size_t bad = 0;
    for (const auto& e : suite) {
        apa_result std_b = buchi_apa(e.g, e.target, variant::standard);
        apa_result lin_b = buchi_apa(e.g, e.target, variant::linear);
        apa_result std_c = cobuchi_apa(e.g, e.target, variant::standard);
        apa_result lin_c = cobuchi_apa(e.g, e.target, variant::linear);
        apa_result lin_p = parity_apa(e.g, variant::linear);
        if (lin_b.region != std_b.region) bad++;
        if (lin_c.region != std_c.region) bad++;
        if (lin_p.region != parity_apa(e.g).region) bad++;

        for (auto& [obj, r] : all_apas(e, variant::linear)) {
            if (!oracle::check_permissive(e.g, obj, r.assum).pass) bad++;
            if (!oracle::check_implementable_structural(e.g, r.assum).pass) bad++;
            if (obj.kind == objective_kind::buchi || obj.kind == objective_kind::cobuchi) {
                oracle::strategy0 s = oracle::build_proof_strategy(e.g, obj);
                if (!oracle::check_sufficient(e.g, obj, r.assum, s).pass) bad++;
            }
        }
    }
    report(9, bad == 0,
           "linear-variant regions and quality suites, " + std::to_string(bad) + " failures");
}

void criterion_10() {
    std::vector<uint32_t> sizes{125, 250, 500, 1000, 2000};
    std::vector<double> log_n, log_t;
    bool under_budget = true;
    std::string detail;
    for (auto make : {&cycle_game, &clique_game}) {
        log_n.clear();
        log_t.clear();
        for (uint32_t n : sizes) {
            game_graph g = make(n);
            auto t0 = clock_type::now();
            apa_result r = parity_apa(g);
            double ms = ms_since(t0);
            (void)r;
            under_budget = under_budget && ms < 10000.0;
            log_n.push_back(std::log(double(n)));
            log_t.push_back(std::log(std::max(ms, 0.01)));
        }
        // least-squares slope of log t against log n
        double mx = 0, my = 0;
        for (size_t i = 0; i < log_n.size(); i++) {
            mx += log_n[i];
            my += log_t[i];
        }
        mx /= log_n.size();
        my /= log_t.size();
        double num = 0, den = 0;
        for (size_t i = 0; i < log_n.size(); i++) {
            num += (log_n[i] - mx) * (log_t[i] - my);
            den += (log_n[i] - mx) * (log_n[i] - mx);
        }
        double slope = num / den;
        detail += (make == &cycle_game ? std::string("cycle slope ") : std::string("clique slope ")) +
                  std::to_string(slope) + "  ";
        under_budget = under_budget && slope <= 4.5;
    }
    report(10, under_budget, "parity assumption scaling: " + detail);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();

    auto suite = quality_suite(500, 8, 0xACCE6);
    criterion_6(suite);
    criterion_7(suite);
    criterion_8(suite);
    criterion_9(suite);

    criterion_10();

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
