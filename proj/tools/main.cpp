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

// Command-line front end. Verbs:
//   solve       compute the cooperative winning region
//   assume      compute the assumption templates (text / json / ltl)
//   check       verify an assumption against the brute-force oracles
//   bench       time solve/assume over generated game families (CSV)
//   bench gen   emit a random game in pgsolver format
//   render-ltl  render an assumption JSON file as an LTL formula
//
// Exit codes: 0 success, 1 verification failure, 2 parse/runtime error,
// 64 usage error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <pgassume.h>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_error = 2;
constexpr int exit_usage = 64;

struct cli_error {
    int code;
    std::string message;
};

void raise(pga_status st) {
    if (st == PGA_OK) return;
    int code = exit_error;
    if (st == PGA_E_INVALID) code = exit_usage;
    throw cli_error{code, pga_last_error()};
}

using game_ptr = std::unique_ptr<pga_game, decltype(&pga_game_free)>;
using result_ptr = std::unique_ptr<pga_result, decltype(&pga_result_free)>;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cli_error{exit_usage, "cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string take(char* s) {
    std::string out = s ? s : "";
    pga_string_free(s);
    return out;
}

game_ptr parse_game(const std::string& path) {
    std::string text = read_file(path);
    pga_game* g = nullptr;
    raise(pga_game_parse(text.c_str(), &g));
    return game_ptr(g, pga_game_free);
}

pga_objective parse_objective(const std::string& name) {
    if (name == "parity") return PGA_OBJ_PARITY;
    if (name == "buchi") return PGA_OBJ_BUCHI;
    if (name == "cobuchi") return PGA_OBJ_COBUCHI;
    if (name == "safety") return PGA_OBJ_SAFETY;
    throw cli_error{exit_usage, "unknown objective: " + name};
}

pga_variant parse_variant(const std::string& name) {
    if (name == "standard") return PGA_VARIANT_STANDARD;
    if (name == "accelerated") return PGA_VARIANT_ACCELERATED;
    if (name == "linear") return PGA_VARIANT_LINEAR;
    throw cli_error{exit_usage, "unknown variant: " + name};
}

// shared per-verb options
struct run_options {
    std::string input;
    std::string objective = "parity";
    std::vector<uint32_t> target;
    bool empty_target = false;
    std::string variant = "standard";
    std::string format = "text";
};

void add_run_options(CLI::App* cmd, run_options& opt, bool with_format) {
    cmd->add_option("input", opt.input, "game in pgsolver format")->required();
    cmd->add_option("-o,--objective", opt.objective,
                    "objective: parity|buchi|cobuchi|safety (default parity)");
    cmd->add_option("-t,--target", opt.target,
                    "target vertex ids (required for non-parity objectives)")
        ->delimiter(',');
    cmd->add_flag("--empty-target", opt.empty_target,
                  "use the empty target set (region computations on nothing)");
    cmd->add_option("--variant", opt.variant, "algorithm variant: standard|accelerated|linear");
    if (with_format)
        cmd->add_option("-f,--format", opt.format, "output format: text|json|ltl");
}

const uint32_t* target_ptr(const run_options& opt) {
    static const uint32_t no_ids = 0;
    if (!opt.target.empty()) return opt.target.data();
    return opt.empty_target ? &no_ids : nullptr;
}

result_ptr compute(const pga_game* g, const run_options& opt) {
    pga_result* r = nullptr;
    raise(pga_compute(g, parse_objective(opt.objective), target_ptr(opt), opt.target.size(),
                      parse_variant(opt.variant), &r));
    return result_ptr(r, pga_result_free);
}

std::vector<uint32_t> region_of(const pga_result* r) {
    std::vector<uint32_t> out(pga_result_region_size(r));
    size_t len = 0;
    if (!out.empty()) raise(pga_result_region_vertices(r, out.data(), out.size(), &len));
    return out;
}

int cmd_solve(const run_options& opt, bool cross_check) {
    game_ptr g = parse_game(opt.input);
    result_ptr r = compute(g.get(), opt);
    std::vector<uint32_t> region = region_of(r.get());

    // iteration counts per variant; only Buchi/co-Buchi have two fixpoint routes
    std::vector<std::pair<std::string, result_ptr>> runs;
    runs.emplace_back(opt.variant, std::move(r));
    if (opt.objective == "buchi" || opt.objective == "cobuchi") {
        for (const char* v : {"standard", "accelerated"}) {
            if (opt.variant == v) continue;
            run_options other = opt;
            other.variant = v;
            runs.emplace_back(v, compute(g.get(), other));
        }
    }

    if (opt.format == "json") {
        std::ostringstream out;
        out << "{\"region\":[";
        for (size_t i = 0; i < region.size(); i++) out << (i ? "," : "") << region[i];
        out << "],\"iterations\":{";
        for (size_t i = 0; i < runs.size(); i++) {
            out << (i ? "," : "") << "\"" << runs[i].first << "\":{\"mu\":"
                << pga_result_mu_iterations(runs[i].second.get())
                << ",\"nu\":" << pga_result_nu_iterations(runs[i].second.get()) << "}";
        }
        out << "}}";
        std::cout << out.str() << "\n";
    } else {
        std::cout << "region (" << region.size() << "/" << pga_game_vertex_count(g.get())
                  << "):";
        for (uint32_t v : region) std::cout << " " << v;
        std::cout << "\n";
        for (auto& [name, run] : runs)
            std::cout << "iterations[" << name << "]: mu=" << pga_result_mu_iterations(run.get())
                      << " nu=" << pga_result_nu_iterations(run.get()) << "\n";
    }

    if (cross_check) {
        pga_game* enc = nullptr;
        raise(pga_game_encode(g.get(), parse_objective(opt.objective), target_ptr(opt),
                              opt.target.size(), &enc));
        game_ptr encoded(enc, pga_game_free);
        pga_result* pr = nullptr;
        raise(pga_compute(encoded.get(), PGA_OBJ_PARITY, nullptr, 0,
                          parse_variant(opt.variant), &pr));
        result_ptr parity(pr, pga_result_free);
        bool same = region_of(parity.get()) == region;
        std::cout << "parity-encoding cross-check: " << (same ? "match" : "MISMATCH") << "\n";
        if (!same) return exit_check_failed;
    }
    return exit_ok;
}

int cmd_assume(const run_options& opt) {
    game_ptr g = parse_game(opt.input);
    result_ptr r = compute(g.get(), opt);
    char* out = nullptr;
    if (opt.format == "json") raise(pga_result_assumption_json(r.get(), &out));
    else if (opt.format == "ltl") raise(pga_result_assumption_ltl(r.get(), &out));
    else raise(pga_result_assumption_text(r.get(), &out));
    std::string text = take(out);
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return exit_ok;
}

uint32_t env_or(const char* name, uint32_t fallback) {
    const char* v = std::getenv(name);
    return v ? uint32_t(std::strtoul(v, nullptr, 10)) : fallback;
}

int cmd_check(const run_options& opt, const std::string& checks,
              const std::string& assumption_file, uint32_t max_n, uint32_t max_strategies,
              uint64_t max_product) {
    game_ptr g = parse_game(opt.input);

    pga_check_opts opts{};
    opts.max_vertices = env_or("PGASSUME_ORACLE_N", max_n);
    opts.max_strategies = env_or("PGASSUME_ORACLE_STRATEGIES", max_strategies);
    opts.max_product_states = env_or("PGASSUME_ORACLE_PRODUCT", uint32_t(max_product));
    opts.run_agreement = checks == "all" || checks.find("agreement") != std::string::npos;
    opts.run_implementable =
        checks == "all" || checks.find("implementable") != std::string::npos;
    opts.run_permissive = checks == "all" || checks.find("permissive") != std::string::npos;
    opts.run_sufficient = checks == "all" || checks.find("sufficient") != std::string::npos;

    std::string assumption_json;
    const char* injected = nullptr;
    if (!assumption_file.empty()) {
        assumption_json = read_file(assumption_file);
        injected = assumption_json.c_str();
    }

    char* report = nullptr;
    int passed = 0;
    raise(pga_check(g.get(), parse_objective(opt.objective), target_ptr(opt),
                    opt.target.size(), parse_variant(opt.variant), injected, &opts, &report,
                    &passed));
    std::cout << take(report);
    return passed ? exit_ok : exit_check_failed;
}

// deterministic benchmark families
std::string chain_text(uint32_t n) {
    std::ostringstream out;
    out << "parity " << n - 1 << ";\n";
    for (uint32_t v = 0; v < n; v++)
        out << v << " " << (v == 0 ? 2 : 1) << " " << v % 2 << " " << (v + 1) % n << ";\n";
    return out.str();
}

std::string clique_text(uint32_t n) {
    std::ostringstream out;
    out << "parity " << n - 1 << ";\n";
    for (uint32_t v = 0; v < n; v++) {
        out << v << " " << v % 5 << " " << v % 2 << " ";
        for (uint32_t w = 0; w < n; w++) out << (w ? "," : "") << w;
        out << ";\n";
    }
    return out.str();
}

int cmd_bench(const std::string& family, const std::vector<uint32_t>& sizes, uint64_t seed,
              const run_options& opt, const std::string& out_path) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw cli_error{exit_usage, "cannot write " + out_path};
        out = &file;
    }
    *out << "game,n,m,d,variant,iterations,micros\n";

    for (uint32_t n : sizes) {
        game_ptr g(nullptr, pga_game_free);
        std::string label = family + std::to_string(n);
        if (family == "chain" || family == "clique") {
            std::string text = family == "chain" ? chain_text(n) : clique_text(n);
            pga_game* raw = nullptr;
            raise(pga_game_parse(text.c_str(), &raw));
            g = game_ptr(raw, pga_game_free);
        } else if (family == "random") {
            pga_game* raw = nullptr;
            raise(pga_game_generate(n, 1, 3, 4, 500, seed + n, &raw));
            g = game_ptr(raw, pga_game_free);
        } else {
            throw cli_error{exit_usage, "unknown family: " + family};
        }

        for (const char* variant : {"standard", "accelerated"}) {
            run_options ropt = opt;
            ropt.variant = variant;
            auto t0 = std::chrono::steady_clock::now();
            result_ptr r = compute(g.get(), ropt);
            auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
            *out << label << "," << pga_game_vertex_count(g.get()) << ","
                 << pga_game_edge_count(g.get()) << "," << pga_game_max_priority(g.get())
                 << "," << variant << "," << pga_result_mu_iterations(r.get()) << ","
                 << micros << "\n";
        }
    }
    return exit_ok;
}

int cmd_bench_gen(uint32_t n, uint32_t deg_lo, uint32_t deg_hi, uint32_t max_priority,
                  uint32_t p1_permille, uint64_t seed, const std::string& out_path) {
    pga_game* raw = nullptr;
    raise(pga_game_generate(n, deg_lo, deg_hi, max_priority, p1_permille, seed, &raw));
    game_ptr g(raw, pga_game_free);
    char* text = nullptr;
    raise(pga_game_serialize(g.get(), &text));
    std::string body = take(text);
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream file(out_path);
        if (!file) throw cli_error{exit_usage, "cannot write " + out_path};
        file << body;
    }
    return exit_ok;
}

int cmd_render_ltl(const std::string& game_path, const std::string& assumption_path) {
    game_ptr g = parse_game(game_path);
    std::string json = read_file(assumption_path);
    char* out = nullptr;
    raise(pga_assumption_render_ltl(g.get(), json.c_str(), &out));
    std::cout << take(out) << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cooperative winning regions and permissive environment assumptions "
                 "for games on graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pga_version()));

    run_options solve_opt, assume_opt, check_opt;
    bool cross_check = false;
    auto* solve = app.add_subcommand("solve", "compute the cooperative winning region");
    add_run_options(solve, solve_opt, true);
    solve->add_flag("--cross-check", cross_check,
                    "also solve through the parity encoding and compare regions");

    auto* assume = app.add_subcommand("assume", "compute the assumption templates");
    add_run_options(assume, assume_opt, true);

    auto* check = app.add_subcommand("check", "verify assumptions against the oracles");
    add_run_options(check, check_opt, false);
    std::string checks = "all", assumption_file;
    uint32_t max_n = 0, max_strategies = 0;
    uint64_t max_product = 0;
    check->add_option("--checks", checks,
                      "comma list of agreement,implementable,permissive,sufficient or 'all'");
    check->add_option("--assumption-file", assumption_file,
                      "verify this assumption JSON instead of the computed one");
    check->add_option("--max-n", max_n, "witness search vertex bound (default 8)");
    check->add_option("--max-strategies", max_strategies, "strategy list gate (default 3)");
    check->add_option("--max-product", max_product, "strategy product gate (default 50000)");

    auto* bench = app.add_subcommand("bench", "benchmark solve/assume over game families");
    std::string family = "chain", bench_out;
    std::vector<uint32_t> sizes{100, 200, 400};
    uint64_t bench_seed = 1;
    run_options bench_opt;
    bench->add_option("--family", family, "chain|clique|random");
    bench->add_option("--sizes", sizes, "instance sizes")->delimiter(',');
    bench->add_option("--seed", bench_seed, "seed for the random family");
    bench->add_option("-o,--objective", bench_opt.objective, "objective (default parity)");
    bench->add_option("-t,--target", bench_opt.target, "target ids")->delimiter(',');
    bench->add_option("--out", bench_out, "write CSV here instead of stdout");

    auto* gen = bench->add_subcommand("gen", "emit a random game in pgsolver format");
    uint32_t gen_n = 8, gen_lo = 1, gen_hi = 3, gen_prio = 4, gen_permille = 500;
    uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--deg-lo", gen_lo, "minimum out-degree (>= 1)");
    gen->add_option("--deg-hi", gen_hi, "maximum out-degree");
    gen->add_option("--max-priority", gen_prio, "priorities drawn from [0, max]");
    gen->add_option("--p1-permille", gen_permille, "environment-vertex probability in 1/1000");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "write the game here instead of stdout");

    auto* render = app.add_subcommand("render-ltl", "render an assumption JSON file as LTL");
    std::string render_game, render_assumption;
    render->add_option("game", render_game, "game in pgsolver format")->required();
    render->add_option("assumption", render_assumption, "assumption JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*solve) return cmd_solve(solve_opt, cross_check);
        if (*assume) return cmd_assume(assume_opt);
        if (*check)
            return cmd_check(check_opt, checks, assumption_file, max_n, max_strategies,
                             max_product);
        if (*bench) {
            if (*gen)
                return cmd_bench_gen(gen_n, gen_lo, gen_hi, gen_prio, gen_permille, gen_seed,
                                     gen_out);
            return cmd_bench(family, sizes, bench_seed, bench_opt, bench_out);
        }
        if (*render) return cmd_render_ltl(render_game, render_assumption);
    } catch (const cli_error& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }
    return exit_usage;
}
