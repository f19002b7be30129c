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

#include "pgassume.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include <json.hpp>

#include "apa.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace pga;

struct pga_game {
    game_graph g;
};

struct pga_result {
    const pga_game* owner;
    apa_result apa;
    size_t mu = 0;
    size_t nu = 0;
};

namespace {

thread_local std::string last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(malloc(s.size() + 1));
    memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pga_status fail(pga_status code, const std::string& msg) {
    last_error = msg;
    return code;
}

template <typename F>
pga_status guarded(F&& f) {
    try {
        return f();
    } catch (const parse_error& e) {
        return fail(PGA_E_PARSE, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(PGA_E_PARSE, e.what());
    } catch (const bound_error& e) {
        return fail(PGA_E_BOUND, e.what());
    } catch (const precondition_error& e) {
        return fail(PGA_E_PRECONDITION, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(PGA_E_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(PGA_E_INTERNAL, e.what());
    }
}

pga_status make_objective(const pga_game* g, pga_objective obj, const uint32_t* target,
                          size_t target_len, objective& out) {
    switch (obj) {
        case PGA_OBJ_SAFETY: out.kind = objective_kind::safety; break;
        case PGA_OBJ_BUCHI: out.kind = objective_kind::buchi; break;
        case PGA_OBJ_COBUCHI: out.kind = objective_kind::cobuchi; break;
        case PGA_OBJ_PARITY: out.kind = objective_kind::parity; break;
        default: return fail(PGA_E_INVALID, "unknown objective");
    }
    out.target = vertex_set(g->g.n);
    if (out.kind == objective_kind::parity) return PGA_OK;
    // a null pointer means "no target given"; a non-null empty one is the empty set
    if (!target)
        return fail(PGA_E_INVALID, "a target set is required for this objective");
    for (size_t i = 0; i < target_len; i++) {
        if (target[i] >= g->g.n)
            return fail(PGA_E_INVALID,
                        "target vertex " + std::to_string(target[i]) + " is out of range");
        out.target.insert(target[i]);
    }
    return PGA_OK;
}

variant to_variant(pga_variant v) {
    switch (v) {
        case PGA_VARIANT_ACCELERATED: return variant::accelerated;
        case PGA_VARIANT_LINEAR: return variant::linear;
        default: return variant::standard;
    }
}

std::string assumption_text(const game_graph& g, const assumption& a) {
    std::ostringstream out;
    auto edge_name = [&](const edge& e) {
        return g.label(e.src) + " -> " + g.label(e.dst);
    };
    out << "unsafe edges (" << a.unsafe.size() << "):";
    for (const edge& e : a.unsafe) out << " [" << edge_name(e) << "]";
    out << "\n";
    out << "co-live edges (" << a.colive.size() << "):";
    for (const edge& e : a.colive) out << " [" << edge_name(e) << "]";
    out << "\n";
    out << "conditional live groups (" << a.cond_live.size() << "):\n";
    for (const conditional_live_group& cg : a.cond_live) {
        out << "  condition {";
        bool first = true;
        cg.condition.for_each([&](uint32_t v) {
            if (!first) out << ", ";
            out << g.label(v);
            first = false;
        });
        out << "} groups:";
        for (const edge_set& h : cg.groups) {
            out << " {";
            bool f2 = true;
            for (const edge& e : h) {
                if (!f2) out << ", ";
                out << edge_name(e);
                f2 = false;
            }
            out << "}";
        }
        out << "\n";
    }
    return out.str();
}

std::string lasso_text(const game_graph& g, const lasso& l) {
    std::ostringstream out;
    out << "stem [";
    for (size_t i = 0; i < l.stem.size(); i++) out << (i ? " " : "") << g.label(l.stem[i]);
    out << "] cycle [";
    for (size_t i = 0; i < l.cycle.size(); i++) out << (i ? " " : "") << g.label(l.cycle[i]);
    out << "]^w";
    return out.str();
}

} // namespace

extern "C" {

const char* pga_version(void) { return "0.1.0"; }

const char* pga_last_error(void) { return last_error.c_str(); }

void pga_string_free(char* s) { free(s); }

pga_status pga_game_parse(const char* text, pga_game** out) {
    if (!text || !out) return fail(PGA_E_INVALID, "null argument");
    return guarded([&] {
        auto* h = new pga_game{parse_pgsolver(text)};
        *out = h;
        return PGA_OK;
    });
}

pga_status pga_game_generate(uint32_t n, uint32_t deg_lo, uint32_t deg_hi,
                             uint32_t max_priority, uint32_t p1_permille, uint64_t seed,
                             pga_game** out) {
    if (!out) return fail(PGA_E_INVALID, "null argument");
    return guarded([&] {
        gen_spec spec{n, deg_lo, deg_hi, max_priority, p1_permille, seed};
        *out = new pga_game{generate(spec)};
        return PGA_OK;
    });
}

void pga_game_free(pga_game* g) { delete g; }

uint32_t pga_game_vertex_count(const pga_game* g) { return g ? g->g.n : 0; }

uint32_t pga_game_edge_count(const pga_game* g) {
    if (!g) return 0;
    size_t m = 0;
    for (uint32_t v = 0; v < g->g.n; v++) m += g->g.succ[v].size();
    return uint32_t(m);
}

uint32_t pga_game_max_priority(const pga_game* g) {
    if (!g) return 0;
    int64_t d = g->g.max_alive_priority();
    return d < 0 ? 0 : uint32_t(d);
}

pga_status pga_game_serialize(const pga_game* g, char** out) {
    if (!g || !out) return fail(PGA_E_INVALID, "null argument");
    return guarded([&] {
        *out = dup_string(serialize_pgsolver(g->g));
        return PGA_OK;
    });
}

pga_status pga_game_to_json(const pga_game* g, char** out) {
    if (!g || !out) return fail(PGA_E_INVALID, "null argument");
    return guarded([&] {
        *out = dup_string(graph_to_json(g->g));
        return PGA_OK;
    });
}

pga_status pga_game_encode(const pga_game* g, pga_objective obj, const uint32_t* target,
                           size_t target_len, pga_game** out) {
    if (!g || !out) return fail(PGA_E_INVALID, "null argument");
    objective o;
    pga_status st = make_objective(g, obj, target, target_len, o);
    if (st != PGA_OK) return st;
    if (o.kind != objective_kind::buchi && o.kind != objective_kind::cobuchi)
        return fail(PGA_E_INVALID, "only Buchi and co-Buchi objectives have a parity encoding");
    return guarded([&] {
        *out = new pga_game{o.kind == objective_kind::buchi
                                ? encode_buchi_priorities(g->g, o.target)
                                : encode_cobuchi_priorities(g->g, o.target)};
        return PGA_OK;
    });
}

pga_status pga_compute(const pga_game* g, pga_objective obj, const uint32_t* target,
                       size_t target_len, pga_variant var, pga_result** out) {
    if (!g || !out) return fail(PGA_E_INVALID, "null argument");
    objective o;
    pga_status st = make_objective(g, obj, target, target_len, o);
    if (st != PGA_OK) return st;
    return guarded([&] {
        auto* r = new pga_result{g, {}, 0, 0};
        r->apa = compute_apa(g->g, o, to_variant(var));
        switch (o.kind) {
            case objective_kind::safety: {
                size_t iters = 0;
                safety_coop(g->g, o.target, &iters);
                r->nu = iters;
                break;
            }
            case objective_kind::buchi: {
                fixpoint_trace tr = to_variant(var) == variant::standard
                                        ? buchi_coop(g->g, o.target)
                                        : tbuchi(g->g, o.target);
                r->mu = tr.mu_iterations;
                r->nu = tr.nu_iterations;
                break;
            }
            case objective_kind::cobuchi: {
                fixpoint_trace tr = to_variant(var) == variant::standard
                                        ? cobuchi_coop(g->g, o.target)
                                        : tcobuchi(g->g, o.target);
                r->mu = tr.mu_iterations;
                r->nu = tr.nu_iterations;
                break;
            }
            case objective_kind::parity: {
                size_t evals = 0;
                parity_coop(g->g, &evals);
                r->mu = evals;
                break;
            }
        }
        *out = r;
        return PGA_OK;
    });
}

void pga_result_free(pga_result* r) { delete r; }

size_t pga_result_region_size(const pga_result* r) {
    return r ? r->apa.region.size() : 0;
}

int pga_result_region_contains(const pga_result* r, uint32_t v) {
    if (!r || v >= r->owner->g.n) return 0;
    return r->apa.region.contains(v) ? 1 : 0;
}

pga_status pga_result_region_vertices(const pga_result* r, uint32_t* buf, size_t cap,
                                      size_t* len) {
    if (!r || !buf || !len) return fail(PGA_E_INVALID, "null argument");
    std::vector<uint32_t> vs = r->apa.region.to_vector();
    if (vs.size() > cap) return fail(PGA_E_INVALID, "buffer too small");
    std::copy(vs.begin(), vs.end(), buf);
    *len = vs.size();
    return PGA_OK;
}

uint64_t pga_result_mu_iterations(const pga_result* r) { return r ? r->mu : 0; }
uint64_t pga_result_nu_iterations(const pga_result* r) { return r ? r->nu : 0; }

pga_status pga_result_assumption_json(const pga_result* r, char** out) {
    if (!r || !out) return fail(PGA_E_INVALID, "null argument");
    return guarded([&] {
        *out = dup_string(assumption_to_json(r->apa.assum));
        return PGA_OK;
    });
}

pga_status pga_result_assumption_ltl(const pga_result* r, char** out) {
    if (!r || !out) return fail(PGA_E_INVALID, "null argument");
    return guarded([&] {
        *out = dup_string(render_ltl(r->owner->g, r->apa.assum));
        return PGA_OK;
    });
}

pga_status pga_result_assumption_text(const pga_result* r, char** out) {
    if (!r || !out) return fail(PGA_E_INVALID, "null argument");
    return guarded([&] {
        *out = dup_string(assumption_text(r->owner->g, r->apa.assum));
        return PGA_OK;
    });
}

pga_status pga_assumption_render_ltl(const pga_game* g, const char* assumption_json,
                                     char** out) {
    if (!g || !assumption_json || !out) return fail(PGA_E_INVALID, "null argument");
    return guarded([&] {
        assumption a = assumption_from_json(g->g, assumption_json);
        *out = dup_string(render_ltl(g->g, a));
        return PGA_OK;
    });
}

pga_status pga_check(const pga_game* g, pga_objective obj, const uint32_t* target,
                     size_t target_len, pga_variant var, const char* assumption_json,
                     const pga_check_opts* opts, char** report, int* all_passed) {
    if (!g || !report || !all_passed) return fail(PGA_E_INVALID, "null argument");
    objective o;
    pga_status st = make_objective(g, obj, target, target_len, o);
    if (st != PGA_OK) return st;

    pga_check_opts defaults{0, 0, 0, 1, 1, 1, 1};
    const pga_check_opts& sel = opts ? *opts : defaults;
    oracle::check_bounds bounds;
    if (sel.max_vertices) bounds.max_vertices = sel.max_vertices;
    if (sel.max_strategies) bounds.max_strategies = sel.max_strategies;
    if (sel.max_product_states) bounds.max_product_states = sel.max_product_states;

    return guarded([&] {
        std::ostringstream rep;
        bool ok = true;

        apa_result computed = compute_apa(g->g, o, to_variant(var));
        assumption a = assumption_json ? assumption_from_json(g->g, assumption_json)
                                       : computed.assum;

        auto run = [&](const char* name, auto&& body) {
            try {
                oracle::check_result res = body();
                rep << name << ": " << (res.pass ? "PASS" : "FAIL");
                if (!res.pass) {
                    ok = false;
                    rep << " (" << res.reason << ")";
                    if (res.counterexample)
                        rep << "\n  counterexample: " << lasso_text(g->g, *res.counterexample);
                }
                rep << "\n";
            } catch (const bound_error& e) {
                rep << name << ": SKIPPED (" << e.what() << ")\n";
            }
        };

        if (sel.run_agreement) {
            vertex_set oracle_region = oracle::coop_region_oracle(g->g, o);
            bool agree = computed.region == oracle_region;
            for (variant v : {variant::standard, variant::accelerated, variant::linear}) {
                if (o.kind == objective_kind::safety) break;
                apa_result other = compute_apa(g->g, o, v);
                if (other.region != computed.region) agree = false;
            }
            rep << "agreement: " << (agree ? "PASS" : "FAIL") << "\n";
            if (!agree) ok = false;
        }
        if (sel.run_implementable) {
            run("implementable", [&] {
                return oracle::check_implementable_structural(g->g, a);
            });
        }
        if (sel.run_permissive) {
            run("permissive", [&] { return oracle::check_permissive(g->g, o, a, bounds); });
        }
        if (sel.run_sufficient) {
            run("sufficient", [&] {
                oracle::strategy0 strat = oracle::build_proof_strategy(g->g, o);
                return oracle::check_sufficient(g->g, o, a, strat, bounds);
            });
        }

        *report = dup_string(rep.str());
        *all_passed = ok ? 1 : 0;
        return PGA_OK;
    });
}

} // extern "C"
