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

#include "game.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace pga {

void game_graph::finish() {
    pred.assign(n, {});
    succ_bits.assign(n, vertex_set(n));
    for (uint32_t v = 0; v < n; v++) {
        for (uint32_t w : succ[v]) {
            succ_bits[v].insert(w);
            pred[w].push_back(v);
        }
    }
}

edge_set game_graph::alive_edges() const {
    std::vector<edge> es;
    alive.for_each([&](uint32_t v) {
        for (uint32_t w : succ[v])
            if (alive.contains(w)) es.push_back({v, w});
    });
    return edge_set::of(std::move(es));
}

int64_t game_graph::max_alive_priority() const {
    int64_t best = -1;
    alive.for_each([&](uint32_t v) {
        if (int64_t(priority[v]) > best) best = priority[v];
    });
    return best;
}

vertex_set game_graph::priority_class(uint32_t p) const {
    vertex_set s(n);
    alive.for_each([&](uint32_t v) {
        if (priority[v] == p) s.insert(v);
    });
    return s;
}

namespace {

struct cursor {
    const std::string& text;
    size_t pos = 0;
    size_t line = 1;

    bool eof() const { return pos >= text.size(); }

    void skip_ws() {
        while (!eof()) {
            char c = text[pos];
            if (c == '\n') { line++; pos++; }
            else if (c == ' ' || c == '\t' || c == '\r') pos++;
            else break;
        }
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error(line, what);
    }

    uint64_t number() {
        skip_ws();
        if (eof() || !isdigit((unsigned char)text[pos])) fail("expected a number");
        uint64_t x = 0;
        while (!eof() && isdigit((unsigned char)text[pos])) {
            x = x * 10 + (text[pos] - '0');
            if (x > 0xffffffffull) fail("number out of range");
            pos++;
        }
        return x;
    }

    bool try_char(char c) {
        skip_ws();
        if (!eof() && text[pos] == c) { pos++; return true; }
        return false;
    }

    void expect(char c, const char* what) {
        if (!try_char(c)) fail(std::string("expected '") + c + "' " + what);
    }

    void keyword(const char* kw) {
        skip_ws();
        size_t len = strlen(kw);
        if (text.compare(pos, len, kw) != 0) fail(std::string("expected '") + kw + "'");
        pos += len;
    }

    std::string quoted() {
        // opening quote already consumed
        std::string s;
        while (!eof() && text[pos] != '"') {
            if (text[pos] == '\n') fail("unterminated vertex name");
            s += text[pos++];
        }
        if (eof()) fail("unterminated vertex name");
        pos++;
        return s;
    }
};

} // namespace

game_graph parse_pgsolver(const std::string& text) {
    cursor c{text};
    c.keyword("parity");
    uint64_t maxid = c.number();
    c.expect(';', "after header");

    game_graph g;
    g.n = uint32_t(maxid + 1);
    g.owner.assign(g.n, 0);
    g.priority.assign(g.n, 0);
    g.succ.assign(g.n, {});
    g.name.assign(g.n, "");
    g.alive = vertex_set::full(g.n);
    std::vector<bool> seen(g.n, false);

    for (;;) {
        c.skip_ws();
        if (c.eof()) break;
        size_t at = c.line;
        uint64_t id = c.number();
        if (id >= g.n) throw parse_error(at, "vertex id " + std::to_string(id) + " exceeds maxid");
        if (seen[id]) throw parse_error(at, "duplicate vertex id " + std::to_string(id));
        seen[id] = true;
        g.priority[id] = uint32_t(c.number());
        uint64_t owner = c.number();
        if (owner > 1) throw parse_error(at, "owner must be 0 or 1");
        g.owner[id] = uint8_t(owner);
        c.skip_ws();
        bool has_succs = !c.eof() && isdigit((unsigned char)text[c.pos]);
        while (has_succs) {
            uint64_t s = c.number();
            if (s >= g.n) throw parse_error(at, "successor " + std::to_string(s) + " exceeds maxid");
            // duplicate successor mentions are normalized away
            auto& list = g.succ[id];
            if (std::find(list.begin(), list.end(), uint32_t(s)) == list.end())
                list.push_back(uint32_t(s));
            has_succs = c.try_char(',');
        }
        if (g.succ[id].empty())
            throw parse_error(at, "vertex " + std::to_string(id) + " is a dead end");
        if (c.try_char('"')) g.name[id] = c.quoted();
        c.expect(';', "after vertex line");
    }

    for (uint32_t v = 0; v < g.n; v++) {
        if (!seen[v])
            throw parse_error(c.line, "vertex " + std::to_string(v) + " is never defined");
        if (g.succ[v].empty())
            throw parse_error(c.line, "vertex " + std::to_string(v) + " is a dead end");
    }

    g.finish();
    return g;
}

std::string serialize_pgsolver(const game_graph& g) {
    std::ostringstream out;
    out << "parity " << (g.n == 0 ? 0 : g.n - 1) << ";\n";
    for (uint32_t v = 0; v < g.n; v++) {
        out << v << " " << g.priority[v] << " " << int(g.owner[v]) << " ";
        std::vector<uint32_t> ss = g.succ[v];
        std::sort(ss.begin(), ss.end());
        for (size_t i = 0; i < ss.size(); i++) {
            if (i) out << ",";
            out << ss[i];
        }
        if (!g.name[v].empty()) out << " \"" << g.name[v] << "\"";
        out << ";\n";
    }
    return out.str();
}

game_graph restrict_to(const game_graph& g, const vertex_set& u) {
    assert(u.is_subset_of(g.alive));
    game_graph r = g;
    r.alive = u;
    return r;
}

std::string graph_to_json(const game_graph& g) {
    nlohmann::json vertices = nlohmann::json::array();
    g.alive.for_each([&](uint32_t v) {
        nlohmann::json jv;
        jv["id"] = v;
        jv["owner"] = int(g.owner[v]);
        jv["priority"] = g.priority[v];
        nlohmann::json ss = nlohmann::json::array();
        for (uint32_t w : g.succ[v])
            if (g.alive.contains(w)) ss.push_back(w);
        jv["succ"] = std::move(ss);
        if (!g.name[v].empty()) jv["name"] = g.name[v];
        vertices.push_back(std::move(jv));
    });
    nlohmann::json j;
    j["vertices"] = std::move(vertices);
    return j.dump();
}

} // namespace pga
