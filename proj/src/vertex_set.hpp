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

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace pga {

/**
 * Dense set of vertex ids over a fixed universe [0, n).
 * Iteration order is always ascending vertex id.
 */
class vertex_set {
public:
    vertex_set() = default;

    explicit vertex_set(uint32_t universe)
        : n_(universe), words_((universe + 63) / 64, 0) {}

    static vertex_set full(uint32_t universe) {
        vertex_set s(universe);
        for (uint32_t v = 0; v < universe; v++) s.insert(v);
        return s;
    }

    uint32_t universe() const { return n_; }

    bool contains(uint32_t v) const {
        assert(v < n_);
        return (words_[v >> 6] >> (v & 63)) & 1;
    }

    void insert(uint32_t v) {
        assert(v < n_);
        words_[v >> 6] |= uint64_t(1) << (v & 63);
    }

    void erase(uint32_t v) {
        assert(v < n_);
        words_[v >> 6] &= ~(uint64_t(1) << (v & 63));
    }

    size_t size() const {
        size_t c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    vertex_set& operator|=(const vertex_set& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); i++) words_[i] |= o.words_[i];
        return *this;
    }

    vertex_set& operator&=(const vertex_set& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); i++) words_[i] &= o.words_[i];
        return *this;
    }

    /// Set difference (this \ o).
    vertex_set& operator-=(const vertex_set& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); i++) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend vertex_set operator|(vertex_set a, const vertex_set& b) { return a |= b; }
    friend vertex_set operator&(vertex_set a, const vertex_set& b) { return a &= b; }
    friend vertex_set operator-(vertex_set a, const vertex_set& b) { return a -= b; }

    bool operator==(const vertex_set& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }
    bool operator!=(const vertex_set& o) const { return !(*this == o); }

    bool intersects(const vertex_set& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); i++)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const vertex_set& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); i++)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    /// Visits members in ascending id order.
    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); i++) {
            uint64_t w = words_[i];
            while (w) {
                uint32_t b = std::countr_zero(w);
                f(uint32_t(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<uint32_t> to_vector() const {
        std::vector<uint32_t> out;
        for_each([&](uint32_t v) { out.push_back(v); });
        return out;
    }

private:
    uint32_t n_ = 0;
    std::vector<uint64_t> words_;
};

/// Directed edge between vertex ids.
struct edge {
    uint32_t src;
    uint32_t dst;
    auto operator<=>(const edge&) const = default;
};

/**
 * Sorted set of edges; iteration order is ascending lexicographic (src, dst).
 */
class edge_set {
public:
    edge_set() = default;

    static edge_set of(std::vector<edge> edges) {
        edge_set s;
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        s.edges_ = std::move(edges);
        return s;
    }

    void insert(edge e) {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) edges_.insert(it, e);
    }

    bool contains(edge e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    edge_set& operator|=(const edge_set& o) {
        std::vector<edge> merged;
        merged.reserve(edges_.size() + o.edges_.size());
        std::set_union(edges_.begin(), edges_.end(), o.edges_.begin(), o.edges_.end(),
                       std::back_inserter(merged));
        edges_ = std::move(merged);
        return *this;
    }

    edge_set& operator-=(const edge_set& o) {
        std::vector<edge> out;
        std::set_difference(edges_.begin(), edges_.end(), o.edges_.begin(), o.edges_.end(),
                            std::back_inserter(out));
        edges_ = std::move(out);
        return *this;
    }

    bool intersects(const edge_set& o) const {
        auto a = edges_.begin();
        auto b = o.edges_.begin();
        while (a != edges_.end() && b != o.edges_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else return true;
        }
        return false;
    }

    bool operator==(const edge_set&) const = default;

    size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }

    /// All vertices incident to some edge (sources and targets).
    vertex_set incident(uint32_t universe) const {
        vertex_set s(universe);
        for (const edge& e : edges_) {
            s.insert(e.src);
            s.insert(e.dst);
        }
        return s;
    }

    vertex_set sources(uint32_t universe) const {
        vertex_set s(universe);
        for (const edge& e : edges_) s.insert(e.src);
        return s;
    }

private:
    std::vector<edge> edges_;
};

} // namespace pga
