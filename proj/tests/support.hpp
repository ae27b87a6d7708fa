#pragma once

// Shared helpers for the test suites: brute-force oracles that deliberately
// avoid the library's own algorithms, plus random instance generators.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ctxgraph/graph.hpp"
#include "ctxgraph/marginals.hpp"

namespace testsupport {

// Does `mask` induce a single chordless cycle? Checked from first principles:
// every selected vertex has induced degree exactly 2 and the induced subgraph
// is connected.
inline bool oracle_induces_cycle(const ctx::Graph& g, uint32_t mask) {
    int count = __builtin_popcount(mask);
    if (count < 3) return false;
    for (int v = 0; v < g.size(); ++v) {
        if (!((mask >> v) & 1u)) continue;
        int deg = 0;
        for (int u = 0; u < g.size(); ++u)
            if (((mask >> u) & 1u) && g.adjacent(u, v)) ++deg;
        if (deg != 2) return false;
    }
    int start = __builtin_ctz(mask);
    uint32_t seen = 1u << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < g.size(); ++u)
            if (((mask >> u) & 1u) && !((seen >> u) & 1u) && g.adjacent(u, v)) {
                seen |= 1u << u;
                stack.push_back(u);
            }
    }
    return seen == mask;
}

// Exhaustive chordless-cycle search over all vertex subsets of size >= 4.
inline std::optional<uint32_t> oracle_chordless_cycle(const ctx::Graph& g) {
    const int n = g.size();
    for (int k = 4; k <= n; ++k) {
        uint32_t mask = (1u << k) - 1u;
        while (mask < (1u << n)) {
            if (oracle_induces_cycle(g, mask)) return mask;
            uint32_t c = mask & -mask;
            uint32_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return std::nullopt;
}

inline bool oracle_is_chordal(const ctx::Graph& g) { return !oracle_chordless_cycle(g); }

// Random chordal graph built constructively: each new vertex attaches to a
// clique among the existing vertices.
inline ctx::Graph random_chordal_graph(std::mt19937_64& rng, int n) {
    ctx::Graph g(n);
    for (int v = 1; v < n; ++v) {
        // grow a random clique greedily among vertices 0..v-1
        std::vector<int> pool;
        for (int u = 0; u < v; ++u) pool.push_back(u);
        std::shuffle(pool.begin(), pool.end(), rng);
        int want = std::uniform_int_distribution<int>(0, v)(rng);
        std::vector<int> clique;
        for (int u : pool) {
            if (static_cast<int>(clique.size()) >= want) break;
            bool ok = true;
            for (int w : clique)
                if (!g.adjacent(u, w)) ok = false;
            if (ok) clique.push_back(u);
        }
        for (int u : clique) g.add_edge(u, v);
    }
    return g;
}

// Random joint distribution over the full outcome space; `zero_fraction`
// of the entries are forced to exact zero before normalization.
inline ctx::Table random_joint(std::mt19937_64& rng, const ctx::OutcomeSpace& outcomes,
                               double zero_fraction = 0.0) {
    std::vector<int> all;
    for (int v = 0; v < outcomes.measurements(); ++v) all.push_back(v);
    ctx::Table t{all, {}};
    uint64_t sz = ctx::table_size(outcomes, all);
    std::exponential_distribution<double> expo(1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double total = 0.0;
    t.p.resize(sz, 0.0);
    for (uint64_t i = 0; i < sz; ++i) {
        if (unif(rng) < zero_fraction) continue;
        t.p[i] = expo(rng);
        total += t.p[i];
    }
    if (total == 0.0) {
        t.p[0] = 1.0;
        total = 1.0;
    }
    for (auto& x : t.p) x /= total;
    return t;
}

// Random outcome space with 2 or 3 outcomes per measurement.
inline ctx::OutcomeSpace random_outcomes(std::mt19937_64& rng, int n) {
    ctx::OutcomeSpace out;
    for (int v = 0; v < n; ++v) {
        int k = std::uniform_int_distribution<int>(2, 3)(rng);
        std::vector<std::string> labels;
        for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
        out.labels.push_back(std::move(labels));
    }
    return out;
}

// Probability that measurements u and v give outcomes (a, b), read off a
// table whose vertex list contains both.
inline double pair_probability(const ctx::OutcomeSpace& outcomes, const ctx::Table& t, int u,
                               int a, int v, int b) {
    double total = 0.0;
    for (uint64_t idx = 0; idx < t.size(); ++idx) {
        auto choice = ctx::decode_outcomes(outcomes, t.verts, idx);
        bool hit = true;
        for (size_t i = 0; i < t.verts.size(); ++i) {
            if (t.verts[i] == u && choice[i] != a) hit = false;
            if (t.verts[i] == v && choice[i] != b) hit = false;
        }
        if (hit) total += t.p[idx];
    }
    return total;
}

// All set partitions of {0..n-1}, for the multipartite oracle.
inline void enumerate_partitions(int n, std::vector<std::vector<std::vector<int>>>& out) {
    std::vector<int> assign(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int v, int parts) {
        if (v == n) {
            std::vector<std::vector<int>> p(static_cast<size_t>(parts));
            for (int u = 0; u < n; ++u) p[static_cast<size_t>(assign[static_cast<size_t>(u)])].push_back(u);
            out.push_back(std::move(p));
            return;
        }
        for (int c = 0; c <= parts; ++c) {
            assign[static_cast<size_t>(v)] = c;
            rec(v + 1, c == parts ? parts + 1 : parts);
        }
    };
    rec(0, 0);
}

// Is `parts` a multipartite split of g with at least two nontrivial parts:
// all cross-part pairs adjacent, and at least two parts holding an
// incompatible pair?
inline bool valid_multipartite(const ctx::Graph& g, const std::vector<std::vector<int>>& parts) {
    if (parts.size() < 2) return false;
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            for (int u : parts[i])
                for (int v : parts[j])
                    if (!g.adjacent(u, v)) return false;
    int nontrivial = 0;
    for (const auto& part : parts) {
        bool has_gap = false;
        for (size_t i = 0; i < part.size(); ++i)
            for (size_t j = i + 1; j < part.size(); ++j)
                if (!g.adjacent(part[i], part[j])) has_gap = true;
        if (has_gap) ++nontrivial;
    }
    return nontrivial >= 2;
}

inline bool oracle_has_multipartite_split(const ctx::Graph& g) {
    std::vector<std::vector<std::vector<int>>> partitions;
    enumerate_partitions(g.size(), partitions);
    for (const auto& p : partitions)
        if (valid_multipartite(g, p)) return true;
    return false;
}

}  // namespace testsupport
