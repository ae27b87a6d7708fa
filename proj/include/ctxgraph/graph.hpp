#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ctx {

// Simple undirected graph over vertices 0..n-1. Vertices are ideal
// measurements, edges mean joint measurability. Immutable after building.
class Graph {
public:
    static constexpr int kMaxVertices = 31;

    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0u) {
        if (n <= 0 || n > kMaxVertices)
            throw std::invalid_argument("Graph: vertex count out of range");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    static Graph cycle(int n) {
        Graph g(n);
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
        return g;
    }

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    int size() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        adj_[static_cast<size_t>(u)] |= 1u << v;
        adj_[static_cast<size_t>(v)] |= 1u << u;
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && (adj_[static_cast<size_t>(u)] >> v) & 1u;
    }

    // Bitmask of neighbors of v.
    uint32_t neighbor_mask(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        uint32_t m = neighbor_mask(v);
        for (int u = 0; u < n_; ++u)
            if ((m >> u) & 1u) out.push_back(u);
        return out;
    }

    int degree(int v) const { return __builtin_popcount(neighbor_mask(v)); }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    Graph complement() const {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!adjacent(u, v)) g.add_edge(u, v);
        return g;
    }

    // Induced subgraph on `verts`; vertex i of the result is verts[i].
    Graph induced(const std::vector<int>& verts) const {
        Graph g(static_cast<int>(verts.size()));
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (adjacent(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        return g;
    }

    bool is_clique(uint32_t mask) const {
        for (int u = 0; u < n_; ++u) {
            if (!((mask >> u) & 1u)) continue;
            uint32_t rest = mask & ~(1u << u) & ~adj_[static_cast<size_t>(u)];
            if (rest) return false;
        }
        return true;
    }

    // Upper-triangle adjacency bits, row-major: bit index of (u,v), u<v, is
    // u*n - u*(u+1)/2 + (v-u-1). Usable as a dense labeled-graph code for
    // n <= 8 enumeration loops.
    uint64_t edge_bits() const {
        uint64_t bits = 0;
        int idx = 0;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v, ++idx)
                if (adjacent(u, v)) bits |= 1ull << idx;
        return bits;
    }

    static Graph from_edge_bits(int n, uint64_t bits) {
        Graph g(n);
        int idx = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++idx)
                if ((bits >> idx) & 1ull) g.add_edge(u, v);
        return g;
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

    bool connected() const {
        uint32_t seen = 1u, frontier = 1u;
        while (frontier) {
            uint32_t next = 0;
            for (int v = 0; v < n_; ++v)
                if ((frontier >> v) & 1u) next |= adj_[static_cast<size_t>(v)];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == (n_ == 31 ? 0x7fffffffu : ((1u << n_) - 1u));
    }

    // Connected components, each as a sorted vertex list.
    std::vector<std::vector<int>> components() const;

    // All maximal cliques (Bron-Kerbosch with pivoting), sorted
    // lexicographically by vertex list.
    std::vector<std::vector<int>> maximal_cliques() const;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    }

    int n_;
    std::vector<uint32_t> adj_;
};

// Parsing of the two on-disk graph formats lives in json_io.

inline uint32_t full_mask(int n) { return n >= 31 ? 0x7fffffffu : ((1u << n) - 1u); }

}  // namespace ctx
