#include "ctxgraph/chordal.hpp"

#include <algorithm>
#include <queue>

namespace ctx {

namespace {

// Maximum-cardinality search visit order v_1..v_n; the reversed order is a
// perfect elimination ordering iff the graph is chordal.
std::vector<int> mcs_order(const Graph& g) {
    const int n = g.size();
    std::vector<int> weight(n, 0), order;
    std::vector<bool> visited(n, false);
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (best < 0 || weight[v] > weight[best])) best = v;
        visited[best] = true;
        order.push_back(best);
        for (int u : g.neighbors(best))
            if (!visited[u]) ++weight[u];
    }
    return order;
}

// Chordless cycle through v given two nonadjacent later neighbors u, w:
// shortest u-w path avoiding N[v] (except at the endpoints), closed via v.
std::optional<std::vector<int>> cycle_through(const Graph& g, int v, int u, int w) {
    const int n = g.size();
    uint32_t allowed = full_mask(n) & ~g.neighbor_mask(v) & ~(1u << v);
    allowed |= (1u << u) | (1u << w);
    std::vector<int> prev(n, -1);
    std::queue<int> q;
    q.push(u);
    prev[u] = u;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == w) break;
        for (int y : g.neighbors(x)) {
            if (!((allowed >> y) & 1u) || prev[y] != -1) continue;
            prev[y] = x;
            q.push(y);
        }
    }
    if (prev[w] == -1) return std::nullopt;
    std::vector<int> cycle{v};
    for (int x = w; x != u; x = prev[x]) cycle.push_back(x);
    cycle.push_back(u);
    std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

}  // namespace

bool verify_peo(const Graph& g, const std::vector<int>& peo) {
    const int n = g.size();
    if (static_cast<int>(peo.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (peo[i] < 0 || peo[i] >= n || pos[peo[i]] != -1) return false;
        pos[peo[i]] = i;
    }
    for (int i = 0; i < n; ++i) {
        std::vector<int> later;
        for (int u : g.neighbors(peo[i]))
            if (pos[u] > i) later.push_back(u);
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b)
                if (!g.adjacent(later[a], later[b])) return false;
    }
    return true;
}

bool verify_induced_cycle(const Graph& g, const std::vector<int>& cycle) {
    const size_t k = cycle.size();
    if (k < 4) return false;
    std::vector<bool> seen(static_cast<size_t>(g.size()), false);
    for (int v : cycle) {
        if (v < 0 || v >= g.size() || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
    }
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

ChordalityCertificate is_chordal(const Graph& g) {
    const int n = g.size();
    std::vector<int> order = mcs_order(g);
    std::vector<int> peo(order.rbegin(), order.rend());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[peo[static_cast<size_t>(i)]] = i;

    for (int i = 0; i < n; ++i) {
        int v = peo[static_cast<size_t>(i)];
        std::vector<int> later;
        for (int u : g.neighbors(v))
            if (pos[u] > i) later.push_back(u);
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b) {
                if (g.adjacent(later[a], later[b])) continue;
                auto cycle = cycle_through(g, v, later[a], later[b]);
                if (!cycle) cycle = shortest_induced_cycle(g);
                if (cycle && verify_induced_cycle(g, *cycle))
                    return {ChordalityVerdict::Nonchordal, {}, *cycle};
                // MCS failure guarantees nonchordality; exhaustive search
                // cannot miss the cycle.
                cycle = shortest_induced_cycle(g);
                return {ChordalityVerdict::Nonchordal, {}, *cycle};
            }
    }
    return {ChordalityVerdict::Chordal, peo, {}};
}

bool induces_cycle(const Graph& g, uint32_t mask) {
    int count = __builtin_popcount(mask);
    if (count < 3) return false;
    for (int v = 0; v < g.size(); ++v) {
        if (!((mask >> v) & 1u)) continue;
        if (__builtin_popcount(g.neighbor_mask(v) & mask) != 2) return false;
    }
    // 2-regular and connected <=> a single cycle.
    int start = __builtin_ctz(mask);
    uint32_t comp = 1u << start, frontier = comp;
    while (frontier) {
        uint32_t next = 0;
        for (int v = 0; v < g.size(); ++v)
            if ((frontier >> v) & 1u) next |= g.neighbor_mask(v) & mask;
        frontier = next & ~comp;
        comp |= next;
    }
    return comp == mask;
}

std::vector<int> cycle_order(const Graph& g, uint32_t mask) {
    int start = __builtin_ctz(mask);
    std::vector<int> order{start};
    uint32_t used = 1u << start;
    int cur = start;
    while (true) {
        uint32_t cand = g.neighbor_mask(cur) & mask & ~used;
        if (!cand) break;
        cur = __builtin_ctz(cand);
        order.push_back(cur);
        used |= 1u << cur;
    }
    return order;
}

std::optional<std::vector<int>> shortest_induced_cycle(const Graph& g) {
    const int n = g.size();
    for (int len = 4; len <= n; ++len) {
        // Gosper's hack: subsets of size `len` in increasing numeric order.
        uint32_t sub = (1u << len) - 1u;
        uint32_t limit = 1u << n;
        while (sub < limit) {
            if (induces_cycle(g, sub)) return cycle_order(g, sub);
            uint32_t c = sub & -sub;
            uint32_t r = sub + c;
            sub = (((r ^ sub) >> 2) / c) | r;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> find_induced_cycle_ge4(const Graph& g) {
    auto cert = is_chordal(g);
    if (cert.chordal()) return std::nullopt;
    return cert.induced_cycle;
}

}  // namespace ctx
