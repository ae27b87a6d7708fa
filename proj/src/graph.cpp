#include "ctxgraph/graph.hpp"

#include <algorithm>

namespace ctx {

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    uint32_t seen = 0;
    for (int s = 0; s < n_; ++s) {
        if ((seen >> s) & 1u) continue;
        uint32_t comp = 1u << s, frontier = comp;
        while (frontier) {
            uint32_t next = 0;
            for (int v = 0; v < n_; ++v)
                if ((frontier >> v) & 1u) next |= adj_[static_cast<size_t>(v)];
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        std::vector<int> verts;
        for (int v = 0; v < n_; ++v)
            if ((comp >> v) & 1u) verts.push_back(v);
        comps.push_back(std::move(verts));
    }
    return comps;
}

namespace {

void bron_kerbosch(const Graph& g, uint32_t r, uint32_t p, uint32_t x,
                   std::vector<uint32_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    // Pivot: vertex of p|x with most neighbors in p.
    int pivot = -1, best = -1;
    for (int v = 0; v < g.size(); ++v) {
        if (!(((p | x) >> v) & 1u)) continue;
        int cnt = __builtin_popcount(p & g.neighbor_mask(v));
        if (cnt > best) { best = cnt; pivot = v; }
    }
    uint32_t candidates = p & ~g.neighbor_mask(pivot);
    for (int v = 0; v < g.size(); ++v) {
        if (!((candidates >> v) & 1u)) continue;
        uint32_t nv = g.neighbor_mask(v);
        bron_kerbosch(g, r | (1u << v), p & nv, x & nv, out);
        p &= ~(1u << v);
        x |= 1u << v;
    }
}

}  // namespace

std::vector<std::vector<int>> Graph::maximal_cliques() const {
    std::vector<uint32_t> masks;
    bron_kerbosch(*this, 0, full_mask(n_), 0, masks);
    std::vector<std::vector<int>> cliques;
    cliques.reserve(masks.size());
    for (uint32_t m : masks) {
        std::vector<int> c;
        for (int v = 0; v < n_; ++v)
            if ((m >> v) & 1u) c.push_back(v);
        cliques.push_back(std::move(c));
    }
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

}  // namespace ctx
