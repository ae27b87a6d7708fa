#include "ctxgraph/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ctx {

std::string to_string(ScenarioLabel label) {
    switch (label) {
        case ScenarioLabel::Bell: return "a";
        case ScenarioLabel::MultipartiteIntra: return "b";
        case ScenarioLabel::NonMultipartite: return "c";
    }
    return "?";
}

std::optional<std::vector<std::vector<int>>> multipartite_partition(const Graph& g) {
    auto comps = g.complement().components();
    std::vector<std::vector<int>> parts;
    std::vector<int> singletons;
    for (auto& c : comps) {
        if (c.size() >= 2)
            parts.push_back(c);
        else
            singletons.push_back(c[0]);
    }
    if (parts.size() < 2) return std::nullopt;
    // A singleton complement component is a universal vertex of g; it may sit
    // in any party without breaking cross-party completeness.
    for (int v : singletons) parts[0].push_back(v);
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end());
    return parts;
}

ScenarioClass classify(const Graph& g) {
    if (is_chordal(g).chordal()) throw NoContextualityPossible{};
    auto partition = multipartite_partition(g);
    const Graph comp = g.complement();
    auto comps = comp.components();
    bool all_parts_independent = true;  // each complement component a clique of the complement
    bool has_singleton = false;
    for (auto& c : comps) {
        if (c.size() == 1) has_singleton = true;
        for (size_t i = 0; i < c.size() && all_parts_independent; ++i)
            for (size_t j = i + 1; j < c.size(); ++j)
                if (g.adjacent(c[i], c[j])) { all_parts_independent = false; break; }
    }
    if (partition && all_parts_independent && !has_singleton)
        return {ScenarioLabel::Bell, comps};
    if (partition)
        return {ScenarioLabel::MultipartiteIntra, *partition};
    return {ScenarioLabel::NonMultipartite, {}};
}

namespace {

// Does g restricted to the vertices of `mask` contain a Hamiltonian cycle on
// exactly those vertices (chords allowed)?
bool spans_cycle(const Graph& g, uint32_t mask) {
    std::vector<int> verts;
    for (int v = 0; v < g.size(); ++v)
        if ((mask >> v) & 1u) verts.push_back(v);
    if (verts.size() < 4) return false;
    std::vector<int> rest(verts.begin() + 1, verts.end());
    std::sort(rest.begin(), rest.end());
    do {
        bool ok = g.adjacent(verts[0], rest.front()) && g.adjacent(verts[0], rest.back());
        for (size_t i = 0; ok && i + 1 < rest.size(); ++i)
            ok = g.adjacent(rest[i], rest[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
}

}  // namespace

bool relevance_filter(const Graph& g, FilterMode mode) {
    const int n = g.size();
    const uint32_t all = full_mask(n);
    uint32_t covered = 0;
    for (uint32_t mask = 0; mask <= all; ++mask) {
        if ((mask & ~covered) == 0) continue;
        if (__builtin_popcount(mask) < 4) continue;
        bool hit = mode == FilterMode::InducedCycle ? induces_cycle(g, mask)
                                                    : spans_cycle(g, mask);
        if (hit) {
            covered |= mask;
            if (covered == all) return true;
        }
    }
    return covered == all;
}

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.size();
    if (n > 8) throw std::invalid_argument("canonical_form: bounded to n <= 8");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~0ull;
    do {
        uint64_t bits = 0;
        int idx = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++idx)
                if (g.adjacent(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]))
                    bits |= 1ull << idx;
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {n, best};
}

std::vector<ScenarioRecord> enumerate_scenarios(int n_max, FilterMode mode) {
    if (n_max < 1 || n_max > 7)
        throw std::invalid_argument("enumerate_scenarios: n_max must be in [1, 7]");
    std::map<CanonicalForm, ScenarioRecord> atlas;
    for (int n = 4; n <= n_max; ++n) {
        const uint64_t graphs = 1ull << (n * (n - 1) / 2);
        for (uint64_t bits = 0; bits < graphs; ++bits) {
            Graph g = Graph::from_edge_bits(n, bits);
            auto cert = is_chordal(g);
            if (cert.chordal()) continue;
            if (!relevance_filter(g, mode)) continue;
            auto canon = canonical_form(g);
            if (atlas.contains(canon)) continue;
            atlas.emplace(canon, ScenarioRecord{g, canon, classify(g), cert});
        }
    }
    std::vector<ScenarioRecord> records;
    records.reserve(atlas.size());
    for (auto& [canon, rec] : atlas) records.push_back(std::move(rec));
    return records;
}

}  // namespace ctx
