#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctxgraph/chordal.hpp"
#include "ctxgraph/graph.hpp"

namespace ctx {

// Thrown by classify() on chordal input: no contextuality is possible there.
struct NoContextualityPossible : std::runtime_error {
    NoContextualityPossible() : std::runtime_error("chordal graph: no contextuality possible") {}
};

enum class ScenarioLabel {
    Bell,              // (a) complete multipartite
    MultipartiteIntra, // (b) multipartite with an intra-party compatible pair
    NonMultipartite,   // (c) no multipartite realization
};

std::string to_string(ScenarioLabel label);

struct ScenarioClass {
    ScenarioLabel label;
    // Present for (a) and (b): disjoint parties, cross-party pairs all
    // adjacent, each party containing a nonadjacent pair.
    std::vector<std::vector<int>> party_partition;
};

// Parties are unions of connected components of the complement graph; valid
// iff at least two components contain a complement edge. Singleton complement
// components are merged into the first non-singleton part.
std::optional<std::vector<std::vector<int>>> multipartite_partition(const Graph& g);

// Trichotomy over nonchordal graphs; throws NoContextualityPossible on
// chordal input.
ScenarioClass classify(const Graph& g);

enum class FilterMode { AnyCycle, InducedCycle };

// Shipped default: the mode that reproduces the known 6-vertex census.
inline constexpr FilterMode kDefaultFilterMode = FilterMode::InducedCycle;

// True iff every vertex lies on a cycle of length >= 4 (AnyCycle) or on a
// chordless cycle of length >= 4 (InducedCycle).
bool relevance_filter(const Graph& g, FilterMode mode);

// Canonical adjacency code: minimum edge_bits over all vertex permutations,
// paired with the vertex count. Equal for isomorphic graphs. n <= 8 only.
struct CanonicalForm {
    int n = 0;
    uint64_t bits = 0;
    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);

struct ScenarioRecord {
    Graph graph;
    CanonicalForm canonical;
    ScenarioClass scenario;
    ChordalityCertificate certificate;
};

// All isomorphism classes on 4..n_max vertices that are nonchordal and pass
// the relevance filter, sorted by (n, canonical form). n_max <= 7.
std::vector<ScenarioRecord> enumerate_scenarios(int n_max, FilterMode mode = kDefaultFilterMode);

}  // namespace ctx
