#pragma once

#include <optional>
#include <vector>

#include "ctxgraph/graph.hpp"

namespace ctx {

enum class ChordalityVerdict { Chordal, Nonchordal };

// Two-sided certificate: a perfect elimination ordering when chordal, a
// chordless cycle of length >= 4 when not. peo[0] is eliminated first, i.e.
// the later neighbors of peo[i] are its neighbors among peo[i+1..].
struct ChordalityCertificate {
    ChordalityVerdict verdict;
    std::vector<int> peo;            // present iff chordal
    std::vector<int> induced_cycle;  // present iff nonchordal, in cycle order

    bool chordal() const { return verdict == ChordalityVerdict::Chordal; }
};

// Maximum-cardinality search ordering followed by explicit PEO verification;
// on a violation the offending vertex is turned into a chordless cycle.
ChordalityCertificate is_chordal(const Graph& g);

// Re-verification of certificates, independent of how they were produced.
bool verify_peo(const Graph& g, const std::vector<int>& peo);
bool verify_induced_cycle(const Graph& g, const std::vector<int>& cycle);

// Some chordless cycle of length >= 4, if one exists.
std::optional<std::vector<int>> find_induced_cycle_ge4(const Graph& g);

// First minimum-length chordless cycle in deterministic (subset) order.
// Exhaustive over vertex subsets, intended for small graphs.
std::optional<std::vector<int>> shortest_induced_cycle(const Graph& g);

// True iff the vertices in `mask` induce a single cycle (every vertex has
// induced degree 2 and the induced graph is connected). For |mask| >= 4 this
// is exactly a chordless cycle.
bool induces_cycle(const Graph& g, uint32_t mask);

// Vertices of an induced cycle mask listed in traversal order.
std::vector<int> cycle_order(const Graph& g, uint32_t mask);

}  // namespace ctx
