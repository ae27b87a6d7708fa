#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctxgraph/graph.hpp"

namespace ctx {

// Dense joint tables are capped at this many outcome tuples.
inline constexpr uint64_t kMaxJointSize = 1ull << 20;

inline constexpr double kDefaultTol = 1e-9;

// Per-measurement outcome labels.
struct OutcomeSpace {
    std::vector<std::vector<std::string>> labels;

    int count(int v) const { return static_cast<int>(labels[static_cast<size_t>(v)].size()); }
    int measurements() const { return static_cast<int>(labels.size()); }

    static OutcomeSpace binary(int n) {
        return {std::vector<std::vector<std::string>>(static_cast<size_t>(n), {"0", "1"})};
    }

    void validate() const;
};

// Probability table over the joint outcomes of `verts` (ascending). Values
// are indexed mixed-radix with the last vertex fastest.
struct Table {
    std::vector<int> verts;
    std::vector<double> p;

    uint64_t size() const { return p.size(); }
    double sum() const;
};

uint64_t table_size(const OutcomeSpace& outcomes, const std::vector<int>& verts);

// Decode/encode between flat indices and per-vertex outcome indices.
std::vector<int> decode_outcomes(const OutcomeSpace& outcomes, const std::vector<int>& verts,
                                 uint64_t index);
uint64_t encode_outcomes(const OutcomeSpace& outcomes, const std::vector<int>& verts,
                         const std::vector<int>& choice);

// Sum `t` over the outcomes of vertices not in `subset`; subset must be a
// subset of t.verts and is returned ascending.
Table marginalize(const OutcomeSpace& outcomes, const Table& t, std::vector<int> subset);

// One probability table per maximal clique of the graph.
struct ContextMarginals {
    Graph graph;
    OutcomeSpace outcomes;
    std::vector<Table> tables;
};

struct ConsistencyReport {
    bool ok = true;
    std::string what;             // human-readable reason on failure
    std::vector<int> clique_a;    // offending cliques for overlap violations
    std::vector<int> clique_b;
    double deviation = 0.0;

    explicit operator bool() const { return ok; }
};

// Normalization and pairwise overlap consistency within tol. A missing or
// misshapen clique table is an error, not a report.
ConsistencyReport check_consistency(const ContextMarginals& m, double tol = kDefaultTol);

// Global extension on a chordal graph following the perfect-elimination
// recursion; 0/0 terms are taken as 0. Output verts are 0..n-1.
Table vorobyev_extend(const ContextMarginals& m, double tol = kDefaultTol);

struct NotChordalError : std::runtime_error {
    NotChordalError() : std::runtime_error("graph is not chordal") {}
};
struct InconsistentMarginalsError : std::runtime_error {
    explicit InconsistentMarginalsError(const std::string& w)
        : std::runtime_error("inconsistent marginals: " + w) {}
};

// Marginals of a full joint, one table per maximal clique.
ContextMarginals marginals_of_joint(const Graph& g, const OutcomeSpace& outcomes, const Table& joint);

}  // namespace ctx
