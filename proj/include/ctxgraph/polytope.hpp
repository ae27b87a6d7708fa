#pragma once

#include <optional>
#include <vector>

#include "ctxgraph/marginals.hpp"

namespace ctx {

// A behavior carries the same data as a consistent marginal family, but
// overlap consistency is checked separately rather than assumed.
using Behavior = ContextMarginals;

// Context-independent outcome choice, one outcome index per measurement.
using DeterministicAssignment = std::vector<int>;

struct SizeBoundExceeded : std::runtime_error {
    SizeBoundExceeded() : std::runtime_error("deterministic assignment space exceeds size bound") {}
};
struct InconsistentBehaviorError : std::runtime_error {
    explicit InconsistentBehaviorError(const std::string& w)
        : std::runtime_error("not a behavior family: " + w) {}
};

std::vector<DeterministicAssignment> deterministic_vertices(const Graph& g,
                                                            const OutcomeSpace& outcomes);

// Behavior coordinates: maximal cliques in sorted order, table entries in
// mixed-radix order within each clique.
std::vector<double> behavior_vector(const Behavior& b);
std::vector<double> assignment_vector(const Graph& g, const OutcomeSpace& outcomes,
                                      const DeterministicAssignment& a);

// Linear functional over behavior coordinates.
struct Witness {
    std::vector<double> coeffs;
    double classical_bound = 0.0;
    double value = 0.0;
    double gap() const { return value - classical_bound; }
};

double evaluate_witness(const std::vector<double>& coeffs, const Behavior& b);

// Maximum of the functional over all deterministic assignments.
double classical_bound(const std::vector<double>& coeffs, const Graph& g,
                       const OutcomeSpace& outcomes);

enum class Verdict { Noncontextual, Contextual };

enum class SolverMode { Auto, Float, Exact };

struct MembershipResult {
    Verdict verdict;
    std::vector<double> weights;     // over deterministic vertices (noncontextual)
    std::optional<Witness> witness;  // violated inequality (contextual)
    double deviation = 0.0;          // optimal L1 distance found by the LP
    bool exact = false;              // solved with rational pivoting
};

// Feasibility of "convex mixture of deterministic assignments reproduces all
// context tables", solved as an L1-distance LP. Contextual iff the optimal
// distance exceeds tol; the witness then comes from the LP dual, affinely
// normalized to classical bound 1.
MembershipResult membership(const Behavior& b, double tol = 1e-8,
                            SolverMode mode = SolverMode::Auto);

// Coefficients of the n-cycle correlator witness over the behavior
// coordinates of Graph::cycle(n) with binary outcomes: sum of <A_i A_i+1>
// correlators, all-negative for odd n, one negative sign for even n.
// Classical bound n-2, outcome "0" counted as +1.
std::vector<double> cycle_witness(int n);

}  // namespace ctx
