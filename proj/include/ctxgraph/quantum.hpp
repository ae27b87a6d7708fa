#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctxgraph/polytope.hpp"
#include "ctxgraph/tensorop.hpp"

namespace ctx {

struct ToleranceSettings {
    double commute_tol = 1e-10;     // at most this: certified compatible
    double incompat_margin = 1e-6;  // at least this: certified incompatible
    double projector_tol = 1e-10;
};

struct AmbiguousRealizationError : std::runtime_error {
    AmbiguousRealizationError()
        : std::runtime_error("commutator norm in the ambiguous band; realization rejected") {}
};
struct SearchBudgetExceeded : std::runtime_error {
    explicit SearchBudgetExceeded(const std::string& w)
        : std::runtime_error("search budget exceeded: " + w) {}
};

// Projective measurement over a fixed register layout. Outcome projectors
// are tensor-structured operators; together they must resolve the identity.
struct IdealMeasurement {
    std::vector<std::string> labels;
    std::vector<TensorOp> projectors;
};

struct ProductState {
    std::vector<int> dims;
    std::vector<Matrix> factors;  // one density factor per register
};

struct MeasurementSet {
    std::vector<int> dims;
    std::vector<IdealMeasurement> measurements;
};

// Hermiticity, idempotence, pairwise orthogonality, completeness.
void validate_measurement(const IdealMeasurement& m, const std::vector<int>& dims,
                          double tol = 1e-10);

// Largest commutator Frobenius norm over outcome-projector pairs.
double max_commutator_norm(const IdealMeasurement& a, const IdealMeasurement& b);

bool commute(const IdealMeasurement& a, const IdealMeasurement& b, double tol = 1e-10);

// Edge iff all projector pairs commute within commute_tol; rejects pairs in
// the ambiguous band between the two thresholds.
Graph compatibility_graph(const MeasurementSet& s, const ToleranceSettings& tols = {});

// Born-rule behavior over the maximal cliques of the given graph (which must
// be the verified compatibility graph of s).
Behavior born_behavior(const ProductState& state, const MeasurementSet& s, const Graph& g);

// Outcome labels of measurement v, as an OutcomeSpace for the whole set.
OutcomeSpace outcome_space(const MeasurementSet& s);

struct Realization {
    ProductState state;
    MeasurementSet set;
};

// Rank-1 cone construction in dimension 3; consecutive vectors orthogonal.
Realization odd_cycle_realization(int n);

// n = 4: the standard two-qubit construction. n >= 6: numerical search over
// dimension-4 binary observables with exact edge commutation (each update is
// confined to the commutant of the neighbors); non-edges must come out
// noncommuting with margin, otherwise the restart is rejected.
Realization even_cycle_realization(int n, uint64_t seed = 1, int budget = 40000);

// One-vertex extension: each old measurement gains a fresh qubit
// ancilla pinned to |0><0| on its own slot, the new vertex measures
// |psi><psi| on the ancillas of its non-neighbors. adjacency[i] says whether
// the new vertex is compatible with old vertex i.
Realization embed_add_vertex(const Realization& r, const std::vector<bool>& adjacency);

struct NonchordalRealization {
    Realization realization;       // measurements indexed by graph vertices
    std::vector<int> cycle;        // embedded induced cycle, in graph labels
    Realization cycle_realization; // the bare cycle before embedding
    Behavior behavior;
    MembershipResult membership;
    Witness cycle_witness_result;  // cycle correlator witness on the behavior
};

NonchordalRealization realize_nonchordal(const Graph& g, uint64_t seed = 1);

// Alternating (see-saw) lower bound on the quantum value of a witness over
// realizations with binary projective measurements in one register of
// dimension `dim`, subject to g's edge commutation. Coefficients are indexed
// like behavior_vector for g with binary outcomes.
struct SeesawOptions {
    int dim = 4;
    int restarts = 20;
    int iterations = 400;
    uint64_t seed = 1;
    double kick = 0.2;  // annealed random perturbation of the update operator
    std::vector<Matrix> warm_start;  // observables for the first restart
};

struct SeesawResult {
    double value = 0.0;
    bool budget_exhausted = false;
    std::vector<Matrix> observables;  // +/-1 observables, one per vertex
    Eigen::VectorXcd state;
};

SeesawResult seesaw_max(const std::vector<double>& coeffs, const Graph& g,
                        const SeesawOptions& opts = {});

}  // namespace ctx
