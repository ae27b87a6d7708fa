#include "ctxgraph/polytope.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "ctxgraph/simplex.hpp"

namespace ctx {

using Rational = boost::multiprecision::cpp_rational;

std::vector<DeterministicAssignment> deterministic_vertices(const Graph& g,
                                                            const OutcomeSpace& outcomes) {
    uint64_t total = 1;
    for (int v = 0; v < g.size(); ++v) {
        total *= static_cast<uint64_t>(outcomes.count(v));
        if (total > kMaxJointSize) throw SizeBoundExceeded{};
    }
    std::vector<int> all(static_cast<size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) all[static_cast<size_t>(v)] = v;
    std::vector<DeterministicAssignment> out;
    out.reserve(total);
    for (uint64_t idx = 0; idx < total; ++idx)
        out.push_back(decode_outcomes(outcomes, all, idx));
    return out;
}

std::vector<double> behavior_vector(const Behavior& b) {
    std::vector<double> vec;
    for (const auto& clique : b.graph.maximal_cliques()) {
        const Table* t = nullptr;
        for (const auto& tab : b.tables)
            if (tab.verts == clique) { t = &tab; break; }
        if (!t) throw std::invalid_argument("behavior_vector: missing clique table");
        vec.insert(vec.end(), t->p.begin(), t->p.end());
    }
    return vec;
}

std::vector<double> assignment_vector(const Graph& g, const OutcomeSpace& outcomes,
                                      const DeterministicAssignment& a) {
    std::vector<double> vec;
    for (const auto& clique : g.maximal_cliques()) {
        uint64_t sz = table_size(outcomes, clique);
        std::vector<int> choice;
        for (int v : clique) choice.push_back(a[static_cast<size_t>(v)]);
        uint64_t hit = encode_outcomes(outcomes, clique, choice);
        for (uint64_t i = 0; i < sz; ++i) vec.push_back(i == hit ? 1.0 : 0.0);
    }
    return vec;
}

double evaluate_witness(const std::vector<double>& coeffs, const Behavior& b) {
    auto vec = behavior_vector(b);
    if (vec.size() != coeffs.size())
        throw std::invalid_argument("evaluate_witness: coefficient length mismatch");
    double v = 0.0;
    for (size_t i = 0; i < vec.size(); ++i) v += coeffs[i] * vec[i];
    return v;
}

double classical_bound(const std::vector<double>& coeffs, const Graph& g,
                       const OutcomeSpace& outcomes) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& a : deterministic_vertices(g, outcomes)) {
        auto vec = assignment_vector(g, outcomes, a);
        if (vec.size() != coeffs.size())
            throw std::invalid_argument("classical_bound: coefficient length mismatch");
        double v = 0.0;
        for (size_t i = 0; i < vec.size(); ++i) v += coeffs[i] * vec[i];
        best = std::max(best, v);
    }
    return best;
}

namespace {

struct LpData {
    std::vector<std::vector<double>> columns;  // one per deterministic vertex
    std::vector<double> target;                // behavior vector
    size_t rows() const { return target.size(); }
};

template <class T>
struct LpSolution {
    typename Simplex<T>::Status status;
    T deviation;
    std::vector<T> weights;
    std::vector<T> dual;  // length rows()+1, last entry = normalization row
};

// min sum(s+ + s-)  s.t.  sum_v w_v col_v + s+ - s- = target, sum_v w_v = 1.
template <class T>
LpSolution<T> solve_membership_lp(const LpData& lp, T eps) {
    const size_t R = lp.rows();
    const size_t V = lp.columns.size();
    const size_t cols = V + 2 * R;
    std::vector<std::vector<T>> a(R + 1, std::vector<T>(cols, T(0)));
    std::vector<T> b(R + 1), c(cols, T(0));
    for (size_t r = 0; r < R; ++r) {
        for (size_t v = 0; v < V; ++v) a[r][v] = T(lp.columns[v][r]);
        a[r][V + r] = T(1);
        a[r][V + R + r] = T(-1);
        b[r] = T(lp.target[r]);
        c[V + r] = T(1);
        c[V + R + r] = T(1);
    }
    for (size_t v = 0; v < V; ++v) a[R][v] = T(1);
    b[R] = T(1);

    Simplex<T> solver(std::move(a), std::move(b), std::move(c), eps);
    auto res = solver.solve();
    LpSolution<T> out{res.status, res.objective, {}, res.dual};
    out.weights.assign(res.x.begin(), res.x.begin() + static_cast<long>(V));
    return out;
}

}  // namespace

std::vector<double> cycle_witness(int n) {
    if (n < 4) throw std::invalid_argument("cycle_witness: n >= 4");
    Graph g = Graph::cycle(n);
    auto outcomes = OutcomeSpace::binary(n);
    std::vector<double> coeffs;
    for (const auto& clique : g.maximal_cliques()) {
        int u = clique[0], v = clique[1];
        bool wrap = (u == 0 && v == n - 1);
        double gamma = (n % 2 == 1) ? -1.0 : (wrap ? -1.0 : 1.0);
        for (int a = 0; a < 2; ++a)
            for (int bo = 0; bo < 2; ++bo)
                coeffs.push_back(gamma * (a == 0 ? 1.0 : -1.0) * (bo == 0 ? 1.0 : -1.0));
    }
    return coeffs;
}

MembershipResult membership(const Behavior& b, double tol, SolverMode mode) {
    if (auto report = check_consistency(b, tol); !report)
        throw InconsistentBehaviorError(report.what);

    LpData lp;
    lp.target = behavior_vector(b);
    for (const auto& a : deterministic_vertices(b.graph, b.outcomes))
        lp.columns.push_back(assignment_vector(b.graph, b.outcomes, a));

    const size_t R = lp.rows();
    const size_t C = b.graph.maximal_cliques().size();

    double deviation = 0.0;
    std::vector<double> weights, dual;
    bool exact = false;

    if (mode != SolverMode::Exact) {
        auto sol = solve_membership_lp<double>(lp, 1e-11);
        if (sol.status != Simplex<double>::Status::Optimal)
            throw std::runtime_error("membership: LP solver failure");
        deviation = sol.deviation;
        weights.assign(sol.weights.begin(), sol.weights.end());
        dual.assign(sol.dual.begin(), sol.dual.end());
        bool borderline = deviation > tol / 10.0 && deviation < tol * 10.0;
        if (mode == SolverMode::Auto && borderline &&
            lp.columns.size() * R <= 200000)
            mode = SolverMode::Exact;  // rerun with rational pivoting
    }
    if (mode == SolverMode::Exact) {
        auto sol = solve_membership_lp<Rational>(lp, Rational(0));
        if (sol.status != Simplex<Rational>::Status::Optimal)
            throw std::runtime_error("membership: exact LP solver failure");
        deviation = static_cast<double>(sol.deviation);
        weights.clear();
        for (const auto& w : sol.weights) weights.push_back(static_cast<double>(w));
        dual.clear();
        for (const auto& y : sol.dual) dual.push_back(static_cast<double>(y));
        exact = true;
    }

    MembershipResult result{Verdict::Noncontextual, {}, std::nullopt, deviation, exact};
    if (deviation <= tol) {
        double total = 0.0;
        for (double w : weights) total += w;
        if (total > 0)
            for (double& w : weights) w /= total;
        result.weights = std::move(weights);
        return result;
    }

    result.verdict = Verdict::Contextual;
    std::vector<double> w(dual.begin(), dual.begin() + static_cast<long>(R));
    double bound_raw = classical_bound(w, b.graph, b.outcomes);
    // Affine normalization: every assignment vector sums to the clique count,
    // so a uniform shift moves bound and value together. Pin the bound at 1.
    double shift = (1.0 - bound_raw) / static_cast<double>(C);
    for (double& x : w) x += shift;
    Witness witness;
    witness.coeffs = std::move(w);
    witness.classical_bound = classical_bound(witness.coeffs, b.graph, b.outcomes);
    witness.value = evaluate_witness(witness.coeffs, b);
    result.witness = std::move(witness);
    return result;
}

}  // namespace ctx
