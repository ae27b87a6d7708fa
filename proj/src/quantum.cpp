#include "ctxgraph/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ctxgraph/chordal.hpp"
#include "ctxgraph/classify.hpp"

namespace ctx {

namespace {

Matrix ketbra(const Eigen::VectorXcd& v) { return v * v.adjoint(); }

Matrix qubit_proj0() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    return m;
}

Matrix qubit_proj1() {
    Matrix m = Matrix::Zero(2, 2);
    m(1, 1) = 1.0;
    return m;
}

Matrix qubit_proj_plus() {
    Matrix m(2, 2);
    m << 0.5, 0.5, 0.5, 0.5;
    return m;
}

Matrix hermitian_part(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

Matrix random_hermitian(std::mt19937_64& rng, int d) {
    std::normal_distribution<double> gauss;
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return hermitian_part(m);
}

// Spectral sign. Null directions do not affect the objective, so their sign
// follows the previous iterate when one is supplied (keeps the sweep from
// drifting in signature), and defaults to +1 otherwise.
Matrix sign_herm(const Matrix& m, const Matrix* prev = nullptr) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    const auto& vals = es.eigenvalues();
    double scale = std::max(vals.cwiseAbs().maxCoeff(), 1e-300);
    Matrix out = Matrix::Zero(m.rows(), m.cols());
    for (int i = 0; i < vals.size(); ++i) {
        double s;
        if (std::abs(vals(i)) > 1e-12 * scale || !prev) {
            s = vals(i) < 0 ? -1.0 : 1.0;
        } else {
            Eigen::VectorXcd u = es.eigenvectors().col(i);
            s = std::real((u.adjoint() * *prev * u)(0, 0)) < 0 ? -1.0 : 1.0;
        }
        out += s * ketbra(es.eigenvectors().col(i));
    }
    return out;
}

// Orthogonal projection of W onto {X : [X, A] = 0 for all A in fixed}.
Matrix commutant_project(const Matrix& w, const std::vector<Matrix>& fixed) {
    if (fixed.empty()) return hermitian_part(w);
    const int d = static_cast<int>(w.rows());
    const int dd = d * d;
    Matrix constraints(static_cast<int>(fixed.size()) * dd, dd);
    const Matrix id = Matrix::Identity(d, d);
    for (size_t k = 0; k < fixed.size(); ++k) {
        // vec([X, A]) = (I (x) A - A^T (x) I) vec(X), column-major vec.
        for (int c = 0; c < d; ++c)
            for (int r = 0; r < d; ++r)
                for (int c2 = 0; c2 < d; ++c2)
                    for (int r2 = 0; r2 < d; ++r2) {
                        Complex val = (c == c2 ? fixed[k](r, r2) : Complex(0)) -
                                      (r == r2 ? fixed[k](c2, c) : Complex(0));
                        constraints(static_cast<int>(k) * dd + c * d + r, c2 * d + r2) = val;
                    }
    }
    Eigen::FullPivLU<Matrix> lu(constraints);
    lu.setThreshold(1e-9);
    Matrix kernel = lu.kernel();
    if (kernel.cols() == 0) return Matrix::Zero(d, d);
    Eigen::HouseholderQR<Matrix> qr(kernel);
    Matrix q = qr.householderQ() * Matrix::Identity(dd, kernel.cols());
    Eigen::VectorXcd vecw(dd);
    for (int c = 0; c < d; ++c)
        for (int r = 0; r < d; ++r) vecw(c * d + r) = w(r, c);
    Eigen::VectorXcd proj = q * (q.adjoint() * vecw);
    Matrix out(d, d);
    for (int c = 0; c < d; ++c)
        for (int r = 0; r < d; ++r) out(r, c) = proj(c * d + r);
    return hermitian_part(out);
}

TensorOp single_register_op(int dim, const Matrix& m) {
    return TensorOp::product_term({dim}, {m});
}

IdealMeasurement binary_from_observable(int dim, const Matrix& a) {
    const Matrix id = Matrix::Identity(dim, dim);
    return {{"0", "1"},
            {single_register_op(dim, 0.5 * (id + a)), single_register_op(dim, 0.5 * (id - a))}};
}

}  // namespace

void validate_measurement(const IdealMeasurement& m, const std::vector<int>& dims, double tol) {
    TensorOp sum = TensorOp::identity(dims) * Complex(0.0, 0.0);
    for (const auto& p : m.projectors) {
        if (p.dims() != dims) throw std::invalid_argument("projector register layout mismatch");
        if ((p - p.adjoint()).frobenius_norm() > tol)
            throw std::invalid_argument("projector not Hermitian");
        if ((p * p - p).frobenius_norm() > tol)
            throw std::invalid_argument("projector not idempotent");
        sum = sum + p;
    }
    for (size_t i = 0; i < m.projectors.size(); ++i)
        for (size_t j = i + 1; j < m.projectors.size(); ++j)
            if ((m.projectors[i] * m.projectors[j]).frobenius_norm() > tol)
                throw std::invalid_argument("outcome projectors not orthogonal");
    if ((sum - TensorOp::identity(dims)).frobenius_norm() > tol)
        throw std::invalid_argument("outcome projectors do not resolve the identity");
}

double max_commutator_norm(const IdealMeasurement& a, const IdealMeasurement& b) {
    double worst = 0.0;
    for (const auto& pa : a.projectors)
        for (const auto& pb : b.projectors)
            worst = std::max(worst, commutator_norm(pa, pb));
    return worst;
}

bool commute(const IdealMeasurement& a, const IdealMeasurement& b, double tol) {
    return max_commutator_norm(a, b) <= tol;
}

Graph compatibility_graph(const MeasurementSet& s, const ToleranceSettings& tols) {
    Graph g(static_cast<int>(s.measurements.size()));
    for (size_t i = 0; i < s.measurements.size(); ++i)
        for (size_t j = i + 1; j < s.measurements.size(); ++j) {
            double norm = max_commutator_norm(s.measurements[i], s.measurements[j]);
            if (norm <= tols.commute_tol)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
            else if (norm < tols.incompat_margin)
                throw AmbiguousRealizationError{};
        }
    return g;
}

OutcomeSpace outcome_space(const MeasurementSet& s) {
    OutcomeSpace out;
    for (const auto& m : s.measurements) out.labels.push_back(m.labels);
    return out;
}

Behavior born_behavior(const ProductState& state, const MeasurementSet& s, const Graph& g) {
    Behavior b{g, outcome_space(s), {}};
    for (const auto& clique : g.maximal_cliques()) {
        Table t{clique, {}};
        uint64_t sz = table_size(b.outcomes, clique);
        t.p.resize(sz, 0.0);
        for (uint64_t idx = 0; idx < sz; ++idx) {
            auto choice = decode_outcomes(b.outcomes, clique, idx);
            TensorOp prod = TensorOp::identity(s.dims);
            for (size_t i = 0; i < clique.size(); ++i)
                prod = prod * s.measurements[static_cast<size_t>(clique[i])]
                                  .projectors[static_cast<size_t>(choice[i])];
            double p = std::real(prod.expectation(state.factors));
            t.p[idx] = std::max(0.0, p);
        }
        b.tables.push_back(std::move(t));
    }
    return b;
}

Realization odd_cycle_realization(int n) {
    if (n < 5 || n % 2 == 0) throw std::invalid_argument("odd_cycle_realization: n odd, >= 5");
    const double c = std::cos(std::numbers::pi / n);
    const double cos_theta = std::sqrt(c / (1.0 + c));
    const double sin_theta = std::sqrt(1.0 - c / (1.0 + c));
    MeasurementSet set{{3}, {}};
    const Matrix id3 = Matrix::Identity(3, 3);
    for (int j = 0; j < n; ++j) {
        double phi = j * std::numbers::pi * (n - 1) / n;
        Eigen::VectorXcd v(3);
        v << sin_theta * std::cos(phi), sin_theta * std::sin(phi), cos_theta;
        Matrix p = ketbra(v);
        set.measurements.push_back(
            {{"0", "1"}, {single_register_op(3, p), single_register_op(3, id3 - p)}});
    }
    Eigen::VectorXcd axis(3);
    axis << 0.0, 0.0, 1.0;
    ProductState state{{3}, {ketbra(axis)}};
    return {state, set};
}

namespace {

Realization chsh_realization() {
    Matrix z(2, 2), x(2, 2), id2 = Matrix::Identity(2, 2);
    z << 1, 0, 0, -1;
    x << 0, 1, 1, 0;
    auto kron = [](const Matrix& a, const Matrix& b) {
        Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        return out;
    };
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<Matrix> obs = {
        kron(z, id2),            // vertex 0
        kron(id2, s * (z + x)),  // vertex 1
        kron(x, id2),            // vertex 2
        kron(id2, s * (x - z)),  // vertex 3
    };
    MeasurementSet set{{4}, {}};
    for (const auto& a : obs) set.measurements.push_back(binary_from_observable(4, a));
    Eigen::VectorXcd phi_plus(4);
    phi_plus << 1, 0, 0, 1;
    phi_plus /= std::sqrt(2.0);
    return {ProductState{{4}, {ketbra(phi_plus)}}, set};
}

struct SeesawState {
    std::vector<Matrix> obs;
    Eigen::VectorXcd psi;
    double value = 0.0;
};

// Witness operator sum_clique sum_tuple c * prod (I +/- A)/2.
Matrix witness_operator(const std::vector<double>& coeffs, const Graph& g,
                        const std::vector<Matrix>& obs, int dim) {
    const Matrix id = Matrix::Identity(dim, dim);
    Matrix w = Matrix::Zero(dim, dim);
    size_t pos = 0;
    for (const auto& clique : g.maximal_cliques()) {
        uint64_t sz = 1ull << clique.size();
        for (uint64_t idx = 0; idx < sz; ++idx) {
            double c = coeffs[pos++];
            if (c == 0.0) continue;
            Matrix prod = id;
            for (size_t i = 0; i < clique.size(); ++i) {
                // last vertex fastest, matching encode_outcomes
                int bit = static_cast<int>((idx >> (clique.size() - 1 - i)) & 1ull);
                const Matrix& a = obs[static_cast<size_t>(clique[i])];
                Matrix p = bit == 0 ? Matrix(0.5 * (id + a)) : Matrix(0.5 * (id - a));
                prod = prod * p;
            }
            w += c * prod;
        }
    }
    return hermitian_part(w);
}

double seesaw_objective(const std::vector<double>& coeffs, const Graph& g,
                        const SeesawState& s, int dim) {
    Matrix w = witness_operator(coeffs, g, s.obs, dim);
    return std::real((s.psi.adjoint() * w * s.psi)(0, 0));
}

// Linear environment of A_v: objective = Tr(A_v M) + const.
Matrix environment(const std::vector<double>& coeffs, const Graph& g,
                   const std::vector<Matrix>& obs, const Eigen::VectorXcd& psi, int v, int dim) {
    const Matrix id = Matrix::Identity(dim, dim);
    const Matrix rho = ketbra(psi);
    Matrix m = Matrix::Zero(dim, dim);
    size_t pos = 0;
    for (const auto& clique : g.maximal_cliques()) {
        uint64_t sz = 1ull << clique.size();
        auto in_clique = std::find(clique.begin(), clique.end(), v);
        if (in_clique == clique.end()) {
            pos += sz;
            continue;
        }
        size_t vpos = static_cast<size_t>(in_clique - clique.begin());
        for (uint64_t idx = 0; idx < sz; ++idx) {
            double c = coeffs[pos++];
            if (c == 0.0) continue;
            Matrix rest = id;
            for (size_t i = 0; i < clique.size(); ++i) {
                if (i == vpos) continue;
                int bit = static_cast<int>((idx >> (clique.size() - 1 - i)) & 1ull);
                const Matrix& a = obs[static_cast<size_t>(clique[i])];
                Matrix p = bit == 0 ? Matrix(0.5 * (id + a)) : Matrix(0.5 * (id - a));
                rest = rest * p;
            }
            int vbit = static_cast<int>((idx >> (clique.size() - 1 - vpos)) & 1ull);
            double sign = vbit == 0 ? 0.5 : -0.5;
            m += (c * sign) * (rest * rho);
        }
    }
    return hermitian_part(m);
}

Eigen::VectorXcd top_eigenvector(const Matrix& w) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(w);
    return es.eigenvectors().col(w.rows() - 1);
}

// Rank-1 projector observables 2|w><w| - I with w orthogonal along edges.
// Commutants stay non-abelian, which generic diagonal inits do not manage.
std::vector<Matrix> orthogonal_representation_observables(const Graph& g, int dim,
                                                          std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    const Matrix id = Matrix::Identity(dim, dim);
    std::vector<Eigen::VectorXcd> vecs(static_cast<size_t>(g.size()));
    std::vector<Matrix> obs(static_cast<size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) {
        Eigen::VectorXcd w(dim);
        for (int i = 0; i < dim; ++i) w(i) = Complex(gauss(rng), gauss(rng));
        std::vector<int> earlier;
        for (int u : g.neighbors(v))
            if (u < v) earlier.push_back(u);
        if (!earlier.empty()) {
            Matrix span(dim, static_cast<int>(earlier.size()));
            for (size_t i = 0; i < earlier.size(); ++i)
                span.col(static_cast<int>(i)) = vecs[static_cast<size_t>(earlier[i])];
            Eigen::HouseholderQR<Matrix> qr(span);
            Matrix q = qr.householderQ() * Matrix::Identity(dim, span.cols());
            w -= q * (q.adjoint() * w);
        }
        if (w.norm() < 1e-8) {
            for (int i = 0; i < dim; ++i) w(i) = Complex(gauss(rng), gauss(rng));
        }
        w.normalize();
        vecs[static_cast<size_t>(v)] = w;
        obs[static_cast<size_t>(v)] = 2.0 * ketbra(w) - id;
    }
    return obs;
}

// Two-qubit split over a greedy 2-coloring: color-0 vertices act on the
// first qubit, color-1 on the second, so properly colored edges commute by
// construction. Needs dim 4; coloring conflicts get repaired by the first
// commutant-projected sweep.
std::vector<Matrix> tensor_split_observables(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> color(static_cast<size_t>(g.size()), -1);
    for (int v = 0; v < g.size(); ++v) {
        int c = 0;
        for (int u : g.neighbors(v))
            if (u < v && color[static_cast<size_t>(u)] == 0) c = 1;
        color[static_cast<size_t>(v)] = c;
    }
    const Matrix id2 = Matrix::Identity(2, 2);
    std::vector<Matrix> obs;
    for (int v = 0; v < g.size(); ++v) {
        Matrix local = sign_herm(random_hermitian(rng, 2));
        Matrix full(4, 4);
        if (color[static_cast<size_t>(v)] == 0)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) full.block(2 * i, 2 * j, 2, 2) = local(i, j) * id2;
        else
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    full.block(2 * i, 2 * j, 2, 2) = (i == j ? 1.0 : 0.0) * local;
        obs.push_back(std::move(full));
    }
    return obs;
}

std::vector<Matrix> random_edge_commuting_observables(const Graph& g, int dim,
                                                     std::mt19937_64& rng, int style) {
    if (style % 3 == 0) return orthogonal_representation_observables(g, dim, rng);
    if (style % 3 == 1 && dim == 4) return tensor_split_observables(g, rng);
    std::vector<Matrix> obs(static_cast<size_t>(g.size()), Matrix::Zero(dim, dim));
    for (int v = 0; v < g.size(); ++v) {
        std::vector<Matrix> fixed;
        for (int u : g.neighbors(v))
            if (u < v) fixed.push_back(obs[static_cast<size_t>(u)]);
        Matrix proj = commutant_project(random_hermitian(rng, dim), fixed);
        if (proj.norm() < 1e-12) proj = Matrix::Identity(dim, dim);
        obs[static_cast<size_t>(v)] = sign_herm(proj);
    }
    return obs;
}

}  // namespace

SeesawResult seesaw_max(const std::vector<double>& coeffs, const Graph& g,
                        const SeesawOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    SeesawResult best;
    best.value = -std::numeric_limits<double>::infinity();
    bool any_converged = false;
    const int dim = opts.dim;
    for (int restart = 0; restart < opts.restarts; ++restart) {
        SeesawState s;
        if (restart == 0 && !opts.warm_start.empty())
            s.obs = opts.warm_start;
        else
            s.obs = random_edge_commuting_observables(g, dim, rng, restart);
        s.psi = top_eigenvector(witness_operator(coeffs, g, s.obs, dim));
        double prev = -std::numeric_limits<double>::infinity();
        bool converged = false;
        for (int iter = 0; iter < opts.iterations; ++iter) {
            // kicked phase, then greedy polishing until convergence
            double kick = iter < 3 * opts.iterations / 4
                              ? opts.kick * std::exp(-4.0 * iter / std::max(1, opts.iterations))
                              : 0.0;
            for (int v = 0; v < g.size(); ++v) {
                Matrix m = environment(coeffs, g, s.obs, s.psi, v, dim);
                if (kick > 0) m += kick * random_hermitian(rng, dim);
                std::vector<Matrix> fixed;
                for (int u : g.neighbors(v)) fixed.push_back(s.obs[static_cast<size_t>(u)]);
                Matrix proj = commutant_project(m, fixed);
                    if (proj.norm() > 1e-13)
                    s.obs[static_cast<size_t>(v)] =
                        sign_herm(proj, &s.obs[static_cast<size_t>(v)]);
            }
            s.psi = top_eigenvector(witness_operator(coeffs, g, s.obs, dim));
            s.value = seesaw_objective(coeffs, g, s, dim);
            // every post-sweep iterate satisfies the edge constraints, so the
            // best one seen anywhere is a valid lower bound
            if (s.value > best.value) {
                best.value = s.value;
                best.observables = s.obs;
                best.state = s.psi;
            }
            if (kick == 0.0 && std::abs(s.value - prev) < 1e-11) {
                converged = true;
                break;
            }
            prev = s.value;
        }
        any_converged = any_converged || converged;
    }
    best.budget_exhausted = !any_converged;
    return best;
}

Realization even_cycle_realization(int n, uint64_t seed, int budget) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("even_cycle_realization: n even, >= 4");
    if (n == 4) return chsh_realization();

    const Graph g = Graph::cycle(n);
    const auto coeffs = cycle_witness(n);
    const double target = n * std::cos(std::numbers::pi / n);
    const int dim = 4;
    std::mt19937_64 rng(seed);

    std::vector<Matrix> best_obs;
    Eigen::VectorXcd best_psi;
    double best_value = -std::numeric_limits<double>::infinity();

    auto margins = [&](const std::vector<Matrix>& obs) {
        double edge_max = 0.0, nonedge_min = std::numeric_limits<double>::infinity();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                double norm = (obs[static_cast<size_t>(u)] * obs[static_cast<size_t>(v)] -
                               obs[static_cast<size_t>(v)] * obs[static_cast<size_t>(u)])
                                  .norm();
                if (g.adjacent(u, v))
                    edge_max = std::max(edge_max, norm);
                else
                    nonedge_min = std::min(nonedge_min, norm);
            }
        return std::pair{edge_max, nonedge_min};
    };

    int spent = 0;
    int restart = 0;
    while (spent < budget) {
        SeesawState s;
        s.obs = random_edge_commuting_observables(g, dim, rng, restart++);
        s.psi = top_eigenvector(witness_operator(coeffs, g, s.obs, dim));
        const int iters = 300;
        for (int iter = 0; iter < iters && spent < budget; ++iter, ++spent) {
            double kick = 0.25 * std::exp(-5.0 * iter / iters);
            for (int v = 0; v < n; ++v) {
                Matrix m = environment(coeffs, g, s.obs, s.psi, v, dim);
                if (kick > 0) m += kick * random_hermitian(rng, dim);
                std::vector<Matrix> fixed = {s.obs[static_cast<size_t>((v + n - 1) % n)],
                                             s.obs[static_cast<size_t>((v + 1) % n)]};
                Matrix proj = commutant_project(m, fixed);
                    if (proj.norm() > 1e-13)
                    s.obs[static_cast<size_t>(v)] =
                        sign_herm(proj, &s.obs[static_cast<size_t>(v)]);
            }
            s.psi = top_eigenvector(witness_operator(coeffs, g, s.obs, dim));
            s.value = seesaw_objective(coeffs, g, s, dim);
            auto [edge_max, nonedge_min] = margins(s.obs);
            if (edge_max < 1e-11 && nonedge_min > 1e-5 && s.value > best_value) {
                best_value = s.value;
                best_obs = s.obs;
                best_psi = s.psi;
            }
            if (best_value >= target - 5e-4) break;
        }
        if (best_value >= target - 5e-4) break;
    }
    if (best_obs.empty() || best_value <= n - 2)
        throw SearchBudgetExceeded("even cycle realization, n=" + std::to_string(n));

    MeasurementSet set{{dim}, {}};
    for (const auto& a : best_obs) set.measurements.push_back(binary_from_observable(dim, a));
    return {ProductState{{dim}, {ketbra(best_psi)}}, set};
}

Realization embed_add_vertex(const Realization& r, const std::vector<bool>& adjacency) {
    const size_t n_old = r.set.measurements.size();
    if (adjacency.size() != n_old)
        throw std::invalid_argument("embed_add_vertex: adjacency length mismatch");
    const size_t base_regs = r.set.dims.size();
    std::vector<int> extra(n_old, 2);
    std::vector<int> dims = r.set.dims;
    dims.insert(dims.end(), extra.begin(), extra.end());

    Realization out;
    out.set.dims = dims;
    for (size_t i = 0; i < n_old; ++i) {
        const auto& old_m = r.set.measurements[i];
        IdealMeasurement m;
        m.labels = old_m.labels;
        // Each old outcome gains |0><0| on this measurement's own ancilla.
        std::vector<std::optional<Matrix>> pin(dims.size());
        pin[base_regs + i] = qubit_proj0();
        TensorOp pin_op(dims, {TensorTerm{{1.0, 0.0}, pin}});
        for (const auto& p : old_m.projectors)
            m.projectors.push_back(p.extended(extra) * pin_op);
        // Residual outcome completing the identity: I (x) |1><1| on the slot.
        std::vector<std::optional<Matrix>> residual(dims.size());
        residual[base_regs + i] = qubit_proj1();
        m.projectors.push_back(TensorOp(dims, {TensorTerm{{1.0, 0.0}, residual}}));
        // Chained embeddings each add a residual outcome; keep labels unique.
        std::string residual_label = "_";
        while (std::find(m.labels.begin(), m.labels.end(), residual_label) != m.labels.end())
            residual_label += "_";
        m.labels.push_back(residual_label);
        out.set.measurements.push_back(std::move(m));
    }

    // The added vertex: identity on neighbors' ancillas, |psi><psi| on the
    // ancillas of non-neighbors.
    std::vector<std::optional<Matrix>> q(dims.size());
    for (size_t j = 0; j < n_old; ++j)
        if (!adjacency[j]) q[base_regs + j] = qubit_proj_plus();
    TensorOp q_op(dims, {TensorTerm{{1.0, 0.0}, q}});
    IdealMeasurement new_m;
    new_m.labels = {"0", "1"};
    new_m.projectors = {q_op, TensorOp::identity(dims) - q_op};
    out.set.measurements.push_back(std::move(new_m));

    out.state.dims = dims;
    out.state.factors = r.state.factors;
    for (size_t j = 0; j < n_old; ++j) out.state.factors.push_back(qubit_proj0());
    return out;
}

NonchordalRealization realize_nonchordal(const Graph& g, uint64_t seed) {
    auto cert = is_chordal(g);
    if (cert.chordal()) throw NoContextualityPossible{};
    auto cycle_opt = shortest_induced_cycle(g);
    std::vector<int> cycle = *cycle_opt;
    const int k = static_cast<int>(cycle.size());

    Realization current = (k % 2 == 1) ? odd_cycle_realization(k)
                                       : even_cycle_realization(k, seed);
    Realization cycle_realization = current;

    std::vector<int> realized = cycle;  // graph label of realization index i
    for (int v = 0; v < g.size(); ++v) {
        if (std::find(realized.begin(), realized.end(), v) != realized.end()) continue;
        std::vector<bool> adjacency;
        for (int u : realized) adjacency.push_back(g.adjacent(v, u));
        current = embed_add_vertex(current, adjacency);
        realized.push_back(v);
    }

    // Reindex measurements by graph vertex label.
    Realization ordered;
    ordered.state = current.state;
    ordered.set.dims = current.set.dims;
    ordered.set.measurements.resize(realized.size());
    for (size_t i = 0; i < realized.size(); ++i)
        ordered.set.measurements[static_cast<size_t>(realized[i])] = current.set.measurements[i];

    Graph verified = compatibility_graph(ordered.set);
    if (verified != g) throw std::logic_error("realize_nonchordal: compatibility graph mismatch");

    NonchordalRealization result{ordered, cycle, cycle_realization, born_behavior(ordered.state, ordered.set, g), {}, {}};
    result.membership = membership(result.behavior);

    // Cycle correlator witness evaluated on the behavior restricted to the
    // embedded cycle's edge contexts; outcome 0 counts +1, everything else -1.
    auto cliques = g.maximal_cliques();
    double value = 0.0;
    for (int i = 0; i < k; ++i) {
        int u = cycle[static_cast<size_t>(i)];
        int v = cycle[static_cast<size_t>((i + 1) % k)];
        double gamma = (k % 2 == 1) ? -1.0 : ((i == k - 1) ? -1.0 : 1.0);
        const Table* host = nullptr;
        for (size_t c = 0; c < cliques.size(); ++c) {
            const auto& cl = cliques[c];
            if (std::find(cl.begin(), cl.end(), u) != cl.end() &&
                std::find(cl.begin(), cl.end(), v) != cl.end()) {
                host = &result.behavior.tables[c];
                break;
            }
        }
        Table pair = marginalize(result.behavior.outcomes, *host, {u, v});
        double corr = 0.0;
        for (uint64_t idx = 0; idx < pair.size(); ++idx) {
            auto choice = decode_outcomes(result.behavior.outcomes, pair.verts, idx);
            double su = choice[0] == 0 ? 1.0 : -1.0;
            double sv = choice[1] == 0 ? 1.0 : -1.0;
            corr += su * sv * pair.p[idx];
        }
        value += gamma * corr;
    }
    result.cycle_witness_result.coeffs = cycle_witness(k);
    result.cycle_witness_result.classical_bound = k - 2;
    result.cycle_witness_result.value = value;
    return result;
}

}  // namespace ctx
