#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ctxgraph/classify.hpp"
#include "ctxgraph/quantum.hpp"
#include "support.hpp"

using ctx::Graph;
using ctx::Matrix;
using ctx::TensorOp;
using ctx::Verdict;

namespace {

double kcbs_optimum(int n) {
    double c = std::cos(std::numbers::pi / n);
    return (3.0 * n * c - n) / (1.0 + c);
}

}  // namespace

TEST_SUITE("quantum") {

TEST_CASE("pentagon construction: orthogonality and validity") {
    auto r = ctx::odd_cycle_realization(5);
    for (const auto& m : r.set.measurements) ctx::validate_measurement(m, r.set.dims);
    for (int i = 0; i < 5; ++i) {
        const auto& a = r.set.measurements[static_cast<size_t>(i)];
        const auto& b = r.set.measurements[static_cast<size_t>((i + 1) % 5)];
        CHECK(ctx::max_commutator_norm(a, b) < 1e-12);
    }
    CHECK(ctx::compatibility_graph(r.set) == Graph::cycle(5));
}

TEST_CASE("pentagon behavior is contextual at the known optimum") {
    auto r = ctx::odd_cycle_realization(5);
    Graph g = Graph::cycle(5);
    auto b = ctx::born_behavior(r.state, r.set, g);
    CHECK(ctx::membership(b).verdict == Verdict::Contextual);
    CHECK(ctx::evaluate_witness(ctx::cycle_witness(5), b) ==
          doctest::Approx(kcbs_optimum(5)).epsilon(1e-9));
}

TEST_CASE("seven-cycle construction works the same way") {
    auto r = ctx::odd_cycle_realization(7);
    CHECK(ctx::compatibility_graph(r.set) == Graph::cycle(7));
    auto b = ctx::born_behavior(r.state, r.set, Graph::cycle(7));
    CHECK(ctx::membership(b).verdict == Verdict::Contextual);
}

TEST_CASE("two-qubit square construction") {
    auto r = ctx::even_cycle_realization(4);
    for (const auto& m : r.set.measurements) ctx::validate_measurement(m, r.set.dims);
    CHECK(ctx::compatibility_graph(r.set) == Graph::cycle(4));
    auto b = ctx::born_behavior(r.state, r.set, Graph::cycle(4));
    CHECK(ctx::evaluate_witness(ctx::cycle_witness(4), b) ==
          doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-9));
    CHECK(ctx::membership(b).verdict == Verdict::Contextual);
}

TEST_CASE("six-cycle search gives exactly the cycle, violated") {
    auto r = ctx::even_cycle_realization(6, 1, 9000);
    Graph g = ctx::compatibility_graph(r.set);
    CHECK(g == Graph::cycle(6));
    // opposite vertices must genuinely fail to commute
    CHECK(ctx::max_commutator_norm(r.set.measurements[1], r.set.measurements[4]) > 1e-5);
    auto b = ctx::born_behavior(r.state, r.set, g);
    CHECK(ctx::evaluate_witness(ctx::cycle_witness(6), b) > 4.0);
    CHECK(ctx::membership(b).verdict == Verdict::Contextual);
}

TEST_CASE("one-vertex extension: graph, validity, and preserved tables") {
    auto base = ctx::odd_cycle_realization(5);
    std::vector<bool> adjacency{true, true, false, false, false};
    auto ext = ctx::embed_add_vertex(base, adjacency);
    for (const auto& m : ext.set.measurements) ctx::validate_measurement(m, ext.set.dims);

    Graph want(6);
    for (int i = 0; i < 5; ++i) want.add_edge(i, (i + 1) % 5);
    want.add_edge(0, 5);
    want.add_edge(1, 5);
    CHECK(ctx::compatibility_graph(ext.set) == want);

    // old joint probabilities survive the extension
    auto before = ctx::born_behavior(base.state, base.set, Graph::cycle(5));
    auto after = ctx::born_behavior(ext.state, ext.set, want);
    for (int i = 0; i < 5; ++i) {
        int u = i, v = (i + 1) % 5;
        if (u > v) std::swap(u, v);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                double pb = 0.0, pa = 0.0;
                for (const auto& t : before.tables)
                    if (t.verts == std::vector<int>{u, v})
                        pb = t.p[static_cast<size_t>(2 * a + b)];
                for (const auto& t : after.tables)
                    if (std::find(t.verts.begin(), t.verts.end(), u) != t.verts.end() &&
                        std::find(t.verts.begin(), t.verts.end(), v) != t.verts.end())
                        pa = testsupport::pair_probability(after.outcomes, t, u, a, v, b);
                CHECK(pa == doctest::Approx(pb).epsilon(1e-12));
            }
    }
}

TEST_CASE("full pipeline on the square") {
    auto r = ctx::realize_nonchordal(Graph::cycle(4));
    CHECK(r.membership.verdict == Verdict::Contextual);
    CHECK(r.cycle_witness_result.classical_bound == doctest::Approx(2.0));
    CHECK(r.cycle_witness_result.value ==
          doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("full pipeline on the wheel") {
    Graph w(6);
    for (int i = 0; i < 5; ++i) {
        w.add_edge(i, (i + 1) % 5);
        w.add_edge(i, 5);
    }
    auto r = ctx::realize_nonchordal(w);
    CHECK(r.cycle.size() == 5);
    CHECK(ctx::compatibility_graph(r.realization.set) == w);
    CHECK(r.membership.verdict == Verdict::Contextual);
}

TEST_CASE("chordal graphs are refused") {
    CHECK_THROWS_AS(ctx::realize_nonchordal(Graph::complete(4)), ctx::NoContextualityPossible);
}

TEST_CASE("see-saw reaches the square optimum") {
    ctx::SeesawOptions o;
    o.restarts = 12;
    o.iterations = 250;
    auto res = ctx::seesaw_max(ctx::cycle_witness(4), Graph::cycle(4), o);
    CHECK(res.value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-3));
}

TEST_CASE("see-saw reaches the pentagon optimum in dimension 4") {
    ctx::SeesawOptions o;
    o.restarts = 20;
    o.iterations = 250;
    auto res = ctx::seesaw_max(ctx::cycle_witness(5), Graph::cycle(5), o);
    CHECK(res.value == doctest::Approx(kcbs_optimum(5)).epsilon(1e-3));
}

TEST_CASE("see-saw holds the pentagon optimum in dimension 3") {
    auto r = ctx::odd_cycle_realization(5);
    ctx::SeesawOptions o;
    o.dim = 3;
    o.restarts = 1;
    o.iterations = 60;
    o.kick = 0.0;
    for (const auto& m : r.set.measurements) {
        const auto& p = m.projectors[0].terms()[0].factors[0];
        o.warm_start.push_back(2.0 * *p - Matrix::Identity(3, 3));
    }
    auto res = ctx::seesaw_max(ctx::cycle_witness(5), Graph::cycle(5), o);
    CHECK(res.value == doctest::Approx(kcbs_optimum(5)).epsilon(1e-9));
}

}
