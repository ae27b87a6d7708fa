#include <doctest.h>

#include <random>

#include "ctxgraph/tensorop.hpp"

using ctx::Complex;
using ctx::Matrix;
using ctx::TensorOp;
using ctx::TensorTerm;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int d) {
    std::normal_distribution<double> gauss;
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
}

TensorOp random_op(std::mt19937_64& rng, const std::vector<int>& dims, int terms) {
    std::vector<TensorTerm> out;
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int t = 0; t < terms; ++t) {
        TensorTerm term;
        term.coeff = Complex(gauss(rng), gauss(rng));
        for (int d : dims) {
            if (unif(rng) < 0.3)
                term.factors.push_back(std::nullopt);
            else
                term.factors.push_back(random_matrix(rng, d));
        }
        out.push_back(std::move(term));
    }
    return TensorOp(dims, std::move(out));
}

}  // namespace

TEST_SUITE("tensorop") {

TEST_CASE("identity assembles to the identity") {
    TensorOp id = TensorOp::identity({2, 3});
    CHECK((id.assemble() - Matrix::Identity(6, 6)).norm() == doctest::Approx(0.0));
    CHECK(std::abs(id.trace() - Complex(6.0, 0.0)) < 1e-12);
}

TEST_CASE("register-wise algebra matches dense assembly") {
    std::mt19937_64 rng(53);
    std::vector<int> dims{2, 3, 2};
    for (int trial = 0; trial < 20; ++trial) {
        TensorOp a = random_op(rng, dims, 3);
        TensorOp b = random_op(rng, dims, 2);
        Matrix da = a.assemble(), db = b.assemble();
        CHECK(((a * b).assemble() - da * db).norm() < 1e-9);
        CHECK(((a + b).assemble() - (da + db)).norm() < 1e-9);
        CHECK(((a - b).assemble() - (da - db)).norm() < 1e-9);
        CHECK((a.adjoint().assemble() - da.adjoint()).norm() < 1e-9);
        CHECK(std::abs(a.trace() - da.trace()) < 1e-9);
        CHECK(std::abs(TensorOp::inner(a, b) - (da.adjoint() * db).trace()) < 1e-9);
        CHECK(a.frobenius_norm() == doctest::Approx(da.norm()).epsilon(1e-9));
    }
}

TEST_CASE("extended acts as identity on new registers") {
    std::mt19937_64 rng(59);
    TensorOp a = random_op(rng, {2, 2}, 2);
    TensorOp ext = a.extended({3});
    Matrix dense = ext.assemble();
    Matrix want(12, 12);
    Matrix da = a.assemble();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            want.block(3 * i, 3 * j, 3, 3) = da(i, j) * Matrix::Identity(3, 3);
    CHECK((dense - want).norm() < 1e-9);
}

TEST_CASE("compression preserves the operator") {
    std::mt19937_64 rng(61);
    std::vector<int> dims{2, 2, 2};
    for (int trial = 0; trial < 10; ++trial) {
        TensorOp a = random_op(rng, dims, 4);
        TensorOp b = random_op(rng, dims, 3);
        TensorOp c = a * b - b * a;
        CHECK((c.compressed().assemble() - c.assemble()).norm() < 1e-9);
    }
}

TEST_CASE("commutators of near-cancelling products stay at machine scale") {
    // the textbook cancellation trap: [P, I - Q] with P Q = 0
    Eigen::VectorXcd u(3), v(3);
    u << 1, 0, 0;
    v << 0, 1, 0;
    Matrix p = u * u.adjoint(), q = v * v.adjoint();
    TensorOp op_p = TensorOp::product_term({3}, {p});
    TensorOp op_rest = TensorOp::identity({3}) - TensorOp::product_term({3}, {q});
    CHECK(ctx::commutator_norm(op_p, op_rest) < 1e-13);
}

TEST_CASE("expectation with product states") {
    std::mt19937_64 rng(67);
    std::vector<int> dims{2, 3};
    TensorOp a = random_op(rng, dims, 3);
    Matrix r1 = random_matrix(rng, 2), r2 = random_matrix(rng, 3);
    Matrix rho1 = r1 * r1.adjoint(), rho2 = r2 * r2.adjoint();
    rho1 /= rho1.trace().real();
    rho2 /= rho2.trace().real();
    Matrix rho(6, 6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) rho.block(3 * i, 3 * j, 3, 3) = rho1(i, j) * rho2;
    Complex want = (rho * a.assemble()).trace();
    CHECK(std::abs(a.expectation({rho1, rho2}) - want) < 1e-9);
}

TEST_CASE("disjoint-register operators commute exactly") {
    std::mt19937_64 rng(71);
    Matrix m1 = random_matrix(rng, 2), m2 = random_matrix(rng, 3);
    TensorOp a = TensorOp::product_term({2, 3}, {m1, std::nullopt});
    TensorOp b = TensorOp::product_term({2, 3}, {std::nullopt, m2});
    CHECK(ctx::commutator_norm(a, b) == doctest::Approx(0.0));
}

}
