#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace ctx {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

// Operator on a tensor product of registers, stored as a sum of product
// terms. A missing factor stands for the identity on that register, so
// products, adjoints and traces all stay register-wise and nothing ever
// assembles a full Kronecker product.
struct TensorTerm {
    Complex coeff{1.0, 0.0};
    std::vector<std::optional<Matrix>> factors;  // nullopt = identity
};

class TensorOp {
public:
    TensorOp() = default;
    TensorOp(std::vector<int> dims, std::vector<TensorTerm> terms)
        : dims_(std::move(dims)), terms_(std::move(terms)) {
        for (auto& t : terms_) t.factors.resize(dims_.size());
    }

    static TensorOp identity(std::vector<int> dims) {
        return TensorOp(std::move(dims), {TensorTerm{{1.0, 0.0}, {}}});
    }

    // Single product term; factors may be shorter than dims (padded with
    // identities).
    static TensorOp product_term(std::vector<int> dims,
                                 std::vector<std::optional<Matrix>> factors,
                                 Complex coeff = {1.0, 0.0});

    const std::vector<int>& dims() const { return dims_; }
    const std::vector<TensorTerm>& terms() const { return terms_; }

    TensorOp operator*(const TensorOp& other) const;
    TensorOp operator+(const TensorOp& other) const;
    TensorOp operator-(const TensorOp& other) const;
    TensorOp operator*(Complex s) const;
    TensorOp adjoint() const;

    // Append extra registers; this op acts as identity on them.
    TensorOp extended(const std::vector<int>& extra_dims) const;

    Complex trace() const;

    // Tr(rho * this) for a product state given by per-register density
    // factors.
    Complex expectation(const std::vector<Matrix>& state_factors) const;

    // Frobenius inner product Tr(a^dagger b) without assembling anything.
    static Complex inner(const TensorOp& a, const TensorOp& b);

    // Merge terms that differ on at most one register. Keeps norms of
    // near-cancelling sums (commutators in particular) numerically exact.
    TensorOp compressed() const;

    double frobenius_norm() const;

    // Dense Kronecker assembly, for cross-checks on small dimensions only.
    Matrix assemble() const;

    int total_dim() const {
        int d = 1;
        for (int k : dims_) d *= k;
        return d;
    }

private:
    std::vector<int> dims_;
    std::vector<TensorTerm> terms_;
};

inline TensorOp commutator(const TensorOp& a, const TensorOp& b) { return a * b - b * a; }

inline double commutator_norm(const TensorOp& a, const TensorOp& b) {
    return commutator(a, b).frobenius_norm();
}

}  // namespace ctx
