#include "ctxgraph/tensorop.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace ctx {

namespace {

void check_same_dims(const TensorOp& a, const TensorOp& b) {
    if (a.dims() != b.dims()) throw std::invalid_argument("TensorOp: register layout mismatch");
}

}  // namespace

TensorOp TensorOp::product_term(std::vector<int> dims,
                                std::vector<std::optional<Matrix>> factors, Complex coeff) {
    if (factors.size() > dims.size())
        throw std::invalid_argument("TensorOp: more factors than registers");
    factors.resize(dims.size());
    for (size_t r = 0; r < factors.size(); ++r) {
        if (factors[r] && (factors[r]->rows() != dims[r] || factors[r]->cols() != dims[r]))
            throw std::invalid_argument("TensorOp: factor dimension mismatch");
    }
    return TensorOp(std::move(dims), {TensorTerm{coeff, std::move(factors)}});
}

TensorOp TensorOp::operator*(const TensorOp& other) const {
    check_same_dims(*this, other);
    std::vector<TensorTerm> out;
    out.reserve(terms_.size() * other.terms_.size());
    for (const auto& ta : terms_) {
        for (const auto& tb : other.terms_) {
            TensorTerm t;
            t.coeff = ta.coeff * tb.coeff;
            t.factors.resize(dims_.size());
            for (size_t r = 0; r < dims_.size(); ++r) {
                const auto& fa = ta.factors[r];
                const auto& fb = tb.factors[r];
                if (fa && fb)
                    t.factors[r] = Matrix(*fa * *fb);
                else if (fa)
                    t.factors[r] = *fa;
                else if (fb)
                    t.factors[r] = *fb;
            }
            out.push_back(std::move(t));
        }
    }
    return TensorOp(dims_, std::move(out));
}

TensorOp TensorOp::operator+(const TensorOp& other) const {
    check_same_dims(*this, other);
    std::vector<TensorTerm> out = terms_;
    out.insert(out.end(), other.terms_.begin(), other.terms_.end());
    return TensorOp(dims_, std::move(out));
}

TensorOp TensorOp::operator-(const TensorOp& other) const { return *this + other * Complex(-1.0, 0.0); }

TensorOp TensorOp::operator*(Complex s) const {
    std::vector<TensorTerm> out = terms_;
    for (auto& t : out) t.coeff *= s;
    return TensorOp(dims_, std::move(out));
}

TensorOp TensorOp::adjoint() const {
    std::vector<TensorTerm> out = terms_;
    for (auto& t : out) {
        t.coeff = std::conj(t.coeff);
        for (auto& f : t.factors)
            if (f) *f = f->adjoint().eval();
    }
    return TensorOp(dims_, std::move(out));
}

TensorOp TensorOp::extended(const std::vector<int>& extra_dims) const {
    std::vector<int> dims = dims_;
    dims.insert(dims.end(), extra_dims.begin(), extra_dims.end());
    std::vector<TensorTerm> out = terms_;
    for (auto& t : out) t.factors.resize(dims.size());
    return TensorOp(std::move(dims), std::move(out));
}

Complex TensorOp::trace() const {
    Complex total = 0.0;
    for (const auto& t : terms_) {
        Complex v = t.coeff;
        for (size_t r = 0; r < dims_.size(); ++r)
            v *= t.factors[r] ? t.factors[r]->trace() : Complex(dims_[r], 0.0);
        total += v;
    }
    return total;
}

Complex TensorOp::expectation(const std::vector<Matrix>& state_factors) const {
    if (state_factors.size() != dims_.size())
        throw std::invalid_argument("TensorOp: state layout mismatch");
    Complex total = 0.0;
    for (const auto& t : terms_) {
        Complex v = t.coeff;
        for (size_t r = 0; r < dims_.size(); ++r) {
            const Matrix& rho = state_factors[r];
            v *= t.factors[r] ? (rho * *t.factors[r]).trace() : rho.trace();
        }
        total += v;
    }
    return total;
}

Complex TensorOp::inner(const TensorOp& a, const TensorOp& b) {
    check_same_dims(a, b);
    Complex total = 0.0;
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            Complex v = std::conj(ta.coeff) * tb.coeff;
            for (size_t r = 0; r < a.dims().size(); ++r) {
                const auto& fa = ta.factors[r];
                const auto& fb = tb.factors[r];
                if (fa && fb)
                    v *= (fa->adjoint() * *fb).trace();
                else if (fa)
                    v *= fa->adjoint().trace();
                else if (fb)
                    v *= fb->trace();
                else
                    v *= Complex(a.dims()[r], 0.0);
            }
            total += v;
        }
    }
    return total;
}

namespace {

bool same_factor(const std::optional<Matrix>& a, const std::optional<Matrix>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->rows() == b->rows() && a->cols() == b->cols() && (*a - *b).squaredNorm() == 0.0;
}

// Merge b into a when their factors agree on all registers but at most one.
// The coefficients fold into the differing register's matrix.
bool try_merge(const std::vector<int>& dims, TensorTerm& a, const TensorTerm& b) {
    int diff = -1;
    for (size_t r = 0; r < dims.size(); ++r) {
        if (same_factor(a.factors[r], b.factors[r])) continue;
        if (diff >= 0) return false;
        diff = static_cast<int>(r);
    }
    if (diff < 0) {
        a.coeff += b.coeff;
        return true;
    }
    auto materialize = [&](const std::optional<Matrix>& f, int r) {
        return f ? *f : Matrix(Matrix::Identity(dims[static_cast<size_t>(r)],
                                                dims[static_cast<size_t>(r)]));
    };
    Matrix merged = a.coeff * materialize(a.factors[static_cast<size_t>(diff)], diff) +
                    b.coeff * materialize(b.factors[static_cast<size_t>(diff)], diff);
    a.factors[static_cast<size_t>(diff)] = std::move(merged);
    a.coeff = Complex(1.0, 0.0);
    return true;
}

}  // namespace

TensorOp TensorOp::compressed() const {
    std::vector<TensorTerm> out;
    for (const auto& t : terms_) {
        bool merged = false;
        for (auto& o : out)
            if (try_merge(dims_, o, t)) {
                merged = true;
                break;
            }
        if (!merged) out.push_back(t);
    }
    return TensorOp(dims_, std::move(out));
}

double TensorOp::frobenius_norm() const {
    const TensorOp& self = *this;
    if (terms_.size() > 1) {
        TensorOp c = self.compressed();
        double sq = std::real(inner(c, c));
        return std::sqrt(std::max(0.0, sq));
    }
    double sq = std::real(inner(self, self));
    return std::sqrt(std::max(0.0, sq));
}

Matrix TensorOp::assemble() const {
    const int d = total_dim();
    if (d > (1 << 12)) throw std::invalid_argument("TensorOp: assembly above dimension bound");
    Matrix out = Matrix::Zero(d, d);
    for (const auto& t : terms_) {
        Matrix acc = Matrix::Identity(1, 1);
        for (size_t r = 0; r < dims_.size(); ++r) {
            Matrix f = t.factors[r] ? *t.factors[r]
                                    : Matrix(Matrix::Identity(dims_[r], dims_[r]));
            acc = Eigen::kroneckerProduct(acc, f).eval();
        }
        out += t.coeff * acc;
    }
    return out;
}

}  // namespace ctx
