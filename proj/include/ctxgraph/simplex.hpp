#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ctx {

// Dense two-phase primal simplex for
//     min c'x  s.t.  Ax = b, x >= 0,
// with Bland's rule. Templated so the same pivoting runs in doubles and in
// exact rationals. Artificial columns are kept in the tableau; the optimal
// dual is read off them.
template <class T>
class Simplex {
public:
    enum class Status { Optimal, Infeasible, Unbounded };

    struct Result {
        Status status;
        T objective{};
        std::vector<T> x;     // structural variables
        std::vector<T> dual;  // one multiplier per row
    };

    // eps: pivot/zero tolerance (pass T(0) for exact types).
    Simplex(std::vector<std::vector<T>> a, std::vector<T> b, std::vector<T> c, T eps)
        : m_(a.size()), n_(a.empty() ? 0 : a[0].size()), eps_(eps), cost_(std::move(c)) {
        if (b.size() != m_ || cost_.size() != n_)
            throw std::invalid_argument("Simplex: shape mismatch");
        tab_.assign(m_, std::vector<T>(n_ + m_, T(0)));
        rhs_ = std::move(b);
        for (size_t i = 0; i < m_; ++i) {
            if (rhs_[i] < T(0)) {
                rhs_[i] = -rhs_[i];
                for (size_t j = 0; j < n_; ++j) tab_[i][j] = -a[i][j];
            } else {
                for (size_t j = 0; j < n_; ++j) tab_[i][j] = a[i][j];
            }
            tab_[i][n_ + i] = T(1);
        }
        basis_.resize(m_);
        for (size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;
    }

    Result solve() {
        // Phase 1: drive the artificials out.
        std::vector<T> phase1(n_ + m_, T(0));
        for (size_t i = 0; i < m_; ++i) phase1[n_ + i] = T(1);
        if (!iterate(phase1, /*allow_artificial=*/true)) return {Status::Unbounded};
        T art = objective(phase1);
        if (art > eps_) {
            Result r{Status::Infeasible, art, {}, dual(phase1)};
            return r;
        }
        // Pivot any artificial still basic (at zero) out when possible.
        for (size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            for (size_t j = 0; j < n_; ++j) {
                if (abs_val(tab_[i][j]) > eps_) {
                    pivot(i, j);
                    break;
                }
            }
        }
        std::vector<T> phase2(n_ + m_, T(0));
        for (size_t j = 0; j < n_; ++j) phase2[j] = cost_[j];
        if (!iterate(phase2, /*allow_artificial=*/false)) return {Status::Unbounded};
        Result r{Status::Optimal, objective(phase2), std::vector<T>(n_, T(0)), dual(phase2)};
        for (size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) r.x[basis_[i]] = rhs_[i];
        return r;
    }

private:
    static T abs_val(const T& v) { return v < T(0) ? -v : v; }

    T objective(const std::vector<T>& c) const {
        T z(0);
        for (size_t i = 0; i < m_; ++i) z += c[basis_[i]] * rhs_[i];
        return z;
    }

    std::vector<T> reduced_costs(const std::vector<T>& c) const {
        std::vector<T> r(n_ + m_);
        for (size_t j = 0; j < n_ + m_; ++j) {
            T v = c[j];
            for (size_t i = 0; i < m_; ++i) v -= c[basis_[i]] * tab_[i][j];
            r[j] = v;
        }
        return r;
    }

    std::vector<T> dual(const std::vector<T>& c) const {
        // y_i = c_art_i - reduced_cost(artificial i)
        auto r = reduced_costs(c);
        std::vector<T> y(m_);
        for (size_t i = 0; i < m_; ++i) y[i] = c[n_ + i] - r[n_ + i];
        return y;
    }

    void pivot(size_t row, size_t col) {
        T piv = tab_[row][col];
        for (auto& v : tab_[row]) v /= piv;
        rhs_[row] /= piv;
        for (size_t i = 0; i < m_; ++i) {
            if (i == row) continue;
            T f = tab_[i][col];
            if (f == T(0)) continue;
            for (size_t j = 0; j < n_ + m_; ++j) tab_[i][j] -= f * tab_[row][j];
            rhs_[i] -= f * rhs_[row];
        }
        basis_[row] = col;
    }

    // Returns false on unboundedness.
    bool iterate(const std::vector<T>& c, bool allow_artificial) {
        while (true) {
            auto r = reduced_costs(c);
            size_t enter = n_ + m_;
            size_t limit = allow_artificial ? n_ + m_ : n_;
            for (size_t j = 0; j < limit; ++j) {
                if (r[j] < -eps_) {
                    enter = j;  // Bland: lowest index
                    break;
                }
            }
            if (enter == n_ + m_) return true;
            size_t leave = m_;
            for (size_t i = 0; i < m_; ++i) {
                if (tab_[i][enter] <= eps_) continue;
                if (leave == m_) {
                    leave = i;
                    continue;
                }
                T lhs = rhs_[i] * tab_[leave][enter];
                T rhs = rhs_[leave] * tab_[i][enter];
                if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leave])) leave = i;
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    size_t m_, n_;
    T eps_;
    std::vector<T> cost_;
    std::vector<std::vector<T>> tab_;
    std::vector<T> rhs_;
    std::vector<size_t> basis_;
};

}  // namespace ctx
