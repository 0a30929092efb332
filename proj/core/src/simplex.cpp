#include "logmom/simplex.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace logmom {

namespace {

constexpr double kEps = 1e-9;

// Tableau primal simplex with Bland's rule. Basis columns are tracked by
// index; `run` optimizes the objective row in place.
struct Tableau {
    Eigen::MatrixXd T;          // rows x (cols + 1); last column is RHS
    std::vector<int> basis;     // basic variable per row
    Eigen::VectorXd obj;        // reduced-cost row (size cols + 1)

    LpStatus run(int max_iters) {
        const Eigen::Index rows = T.rows();
        const Eigen::Index cols = T.cols() - 1;
        for (int it = 0; it < max_iters; ++it) {
            int enter = -1;
            for (Eigen::Index j = 0; j < cols; ++j)
                if (obj(j) < -kEps) { enter = static_cast<int>(j); break; }
            if (enter < 0) return LpStatus::Optimal;

            int leave = -1;
            double best = 0.0;
            for (Eigen::Index i = 0; i < rows; ++i) {
                const double a = T(i, enter);
                if (a > kEps) {
                    const double ratio = T(i, cols) / a;
                    if (leave < 0 || ratio < best - kEps ||
                        (ratio < best + kEps && basis[i] < basis[leave]))
                    {
                        best = ratio;
                        leave = static_cast<int>(i);
                    }
                }
            }
            if (leave < 0) return LpStatus::Unbounded;

            pivot(leave, enter);
        }
        return LpStatus::IterationLimit;
    }

    void pivot(int row, int col) {
        T.row(row) /= T(row, col);
        for (Eigen::Index i = 0; i < T.rows(); ++i)
            if (i != row && T(i, col) != 0.0)
                T.row(i) -= T(i, col) * T.row(row);
        obj -= obj(col) * T.row(row);
        basis[row] = col;
    }
};

} // namespace

LpResult simplex_solve(const Eigen::VectorXd& c, const Eigen::MatrixXd& A,
                       const Eigen::VectorXd& b, int max_iters) {
    const Eigen::Index m = A.rows(), n = A.cols();
    if (c.size() != n || b.size() != m)
        throw std::invalid_argument("simplex_solve: shape mismatch");

    // Standard form with slacks: A x + s = b. Rows with b < 0 are negated
    // and take an artificial variable for phase 1.
    std::vector<Eigen::Index> art_rows;
    for (Eigen::Index i = 0; i < m; ++i)
        if (b(i) < 0.0) art_rows.push_back(i);
    const Eigen::Index n_art = static_cast<Eigen::Index>(art_rows.size());
    const Eigen::Index total = n + m + n_art;

    Tableau tab;
    tab.T = Eigen::MatrixXd::Zero(m, total + 1);
    tab.basis.assign(m, -1);
    for (Eigen::Index i = 0; i < m; ++i) {
        const double sign = b(i) < 0.0 ? -1.0 : 1.0;
        tab.T.block(i, 0, 1, n) = sign * A.row(i);
        tab.T(i, n + i) = sign;           // slack
        tab.T(i, total) = sign * b(i);
        tab.basis[i] = static_cast<int>(n + i);
    }
    Eigen::Index k = 0;
    for (Eigen::Index i : art_rows) {
        tab.T(i, n + m + k) = 1.0;
        tab.basis[i] = static_cast<int>(n + m + k);
        ++k;
    }

    LpResult out;
    if (n_art > 0) {
        // Phase 1: minimize the artificial sum.
        tab.obj = Eigen::VectorXd::Zero(total + 1);
        tab.obj.segment(n + m, n_art).setOnes();
        for (Eigen::Index i : art_rows) tab.obj -= tab.T.row(i);
        const LpStatus st = tab.run(max_iters);
        if (st != LpStatus::Optimal || tab.obj(total) < -1e-7) {
            out.status = (st == LpStatus::Optimal) ? LpStatus::Infeasible : st;
            if (tab.obj(total) < -1e-7) out.status = LpStatus::Infeasible;
            return out;
        }
        // drive any artificial still in the basis out (degenerate rows)
        for (Eigen::Index i = 0; i < m; ++i) {
            if (tab.basis[i] >= n + m) {
                for (Eigen::Index j = 0; j < n + m; ++j)
                    if (std::abs(tab.T(i, j)) > kEps) {
                        tab.pivot(static_cast<int>(i), static_cast<int>(j));
                        break;
                    }
            }
        }
    }

    // Phase 2 on the original objective; artificial columns frozen.
    tab.obj = Eigen::VectorXd::Zero(total + 1);
    tab.obj.head(n) = c;
    for (Eigen::Index i = 0; i < m; ++i)
        if (tab.basis[i] < n)
            tab.obj -= c(tab.basis[i]) * tab.T.row(i);
    for (Eigen::Index j = n + m; j < total; ++j) tab.obj(j) = 1e30; // keep out

    const LpStatus st = tab.run(max_iters);
    out.status = st;
    if (st != LpStatus::Optimal) return out;

    out.x = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < m; ++i)
        if (tab.basis[i] < n) out.x(tab.basis[i]) = tab.T(i, total);
    out.objective = c.dot(out.x);
    return out;
}

} // namespace logmom
