#include "logmom/nnls.hpp"

#include <vector>

#include <Eigen/Dense>

namespace logmom {

// Lawson & Hanson, Solving Least Squares Problems, ch. 23.
NnlsResult nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
    const Eigen::Index m = A.rows(), n = A.cols();
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    std::vector<bool> passive(n, false);

    const double tol = 1e-15 * (A.transpose() * b).cwiseAbs().maxCoeff() + 1e-300;
    const int max_outer = static_cast<int>(3 * n + 30);

    Eigen::VectorXd w = A.transpose() * b; // gradient at x = 0

    auto solve_passive = [&](Eigen::VectorXd& z) {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index i = 0; i < n; ++i)
            if (passive[i]) idx.push_back(i);
        Eigen::MatrixXd Ap(m, static_cast<Eigen::Index>(idx.size()));
        for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(idx.size()); ++k)
            Ap.col(k) = A.col(idx[k]);
        Eigen::VectorXd zp = Ap.colPivHouseholderQr().solve(b);
        z.setZero(n);
        for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(idx.size()); ++k)
            z(idx[k]) = zp(k);
    };

    for (int outer = 0; outer < max_outer; ++outer) {
        // most promising inactive coordinate
        Eigen::Index best = -1;
        double best_w = tol;
        for (Eigen::Index i = 0; i < n; ++i)
            if (!passive[i] && w(i) > best_w) {
                best_w = w(i);
                best = i;
            }
        if (best < 0) break;
        passive[best] = true;

        Eigen::VectorXd z;
        for (int inner = 0; inner < 10 * static_cast<int>(n) + 50; ++inner) {
            solve_passive(z);
            bool feasible = true;
            double alpha = 1.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                if (passive[i] && z(i) <= 0.0) {
                    feasible = false;
                    const double step = x(i) / (x(i) - z(i));
                    alpha = std::min(alpha, step);
                }
            }
            if (feasible) break;
            x += alpha * (z - x);
            for (Eigen::Index i = 0; i < n; ++i)
                if (passive[i] && x(i) <= 1e-14) {
                    x(i) = 0.0;
                    passive[i] = false;
                }
        }
        x = z;
        for (Eigen::Index i = 0; i < n; ++i)
            if (x(i) < 0.0) x(i) = 0.0;
        w = A.transpose() * (b - A * x);
    }

    NnlsResult out;
    out.x = x;
    out.residual = (A * x - b).norm();
    return out;
}

} // namespace logmom
