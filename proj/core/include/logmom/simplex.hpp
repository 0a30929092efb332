#pragma once

#include <Eigen/Core>

namespace logmom {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Eigen::VectorXd x;
    double objective = 0.0;
};

/// Dense two-phase simplex for  min c'x  s.t.  A x <= b,  x >= 0.
/// Bland's rule; intended for small problems (tens of variables).
LpResult simplex_solve(const Eigen::VectorXd& c, const Eigen::MatrixXd& A,
                       const Eigen::VectorXd& b, int max_iters = 20000);

} // namespace logmom
