#pragma once

#include <Eigen/Core>

namespace logmom {

struct NnlsResult {
    Eigen::VectorXd x;      // x >= 0
    double residual = 0.0;  // ||A x - b||_2
};

/// Lawson-Hanson active-set solve of  min ||A x - b||_2  subject to x >= 0.
NnlsResult nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b);

} // namespace logmom
