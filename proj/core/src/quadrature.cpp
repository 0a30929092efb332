#include "logmom/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace logmom {

QuadratureRule gauss_laguerre(int n, double a) {
    if (n < 1) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
    if (a <= -1.0) throw std::invalid_argument("gauss_laguerre: need a > -1");

    // Jacobi matrix of the generalized Laguerre recurrence.
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        J(k, k) = 2.0 * k + a + 1.0;
        if (k + 1 < n) {
            const double off = std::sqrt((k + 1.0) * (k + 1.0 + a));
            J(k, k + 1) = off;
            J(k + 1, k) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    const double mu0 = std::tgamma(a + 1.0); // total weight integral

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

} // namespace logmom
