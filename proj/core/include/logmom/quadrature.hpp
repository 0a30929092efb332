#pragma once

#include <vector>

namespace logmom {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point generalized Gauss-Laguerre rule for the weight x^a e^{-x} on
/// [0, infinity), a > -1, computed by Golub-Welsch.
QuadratureRule gauss_laguerre(int n, double a = 0.0);

} // namespace logmom
