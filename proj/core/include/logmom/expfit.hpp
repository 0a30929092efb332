#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace logmom {

/// Shared engine behind recover_measure and fit_pair: nonnegative least
/// squares fit of  c * [n == first] + sum_i x_i n^{-s_i}  to the values
/// w_first..w_last, with local grid refinement around the active support.
struct ExpFitResult {
    double atom = 0.0;                 // c (0 when with_atom is false)
    std::vector<double> support;       // s_i with x_i > 0
    std::vector<double> weights;       // matching x_i
    double residual = 0.0;             // 2-norm misfit
    std::vector<double> grid;          // final (refined) grid
};

ExpFitResult exp_nnls_fit(std::int64_t first_index,
                          std::span<const double> values,
                          std::span<const double> s_grid,
                          bool with_atom,
                          int refine_passes = 4);

} // namespace logmom
