#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "logmom/measure.hpp"
#include "logmom/sequence.hpp"

namespace logmom {

/// A completely monotone function represented by its Bernstein measure on
/// [0, infinity): f(lambda) = integral of exp(-lambda s) d nu(s), defined for
/// lambda >= domain_start (= log j for data starting at index j).
class CompletelyMonotoneFn {
public:
    CompletelyMonotoneFn(GridMeasure rep, double domain_start = 0.0);

    double operator()(double lambda) const; // throws below domain_start
    const GridMeasure& rep() const { return rep_; }
    double domain_start() const { return domain_start_; }

private:
    GridMeasure rep_;
    double domain_start_;
};

struct CmViolation {
    int order = 0;    // difference order i
    int position = 0; // offset m into the value list
};

struct CmTestResult {
    bool ok = true;
    std::optional<CmViolation> violation;
};

/// Tests (-1)^i Delta^i values[m] >= -1e-12 * max|values| for
/// i = 0..max_order and all valid m. Throws on an empty list or when the
/// list is shorter than max_order + 1.
CmTestResult is_cm_sequence(std::span<const double> values, int max_order);

/// x -> f(log(x + j)), a completely monotone function on [0, infinity)
/// obtained by composing f with the Bernstein function log(x + j).
std::function<double(double)> compose_bernstein_log(const CompletelyMonotoneFn& f,
                                                    std::int64_t j);

/// Discretization of the convolution semigroup measure
/// nu_s(dt) = t^{s-1} e^{-t} / Gamma(s) dt  (s > 0), nu_0 = delta_0.
/// Cell masses are exact (regularized incomplete gamma differences) and each
/// atom sits at its cell's mass centroid.
GridMeasure semigroup_density(double s, std::span<const double> t_grid);

/// Log-spaced default grid for semigroup_density, fine enough for moment
/// orders up to ~20 at 1e-6 accuracy.
std::vector<double> default_semigroup_grid();

/// Representing measure of the completely monotone sequence {w_{n+1}}_{n>=0}
/// built from the representing measure mu of the log-moment sequence {w_n}:
/// mix semigroup densities over the atoms of phi_* mu-hat, push forward by
/// psi, and carry mu({0}) as the mass at 0. Verify with hausdorff_moment.
GridMeasure cm_sequence_measure(const GridMeasure& mu);

/// The pair (w, f) with w_n = atom * [n == 1] + f(log n) for j = 1, or
/// w_n = f(log n) for j >= 2.
struct DirichletPair {
    MomentSequence seq;
    CompletelyMonotoneFn f;
    double atom = 0.0;
};

struct FitFailure {
    double residual = 0.0;
};

using FitResult = std::variant<DirichletPair, FitFailure>;

/// Nonnegative least squares fit of Bernstein-measure weights (and, for
/// j = 1, an atom c >= 0 at index 1) to the sequence w over the given
/// s-grid; the grid is refined locally around the recovered support.
/// Succeeds iff the 2-norm residual is at most tol.
FitResult fit_pair(const MomentSequence& w, std::span<const double> s_grid,
                   double tol);

/// {0} together with grid_size log-spaced nodes on [1e-4, grid_max].
std::vector<double> default_fit_grid(int grid_size = 200, double grid_max = 50.0);

} // namespace logmom
