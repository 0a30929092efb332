#include "logmom/cmono.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "logmom/expfit.hpp"

namespace logmom {

CompletelyMonotoneFn::CompletelyMonotoneFn(GridMeasure rep, double domain_start)
    : rep_(std::move(rep)), domain_start_(domain_start) {
    if (rep_.domain() != Domain::HalfLine)
        throw std::invalid_argument("CompletelyMonotoneFn: Bernstein measure lives on the half-line");
    if (domain_start_ < 0.0)
        throw std::invalid_argument("CompletelyMonotoneFn: domain_start must be >= 0");
}

double CompletelyMonotoneFn::operator()(double lambda) const {
    if (lambda < domain_start_)
        throw std::domain_error("CompletelyMonotoneFn: lambda below domain start");
    return laplace_moment(rep_, lambda);
}

CmTestResult is_cm_sequence(std::span<const double> values, int max_order) {
    if (values.empty()) throw std::invalid_argument("is_cm_sequence: empty list");
    if (max_order < 1) throw std::invalid_argument("is_cm_sequence: max_order must be >= 1");
    if (static_cast<int>(values.size()) < max_order + 1)
        throw std::invalid_argument("is_cm_sequence: list shorter than max_order + 1");

    double scale = 0.0;
    for (double v : values) scale = std::max(scale, std::abs(v));
    const double slack = 1e-12 * scale;

    std::vector<double> diff(values.begin(), values.end());
    for (int i = 0; i <= max_order; ++i) {
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        const int len = static_cast<int>(values.size()) - i;
        for (int m = 0; m < len; ++m)
            if (sign * diff[m] < -slack)
                return CmTestResult{false, CmViolation{i, m}};
        for (int m = 0; m + 1 < len; ++m) diff[m] = diff[m + 1] - diff[m];
    }
    return CmTestResult{true, std::nullopt};
}

std::function<double(double)> compose_bernstein_log(const CompletelyMonotoneFn& f,
                                                    std::int64_t j) {
    if (j < 1) throw std::invalid_argument("compose_bernstein_log: j must be >= 1");
    const double lj = std::log(static_cast<double>(j));
    if (f.domain_start() > lj + 1e-12)
        throw std::invalid_argument("compose_bernstein_log: f not defined from log j");
    return [f, j](double x) {
        if (x < 0.0) throw std::domain_error("compose_bernstein_log: x must be >= 0");
        return f(std::log(x + static_cast<double>(j)));
    };
}

GridMeasure semigroup_density(double s, std::span<const double> t_grid) {
    if (s < 0.0) throw std::invalid_argument("semigroup_density: s must be >= 0");
    if (s == 0.0) return GridMeasure::point_mass(Domain::HalfLine, 0.0, 1.0);
    if (t_grid.size() < 2)
        throw std::invalid_argument("semigroup_density: need at least two grid nodes");

    // Cell [a,b] gets the exact mass P(s,b) - P(s,a) of the Gamma(s) density,
    // placed at the cell's mass centroid so first moments are exact per cell.
    std::vector<Atom> atoms;
    atoms.reserve(t_grid.size());
    double prev = 0.0, Pprev = 0.0, P1prev = 0.0;
    for (double t : t_grid) {
        if (t <= prev)
            throw std::invalid_argument("semigroup_density: grid must be positive increasing");
        const double P = boost::math::gamma_p(s, t);
        const double P1 = boost::math::gamma_p(s + 1.0, t);
        const double mass = P - Pprev;
        if (mass > 0.0) {
            const double centroid = s * (P1 - P1prev) / mass;
            atoms.push_back(Atom{std::clamp(centroid, prev, t), mass});
        }
        prev = t;
        Pprev = P;
        P1prev = P1;
    }
    return GridMeasure(Domain::HalfLine, std::move(atoms));
}

std::vector<double> default_semigroup_grid() {
    const int n = 4000;
    const double lo = 1e-8, hi = 60.0;
    std::vector<double> grid(n);
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) grid[i] = lo * std::exp(step * i);
    return grid;
}

GridMeasure cm_sequence_measure(const GridMeasure& mu) {
    if (mu.domain() != Domain::UnitInterval)
        throw std::invalid_argument("cm_sequence_measure: unit-interval measure required");
    const GridMeasure nu = pushforward_phi(trivial_extension(mu));
    const auto grid = default_semigroup_grid();

    GridMeasure eta = GridMeasure::zero(Domain::HalfLine);
    for (const auto& a : nu.atoms())
        eta = eta + semigroup_density(a.location, grid) * a.weight;

    const GridMeasure pushed = pushforward_psi(eta);
    // mu({0}) reappears as the Hausdorff-moment mass at x = 0
    return GridMeasure(Domain::UnitInterval, pushed.atoms(), mu.atom_at_zero());
}

MomentSequence::MomentSequence(std::int64_t j, std::vector<double> v)
    : start(j), values(std::move(v)) {
    if (start < 1) throw std::invalid_argument("MomentSequence: start must be >= 1");
    if (values.empty()) throw std::invalid_argument("MomentSequence: empty values");
    for (double w : values)
        if (w < 0.0) throw std::invalid_argument("MomentSequence: values must be >= 0");
}

double MomentSequence::at(std::int64_t n) const {
    if (!has_index(n)) throw std::out_of_range("MomentSequence: index outside stored range");
    return values[static_cast<std::size_t>(n - start)];
}

MomentSequence moments_of(const GridMeasure& mu, std::int64_t j, std::int64_t N) {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(N - j + 1));
    for (std::int64_t n = j; n <= N; ++n) v.push_back(log_moment(mu, n));
    return MomentSequence(j, std::move(v));
}

FitResult fit_pair(const MomentSequence& w, std::span<const double> s_grid, double tol) {
    const bool with_atom = (w.start == 1);
    const auto fit = exp_nnls_fit(w.start, w.values, s_grid, with_atom);
    if (fit.residual > tol) return FitFailure{fit.residual};

    std::vector<Atom> atoms;
    atoms.reserve(fit.support.size());
    for (std::size_t i = 0; i < fit.support.size(); ++i)
        atoms.push_back(Atom{fit.support[i], fit.weights[i]});
    const double domain_start = std::log(static_cast<double>(w.start));
    CompletelyMonotoneFn f(GridMeasure(Domain::HalfLine, std::move(atoms)), domain_start);
    return DirichletPair{w, std::move(f), fit.atom};
}

std::vector<double> default_fit_grid(int grid_size, double grid_max) {
    if (grid_size < 8) throw std::invalid_argument("default_fit_grid: grid_size must be >= 8");
    if (grid_max <= 0.0) throw std::invalid_argument("default_fit_grid: grid_max must be > 0");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(grid_size) + 1);
    grid.push_back(0.0);
    const double lo = 1e-4;
    const double step = std::log(grid_max / lo) / (grid_size - 1);
    for (int i = 0; i < grid_size; ++i) grid.push_back(lo * std::exp(step * i));
    return grid;
}

} // namespace logmom
