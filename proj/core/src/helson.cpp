#include "logmom/helson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace logmom {

HelsonTruncation helson_build(const MomentSequence& w, std::int64_t N) {
    if (N < 1) throw std::invalid_argument("helson_build: N must be >= 1");
    if (w.start != 1) throw std::invalid_argument("helson_build: start index must be 1");
    if (w.last_index() < N * N)
        throw std::invalid_argument("helson_build: need data through N^2");
    HelsonTruncation out;
    out.size = N;
    out.entries.resize(N, N);
    for (std::int64_t m = 1; m <= N; ++m)
        for (std::int64_t n = 1; n <= N; ++n)
            out.entries(m - 1, n - 1) = w.at(m * n);
    return out;
}

double operator_norm(const HelsonTruncation& M, int iters, std::uint64_t seed) {
    const Eigen::Index d = M.entries.rows();
    if (d == 0) return 0.0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    Eigen::VectorXd v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = unif(rng);
    v.normalize();

    // M is symmetric, so the singular values are |eigenvalues| and power
    // iteration on M^2 converges to the norm squared.
    double prev = 0.0;
    for (int it = 0; it < iters; ++it) {
        Eigen::VectorXd u = M.entries * (M.entries * v);
        const double norm2 = u.norm();
        if (norm2 == 0.0) return 0.0;
        v = u / norm2;
        const double rayleigh = v.dot(M.entries * (M.entries * v));
        if (it > 0 && std::abs(rayleigh - prev) <= 1e-10 * std::max(1.0, rayleigh))
            return std::sqrt(rayleigh);
        prev = rayleigh;
    }
    return std::sqrt(prev);
}

BoundednessCheck boundedness_criterion(const MomentSequence& w, double C) {
    for (std::int64_t n = std::max<std::int64_t>(2, w.start); n <= w.last_index(); ++n) {
        const double bound = C / (std::sqrt(static_cast<double>(n)) *
                                  std::log(static_cast<double>(n)));
        if (w.at(n) > bound) return BoundednessCheck{false, n};
    }
    return BoundednessCheck{true, 0};
}

bool cm_criterion(const DirichletPair& pair, double C) {
    if (pair.seq.start != 1)
        throw std::invalid_argument("cm_criterion: start index must be 1");
    if (pair.atom > 0.0)
        throw std::invalid_argument("cm_criterion: atom must vanish (w_1 = f(0))");

    // x f(x) e^{x/2} = sum_i w_i x e^{(1/2 - s_i) x}; any Bernstein mass at
    // rate <= 1/2 is unbounded, otherwise the sum decays past
    // x ~ 2 / (s_min - 1/2) and a grid check suffices.
    const auto& rep = pair.f.rep();
    if (rep.atom_at_zero() > 0.0) return false;
    double s_min = std::numeric_limits<double>::infinity();
    for (const auto& a : rep.atoms())
        if (a.weight > 0.0) s_min = std::min(s_min, a.location);
    if (rep.atoms().empty() || !std::isfinite(s_min)) return true; // f = 0
    if (s_min <= 0.5) return false;

    const double x_max = std::max(50.0, 4.0 / (s_min - 0.5));
    const int steps = 20000;
    for (int i = 0; i <= steps; ++i) {
        const double x = x_max * i / steps;
        double lhs = 0.0;
        for (const auto& a : rep.atoms())
            lhs += a.weight * x * std::exp((0.5 - a.location) * x);
        if (lhs > C) return false;
    }
    return true;
}

} // namespace logmom
