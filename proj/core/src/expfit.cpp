#include "logmom/expfit.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>

#include "logmom/nnls.hpp"

namespace logmom {

namespace {

Eigen::MatrixXd design_matrix(std::int64_t first, Eigen::Index rows,
                              const std::vector<double>& grid, bool with_atom) {
    const Eigen::Index g = static_cast<Eigen::Index>(grid.size());
    Eigen::MatrixXd A(rows, g + (with_atom ? 1 : 0));
    Eigen::Index col = 0;
    if (with_atom) {
        A.col(0).setZero();
        A(0, 0) = 1.0; // the chi_{1} column; only valid when first == 1
        col = 1;
    }
    for (Eigen::Index i = 0; i < g; ++i, ++col)
        for (Eigen::Index r = 0; r < rows; ++r) {
            const double ln = std::log(static_cast<double>(first + r));
            A(r, col) = std::exp(-grid[i] * ln);
        }
    return A;
}

// Damped Gauss-Newton on (atom, locations, weights): the grid solve locates
// the support only up to the local spacing, which caps the residual; freeing
// the locations recovers exponential-sum fits to near machine precision.
double gauss_newton(const Eigen::VectorXd& lam, const Eigen::VectorXd& b,
                    bool with_atom, std::vector<double>& s,
                    std::vector<double>& w, double& atom) {
    const Eigen::Index m = b.size();
    const Eigen::Index k = static_cast<Eigen::Index>(s.size());
    auto residual_vec = [&](const std::vector<double>& sv,
                            const std::vector<double>& wv, double c) {
        Eigen::VectorXd r = -b;
        if (with_atom) r(0) += c;
        for (Eigen::Index j = 0; j < k; ++j)
            for (Eigen::Index i = 0; i < m; ++i)
                r(i) += wv[j] * std::exp(-sv[j] * lam(i));
        return r;
    };

    double best = residual_vec(s, w, atom).norm();
    const Eigen::Index nparams = 2 * k + (with_atom ? 1 : 0);
    for (int it = 0; it < 40; ++it) {
        const Eigen::VectorXd r = residual_vec(s, w, atom);
        Eigen::MatrixXd J(m, nparams);
        for (Eigen::Index j = 0; j < k; ++j)
            for (Eigen::Index i = 0; i < m; ++i) {
                const double e = std::exp(-s[j] * lam(i));
                J(i, 2 * j) = e;                     // d/dw_j
                J(i, 2 * j + 1) = -w[j] * lam(i) * e; // d/ds_j
            }
        if (with_atom) {
            J.col(nparams - 1).setZero();
            J(0, nparams - 1) = 1.0;
        }
        const Eigen::VectorXd step = J.colPivHouseholderQr().solve(-r);
        if (!step.allFinite()) break;
        bool improved = false;
        for (double damp = 1.0; damp >= 1.0 / 1024; damp *= 0.5) {
            std::vector<double> s2 = s, w2 = w;
            double a2 = atom;
            for (Eigen::Index j = 0; j < k; ++j) {
                w2[j] = std::max(0.0, w[j] + damp * step(2 * j));
                s2[j] = std::max(0.0, s[j] + damp * step(2 * j + 1));
            }
            if (with_atom) a2 = std::max(0.0, atom + damp * step(nparams - 1));
            const double rn = residual_vec(s2, w2, a2).norm();
            if (rn < best * (1.0 - 1e-12)) {
                s = std::move(s2);
                w = std::move(w2);
                atom = a2;
                best = rn;
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    return best;
}

void polish(std::int64_t first, const Eigen::VectorXd& b, bool with_atom,
            ExpFitResult& fit) {
    if (fit.support.empty() && !with_atom) return;
    const Eigen::Index m = b.size();
    Eigen::VectorXd lam(m);
    for (Eigen::Index r = 0; r < m; ++r)
        lam(r) = std::log(static_cast<double>(first + r));

    // Candidate starting supports: the raw grid support, and a clustered
    // version that merges adjacent nodes straddling one location (the raw
    // pairs make the Jacobian ill-conditioned and the iteration stalls).
    std::vector<std::pair<std::vector<double>, std::vector<double>>> starts;
    starts.emplace_back(fit.support, fit.weights);
    {
        std::vector<double> cs, cw;
        for (std::size_t i = 0; i < fit.support.size(); ++i) {
            if (!cs.empty() &&
                fit.support[i] - cs.back() < 0.05 * (1.0 + cs.back())) {
                const double tot = cw.back() + fit.weights[i];
                cs.back() = (cw.back() * cs.back() +
                             fit.weights[i] * fit.support[i]) / tot;
                cw.back() = tot;
            } else {
                cs.push_back(fit.support[i]);
                cw.push_back(fit.weights[i]);
            }
        }
        if (cs.size() < fit.support.size()) starts.emplace_back(cs, cw);
    }

    for (auto& [s, w] : starts) {
        double atom = fit.atom;
        const double best = gauss_newton(lam, b, with_atom, s, w, atom);
        if (best < fit.residual) {
            fit.residual = best;
            fit.atom = atom;
            fit.support.clear();
            fit.weights.clear();
            for (std::size_t j = 0; j < s.size(); ++j)
                if (w[j] > 0.0) {
                    fit.support.push_back(s[j]);
                    fit.weights.push_back(w[j]);
                }
        }
    }
}

} // namespace

ExpFitResult exp_nnls_fit(std::int64_t first_index, std::span<const double> values,
                          std::span<const double> s_grid, bool with_atom,
                          int refine_passes) {
    if (values.empty()) throw std::invalid_argument("exp_nnls_fit: empty sequence");
    if (s_grid.empty()) throw std::invalid_argument("exp_nnls_fit: empty grid");
    if (with_atom && first_index != 1)
        throw std::invalid_argument("exp_nnls_fit: atom column requires start index 1");

    std::set<double> grid_set(s_grid.begin(), s_grid.end());
    for (double s : s_grid)
        if (s < 0.0) throw std::invalid_argument("exp_nnls_fit: grid nodes must be >= 0");

    const Eigen::Index rows = static_cast<Eigen::Index>(values.size());
    Eigen::VectorXd b(rows);
    for (Eigen::Index i = 0; i < rows; ++i) b(i) = values[i];

    std::vector<double> grid(grid_set.begin(), grid_set.end());
    NnlsResult sol;
    NnlsResult best;
    std::vector<double> best_grid;
    best.residual = std::numeric_limits<double>::infinity();
    for (int pass = 0;; ++pass) {
        const Eigen::MatrixXd A = design_matrix(first_index, rows, grid, with_atom);
        sol = nnls(A, b);
        if (sol.residual < best.residual) {
            best = sol;
            best_grid = grid;
        }
        if (pass >= refine_passes) break;

        // subdivide around every active node: the true support may sit
        // between grid points, which caps the residual at the local spacing
        const Eigen::Index off = with_atom ? 1 : 0;
        double xmax = 0.0;
        for (Eigen::Index i = off; i < sol.x.size(); ++i)
            xmax = std::max(xmax, sol.x(i));
        if (xmax <= 0.0) break;
        bool grew = false;
        const std::vector<double> snapshot = grid;
        for (Eigen::Index i = off; i < sol.x.size(); ++i) {
            if (sol.x(i) <= 1e-12 * xmax) continue;
            const double s0 = snapshot[static_cast<std::size_t>(i - off)];
            auto it = std::lower_bound(snapshot.begin(), snapshot.end(), s0);
            const double lo = (it != snapshot.begin()) ? *(it - 1) : std::max(0.0, s0 - 0.05);
            const double hi = (it + 1 != snapshot.end()) ? *(it + 1) : s0 + 0.05;
            for (int k = 1; k < 8; ++k) {
                const double s = lo + (hi - lo) * k / 8.0;
                if (grid_set.insert(s).second) grew = true;
            }
        }
        if (!grew) break;
        grid.assign(grid_set.begin(), grid_set.end());
    }
    // refinement can degrade the solve (near-duplicate columns); keep the
    // best pass
    sol = best;
    grid = best_grid;

    ExpFitResult out;
    out.residual = sol.residual;
    out.grid = grid;
    const Eigen::Index off = with_atom ? 1 : 0;
    if (with_atom) out.atom = sol.x(0);
    for (Eigen::Index i = off; i < sol.x.size(); ++i)
        if (sol.x(i) > 0.0) {
            out.support.push_back(grid[static_cast<std::size_t>(i - off)]);
            out.weights.push_back(sol.x(i));
        }
    polish(first_index, b, with_atom, out);
    return out;
}

} // namespace logmom
