#include "logmom/logmoment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "logmom/cmono.hpp"
#include "logmom/expfit.hpp"
#include "logmom/simplex.hpp"

namespace logmom {

double functional_value(const MomentSequence& w, const DirichletPolynomial& q) {
    double sum = 0.0;
    for (const auto& [n, a] : q.terms()) sum += a * w.at(n);
    return sum;
}

MonotoneCheck monotone_bounded_check(const MomentSequence& w) {
    const double slack = 1e-12 * w.values.front();
    for (std::size_t i = 0; i + 1 < w.values.size(); ++i)
        if (w.values[i] < w.values[i + 1] - slack)
            return MonotoneCheck{false, w.start + static_cast<std::int64_t>(i)};
    return MonotoneCheck{true, 0};
}

PsdCheck psd_check(const MomentSequence& w, std::int64_t k,
                   std::span<const std::int64_t> F) {
    if (k < 1) throw std::invalid_argument("psd_check: k must be >= 1");
    if (F.empty()) throw std::invalid_argument("psd_check: empty index set");
    const Eigen::Index d = static_cast<Eigen::Index>(F.size());
    Eigen::MatrixXd M(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            M(i, j) = w.at(k * F[i] * F[j]); // throws on range overflow

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    const double min_eig = es.eigenvalues()(0);
    const double norm = std::max(std::abs(es.eigenvalues()(0)),
                                 std::abs(es.eigenvalues()(d - 1)));
    PsdCheck out;
    out.min_eigenvalue = min_eig;
    out.ok = min_eig >= -1e-10 * norm;
    if (!out.ok) {
        out.eigenvector.resize(static_cast<std::size_t>(d));
        for (Eigen::Index i = 0; i < d; ++i)
            out.eigenvector[static_cast<std::size_t>(i)] = es.eigenvectors()(i, 0);
    }
    return out;
}

SubseqCmCheck power_subsequence_cm_check(const MomentSequence& w, std::int64_t k,
                                         int max_order) {
    if (k < 2) throw std::invalid_argument("power_subsequence_cm_check: k must be >= 2");
    std::vector<double> sub;
    for (std::int64_t idx = k; idx <= w.last_index(); idx *= k) {
        sub.push_back(w.at(idx));
        if (idx > w.last_index() / k) break;
    }
    if (static_cast<int>(sub.size()) < max_order + 1)
        throw std::invalid_argument("power_subsequence_cm_check: insufficient data length");
    const auto res = is_cm_sequence(sub, max_order);
    if (res.ok) return SubseqCmCheck{true, 0, 0};
    return SubseqCmCheck{false, res.violation->order, res.violation->position};
}

MomentSequence shift_sequence(const MomentSequence& w, std::int64_t k) {
    if (k < w.start) throw std::invalid_argument("shift_sequence: k must be >= start");
    std::vector<double> vals;
    for (std::int64_t n = 1; k * n <= w.last_index(); ++n) vals.push_back(w.at(k * n));
    if (vals.empty()) throw std::invalid_argument("shift_sequence: empty result");
    return MomentSequence(1, std::move(vals));
}

Recovery recover_measure(const MomentSequence& w, std::span<const double> s_grid,
                         double tol) {
    (void)tol; // the residual conveys success or failure
    const bool with_atom = (w.start == 1);
    const auto fit = exp_nnls_fit(w.start, w.values, s_grid, with_atom);
    std::vector<Atom> atoms;
    atoms.reserve(fit.support.size());
    for (std::size_t i = 0; i < fit.support.size(); ++i)
        atoms.push_back(Atom{fit.support[i], fit.weights[i]});
    return Recovery{fit.atom, GridMeasure(Domain::HalfLine, std::move(atoms)),
                    fit.residual};
}

bool k_moment_check(const Recovery& rec, double tol) { return rec.atom <= tol; }

std::optional<DualCertificate> dual_certificate_search(const MomentSequence& w,
                                                       std::span<const double> s_grid,
                                                       std::int64_t index_cap,
                                                       double tol) {
    const std::int64_t j = w.start;
    const std::int64_t M = std::min(index_cap, w.last_index());
    if (M < j) throw std::invalid_argument("dual_certificate_search: index cap below start");
    const std::int64_t nvars = M - j + 1;

    // Shifted variables: y_j = a_j in [0,1] (tail sign control), and
    // y_n = a_n + 1 in [0,2] for n > j. Grid nonnegativity rows plus the
    // upper bounds, all as A y <= b.
    const Eigen::Index g = static_cast<Eigen::Index>(s_grid.size());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(g + nvars, nvars);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(g + nvars);
    for (Eigen::Index i = 0; i < g; ++i) {
        double shift = 0.0;
        for (std::int64_t n = j; n <= M; ++n) {
            const double basis = std::exp(-s_grid[i] * std::log(static_cast<double>(n)));
            A(i, n - j) = -basis;
            if (n > j) shift += basis;
        }
        b(i) = -shift;
    }
    for (std::int64_t n = j; n <= M; ++n) {
        A(g + n - j, n - j) = 1.0;
        b(g + n - j) = (n == j) ? 1.0 : 2.0;
    }
    Eigen::VectorXd c(nvars);
    for (std::int64_t n = j; n <= M; ++n) c(n - j) = w.at(n);

    const LpResult lp = simplex_solve(c, A, b);
    if (lp.status != LpStatus::Optimal) return std::nullopt;

    DirichletPolynomial q;
    for (std::int64_t n = j; n <= M; ++n)
        q.set(n, lp.x(n - j) - (n > j ? 1.0 : 0.0));
    if (functional_value(w, q) >= -tol) return std::nullopt;

    // Rigorous re-certification; off-grid dips are repaired by raising the
    // leading coefficient (weighted so the lift covers the witness point).
    double scale = 0.0;
    for (const auto& [n, a] : q.terms()) scale = std::max(scale, std::abs(a));
    q.add(j, 1e-9 * std::max(scale, 1.0));
    const double lj = std::log(static_cast<double>(j));
    for (int round = 0; round < 60; ++round) {
        const auto res = certify_nonnegative(q, 1e-2, 0.0);
        if (is_certificate(res)) {
            const double value = functional_value(w, q);
            if (value < -tol)
                return DualCertificate{q, std::get<PositivityCertificate>(res), value};
            return std::nullopt;
        }
        const auto& wit = std::get<FailureWitness>(res);
        const double lift = std::exp(wit.location * lj); // 1 when j = 1
        if (!std::isfinite(lift) || lift > 1e12) return std::nullopt;
        const double delta = std::max(1.1 * -wit.value, 1e-9 * std::max(scale, 1.0));
        q.add(j, delta * lift);
        if (functional_value(w, q) >= -tol) return std::nullopt;
    }
    return std::nullopt;
}

namespace {

std::int64_t isqrt_floor(std::int64_t v) {
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while ((r + 1) * (r + 1) <= v) ++r;
    while (r * r > v) --r;
    return r;
}

} // namespace

MembershipReport membership(const MomentSequence& w, const MembershipConfig& config) {
    MembershipReport report;
    report.tol = config.tol;
    const std::int64_t j = w.start;
    const std::int64_t N = w.last_index();

    const auto mono = monotone_bounded_check(w);
    if (!mono.ok) {
        report.verdict = Verdict::Rejected;
        report.evidence = MonotoneEvidence{mono.violation_index};
        return report;
    }

    for (std::int64_t k : {std::int64_t{1}, std::int64_t{2}, std::int64_t{3}}) {
        if (k != 1 && k < j) continue;
        const std::int64_t P = isqrt_floor(N / k);
        if (P < j + 1) continue;
        std::vector<std::int64_t> F;
        for (std::int64_t p = j; p <= P; ++p) F.push_back(p);
        const auto psd = psd_check(w, k, F);
        if (!psd.ok) {
            report.verdict = Verdict::Rejected;
            report.evidence = PsdEvidence{k, F, psd.min_eigenvalue, psd.eigenvector};
            return report;
        }
    }

    for (std::int64_t k : {std::int64_t{2}, std::int64_t{3}}) {
        if (k < j) continue;
        int depth = 0;
        for (std::int64_t idx = k; idx <= N; idx *= k) {
            ++depth;
            if (idx > N / k) break;
        }
        const int order = std::min(config.max_order, depth - 1);
        if (order < 1) continue;
        const auto cm = power_subsequence_cm_check(w, k, order);
        if (!cm.ok) {
            report.verdict = Verdict::Rejected;
            report.evidence = CmEvidence{k, cm.order, cm.position};
            return report;
        }
    }

    const auto grid = default_fit_grid(config.grid_size, config.grid_max);
    auto rec = recover_measure(w, grid, config.tol);
    report.residual = rec.residual;
    if (rec.residual <= config.tol) {
        report.verdict = Verdict::Member;
        report.recovered = std::move(rec);
        return report;
    }
    report.recovered = std::move(rec);

    if (config.search_dual) {
        auto dual = dual_certificate_search(w, grid, config.index_cap, config.tol);
        if (dual) {
            report.verdict = Verdict::Rejected;
            report.evidence = std::move(*dual);
            return report;
        }
    }
    report.verdict = Verdict::Inconclusive;
    return report;
}

namespace {

void check_shapes(const MomentSequence& w, const MomentSequence& v) {
    if (w.start != v.start || w.values.size() != v.values.size())
        throw std::invalid_argument("cone operation: shape mismatch");
}

} // namespace

MomentSequence cone_add(const MomentSequence& w, const MomentSequence& v) {
    check_shapes(w, v);
    std::vector<double> out(w.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = w.values[i] + v.values[i];
    return MomentSequence(w.start, std::move(out));
}

MomentSequence cone_scale(const MomentSequence& w, double c) {
    if (c < 0.0) throw std::invalid_argument("cone_scale: scale must be >= 0");
    std::vector<double> out(w.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * w.values[i];
    return MomentSequence(w.start, std::move(out));
}

MomentSequence cone_product(const MomentSequence& w, const MomentSequence& v) {
    check_shapes(w, v);
    std::vector<double> out(w.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = w.values[i] * v.values[i];
    return MomentSequence(w.start, std::move(out));
}

bool minimality_check(const GridMeasure& mu) {
    if (mu.domain() != Domain::UnitInterval)
        throw std::invalid_argument("minimality_check: unit-interval measure required");
    return mu.atom_at_zero() == 0.0;
}

} // namespace logmom
