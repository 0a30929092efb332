// Acceptance battery: one pass/fail line per criterion, exit 0 iff all pass.
// Every tolerance is pinned here.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <vector>

#include "logmom/cmono.hpp"
#include "logmom/dirichlet.hpp"
#include "logmom/helson.hpp"
#include "logmom/logmoment.hpp"
#include "logmom/measure.hpp"

using namespace logmom;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok) {
    std::printf("criterion %d %-34s %s\n", id, name, ok ? "PASS" : "FAIL");
    if (!ok) ++failures;
}

GridMeasure random_unit_measure(std::mt19937& rng, int max_atoms, bool allow_zero) {
    std::uniform_int_distribution<int> natoms(1, max_atoms);
    std::uniform_real_distribution<double> loc(0.05, 1.0);
    std::uniform_real_distribution<double> wt(0.1, 1.0);
    std::vector<Atom> atoms;
    const int k = natoms(rng);
    for (int i = 0; i < k; ++i) atoms.push_back({loc(rng), wt(rng)});
    const double zero = allow_zero && (rng() % 2 == 0) ? wt(rng) : 0.0;
    return GridMeasure(Domain::UnitInterval, std::move(atoms), zero);
}

// 1. Closed-form family reproduction.
bool criterion_families() {
    MeasureFamily lg{MeasureFamily::Kind::LogGamma, -1.0, 64};
    const auto mlg = family_quadrature(lg);
    for (int n = 2; n <= 50; ++n) {
        const double exact = family_log_moment(lg, n);
        if (std::abs(log_moment(mlg, n) - exact) > 1e-6 * exact) return false;
    }
    MeasureFamily pd{MeasureFamily::Kind::PowerDensity, 1.0, 64};
    const auto mpd = family_quadrature(pd);
    for (int n = 1; n <= 50; ++n)
        if (std::abs(log_moment(mpd, n) - family_log_moment(pd, n)) > 1e-8)
            return false;
    for (double p : {1.0, 2.0, 3.0}) {
        MeasureFamily pm{MeasureFamily::Kind::PointMass, std::exp(-p), 64};
        const auto mpm = family_quadrature(pm);
        for (int n = 1; n <= 50; ++n) {
            const double exact = std::pow(double(n), -p);
            if (std::abs(log_moment(mpm, n) - exact) > 5e-15 * exact) return false;
        }
    }
    return true;
}

// 2. {1/(n+1)} rejected with PSD evidence; the 2x2 determinant is -1/90 by
// exact integer-fraction arithmetic.
bool criterion_counterexample() {
    struct Frac {
        std::int64_t num, den;
    };
    // det [[1/2,1/3],[1/3,1/5]] = 1/10 - 1/9 = (9 - 10) / 90
    const Frac det{1 * 1 * 9 - 1 * 1 * 10, 90}; // (1/2)(1/5) - (1/3)(1/3) over lcm
    if (det.num * 90 != -1 * det.den) return false;

    std::vector<double> inv;
    for (int n = 1; n <= 64; ++n) inv.push_back(1.0 / (n + 1));
    const MomentSequence w(1, inv);
    const double num_det = w.at(1) * w.at(4) - w.at(2) * w.at(2);
    if (std::abs(num_det - double(det.num) / double(det.den)) > 1e-15) return false;

    const auto rep = membership(w);
    if (rep.verdict != Verdict::Rejected || !rep.evidence) return false;
    return std::holds_alternative<PsdEvidence>(*rep.evidence);
}

// 3. Riesz-Haviland decomposition of w_n = chi_1(n) + n^{-1}.
bool criterion_decomposition() {
    std::vector<double> w{2.0};
    for (int n = 2; n <= 64; ++n) w.push_back(1.0 / n);
    const auto grid = default_fit_grid();
    const auto rec = recover_measure(MomentSequence(1, w), grid, 1e-6);
    if (rec.residual >= 1e-6) return false;
    if (rec.atom < 0.99 || rec.atom > 1.01) return false;
    // one base-grid step around s = 1
    double below = 0.0, above = 1e9;
    for (double s : grid) {
        if (s < 1.0) below = std::max(below, s);
        if (s > 1.0) above = std::min(above, s);
    }
    const double step = above - below;
    double near = 0.0;
    for (const auto& a : rec.nu.atoms())
        if (std::abs(a.location - 1.0) <= step) near += a.weight;
    return near >= 0.99 * rec.nu.total_mass();
}

// 4. Round trip through fit_pair for random grid measures.
bool criterion_pair_roundtrip() {
    std::mt19937 rng(41);
    const auto grid = default_fit_grid();
    for (int t = 0; t < 100; ++t) {
        const auto mu = random_unit_measure(rng, 5, true);
        const auto w = moments_of(mu, 1, 64);
        const auto res = fit_pair(w, grid, 1e-6);
        if (!std::holds_alternative<DirichletPair>(res)) return false;
        const auto& pair = std::get<DirichletPair>(res);
        if (std::abs(w.at(1) - (pair.atom + pair.f(0.0))) > 1e-8) return false;
        const auto hat = trivial_extension(mu);
        for (int n = 2; n <= 64; ++n)
            if (std::abs(pair.f(std::log(double(n))) - log_moment(hat, n)) > 1e-6)
                return false;
    }
    return true;
}

// 5. cm_sequence_measure(delta_{e^{-1}}) has the moments of Lebesgue measure.
bool criterion_cm_measure() {
    const auto leb =
        cm_sequence_measure(GridMeasure::point_mass(Domain::UnitInterval, std::exp(-1.0)));
    for (int n = 0; n <= 20; ++n)
        if (std::abs(hausdorff_moment(leb, n) - 1.0 / (n + 1)) > 1e-6) return false;
    return true;
}

// 6. Rank-1 Helson norms for alpha = 0.5.
bool criterion_helson() {
    const double alpha = 0.5;
    std::vector<double> geo;
    for (int n = 1; n <= 64 * 64; ++n)
        geo.push_back(std::pow(alpha, std::log(double(n))));
    const MomentSequence w(1, std::move(geo));
    const double q = -2.0 * std::log(alpha);
    double partial64 = 0.0;
    for (int n = 1; n <= 64; ++n) partial64 += std::pow(double(n), -q);
    const double norm64 = operator_norm(helson_build(w, 64));
    if (std::abs(norm64 - partial64) > 1e-6) return false;
    double prev = 0.0;
    for (std::int64_t N : {8, 16, 32, 64}) {
        const double norm = operator_norm(helson_build(w, N));
        if (norm < prev - 1e-12) return false;
        double partial = 0.0;
        for (std::int64_t n = 1; n <= N; ++n) partial += std::pow(double(n), -q);
        if (norm > partial + std::pow(double(N), 1.0 - q) / (q - 1.0)) return false;
        prev = norm;
    }
    return true;
}

// 7. Certificate soundness for 500 random polynomials and for dual
// certificates on rejected sequences.
bool criterion_certificates() {
    std::mt19937 rng(71);
    std::uniform_int_distribution<std::int64_t> idx(1, 12);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_int_distribution<int> nterms(1, 3);
    for (int t = 0; t < 500; ++t) {
        DirichletPolynomial q;
        const int k = nterms(rng);
        for (int i = 0; i < k; ++i) q.add(idx(rng), coef(rng));
        if (t % 2 == 0) q = q * q; // even trials: certified squares, <= 6 terms
        const auto res = certify_nonnegative(q, 1e-2, 1e-9);
        if (is_certificate(res)) {
            const auto& cert = std::get<PositivityCertificate>(res);
            const double top = cert.grid_max + 5.0;
            for (int i = 0; i <= 50000; ++i)
                if (q(top * i / 50000) < -1e-9) return false;
            // 10x finer local scan around the recorded minimum
            const double h = cert.grid_step / 10.0;
            for (int i = -1000; i <= 1000; ++i) {
                const double s = cert.min_location + i * h;
                if (s >= 0.0 && q(s) < -1e-9) return false;
            }
        } else {
            const auto& wit = std::get<FailureWitness>(res);
            if (q(wit.location) >= -1e-9) return false;
        }
    }

    const auto grid = default_fit_grid();
    std::vector<MomentSequence> rejected;
    std::vector<double> inv;
    for (int n = 1; n <= 64; ++n) inv.push_back(1.0 / (n + 1));
    rejected.emplace_back(1, inv);
    rejected.emplace_back(
        1, std::vector<double>{1.0, 0.5, 0.6, 0.4, 0.3, 0.25, 0.2, 0.15});
    for (const auto& w : rejected) {
        const auto dual = dual_certificate_search(w, grid, 8, 1e-6);
        if (!dual) return false;
        if (!(dual->value < -1e-6)) return false;
        if (!is_certificate(certify_nonnegative(dual->q, 1e-2, 0.0))) return false;
        if (dual->positivity.margin < 0.0) return false;
    }
    return true;
}

// 8. Cone closure under sum, scale, and product of Member sequences.
bool criterion_cone() {
    std::mt19937 rng(81);
    std::uniform_real_distribution<double> scale(0.1, 3.0);
    MembershipConfig cfg;
    cfg.search_dual = false; // members never reach the dual search
    for (int t = 0; t < 50; ++t) {
        const auto mu = random_unit_measure(rng, 3, false);
        const auto nu = random_unit_measure(rng, 3, false);
        const auto w = moments_of(mu, 1, 64);
        const auto v = moments_of(nu, 1, 64);
        if (membership(cone_add(w, v), cfg).verdict != Verdict::Member) return false;
        if (membership(cone_scale(w, scale(rng)), cfg).verdict != Verdict::Member)
            return false;
        if (membership(cone_product(w, v), cfg).verdict != Verdict::Member)
            return false;
    }
    return true;
}

// 9. Grid-stability of recovered measures, j = 1 and j = 2.
bool criterion_uniqueness() {
    std::mt19937 rng(91);
    const auto grid_a = default_fit_grid(200, 50.0);
    const auto grid_b = default_fit_grid(137, 40.0);
    for (std::int64_t j : {std::int64_t{1}, std::int64_t{2}}) {
        for (int t = 0; t < 5; ++t) {
            const auto mu = random_unit_measure(rng, 3, false);
            const auto w = moments_of(mu, j, 64);
            const auto ra = recover_measure(w, grid_a, 1e-6);
            const auto rb = recover_measure(w, grid_b, 1e-6);
            if (ra.residual >= 1e-6 || rb.residual >= 1e-6) return false;
            for (int n = 1; n <= 64; ++n) {
                const double la = ra.atom * (n == 1 && j == 1) +
                                  laplace_moment(ra.nu, std::log(double(n)));
                const double lb = rb.atom * (n == 1 && j == 1) +
                                  laplace_moment(rb.nu, std::log(double(n)));
                if (std::abs(la - lb) > 1e-5) return false;
            }
        }
    }
    return true;
}

} // namespace

int main() {
    report(1, "closed-form family reproduction", criterion_families());
    report(2, "counterexample rejection", criterion_counterexample());
    report(3, "Riesz-Haviland decomposition", criterion_decomposition());
    report(4, "pair fit round trip", criterion_pair_roundtrip());
    report(5, "cm sequence measure oracle", criterion_cm_measure());
    report(6, "Helson rank-1 norms", criterion_helson());
    report(7, "certificate soundness", criterion_certificates());
    report(8, "cone closure", criterion_cone());
    report(9, "recovery grid stability", criterion_uniqueness());
    return failures == 0 ? 0 : 1;
}
