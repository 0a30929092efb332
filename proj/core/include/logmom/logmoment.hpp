#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "logmom/dirichlet.hpp"
#include "logmom/measure.hpp"
#include "logmom/sequence.hpp"

namespace logmom {

/// L_w(q) = sum a_n w_n. Every index of q must lie in the stored range.
double functional_value(const MomentSequence& w, const DirichletPolynomial& q);

struct MonotoneCheck {
    bool ok = true;
    std::int64_t violation_index = 0; // first n with w_n < w_{n+1} (up to slack)
};
MonotoneCheck monotone_bounded_check(const MomentSequence& w);

struct PsdCheck {
    bool ok = true;
    double min_eigenvalue = 0.0;
    std::vector<double> eigenvector; // for the most negative eigenvalue
};
/// Forms M[p][q] = w_{k p q} over p, q in F and tests
/// lambda_min >= -1e-10 * ||M||.
PsdCheck psd_check(const MomentSequence& w, std::int64_t k,
                   std::span<const std::int64_t> F);

struct SubseqCmCheck {
    bool ok = true;
    int order = 0;
    int position = 0;
};
/// Complete monotonicity of the power subsequence {w_{k^{m+1}}}_{m>=0}.
SubseqCmCheck power_subsequence_cm_check(const MomentSequence& w, std::int64_t k,
                                         int max_order);

/// {w_{kn}}_{n>=1}; requires k >= start and a nonempty result.
MomentSequence shift_sequence(const MomentSequence& w, std::int64_t k);

struct Recovery {
    double atom = 0.0;      // c = w_1 - nu(K) when the fit succeeds
    GridMeasure nu = GridMeasure::zero(Domain::HalfLine); // refined-grid atoms
    double residual = 0.0;  // 2-norm of the fit residual
};

/// NNLS solve of  min || c e_1 + A x - w ||_2  with c, x >= 0 and
/// A[n][i] = n^{-s_i}; the atom column is present only for start index 1.
/// The grid is refined locally around the recovered support.
Recovery recover_measure(const MomentSequence& w, std::span<const double> s_grid,
                         double tol);

/// True iff the recovered atom vanishes up to tol, i.e. L_w is a K-moment
/// functional with no mass escaping to infinity.
bool k_moment_check(const Recovery& rec, double tol);

/// A nonnegative Dirichlet polynomial on which L_w is negative, together
/// with its rigorous positivity certificate.
struct DualCertificate {
    DirichletPolynomial q;
    PositivityCertificate positivity;
    double value = 0.0; // L_w(q) < -tol
};

/// Linear program over coefficients a_start..a_M (grid nonnegativity, box
/// |a_n| <= 1, leading coefficient >= 0) minimizing L_w(q); a candidate is
/// returned only after it passes certify_nonnegative, with off-grid dips
/// repaired by raising the leading coefficient.
std::optional<DualCertificate> dual_certificate_search(const MomentSequence& w,
                                                       std::span<const double> s_grid,
                                                       std::int64_t index_cap,
                                                       double tol);

enum class Verdict { Member, Rejected, Inconclusive };

struct PsdEvidence {
    std::int64_t k = 1;
    std::vector<std::int64_t> F;
    double min_eigenvalue = 0.0;
    std::vector<double> eigenvector;
};
struct CmEvidence {
    std::int64_t k = 2;
    int order = 0;
    int position = 0;
};
struct MonotoneEvidence {
    std::int64_t index = 0;
};
using RejectionEvidence =
    std::variant<MonotoneEvidence, PsdEvidence, CmEvidence, DualCertificate>;

struct MembershipConfig {
    double tol = 1e-6;
    int grid_size = 200;
    double grid_max = 50.0;
    int max_order = 8;
    std::int64_t index_cap = 16;
    bool search_dual = true;
};

struct MembershipReport {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Recovery> recovered;
    double residual = 0.0;
    std::optional<RejectionEvidence> evidence;
    double tol = 1e-6;
};

/// The decision pipeline: necessary-condition battery (monotonicity, PSD
/// over a family of (k, F), power-subsequence complete monotonicity), then
/// NNLS recovery; Member iff the residual is within tol, Rejected on any
/// failed necessary test or a certified dual witness, else Inconclusive.
MembershipReport membership(const MomentSequence& w,
                            const MembershipConfig& config = {});

/// Cone operations on sequences (matching start and length required).
MomentSequence cone_add(const MomentSequence& w, const MomentSequence& v);
MomentSequence cone_scale(const MomentSequence& w, double c);
MomentSequence cone_product(const MomentSequence& w, const MomentSequence& v);

/// True iff mu carries no mass at 0 (the minimality criterion).
bool minimality_check(const GridMeasure& mu);

} // namespace logmom
