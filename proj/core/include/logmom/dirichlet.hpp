#pragma once

#include <cstdint>
#include <map>
#include <variant>

namespace logmom {

/// A finite real-coefficient combination of the functions n^{-s}, n >= 1,
/// restricted to real arguments s >= 0. Stored sparsely; no explicit zero
/// coefficients are kept.
class DirichletPolynomial {
public:
    DirichletPolynomial() = default;
    explicit DirichletPolynomial(std::map<std::int64_t, double> coeffs);

    /// Sets the coefficient of n^{-s}; a zero value erases the entry.
    void set(std::int64_t n, double a);
    void add(std::int64_t n, double a);
    double coeff(std::int64_t n) const;

    const std::map<std::int64_t, double>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Evaluates sum a_n n^{-s} in increasing index order. Requires s >= 0.
    double operator()(double s) const;

    /// The value at s -> infinity, which is the n = 1 coefficient.
    double limit_at_infinity() const;

    /// The pullback q_p on [0,1]: q_p(0) = limit at infinity,
    /// q_p(t) = q(-log t) for t in (0,1].
    double pullback(double t) const;

    DirichletPolynomial operator+(const DirichletPolynomial& rhs) const;
    DirichletPolynomial operator-(const DirichletPolynomial& rhs) const;
    /// Product via exact integer index products (n, m) -> n*m.
    DirichletPolynomial operator*(const DirichletPolynomial& rhs) const;
    DirichletPolynomial operator*(double c) const;

    /// sum_{n>=2} |a_n| log n, a global bound on |q'| over [0, infinity).
    double lipschitz_bound() const;
    /// sum_{n>=2} |a_n| (log n)^2, a global bound on |q''|.
    double curvature_bound() const;

private:
    std::map<std::int64_t, double> coeffs_;
};

/// Evidence that q >= -tol on all of [0, infinity): beyond grid_max the sign
/// is controlled by the coefficient at tail_sign_index; on [0, grid_max] the
/// sampled minimum plus a derivative bound gives the certified margin.
struct PositivityCertificate {
    double grid_max = 0.0;        // tail cutoff S
    double grid_step = 0.0;       // finest cell width used in the scan
    double lipschitz_bound = 0.0; // L = sum_{n>=2} |a_n| log n
    double min_grid_value = 0.0;  // smallest sampled value on [0, S]
    double min_location = 0.0;    // where the smallest sample occurred
    double margin = 0.0;          // certified lower bound for q on [0, S]
    std::int64_t tail_sign_index = 1;
};

struct FailureWitness {
    double location = 0.0; // s* with q(s*) < -tol
    double value = 0.0;
};

using CertifyResult = std::variant<PositivityCertificate, FailureWitness>;

/// Decides q >= -tol on [0, infinity). Returns either a certificate or a
/// witness point where q drops below -tol. The scan starts at the requested
/// grid step and subdivides adaptively where the sample-plus-derivative bound
/// is not yet conclusive.
CertifyResult certify_nonnegative(const DirichletPolynomial& q,
                                  double grid_step, double tol);

bool is_certificate(const CertifyResult& r);

} // namespace logmom
