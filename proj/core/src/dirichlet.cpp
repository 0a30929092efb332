#include "logmom/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace logmom {

DirichletPolynomial::DirichletPolynomial(std::map<std::int64_t, double> coeffs)
    : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->first < 1)
            throw std::invalid_argument("DirichletPolynomial: index must be >= 1");
        if (it->second == 0.0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

void DirichletPolynomial::set(std::int64_t n, double a) {
    if (n < 1) throw std::invalid_argument("DirichletPolynomial: index must be >= 1");
    if (a == 0.0)
        coeffs_.erase(n);
    else
        coeffs_[n] = a;
}

void DirichletPolynomial::add(std::int64_t n, double a) { set(n, coeff(n) + a); }

double DirichletPolynomial::coeff(std::int64_t n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? 0.0 : it->second;
}

double DirichletPolynomial::operator()(double s) const {
    if (s < 0.0) throw std::domain_error("DirichletPolynomial: s must be >= 0");
    double sum = 0.0;
    for (const auto& [n, a] : coeffs_)
        sum += a * std::exp(-s * std::log(static_cast<double>(n)));
    return sum;
}

double DirichletPolynomial::limit_at_infinity() const { return coeff(1); }

double DirichletPolynomial::pullback(double t) const {
    if (t < 0.0 || t > 1.0)
        throw std::domain_error("pullback: t must lie in [0,1]");
    if (t == 0.0) return limit_at_infinity();
    return (*this)(-std::log(t));
}

DirichletPolynomial DirichletPolynomial::operator+(const DirichletPolynomial& rhs) const {
    DirichletPolynomial out = *this;
    for (const auto& [n, a] : rhs.coeffs_) out.add(n, a);
    return out;
}

DirichletPolynomial DirichletPolynomial::operator-(const DirichletPolynomial& rhs) const {
    DirichletPolynomial out = *this;
    for (const auto& [n, a] : rhs.coeffs_) out.add(n, -a);
    return out;
}

DirichletPolynomial DirichletPolynomial::operator*(const DirichletPolynomial& rhs) const {
    DirichletPolynomial out;
    for (const auto& [n, a] : coeffs_)
        for (const auto& [m, b] : rhs.coeffs_)
            out.add(n * m, a * b); // exact integer index product
    return out;
}

DirichletPolynomial DirichletPolynomial::operator*(double c) const {
    DirichletPolynomial out;
    for (const auto& [n, a] : coeffs_) out.set(n, a * c);
    return out;
}

double DirichletPolynomial::lipschitz_bound() const {
    double L = 0.0;
    for (const auto& [n, a] : coeffs_)
        if (n >= 2) L += std::abs(a) * std::log(static_cast<double>(n));
    return L;
}

double DirichletPolynomial::curvature_bound() const {
    double L2 = 0.0;
    for (const auto& [n, a] : coeffs_) {
        if (n >= 2) {
            const double ln = std::log(static_cast<double>(n));
            L2 += std::abs(a) * ln * ln;
        }
    }
    return L2;
}

bool is_certificate(const CertifyResult& r) {
    return std::holds_alternative<PositivityCertificate>(r);
}

namespace {

// Decayed derivative bounds on [c, infinity): the n >= 2 terms carry an
// extra factor n^{-c}.
double lipschitz_from(const DirichletPolynomial& q, double c) {
    double L = 0.0;
    for (const auto& [n, a] : q.terms())
        if (n >= 2) {
            const double ln = std::log(static_cast<double>(n));
            L += std::abs(a) * ln * std::exp(-c * ln);
        }
    return L;
}

double curvature_from(const DirichletPolynomial& q, double c) {
    double L2 = 0.0;
    for (const auto& [n, a] : q.terms())
        if (n >= 2) {
            const double ln = std::log(static_cast<double>(n));
            L2 += std::abs(a) * ln * ln * std::exp(-c * ln);
        }
    return L2;
}

// T(s) = sum_{n > m} |a_n| (n/m)^{-s}; for s >= s0 the values of q on
// [s0, infinity) lie between (a_m - T(s0)) m^{-s} and (a_m + T(s0)) m^{-s}.
double tail_ratio_sum(const DirichletPolynomial& q, std::int64_t m, double s) {
    double T = 0.0;
    const double lm = std::log(static_cast<double>(m));
    for (const auto& [n, a] : q.terms())
        if (n > m)
            T += std::abs(a) * std::exp(-s * (std::log(static_cast<double>(n)) - lm));
    return T;
}

// Smallest S (doubling + bisection) with T(S) <= target.
double tail_cutoff(const DirichletPolynomial& q, std::int64_t m, double target) {
    if (target <= 0.0)
        throw std::runtime_error("certify: tolerance exhausted in tail cutoff");
    if (tail_ratio_sum(q, m, 0.0) <= target) return 0.0;
    double lo = 0.0, hi = 1.0;
    while (tail_ratio_sum(q, m, hi) > target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e7) throw std::runtime_error("certify: tail cutoff search diverged");
    }
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (tail_ratio_sum(q, m, mid) <= target)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

struct ScanState {
    double min_value = std::numeric_limits<double>::infinity();
    double min_location = 0.0;
    double margin = std::numeric_limits<double>::infinity();
    double min_width = std::numeric_limits<double>::infinity();
    std::optional<FailureWitness> witness;
    long cells = 0;
};

void note_sample(ScanState& st, double x, double v) {
    if (v < st.min_value) {
        st.min_value = v;
        st.min_location = x;
    }
}

// Recursive interval subdivision: a cell [a,b] is accepted once
// min(q(a), q(b)) minus a derivative bound over the cell clears -tol.
void scan(const DirichletPolynomial& q, double a, double b, double qa, double qb,
          double tol, ScanState& st) {
    if (st.witness) return;
    note_sample(st, a, qa);
    note_sample(st, b, qb);
    if (qa < -tol) { st.witness = FailureWitness{a, qa}; return; }
    if (qb < -tol) { st.witness = FailureWitness{b, qb}; return; }
    const double w = b - a;
    const double bound = std::min(lipschitz_from(q, a) * w / 2.0,
                                  curvature_from(q, a) * w * w / 8.0);
    const double low = std::min(qa, qb) - bound;
    if (low >= -tol) {
        st.margin = std::min(st.margin, low);
        st.min_width = std::min(st.min_width, w);
        ++st.cells;
        return;
    }
    if (w < 1e-13 || st.cells > 4'000'000) {
        st.witness = FailureWitness{qa <= qb ? a : b, std::min(qa, qb)};
        return;
    }
    const double mid = 0.5 * (a + b);
    const double qm = q(mid);
    scan(q, a, mid, qa, qm, tol, st);
    scan(q, mid, b, qm, qb, tol, st);
}

} // namespace

CertifyResult certify_nonnegative(const DirichletPolynomial& q, double grid_step,
                                  double tol) {
    if (grid_step <= 0.0) throw std::invalid_argument("certify: grid_step must be > 0");
    if (tol < 0.0) throw std::invalid_argument("certify: tol must be >= 0");

    if (q.is_zero())
        return PositivityCertificate{0.0, grid_step, 0.0, 0.0, 0.0, 0.0, 1};

    const std::int64_t m = q.terms().begin()->first;
    const double am = q.terms().begin()->second;
    const double lm = std::log(static_cast<double>(m));
    double S = 0.0;

    if (am > 0.0) {
        // beyond S the m-term dominates and q carries the sign of a_m
        S = tail_cutoff(q, m, am / 2.0);
    } else {
        S = tail_cutoff(q, m, -am / 2.0);
        // on [S, infinity): q(s) <= a_m m^{-s} / 2 < 0
        const double dip = -am * std::exp(-S * lm) / 2.0;
        if (dip > tol) {
            const double qS = q(S);
            if (qS < -tol) return FailureWitness{S, qS};
            // numerical slack; march until the guaranteed dip shows
            for (double s = S; s < S + 100.0; s += 0.25) {
                const double v = q(s);
                if (v < -tol) return FailureWitness{s, v};
            }
            return FailureWitness{S, qS};
        }
        if (m == 1) {
            if (-am > tol) {
                const double sfar = std::max(S, 60.0);
                return FailureWitness{sfar, q(sfar)};
            }
            // |a_1| <= tol: push S until a_1 - T(S) >= -tol
            S = std::max(S, tail_cutoff(q, m, (tol + am) * 0.5));
        } else {
            // negative but within-tol tail: push S until |q| <= tol beyond it
            const double total = -am + tail_ratio_sum(q, m, S);
            if (total > tol) S = std::max(S, std::log(total / tol) / lm);
        }
    }

    ScanState st;
    if (S > 0.0) {
        scan(q, 0.0, S, q(0.0), q(S), tol, st);
        if (st.witness) return *st.witness;
    } else {
        const double q0 = q(0.0);
        if (q0 < -tol) return FailureWitness{0.0, q0};
        note_sample(st, 0.0, q0);
        st.margin = q0;
        st.min_width = grid_step;
    }

    PositivityCertificate cert;
    cert.grid_max = S;
    cert.grid_step = std::min(grid_step, st.min_width);
    cert.lipschitz_bound = q.lipschitz_bound();
    cert.min_grid_value = st.min_value;
    cert.min_location = st.min_location;
    cert.margin = st.margin;
    cert.tail_sign_index = m;
    return cert;
}

} // namespace logmom
