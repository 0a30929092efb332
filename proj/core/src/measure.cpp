#include "logmom/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "logmom/quadrature.hpp"

namespace logmom {

namespace {

void validate_location(Domain d, double loc) {
    if (d == Domain::UnitInterval) {
        if (!(loc > 0.0 && loc <= 1.0))
            throw std::invalid_argument("GridMeasure: unit-interval atoms live in (0,1]");
    } else {
        if (!(loc >= 0.0) || !std::isfinite(loc))
            throw std::invalid_argument("GridMeasure: half-line atoms live in [0,inf)");
    }
}

} // namespace

GridMeasure::GridMeasure(Domain domain, std::vector<Atom> atoms, double atom_at_zero)
    : domain_(domain), atom_at_zero_(atom_at_zero) {
    if (atom_at_zero_ < 0.0)
        throw std::invalid_argument("GridMeasure: atom_at_zero must be >= 0");
    if (domain_ == Domain::HalfLine && atom_at_zero_ != 0.0)
        throw std::invalid_argument(
            "GridMeasure: a half-line mass at 0 is an ordinary atom");
    for (const auto& a : atoms) {
        if (a.weight < 0.0)
            throw std::invalid_argument("GridMeasure: weights must be >= 0");
        validate_location(domain_, a.location);
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.location < b.location; });
    // merge coincident locations (exact equality), drop zero weights
    for (const auto& a : atoms) {
        if (a.weight == 0.0) continue;
        if (!atoms_.empty() && atoms_.back().location == a.location)
            atoms_.back().weight += a.weight;
        else
            atoms_.push_back(a);
    }
}

GridMeasure GridMeasure::point_mass(Domain domain, double location, double weight) {
    if (domain == Domain::UnitInterval && location == 0.0)
        return GridMeasure(domain, {}, weight);
    return GridMeasure(domain, {Atom{location, weight}});
}

double GridMeasure::total_mass() const {
    double m = atom_at_zero_;
    for (const auto& a : atoms_) m += a.weight;
    return m;
}

GridMeasure GridMeasure::operator+(const GridMeasure& rhs) const {
    if (domain_ != rhs.domain_)
        throw std::invalid_argument("GridMeasure: domain mismatch in +");
    std::vector<Atom> all = atoms_;
    all.insert(all.end(), rhs.atoms_.begin(), rhs.atoms_.end());
    return GridMeasure(domain_, std::move(all), atom_at_zero_ + rhs.atom_at_zero_);
}

GridMeasure GridMeasure::operator*(double c) const {
    if (c < 0.0) throw std::invalid_argument("GridMeasure: scale must be >= 0");
    std::vector<Atom> scaled = atoms_;
    for (auto& a : scaled) a.weight *= c;
    return GridMeasure(domain_, std::move(scaled), atom_at_zero_ * c);
}

double log_moment(const GridMeasure& mu, std::int64_t n) {
    if (mu.domain() != Domain::UnitInterval)
        throw std::invalid_argument("log_moment: unit-interval measure required");
    if (n < 1) throw std::invalid_argument("log_moment: n must be >= 1");
    const double ln = std::log(static_cast<double>(n));
    double sum = (n == 1) ? mu.atom_at_zero() : 0.0; // t^{log n} at 0: 1 iff n = 1
    for (const auto& a : mu.atoms())
        sum += a.weight * std::exp(ln * std::log(a.location));
    return sum;
}

double hausdorff_moment(const GridMeasure& mu, std::int64_t k) {
    if (mu.domain() != Domain::UnitInterval)
        throw std::invalid_argument("hausdorff_moment: unit-interval measure required");
    if (k < 0) throw std::invalid_argument("hausdorff_moment: k must be >= 0");
    double sum = (k == 0) ? mu.atom_at_zero() : 0.0;
    for (const auto& a : mu.atoms())
        sum += a.weight * std::pow(a.location, static_cast<double>(k));
    return sum;
}

double laplace_moment(const GridMeasure& nu, double lambda) {
    if (nu.domain() != Domain::HalfLine)
        throw std::invalid_argument("laplace_moment: half-line measure required");
    if (lambda < 0.0) throw std::invalid_argument("laplace_moment: lambda must be >= 0");
    double sum = 0.0;
    for (const auto& a : nu.atoms())
        sum += a.weight * std::exp(-lambda * a.location);
    return sum;
}

GridMeasure pushforward_phi(const GridMeasure& mu) {
    if (mu.domain() != Domain::UnitInterval)
        throw std::invalid_argument("pushforward_phi: unit-interval measure required");
    if (mu.atom_at_zero() != 0.0)
        throw std::domain_error(
            "pushforward_phi: mass at 0 present; push forward trivial_extension(mu)");
    std::vector<Atom> atoms;
    atoms.reserve(mu.atoms().size());
    for (const auto& a : mu.atoms())
        atoms.push_back(Atom{-std::log(a.location), a.weight});
    return GridMeasure(Domain::HalfLine, std::move(atoms));
}

GridMeasure pushforward_psi(const GridMeasure& nu) {
    if (nu.domain() != Domain::HalfLine)
        throw std::invalid_argument("pushforward_psi: half-line measure required");
    std::vector<Atom> atoms;
    atoms.reserve(nu.atoms().size());
    for (const auto& a : nu.atoms())
        atoms.push_back(Atom{std::exp(-a.location), a.weight});
    return GridMeasure(Domain::UnitInterval, std::move(atoms), 0.0);
}

GridMeasure trivial_extension(const GridMeasure& mu) {
    if (mu.domain() != Domain::UnitInterval)
        throw std::invalid_argument("trivial_extension: unit-interval measure required");
    return GridMeasure(Domain::UnitInterval, mu.atoms(), 0.0);
}

GridMeasure product_pushforward(const GridMeasure& mu, const GridMeasure& nu) {
    if (mu.domain() != Domain::UnitInterval || nu.domain() != Domain::UnitInterval)
        throw std::invalid_argument("product_pushforward: unit-interval measures required");
    if (mu.atom_at_zero() != 0.0 || nu.atom_at_zero() != 0.0)
        throw std::invalid_argument("product_pushforward: masses at 0 must vanish");
    std::vector<Atom> atoms;
    atoms.reserve(mu.atoms().size() * nu.atoms().size());
    for (const auto& a : mu.atoms())
        for (const auto& b : nu.atoms())
            atoms.push_back(Atom{a.location * b.location, a.weight * b.weight});
    return GridMeasure(Domain::UnitInterval, std::move(atoms), 0.0);
}

namespace {

void validate_family(const MeasureFamily& fam) {
    using Kind = MeasureFamily::Kind;
    switch (fam.kind) {
        case Kind::LogGamma:
            if (!(fam.alpha < 0.0))
                throw std::invalid_argument("LogGamma requires alpha < 0");
            break;
        case Kind::PowerDensity:
            if (!(fam.alpha > 0.0))
                throw std::invalid_argument("PowerDensity requires alpha > 0");
            break;
        case Kind::PointMass:
            if (!(fam.alpha >= 0.0 && fam.alpha <= 1.0))
                throw std::invalid_argument("PointMass requires alpha in [0,1]");
            break;
    }
    if (fam.quadrature_nodes < 8)
        throw std::invalid_argument("MeasureFamily: need at least 8 quadrature nodes");
}

} // namespace

double family_log_moment(const MeasureFamily& fam, std::int64_t n) {
    validate_family(fam);
    if (n < 1) throw std::invalid_argument("family_log_moment: n must be >= 1");
    const double ln = std::log(static_cast<double>(n));
    using Kind = MeasureFamily::Kind;
    switch (fam.kind) {
        case Kind::LogGamma:
            if (n == 1)
                throw std::domain_error("LogGamma: the n = 1 moment diverges");
            return std::pow(ln, fam.alpha);
        case Kind::PowerDensity:
            return 1.0 / (ln + fam.alpha);
        case Kind::PointMass:
            if (fam.alpha == 0.0) return n == 1 ? 1.0 : 0.0;
            return std::pow(fam.alpha, ln);
    }
    throw std::logic_error("unreachable");
}

GridMeasure family_quadrature(const MeasureFamily& fam) {
    validate_family(fam);
    using Kind = MeasureFamily::Kind;
    if (fam.kind == Kind::PointMass)
        return GridMeasure::point_mass(Domain::UnitInterval, fam.alpha, 1.0);

    std::vector<Atom> atoms;
    if (fam.kind == Kind::PowerDensity) {
        // phi_* image has density e^{-alpha s} ds; scaled Gauss-Laguerre
        const auto rule = gauss_laguerre(fam.quadrature_nodes, 0.0);
        for (int i = 0; i < fam.quadrature_nodes; ++i) {
            const double s = rule.nodes[i] / fam.alpha;
            atoms.push_back(Atom{std::exp(-s), rule.weights[i] / fam.alpha});
        }
    } else {
        // phi_* image has density s^{-1-alpha} / Gamma(-alpha) ds; only the
        // n >= 2 moments converge, so fold the slowest admissible decay
        // e^{-s log 2} into the quadrature weight.
        const double a = -1.0 - fam.alpha;
        const double beta = std::log(2.0);
        const auto rule = gauss_laguerre(fam.quadrature_nodes, a);
        const double scale = std::pow(beta, -a - 1.0) / std::tgamma(-fam.alpha);
        for (int i = 0; i < fam.quadrature_nodes; ++i) {
            const double x = rule.nodes[i];
            const double s = x / beta;
            const double t = std::exp(-s);
            const double w = scale * rule.weights[i] * std::exp(x);
            if (t > 0.0 && w > 0.0 && std::isfinite(w))
                atoms.push_back(Atom{t, w});
        }
    }
    return GridMeasure(Domain::UnitInterval, std::move(atoms), 0.0);
}

double log_moment(const MeasureFamily& fam, std::int64_t n) {
    if (fam.kind == MeasureFamily::Kind::LogGamma && n == 1)
        throw std::domain_error("LogGamma: the n = 1 moment diverges");
    return log_moment(family_quadrature(fam), n);
}

} // namespace logmom
