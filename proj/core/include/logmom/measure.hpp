#pragma once

#include <cstdint>
#include <vector>

namespace logmom {

enum class Domain { UnitInterval, HalfLine };

struct Atom {
    double location = 0.0;
    double weight = 0.0;
};

/// A finitely supported nonnegative measure, either on (0,1] with an optional
/// distinguished mass at 0 (UnitInterval) or on [0, infinity) (HalfLine).
/// Atoms are kept sorted by location; coincident locations are merged by
/// exact equality.
class GridMeasure {
public:
    GridMeasure(Domain domain, std::vector<Atom> atoms, double atom_at_zero = 0.0);

    static GridMeasure point_mass(Domain domain, double location, double weight = 1.0);
    static GridMeasure zero(Domain domain) { return GridMeasure(domain, {}); }

    Domain domain() const { return domain_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    double atom_at_zero() const { return atom_at_zero_; }
    double total_mass() const;

    GridMeasure operator+(const GridMeasure& rhs) const;
    GridMeasure operator*(double c) const;

private:
    Domain domain_;
    std::vector<Atom> atoms_;
    double atom_at_zero_ = 0.0;
};

/// w_n = integral of t^{log n} dmu over [0,1].  The mass at 0 contributes
/// only for n = 1 (0^0 = 1; t^{log n} vanishes at 0 for n >= 2).
double log_moment(const GridMeasure& mu, std::int64_t n);

/// Classical Hausdorff moment: integral of x^k dmu, counting the mass at 0
/// only for k = 0.
double hausdorff_moment(const GridMeasure& mu, std::int64_t k);

/// sum of weight * exp(-lambda * location) over a HalfLine measure.
double laplace_moment(const GridMeasure& nu, double lambda);

/// Push-forward under phi(t) = -log t; requires the mass at 0 to vanish.
GridMeasure pushforward_phi(const GridMeasure& mu);

/// Push-forward under psi(s) = exp(-s); inverse of phi on grids.
GridMeasure pushforward_psi(const GridMeasure& nu);

/// Same atoms with the mass at 0 removed (the trivial extension mu-hat).
GridMeasure trivial_extension(const GridMeasure& mu);

/// Image of mu x nu under (x,y) -> xy.  Requires both masses at 0 to vanish.
GridMeasure product_pushforward(const GridMeasure& mu, const GridMeasure& nu);

/// Closed-form example families of Hausdorff log-moment sequences:
///   LogGamma(alpha < 0):     w_n = (log n)^alpha, n >= 2
///   PowerDensity(alpha > 0): w_n = 1/(log n + alpha)
///   PointMass(alpha in [0,1]): w_n = alpha^{log n}
struct MeasureFamily {
    enum class Kind { LogGamma, PowerDensity, PointMass };
    Kind kind;
    double alpha = 0.0;
    int quadrature_nodes = 64;
};

/// The family's closed-form log-moment. Throws for LogGamma with n = 1.
double family_log_moment(const MeasureFamily& fam, std::int64_t n);

/// A grid discretization on [0,1] whose log-moments reproduce the family's
/// closed forms. LogGamma and PowerDensity are discretized in the s-domain
/// with a (generalized) Gauss-Laguerre rule and pushed forward by psi.
GridMeasure family_quadrature(const MeasureFamily& fam);

/// Log-moment of the family through its quadrature discretization.
double log_moment(const MeasureFamily& fam, std::int64_t n);

} // namespace logmom
