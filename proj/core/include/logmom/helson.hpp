#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "logmom/cmono.hpp"
#include "logmom/sequence.hpp"

namespace logmom {

/// The N x N truncation of the Helson matrix M(w), entries[m][n] = w_{m n}.
/// Requires data through index N^2; symmetric by construction.
struct HelsonTruncation {
    std::int64_t size = 0;
    Eigen::MatrixXd entries;
};

HelsonTruncation helson_build(const MomentSequence& w, std::int64_t N);

/// Power-iteration estimate of the largest singular value of the truncation,
/// deterministic for a fixed seed; stops on 1e-10 Rayleigh-quotient
/// stagnation or after iters steps.
double operator_norm(const HelsonTruncation& M, int iters = 1000,
                     std::uint64_t seed = 1);

struct BoundednessCheck {
    bool ok = true;
    std::int64_t violating_index = 0;
};
/// w_n <= C / (sqrt(n) log n) for all stored n >= 2.
BoundednessCheck boundedness_criterion(const MomentSequence& w, double C);

/// x f(x) <= C exp(-x / 2) on [0, infinity), checked on a dense grid that
/// extends past the point where every term of x f(x) e^{x/2} decays;
/// requires j = 1 and a vanishing atom. Any Bernstein mass at rate <= 1/2
/// makes the left side eventually dominate, hence fails.
bool cm_criterion(const DirichletPair& pair, double C);

} // namespace logmom
