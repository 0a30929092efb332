#pragma once

#include <cstdint>
#include <vector>

namespace logmom {

/// A finite prefix {w_j, ..., w_N} of a candidate Hausdorff log-moment
/// sequence; all values nonnegative.
struct MomentSequence {
    std::int64_t start = 1;          // first stored index j
    std::vector<double> values;      // w_j .. w_N

    MomentSequence() = default;
    MomentSequence(std::int64_t j, std::vector<double> v);

    std::int64_t last_index() const {
        return start + static_cast<std::int64_t>(values.size()) - 1;
    }
    bool has_index(std::int64_t n) const {
        return n >= start && n <= last_index();
    }
    /// w_n; throws if n is outside the stored range.
    double at(std::int64_t n) const;
};

/// Exact log-moments of a grid measure, indices j..N.
class GridMeasure;
MomentSequence moments_of(const GridMeasure& mu, std::int64_t j, std::int64_t N);

} // namespace logmom
