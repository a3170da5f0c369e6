#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "fuzzcalc/alpha_grid.hpp"

namespace fuzzcalc {

/// Absolute slack used when checking monotonicity/ordering of endpoint grids.
/// Absorbs round-off from arithmetic chains; anything beyond it is a hard
/// violation. Overridable per call (CLI: FUZZCALC_TOL).
inline constexpr double kDefaultValidityTol = 1e-9;

enum class Condition {
    MonotoneLower,  // lower endpoint must be nondecreasing in alpha
    MonotoneUpper,  // upper endpoint must be nonincreasing in alpha
    Ordering,       // lower <= upper at every level
};

std::string_view to_string(Condition c);

struct Violation {
    Condition condition;
    double alpha;      // grid level where the condition broke
    double magnitude;  // how far beyond the slack the check failed
};

struct ValidityReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
    /// Largest violation magnitude, 0 when valid.
    double worst() const;
};

/// Checks the discretized fuzzy-number conditions on an endpoint grid:
/// lower nondecreasing, upper nonincreasing, lower <= upper per level.
/// Lists sized to the grid; throws std::invalid_argument on length mismatch.
ValidityReport validate(std::span<const double> lower, std::span<const double> upper,
                        const AlphaGrid& grid, double tol = kDefaultValidityTol);

}  // namespace fuzzcalc
