#include "fuzzcalc/validity.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuzzcalc {

std::string_view to_string(Condition c) {
    switch (c) {
        case Condition::MonotoneLower: return "monotone_lower";
        case Condition::MonotoneUpper: return "monotone_upper";
        case Condition::Ordering: return "ordering";
    }
    return "unknown";
}

double ValidityReport::worst() const {
    double w = 0.0;
    for (const auto& v : violations) w = std::max(w, v.magnitude);
    return w;
}

ValidityReport validate(std::span<const double> lower, std::span<const double> upper,
                        const AlphaGrid& grid, double tol) {
    if (lower.size() != grid.size() || upper.size() != grid.size()) {
        throw std::invalid_argument("endpoint list length does not match alpha grid");
    }
    ValidityReport report;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        const double drop = lower[k] - lower[k + 1];
        if (drop > tol) {
            report.violations.push_back({Condition::MonotoneLower, grid.level(k + 1), drop});
        }
        const double rise = upper[k + 1] - upper[k];
        if (rise > tol) {
            report.violations.push_back({Condition::MonotoneUpper, grid.level(k + 1), rise});
        }
    }
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double gap = lower[k] - upper[k];
        if (gap > tol) {
            report.violations.push_back({Condition::Ordering, grid.level(k), gap});
        }
    }
    return report;
}

}  // namespace fuzzcalc
