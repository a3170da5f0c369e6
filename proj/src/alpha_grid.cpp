#include "fuzzcalc/alpha_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fuzzcalc {

AlphaGrid::AlphaGrid(std::vector<double> levels) : levels_(std::move(levels)) {
    if (levels_.size() < 2) {
        throw std::invalid_argument("alpha grid needs at least 2 levels");
    }
    if (levels_.front() != 0.0 || levels_.back() != 1.0) {
        throw std::invalid_argument("alpha grid must start at 0 and end at 1");
    }
    for (std::size_t i = 1; i < levels_.size(); ++i) {
        if (!std::isfinite(levels_[i]) || levels_[i] <= levels_[i - 1]) {
            throw std::invalid_argument("alpha grid levels must be strictly increasing");
        }
    }
}

AlphaGrid AlphaGrid::uniform(std::size_t count) {
    if (count < 2) {
        throw std::invalid_argument("alpha grid needs at least 2 levels");
    }
    std::vector<double> levels(count);
    for (std::size_t i = 0; i < count; ++i) {
        levels[i] = static_cast<double>(i) / static_cast<double>(count - 1);
    }
    levels.back() = 1.0;
    return AlphaGrid(std::move(levels));
}

std::size_t AlphaGrid::segment_below(double alpha) const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("alpha outside [0, 1]");
    }
    auto it = std::upper_bound(levels_.begin(), levels_.end(), alpha);
    std::size_t idx = static_cast<std::size_t>(it - levels_.begin());
    if (idx == 0) return 0;                       // alpha == 0
    if (idx >= levels_.size()) return levels_.size() - 2;  // alpha == 1
    return idx - 1;
}

}  // namespace fuzzcalc
