#pragma once

#include <cstddef>
#include <vector>

namespace fuzzcalc {

/// Ordered set of membership levels used to discretize a fuzzy number.
/// Invariants: strictly increasing, first level 0, last level 1, size >= 2.
class AlphaGrid {
public:
    explicit AlphaGrid(std::vector<double> levels);

    /// Evenly spaced grid with `count` levels (default 11: 0, 0.1, ..., 1).
    static AlphaGrid uniform(std::size_t count = 11);

    std::size_t size() const { return levels_.size(); }
    double level(std::size_t i) const { return levels_[i]; }
    const std::vector<double>& levels() const { return levels_; }

    /// Index k with level(k) <= alpha <= level(k+1). Requires alpha in [0, 1].
    std::size_t segment_below(double alpha) const;

    bool operator==(const AlphaGrid& other) const { return levels_ == other.levels_; }
    bool operator!=(const AlphaGrid& other) const { return !(*this == other); }

private:
    std::vector<double> levels_;
};

}  // namespace fuzzcalc
