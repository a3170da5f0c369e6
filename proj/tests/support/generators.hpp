#pragma once

// Shared generators and independent oracles for the unit and acceptance
// suites. Everything here is test-only and deliberately avoids the library's
// arithmetic paths where it serves as an oracle.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "fuzzcalc/fuzzy_function.hpp"
#include "fuzzcalc/fuzzy_number.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t pick_index(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

/// Random grid: mostly uniform layouts, sometimes an irregular one.
inline fuzzcalc::AlphaGrid random_grid(Rng& rng) {
    const int kind = static_cast<int>(pick_index(rng, 3));
    if (kind == 0) return fuzzcalc::AlphaGrid::uniform(11);
    if (kind == 1) {
        return fuzzcalc::AlphaGrid::uniform(2 + pick_index(rng, 20));
    }
    // Irregular: sorted uniques between 0 and 1.
    std::vector<double> levels{0.0, 1.0};
    const std::size_t interior = 1 + pick_index(rng, 8);
    for (std::size_t i = 0; i < interior; ++i) levels.push_back(uniform(rng, 0.01, 0.99));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return fuzzcalc::AlphaGrid(std::move(levels));
}

/// Random triangular number. Widths are either exactly zero (crisp side) or
/// bounded away from the validity slack so borderline cases cannot appear.
inline fuzzcalc::FuzzyNumber random_triangular(Rng& rng, const fuzzcalc::AlphaGrid& grid,
                                               double center_lo = -50.0, double center_hi = 50.0,
                                               bool allow_crisp = true) {
    const double m = uniform(rng, center_lo, center_hi);
    auto width = [&]() {
        if (allow_crisp && pick_index(rng, 8) == 0) return 0.0;
        return uniform(rng, 1e-3, 10.0);
    };
    const double wl = width();
    const double wr = width();
    return fuzzcalc::make_triangular(m - wl, m, m + wr, grid);
}

inline fuzzcalc::FuzzyNumber random_trapezoidal(Rng& rng, const fuzzcalc::AlphaGrid& grid,
                                                double center_lo = -50.0,
                                                double center_hi = 50.0) {
    const double m1 = uniform(rng, center_lo, center_hi);
    const double m2 = m1 + uniform(rng, 0.0, 5.0);
    const double wl = uniform(rng, 1e-3, 10.0);
    const double wr = uniform(rng, 1e-3, 10.0);
    return fuzzcalc::make_trapezoidal(m1 - wl, m1, m2, m2 + wr, grid);
}

/// Random valid endpoint grids that are not piecewise-linear shapes: start
/// from a random core and widen as alpha decreases, with occasional flat
/// segments.
inline fuzzcalc::FuzzyNumber random_irregular(Rng& rng, const fuzzcalc::AlphaGrid& grid,
                                              double center_lo = -50.0, double center_hi = 50.0) {
    const std::size_t n = grid.size();
    std::vector<double> lower(n);
    std::vector<double> upper(n);
    const double c = uniform(rng, center_lo, center_hi);
    lower[n - 1] = c;
    upper[n - 1] = c + uniform(rng, 0.0, 2.0);
    for (std::size_t k = n - 1; k-- > 0;) {
        const bool flat = pick_index(rng, 4) == 0;
        lower[k] = lower[k + 1] - (flat ? 0.0 : uniform(rng, 1e-3, 3.0));
        upper[k] = upper[k + 1] + (flat ? 0.0 : uniform(rng, 1e-3, 3.0));
    }
    return fuzzcalc::FuzzyNumber(grid, std::move(lower), std::move(upper));
}

inline fuzzcalc::FuzzyNumber random_fuzzy(Rng& rng, const fuzzcalc::AlphaGrid& grid,
                                          double center_lo = -50.0, double center_hi = 50.0) {
    switch (pick_index(rng, 3)) {
        case 0: return random_triangular(rng, grid, center_lo, center_hi);
        case 1: return random_trapezoidal(rng, grid, center_lo, center_hi);
        default: return random_irregular(rng, grid, center_lo, center_hi);
    }
}

/// Nonnegative-support variant for the built-in function families. The
/// centers sit high enough that the widest generated shapes stay positive;
/// the loop guards the irregular worst case on large grids.
inline fuzzcalc::FuzzyNumber random_nonnegative(Rng& rng, const fuzzcalc::AlphaGrid& grid) {
    for (;;) {
        fuzzcalc::FuzzyNumber a = random_fuzzy(rng, grid, 65.0, 120.0);
        if (a.lower(0) >= 0.0) return a;
    }
}

/// Interval-arithmetic oracle: per-level sum computed directly.
inline std::array<double, 2> oracle_add_level(double alo, double ahi, double blo, double bhi) {
    return {alo + blo, ahi + bhi};
}

/// Interval-arithmetic oracle for scalar multiples: sort the two products.
inline std::array<double, 2> oracle_scale_level(double lambda, double lo, double hi) {
    const double p = lambda * lo;
    const double q = lambda * hi;
    return {std::min(p, q), std::max(p, q)};
}

/// Closed-form decay band, written straight from the worked solution:
/// y1 = 0.5 (c1 - c2) e^t + 0.5 (c1 + c2) e^-t, y2 mirrored. Test-local
/// oracle for the solver module.
inline std::array<double, 2> oracle_decay_level(double c1, double c2, double t) {
    const double grow = 0.5 * (c1 - c2) * std::exp(t);
    const double decay = 0.5 * (c1 + c2) * std::exp(-t);
    return {grow + decay, decay - grow};
}

/// Triangular endpoints, independent of the library's sampling.
inline std::array<double, 2> oracle_triangular_level(double l, double m, double r, double alpha) {
    return {l + alpha * (m - l), r - alpha * (r - m)};
}

}  // namespace testsupport
