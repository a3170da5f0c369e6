#include "fuzzcalc/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fuzzcalc {

namespace {

double interpolate(const AlphaGrid& grid, const std::vector<double>& values, double alpha) {
    const std::size_t k = grid.segment_below(alpha);
    const double a0 = grid.level(k);
    const double a1 = grid.level(k + 1);
    if (alpha == a0) return values[k];
    if (alpha == a1) return values[k + 1];
    const double f = (alpha - a0) / (a1 - a0);
    return values[k] + f * (values[k + 1] - values[k]);
}

[[noreturn]] void throw_invalid(const ValidityReport& report) {
    const Violation& v = report.violations.front();
    std::ostringstream msg;
    msg << "endpoint grids do not form a fuzzy number: " << to_string(v.condition)
        << " violated at alpha=" << v.alpha << " by " << v.magnitude << " ("
        << report.violations.size() << " violation(s) total)";
    throw std::invalid_argument(msg.str());
}

}  // namespace

FuzzyNumber::FuzzyNumber(AlphaGrid grid, std::vector<double> lower, std::vector<double> upper,
                         double tol)
    : grid_(std::move(grid)), lower_(std::move(lower)), upper_(std::move(upper)) {
    for (double v : lower_) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite lower endpoint");
    }
    for (double v : upper_) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite upper endpoint");
    }
    const ValidityReport report = validate(lower_, upper_, grid_, tol);
    if (!report.valid()) throw_invalid(report);
}

double FuzzyNumber::lower_at(double alpha) const { return interpolate(grid_, lower_, alpha); }

double FuzzyNumber::upper_at(double alpha) const { return interpolate(grid_, upper_, alpha); }

FuzzyNumber make_triangular(double l, double m, double r, const AlphaGrid& grid) {
    if (!(l <= m && m <= r)) {
        throw std::invalid_argument("triangular parameters must satisfy l <= m <= r");
    }
    std::vector<double> lower(grid.size());
    std::vector<double> upper(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double a = grid.level(k);
        lower[k] = l + a * (m - l);
        upper[k] = r - a * (r - m);
    }
    return FuzzyNumber(grid, std::move(lower), std::move(upper));
}

FuzzyNumber make_trapezoidal(double l, double m1, double m2, double r, const AlphaGrid& grid) {
    if (!(l <= m1 && m1 <= m2 && m2 <= r)) {
        throw std::invalid_argument("trapezoidal parameters must satisfy l <= m1 <= m2 <= r");
    }
    std::vector<double> lower(grid.size());
    std::vector<double> upper(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double a = grid.level(k);
        lower[k] = l + a * (m1 - l);
        upper[k] = r - a * (r - m2);
    }
    return FuzzyNumber(grid, std::move(lower), std::move(upper));
}

FuzzyNumber make_crisp(double v, const AlphaGrid& grid) { return make_triangular(v, v, v, grid); }

Interval level_set(const FuzzyNumber& a, double alpha) {
    return {a.lower_at(alpha), a.upper_at(alpha)};
}

FuzzyNumber add(const FuzzyNumber& a, const FuzzyNumber& b) {
    if (a.grid() != b.grid()) {
        throw std::invalid_argument("add requires identical alpha grids");
    }
    std::vector<double> lower(a.levels());
    std::vector<double> upper(a.levels());
    for (std::size_t k = 0; k < a.levels(); ++k) {
        lower[k] = a.lower(k) + b.lower(k);
        upper[k] = a.upper(k) + b.upper(k);
    }
    return FuzzyNumber(a.grid(), std::move(lower), std::move(upper));
}

FuzzyNumber scalar_mul(double lambda, const FuzzyNumber& a) {
    std::vector<double> lower(a.levels());
    std::vector<double> upper(a.levels());
    for (std::size_t k = 0; k < a.levels(); ++k) {
        if (lambda >= 0.0) {
            lower[k] = lambda * a.lower(k);
            upper[k] = lambda * a.upper(k);
        } else {
            lower[k] = lambda * a.upper(k);
            upper[k] = lambda * a.lower(k);
        }
    }
    return FuzzyNumber(a.grid(), std::move(lower), std::move(upper));
}

double membership(const FuzzyNumber& a, double x) {
    if (x < a.lower(0) || x > a.upper(0)) return 0.0;
    const AlphaGrid& grid = a.grid();
    const std::size_t n = grid.size();

    // Highest alpha with a1(alpha) <= x, following the interpolated left side.
    double mu_left = 1.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double v0 = a.lower(k);
        const double v1 = a.lower(k + 1);
        if (v1 <= x) continue;  // still inside at the segment top
        const double f = (x - v0) / (v1 - v0);
        mu_left = grid.level(k) + f * (grid.level(k + 1) - grid.level(k));
        break;
    }
    // Highest alpha with a2(alpha) >= x on the right side.
    double mu_right = 1.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double v0 = a.upper(k);
        const double v1 = a.upper(k + 1);
        if (v1 >= x) continue;
        const double f = (v0 - x) / (v0 - v1);
        mu_right = grid.level(k) + f * (grid.level(k + 1) - grid.level(k));
        break;
    }
    return std::min(mu_left, mu_right);
}

double distance(const FuzzyNumber& a, const FuzzyNumber& b) {
    if (a.grid() != b.grid()) {
        throw std::invalid_argument("distance requires identical alpha grids");
    }
    double d = 0.0;
    for (std::size_t k = 0; k < a.levels(); ++k) {
        d = std::max(d, std::abs(a.lower(k) - b.lower(k)));
        d = std::max(d, std::abs(a.upper(k) - b.upper(k)));
    }
    return d;
}

}  // namespace fuzzcalc
