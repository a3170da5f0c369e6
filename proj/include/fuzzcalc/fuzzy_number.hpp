#pragma once

#include <cstddef>
#include <vector>

#include "fuzzcalc/alpha_grid.hpp"
#include "fuzzcalc/interval.hpp"
#include "fuzzcalc/validity.hpp"

namespace fuzzcalc {

/// A fuzzy number stored as endpoint samples over an alpha grid.
/// Construction validates the endpoint conditions (monotone lower/upper,
/// lower <= upper) and throws std::invalid_argument when they fail, so a
/// live FuzzyNumber is always well-formed. Immutable after construction.
class FuzzyNumber {
public:
    FuzzyNumber(AlphaGrid grid, std::vector<double> lower, std::vector<double> upper,
                double tol = kDefaultValidityTol);

    const AlphaGrid& grid() const { return grid_; }
    std::size_t levels() const { return grid_.size(); }

    double lower(std::size_t i) const { return lower_[i]; }
    double upper(std::size_t i) const { return upper_[i]; }
    const std::vector<double>& lower_values() const { return lower_; }
    const std::vector<double>& upper_values() const { return upper_; }

    /// Endpoint values at an arbitrary alpha in [0,1], linearly interpolated
    /// between grid levels (exact at grid levels).
    double lower_at(double alpha) const;
    double upper_at(double alpha) const;

    Interval support() const { return {lower_.front(), upper_.front()}; }
    Interval core() const { return {lower_.back(), upper_.back()}; }

private:
    AlphaGrid grid_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Triangular fuzzy number (l, m, r). Requires l <= m <= r.
FuzzyNumber make_triangular(double l, double m, double r, const AlphaGrid& grid);

/// Trapezoidal fuzzy number (l, m1, m2, r) with core [m1, m2] at alpha = 1.
/// Requires l <= m1 <= m2 <= r.
FuzzyNumber make_trapezoidal(double l, double m1, double m2, double r, const AlphaGrid& grid);

/// Crisp value embedded as the degenerate triangle (v, v, v).
FuzzyNumber make_crisp(double v, const AlphaGrid& grid);

/// Level set [a1(alpha), a2(alpha)]. Requires alpha in [0, 1].
Interval level_set(const FuzzyNumber& a, double alpha);

/// Levelwise sum. Requires identical grids.
FuzzyNumber add(const FuzzyNumber& a, const FuzzyNumber& b);

/// Levelwise scalar multiple; negative scalars swap the endpoint roles.
FuzzyNumber scalar_mul(double lambda, const FuzzyNumber& a);

/// Membership grade of x: sup of the levels whose set contains x, with
/// linear interpolation between grid levels; 0 outside the support.
double membership(const FuzzyNumber& a, double x);

/// sup over grid levels of the Hausdorff distance between level sets:
/// max_alpha max(|a1-b1|, |a2-b2|). Requires identical grids.
double distance(const FuzzyNumber& a, const FuzzyNumber& b);

}  // namespace fuzzcalc
