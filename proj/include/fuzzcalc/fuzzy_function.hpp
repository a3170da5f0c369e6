#pragma once

#include <functional>
#include <limits>

#include "fuzzcalc/fuzzy_number.hpp"

namespace fuzzcalc {

/// Closed interval of admissible times; endpoints may be infinite.
struct Domain {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    static Domain all() { return {}; }
    static Domain closed(double lo, double hi) { return {lo, hi}; }

    bool contains(double t) const { return t >= lo && t <= hi; }
    bool bounded_below() const { return lo > -std::numeric_limits<double>::infinity(); }
    bool bounded_above() const { return hi < std::numeric_limits<double>::infinity(); }
    bool operator==(const Domain& other) const { return lo == other.lo && hi == other.hi; }
};

using LevelEvaluator = std::function<double(double t, double alpha)>;

/// Fuzzy-number-valued function of time, represented by its endpoint
/// evaluators y1(t, alpha) and y2(t, alpha) over a fixed alpha grid.
/// Analytic t-derivative evaluators are optional; derivative operations
/// fall back to finite differences when they are absent.
/// Evaluators must be pure; the object is immutable and safe to share.
class FuzzyFunction {
public:
    FuzzyFunction(Domain domain, AlphaGrid grid, LevelEvaluator lower, LevelEvaluator upper,
                  LevelEvaluator deriv_lower = {}, LevelEvaluator deriv_upper = {});

    const Domain& domain() const { return domain_; }
    const AlphaGrid& grid() const { return grid_; }
    bool has_analytic_derivatives() const;

    /// Raw endpoint evaluation. Throws std::domain_error when t is outside
    /// the domain or the evaluator produces a non-finite value.
    double lower_value(double t, double alpha) const;
    double upper_value(double t, double alpha) const;

    /// Analytic endpoint derivatives; call only when has_analytic_derivatives().
    double lower_derivative(double t, double alpha) const;
    double upper_derivative(double t, double alpha) const;

    /// Function value at t as a validated fuzzy number.
    FuzzyNumber value_at(double t, double tol = kDefaultValidityTol) const;

private:
    Domain domain_;
    AlphaGrid grid_;
    LevelEvaluator lower_;
    LevelEvaluator upper_;
    LevelEvaluator deriv_lower_;
    LevelEvaluator deriv_upper_;
};

FuzzyFunction make_function(Domain domain, AlphaGrid grid, LevelEvaluator lower,
                            LevelEvaluator upper, LevelEvaluator deriv_lower = {},
                            LevelEvaluator deriv_upper = {});

/// t -> a * exp(-t) on all of R, with analytic derivatives.
/// Requires nonnegative support (a1(0) >= 0) so the endpoint roles stay fixed.
FuzzyFunction builtin_exp_decay(const FuzzyNumber& a);

/// t -> a * sin(t) on [0, pi], with analytic derivatives.
/// Requires nonnegative support.
FuzzyFunction builtin_sinusoid(const FuzzyNumber& a);

/// Constant function t -> a.
FuzzyFunction constant_function(const FuzzyNumber& a, Domain domain = Domain::all());

/// Crisp (real-valued) function embedded with lower = upper = f(t).
FuzzyFunction crisp_function(Domain domain, const AlphaGrid& grid,
                             std::function<double(double)> f,
                             std::function<double(double)> df = {});

/// Levelwise sum; requires identical domains and grids.
FuzzyFunction add_functions(const FuzzyFunction& f, const FuzzyFunction& g);

/// Levelwise scalar multiple; negative scalars swap the endpoint evaluators.
FuzzyFunction scale_function(double lambda, const FuzzyFunction& f);

}  // namespace fuzzcalc
