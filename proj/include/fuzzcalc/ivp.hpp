#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzcalc/fuzzy_number.hpp"

namespace fuzzcalc {

/// dy/dt = -y with fuzzy initial condition, posed on [0, t_end].
struct DecayProblem {
    FuzzyNumber initial;
    double t_end;
    std::string label;
};

/// Requires a valid initial value and t_end >= 0 (t_end = 0 degenerates to
/// the initial condition alone).
DecayProblem make_decay_problem(FuzzyNumber initial, double t_end, std::string label = "decay");

/// Coupled crisp ODE pair for the level endpoints of one alpha level:
/// rhs(t, y1, y2, alpha) -> (dy1, dy2). Must be pure and finite along the
/// solution trajectory.
struct EndpointSystem {
    std::function<std::array<double, 2>(double t, double y1, double y2, double alpha)> rhs;
};

/// Endpoint system of the decay equation: (dy1, dy2) = (-y2, -y1).
EndpointSystem decay_rhs();

enum class Method { RK4 };

struct SolverConfig {
    double step = 1e-3;
    Method method = Method::RK4;
    AlphaGrid grid = AlphaGrid::uniform();
};

enum class Provenance { Analytic, Numeric };

/// Banded solution over times x alpha levels. lower[i][k] / upper[i][k] hold
/// y1(times[i], grid.level(k)) and y2(times[i], grid.level(k)).
struct IvpSolution {
    std::vector<double> times;
    AlphaGrid grid;
    std::vector<std::vector<double>> lower;
    std::vector<std::vector<double>> upper;
    Provenance provenance;
    std::vector<ValidityReport> step_validity;  // one per stored time
    FuzzyNumber initial;                        // problem data, used by validators
    std::string label;

    FuzzyNumber at(std::size_t time_index, double tol = kDefaultValidityTol) const;
};

/// Thrown when integration produces a non-finite state.
struct BlowUpError : std::runtime_error {
    BlowUpError(double t_, double alpha_);
    double t;
    double alpha;
};

/// Closed-form solution
///   y1(t,a) = 0.5 (c1 - c2) e^t + 0.5 (c1 + c2) e^-t
///   y2(t,a) = 0.5 (c1 + c2) e^-t - 0.5 (c1 - c2) e^t
/// evaluated at the requested times on the initial value's grid.
IvpSolution solve_decay_analytic(const DecayProblem& p, std::vector<double> times);

/// Fixed-step classical RK4 on the endpoint system, one independent
/// integration per alpha level, states recorded at every step.
/// Throws BlowUpError on non-finite state.
IvpSolution solve_ivp_numeric(const EndpointSystem& sys, const DecayProblem& p,
                              const SolverConfig& cfg);

enum class SolutionCheck {
    FuzzyValidity,  // endpoint grids form a fuzzy number at each stored time
    Nestedness,     // higher-alpha level sets contained in lower-alpha ones
    Residual,       // endpoint derivatives satisfy the endpoint system
    GsConsistency,  // min/max derivative levels form a fuzzy number equal to (-1)*y
};

std::string_view to_string(SolutionCheck c);

struct SolutionViolation {
    SolutionCheck check;
    double t;
    double alpha;
    double magnitude;
    /// Underlying endpoint-grid condition, set for FuzzyValidity and
    /// GsConsistency violations that come from a validity check.
    std::optional<Condition> condition;
};

struct SolutionReport {
    std::vector<SolutionViolation> violations;
    double max_residual = 0.0;      // worst |y_i' - rhs_i| seen
    double max_gs_deviation = 0.0;  // worst |gs level - (-1)*y level| seen

    bool valid() const { return violations.empty(); }
    bool check_passed(SolutionCheck c) const;
};

struct ValidationOptions {
    double validity_tol = kDefaultValidityTol;
    /// Residual/consistency tolerance for analytic solutions (exact formulas).
    double analytic_tol = 1e-12;
    /// Relative factor for numeric trajectories; scaled by max(1, |state|).
    double numeric_tol = 1e-4;
};

/// Runs the four solution checks against the stored trajectory. Derivatives
/// come from the closed form for analytic solutions and from central finite
/// differences over stored steps (second-order one-sided at the ends) for
/// numeric ones. Residual/gS checks need at least three stored times on the
/// numeric path and are skipped below that.
SolutionReport validate_solution(const IvpSolution& sol, const EndpointSystem& sys,
                                 const ValidationOptions& opts = {});

/// Named worked problems: "4.1" -> initial (195, 200, 205), "4.2" -> (90, 100, 120),
/// both over t in [0, 1].
DecayProblem example_problem(const std::string& name, const AlphaGrid& grid);

struct ExampleRun {
    IvpSolution analytic;
    IvpSolution numeric;
    double max_deviation;  // max |analytic - numeric| over all (t, alpha)
};

/// Solves a named example both ways on the same time grid, cross-checks the
/// two paths, and returns both solutions with the deviation diagnostic.
ExampleRun solve_example(const std::string& name, const SolverConfig& cfg);

/// Max absolute difference between two solutions on identical time/alpha grids.
double max_abs_deviation(const IvpSolution& a, const IvpSolution& b);

}  // namespace fuzzcalc
