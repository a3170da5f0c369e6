#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzcalc/fuzzy_number.hpp"
#include "fuzzcalc/ivp.hpp"

namespace fuzzcalc {

/// Malformed config / document contents. CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raw endpoint grids read from a fuzzy-number document, prior to validation.
struct FuzzyNumberDocument {
    AlphaGrid grid;
    std::vector<double> lower;
    std::vector<double> upper;
};

/// Accepted forms:
///   {"triangular": [l, m, r]}
///   {"trapezoidal": [l, m1, m2, r]}
///   {"grid": [...], "lower": [...], "upper": [...]}
/// Shorthand forms are sampled onto `default_grid`; the full form carries its
/// own grid. Structural problems raise ConfigError; the returned endpoint
/// grids are NOT validity-checked (callers decide whether to validate or
/// construct a FuzzyNumber).
FuzzyNumberDocument parse_fuzzy_document(const nlohmann::json& j, const AlphaGrid& default_grid);

/// parse_fuzzy_document + FuzzyNumber construction (throws on invalid grids).
FuzzyNumber parse_fuzzy_number(const nlohmann::json& j, const AlphaGrid& default_grid);

nlohmann::json to_json(const FuzzyNumber& a);

/// Solve config: {"problem": "decay", "initial": <fuzzy form>, "t_span": [0, T],
/// "step": 1e-3, "alpha_levels": 11}. step/alpha_levels optional.
struct SolveConfig {
    DecayProblem problem;
    SolverConfig solver;
};

SolveConfig parse_solve_config(const nlohmann::json& j,
                               std::optional<double> step_override = {},
                               std::optional<std::size_t> alpha_levels_override = {});

/// Derive config: {"function": "exp_decay"|"sinusoid", "parameter": <fuzzy form>,
/// "t_points": [...]} or {"t_range": [a, b], "t_count": N}. Defaults: 21 points
/// over [0, 2] for exp_decay and [0, pi] for sinusoid.
struct DeriveConfig {
    std::string function;
    FuzzyNumber parameter;
    AlphaGrid grid;
    std::vector<double> t_points;
};

DeriveConfig parse_derive_config(const nlohmann::json& j,
                                 std::optional<std::size_t> alpha_levels_override = {},
                                 const std::vector<double>* t_points_override = nullptr);

nlohmann::json load_json_file(const std::string& path);

/// Solution CSV: header "t,alpha,y1,y2", rows sorted by (t, alpha), values
/// printed with format_number.
void write_solution_csv(std::ostream& os, const IvpSolution& sol);

/// Rebuilds a solution (provenance Numeric, initial taken from the first
/// time block) from CSV produced by write_solution_csv. Raises ConfigError
/// on malformed input.
IvpSolution parse_solution_csv(std::istream& is);

}  // namespace fuzzcalc
