#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzcalc/validity.hpp"

namespace fuzzcalc::cli {

/// Process exit codes shared by all verbs.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidityFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitBlowUp = 3;

struct Overrides {
    std::optional<double> step;
    std::optional<std::size_t> alpha_levels;
    std::optional<std::vector<double>> t_points;
    double validity_tol = kDefaultValidityTol;
};

struct RunReport {
    int exit_code = kExitOk;
    std::string summary;       // human-readable, multi-line
    nlohmann::json sidecar;    // machine-readable mirror of the summary
};

/// Classifies a built-in family's differentiability over a t-mesh and emits
/// CSV rows "t,alpha,d_lower,d_upper,kind". Empty out_path writes to stdout;
/// otherwise the CSV goes to out_path and the sidecar to out_path + ".report.json".
RunReport cmd_derive(const std::string& config_path, const std::string& out_path,
                     const Overrides& overrides);

/// Solves a decay problem numerically, cross-checks against the closed form,
/// validates the trajectory, and emits the solution CSV.
RunReport cmd_solve(const std::string& config_path, const std::string& out_path,
                    const Overrides& overrides);

/// Validates a fuzzy-number document; violations are listed in the summary.
RunReport cmd_validate(const std::string& document_path, const Overrides& overrides);

/// Re-emits a worked example: "4.1" / "4.2" produce full band CSVs over
/// t in [0, 1] at 101 points; "fig-4.1" produces the two alpha = 0.5 curves
/// as "t,y1,y2" rows at 101 points.
RunReport cmd_reproduce(const std::string& id, const std::string& out_path,
                        const Overrides& overrides);

}  // namespace fuzzcalc::cli
