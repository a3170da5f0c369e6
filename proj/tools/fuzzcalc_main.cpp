#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzcalc/commands.hpp"

namespace {

using fuzzcalc::cli::Overrides;
using fuzzcalc::cli::RunReport;

double validity_tol_from_env() {
    if (const char* env = std::getenv("FUZZCALC_TOL")) {
        char* end = nullptr;
        const double tol = std::strtod(env, &end);
        if (end != env && tol > 0.0) return tol;
        std::cerr << "ignoring malformed FUZZCALC_TOL=\"" << env << "\"\n";
    }
    return fuzzcalc::kDefaultValidityTol;
}

int finish(const RunReport& report, bool csv_on_stdout) {
    // Keep the summary off stdout when the CSV went there.
    (csv_on_stdout ? std::cerr : std::cout) << report.summary;
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzy-calculus toolkit: alpha-level arithmetic, Seikkala/gS derivatives, "
                 "and fuzzy decay initial value problems"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string document_path;
    std::string reproduce_id;
    double step = 0.0;
    std::size_t alpha_levels = 0;
    std::vector<double> t_points;

    auto* derive = app.add_subcommand("derive", "classify differentiability over a t-mesh");
    derive->add_option("--config", config_path, "derive config (JSON)")->required();
    derive->add_option("--out", out_path, "CSV output path (stdout when omitted)");
    derive->add_option("--alpha-levels", alpha_levels, "override alpha level count");
    derive->add_option("--t-points", t_points, "override t mesh")->delimiter(',');

    auto* solve = app.add_subcommand("solve", "integrate a fuzzy decay problem");
    solve->add_option("--config", config_path, "solve config (JSON)")->required();
    solve->add_option("--out", out_path, "CSV output path (stdout when omitted)");
    solve->add_option("--step", step, "override integration step");
    solve->add_option("--alpha-levels", alpha_levels, "override alpha level count");

    auto* validate = app.add_subcommand("validate", "check a fuzzy-number document");
    validate->add_option("--config", document_path, "fuzzy-number document (JSON)")->required();
    validate->add_option("--alpha-levels", alpha_levels, "grid size for shorthand forms");

    auto* reproduce = app.add_subcommand("reproduce", "re-emit a worked example");
    reproduce->add_option("id", reproduce_id, "4.1, 4.2, or fig-4.1")->required();
    reproduce->add_option("--out", out_path, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        // CLI11 returns 0 for --help; anything else is a usage error.
        return rc == 0 ? 0 : fuzzcalc::cli::kExitConfigError;
    }

    // Flags are only meaningful on the verb that was actually parsed.
    CLI::App* active = app.get_subcommands().front();
    auto flag_given = [active](const std::string& name) {
        const CLI::Option* opt = active->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };

    Overrides overrides;
    overrides.validity_tol = validity_tol_from_env();
    if (flag_given("--step")) overrides.step = step;
    if (flag_given("--alpha-levels")) overrides.alpha_levels = alpha_levels;
    if (flag_given("--t-points")) overrides.t_points = t_points;

    const bool csv_on_stdout = out_path.empty();
    if (derive->parsed()) {
        return finish(fuzzcalc::cli::cmd_derive(config_path, out_path, overrides), csv_on_stdout);
    }
    if (solve->parsed()) {
        return finish(fuzzcalc::cli::cmd_solve(config_path, out_path, overrides), csv_on_stdout);
    }
    if (validate->parsed()) {
        return finish(fuzzcalc::cli::cmd_validate(document_path, overrides), false);
    }
    return finish(fuzzcalc::cli::cmd_reproduce(reproduce_id, out_path, overrides), csv_on_stdout);
}
