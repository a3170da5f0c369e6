#include "fuzzcalc/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "fuzzcalc/derivative.hpp"
#include "fuzzcalc/format.hpp"
#include "fuzzcalc/fuzzy_function.hpp"
#include "fuzzcalc/ivp.hpp"
#include "fuzzcalc/serialization.hpp"

namespace fuzzcalc::cli {

namespace {

std::vector<double> linspace01(std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = static_cast<double>(i) / static_cast<double>(count - 1);
    }
    out.back() = 1.0;
    return out;
}

RunReport config_failure(const std::string& cmd, const std::string& what) {
    RunReport r;
    r.exit_code = kExitConfigError;
    r.summary = "config error: " + what;
    r.sidecar = {{"command", cmd}, {"exit_code", kExitConfigError}, {"error", what}};
    return r;
}

RunReport blowup_failure(const std::string& cmd, const BlowUpError& e) {
    RunReport r;
    r.exit_code = kExitBlowUp;
    r.summary = std::string("numeric blow-up: ") + e.what();
    r.sidecar = {{"command", cmd},
                 {"exit_code", kExitBlowUp},
                 {"error", e.what()},
                 {"t", e.t},
                 {"alpha", e.alpha}};
    return r;
}

/// CSV to out_path (or stdout when empty); sidecar next to the CSV.
void emit(const std::string& out_path, const std::string& csv, RunReport& report) {
    report.sidecar["exit_code"] = report.exit_code;
    if (out_path.empty()) {
        std::cout << csv;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ConfigError("cannot write output file: " + out_path);
    out << csv;
    std::ofstream side(out_path + ".report.json");
    if (side) side << report.sidecar.dump(2) << '\n';
}

nlohmann::json validation_json(const SolutionReport& rep) {
    nlohmann::json j{{"valid", rep.valid()},
                     {"violation_count", rep.violations.size()},
                     {"max_residual", rep.max_residual},
                     {"max_gs_deviation", rep.max_gs_deviation}};
    if (!rep.violations.empty()) {
        const SolutionViolation& v = rep.violations.front();
        j["first_violation"] = {{"check", std::string(to_string(v.check))},
                                {"t", v.t},
                                {"alpha", v.alpha},
                                {"magnitude", v.magnitude}};
    }
    return j;
}

void append_validation_summary(std::ostringstream& os, const SolutionReport& rep) {
    if (rep.valid()) {
        os << "validation: all checks passed (max residual " << format_number(rep.max_residual)
           << ", max gS deviation " << format_number(rep.max_gs_deviation) << ")\n";
    } else {
        const SolutionViolation& v = rep.violations.front();
        os << "validation: FAILED with " << rep.violations.size() << " violation(s); first: "
           << to_string(v.check) << " at t=" << format_number(v.t)
           << ", alpha=" << format_number(v.alpha) << ", magnitude=" << format_number(v.magnitude)
           << "\n";
    }
}

}  // namespace

RunReport cmd_derive(const std::string& config_path, const std::string& out_path,
                     const Overrides& overrides) {
    try {
        const nlohmann::json j = load_json_file(config_path);
        std::vector<double> t_override;
        const std::vector<double>* t_ptr = nullptr;
        if (overrides.t_points) {
            t_override = *overrides.t_points;
            t_ptr = &t_override;
        }
        DeriveConfig cfg = parse_derive_config(j, overrides.alpha_levels, t_ptr);

        FuzzyFunction f = [&] {
            try {
                if (cfg.function == "exp_decay") return builtin_exp_decay(cfg.parameter);
                if (cfg.function == "sinusoid") return builtin_sinusoid(cfg.parameter);
                return constant_function(cfg.parameter);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("invalid \"parameter\": ") + e.what());
            }
        }();

        std::ostringstream csv;
        csv << "t,alpha,d_lower,d_upper,kind\n";
        std::map<std::string, std::size_t> kind_counts;
        bool all_usable = true;
        for (double t : cfg.t_points) {
            if (!f.domain().contains(t)) {
                throw ConfigError("t=" + format_number(t) + " outside the " + cfg.function +
                                  " domain");
            }
            const DerivativeKind kind = classify(f, t, overrides.validity_tol);
            const DerivativeResult gs = gs_derivative(f, t, overrides.validity_tol);
            ++kind_counts[std::string(to_string(kind))];
            if (!gs.value) all_usable = false;
            for (std::size_t k = 0; k < cfg.grid.size(); ++k) {
                const double lo = gs.value ? gs.value->lower(k)
                                           : std::numeric_limits<double>::quiet_NaN();
                const double hi = gs.value ? gs.value->upper(k)
                                           : std::numeric_limits<double>::quiet_NaN();
                csv << format_number(t) << ',' << format_number(cfg.grid.level(k)) << ','
                    << format_number(lo) << ',' << format_number(hi) << ',' << to_string(kind)
                    << '\n';
            }
        }

        std::ostringstream summary;
        summary << "derive " << cfg.function << " over " << cfg.t_points.size()
                << " t point(s), " << cfg.grid.size() << " alpha level(s)\n";
        for (const auto& [kind, count] : kind_counts) {
            summary << "  " << kind << ": " << count << "\n";
        }

        RunReport report;
        report.exit_code = all_usable ? kExitOk : kExitValidityFailure;
        report.summary = summary.str();
        report.sidecar = {{"command", "derive"},
                          {"function", cfg.function},
                          {"t_points", cfg.t_points.size()},
                          {"alpha_levels", cfg.grid.size()},
                          {"kind_counts", kind_counts}};
        emit(out_path, csv.str(), report);
        return report;
    } catch (const ConfigError& e) {
        return config_failure("derive", e.what());
    } catch (const std::invalid_argument& e) {
        return config_failure("derive", e.what());
    } catch (const std::domain_error& e) {
        return config_failure("derive", e.what());
    }
}

RunReport cmd_solve(const std::string& config_path, const std::string& out_path,
                    const Overrides& overrides) {
    try {
        const nlohmann::json j = load_json_file(config_path);
        SolveConfig cfg = parse_solve_config(j, overrides.step, overrides.alpha_levels);
        const EndpointSystem sys = decay_rhs();

        IvpSolution numeric = solve_ivp_numeric(sys, cfg.problem, cfg.solver);
        IvpSolution analytic = solve_decay_analytic(cfg.problem, numeric.times);
        const double deviation = max_abs_deviation(analytic, numeric);

        ValidationOptions vopts;
        vopts.validity_tol = overrides.validity_tol;
        const SolutionReport validation = validate_solution(numeric, sys, vopts);

        // RK4 global error is O(h^4); scale the acceptance bound with the
        // step so coarse runs are judged fairly, floored at the desk-scale
        // tolerance.
        double scale = 1.0;
        for (std::size_t k = 0; k < cfg.solver.grid.size(); ++k) {
            scale = std::max({scale, std::abs(cfg.problem.initial.lower(k)),
                              std::abs(cfg.problem.initial.upper(k))});
        }
        const double deviation_tol =
            std::max(1e-6, 10.0 * scale * std::pow(cfg.solver.step, 4));

        std::ostringstream csv;
        write_solution_csv(csv, numeric);

        std::ostringstream summary;
        summary << "solve " << cfg.problem.label << ": " << numeric.times.size()
                << " time(s) x " << cfg.solver.grid.size() << " level(s), step "
                << format_number(cfg.solver.step) << "\n";
        summary << "analytic-vs-numeric max deviation: " << format_number(deviation)
                << " (tolerance " << format_number(deviation_tol) << ")\n";
        append_validation_summary(summary, validation);

        RunReport report;
        report.exit_code =
            (validation.valid() && deviation <= deviation_tol) ? kExitOk : kExitValidityFailure;
        report.summary = summary.str();
        report.sidecar = {{"command", "solve"},
                          {"label", cfg.problem.label},
                          {"times", numeric.times.size()},
                          {"alpha_levels", cfg.solver.grid.size()},
                          {"step", cfg.solver.step},
                          {"max_deviation", deviation},
                          {"deviation_tol", deviation_tol},
                          {"validation", validation_json(validation)}};
        emit(out_path, csv.str(), report);
        return report;
    } catch (const BlowUpError& e) {
        return blowup_failure("solve", e);
    } catch (const ConfigError& e) {
        return config_failure("solve", e.what());
    } catch (const std::invalid_argument& e) {
        return config_failure("solve", e.what());
    }
}

RunReport cmd_validate(const std::string& document_path, const Overrides& overrides) {
    try {
        const nlohmann::json j = load_json_file(document_path);
        const AlphaGrid default_grid = AlphaGrid::uniform(overrides.alpha_levels.value_or(11));
        const FuzzyNumberDocument doc = parse_fuzzy_document(j, default_grid);
        const ValidityReport rep = validate(doc.lower, doc.upper, doc.grid,
                                            overrides.validity_tol);

        std::ostringstream summary;
        nlohmann::json violations = nlohmann::json::array();
        if (rep.valid()) {
            summary << "valid fuzzy number (" << doc.grid.size() << " levels)\n";
        } else {
            summary << "INVALID fuzzy number: " << rep.violations.size() << " violation(s)\n";
            for (const Violation& v : rep.violations) {
                summary << "  " << to_string(v.condition) << " at alpha="
                        << format_number(v.alpha) << ", magnitude=" << format_number(v.magnitude)
                        << "\n";
                violations.push_back({{"condition", std::string(to_string(v.condition))},
                                      {"alpha", v.alpha},
                                      {"magnitude", v.magnitude}});
            }
        }

        RunReport report;
        report.exit_code = rep.valid() ? kExitOk : kExitValidityFailure;
        report.summary = summary.str();
        report.sidecar = {{"command", "validate"},
                          {"input", document_path},
                          {"exit_code", report.exit_code},
                          {"valid", rep.valid()},
                          {"violations", violations}};
        return report;
    } catch (const ConfigError& e) {
        return config_failure("validate", e.what());
    } catch (const std::invalid_argument& e) {
        return config_failure("validate", e.what());
    }
}

RunReport cmd_reproduce(const std::string& id, const std::string& out_path,
                        const Overrides& overrides) {
    try {
        const AlphaGrid grid = AlphaGrid::uniform(11);
        const std::vector<double> times = linspace01(101);

        if (id == "fig-4.1") {
            const DecayProblem p = example_problem("4.1", grid);
            const IvpSolution sol = solve_decay_analytic(p, times);
            std::ostringstream csv;
            csv << "t,y1,y2\n";
            for (std::size_t i = 0; i < sol.times.size(); ++i) {
                // alpha = 0.5 sits on the 11-level grid exactly.
                const FuzzyNumber y = sol.at(i);
                csv << format_number(sol.times[i]) << ',' << format_number(y.lower_at(0.5))
                    << ',' << format_number(y.upper_at(0.5)) << '\n';
            }
            RunReport report;
            report.exit_code = kExitOk;
            std::ostringstream summary;
            summary << "fig-4.1: two curves at alpha=0.5, 101 points over [0, 1]\n";
            report.summary = summary.str();
            report.sidecar = {{"command", "reproduce"},
                              {"id", id},
                              {"points", times.size()},
                              {"alpha", 0.5}};
            emit(out_path, csv.str(), report);
            return report;
        }
        if (id == "4.1" || id == "4.2") {
            const DecayProblem p = example_problem(id, grid);
            const EndpointSystem sys = decay_rhs();
            const IvpSolution sol = solve_decay_analytic(p, times);
            ValidationOptions vopts;
            vopts.validity_tol = overrides.validity_tol;
            const SolutionReport validation = validate_solution(sol, sys, vopts);

            std::ostringstream csv;
            write_solution_csv(csv, sol);

            std::ostringstream summary;
            summary << "reproduce " << id << ": band over " << times.size() << " times x "
                    << grid.size() << " levels\n";
            append_validation_summary(summary, validation);

            RunReport report;
            report.exit_code = validation.valid() ? kExitOk : kExitValidityFailure;
            report.summary = summary.str();
            report.sidecar = {{"command", "reproduce"},
                              {"id", id},
                              {"times", times.size()},
                              {"alpha_levels", grid.size()},
                              {"validation", validation_json(validation)}};
            emit(out_path, csv.str(), report);
            return report;
        }
        throw ConfigError("unknown reproduce id \"" + id + "\" (expected 4.1, 4.2, or fig-4.1)");
    } catch (const ConfigError& e) {
        return config_failure("reproduce", e.what());
    } catch (const std::invalid_argument& e) {
        return config_failure("reproduce", e.what());
    }
}

}  // namespace fuzzcalc::cli
