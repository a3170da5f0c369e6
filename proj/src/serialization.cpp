#include "fuzzcalc/serialization.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "fuzzcalc/format.hpp"

namespace fuzzcalc {

namespace {

std::vector<double> number_array(const nlohmann::json& j, const std::string& key,
                                 std::size_t expected = 0) {
    if (!j.is_array()) throw ConfigError("\"" + key + "\" must be an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw ConfigError("\"" + key + "\" must contain only numbers");
        out.push_back(v.get<double>());
    }
    if (expected != 0 && out.size() != expected) {
        std::ostringstream msg;
        msg << "\"" << key << "\" must have exactly " << expected << " entries";
        throw ConfigError(msg.str());
    }
    return out;
}

std::vector<double> sampled_triangular(double l, double m, double r, const AlphaGrid& grid,
                                       bool lower) {
    std::vector<double> out(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double a = grid.level(k);
        out[k] = lower ? l + a * (m - l) : r - a * (r - m);
    }
    return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double f = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
        out[i] = lo + f * (hi - lo);
    }
    if (count > 1) out.back() = hi;
    return out;
}

AlphaGrid grid_or_config_error(std::vector<double> levels) {
    try {
        return AlphaGrid(std::move(levels));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad alpha grid: ") + e.what());
    }
}

}  // namespace

FuzzyNumberDocument parse_fuzzy_document(const nlohmann::json& j, const AlphaGrid& default_grid) {
    if (!j.is_object()) throw ConfigError("fuzzy number must be a JSON object");
    if (j.contains("triangular")) {
        const auto p = number_array(j["triangular"], "triangular", 3);
        return {default_grid, sampled_triangular(p[0], p[1], p[2], default_grid, true),
                sampled_triangular(p[0], p[1], p[2], default_grid, false)};
    }
    if (j.contains("trapezoidal")) {
        const auto p = number_array(j["trapezoidal"], "trapezoidal", 4);
        std::vector<double> lower(default_grid.size());
        std::vector<double> upper(default_grid.size());
        for (std::size_t k = 0; k < default_grid.size(); ++k) {
            const double a = default_grid.level(k);
            lower[k] = p[0] + a * (p[1] - p[0]);
            upper[k] = p[3] - a * (p[3] - p[2]);
        }
        return {default_grid, std::move(lower), std::move(upper)};
    }
    if (j.contains("grid") && j.contains("lower") && j.contains("upper")) {
        AlphaGrid grid = grid_or_config_error(number_array(j["grid"], "grid"));
        auto lower = number_array(j["lower"], "lower", grid.size());
        auto upper = number_array(j["upper"], "upper", grid.size());
        return {std::move(grid), std::move(lower), std::move(upper)};
    }
    throw ConfigError(
        "fuzzy number needs \"triangular\", \"trapezoidal\", or \"grid\"/\"lower\"/\"upper\"");
}

FuzzyNumber parse_fuzzy_number(const nlohmann::json& j, const AlphaGrid& default_grid) {
    FuzzyNumberDocument doc = parse_fuzzy_document(j, default_grid);
    return FuzzyNumber(std::move(doc.grid), std::move(doc.lower), std::move(doc.upper));
}

nlohmann::json to_json(const FuzzyNumber& a) {
    return nlohmann::json{
        {"grid", a.grid().levels()}, {"lower", a.lower_values()}, {"upper", a.upper_values()}};
}

SolveConfig parse_solve_config(const nlohmann::json& j, std::optional<double> step_override,
                               std::optional<std::size_t> alpha_levels_override) {
    if (!j.is_object()) throw ConfigError("solve config must be a JSON object");
    if (!j.contains("problem") || j["problem"] != "decay") {
        throw ConfigError("solve config needs \"problem\": \"decay\"");
    }
    if (!j.contains("initial")) throw ConfigError("solve config needs \"initial\"");
    if (!j.contains("t_span")) throw ConfigError("solve config needs \"t_span\"");

    std::size_t alpha_levels = 11;
    if (alpha_levels_override) {
        alpha_levels = *alpha_levels_override;
    } else if (j.contains("alpha_levels")) {
        if (!j["alpha_levels"].is_number_integer() || j["alpha_levels"].get<long long>() < 2) {
            throw ConfigError("\"alpha_levels\" must be an integer >= 2");
        }
        alpha_levels = j["alpha_levels"].get<std::size_t>();
    }
    if (alpha_levels < 2) throw ConfigError("\"alpha_levels\" must be an integer >= 2");

    SolverConfig solver;
    solver.grid = AlphaGrid::uniform(alpha_levels);
    if (step_override) {
        solver.step = *step_override;
    } else if (j.contains("step")) {
        if (!j["step"].is_number()) throw ConfigError("\"step\" must be a number");
        solver.step = j["step"].get<double>();
    }
    if (!(solver.step > 0.0) || !std::isfinite(solver.step)) {
        throw ConfigError("\"step\" must be positive and finite");
    }

    const auto span = number_array(j["t_span"], "t_span", 2);
    if (span[0] != 0.0) throw ConfigError("\"t_span\" must start at 0");
    if (!(span[1] >= 0.0) || !std::isfinite(span[1])) {
        throw ConfigError("\"t_span\" end must be finite and >= 0");
    }

    FuzzyNumber initial = [&] {
        try {
            return parse_fuzzy_number(j["initial"], solver.grid);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("invalid \"initial\": ") + e.what());
        }
    }();
    // A full-form initial carries its own grid; the solver follows it.
    if (initial.grid() != solver.grid) solver.grid = initial.grid();

    DecayProblem problem = make_decay_problem(std::move(initial), span[1],
                                              j.value("label", std::string("decay")));
    return {std::move(problem), std::move(solver)};
}

DeriveConfig parse_derive_config(const nlohmann::json& j,
                                 std::optional<std::size_t> alpha_levels_override,
                                 const std::vector<double>* t_points_override) {
    if (!j.is_object()) throw ConfigError("derive config must be a JSON object");
    if (!j.contains("function") || !j["function"].is_string()) {
        throw ConfigError("derive config needs \"function\"");
    }
    const std::string function = j["function"].get<std::string>();
    if (function != "exp_decay" && function != "sinusoid" && function != "constant") {
        throw ConfigError("unknown function \"" + function +
                          "\" (expected exp_decay, sinusoid, or constant)");
    }
    if (!j.contains("parameter")) throw ConfigError("derive config needs \"parameter\"");

    std::size_t alpha_levels = 11;
    if (alpha_levels_override) {
        alpha_levels = *alpha_levels_override;
    } else if (j.contains("alpha_levels")) {
        if (!j["alpha_levels"].is_number_integer() || j["alpha_levels"].get<long long>() < 2) {
            throw ConfigError("\"alpha_levels\" must be an integer >= 2");
        }
        alpha_levels = j["alpha_levels"].get<std::size_t>();
    }
    if (alpha_levels < 2) throw ConfigError("\"alpha_levels\" must be an integer >= 2");
    AlphaGrid grid = AlphaGrid::uniform(alpha_levels);

    FuzzyNumber parameter = [&] {
        try {
            return parse_fuzzy_number(j["parameter"], grid);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("invalid \"parameter\": ") + e.what());
        }
    }();
    if (parameter.grid() != grid) grid = parameter.grid();

    std::vector<double> t_points;
    if (t_points_override) {
        t_points = *t_points_override;
    } else if (j.contains("t_points")) {
        t_points = number_array(j["t_points"], "t_points");
    } else {
        const double default_hi = function == "sinusoid" ? std::numbers::pi : 2.0;
        double lo = 0.0;
        double hi = default_hi;
        std::size_t count = 21;
        if (j.contains("t_range")) {
            const auto range = number_array(j["t_range"], "t_range", 2);
            lo = range[0];
            hi = range[1];
            if (!(lo < hi)) throw ConfigError("\"t_range\" must be increasing");
        }
        if (j.contains("t_count")) {
            if (!j["t_count"].is_number_integer() || j["t_count"].get<long long>() < 1) {
                throw ConfigError("\"t_count\" must be a positive integer");
            }
            count = j["t_count"].get<std::size_t>();
        }
        t_points = linspace(lo, hi, count);
    }
    if (t_points.empty()) throw ConfigError("derive needs at least one t point");

    return {function, std::move(parameter), std::move(grid), std::move(t_points)};
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file: " + path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ConfigError("malformed JSON in " + path);
    return j;
}

void write_solution_csv(std::ostream& os, const IvpSolution& sol) {
    os << "t,alpha,y1,y2\n";
    for (std::size_t i = 0; i < sol.times.size(); ++i) {
        for (std::size_t k = 0; k < sol.grid.size(); ++k) {
            os << format_number(sol.times[i]) << ',' << format_number(sol.grid.level(k)) << ','
               << format_number(sol.lower[i][k]) << ',' << format_number(sol.upper[i][k]) << '\n';
        }
    }
}

IvpSolution parse_solution_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "t,alpha,y1,y2") {
        throw ConfigError("solution CSV must start with header t,alpha,y1,y2");
    }
    std::vector<double> times;
    std::vector<double> alphas;
    std::vector<std::vector<double>> lower;
    std::vector<std::vector<double>> upper;
    bool first_block = true;
    std::size_t col = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        double t, alpha, y1, y2;
        char c1, c2, c3;
        if (!(row >> t >> c1 >> alpha >> c2 >> y1 >> c3 >> y2) || c1 != ',' || c2 != ',' ||
            c3 != ',') {
            throw ConfigError("malformed solution CSV row: " + line);
        }
        if (times.empty() || t != times.back()) {
            if (!times.empty() && col != alphas.size()) {
                throw ConfigError("solution CSV has ragged alpha blocks");
            }
            first_block = times.empty();
            times.push_back(t);
            lower.emplace_back();
            upper.emplace_back();
            col = 0;
        }
        if (first_block) {
            alphas.push_back(alpha);
        } else {
            if (col >= alphas.size() || alpha != alphas[col]) {
                throw ConfigError("solution CSV has inconsistent alpha levels");
            }
        }
        lower.back().push_back(y1);
        upper.back().push_back(y2);
        ++col;
    }
    if (times.empty()) throw ConfigError("solution CSV has no data rows");
    if (col != alphas.size()) throw ConfigError("solution CSV has ragged alpha blocks");

    AlphaGrid grid = grid_or_config_error(std::move(alphas));
    FuzzyNumber initial = [&] {
        try {
            return FuzzyNumber(grid, lower.front(), upper.front());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("first CSV block is not a fuzzy number: ") + e.what());
        }
    }();
    IvpSolution sol{std::move(times), grid,      std::move(lower), std::move(upper),
                    Provenance::Numeric, {},     std::move(initial),   "parsed"};
    for (std::size_t i = 0; i < sol.times.size(); ++i) {
        sol.step_validity.push_back(validate(sol.lower[i], sol.upper[i], sol.grid));
    }
    return sol;
}

}  // namespace fuzzcalc
