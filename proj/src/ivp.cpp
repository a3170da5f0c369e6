#include "fuzzcalc/ivp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fuzzcalc {

namespace {

std::string blowup_message(double t, double alpha) {
    std::ostringstream msg;
    msg << "integration produced non-finite state at t=" << t << ", alpha=" << alpha;
    return msg.str();
}

/// Times 0, h, 2h, ..., t_end; the final point lands exactly on t_end even
/// when h does not divide the span.
std::vector<double> uniform_times(double t_end, double h) {
    std::vector<double> times{0.0};
    if (t_end <= 0.0) return times;
    const double ratio = t_end / h;
    auto n = static_cast<long long>(std::llround(ratio));
    const bool divides = n >= 1 && std::abs(static_cast<double>(n) * h - t_end) <=
                                       1e-9 * std::max(1.0, std::abs(t_end));
    if (!divides) n = static_cast<long long>(std::floor(ratio));
    for (long long k = 1; k <= n; ++k) times.push_back(static_cast<double>(k) * h);
    if (divides) {
        times.back() = t_end;
    } else if (times.back() < t_end) {
        times.push_back(t_end);
    }
    return times;
}

struct ClosedFormDecay {
    // y1 = P + Q, y2 = Q - P with P = 0.5 (c1 - c2) e^t, Q = 0.5 (c1 + c2) e^-t.
    double half_diff;  // 0.5 (c1 - c2)
    double half_sum;   // 0.5 (c1 + c2)

    ClosedFormDecay(double c1, double c2) : half_diff(0.5 * (c1 - c2)), half_sum(0.5 * (c1 + c2)) {}

    std::array<double, 2> value(double t) const {
        const double p = half_diff * std::exp(t);
        const double q = half_sum * std::exp(-t);
        return {p + q, q - p};
    }
    std::array<double, 2> derivative(double t) const {
        const double p = half_diff * std::exp(t);
        const double q = half_sum * std::exp(-t);
        return {p - q, -q - p};
    }
};

/// Three-point first derivative on a possibly nonuniform time grid.
double three_point_derivative(const std::vector<double>& t, const std::vector<double>& y,
                              std::size_t i) {
    const std::size_t n = t.size();
    if (i == 0) {
        const double h1 = t[1] - t[0];
        const double h2 = t[2] - t[1];
        return -(2.0 * h1 + h2) / (h1 * (h1 + h2)) * y[0] + (h1 + h2) / (h1 * h2) * y[1] -
               h1 / (h2 * (h1 + h2)) * y[2];
    }
    if (i + 1 == n) {
        const double h1 = t[n - 2] - t[n - 3];
        const double h2 = t[n - 1] - t[n - 2];
        return h2 / (h1 * (h1 + h2)) * y[n - 3] - (h1 + h2) / (h1 * h2) * y[n - 2] +
               (h1 + 2.0 * h2) / (h2 * (h1 + h2)) * y[n - 1];
    }
    const double h1 = t[i] - t[i - 1];
    const double h2 = t[i + 1] - t[i];
    return -h2 / (h1 * (h1 + h2)) * y[i - 1] - (h1 - h2) / (h1 * h2) * y[i] +
           h1 / (h2 * (h1 + h2)) * y[i + 1];
}

}  // namespace

BlowUpError::BlowUpError(double t_, double alpha_)
    : std::runtime_error(blowup_message(t_, alpha_)), t(t_), alpha(alpha_) {}

DecayProblem make_decay_problem(FuzzyNumber initial, double t_end, std::string label) {
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
        throw std::invalid_argument("decay problem needs t_end >= 0");
    }
    return {std::move(initial), t_end, std::move(label)};
}

EndpointSystem decay_rhs() {
    return {[](double, double y1, double y2, double) {
        return std::array<double, 2>{-y2, -y1};
    }};
}

FuzzyNumber IvpSolution::at(std::size_t time_index, double tol) const {
    return FuzzyNumber(grid, lower[time_index], upper[time_index], tol);
}

std::string_view to_string(SolutionCheck c) {
    switch (c) {
        case SolutionCheck::FuzzyValidity: return "fuzzy_validity";
        case SolutionCheck::Nestedness: return "nestedness";
        case SolutionCheck::Residual: return "residual";
        case SolutionCheck::GsConsistency: return "gs_consistency";
    }
    return "unknown";
}

bool SolutionReport::check_passed(SolutionCheck c) const {
    return std::none_of(violations.begin(), violations.end(),
                        [c](const SolutionViolation& v) { return v.check == c; });
}

IvpSolution solve_decay_analytic(const DecayProblem& p, std::vector<double> times) {
    const AlphaGrid& grid = p.initial.grid();
    const std::size_t nk = grid.size();
    IvpSolution sol{std::move(times), grid,          {}, {}, Provenance::Analytic,
                    {},               p.initial,     p.label};
    sol.lower.assign(sol.times.size(), std::vector<double>(nk));
    sol.upper.assign(sol.times.size(), std::vector<double>(nk));
    for (std::size_t i = 0; i < sol.times.size(); ++i) {
        for (std::size_t k = 0; k < nk; ++k) {
            const ClosedFormDecay cf(p.initial.lower(k), p.initial.upper(k));
            const auto y = cf.value(sol.times[i]);
            sol.lower[i][k] = y[0];
            sol.upper[i][k] = y[1];
        }
        sol.step_validity.push_back(validate(sol.lower[i], sol.upper[i], grid));
    }
    return sol;
}

IvpSolution solve_ivp_numeric(const EndpointSystem& sys, const DecayProblem& p,
                              const SolverConfig& cfg) {
    if (!(cfg.step > 0.0) || !std::isfinite(cfg.step)) {
        throw std::invalid_argument("solver step must be positive and finite");
    }
    const AlphaGrid& grid = cfg.grid;
    const std::size_t nk = grid.size();
    // The problem's initial value must live on the solver grid.
    if (p.initial.grid() != grid) {
        throw std::invalid_argument("solver grid does not match the initial value's grid");
    }
    IvpSolution sol{uniform_times(p.t_end, cfg.step),
                    grid,
                    {},
                    {},
                    Provenance::Numeric,
                    {},
                    p.initial,
                    p.label};
    const std::size_t nt = sol.times.size();
    sol.lower.assign(nt, std::vector<double>(nk));
    sol.upper.assign(nt, std::vector<double>(nk));

    // Integrations are independent per level; merged by level index.
    for (std::size_t k = 0; k < nk; ++k) {
        const double alpha = grid.level(k);
        double y1 = p.initial.lower(k);
        double y2 = p.initial.upper(k);
        sol.lower[0][k] = y1;
        sol.upper[0][k] = y2;
        for (std::size_t i = 0; i + 1 < nt; ++i) {
            const double t = sol.times[i];
            const double dt = sol.times[i + 1] - t;
            const auto k1 = sys.rhs(t, y1, y2, alpha);
            const auto k2 = sys.rhs(t + 0.5 * dt, y1 + 0.5 * dt * k1[0], y2 + 0.5 * dt * k1[1],
                                    alpha);
            const auto k3 = sys.rhs(t + 0.5 * dt, y1 + 0.5 * dt * k2[0], y2 + 0.5 * dt * k2[1],
                                    alpha);
            const auto k4 = sys.rhs(t + dt, y1 + dt * k3[0], y2 + dt * k3[1], alpha);
            y1 += dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
            y2 += dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
            if (!std::isfinite(y1) || !std::isfinite(y2)) {
                throw BlowUpError(sol.times[i + 1], alpha);
            }
            sol.lower[i + 1][k] = y1;
            sol.upper[i + 1][k] = y2;
        }
    }
    for (std::size_t i = 0; i < nt; ++i) {
        sol.step_validity.push_back(validate(sol.lower[i], sol.upper[i], grid));
    }
    return sol;
}

SolutionReport validate_solution(const IvpSolution& sol, const EndpointSystem& sys,
                                 const ValidationOptions& opts) {
    if (sol.times.empty()) {
        throw std::invalid_argument("cannot validate an empty solution");
    }
    SolutionReport report;
    const AlphaGrid& grid = sol.grid;
    const std::size_t nt = sol.times.size();
    const std::size_t nk = grid.size();

    double scale = 1.0;
    for (std::size_t i = 0; i < nt; ++i) {
        for (std::size_t k = 0; k < nk; ++k) {
            scale = std::max({scale, std::abs(sol.lower[i][k]), std::abs(sol.upper[i][k])});
        }
    }

    // (a) fuzzy-number validity at each stored time.
    for (std::size_t i = 0; i < nt; ++i) {
        const ValidityReport rep = validate(sol.lower[i], sol.upper[i], grid, opts.validity_tol);
        for (const Violation& v : rep.violations) {
            report.violations.push_back(
                {SolutionCheck::FuzzyValidity, sol.times[i], v.alpha, v.magnitude, v.condition});
        }
    }

    // (b) nestedness: each higher-alpha level set inside its neighbor below.
    for (std::size_t i = 0; i < nt; ++i) {
        for (std::size_t k = 0; k + 1 < nk; ++k) {
            const double left = sol.lower[i][k] - sol.lower[i][k + 1];
            const double right = sol.upper[i][k + 1] - sol.upper[i][k];
            const double poke = std::max(left, right);
            if (poke > opts.validity_tol) {
                report.violations.push_back(
                    {SolutionCheck::Nestedness, sol.times[i], grid.level(k + 1), poke, {}});
            }
        }
    }

    // Endpoint-derivative estimates for (c) and (d).
    const bool analytic = sol.provenance == Provenance::Analytic;
    if (!analytic && nt < 3) return report;  // no trajectory to difference
    const double tol_cd = analytic ? opts.analytic_tol : opts.numeric_tol * scale;

    std::vector<double> d1(nk);
    std::vector<double> d2(nk);
    std::vector<double> column(nt);
    for (std::size_t i = 0; i < nt; ++i) {
        const double t = sol.times[i];
        for (std::size_t k = 0; k < nk; ++k) {
            if (analytic) {
                const ClosedFormDecay cf(sol.initial.lower(k), sol.initial.upper(k));
                const auto d = cf.derivative(t);
                d1[k] = d[0];
                d2[k] = d[1];
            } else {
                for (std::size_t j = 0; j < nt; ++j) column[j] = sol.lower[j][k];
                d1[k] = three_point_derivative(sol.times, column, i);
                for (std::size_t j = 0; j < nt; ++j) column[j] = sol.upper[j][k];
                d2[k] = three_point_derivative(sol.times, column, i);
            }
        }

        // (c) residual against the endpoint system.
        for (std::size_t k = 0; k < nk; ++k) {
            const double alpha = grid.level(k);
            const auto rhs = sys.rhs(t, sol.lower[i][k], sol.upper[i][k], alpha);
            const double r = std::max(std::abs(d1[k] - rhs[0]), std::abs(d2[k] - rhs[1]));
            report.max_residual = std::max(report.max_residual, r);
            if (r > tol_cd) {
                report.violations.push_back({SolutionCheck::Residual, t, alpha, r, {}});
            }
        }

        // (d) min/max derivative levels form a fuzzy number equal to (-1) * y(t).
        std::vector<double> glo(nk);
        std::vector<double> ghi(nk);
        for (std::size_t k = 0; k < nk; ++k) {
            glo[k] = std::min(d1[k], d2[k]);
            ghi[k] = std::max(d1[k], d2[k]);
        }
        const ValidityReport gs_rep = validate(glo, ghi, grid, opts.validity_tol);
        for (const Violation& v : gs_rep.violations) {
            report.violations.push_back(
                {SolutionCheck::GsConsistency, t, v.alpha, v.magnitude, v.condition});
        }
        for (std::size_t k = 0; k < nk; ++k) {
            const double alpha = grid.level(k);
            // scalar_mul(-1, y) has levels [-y2, -y1]
            const double dev = std::max(std::abs(glo[k] - (-sol.upper[i][k])),
                                        std::abs(ghi[k] - (-sol.lower[i][k])));
            report.max_gs_deviation = std::max(report.max_gs_deviation, dev);
            if (dev > tol_cd) {
                report.violations.push_back({SolutionCheck::GsConsistency, t, alpha, dev, {}});
            }
        }
    }
    return report;
}

DecayProblem example_problem(const std::string& name, const AlphaGrid& grid) {
    if (name == "4.1") {
        return make_decay_problem(make_triangular(195.0, 200.0, 205.0, grid), 1.0, "4.1");
    }
    if (name == "4.2") {
        return make_decay_problem(make_triangular(90.0, 100.0, 120.0, grid), 1.0, "4.2");
    }
    throw std::invalid_argument("unknown example \"" + name + "\" (expected 4.1 or 4.2)");
}

ExampleRun solve_example(const std::string& name, const SolverConfig& cfg) {
    const DecayProblem p = example_problem(name, cfg.grid);
    IvpSolution numeric = solve_ivp_numeric(decay_rhs(), p, cfg);
    IvpSolution analytic = solve_decay_analytic(p, numeric.times);
    const double dev = max_abs_deviation(analytic, numeric);
    return {std::move(analytic), std::move(numeric), dev};
}

double max_abs_deviation(const IvpSolution& a, const IvpSolution& b) {
    if (a.times != b.times || a.grid != b.grid) {
        throw std::invalid_argument("solutions live on different time/alpha grids");
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < a.times.size(); ++i) {
        for (std::size_t k = 0; k < a.grid.size(); ++k) {
            dev = std::max(dev, std::abs(a.lower[i][k] - b.lower[i][k]));
            dev = std::max(dev, std::abs(a.upper[i][k] - b.upper[i][k]));
        }
    }
    return dev;
}

}  // namespace fuzzcalc
