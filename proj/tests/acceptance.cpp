// Acceptance suite: runs every shipped correctness criterion at its pinned
// tolerance and prints one PASS/FAIL line per criterion. Exits nonzero when
// any criterion fails.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzcalc/commands.hpp"
#include "fuzzcalc/derivative.hpp"
#include "fuzzcalc/ivp.hpp"
#include "fuzzcalc/serialization.hpp"
#include "support/generators.hpp"

using namespace fuzzcalc;
using testsupport::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

class Checker {
public:
    void require(bool cond, const std::string& msg) {
        if (!cond) failures_.push_back(msg);
    }
    void require_close(double actual, double expected, double tol, const std::string& what) {
        if (!(std::abs(actual - expected) <= tol)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << what << ": got " << actual << ", expected " << expected << " (tol " << tol
                << ")";
            failures_.push_back(msg.str());
        }
    }
    bool ok() const { return failures_.empty(); }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

const AlphaGrid kGrid = AlphaGrid::uniform(11);

// --- criterion 1: worked decay problem, closed form at t = 1 ----------------

void check_closed_form(Checker& c) {
    const DecayProblem p = example_problem("4.1", kGrid);
    const IvpSolution sol = solve_decay_analytic(p, {0.0, 1.0});

    c.require_close(sol.lower[1][10], 73.57589, 1e-5, "y1(1, alpha=1)");
    c.require_close(sol.upper[1][10], 73.57589, 1e-5, "y2(1, alpha=1)");
    c.require_close(sol.lower[1][0], 59.98448, 1e-5, "y1(1, alpha=0)");
    c.require_close(sol.upper[1][0], 87.16730, 1e-5, "y2(1, alpha=0)");

    // Tighter pin against the independently evaluated closed form.
    c.require_close(sol.lower[1][10], 73.575888234288464, 1e-9, "y1(1,1) vs oracle");
    c.require_close(sol.lower[1][0], 59.984479091993238, 1e-9, "y1(1,0) vs oracle");
    c.require_close(sol.upper[1][0], 87.167297376583690, 1e-9, "y2(1,0) vs oracle");
}

// --- criterion 2: RK4 accuracy and fourth-order convergence -----------------

void check_convergence(Checker& c) {
    const DecayProblem p = example_problem("4.1", kGrid);
    auto max_error = [&](double h) {
        SolverConfig cfg;
        cfg.step = h;
        const IvpSolution numeric = solve_ivp_numeric(decay_rhs(), p, cfg);
        return max_abs_deviation(solve_decay_analytic(p, numeric.times), numeric);
    };

    const double err_fine = max_error(1e-3);
    c.require(err_fine <= 1e-6, "max |numeric - analytic| at h=1e-3 is " +
                                    std::to_string(err_fine) + " > 1e-6");

    // Halving ratios measured where truncation dominates double-precision
    // round-off (h=1e-3 already sits at ~1e-12 absolute error).
    const double e1 = max_error(0.04);
    const double e2 = max_error(0.02);
    const double e3 = max_error(0.01);
    for (double ratio : {e1 / e2, e2 / e3}) {
        std::ostringstream msg;
        msg << "halving ratio " << ratio << " outside [12, 20]";
        c.require(ratio >= 12.0 && ratio <= 20.0, msg.str());
    }
}

// --- criterion 3: differentiability classification --------------------------

void check_classification(Checker& c) {
    const FuzzyNumber a = make_triangular(1, 2, 3, kGrid);

    const FuzzyFunction g = builtin_exp_decay(a);
    for (int i = 0; i <= 10; ++i) {
        const double t = 0.2 * i;
        if (classify(g, t) != DerivativeKind::GsOnly) {
            c.require(false, "exp_decay at t=" + std::to_string(t) + " is not GS_ONLY");
        }
    }

    const FuzzyFunction h = builtin_sinusoid(a);
    for (double t : {0.1, 0.4, 0.8, 1.2, 1.5, 1.56}) {
        if (classify(h, t) != DerivativeKind::SDifferentiable) {
            c.require(false, "sinusoid at t=" + std::to_string(t) + " is not S_DIFFERENTIABLE");
        }
    }
    for (double t : {1.58, 1.8, 2.2, 2.6, 3.0, kPi}) {
        if (classify(h, t) != DerivativeKind::GsOnly) {
            c.require(false, "sinusoid at t=" + std::to_string(t) + " is not GS_ONLY");
        }
    }
}

// --- criterion 4: the solution band is a valid gS solution ------------------

void check_solution_validity(Checker& c) {
    std::vector<double> times(101);
    for (int i = 0; i <= 100; ++i) times[i] = i / 100.0;

    for (const std::string name : {"4.1", "4.2"}) {
        const DecayProblem p = example_problem(name, kGrid);
        const IvpSolution sol = solve_decay_analytic(p, times);
        const SolutionReport rep = validate_solution(sol, decay_rhs());
        c.require(rep.check_passed(SolutionCheck::FuzzyValidity),
                  name + ": fuzzy-number validity failed");
        c.require(rep.check_passed(SolutionCheck::Nestedness), name + ": nestedness failed");
        c.require(rep.check_passed(SolutionCheck::Residual), name + ": residual check failed");
        c.require(rep.check_passed(SolutionCheck::GsConsistency),
                  name + ": gS consistency failed");
        c.require(rep.max_residual <= 1e-10,
                  name + ": analytic residual " + std::to_string(rep.max_residual) + " > 1e-10");
        c.require(rep.max_gs_deviation <= 1e-10,
                  name + ": gS-vs-(-1)*y deviation exceeds 1e-10");
    }
}

// --- criterion 5: theorem property suites, >= 500 random cases each ---------

void property_s_implies_gs(Checker& c) {
    Rng rng(1001);
    std::size_t positives = 0;
    for (int iter = 0; iter < 500; ++iter) {
        const FuzzyNumber a = testsupport::random_nonnegative(rng, kGrid);
        FuzzyFunction f = [&] {
            switch (testsupport::pick_index(rng, 4)) {
                case 0: return builtin_exp_decay(a);
                case 1: return builtin_sinusoid(a);
                case 2: return constant_function(a);
                default:
                    return scale_function(testsupport::uniform(rng, -2.0, 2.0),
                                          builtin_sinusoid(a));
            }
        }();
        const double hi = f.domain().bounded_above() ? f.domain().hi : 2.0;
        const double t = testsupport::uniform(rng, 0.0, hi);

        const DerivativeResult s = seikkala_derivative(f, t);
        if (s.kind != DerivativeKind::SDifferentiable) continue;
        ++positives;
        const DerivativeResult gs = gs_derivative(f, t);
        if (!gs.value || !s.value) {
            c.require(false, "S-differentiable case lost its gS value");
            continue;
        }
        const double d = distance(*s.value, *gs.value);
        if (d > 1e-12) {
            c.require(false, "S and gS derivatives differ by " + std::to_string(d));
        }
    }
    c.require(positives >= 100, "too few S-differentiable samples: " + std::to_string(positives));
}

void property_closure(Checker& c) {
    Rng rng(2002);
    for (int iter = 0; iter < 500; ++iter) {
        const bool use_sin = testsupport::pick_index(rng, 2) == 0;
        const FuzzyNumber a = testsupport::random_nonnegative(rng, kGrid);
        const FuzzyNumber b = testsupport::random_nonnegative(rng, kGrid);
        const FuzzyFunction f = use_sin ? builtin_sinusoid(a) : builtin_exp_decay(a);
        const FuzzyFunction g = use_sin ? builtin_sinusoid(b) : builtin_exp_decay(b);
        const double t = testsupport::uniform(rng, 0.0, use_sin ? kPi : 2.0);
        const double lambda = testsupport::uniform(rng, -3.0, 3.0);

        const DerivativeResult df = gs_derivative(f, t);
        const DerivativeResult dg = gs_derivative(g, t);
        if (!df.value || !dg.value) {
            c.require(false, "built-in operand lost its gS derivative");
            continue;
        }

        // Sums within one family stay gS-differentiable...
        const DerivativeResult dsum = gs_derivative(add_functions(f, g), t);
        if (!dsum.value) {
            c.require(false, "sum lost gS differentiability at t=" + std::to_string(t));
            continue;
        }
        // ...and the summed derivative levels stay inside the combination
        // bounds of the operands' endpoint derivatives.
        for (std::size_t k = 0; k < kGrid.size(); ++k) {
            const double lo_bound = df.value->lower(k) + dg.value->lower(k);
            const double hi_bound = df.value->upper(k) + dg.value->upper(k);
            if (dsum.value->lower(k) < lo_bound - 1e-9 ||
                dsum.value->upper(k) > hi_bound + 1e-9) {
                c.require(false, "sum derivative escaped the min/max combination bounds");
                break;
            }
        }

        // Scalar multiples stay gS-differentiable and scale the levels.
        const DerivativeResult dscaled = gs_derivative(scale_function(lambda, f), t);
        if (!dscaled.value) {
            c.require(false, "scalar multiple lost gS differentiability");
            continue;
        }
        const double dev = distance(*dscaled.value, scalar_mul(lambda, *df.value));
        if (dev > 1e-12) {
            c.require(false, "scaled gS derivative deviates by " + std::to_string(dev));
        }
    }
}

void property_arithmetic_oracle(Checker& c) {
    Rng rng(3003);
    for (int iter = 0; iter < 500; ++iter) {
        const AlphaGrid grid = testsupport::random_grid(rng);
        const FuzzyNumber a = testsupport::random_fuzzy(rng, grid);
        const FuzzyNumber b = testsupport::random_fuzzy(rng, grid);
        const double lambda = testsupport::uniform(rng, -10.0, 10.0);

        const FuzzyNumber sum = add(a, b);
        const FuzzyNumber scaled = scalar_mul(lambda, a);
        if (!validate(sum.lower_values(), sum.upper_values(), grid).valid() ||
            !validate(scaled.lower_values(), scaled.upper_values(), grid).valid()) {
            c.require(false, "arithmetic result failed validation");
            continue;
        }
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const auto s =
                testsupport::oracle_add_level(a.lower(k), a.upper(k), b.lower(k), b.upper(k));
            const auto m = testsupport::oracle_scale_level(lambda, a.lower(k), a.upper(k));
            if (sum.lower(k) != s[0] || sum.upper(k) != s[1] || scaled.lower(k) != m[0] ||
                scaled.upper(k) != m[1]) {
                c.require(false, "levelwise arithmetic deviates from the interval oracle");
                break;
            }
        }
    }
}

void check_properties(Checker& c) {
    property_s_implies_gs(c);
    property_closure(c);
    property_arithmetic_oracle(c);
}

// --- criterion 6: figure data reproduction -----------------------------------

void check_figure(Checker& c) {
    const std::string out = "/tmp/fuzzcalc_acceptance_fig41.csv";
    const cli::RunReport report = cli::cmd_reproduce("fig-4.1", out, {});
    c.require(report.exit_code == 0, "reproduce fig-4.1 exited nonzero");

    std::ifstream in(out);
    std::string line;
    std::getline(in, line);
    c.require(line == "t,y1,y2", "unexpected figure header: " + line);
    std::vector<std::array<double, 3>> rows;
    while (std::getline(in, line)) {
        std::array<double, 3> row{};
        std::istringstream ls(line);
        char comma;
        ls >> row[0] >> comma >> row[1] >> comma >> row[2];
        rows.push_back(row);
    }
    c.require(rows.size() == 101, "expected 101 figure rows, got " + std::to_string(rows.size()));
    if (rows.size() != 101) return;

    // Closed form at alpha = 0.5 evaluated independently.
    const auto expect = [](double t) {
        return testsupport::oracle_decay_level(197.5, 202.5, t);
    };
    const struct {
        std::size_t idx;
        double t;
    } probes[] = {{0, 0.0}, {50, 0.5}, {100, 1.0}};
    for (const auto& probe : probes) {
        const auto y = expect(probe.t);
        c.require_close(rows[probe.idx][1], y[0], 1e-6,
                        "curve 1 at t=" + std::to_string(probe.t));
        c.require_close(rows[probe.idx][2], y[1], 1e-6,
                        "curve 2 at t=" + std::to_string(probe.t));
    }
    // Frozen values for the pinned probes.
    c.require_close(rows[0][1], 197.5, 1e-6, "curve 1 at t=0");
    c.require_close(rows[0][2], 202.5, 1e-6, "curve 2 at t=0");
    c.require_close(rows[100][1], 66.780183663140851, 1e-6, "curve 1 at t=1");
    c.require_close(rows[100][2], 80.371592805436077, 1e-6, "curve 2 at t=1");
}

// --- criterion 7: support widening law ---------------------------------------

void check_support_widening(Checker& c) {
    const DecayProblem p = example_problem("4.1", kGrid);
    std::vector<double> times(11);
    for (int i = 0; i <= 10; ++i) times[i] = i / 10.0;
    const IvpSolution sol = solve_decay_analytic(p, times);
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double width = sol.upper[i][0] - sol.lower[i][0];
        const double expected = 10.0 * std::exp(times[i]);
        if (std::abs(width - expected) > 1e-6 * expected) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "band width at t=" << times[i] << " is " << width << ", expected "
                << expected;
            c.require(false, msg.str());
        }
    }
}

struct Criterion {
    std::string name;
    std::function<void(Checker&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"closed-form-values", check_closed_form},
        {"rk4-convergence", check_convergence},
        {"differentiability-classification", check_classification},
        {"gs-solution-validity", check_solution_validity},
        {"theorem-property-suites", check_properties},
        {"figure-reproduction", check_figure},
        {"support-widening-law", check_support_widening},
    };

    int failed = 0;
    for (const Criterion& criterion : criteria) {
        Checker checker;
        try {
            criterion.run(checker);
        } catch (const std::exception& e) {
            checker.require(false, std::string("exception: ") + e.what());
        }
        if (checker.ok()) {
            std::cout << "[PASS] " << criterion.name << "\n";
        } else {
            ++failed;
            std::cout << "[FAIL] " << criterion.name << "\n";
            for (const std::string& msg : checker.failures()) {
                std::cout << "       " << msg << "\n";
            }
        }
    }
    std::cout << (failed == 0 ? "all criteria passed" : "criteria failed") << " ("
              << criteria.size() - failed << "/" << criteria.size() << ")\n";
    return failed == 0 ? 0 : 1;
}
