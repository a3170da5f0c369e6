#include "fuzzcalc/fuzzy_function.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fuzzcalc {

namespace {

[[noreturn]] void throw_outside_domain(double t, const Domain& d) {
    std::ostringstream msg;
    msg << "t=" << t << " outside function domain [" << d.lo << ", " << d.hi << "]";
    throw std::domain_error(msg.str());
}

double checked_eval(const LevelEvaluator& eval, double t, double alpha, const char* side) {
    const double v = eval(t, alpha);
    if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << side << " evaluator produced non-finite value at t=" << t << ", alpha=" << alpha;
        throw std::domain_error(msg.str());
    }
    return v;
}

void require_nonnegative_support(const FuzzyNumber& a, const char* family) {
    if (a.lower(0) < 0.0) {
        std::ostringstream msg;
        msg << family << " requires a parameter with nonnegative support, got a1(0)="
            << a.lower(0);
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

FuzzyFunction::FuzzyFunction(Domain domain, AlphaGrid grid, LevelEvaluator lower,
                             LevelEvaluator upper, LevelEvaluator deriv_lower,
                             LevelEvaluator deriv_upper)
    : domain_(domain),
      grid_(std::move(grid)),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      deriv_lower_(std::move(deriv_lower)),
      deriv_upper_(std::move(deriv_upper)) {
    if (!lower_ || !upper_) {
        throw std::invalid_argument("fuzzy function needs both endpoint evaluators");
    }
    if (static_cast<bool>(deriv_lower_) != static_cast<bool>(deriv_upper_)) {
        throw std::invalid_argument("derivative evaluators must be supplied for both endpoints");
    }
    if (!(domain_.lo < domain_.hi)) {
        throw std::invalid_argument("function domain must have positive length");
    }
}

bool FuzzyFunction::has_analytic_derivatives() const { return static_cast<bool>(deriv_lower_); }

double FuzzyFunction::lower_value(double t, double alpha) const {
    if (!domain_.contains(t)) throw_outside_domain(t, domain_);
    return checked_eval(lower_, t, alpha, "lower");
}

double FuzzyFunction::upper_value(double t, double alpha) const {
    if (!domain_.contains(t)) throw_outside_domain(t, domain_);
    return checked_eval(upper_, t, alpha, "upper");
}

double FuzzyFunction::lower_derivative(double t, double alpha) const {
    if (!domain_.contains(t)) throw_outside_domain(t, domain_);
    return checked_eval(deriv_lower_, t, alpha, "lower derivative");
}

double FuzzyFunction::upper_derivative(double t, double alpha) const {
    if (!domain_.contains(t)) throw_outside_domain(t, domain_);
    return checked_eval(deriv_upper_, t, alpha, "upper derivative");
}

FuzzyNumber FuzzyFunction::value_at(double t, double tol) const {
    std::vector<double> lo(grid_.size());
    std::vector<double> hi(grid_.size());
    for (std::size_t k = 0; k < grid_.size(); ++k) {
        lo[k] = lower_value(t, grid_.level(k));
        hi[k] = upper_value(t, grid_.level(k));
    }
    return FuzzyNumber(grid_, std::move(lo), std::move(hi), tol);
}

FuzzyFunction make_function(Domain domain, AlphaGrid grid, LevelEvaluator lower,
                            LevelEvaluator upper, LevelEvaluator deriv_lower,
                            LevelEvaluator deriv_upper) {
    return FuzzyFunction(domain, std::move(grid), std::move(lower), std::move(upper),
                         std::move(deriv_lower), std::move(deriv_upper));
}

FuzzyFunction builtin_exp_decay(const FuzzyNumber& a) {
    require_nonnegative_support(a, "exp_decay");
    return FuzzyFunction(
        Domain::all(), a.grid(),
        [a](double t, double alpha) { return a.lower_at(alpha) * std::exp(-t); },
        [a](double t, double alpha) { return a.upper_at(alpha) * std::exp(-t); },
        [a](double t, double alpha) { return -a.lower_at(alpha) * std::exp(-t); },
        [a](double t, double alpha) { return -a.upper_at(alpha) * std::exp(-t); });
}

FuzzyFunction builtin_sinusoid(const FuzzyNumber& a) {
    require_nonnegative_support(a, "sinusoid");
    return FuzzyFunction(
        Domain::closed(0.0, std::numbers::pi), a.grid(),
        [a](double t, double alpha) { return a.lower_at(alpha) * std::sin(t); },
        [a](double t, double alpha) { return a.upper_at(alpha) * std::sin(t); },
        [a](double t, double alpha) { return a.lower_at(alpha) * std::cos(t); },
        [a](double t, double alpha) { return a.upper_at(alpha) * std::cos(t); });
}

FuzzyFunction constant_function(const FuzzyNumber& a, Domain domain) {
    return FuzzyFunction(
        domain, a.grid(),
        [a](double, double alpha) { return a.lower_at(alpha); },
        [a](double, double alpha) { return a.upper_at(alpha); },
        [](double, double) { return 0.0; }, [](double, double) { return 0.0; });
}

FuzzyFunction crisp_function(Domain domain, const AlphaGrid& grid,
                             std::function<double(double)> f, std::function<double(double)> df) {
    if (!f) throw std::invalid_argument("crisp function needs an evaluator");
    LevelEvaluator value = [f](double t, double) { return f(t); };
    LevelEvaluator deriv;
    if (df) deriv = [df](double t, double) { return df(t); };
    return FuzzyFunction(domain, grid, value, value, deriv, deriv);
}

FuzzyFunction add_functions(const FuzzyFunction& f, const FuzzyFunction& g) {
    if (!(f.domain() == g.domain())) {
        throw std::invalid_argument("add_functions requires identical domains");
    }
    if (f.grid() != g.grid()) {
        throw std::invalid_argument("add_functions requires identical alpha grids");
    }
    LevelEvaluator lower = [f, g](double t, double alpha) {
        return f.lower_value(t, alpha) + g.lower_value(t, alpha);
    };
    LevelEvaluator upper = [f, g](double t, double alpha) {
        return f.upper_value(t, alpha) + g.upper_value(t, alpha);
    };
    LevelEvaluator dlower;
    LevelEvaluator dupper;
    if (f.has_analytic_derivatives() && g.has_analytic_derivatives()) {
        dlower = [f, g](double t, double alpha) {
            return f.lower_derivative(t, alpha) + g.lower_derivative(t, alpha);
        };
        dupper = [f, g](double t, double alpha) {
            return f.upper_derivative(t, alpha) + g.upper_derivative(t, alpha);
        };
    }
    return FuzzyFunction(f.domain(), f.grid(), std::move(lower), std::move(upper),
                         std::move(dlower), std::move(dupper));
}

FuzzyFunction scale_function(double lambda, const FuzzyFunction& f) {
    // Negative scalars exchange the endpoint roles levelwise.
    const bool swap = lambda < 0.0;
    LevelEvaluator lower = [lambda, f, swap](double t, double alpha) {
        return lambda * (swap ? f.upper_value(t, alpha) : f.lower_value(t, alpha));
    };
    LevelEvaluator upper = [lambda, f, swap](double t, double alpha) {
        return lambda * (swap ? f.lower_value(t, alpha) : f.upper_value(t, alpha));
    };
    LevelEvaluator dlower;
    LevelEvaluator dupper;
    if (f.has_analytic_derivatives()) {
        dlower = [lambda, f, swap](double t, double alpha) {
            return lambda * (swap ? f.upper_derivative(t, alpha) : f.lower_derivative(t, alpha));
        };
        dupper = [lambda, f, swap](double t, double alpha) {
            return lambda * (swap ? f.lower_derivative(t, alpha) : f.upper_derivative(t, alpha));
        };
    }
    return FuzzyFunction(f.domain(), f.grid(), std::move(lower), std::move(upper),
                         std::move(dlower), std::move(dupper));
}

}  // namespace fuzzcalc
