#include "fuzzcalc/derivative.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace fuzzcalc {

namespace {

constexpr double kFdStep = 1e-5;
// Relative agreement required between difference quotients for an endpoint
// derivative to count as existing.
constexpr double kExistenceTol = 1e-4;

double base_step(double t) { return kFdStep * std::max(1.0, std::abs(t)); }

double eval_endpoint(const FuzzyFunction& f, double t, double alpha, Endpoint which) {
    return which == Endpoint::Lower ? f.lower_value(t, alpha) : f.upper_value(t, alpha);
}

enum class StencilMode { Central, Forward, Backward };

StencilMode stencil_mode(const FuzzyFunction& f, double t, double h) {
    const Domain& d = f.domain();
    const bool room_below = t - h >= d.lo;
    const bool room_above = t + h <= d.hi;
    if (room_below && room_above) return StencilMode::Central;
    if (room_above) return StencilMode::Forward;
    if (room_below) return StencilMode::Backward;
    throw std::domain_error("domain too small for a finite-difference stencil");
}

double quotient(const FuzzyFunction& f, double t, double alpha, Endpoint which, double h) {
    // h signed: positive forward, negative backward.
    return (eval_endpoint(f, t + h, alpha, which) - eval_endpoint(f, t, alpha, which)) / h;
}

/// Operational differentiability: difference quotients at steps h, h/2, h/4
/// (both sides where the domain allows) must agree within kExistenceTol
/// relative to max(1, scale).
bool endpoint_derivative_exists(const FuzzyFunction& f, double t, double alpha, Endpoint which) {
    if (f.has_analytic_derivatives()) {
        const double d = which == Endpoint::Lower ? f.lower_derivative(t, alpha)
                                                  : f.upper_derivative(t, alpha);
        return std::isfinite(d);
    }
    const double h = base_step(t);
    const StencilMode mode = stencil_mode(f, t, h);
    std::vector<double> quotients;
    quotients.reserve(6);
    for (double step : {h, h / 2.0, h / 4.0}) {
        if (mode != StencilMode::Backward) quotients.push_back(quotient(f, t, alpha, which, step));
        if (mode != StencilMode::Forward) quotients.push_back(quotient(f, t, alpha, which, -step));
    }
    double lo = quotients.front();
    double hi = quotients.front();
    for (double q : quotients) {
        if (!std::isfinite(q)) return false;
        lo = std::min(lo, q);
        hi = std::max(hi, q);
    }
    const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
    return hi - lo <= kExistenceTol * scale;
}

struct EndpointDerivatives {
    std::vector<double> d1;
    std::vector<double> d2;
    bool all_exist = true;
};

EndpointDerivatives endpoint_derivatives(const FuzzyFunction& f, double t) {
    const AlphaGrid& grid = f.grid();
    EndpointDerivatives out;
    out.d1.resize(grid.size());
    out.d2.resize(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double alpha = grid.level(k);
        if (!endpoint_derivative_exists(f, t, alpha, Endpoint::Lower) ||
            !endpoint_derivative_exists(f, t, alpha, Endpoint::Upper)) {
            out.all_exist = false;
            return out;
        }
        out.d1[k] = endpoint_derivative(f, t, alpha, Endpoint::Lower);
        out.d2[k] = endpoint_derivative(f, t, alpha, Endpoint::Upper);
    }
    return out;
}

}  // namespace

std::string_view to_string(DerivativeKind k) {
    switch (k) {
        case DerivativeKind::SDifferentiable: return "S_DIFFERENTIABLE";
        case DerivativeKind::GsOnly: return "GS_ONLY";
        case DerivativeKind::EndpointsNondifferentiable: return "ENDPOINTS_NONDIFFERENTIABLE";
        case DerivativeKind::GsInvalid: return "GS_INVALID";
    }
    return "unknown";
}

double endpoint_derivative(const FuzzyFunction& f, double t, double alpha, Endpoint which) {
    if (f.has_analytic_derivatives()) {
        return which == Endpoint::Lower ? f.lower_derivative(t, alpha)
                                        : f.upper_derivative(t, alpha);
    }
    const double h = base_step(t);
    switch (stencil_mode(f, t, h)) {
        case StencilMode::Central:
            return (eval_endpoint(f, t + h, alpha, which) -
                    eval_endpoint(f, t - h, alpha, which)) /
                   (2.0 * h);
        case StencilMode::Forward:
            return quotient(f, t, alpha, which, h);
        case StencilMode::Backward:
            return quotient(f, t, alpha, which, -h);
    }
    throw std::logic_error("unreachable");
}

DerivativeResult seikkala_derivative(const FuzzyFunction& f, double t, double tol) {
    EndpointDerivatives d = endpoint_derivatives(f, t);
    if (!d.all_exist) {
        return {DerivativeKind::EndpointsNondifferentiable, std::nullopt, {}};
    }
    const AlphaGrid& grid = f.grid();
    ValidityReport ordered = validate(d.d1, d.d2, grid, tol);
    if (ordered.valid()) {
        FuzzyNumber value(grid, d.d1, d.d2, tol);
        return {DerivativeKind::SDifferentiable, std::move(value), std::move(ordered)};
    }
    // Report how the min/max fallback fares, keeping the failed candidate's
    // diagnostics for the caller.
    std::vector<double> lo(grid.size());
    std::vector<double> hi(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        lo[k] = std::min(d.d1[k], d.d2[k]);
        hi[k] = std::max(d.d1[k], d.d2[k]);
    }
    ValidityReport reordered = validate(lo, hi, grid, tol);
    if (reordered.valid()) {
        FuzzyNumber value(grid, std::move(lo), std::move(hi), tol);
        return {DerivativeKind::GsOnly, std::move(value), std::move(ordered)};
    }
    return {DerivativeKind::GsInvalid, std::nullopt, std::move(reordered)};
}

DerivativeResult gs_derivative(const FuzzyFunction& f, double t, double tol) {
    EndpointDerivatives d = endpoint_derivatives(f, t);
    if (!d.all_exist) {
        return {DerivativeKind::EndpointsNondifferentiable, std::nullopt, {}};
    }
    const AlphaGrid& grid = f.grid();
    std::vector<double> lo(grid.size());
    std::vector<double> hi(grid.size());
    bool reordered_somewhere = false;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (d.d1[k] > d.d2[k]) reordered_somewhere = true;
        lo[k] = std::min(d.d1[k], d.d2[k]);
        hi[k] = std::max(d.d1[k], d.d2[k]);
    }
    ValidityReport report = validate(lo, hi, grid, tol);
    if (!report.valid()) {
        return {DerivativeKind::GsInvalid, std::nullopt, std::move(report)};
    }
    FuzzyNumber value(grid, std::move(lo), std::move(hi), tol);
    const DerivativeKind kind =
        reordered_somewhere ? DerivativeKind::GsOnly : DerivativeKind::SDifferentiable;
    return {kind, std::move(value), std::move(report)};
}

DerivativeKind classify(const FuzzyFunction& f, double t, double tol) {
    return seikkala_derivative(f, t, tol).kind;
}

}  // namespace fuzzcalc
