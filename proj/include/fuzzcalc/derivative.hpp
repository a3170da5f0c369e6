#pragma once

#include <optional>
#include <string_view>

#include "fuzzcalc/fuzzy_function.hpp"

namespace fuzzcalc {

enum class DerivativeKind {
    SDifferentiable,             // endpoint-derivative levels form a fuzzy number as-is
    GsOnly,                      // only the min/max-reordered levels form a fuzzy number
    EndpointsNondifferentiable,  // an endpoint derivative fails to exist at some level
    GsInvalid,                   // even the min/max levels fail the fuzzy-number conditions
};

std::string_view to_string(DerivativeKind k);

enum class Endpoint { Lower, Upper };

/// Derivative of one endpoint function at (t, alpha): analytic when the
/// function carries derivative evaluators, otherwise a central finite
/// difference with step 1e-5 * max(1, |t|) (one-sided at domain boundaries).
/// Throws std::domain_error on non-finite evaluation within the stencil.
double endpoint_derivative(const FuzzyFunction& f, double t, double alpha, Endpoint which);

struct DerivativeResult {
    DerivativeKind kind;
    std::optional<FuzzyNumber> value;  // present iff kind is SDifferentiable or GsOnly
    ValidityReport diagnostics;        // validity of the candidate level family
};

/// Derivative with levels [y1'(t,alpha), y2'(t,alpha)] in stored order.
/// When that family fails the fuzzy-number conditions, the result reports
/// the min/max fallback kind (GsOnly with the reordered value, or GsInvalid)
/// and carries the failed candidate's diagnostics.
DerivativeResult seikkala_derivative(const FuzzyFunction& f, double t,
                                     double tol = kDefaultValidityTol);

/// Derivative with levels [min(y1', y2'), max(y1', y2')] per alpha.
/// Kind is SDifferentiable when no level needed reordering, GsOnly otherwise,
/// GsInvalid when even the reordered family fails validity.
DerivativeResult gs_derivative(const FuzzyFunction& f, double t,
                               double tol = kDefaultValidityTol);

/// Strongest applicable differentiability kind at t.
DerivativeKind classify(const FuzzyFunction& f, double t, double tol = kDefaultValidityTol);

}  // namespace fuzzcalc
