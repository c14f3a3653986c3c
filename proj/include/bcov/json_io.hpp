#pragma once

// JSON forms of the value types. Rationals travel as "p/q" strings.

#include <json.hpp>

#include "bcov/geometry.hpp"
#include "bcov/montecarlo.hpp"
#include "bcov/parents.hpp"
#include "bcov/polynomial.hpp"
#include "bcov/rational.hpp"

namespace bcov {

using Json = nlohmann::ordered_json;

/// Accepts a "p/q" / decimal string or a JSON integer.
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);
/// {"exact": "p/q", "float": x}
Json exact_result(const Rational& q);

Json configuration_to_json(const ExactConfiguration& c);
ExactConfiguration configuration_from_json(const Json& j);

/// {"type": "uniform" | "pwu" | "poly" | "beta" | "triangular" | "truncated_gaussian", ...}
Json parent_to_json(const ParentDistribution& p);
ParentDistribution parent_from_json(const Json& j);

/// {"vars": n, "terms": [{"exp": [...], "coef": "p/q"}, ...]}
Json polynomial_to_json(const RationalPolynomial& p);
RationalPolynomial polynomial_from_json(const Json& j);

Json rng_to_json(const RngSpec& r);
/// {"mean", "stderr", "samples", "seed": {"seed", "stream"}}
Json estimate_to_json(const Estimate& e);

}  // namespace bcov
