#include "bcov/json_io.hpp"

#include <set>
#include <string>

#include "bcov/errors.hpp"

namespace bcov {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void only_keys(const Json& j, std::initializer_list<const char*> allowed) {
  require(j.is_object(), "expected a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items()) require(ok.count(k), "unknown field \"" + k + "\"");
}

const Json& field(const Json& j, const char* key) {
  require(j.contains(key), std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<Rational> rational_array(const Json& j) {
  require(j.is_array(), "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json rational_array_json(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

unsigned positive_int(const Json& j, const char* what) {
  require(j.is_number_integer() && j.get<long long>() >= 1, std::string(what) + " must be a positive integer");
  return static_cast<unsigned>(j.get<long long>());
}

double real(const Json& j, const char* what) {
  if (j.is_string()) return to_double(parse_rational(j.get<std::string>()));
  require(j.is_number(), std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw DomainError("expected a rational string such as \"2/5\"");
}

Json rational_to_json(const Rational& q) { return to_fraction_string(q); }

Json exact_result(const Rational& q) { return Json{{"exact", to_fraction_string(q)}, {"float", to_double(q)}}; }

Json configuration_to_json(const ExactConfiguration& c) {
  return Json{{"s", rational_to_json(c.length())}, {"positions", rational_array_json(c.positions())}};
}

ExactConfiguration configuration_from_json(const Json& j) {
  only_keys(j, {"s", "positions"});
  return ExactConfiguration(rational_from_json(field(j, "s")), rational_array(field(j, "positions")));
}

Json parent_to_json(const ParentDistribution& p) {
  return std::visit(
      overloaded{
          [](const UniformParent& u) { return Json{{"type", "uniform"}, {"s", rational_to_json(u.s)}}; },
          [](const PiecewiseUniformParent& u) {
            return Json{{"type", "pwu"},
                        {"breakpoints", rational_array_json(u.breakpoints)},
                        {"densities", rational_array_json(u.densities)}};
          },
          [](const PolynomialParent& u) {
            return Json{{"type", "poly"}, {"coeffs", rational_array_json(u.density.coeffs())}, {"s", rational_to_json(u.s)}};
          },
          [](const BetaIntParent& u) {
            return Json{{"type", "beta"}, {"a", u.a}, {"b", u.b}, {"s", rational_to_json(u.s)}};
          },
          [](const TriangularParent& u) {
            return Json{{"type", "triangular"}, {"mode", rational_to_json(u.mode)}, {"s", rational_to_json(u.s)}};
          },
          [](const TruncatedGaussianParent& u) {
            return Json{{"type", "truncated_gaussian"}, {"mu", u.mu}, {"sigma", u.sigma}, {"s", u.s}};
          },
      },
      p.kind());
}

ParentDistribution parent_from_json(const Json& j) {
  require(j.is_object(), "parent must be a JSON object");
  require(field(j, "type").is_string(), "parent type must be a string");
  const std::string type = j.at("type").get<std::string>();
  if (type == "uniform") {
    only_keys(j, {"type", "s"});
    return ParentDistribution::uniform(rational_from_json(field(j, "s")));
  }
  if (type == "pwu") {
    only_keys(j, {"type", "breakpoints", "densities"});
    return ParentDistribution::piecewise_uniform(rational_array(field(j, "breakpoints")),
                                                 rational_array(field(j, "densities")));
  }
  if (type == "poly") {
    only_keys(j, {"type", "coeffs", "s", "normalize"});
    bool normalize = j.contains("normalize") && j.at("normalize").get<bool>();
    return ParentDistribution::polynomial(UniPoly(rational_array(field(j, "coeffs"))),
                                          rational_from_json(field(j, "s")), normalize);
  }
  if (type == "beta") {
    only_keys(j, {"type", "a", "b", "s"});
    return ParentDistribution::beta_int(positive_int(field(j, "a"), "a"), positive_int(field(j, "b"), "b"),
                                        rational_from_json(field(j, "s")));
  }
  if (type == "triangular") {
    only_keys(j, {"type", "mode", "s"});
    return ParentDistribution::triangular(rational_from_json(field(j, "mode")), rational_from_json(field(j, "s")));
  }
  if (type == "truncated_gaussian") {
    only_keys(j, {"type", "mu", "sigma", "s"});
    return ParentDistribution::truncated_gaussian(real(field(j, "mu"), "mu"), real(field(j, "sigma"), "sigma"),
                                                  real(field(j, "s"), "s"));
  }
  throw DomainError("unknown parent type \"" + type + "\"");
}

Json polynomial_to_json(const RationalPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", e}, {"coef", rational_to_json(c)}});
  return Json{{"vars", p.vars()}, {"terms", terms}};
}

RationalPolynomial polynomial_from_json(const Json& j) {
  only_keys(j, {"vars", "terms"});
  const Json& v = field(j, "vars");
  require(v.is_number_integer() && v.get<long long>() >= 0, "vars must be a nonnegative integer");
  RationalPolynomial p(static_cast<std::size_t>(v.get<long long>()));
  const Json& terms = field(j, "terms");
  require(terms.is_array(), "terms must be an array");
  for (const auto& t : terms) {
    only_keys(t, {"exp", "coef"});
    const Json& e = field(t, "exp");
    require(e.is_array() && e.size() == p.vars(), "exponent vector length must equal vars");
    Exponents ex;
    for (const auto& k : e) {
      require(k.is_number_integer() && k.get<long long>() >= 0, "exponents must be nonnegative integers");
      ex.push_back(static_cast<unsigned>(k.get<long long>()));
    }
    p.add_term(ex, rational_from_json(field(t, "coef")));
  }
  return p;
}

Json rng_to_json(const RngSpec& r) { return Json{{"seed", r.seed}, {"stream", r.stream}}; }

Json estimate_to_json(const Estimate& e) {
  return Json{{"mean", e.mean}, {"stderr", e.stderr_}, {"samples", e.samples}, {"seed", rng_to_json(e.seed)}};
}

}  // namespace bcov
