#include "bcov/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "bcov/dynamics.hpp"
#include "bcov/errors.hpp"
#include "bcov/exact.hpp"
#include "bcov/montecarlo.hpp"
#include "bcov/parents.hpp"
#include "bcov/renyi.hpp"
#include "bcov/simplex.hpp"

namespace bcov::cli {

namespace {

struct Options {
  // instance
  std::string s, d, per_slack, R, parent, beta;
  std::optional<std::size_t> n;
  bool uniform = false;
  // randomness
  std::optional<std::uint64_t> seed;
  std::uint64_t stream = 0;
  std::uint64_t trials = 100000;
  unsigned workers = 1;
  std::string format = "json";
  // per command
  std::string a, b, cuboid;
  bool q = false, by_simplices = false, positions = false, exact = false;
  std::string inid, window, destinations, scale;
  std::optional<std::uint64_t> burn_in, thin;
  std::uint64_t count = 1000;
  std::size_t bins = 0;
  std::string rates, total, t, start, d_over_s;
  bool stopping = false;
  std::size_t horizon = 20, cap = 1000000;
  std::string pdf, cdf, inverse, orderstat, mass;
  bool to_poly = false;
};

Json read_json_arg(const std::string& text) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    require(static_cast<bool>(in), "cannot read " + text.substr(1));
    try {
      return Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw DomainError(std::string("invalid JSON in ") + text.substr(1) + ": " + e.what());
    }
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

double real(const std::string& text) { return to_double(parse_rational(text)); }

std::vector<double> real_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& q : parse_rational_list(text)) out.push_back(to_double(q));
  return out;
}

ParentDistribution resolve_parent(const Options& o) {
  int chosen = (o.uniform ? 1 : 0) + (!o.parent.empty() ? 1 : 0) + (!o.beta.empty() ? 1 : 0);
  require(chosen <= 1, "choose one of --uniform, --parent, --beta");
  if (!o.parent.empty()) {
    ParentDistribution p = parent_from_json(read_json_arg(o.parent));
    if (!o.s.empty()) require(real(o.s) == p.support(), "--s differs from the parent's support");
    return p;
  }
  require(!o.s.empty(), "--s is required");
  Rational s = parse_rational(o.s);
  if (!o.beta.empty()) {
    auto ab = parse_rational_list(o.beta);
    require(ab.size() == 2 && ab[0].get_den() == 1 && ab[1].get_den() == 1 && sgn(ab[0]) > 0 && sgn(ab[1]) > 0,
            "--beta takes two positive integers a,b");
    return ParentDistribution::beta_int(static_cast<unsigned>(ab[0].get_num().get_ui()),
                                        static_cast<unsigned>(ab[1].get_num().get_ui()), s);
  }
  return ParentDistribution::uniform(s);
}

std::size_t robot_count(const Options& o, std::optional<std::size_t> implied = std::nullopt) {
  if (implied) {
    require(!o.n || *o.n == *implied, "--n disagrees with the per-slack threshold count");
    return *implied;
  }
  require(o.n.has_value(), "--n is required");
  return *o.n;
}

ThresholdProfile float_profile(const Options& o) {
  require(o.d.empty() != o.per_slack.empty(), "give exactly one of --d and --per-slack");
  if (!o.d.empty()) return ThresholdProfile::homogeneous(real(o.d));
  return ThresholdProfile::per_slack(real_list(o.per_slack));
}

RngSpec rng_of(const Options& o) {
  require(o.seed.has_value(), "--seed is required for randomized commands");
  return {*o.seed, o.stream};
}

McOptions mc_of(const Options& o) { return {o.trials, rng_of(o), o.workers}; }

// ---------------------------------------------------------------------------

Json cmd_pcon(const Options& o) {
  ParentDistribution parent = resolve_parent(o);
  const Rational s = parent.exact_support();
  const bool uniform = std::holds_alternative<UniformParent>(parent.kind());
  if (!o.R.empty()) {
    require(uniform, "collision-free pcon is exact for the uniform parent only");
    require(!o.d.empty(), "collision-free pcon needs a homogeneous --d");
    return exact_result(pcon_cf_uniform(s, parse_rational(o.d), parse_rational(o.R), robot_count(o)));
  }
  require(o.d.empty() != o.per_slack.empty(), "give exactly one of --d and --per-slack");
  if (!o.per_slack.empty()) {
    auto d = parse_rational_list(o.per_slack);
    require(!d.empty(), "--per-slack needs at least one threshold");
    robot_count(o, d.size() - 1);
    if (uniform) return exact_result(pcon_per_slack_uniform(s, d));
    auto poly = parent.density_polynomial();
    require(poly.has_value(), "no exact pcon for a " + parent.type_name() + " parent; use sample");
    return exact_result(pcon_polynomial_parent(*poly, s, d));
  }
  const Rational d = parse_rational(o.d);
  const std::size_t n = robot_count(o);
  if (uniform && !o.by_simplices) return exact_result(pcon_uniform(s, d, n));
  auto poly = parent.density_polynomial();
  require(poly.has_value(), "no exact pcon for a " + parent.type_name() + " parent; use sample");
  if (o.by_simplices) return exact_result(pcon_polynomial_parent_by_simplices(*poly, s, d, n));
  return exact_result(pcon_polynomial_parent(*poly, s, d, n));
}

Json cmd_volume(const Options& o) {
  require(!o.a.empty() && !o.b.empty(), "--a and --b are required");
  Halfspace hs{parse_rational_list(o.a), parse_rational(o.b)};
  if (o.q) {
    require(o.cuboid.empty(), "--q is defined on the unit cube");
    return exact_result(q_sum(hs.a, hs.b));
  }
  Hypercuboid c = o.cuboid.empty() ? Hypercuboid::unit(hs.a.size()) : Hypercuboid{parse_rational_list(o.cuboid)};
  return exact_result(halfspace_cuboid_volume(hs, c));
}

Json cmd_expect(const Options& o) {
  require(!o.s.empty() && !o.d.empty(), "--s and --d are required");
  const Rational s = parse_rational(o.s), d = parse_rational(o.d);
  const std::size_t n = robot_count(o);
  return Json{{"components", exact_result(expected_components_uniform(s, d, n))},
              {"coverage", exact_result(expected_coverage_uniform(s, d, n))},
              {"edges", exact_result(expected_edges_uniform(s, d, n))}};
}

Json cmd_sample(const Options& o) {
  const McOptions mc = mc_of(o);
  if (!o.destinations.empty()) {
    require(!o.s.empty() && !o.d.empty(), "noisy attachment needs --s and --d");
    auto dest = real_list(o.destinations);
    double scale = o.scale.empty() ? 1.0 : real(o.scale);
    return estimate_to_json(noisy_attachment_pcon(dest, real(o.s), real(o.d), scale, mc));
  }
  if (!o.inid.empty()) {
    Json arr = read_json_arg(o.inid);
    require(arr.is_array() && !arr.empty(), "--inid takes a JSON array of parents");
    std::vector<ParentDistribution> parents;
    for (const auto& p : arr) parents.push_back(parent_from_json(p));
    require(!o.s.empty(), "--s is required with --inid");
    InidScenario sc{InidFamily(real(o.s), std::move(parents)), std::nullopt};
    if (!o.window.empty()) sc.window = real(o.window);
    return estimate_to_json(estimate_pcon(sc, float_profile(o), mc));
  }
  ParentDistribution parent = resolve_parent(o);
  ThresholdProfile profile = float_profile(o);
  std::optional<std::size_t> implied;
  if (!profile.is_homogeneous()) implied = profile.values().size() - 1;
  const std::size_t n = robot_count(o, implied);
  if (!o.R.empty()) return estimate_to_json(estimate_pcon(CfScenario{parent, n, real(o.R)}, profile, mc));
  return estimate_to_json(estimate_pcon(IidScenario{parent, n}, profile, mc));
}

Json cmd_mcmc(const Options& o) {
  require(!o.s.empty(), "--s is required");
  ThresholdProfile profile = float_profile(o);
  std::optional<std::size_t> implied;
  if (!profile.is_homogeneous()) implied = profile.values().size() - 1;
  const std::size_t n = robot_count(o, implied);
  HitAndRunOptions h{o.burn_in, o.thin, o.count};
  auto samples = hit_and_run_connected(real(o.s), profile, n, h, rng_of(o));
  return Json{{"samples", samples}, {"seed", rng_to_json(rng_of(o))}};
}

Json cmd_park(const Options& o) {
  require(!o.s.empty(), "--s is required");
  const std::string r_text = o.R.empty() ? "1" : o.R;
  if (o.exact) {
    CounterRng rng(rng_of(o));
    auto r = simulate_parking_exact(parse_rational(o.s), parse_rational(r_text), rng);
    Json j{{"count", r.count}, {"density", r.density}};
    if (o.positions) {
      Json p = Json::array();
      for (const auto& x : r.positions) p.push_back(rational_to_json(x));
      j["positions"] = p;
    }
    return j;
  }
  const double s = real(o.s), R = real(r_text);
  Json j;
  if (o.trials == 1) {
    CounterRng rng(rng_of(o));
    auto r = simulate_parking(s, R, rng);
    j = Json{{"count", r.count}, {"density", r.density}};
    if (o.positions) j["positions"] = r.positions;
  } else {
    j["density"] = estimate_to_json(jamming_density_estimate(s, R, mc_of(o)));
  }
  if (o.bins > 0) {
    auto h = empirical_position_histogram(s, R, o.bins, mc_of(o));
    j["histogram"] = Json{{"lo", h.lo}, {"hi", h.hi},          {"bin_width", h.bin_width},
                          {"mass", h.mass}, {"density", h.density}, {"stderr", h.stderr_}};
  }
  return j;
}

Json cmd_dynamics(const Options& o) {
  Json j = Json::object();
  if (!o.rates.empty()) {
    auto r = real_list(o.rates);
    require(r.size() == 2, "--rates takes r_AD,r_DA");
    PopulationState start;
    if (!o.start.empty()) {
      auto st = real_list(o.start);
      require(st.size() == 2, "--start takes N_A,N_D");
      start = {st[0], st[1], r[0], r[1]};
    } else {
      require(!o.total.empty(), "--total or --start is required with --rates");
      start = {real(o.total), 0, r[0], r[1]};
    }
    if (!o.total.empty()) require(real(o.total) == start.total(), "--total disagrees with --start");
    auto eq = equilibrium(start.total(), r[0], r[1]);
    j["equilibrium"] = Json{{"attached", eq.attached}, {"detached", eq.detached}};
    if (!o.t.empty()) {
      auto now = population_trajectory(start, real(o.t));
      j["trajectory"] = Json{{"t", real(o.t)}, {"attached", now.attached}, {"detached", now.detached}};
    }
  }
  if (!o.d_over_s.empty()) {
    const double r = real(o.d_over_s);
    j["n"] = estimate_n_for_connectivity(r);
    if (r <= 1 / std::numbers::e) j["n_lambert"] = estimate_n_lambert(r);
  }
  if (o.stopping) {
    ParentDistribution parent = resolve_parent(o);
    require(!o.d.empty(), "--d is required with --stopping");
    auto sim = estimate_stopping_time(parent, real(o.d), o.cap, o.horizon, mc_of(o));
    Json pmf = Json::array();
    for (const auto& e : sim.pmf) pmf.push_back(e.mean);
    j["simulated"] = Json{{"mean", estimate_to_json(sim.mean)}, {"pmf", pmf}};
    if (std::holds_alternative<UniformParent>(parent.kind())) {
      std::vector<double> p;
      for (std::size_t i = 0; i <= o.horizon; ++i)
        p.push_back(to_double(pcon_uniform(parent.exact_support(), parse_rational(o.d), i)));
      PconSequence seq(p);
      auto rep = expected_stopping_time_formula(seq, o.horizon);
      j["formula"] = Json{{"pmf", stopping_pmf_formula(seq, o.horizon)},
                          {"mean", rep.mean},
                          {"mass", rep.mass},
                          {"reciprocal_bound", rep.reciprocal_bound},
                          {"geometric_mean", rep.geometric_mean},
                          {"horizon_warning", rep.horizon_warning}};
    }
  }
  require(!j.empty(), "nothing to do: give --rates, --d-over-s or --stopping");
  return j;
}

Json cmd_parents(const Options& o) {
  ParentDistribution p = resolve_parent(o);
  Json j{{"parent", parent_to_json(p)}};
  const bool exact = p.has_exact_form();
  if (!o.pdf.empty()) j["pdf"] = exact ? exact_result(p.pdf_at(parse_rational(o.pdf))) : Json(p.pdf_at(real(o.pdf)));
  if (!o.cdf.empty()) j["cdf"] = exact ? exact_result(p.cdf_at(parse_rational(o.cdf))) : Json(p.cdf_at(real(o.cdf)));
  if (!o.inverse.empty()) j["inverse_cdf"] = p.inverse_cdf(real(o.inverse));
  if (!o.orderstat.empty()) {
    auto v = parse_rational_list(o.orderstat);
    require(v.size() == 3 && v[0].get_den() == 1 && v[1].get_den() == 1 && sgn(v[0]) >= 0 && sgn(v[1]) >= 0,
            "--orderstat takes n,k,t with integer n and k");
    const auto n = static_cast<std::size_t>(v[0].get_num().get_ui());
    const auto k = static_cast<std::size_t>(v[1].get_num().get_ui());
    j["orderstat_cdf"] = exact ? exact_result(order_statistic_cdf(p, n, k, v[2]))
                               : Json(order_statistic_cdf(p, n, k, to_double(v[2])));
  }
  if (!o.mass.empty()) {
    auto v = parse_rational_list(o.mass);
    require(v.size() == 3 && v[0].get_den() == 1 && sgn(v[0]) >= 0, "--mass takes n,a,b with integer n");
    const auto n = static_cast<std::size_t>(v[0].get_num().get_ui());
    j["interval_mass"] = exact ? exact_result(interval_mass(p, n, v[1], v[2]))
                               : Json(interval_mass(p, n, to_double(v[1]), to_double(v[2])));
  }
  if (o.to_poly) {
    auto poly = p.density_polynomial();
    require(poly.has_value(), "a " + p.type_name() + " parent has no single polynomial density");
    j["polynomial"] = polynomial_to_json(RationalPolynomial::from_univariate(*poly));
  }
  return j;
}

Json cmd_stats(const Options& o) {
  ParentDistribution parent = resolve_parent(o);
  require(!o.d.empty(), "--d is required");
  const std::size_t n = robot_count(o);
  auto g = estimate_graph_stats(parent, real(o.d), n, mc_of(o));
  Json j{{"connected", estimate_to_json(g.connected)},
         {"components", estimate_to_json(g.components)},
         {"coverage", estimate_to_json(g.coverage)},
         {"edges", estimate_to_json(g.edges)}};
  if (std::holds_alternative<UniformParent>(parent.kind())) {
    const Rational s = parent.exact_support(), d = parse_rational(o.d);
    j["exact"] = Json{{"connected", exact_result(pcon_uniform(s, d, n))},
                      {"components", exact_result(expected_components_uniform(s, d, n))},
                      {"coverage", exact_result(expected_coverage_uniform(s, d, n))},
                      {"edges", exact_result(expected_edges_uniform(s, d, n))}};
  }
  return j;
}

// ---------------------------------------------------------------------------

std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print(const Json& j, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    out << "field,value\n";
    const Json flat = j.flatten();
    for (const auto& [key, value] : flat.items()) {
      std::string k = key.substr(1);
      for (auto& c : k)
        if (c == '/') c = '.';
      out << k << ',' << csv_cell(value) << '\n';
    }
  } else {
    out << j.dump() << '\n';
  }
}

void add_instance(CLI::App* c, Options& o) {
  c->add_option("--s", o.s, "boundary length (rational)");
  c->add_option("--d", o.d, "communication threshold (rational)");
  c->add_option("--n", o.n, "robot count");
  c->add_option("--per-slack", o.per_slack, "comma-separated threshold per slack");
  c->add_flag("--uniform", o.uniform, "uniform parent on [0, s] (default)");
  c->add_option("--parent", o.parent, "parent JSON, or @file.json");
  c->add_option("--beta", o.beta, "integer Beta parent a,b on [0, s]");
}

void add_random(CLI::App* c, Options& o) {
  c->add_option("--seed", o.seed, "64-bit seed (required)");
  c->add_option("--stream", o.stream, "64-bit stream id");
  c->add_option("--trials", o.trials, "Monte Carlo trials");
}

}  // namespace

Json args_to_spec(const std::vector<std::string>& args) {
  Json j = Json::object();
  std::size_t i = 0;
  if (!args.empty() && args[0].rfind("--", 0) != 0) j["command"] = args[i++];
  for (; i < args.size(); ++i) {
    require(args[i].rfind("--", 0) == 0, "unexpected argument \"" + args[i] + "\"");
    std::string key = args[i].substr(2);
    if (i + 1 < args.size() && args[i + 1].rfind("--", 0) != 0)
      j[key] = args[++i];
    else
      j[key] = true;
  }
  return j;
}

std::vector<std::string> spec_to_args(const Json& spec) {
  require(spec.is_object(), "a run spec is a JSON object");
  std::vector<std::string> args;
  if (spec.contains("command")) {
    require(spec.at("command").is_string(), "\"command\" must be a string");
    args.push_back(spec.at("command").get<std::string>());
  }
  for (const auto& [key, value] : spec.items()) {
    if (key == "command") continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + key);
      continue;
    }
    args.push_back("--" + key);
    if (value.is_string()) {
      args.push_back(value.get<std::string>());
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), [](const Json& x) { return !x.is_structured(); })) {
      std::string joined;
      for (const auto& x : value) joined += (joined.empty() ? "" : ",") + csv_cell(x);
      args.push_back(joined);
    } else {
      args.push_back(value.dump());
    }
  }
  return args;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  if (const char* env = std::getenv("BCOV_WORKERS")) {
    try {
      o.workers = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      err << "error: BCOV_WORKERS must be a positive integer\n";
      return 2;
    }
  }

  try {
    // expand --spec file.json into the equivalent flags
    std::vector<std::string> args;
    for (std::size_t i = 0; i < raw_args.size(); ++i) {
      if (raw_args[i] == "--spec") {
        require(i + 1 < raw_args.size(), "--spec needs a file name");
        Json spec = read_json_arg("@" + raw_args[++i]);
        auto extra = spec_to_args(spec);
        if (spec.contains("command") && !args.empty() && args[0].rfind("--", 0) != 0) {
          require(args[0] == extra[0], "--spec command differs from the command line");
          extra.erase(extra.begin());
        }
        args.insert(args.end(), extra.begin(), extra.end());
      } else {
        args.push_back(raw_args[i]);
      }
    }

    CLI::App app{"Connectivity statistics of 1-D stochastic boundary coverage", "bcov"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--workers", o.workers, "estimator threads (default $BCOV_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    auto* pcon = app.add_subcommand("pcon", "exact probability of connectivity");
    add_instance(pcon, o);
    pcon->add_option("--R", o.R, "robot diameter (collision-free robots)");
    pcon->add_flag("--by-simplices", o.by_simplices, "integrate compatible simplices directly");

    auto* volume = app.add_subcommand("volume", "exact volume of {a.x <= b} inside a cuboid");
    volume->add_option("--a", o.a, "halfspace normal, comma-separated")->required();
    volume->add_option("--b", o.b, "halfspace offset")->required();
    volume->add_option("--cuboid", o.cuboid, "cuboid upper bounds (default unit cube)");
    volume->add_flag("--q", o.q, "print the signed vertex sum Q(b) instead");

    auto* expect = app.add_subcommand("expect", "exact expected components, coverage and edges (uniform parent)");
    expect->add_option("--s", o.s)->required();
    expect->add_option("--d", o.d)->required();
    expect->add_option("--n", o.n)->required();

    auto* sample = app.add_subcommand("sample", "Monte Carlo estimate of pcon");
    add_instance(sample, o);
    add_random(sample, o);
    sample->add_option("--R", o.R, "robot diameter (collision-free rejection sampling)");
    sample->add_option("--inid", o.inid, "JSON array of per-robot parents, or @file.json");
    sample->add_option("--window", o.window, "judge connectivity on [0, window] only (inid)");
    sample->add_option("--destinations", o.destinations, "noisy attachment: target positions");
    sample->add_option("--scale", o.scale, "noisy attachment: variance per unit travel");

    auto* mcmc = app.add_subcommand("mcmc", "hit-and-run samples of connected slack vectors");
    add_instance(mcmc, o);
    add_random(mcmc, o);
    mcmc->add_option("--burn-in", o.burn_in, "steps before the first sample (default 1000 n)");
    mcmc->add_option("--thin", o.thin, "steps between samples (default n)");
    mcmc->add_option("--count", o.count, "number of samples");

    auto* park = app.add_subcommand("park", "Renyi parking simulation");
    park->add_option("--s", o.s)->required();
    park->add_option("--R", o.R, "car length (default 1)");
    add_random(park, o);
    park->get_option("--trials")->default_val(1);
    park->add_option("--bins", o.bins, "also emit a left-endpoint histogram");
    park->add_flag("--positions", o.positions, "print car positions (single trial)");
    park->add_flag("--exact", o.exact, "rational arithmetic (s <= 50, single trial)");

    auto* dyn = app.add_subcommand("dynamics", "population model, size estimate and stopping time");
    dyn->add_option("--rates", o.rates, "r_AD,r_DA");
    dyn->add_option("--total", o.total, "total population");
    dyn->add_option("--start", o.start, "initial N_A,N_D (default all attached)");
    dyn->add_option("--t", o.t, "evaluation time");
    dyn->add_option("--d-over-s", o.d_over_s, "solve log(y)/y = d/s for n = y - 1");
    dyn->add_flag("--stopping", o.stopping, "sequential attachment stopping time");
    dyn->add_option("--horizon", o.horizon, "largest robot count reported");
    dyn->add_option("--cap", o.cap, "robot cap per simulated run");
    add_instance(dyn, o);
    add_random(dyn, o);

    auto* parents = app.add_subcommand("parents", "parent pdf/cdf and order statistics");
    add_instance(parents, o);
    parents->add_option("--pdf", o.pdf, "evaluate the pdf at t");
    parents->add_option("--cdf", o.cdf, "evaluate the cdf at t");
    parents->add_option("--inverse", o.inverse, "inverse cdf at u");
    parents->add_option("--orderstat", o.orderstat, "n,k,t: cdf of the k-th of n order statistics");
    parents->add_option("--mass", o.mass, "n,a,b: expected count of n points in [a, b]");
    parents->add_flag("--to-poly", o.to_poly, "print the density as a polynomial");

    auto* stats = app.add_subcommand("stats", "Monte Carlo graph statistics");
    add_instance(stats, o);
    add_random(stats, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }

    Json result;
    if (pcon->parsed()) result = cmd_pcon(o);
    else if (volume->parsed()) result = cmd_volume(o);
    else if (expect->parsed()) result = cmd_expect(o);
    else if (sample->parsed()) result = cmd_sample(o);
    else if (mcmc->parsed()) result = cmd_mcmc(o);
    else if (park->parsed()) result = cmd_park(o);
    else if (dyn->parsed()) result = cmd_dynamics(o);
    else if (parents->parsed()) result = cmd_parents(o);
    else result = cmd_stats(o);
    print(result, o.format, out);
    return 0;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace bcov::cli
