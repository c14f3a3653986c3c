// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "bcov/bcov.hpp"
#include "oracles.hpp"

using namespace bcov;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Rational q(const char* t) { return parse_rational(t); }
Rational r(long a, long b = 1) { return make_rational(a, b); }
Rational ul(std::size_t n) { return Rational(static_cast<unsigned long>(n)); }

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::printf("[%s] AC%d %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
}

// Every randomized run goes through here: it is executed with 1 and 4 workers
// and twice with the same seed; all serializations must be identical.
std::vector<std::string> determinism_log;
bool deterministic = true;

template <class F>
auto seeded(const std::string& label, F run) {
  auto a = run(1u);
  std::string sa = a.first, sb = run(1u).first, sc = run(4u).first;
  bool same = sa == sb && sa == sc;
  if (!same) deterministic = false;
  determinism_log.push_back(label + (same ? " ok" : " DIFFERS"));
  return a.second;
}

std::string dump(const Estimate& e) { return estimate_to_json(e).dump(); }

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// ---------------------------------------------------------------------------

void ac1() {
  bool ok = true;
  double worst_ms = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    auto t0 = Clock::now();
    Rational p = pcon_uniform(r(4, 3), 1, n);
    worst_ms = std::max(worst_ms, 1000 * seconds_since(t0));
    ok = ok && p == 1 - ul(n + 1) / pow(Rational(4), n);
  }
  report(1, ok && worst_ms < 1, fmt("closed-form family n=1..12 exact, slowest call %.3f ms", worst_ms));
}

void ac2() {
  const Rational ss[] = {r(1), r(3, 2), r(7, 3), r(5), r(10)};
  const Rational fr[] = {r(1, 20), r(1, 7), r(1, 4), r(1, 3), r(9, 20), r(1, 2), r(2, 3), r(9, 10), r(1), r(6, 5)};
  int points = 0, bad = 0;
  for (const auto& s : ss)
    for (std::size_t n : {1, 3}) {
      for (const auto& f : fr) {
        Rational d = s * f;
        Rational p = pcon_uniform(s, d, n);
        bool empty = d <= s / ul(n + 1), full = d >= s;
        if ((p == 0) != empty || (p == 1) != full) ++bad;
        ++points;
      }
    }
  report(2, bad == 0 && points == 100, fmt("%.0f grid points, %.0f violations", points, bad));
}

void ac3() {
  Rational exact = pcon_uniform(1, q("2/5"), 2);
  auto t0 = Clock::now();
  Estimate e = seeded("AC3 pcon MC", [](unsigned w) {
    auto est = estimate_pcon(IidScenario{ParentDistribution::uniform(1), 2}, ThresholdProfile::homogeneous(0.4),
                             {1000000, {3, 0}, w});
    return std::pair{dump(est), est};
  });
  double secs = seconds_since(t0) / 3;
  report(3, exact == r(1, 25) && e.agrees_with(0.04, 3) && secs < 5,
         fmt("exact 1/25, MC %.6f +- %.6f, %.2f s per run", e.mean, e.stderr_, secs));
}

void ac4() {
  bool ok = true;
  for (std::size_t n = 0; n <= 12; ++n)
    for (const char* d : {"0.05", "0.15", "1/3", "0.5", "0.75", "1"}) {
      std::vector<Rational> dv(n + 1, q(d));
      ok = ok && pcon_per_slack_uniform(1, dv) == pcon_uniform(1, q(d), n);
    }
  std::vector<Rational> ex{q("0.5"), q("0.7")};
  Rational p = pcon_per_slack_uniform(1, ex);
  report(4, ok && p == r(1, 5), "equal thresholds collapse for n<=12; (0.5,0.7) -> " + to_fraction_string(p));
}

void ac5() {
  Rational ex = halfspace_cuboid_volume({{1, 2}, 2}, Hypercuboid::unit(2));
  std::mt19937_64 gen(5);
  int agree = 0, qsum_ok = 0;
  const int cases = 50;
  double worst_z = 0;
  for (int t = 0; t < cases; ++t) {
    std::size_t n = 1 + gen() % 8;
    std::vector<Rational> a(n);
    Rational reach = 0;
    for (auto& x : a) {
      x = r(1 + gen() % 12, 1 + gen() % 5);
      reach += x;
    }
    Rational b = reach * r(5 + gen() % 90, 100);
    Rational vol = halfspace_cuboid_volume({a, b}, Hypercuboid::unit(n));
    Rational prod = 1;
    for (const auto& x : a) prod *= x;
    if (q_sum(a, b) / (Rational(factorial(n)) * prod) == vol) ++qsum_ok;
    std::vector<double> ad;
    for (const auto& x : a) ad.push_back(to_double(x));
    const double bd = to_double(b);
    Estimate e = seeded("AC5 halfspace " + std::to_string(t), [&](unsigned w) {
      auto m = run_trials(1000000, {5, static_cast<std::uint64_t>(t)}, w, 1, [&](CounterRng& g, std::span<double> out) {
        double acc = 0;
        for (double c : ad) acc += c * g.uniform();
        out[0] = acc <= bd;
      });
      auto est = m[0].to_estimate({5, static_cast<std::uint64_t>(t)});
      return std::pair{dump(est), est};
    });
    if (e.agrees_with(to_double(vol), 3)) ++agree;
    if (e.stderr_ > 0) worst_z = std::max(worst_z, std::abs(e.mean - to_double(vol)) / e.stderr_);
  }
  report(5, ex == r(3, 4) && agree == cases && qsum_ok == cases,
         "a=(1,2),b=2 -> " + to_fraction_string(ex) + fmt("; MC within 3 se on %.0f/%.0f (max |z| %.2f)", agree, cases, worst_z) +
             fmt("; Q(b)/(n! prod a) exact on %.0f", qsum_ok));
}

void ac6() {
  bool table = monomial_canonical_integral(std::vector<unsigned>{0, 0}) == r(1, 2) &&
               monomial_canonical_integral(std::vector<unsigned>{1, 1}) == r(1, 24) &&
               monomial_canonical_integral(std::vector<unsigned>{2, 0}) == r(1, 12);
  std::mt19937_64 gen(6);
  int cases = 0, agree = 0;
  while (cases < 20) {
    std::size_t n = 1 + gen() % 5;
    SimplexND sx;
    for (std::size_t v = 0; v <= n; ++v) {
      std::vector<Rational> p(n);
      for (auto& c : p) c = r(static_cast<long>(gen() % 9) - 4, 1 + gen() % 2);
      sx.vertices.push_back(p);
    }
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = sx.vertices[j + 1][i] - sx.vertices[0][i];
    Rational vol = abs(determinant(m)) / Rational(factorial(n));
    if (vol == 0) continue;
    RationalPolynomial poly(n);
    std::size_t terms = 1 + gen() % 5;
    for (std::size_t k = 0; k < terms; ++k) {
      Exponents e(n, 0);
      unsigned deg = static_cast<unsigned>(gen() % 5);
      for (unsigned u = 0; u < deg; ++u) ++e[gen() % n];
      poly.add_term(e, r(static_cast<long>(gen() % 11) - 5, 1 + gen() % 3));
    }
    Rational exact = integrate_over_simplex(poly, sx);
    std::vector<std::vector<double>> vd;
    for (const auto& v : sx.vertices) {
      std::vector<double> row;
      for (const auto& c : v) row.push_back(to_double(c));
      vd.push_back(row);
    }
    const double vold = to_double(vol);
    const int id = cases;
    Estimate e = seeded("AC6 simplex " + std::to_string(id), [&](unsigned w) {
      auto mm = run_trials(200000, {6, static_cast<std::uint64_t>(id)}, w, 1, [&](CounterRng& g, std::span<double> out) {
        std::vector<double> lam(n + 1), x(n, 0.0);
        double sum = 0;
        for (auto& l : lam) sum += (l = g.exponential());
        for (std::size_t v = 0; v <= n; ++v)
          for (std::size_t i = 0; i < n; ++i) x[i] += lam[v] / sum * vd[v][i];
        out[0] = vold * poly.evaluate(std::span<const double>(x));
      });
      auto est = mm[0].to_estimate({6, static_cast<std::uint64_t>(id)});
      return std::pair{dump(est), est};
    });
    if (e.agrees_with(to_double(exact), 3)) ++agree;
    ++cases;
  }
  report(6, table && agree == cases,
         std::string("monomial table ") + (table ? "exact" : "WRONG") +
             fmt("; random polynomials over random simplices within 3 se on %.0f/%.0f", agree, cases));
}

void ac7() {
  bool ok = true;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const char* d : {"0.2", "0.35", "0.5", "0.8"})
      ok = ok && pcon_polynomial_parent(UniPoly::constant(1), 1, q(d), n) == pcon_uniform(1, q(d), n);
  Rational b = beta_pcon(2, 1, 1, q("0.6"), 1);
  report(7, ok && b == r(1, 5), std::string("constant density ") + (ok ? "matches" : "DIFFERS") +
                                    " for n<=6; BetaInt(2,1) -> " + to_fraction_string(b));
}

void ac8() {
  struct Inst {
    const char* s;
    const char* d;
    std::size_t n;
  };
  const Inst pinned[] = {{"1", "0.1", 3},  {"1", "0.2", 5},  {"1", "0.3", 2},  {"1", "0.4", 2},  {"1", "0.5", 1},
                         {"1", "0.25", 8}, {"1", "0.15", 10}, {"1", "0.6", 4}, {"1", "1.2", 3},  {"2", "0.5", 4},
                         {"2", "0.3", 6},  {"2", "1", 2},    {"2", "0.7", 7},  {"3", "1", 3},    {"3", "0.45", 9},
                         {"5", "1", 5},    {"5", "2", 2},    {"5", "0.8", 10}, {"4/3", "1", 2},  {"10", "3", 6}};
  int agree = 0, checks = 0;
  int id = 0;
  for (const auto& in : pinned) {
    Rational s = q(in.s), d = q(in.d);
    auto g = seeded("AC8 stats " + std::to_string(id), [&](unsigned w) {
      auto est = estimate_graph_stats(ParentDistribution::uniform(s), to_double(d), in.n,
                                      {1000000, {8, static_cast<std::uint64_t>(id)}, w});
      std::string sig = dump(est.components) + dump(est.coverage) + dump(est.edges);
      return std::pair{sig, est};
    });
    agree += g.components.agrees_with(to_double(expected_components_uniform(s, d, in.n)), 3);
    agree += g.coverage.agrees_with(to_double(expected_coverage_uniform(s, d, in.n)), 3);
    agree += g.edges.agrees_with(to_double(expected_edges_uniform(s, d, in.n)), 3);
    checks += 3;
    ++id;
  }
  report(8, agree == checks, fmt("components/coverage/edges within 3 se on %.0f/%.0f checks (20 instances, 1e6 trials)",
                                 agree, checks));
}

void ac9() {
  auto t0 = Clock::now();
  Estimate e = seeded("AC9 parking", [](unsigned w) {
    auto est = jamming_density_estimate(1000, 1, {200, {9, 0}, w});
    return std::pair{dump(est), est};
  });
  double secs = seconds_since(t0) / 3;
  report(9, std::abs(e.mean - 0.7476) <= 0.005 && secs < 30,
         fmt("mean density %.5f over 200 trials, %.3f s per run", e.mean, secs));
}

void ac10() {
  Rational exact = pcon_cf_uniform(3, q("1.4"), 1, 2);
  Estimate e = seeded("AC10 CF MC", [](unsigned w) {
    auto est = estimate_pcon(CfScenario{ParentDistribution::uniform(3), 2, 1.0}, ThresholdProfile::homogeneous(1.4),
                             {1000000, {10, 0}, w});
    return std::pair{dump(est), est};
  });
  bool reduce = true;
  for (std::size_t n = 0; n <= 8; ++n)
    for (const char* d : {"0.1", "0.3", "0.55", "1.1"}) reduce = reduce && pcon_cf_uniform(1, q(d), 0, n) == pcon_uniform(1, q(d), n);
  report(10, e.agrees_with(to_double(exact), 3) && reduce,
         "exact " + to_fraction_string(exact) + fmt(" (%.6f), MC %.6f +- %.6f", to_double(exact), e.mean, e.stderr_) +
             "; R=0 " + (reduce ? "reduces exactly" : "DIFFERS"));
}

void ac11() {
  bool ok = true;
  std::size_t emitted = 0, inside = 0;
  double worst = 0;
  for (std::size_t n : {1, 2, 3}) {
    std::vector<double> th;
    for (std::size_t i = 0; i <= n; ++i) th.push_back(0.4 + 0.35 / (n + 1) + 0.07 * i);
    const double s = 1;
    auto profile = ThresholdProfile::per_slack(th);
    HitAndRunOptions h;
    h.count = 100000;
    auto pts = seeded("AC11 hit-and-run n=" + std::to_string(n), [&](unsigned) {
      auto p = hit_and_run_connected(s, profile, n, h, {11, n});
      Json j = p;
      return std::pair{j.dump(), p};
    });
    CounterRng g({11, 100 + n});
    std::vector<std::vector<double>> oracle_cols(n + 1), chain_cols(n + 1);
    std::size_t kept = 0;
    while (kept < 100000) {
      auto sl = sample_uniform_slacks(s, n, g);
      if (!slacks_connected<double>(sl, profile)) continue;
      for (std::size_t i = 0; i <= n; ++i) oracle_cols[i].push_back(sl[i]);
      ++kept;
    }
    for (const auto& p : pts) {
      ++emitted;
      inside += slacks_connected<double>(p, profile);
      for (std::size_t i = 0; i <= n; ++i) chain_cols[i].push_back(p[i]);
    }
    for (std::size_t i = 0; i <= n; ++i) {
      double ks = oracle::ks_two_sample(chain_cols[i], oracle_cols[i]);
      worst = std::max(worst, ks);
      ok = ok && ks <= 0.05;
    }
  }
  report(11, ok && emitted == inside,
         fmt("worst marginal KS %.4f; %.0f of %.0f emitted points connected", worst, inside, emitted));
}

void ac12() {
  auto eq = equilibrium(100, 1, 3);
  bool exact = eq.attached == 75 && eq.detached == 25;
  double worst = 0;
  PopulationState start{90, 10, 1, 3};
  for (int k = 0; k <= 100; ++k) {
    auto x = population_trajectory(start, 0.05 * k);
    worst = std::max(worst, std::abs(x.attached + x.detached - 100));
  }
  double n = estimate_n_for_connectivity(std::log(3.0) / 3);
  report(12, exact && worst <= 1e-12 && std::abs(n - 2) <= 1e-9,
         fmt("equilibrium (%.0f, %.0f); conservation error %.1e; ", eq.attached, eq.detached, worst) +
             fmt("n(ln 3/3) = %.12f", n));
}

void ac13() {
  auto est = seeded("AC13 stopping time", [](unsigned w) {
    auto e = estimate_stopping_time(ParentDistribution::uniform(1), 0.6, 100000, 3, {1000000, {13, 0}, w});
    std::string sig = dump(e.mean);
    for (const auto& p : e.pmf) sig += dump(p);
    return std::pair{sig, e};
  });
  auto full = seeded("AC13 d >= s", [](unsigned w) {
    auto e = estimate_stopping_time(ParentDistribution::uniform(1), 1.0, 10, 1, {10000, {13, 1}, w});
    return std::pair{dump(e.mean), e};
  });
  report(13, est.pmf[1].agrees_with(0.2, 3) && full.mean.mean == 0 && full.mean.stderr_ == 0,
         fmt("P(tau=1) = %.5f +- %.5f; d >= s mean tau %.1f", est.pmf[1].mean, est.pmf[1].stderr_, full.mean.mean));
}

void ac14() {
  std::mt19937_64 gen(14);
  int agree = 0;
  const int cases = 10;
  std::ostringstream lines;
  for (int t = 0; t < cases; ++t) {
    std::size_t n = 1 + gen() % 4;
    std::vector<long> w(n + 1);
    long total = 0;
    for (auto& x : w) total += (x = 1 + static_cast<long>(gen() % 9));
    std::vector<Rational> masses;
    for (long x : w) masses.push_back(r(x, total));
    auto red = inid_from_pwu(masses);
    const double s = static_cast<double>(n + 1);
    const double d = s / (n + 1) + (s - s / (n + 1)) * (0.2 + 0.6 * static_cast<double>(gen() % 1000) / 1000);
    auto pair = seeded("AC14 inid " + std::to_string(t), [&](unsigned wk) {
      McOptions o{200000, {14, static_cast<std::uint64_t>(t)}, wk};
      auto src = estimate_pcon(IidScenario{red.source, n}, ThresholdProfile::homogeneous(d), o);
      auto inid = estimate_pcon(InidScenario{red.family, red.window}, ThresholdProfile::homogeneous(d), o);
      return std::pair{dump(src) + dump(inid), std::pair{src, inid}};
    });
    const auto& [src, inid] = pair;
    double se = std::hypot(src.stderr_, inid.stderr_);
    bool ok = std::abs(src.mean - inid.mean) <= 3 * se;
    agree += ok;
    lines << fmt("\n      n=%.0f d=%.3f", static_cast<double>(n), d) << fmt(" source %.4f inid %.4f", src.mean, inid.mean)
          << (ok ? "" : " (differs)");
  }
  // halfspace correspondence
  std::vector<Rational> l{r(1), r(3, 2), r(2)};
  Rational b = r(5, 2);
  auto hs = pwu_from_halfspace(l, b);
  Estimate mc = seeded("AC14 halfspace", [&](unsigned wk) {
    auto est = estimate_pcon(IidScenario{hs.parent, hs.n}, ThresholdProfile::homogeneous(to_double(hs.d)),
                             {200000, {14, 99}, wk});
    return std::pair{dump(est), est};
  });
  bool corr = mc.agrees_with(to_double(hs.claimed_pcon), 3);
  report(14, agree == cases,
         fmt("inid construction vs source PWU within 3 se on %.0f/%.0f instances", agree, cases) + lines.str() +
             "\n      halfspace correspondence: claimed " + to_fraction_string(hs.claimed_pcon) +
             fmt(" (%.4f), MC pcon %.4f +- %.4f -> ", to_double(hs.claimed_pcon), mc.mean, mc.stderr_) +
             (corr ? "confirmed" : "refuted"));
}

void ac15() {
  bool cli_ok = true;
  for (const std::vector<std::string>& base :
       {std::vector<std::string>{"sample", "--s", "1", "--d", "2/5", "--n", "2", "--seed", "15", "--trials", "200000"},
        std::vector<std::string>{"park", "--s", "1000", "--trials", "50", "--seed", "15"},
        std::vector<std::string>{"stats", "--s", "1", "--d", "0.3", "--n", "5", "--seed", "15", "--trials", "100000"},
        std::vector<std::string>{"mcmc", "--s", "1", "--d", "0.45", "--n", "3", "--count", "200", "--seed", "15"}}) {
    std::string first;
    for (const char* w : {"1", "4", "1"}) {
      auto args = base;
      args.insert(args.end(), {"--workers", w});
      std::ostringstream out, err;
      int code = cli::run(args, out, err);
      if (code != 0) cli_ok = false;
      if (first.empty())
        first = out.str();
      else if (out.str() != first)
        cli_ok = false;
    }
  }
  std::size_t differ = 0;
  for (const auto& l : determinism_log) differ += l.ends_with("DIFFERS");
  report(15, deterministic && cli_ok,
         fmt("%.0f library runs repeated with workers 1,1,4: %.0f differ; CLI outputs ",
             static_cast<double>(determinism_log.size()), static_cast<double>(differ)) +
             (cli_ok ? "byte-identical" : "DIFFER"));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> all{ac1, ac2,  ac3,  ac4,  ac5,  ac6,  ac7, ac8,
                                               ac9, ac10, ac11, ac12, ac13, ac14, ac15};
  for (const auto& f : all) {
    try {
      f();
    } catch (const std::exception& e) {
      ++failures;
      std::printf("[FAIL] exception: %s\n", e.what());
    }
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
