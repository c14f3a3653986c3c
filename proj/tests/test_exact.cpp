#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "bcov/exact.hpp"
#include "bcov/geometry.hpp"
#include "oracles.hpp"

using namespace bcov;

namespace {

Rational q(const char* t) { return parse_rational(t); }
Rational r(long a, long b = 1) { return make_rational(a, b); }
Rational ul(std::size_t n) { return Rational(static_cast<unsigned long>(n)); }

// collision-free pair on [0, s]: x1 >= 0, x2 - x1 >= R, x2 <= s - R
Rational pcon2_cf_oracle(const Rational& s, const Rational& d, const Rational& R) {
  oracle::Polygon p{{0, R}, {s - 2 * R, s - R}, {0, s - R}};
  const Rational full = oracle::area(p);
  p = oracle::clip(p, 1, 0, d);
  p = oracle::clip(p, -1, 1, d);
  p = oracle::clip(p, 0, -1, d - s);
  return oracle::area(p) / full;
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("relative simplex volume") {
    CHECK(relative_simplex_volume(1, 2) == r(1, 2));
    CHECK(relative_simplex_volume(2, 3) == r(4, 3));
    CHECK(relative_simplex_volume(1, 0) == 1);
  }

  TEST_CASE("pcon_uniform examples") {
    CHECK(pcon_uniform(r(4, 3), 1, 2) == r(13, 16));
    CHECK(pcon_uniform(1, q("0.6"), 1) == r(1, 5));
    CHECK(pcon_uniform(1, q("0.4"), 2) == r(1, 25));
    for (std::size_t n = 1; n <= 12; ++n)
      CHECK(pcon_uniform(r(4, 3), 1, n) == 1 - ul(n + 1) / pow(Rational(4), n));
    CHECK(pcon_uniform(2, 1, 0) == 0);
    CHECK(pcon_uniform(1, 1, 0) == 1);
  }

  TEST_CASE("pcon_uniform matches the polygon oracle for two robots") {
    std::mt19937_64 gen(21);
    for (int t = 0; t < 200; ++t) {
      Rational s = r(1 + gen() % 40, 1 + gen() % 7);
      Rational d = s * r(1 + gen() % 120, 100);
      CHECK(pcon_uniform(s, d, 2) == oracle::pcon2_uniform(s, d, d, d));
      CHECK(pcon_uniform(s, d, 1) == oracle::pcon1_uniform(s, d, d));
    }
  }

  TEST_CASE("regimes and monotonicity") {
    std::mt19937_64 gen(4);
    for (int t = 0; t < 100; ++t) {
      std::size_t n = gen() % 9;
      Rational s = r(1 + gen() % 20, 1 + gen() % 4);
      Rational d = s * r(1 + gen() % 130, 100);
      Rational p = pcon_uniform(s, d, n);
      switch (d_regime(s, d, n)) {
        case Regime::Empty: CHECK(p == 0); break;
        case Regime::Full: CHECK(p == 1); break;
        case Regime::Partial:
          CHECK(sgn(p) > 0);
          CHECK(p < 1);
          break;
      }
      CHECK(pcon_uniform(s, d * r(11, 10), n) >= p);
      CHECK(pcon_uniform(s, d, n + 1) >= p);
    }
  }

  TEST_CASE("AC1-style timing") {
    auto t0 = std::chrono::steady_clock::now();
    for (std::size_t n = 1; n <= 12; ++n) (void)pcon_uniform(r(4, 3), 1, n);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    CHECK(ms < 50);
  }

  TEST_CASE("float evaluation of the alternating sum") {
    // relative agreement 1e-9 holds away from the Empty boundary; close to it
    // the alternating sum cancels and the float value is noise
    for (std::size_t n = 1; n <= 12; ++n)
      for (int k = 1; k <= 20; ++k) {
        Rational s = 1, d = r(k, 20);
        Rational exact = pcon_uniform(s, d, n);
        if (exact == 0 || exact == 1) continue;
        double dd = to_double(d), f = 0;
        for (std::size_t j = 1; j <= n + 1 && j * dd < 1; ++j)
          f += ((j % 2) ? 1.0 : -1.0) * to_double(Rational(binomial(n + 1, j))) * std::pow(1 - j * dd, n);
        f = 1 - f;
        double rel = std::abs(f - to_double(exact)) / to_double(exact);
        if (to_double(exact) > 1e-4) CHECK(rel <= 1e-9);
      }
  }

  TEST_CASE("per-slack inclusion-exclusion") {
    for (std::size_t n = 0; n <= 12; ++n)
      for (const char* d : {"0.07", "0.2", "1/3", "0.55", "1.1"}) {
        std::vector<Rational> dv(n + 1, q(d));
        CHECK(pcon_per_slack_uniform(1, dv) == pcon_uniform(1, q(d), n));
      }
    std::vector<Rational> ex{q("0.5"), q("0.7")};
    CHECK(pcon_per_slack_uniform(1, ex) == r(1, 5));
    std::vector<Rational> big{2, 3, q("1.5")};
    CHECK(pcon_per_slack_uniform(1, big) == 1);
  }

  TEST_CASE("per-slack matches the polygon oracle") {
    std::mt19937_64 gen(8);
    for (int t = 0; t < 300; ++t) {
      Rational s = r(1 + gen() % 30, 1 + gen() % 5);
      std::vector<Rational> d{s * r(1 + gen() % 110, 100), s * r(1 + gen() % 110, 100), s * r(1 + gen() % 110, 100)};
      CHECK(pcon_per_slack_uniform(s, d) == oracle::pcon2_uniform(s, d[0], d[1], d[2]));
      std::vector<Rational> d1{d[0], d[1]};
      CHECK(pcon_per_slack_uniform(s, d1) == oracle::pcon1_uniform(s, d[0], d[1]));
    }
  }

  TEST_CASE("per-slack permutation invariance and capacity") {
    std::vector<Rational> d{q("0.3"), q("0.15"), q("0.4"), q("0.22"), q("0.35")};
    Rational base = pcon_per_slack_uniform(1, d);
    std::sort(d.begin(), d.end());
    do {
      CHECK(pcon_per_slack_uniform(1, d) == base);
    } while (std::next_permutation(d.begin(), d.end()));
    std::vector<Rational> too_many(26, q("0.1"));
    CHECK_THROWS_AS(pcon_per_slack_uniform(1, too_many), CapacityError);
    std::vector<Rational> largest(25, q("0.1"));
    CHECK_NOTHROW(pcon_per_slack_uniform(1, largest));
    std::vector<Rational> bad{q("0.5"), 0};
    CHECK_THROWS_AS(pcon_per_slack_uniform(1, bad), DomainError);
  }

  TEST_CASE("halfspace volume examples") {
    CHECK(halfspace_cuboid_volume({{1}, r(1, 2)}, Hypercuboid::unit(1)) == r(1, 2));
    CHECK(halfspace_cuboid_volume({{1, 1}, 1}, Hypercuboid::unit(2)) == r(1, 2));
    CHECK(halfspace_cuboid_volume({{1, 2}, 2}, Hypercuboid::unit(2)) == r(3, 4));
    CHECK_THROWS_AS(halfspace_cuboid_volume({{1, 2}, 2}, Hypercuboid::unit(3)), DomainError);
    CHECK_THROWS_AS(halfspace_cuboid_volume({{1, -2}, 2}, Hypercuboid::unit(2)), DomainError);
  }

  TEST_CASE("halfspace volume matches the polygon oracle") {
    std::mt19937_64 gen(13);
    for (int t = 0; t < 300; ++t) {
      Rational a1 = r(1 + gen() % 9, 1 + gen() % 4), a2 = r(1 + gen() % 9, 1 + gen() % 4);
      Rational c1 = r(1 + gen() % 9, 1 + gen() % 3), c2 = r(1 + gen() % 9, 1 + gen() % 3);
      Rational b = r(1 + gen() % 60, 1 + gen() % 5);
      CHECK(halfspace_cuboid_volume({{a1, a2}, b}, {{c1, c2}}) == oracle::halfspace2(a1, a2, b, c1, c2));
    }
  }

  TEST_CASE("halfspace volume properties") {
    std::mt19937_64 gen(99);
    for (int t = 0; t < 60; ++t) {
      std::size_t n = 1 + gen() % 7;
      std::vector<Rational> a(n), c(n);
      Rational box = 1, reach = 0;
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = r(1 + gen() % 9, 1 + gen() % 4);
        c[i] = r(1 + gen() % 5, 1 + gen() % 3);
        box *= c[i];
        reach += a[i] * c[i];
      }
      Rational b = reach * r(1 + gen() % 120, 100);
      Rational v = halfspace_cuboid_volume({a, b}, {c});
      CHECK(sgn(v) >= 0);
      CHECK(v <= box);
      if (b >= reach) CHECK(v == box);
      Rational k = r(7, 3);
      std::vector<Rational> ak(a);
      for (auto& x : ak) x *= k;
      CHECK(halfspace_cuboid_volume({ak, b * k}, {c}) == v);
      // q_sum relation on the unit cube
      Rational unit = halfspace_cuboid_volume({a, b}, Hypercuboid::unit(n));
      Rational prod = 1;
      for (const auto& x : a) prod *= x;
      CHECK(q_sum(a, b) == Rational(factorial(n)) * prod * unit);
    }
  }

  TEST_CASE("q_sum examples") {
    std::vector<Rational> a11{1, 1}, a1{1};
    CHECK(q_sum(a11, 1) == 1);
    CHECK(q_sum(a11, 0) == 0);
    CHECK(q_sum(a11, -3) == 0);
    CHECK(q_sum(a1, 2) == 1);
    CHECK(q_sum(a1, 2, 1) == 1);
    CHECK_THROWS_AS(q_sum(a1, 2, 2), DomainError);
  }

  TEST_CASE("graph functional expectations") {
    CHECK(expected_components_uniform(1, 2, 5) == 1);
    CHECK(expected_components_uniform(1, q("0.5"), 1) == 2);
    CHECK(expected_components_uniform(1, q("0.4"), 2) == q("2.08"));
    CHECK(expected_coverage_uniform(1, 2, 3) == 1);
    CHECK(expected_coverage_uniform(1, q("0.5"), 1) == q("0.75"));
    CHECK(expected_coverage_uniform(1, q("0.25"), 3) == r(175, 256));
    CHECK(expected_edges_uniform(1, 2, 4) == 6);
    CHECK(expected_edges_uniform(1, q("0.5"), 2) == q("0.75"));
    CHECK(expected_edges_uniform(1, q("0.5"), 1) == 0);
    CHECK(expected_edges_uniform(1, q("0.5"), 0) == 0);
    // one robot: E[components] and E[coverage] by direct integration over x
    for (const char* d : {"0.1", "0.3", "0.5", "0.8"}) {
      Rational dd = q(d);
      // components = 1 + [x > d] + [1 - x > d]
      Rational comps = 1 + rmax(0, 1 - dd) + rmax(0, 1 - dd);
      CHECK(expected_components_uniform(1, dd, 1) == comps);
      // coverage = min(x, d) + min(1 - x, d); E = 2 (d - d^2 / 2) for d <= 1
      CHECK(expected_coverage_uniform(1, dd, 1) == 2 * (dd - dd * dd / 2));
    }
  }

  TEST_CASE("collision-free pcon") {
    for (std::size_t n = 0; n <= 6; ++n)
      for (const char* d : {"0.2", "0.45", "0.9"}) CHECK(pcon_cf_uniform(1, q(d), 0, n) == pcon_uniform(1, q(d), n));
    CHECK(pcon_cf_uniform(2, q("1.5"), 1, 2) == 1);
    CHECK(pcon_cf_uniform(2, q("0.5"), 1, 2) == 0);
    CHECK(pcon_cf_uniform(3, q("0.9"), 1, 2) == 0);
    CHECK_THROWS_AS(pcon_cf_uniform(3, q("1.4"), 1, 4), DomainError);
    CHECK(free_slack_thresholds(q("1.4"), 1, 2) == std::vector<Rational>{q("1.4"), q("0.4"), q("0.4")});
    std::mt19937_64 gen(31);
    for (int t = 0; t < 150; ++t) {
      Rational R = r(1 + gen() % 10, 10);
      Rational s = 2 * R + r(1 + gen() % 40, 10);
      Rational d = R + r(1 + gen() % 40, 10);
      CHECK(pcon_cf_uniform(s, d, R, 2) == pcon2_cf_oracle(s, d, R));
      // one robot: x uniform on [0, s - R], connected iff s - d <= x <= d
      Rational lo = rmax(0, s - d), hi = rmin(d, s - R);
      CHECK(pcon_cf_uniform(s, d, R, 1) == (hi > lo ? (hi - lo) / (s - R) : Rational(0)));
    }
  }

  TEST_CASE("bidirectional thresholds") {
    std::vector<Rational> ranges{q("0.3"), q("0.5"), q("0.2")};
    CHECK(bidirectional_slack_thresholds(ranges) == std::vector<Rational>{q("0.3"), q("0.3"), q("0.2"), q("0.2")});
  }
}
