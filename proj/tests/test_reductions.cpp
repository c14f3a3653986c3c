#include <doctest.h>

#include "bcov/montecarlo.hpp"
#include "bcov/reductions.hpp"

using namespace bcov;

namespace {
Rational r(long a, long b = 1) { return make_rational(a, b); }
}  // namespace

TEST_SUITE("reductions") {
  TEST_CASE("inid instance layout") {
    auto red = inid_from_pwu({r(1, 5), r(1, 2), r(3, 10)});
    CHECK(red.n == 2);
    CHECK(red.window == 3);
    CHECK(red.family.size() == 2);
    CHECK(red.family.length() == 4);
    CHECK(red.source.exact_support() == 3);
    CHECK(red.source.cdf_at(Rational(1)) == r(1, 5));
    CHECK(red.source.cdf_at(Rational(2)) == r(7, 10));
    const auto& first = red.family[0];
    CHECK(first.pdf_at(r(1, 2)) == r(1, 5));
    CHECK(first.pdf_at(r(3, 2)) == 0);
    CHECK(first.pdf_at(r(7, 2)) == r(4, 5));
    const auto& second = red.family[1];
    CHECK(second.pdf_at(r(1, 2)) == 0);
    CHECK(second.pdf_at(r(3, 2)) == r(1, 2));
    CHECK(second.cdf_at(Rational(3)) == r(1, 2));
    CHECK(second.exact_support() == 4);
  }

  TEST_CASE("inid instance validation") {
    CHECK_THROWS_AS(inid_from_pwu({1}), DomainError);
    CHECK_THROWS_AS(inid_from_pwu({r(1, 2), r(1, 3)}), DomainError);
    CHECK_THROWS_AS(inid_from_pwu({r(3, 2), r(-1, 2)}), DomainError);
    CHECK_NOTHROW(inid_from_pwu({0, 1}));
  }

  TEST_CASE("windowed inid instance with one robot") {
    // robot lands in [0, 1] with probability p_1 and must sit in [s - d, 1]
    auto red = inid_from_pwu({r(1, 2), r(1, 2)});
    McOptions o{100000, {31, 0}, 1};
    auto e = estimate_pcon(InidScenario{red.family, red.window}, ThresholdProfile::homogeneous(1.2), o);
    CHECK(e.agrees_with(0.2 * 0.5, 4));
    auto src = estimate_pcon(IidScenario{red.source, 1}, ThresholdProfile::homogeneous(1.2), o);
    CHECK(src.agrees_with(0.2, 4));
  }

  TEST_CASE("piecewise-uniform instance from a halfspace") {
    auto red = pwu_from_halfspace({1, 2, 3}, 3);
    CHECK(red.n == 2);
    CHECK(red.s == r(1, 2));
    CHECK(red.d == 1);
    CHECK(red.halfspace.a == std::vector<Rational>(3, Rational(1)));
    CHECK(red.parent.exact_support() == r(1, 2));
    CHECK(red.parent.cdf_at(r(1, 6)) == r(1, 6));
    CHECK(red.parent.cdf_at(r(1, 3)) == r(1, 2));
    CHECK(red.parent.pdf_at(r(1, 4)) == 2);
    CHECK(red.claimed_pcon == halfspace_cuboid_volume({{1, 1, 1}, 3}, {{1, 2, 3}}) / 6);
    CHECK_THROWS_AS(pwu_from_halfspace({1}, 1), DomainError);
    CHECK_THROWS_AS(pwu_from_halfspace({1, 2}, 0), DomainError);
    CHECK_THROWS_AS(pwu_from_halfspace({1, 0}, 1), DomainError);
  }
}
