#include <doctest.h>

#include <cmath>
#include <random>

#include "besselgeo/errors.hpp"
#include "besselgeo/radii.hpp"
#include "besselgeo/rayleigh.hpp"

using namespace besselgeo;

TEST_SUITE("rayleigh") {
  TEST_CASE("sum of 1/j^2 examples") {
    CHECK(zero_power_sum({1.0, 0}, 2).value == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(zero_power_sum({2.5, 1}, 2).value == doctest::Approx(4.5 / 35.0).epsilon(1e-15));
    CHECK_THROWS_AS(zero_power_sum({2.5, 1}, 3), DomainError);
    CHECK_THROWS_AS(zero_power_sum({0.5, 2}, 2), DomainError);
  }

  TEST_CASE("reductions for n = 0, 1, 2") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> pick(1.2, 9.0);
    for (int i = 0; i < 20; ++i) {
      const double nu = pick(rng);
      CHECK(zero_power_sum({nu, 0}, 2).value == doctest::Approx(1 / (4 * (nu + 1))).epsilon(1e-14));
      CHECK(zero_power_sum({nu, 0}, 4).value ==
            doctest::Approx(1 / (16 * (nu + 1) * (nu + 1) * (nu + 2))).epsilon(1e-14));
      CHECK(zero_power_sum({nu, 1}, 2).value == doctest::Approx((nu + 2) / (4 * nu * (nu + 1))).epsilon(1e-14));
      // n = 2, fourth powers: numerator nu^3 + 13 nu^2 + 32 nu + 8 over
      // 16 (nu-1)^2 nu^2 (nu+1)(nu+2).
      const double want = (nu * nu * nu + 13 * nu * nu + 32 * nu + 8) /
                          (16 * (nu - 1) * (nu - 1) * nu * nu * (nu + 1) * (nu + 2));
      CHECK(zero_power_sum({nu, 2}, 4).value == doctest::Approx(want).epsilon(1e-13));
    }
  }

  TEST_CASE("fourth-power sum is below the squared second-power sum") {
    for (double nu : {0.5, 1.5, 2.5, 3.5}) {
      for (int n = 0; n < 4; ++n) {
        if (!(nu > n - 1)) continue;
        const double s2 = zero_power_sum({nu, n}, 2).value;
        const double s4 = zero_power_sum({nu, n}, 4).value;
        CHECK(s4 > 0.0);
        CHECK(s4 < s2 * s2);
      }
    }
  }

  TEST_CASE("auxiliary sum examples") {
    CHECK(auxiliary_sums(AuxFamily::sigma, {2.5, 1}).first.value == doctest::Approx(13.5 / 35.0).epsilon(1e-15));
    CHECK(auxiliary_sums(AuxFamily::omega, {3.5, 0}).first.value == doctest::Approx(1 / 4.5).epsilon(1e-15));
    CHECK(auxiliary_sums(AuxFamily::kappa, {3.5, 0}).first.value == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(auxiliary_sums(AuxFamily::rho, {2.5, 1}).first.family == SumFamily::rho1);
  }

  TEST_CASE("closed forms agree with the Maclaurin coefficients") {
    for (double nu : {0.5, 1.5, 2.5, 3.5, 7.25}) {
      for (int n = 0; n < 4; ++n) {
        const BesselDeriv d{nu, n};
        if (!(nu > n - 1)) continue;
        const auto j = rayleigh_sums_by_coefficients(ZeroFamily::j_deriv, d, 2);
        CHECK(j[0] == doctest::Approx(zero_power_sum(d, 2).value).epsilon(1e-13));
        CHECK(j[1] == doctest::Approx(zero_power_sum(d, 4).value).epsilon(1e-13));
        for (AuxFamily f : {AuxFamily::sigma, AuxFamily::rho, AuxFamily::kappa, AuxFamily::omega}) {
          const auto c = rayleigh_sums_by_coefficients(zero_family_of(f), d, 2);
          const auto [first, second] = auxiliary_sums(f, d);
          CHECK(c[0] == doctest::Approx(first.value).epsilon(1e-13));
          CHECK(c[1] == doctest::Approx(second.value).epsilon(1e-13));
        }
      }
    }
  }

  TEST_CASE("closed forms agree with computed zeros") {
    const BesselDeriv d{2.5, 2};
    const ZeroSequence j = find_zeros(ZeroFamily::j_deriv, d, 200);
    CHECK(numeric_rayleigh_sum(j, 1) == doctest::Approx(zero_power_sum(d, 2).value).epsilon(1e-6));
    CHECK(numeric_rayleigh_sum(j, 2) == doctest::Approx(zero_power_sum(d, 4).value).epsilon(1e-6));
    CHECK(numeric_rayleigh_sum(j, 2) == doctest::Approx(0.0521693122).epsilon(1e-8));
    for (AuxFamily f : {AuxFamily::sigma, AuxFamily::rho, AuxFamily::kappa, AuxFamily::omega}) {
      const ZeroSequence z = find_zeros(zero_family_of(f), d, 200);
      const auto [first, second] = auxiliary_sums(f, d);
      CHECK(numeric_rayleigh_sum(z, 1) == doctest::Approx(first.value).epsilon(1e-6));
      CHECK(numeric_rayleigh_sum(z, 2) == doctest::Approx(second.value).epsilon(1e-6));
    }
  }

  TEST_CASE("Euler-Rayleigh ordering") {
    for (double nu : {0.5, 1.5, 2.5, 3.5, 10.0}) {
      for (int n = 0; n < 4; ++n) {
        if (!(nu > n - 1)) continue;
        for (AuxFamily f : {AuxFamily::sigma, AuxFamily::rho, AuxFamily::kappa, AuxFamily::omega}) {
          const auto [first, second] = auxiliary_sums(f, {nu, n});
          CHECK(1.0 / first.value < first.value / second.value);
        }
      }
    }
  }

  TEST_CASE("elementary-case bounds") {
    const BoundsPair g = radius_bounds(BoundTarget::starlike_g, {1.5, 2});
    CHECK(g.lower == doctest::Approx(std::sqrt(2.0 / 7.0)).epsilon(1e-14));
    REQUIRE(g.extra_upper);
    CHECK(*g.extra_upper == doctest::Approx(std::sqrt(3.0 / 7.0)).epsilon(1e-14));
    CHECK(g.upper < *g.extra_upper);
    const BoundsPair h = radius_bounds(BoundTarget::starlike_h, {1.5, 2});
    CHECK(h.lower == doctest::Approx(3.0 / 7.0).epsilon(1e-14));
    CHECK(h.upper == doctest::Approx(2940.0 / 5969.0).epsilon(1e-14));
  }

  TEST_CASE("convex-h lower bound at n = 1") {
    const double nu = 3.5;
    CHECK(radius_bounds(BoundTarget::convex_h, {nu, 1}).lower ==
          doctest::Approx(nu * (nu + 1) / (nu + 2)).epsilon(1e-15));
  }

  TEST_CASE("convex bounds specialize to the n = 1, 2, 3 forms") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 3; ++n) {
      std::uniform_real_distribution<double> pick(n - 1 + 0.05, n + 8.0);
      for (int i = 0; i < 20; ++i) {
        const double nu = pick(rng);
        const double D = (nu - n + 2) * (nu - n + 1);
        // (nu - n + 4)(nu - n + 3)(nu + 2) for each n, written out
        const double tail = n == 1 ? (nu + 3) * (nu + 2) * (nu + 2)
                                   : (n == 2 ? (nu + 1) * (nu + 2) * (nu + 2) : nu * (nu + 1) * (nu + 2));
        const double B = (nu + 4) * (nu + 3);
        const BoundsPair g = radius_bounds(BoundTarget::convex_g, {nu, n});
        const BoundsPair h = radius_bounds(BoundTarget::convex_h, {nu, n});
        CHECK(g.lower == doctest::Approx(2.0 / 3.0 * std::sqrt(D / (nu + 2))).epsilon(1e-14));
        CHECK(g.upper == doctest::Approx(2 * std::sqrt(1 / (9 * (nu + 2) / D - 25 * B / (9 * tail)))).epsilon(1e-14));
        CHECK(h.lower == doctest::Approx(D / (nu + 2)).epsilon(1e-14));
        CHECK(h.upper == doctest::Approx(1 / ((nu + 2) / D - 9 * B / (16 * tail))).epsilon(1e-14));
      }
    }
  }

  TEST_CASE("bounds bracket the radii") {
    for (double nu : {0.5, 1.5, 2.5, 3.5}) {
      for (int n = 0; n < 4; ++n) {
        if (!(nu > n - 1)) continue;
        const BesselDeriv d{nu, n};
        const Params p{nu, n, 0.0};
        const struct {
          BoundTarget t;
          Property prop;
          Kind kind;
        } cases[] = {{BoundTarget::starlike_g, Property::starlike, Kind::g},
                     {BoundTarget::starlike_h, Property::starlike, Kind::h},
                     {BoundTarget::convex_g, Property::convex, Kind::g},
                     {BoundTarget::convex_h, Property::convex, Kind::h}};
        for (const auto& c : cases) {
          const BoundsPair b = radius_bounds(c.t, d);
          const double r = compute_radius(c.prop, c.kind, p).radius;
          CHECK(b.lower < b.upper);
          CHECK(b.lower < r);
          CHECK(r < b.upper);
        }
      }
    }
  }

  TEST_CASE("names") {
    CHECK(parse_bound_target("convex-h") == BoundTarget::convex_h);
    CHECK(parse_aux_family("kappa") == AuxFamily::kappa);
    CHECK_THROWS_AS(parse_bound_target("convex-f"), DomainError);
    CHECK(zero_family_of(AuxFamily::omega) == ZeroFamily::theta);
  }
}
