#include <doctest.h>

#include <cmath>
#include <numbers>

#include "besselgeo/errors.hpp"
#include "besselgeo/radii.hpp"
#include "besselgeo/series.hpp"
#include "besselgeo/zeros.hpp"

using namespace besselgeo;

namespace {

const double kC = std::sqrt(2.0 / std::numbers::pi);

double j_half(double z) { return kC * std::sin(z) / std::sqrt(z); }
double j_three_halves(double z) { return kC * (std::sin(z) - z * std::cos(z)) / std::pow(z, 1.5); }
double j_three_halves_dd(double z) {
  return kC * (4 * z * z * z * std::cos(z) - 8 * z * z * std::sin(z) - 15 * z * std::cos(z) + 15 * std::sin(z)) /
         (4 * std::pow(z, 3.5));
}

// g_{3/2,2}(z), worked out from J_{3/2}'' above.
double g_three_halves_2(double z) {
  return 4 * z * std::cos(z) - 8 * std::sin(z) - 15 * std::cos(z) / z + 15 * std::sin(z) / (z * z);
}

bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("coefficient ratio matches log-space coefficients") {
    for (BesselDeriv d : {BesselDeriv{2.5, 0}, BesselDeriv{0.5, 1}, BesselDeriv{3.5, 3}, BesselDeriv{1.5, 2}}) {
      for (int m = 0; m < 60; ++m) {
        const double ratio = std::exp(log_base_coefficient(d, m + 1) - log_base_coefficient(d, m));
        CHECK(close_rel(base_coefficient_ratio(d, m), ratio, 1e-12));
      }
    }
  }

  TEST_CASE("coefficients alternate in sign") {
    const BesselDeriv d{2.5, 2};
    for (const SeriesSpec& s : {series::core(d), series::g_prime(d), series::delta(d), series::h_prime(d),
                                series::theta(d), series::g_prime_log_numerator(d), series::theta_log_numerator(d)}) {
      for (int m = 0; m < 40; ++m) {
        const double c = s.coefficient(m);
        CHECK(std::isfinite(c));
        CHECK(c * s.coefficient(m + 1) < 0.0);
      }
    }
  }

  TEST_CASE("coefficients stay finite past the Gamma overflow") {
    const SeriesSpec s = series::core({2.5, 1});
    CHECK(std::isfinite(s.coefficient(120)));
    CHECK(std::isfinite(log_base_coefficient({2.5, 1}, 120)));
    CHECK(log_base_coefficient({2.5, 1}, 200) < -1000.0);
    CHECK(std::isfinite(sum_at(s, 400.0).value));
  }

  TEST_CASE("parity follows step and leading power") {
    const BesselDeriv d{2.5, 1};
    CHECK(series::g(d).parity() == Parity::odd);
    CHECK(series::g_prime(d).parity() == Parity::even);
    CHECK(series::h(d).parity() == Parity::general);
  }

  TEST_CASE("eval_bessel_deriv at z = 0") {
    CHECK(eval_bessel_deriv({2.5, 0}, 0.0) == 0.0);
    CHECK(eval_bessel_deriv({2.0, 2}, 0.0) == doctest::Approx(0.25));
    CHECK_THROWS_AS(eval_bessel_deriv({0.5, 1}, 0.0), DomainError);
  }

  TEST_CASE("eval_bessel_deriv rejects nu <= n - 1") {
    CHECK_THROWS_AS(eval_bessel_deriv({0.5, 2}, 1.0), DomainError);
    CHECK_THROWS_AS(eval_bessel_deriv({2.5, 0}, -1.0), DomainError);
  }

  TEST_CASE("half-integer closed forms") {
    CHECK(close_rel(eval_bessel_deriv({0.5, 0}, 1.0), 0.6713967071418031, 1e-14));
    for (double z = 0.1; z <= 10.0; z += 0.37) {
      CHECK(close_rel(eval_bessel_deriv({0.5, 0}, z), j_half(z), 1e-10));
      CHECK(close_rel(eval_bessel_deriv({1.5, 0}, z), j_three_halves(z), 1e-10));
      CHECK(close_rel(eval_bessel_deriv({1.5, 2}, z), j_three_halves_dd(z), 1e-10));
      CHECK(close_rel(eval_bessel_deriv_direct({1.5, 2}, z), j_three_halves_dd(z), 1e-10));
    }
    CHECK(eval_bessel_deriv({1.5, 2}, 1.0) == doctest::Approx(-0.0105776495523788).epsilon(1e-12));
  }

  TEST_CASE("direct derivative series covers J_(1/2)''") {
    for (double z = 0.1; z <= 10.0; z += 0.37) {
      const double want =
          kC * (-z * z * std::sin(z) - z * std::cos(z) + 0.75 * std::sin(z)) / std::pow(z, 2.5);
      CHECK(close_rel(eval_bessel_deriv_direct({0.5, 2}, z), want, 1e-10));
    }
    CHECK_THROWS_AS(eval_bessel_deriv_direct({0.5, 2}, 0.0), DomainError);
    CHECK_THROWS_AS(eval_bessel_deriv_direct({-1.5, 0}, 1.0), DomainError);
  }

  TEST_CASE("g of the elementary case") {
    for (double z : {0.5, 1.0, 2.0, 3.0}) {
      CHECK(close_rel(eval_normalized(Kind::g, {1.5, 2}, z), g_three_halves_2(z), 1e-11));
    }
    CHECK(eval_normalized(Kind::g, {1.5, 2}, 2.0) == doctest::Approx(-4.07258748228272).epsilon(1e-12));
  }

  TEST_CASE("normalizations behave like z near the origin") {
    for (Kind k : {Kind::f, Kind::g, Kind::h}) {
      const double z = 1e-6;
      CHECK(eval_normalized(k, {2.5, 1}, z) / z == doctest::Approx(1.0).epsilon(1e-6));
    }
    CHECK_THROWS_AS(eval_normalized(Kind::f, {2.0, 2}, 0.5), DomainError);
  }

  TEST_CASE("h(z^2) = z g(z)") {
    const BesselDeriv d{3.5, 2};
    for (double z : {0.3, 1.1, 2.7}) {
      CHECK(close_rel(eval_normalized(Kind::h, d, z * z), z * eval_normalized(Kind::g, d, z), 1e-13));
    }
  }

  TEST_CASE("quotients tend to 1 at the origin") {
    for (Kind k : {Kind::f, Kind::g, Kind::h}) {
      CHECK(eval_star_quotient(k, {2.5, 1}, 1e-6) == doctest::Approx(1.0).epsilon(1e-4));
      CHECK(eval_convex_quotient(k, {3.5, 1}, 1e-6) == doctest::Approx(1.0).epsilon(1e-4));
    }
  }

  TEST_CASE("quotients vanish at the reference radii") {
    CHECK(std::abs(eval_star_quotient(Kind::g, {2.5, 1}, 1.7975)) < 1e-3);
    CHECK(std::abs(eval_convex_quotient(Kind::f, {3.5, 0}, 2.7183)) < 1e-3);
    CHECK(std::abs(eval_convex_quotient(Kind::h, {3.5, 2}, 1.9450)) < 1e-3);
  }

  TEST_CASE("star quotient of g agrees with a finite difference") {
    const BesselDeriv d{2.5, 1};
    const double r = 1.2, h = 1e-5;
    const double fd = r * (eval_normalized(Kind::g, d, r + h) - eval_normalized(Kind::g, d, r - h)) / (2 * h) /
                      eval_normalized(Kind::g, d, r);
    CHECK(eval_star_quotient(Kind::g, d, r) == doctest::Approx(fd).epsilon(1e-8));
  }

  TEST_CASE("jets carry the derivative") {
    const BesselDeriv d{3.5, 1};
    const double h = 1e-6;
    for (Kind k : {Kind::f, Kind::g, Kind::h}) {
      const double r = k == Kind::h ? 2.0 : 1.0;
      const Jet s = star_quotient_jet(k, d, r);
      const double fd = (eval_star_quotient(k, d, r + h) - eval_star_quotient(k, d, r - h)) / (2 * h);
      CHECK(s.slope == doctest::Approx(fd).epsilon(1e-6));
      const Jet c = convex_quotient_jet(k, d, r);
      const double fdc = (eval_convex_quotient(k, d, r + h) - eval_convex_quotient(k, d, r - h)) / (2 * h);
      CHECK(c.slope == doctest::Approx(fdc).epsilon(1e-6));
    }
  }

  TEST_CASE("modified quotient") {
    CHECK(eval_modified_quotient({0.5, 1}, 1e-8) == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK(eval_modified_quotient({2.5, 3}, 1e-8) == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK(eval_modified_quotient({0.5, 1}, 2.0) > eval_modified_quotient({0.5, 1}, 1.0));
    double prev = -INFINITY;
    for (double r = 0.1; r < 20.0; r += 0.1) {
      const double q = eval_modified_quotient({0.5, 1}, r);
      CHECK(q > prev);
      prev = q;
    }
    const double rstar = compute_radius(Property::starlike, Kind::f, {0.5, 1, 0.0}).radius;
    CHECK(std::abs(eval_modified_quotient({0.5, 1}, rstar)) < 1e-12);
    CHECK_THROWS_AS(eval_modified_quotient({2.5, 1}, 1.0), DomainError);
  }

  TEST_CASE("pole proximity near a zero of the denominator") {
    const double j1 = first_zero(ZeroFamily::j_deriv, {2.5, 0});
    CHECK_THROWS_AS(eval_star_quotient(Kind::g, {2.5, 0}, j1), PoleProximity);
  }

  TEST_CASE("truncation policy is honored") {
    TruncationPolicy tp;
    tp.max_terms = 3;
    CHECK_THROWS_AS(eval_bessel_deriv({2.5, 0}, 8.0, tp), NonConvergence);
    const SeriesValue v = sum_at(series::core({2.5, 0}), 4.0);
    CHECK(v.terms < 60);
    CHECK(std::abs(v.last_term) <= 1e-15 * std::abs(v.value) + 1e-300);
  }

  TEST_CASE("Bessel identity route agrees with the series") {
    for (BesselDeriv d : {BesselDeriv{2.5, 0}, BesselDeriv{0.5, 1}, BesselDeriv{3.5, 3}}) {
      for (const Weight& w : {Weight{1.0}, Weight{1.0, 2.0}, Weight{1.0, 4.0, 4.0}, Weight{-0.5, -1.0}}) {
        for (double x : {0.7, 3.0, 6.5}) {
          const double series = sum_at(SeriesSpec{d, w, 0, 2, 0, {}}, x * x).value;
          CHECK(sum_by_bessel_identity(d, w, x) == doctest::Approx(series).epsilon(1e-10));
        }
      }
    }
  }

  TEST_CASE("series matches the truncated zero product") {
    for (BesselDeriv d : {BesselDeriv{0.5, 0}, BesselDeriv{2.5, 1}, BesselDeriv{3.5, 2}}) {
      const ZeroSequence zs = find_zeros(ZeroFamily::j_deriv, d, 50);
      const ZeroTail tail(zs);
      for (double t : {0.1, 0.25, 0.45}) {
        const double z = t * zs.argument(0);
        double lp = tail.log_product(z);
        for (std::size_t m = 0; m < zs.size(); ++m) lp += std::log1p(-z * z / (zs.argument(m) * zs.argument(m)));
        const double series = sum_at(series::core(d), z * z).value;
        CHECK(std::abs(std::exp(lp) / series - 1.0) < 1e-6);
      }
    }
  }
}
