#include <doctest.h>

#include <cmath>

#include "besselgeo/errors.hpp"
#include "besselgeo/params.hpp"

using namespace besselgeo;

TEST_SUITE("params") {
  TEST_CASE("domain nu > n - 1") {
    CHECK_NOTHROW(validate(BesselDeriv{2.5, 3}));
    CHECK_NOTHROW(validate(BesselDeriv{0.5, 1}));
    CHECK_THROWS_AS(validate(BesselDeriv{0.5, 2}), DomainError);
    CHECK_THROWS_AS(validate(BesselDeriv{1.0, 2}), DomainError);
    CHECK_THROWS_AS(validate(BesselDeriv{1.0, -1}), DomainError);
    CHECK_THROWS_AS(validate(BesselDeriv{NAN, 0}), DomainError);
  }

  TEST_CASE("beta in [0, 1)") {
    CHECK_NOTHROW(validate(Params{2.5, 0, 0.0}));
    CHECK_NOTHROW(validate(Params{2.5, 0, 0.999}));
    CHECK_THROWS_AS(validate(Params{2.5, 0, 1.0}), DomainError);
    CHECK_THROWS_AS(validate(Params{2.5, 0, -0.1}), DomainError);
  }

  TEST_CASE("names round-trip") {
    for (Kind k : {Kind::f, Kind::g, Kind::h}) CHECK(parse_kind(to_string(k)) == k);
    for (Property p : {Property::starlike, Property::convex}) CHECK(parse_property(to_string(p)) == p);
    CHECK_THROWS_AS(parse_kind("q"), DomainError);
    CHECK_THROWS_AS(parse_property("round"), DomainError);
  }
}
