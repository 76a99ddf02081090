#pragma once

#include <cmath>

#include "besselgeo/params.hpp"
#include "besselgeo/series.hpp"
#include "besselgeo/zeros.hpp"

namespace besselgeo {

/// principal: root on the positive real axis. modified: f with n-1 < nu < n,
/// where the extremal point sits on the imaginary axis.
enum class Branch { principal, modified };

std::string_view to_string(Branch b);

struct RadiusResult {
  Kind kind = Kind::f;
  Property property = Property::starlike;
  Params params;
  /// Radius in the variable of the normalization (for h: the square of the
  /// Bessel argument).
  double radius = 0.0;
  /// Final sign-change bracket around the radius.
  Bracket bracket;
  /// Defining equation evaluated at radius.
  double residual = 0.0;
  Branch branch = Branch::principal;
};

/// Defining equation whose smallest positive root is the radius:
///   starlike principal: r F'(r)/F(r) - beta
///   starlike modified:  i r J^(n+1)(i r) / ((nu-n) J^(n)(i r)) - beta
///   convex:             1 + r F''(r)/F'(r) - beta
/// Each decreases from 1 - beta on the certified interval.
Jet radius_equation(Property prop, Kind kind, const Params& p, double r, const TruncationPolicy& tp = {});

/// Branch the radius of (prop, kind, p) is computed on.
Branch branch_for(Property prop, Kind kind, const BesselDeriv& d);

/// Right end of the certified monotone interval (principal branch):
/// j_(nu,1)^(n) for starlike f, g, (j_(nu,1)^(n))^2 for starlike h,
/// j_(nu,1)^(n+1) for convex f, gamma_1 for convex g and delta_1 for convex h.
double certified_limit(Property prop, Kind kind, const BesselDeriv& d);

RadiusResult starlike_radius(Kind kind, const Params& p, const TruncationPolicy& tp = {});
RadiusResult convex_radius(Kind kind, const Params& p, const TruncationPolicy& tp = {});
RadiusResult compute_radius(Property prop, Kind kind, const Params& p, const TruncationPolicy& tp = {});

/// Converts a radius of h (variable z of h) to the Bessel argument and back.
inline double h_radius_to_bessel_argument(double r) { return std::sqrt(r); }
inline double bessel_argument_to_h_radius(double x) { return x * x; }

}  // namespace besselgeo
