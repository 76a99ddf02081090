#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "besselgeo/params.hpp"
#include "besselgeo/zeros.hpp"

namespace besselgeo {

/// Closed-form Euler-Rayleigh sums. Every family is a product
/// prod (1 - t / t_m) in a "product variable" t: t = z^2 for J^(n), g' and
/// Delta (t_m = squared zero), t = z for h' and Theta (t_m = zero in h's
/// variable). The k-th sum is sum_m t_m^(-k).
///   j2, j4:         sum 1/j^2, sum 1/j^4       (zeros of J^(n))
///   sigma1, sigma2: zeros gamma of g'
///   rho1, rho2:     zeros delta of h'
///   kappa1, kappa2: zeros d of Delta
///   omega1, omega2: zeros l of Theta
enum class SumFamily { j2, j4, sigma1, sigma2, rho1, rho2, kappa1, kappa2, omega1, omega2 };

enum class AuxFamily { sigma, rho, kappa, omega };

std::string_view to_string(SumFamily f);
std::string_view to_string(AuxFamily f);
AuxFamily parse_aux_family(std::string_view s);
ZeroFamily zero_family_of(AuxFamily f);

struct SumValue {
  SumFamily family = SumFamily::j2;
  BesselDeriv deriv;
  double value = 0.0;
};

/// sum 1/(j_(nu,m)^(n))^power for power 2 or 4.
SumValue zero_power_sum(const BesselDeriv& d, int power);

/// (first, second) sums of one auxiliary family.
std::pair<SumValue, SumValue> auxiliary_sums(AuxFamily family, const BesselDeriv& d);

enum class BoundTarget { starlike_g, starlike_h, convex_g, convex_h };

std::string_view to_string(BoundTarget t);
BoundTarget parse_bound_target(std::string_view s);

/// k = 1 Euler-Rayleigh bounds for a beta = 0 radius, in the variable of
/// the normalization (h radii are in h's variable).
struct BoundsPair {
  BoundTarget target = BoundTarget::starlike_g;
  BesselDeriv deriv;
  double lower = 0.0;
  double upper = 0.0;
  /// Starlike targets only: the cruder bound from sum 1/j^2 alone.
  std::optional<double> extra_upper;
};

BoundsPair radius_bounds(BoundTarget target, const BesselDeriv& d);

/// First kmax sums of a family read off its Maclaurin coefficients: Newton's
/// identities for J^(n), and the power-series quotient of the logarithmic
/// derivative (numerator and denominator coefficient families) otherwise.
std::vector<double> rayleigh_sums_by_coefficients(ZeroFamily family, const BesselDeriv& d, int kmax);

/// sum over computed zeros of t_m^(-k) plus the extrapolated tail.
double numeric_rayleigh_sum(const ZeroSequence& seq, int k);

}  // namespace besselgeo
