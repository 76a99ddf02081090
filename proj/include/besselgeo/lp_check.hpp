#pragma once

#include <optional>
#include <string>
#include <vector>

#include "besselgeo/params.hpp"
#include "besselgeo/polynomial.hpp"

namespace besselgeo {

/// P_m(x) = sum_(k=0..m) C(m,k) mu_k x^k. Throws LengthError if mu has fewer
/// than m+1 entries.
Poly jensen_poly(const std::vector<double>& mu, int m);

/// Maclaurin data mu_k (phi(s) = sum mu_k s^k / k!) of
///   s -> 2^nu Gamma(nu-n+1) (2 sqrt s)^(n-nu) J_nu^(n)(2 sqrt s),
/// which has only positive zeros s = (j_(nu,m)^(n))^2 / 4.
std::vector<double> bessel_jensen_mu(const BesselDeriv& d, int count);

/// Outcome of the q = C p - x p' check for a hyperbolic p with positive
/// roots and p(0) = 1.
struct CpMinusXdpReport {
  bool hyperbolic = false;
  /// Smallest positive root of p.
  double p_first = 0.0;
  /// Smallest root of q in (0, p_first), if any.
  std::optional<double> q_first_below;
  /// The location criterion: q has a root in (0, p_first) iff C < 0.
  bool location_ok = false;
  bool ok() const { return hyperbolic && location_ok; }
  std::string detail;
};

CpMinusXdpReport verify_cp_minus_xdp(const Poly& p, double C);

struct DiniReport {
  /// Jensen polynomials of the Bessel factor and of W~ = a phi - s phi'.
  bool bessel_hyperbolic_positive = false;
  bool w_hyperbolic_positive = false;
  double bessel_first = 0.0;  // smallest root of P_m(phi), in s
  double w_first = 0.0;       // smallest root of P_m(W~), in s
  bool precedence = false;    // w_first <= bessel_first
  /// (2a-n+nu) J^(n)(z) - z J^(n+1)(z) changes sign on (0, j_(nu,1)^(n)].
  bool function_sign_change = false;
  bool ok() const { return bessel_hyperbolic_positive && w_hyperbolic_positive && precedence && function_sign_change; }
  std::string detail;
};

/// Largest Jensen order accepted by verify_dini_precedence.
inline constexpr int kMaxJensenOrder = 30;

/// Requires nu > n - 1 and a < 0; m in [1, 30], IllConditioned above.
DiniReport verify_dini_precedence(const BesselDeriv& d, double a, int m);

}  // namespace besselgeo
