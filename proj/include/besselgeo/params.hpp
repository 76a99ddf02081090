#pragma once

#include <string>
#include <string_view>

namespace besselgeo {

/// Identifies the function J_nu^(n): Bessel order nu and derivative order n.
struct BesselDeriv {
  double nu = 0.0;
  int n = 0;

  friend bool operator==(const BesselDeriv&, const BesselDeriv&) = default;
};

/// (nu, n, beta): a derivative together with the order of starlikeness or
/// convexity being asked for.
struct Params {
  double nu = 0.0;
  int n = 0;
  double beta = 0.0;

  BesselDeriv deriv() const { return {nu, n}; }
};

/// The three normalizations of J_nu^(n):
///   f(z) = [2^nu Gamma(nu-n+1) J(z)]^(1/(nu-n))
///   g(z) = 2^nu Gamma(nu-n+1) z^(1+n-nu) J(z)
///   h(z) = 2^nu Gamma(nu-n+1) z^(1+(n-nu)/2) J(sqrt z)
enum class Kind { f, g, h };

enum class Property { starlike, convex };

std::string_view to_string(Kind k);
std::string_view to_string(Property p);
Kind parse_kind(std::string_view s);
Property parse_property(std::string_view s);

/// Throws DomainError unless nu > n - 1, n >= 0 and nu is finite.
void validate(const BesselDeriv& d);
/// As above, plus beta in [0, 1).
void validate(const Params& p);

/// nu - n, the exponent shift that appears throughout.
inline double shift(const BesselDeriv& d) { return d.nu - d.n; }

}  // namespace besselgeo
