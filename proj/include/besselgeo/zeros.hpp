#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "besselgeo/params.hpp"
#include "besselgeo/series.hpp"

namespace besselgeo {

/// Entire functions whose positive zeros the library locates.
///   j_deriv: J_nu^(n)            zeros j_(nu,m)^(n)
///   g_prime: g'                  zeros gamma_(nu,m)^(n)
///   h_prime: h'                  zeros delta_(nu,m)^(n)   (h's variable)
///   delta:   (z g'(z))'          zeros d_(nu,m)^(n)
///   theta:   (z h'(z))'          zeros l_(nu,m)^(n)       (h's variable)
enum class ZeroFamily { j_deriv, g_prime, h_prime, delta, theta };

std::string_view to_string(ZeroFamily f);
ZeroFamily parse_zero_family(std::string_view s);

/// Variable the zeros are reported in. h-related families live in the
/// variable of h, which is the square of the Bessel argument.
enum class ZeroVariable { bessel_argument, h_argument };

ZeroVariable variable_of(ZeroFamily f);

/// Weight w(m) such that the family is sum (-1)^m a_m w(m) x^(2m) in the Bessel argument x.
Weight family_weight(ZeroFamily f);

/// Value and x-derivative of the family at Bessel argument x > 0. Uses the
/// power series for moderate x and the Bessel-function identity beyond.
Jet eval_family(ZeroFamily f, const BesselDeriv& d, double x);

/// Arguments above this use the Bessel-function identity when scanning for zeros.
inline constexpr double kSeriesArgumentLimit = 10.0;

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// Ordered positive zeros of one family. Immutable once returned.
struct ZeroSequence {
  ZeroFamily which = ZeroFamily::j_deriv;
  BesselDeriv deriv;
  /// In the family's own variable (see ZeroVariable).
  std::vector<double> zeros;
  /// Sign-change brackets in the Bessel argument x.
  std::vector<Bracket> brackets;
  /// Relative bisection tolerance in x: |hi - lo| <= refine_tol * max(1, x).
  double refine_tol = 1e-12;

  ZeroVariable variable() const { return variable_of(which); }
  /// i-th zero (0-based) as a Bessel argument.
  double argument(std::size_t i) const;
  std::size_t size() const { return zeros.size(); }
};

/// First `count` positive zeros: scan from 1e-3 in steps of pi/8 for sign
/// changes, bisect each bracket to refine_tol, then polish with two Newton
/// steps that are kept only if they stay inside the bracket.
ZeroSequence find_zeros(ZeroFamily which, const BesselDeriv& d, int count, double refine_tol = 1e-12);

/// First zero in the family's variable.
double first_zero(ZeroFamily which, const BesselDeriv& d);

struct InterlacingReport {
  bool ok = false;
  /// 1-based position of the first failed strict comparison in the merged
  /// sequence, 0 when ok.
  std::size_t violation = 0;
  std::string detail;
};

/// True iff the zeros alternate strictly over the common prefix. The
/// orientation (which sequence leads) is read off the first pair.
InterlacingReport check_interlacing(const ZeroSequence& a, const ZeroSequence& b);

/// Extrapolates the zeros past the last computed one with the two-term
/// asymptotic form x_k = b_k - c / b_k, b_(k+1) = b_k + pi, fitted to the
/// last two computed zeros. Everything here works in the Bessel argument.
class ZeroTail {
 public:
  explicit ZeroTail(const ZeroSequence& seq, int explicit_terms = 4000);

  /// k-th zero beyond the last computed one (k >= 1).
  double extrapolated(int k) const;
  /// sum over k >= 1 of x_k^(-p), p > 1.
  double inverse_power_sum(double p) const;
  /// sum over k >= 1 of log(1 - z^2 / x_k^2) for |z| below the first tail zero.
  double log_product(double z) const;

  double anchor() const { return anchor_; }
  double curvature() const { return curvature_; }

 private:
  double anchor_ = 0.0;     // b at the last computed zero
  double curvature_ = 0.0;  // c
  int explicit_terms_ = 0;
};

}  // namespace besselgeo
