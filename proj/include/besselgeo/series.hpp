#pragma once

#include <initializer_list>
#include <vector>

#include "besselgeo/params.hpp"

namespace besselgeo {

/// Stopping rule for every power series in the library. Summation ends once
/// `consecutive_small` successive terms satisfy
///   |term| <= rel_tol * |partial sum| + abs_tol,
/// and fails with NonConvergence after `max_terms` terms.
struct TruncationPolicy {
  double rel_tol = 1e-15;
  double abs_tol = 1e-300;
  int max_terms = 500;
  int consecutive_small = 3;
};

/// Polynomial in the summation index m, c[0] + c[1] m + c[2] m^2 + ...
class Weight {
 public:
  Weight() : c_{1.0} {}
  Weight(std::initializer_list<double> c) : c_(c) {}
  explicit Weight(std::vector<double> c) : c_(std::move(c)) {}

  double operator()(double m) const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coefficients() const { return c_; }

  /// m * w(m).
  Weight times_index() const;
  /// w(m + k).
  Weight shifted(int k) const;
  Weight operator*(const Weight& o) const;
  Weight operator*(double s) const;

 private:
  std::vector<double> c_;
};

enum class Parity { even, odd, general };

/// One of the alternating power series built on the positive base
/// coefficients
///
///   a_m = Gamma(2m+nu+1) Gamma(nu-n+1)
///         / (m! 4^m Gamma(2m-n+nu+1) Gamma(m+nu+1)),
///
/// so that g(z) = sum (-1)^m a_m z^(2m+1). The m-th coefficient of the series is
///
///   coefficient(m) = (-1)^(m+shift) a_(m+shift) weight(m)
///
/// and the series in the variable z is z^leading_power * sum coefficient(m) z^(step m).
struct SeriesSpec {
  BesselDeriv deriv;
  Weight weight;
  int shift = 0;
  int step = 2;
  int leading_power = 0;
  TruncationPolicy truncation;

  Parity parity() const;
  /// Coefficient computed in log space from log-gamma differences.
  double coefficient(int m) const;
};

/// Truncated sum with its stopping certificate.
struct SeriesValue {
  double value = 0.0;
  int terms = 0;
  double last_term = 0.0;
  /// Sum of |term|; value/magnitude measures cancellation.
  double magnitude = 0.0;
};

/// log a_m for the base coefficients above.
double log_base_coefficient(const BesselDeriv& d, int m);
/// a_(m+1) / a_m, exact rational in m, nu, n.
double base_coefficient_ratio(const BesselDeriv& d, int m);

/// sum_m coefficient(m) s^m (no mapping from z to s, no leading power).
SeriesValue sum_at(const SeriesSpec& spec, double s);
/// The series as a function of z, honoring step and leading power.
SeriesValue evaluate(const SeriesSpec& spec, double z);

/// Evaluates sum_m (-1)^m a_m w(m) x^(2m) through the finite-difference
/// identity J^(k)_nu = 2^-k sum_i (-1)^i C(k,i) J_(nu-k+2i) and ordinary
/// Bessel functions. Accurate for large x where the alternating series
/// cancels catastrophically. Requires x > 0.
double sum_by_bessel_identity(const BesselDeriv& d, const Weight& w, double x);

namespace series {

/// Sum (-1)^m a_m s^m; equals 2^nu Gamma(nu-n+1) z^(n-nu) J_nu^(n)(z) at s = z^2.
SeriesSpec core(const BesselDeriv& d);
/// g(z), odd in z.
SeriesSpec g(const BesselDeriv& d);
/// g'(z): weight (2m+1).
SeriesSpec g_prime(const BesselDeriv& d);
/// Coefficients U_m of z g''(z) / z, i.e. the derivative of g'.
SeriesSpec g_prime_log_numerator(const BesselDeriv& d);
/// Delta(z) = (z g'(z))': weight (2m+1)^2.
SeriesSpec delta(const BesselDeriv& d);
SeriesSpec delta_log_numerator(const BesselDeriv& d);
/// h(z) = z sum (-1)^m a_m z^m.
SeriesSpec h(const BesselDeriv& d);
/// h'(z): weight (m+1).
SeriesSpec h_prime(const BesselDeriv& d);
SeriesSpec h_prime_log_numerator(const BesselDeriv& d);
/// Theta(z) = (z h'(z))': weight (m+1)^2.
SeriesSpec theta(const BesselDeriv& d);
SeriesSpec theta_log_numerator(const BesselDeriv& d);

}  // namespace series

/// Value together with its derivative in the evaluation variable.
struct Jet {
  double value = 0.0;
  double slope = 0.0;
};

/// J_nu^(n)(z) for z >= 0 by its power series.
double eval_bessel_deriv(const BesselDeriv& d, double z, const TruncationPolicy& tp = {});

/// J_nu^(n)(z) for z > 0 from the term-wise n-th derivative of the series of
/// J_nu. Needs only nu > -1, so it also covers n - 1 >= nu (e.g. J_(1/2)''),
/// where the normalized series above is undefined.
double eval_bessel_deriv_direct(const BesselDeriv& d, double z, const TruncationPolicy& tp = {});

/// f, g or h at z (z >= 0; for f, 0 < z < j_(nu,1)^(n) and nu != n).
double eval_normalized(Kind kind, const BesselDeriv& d, double z, const TruncationPolicy& tp = {});

/// r F'(r) / F(r). For h, r is in h's own variable.
double eval_star_quotient(Kind kind, const BesselDeriv& d, double r, const TruncationPolicy& tp = {});
Jet star_quotient_jet(Kind kind, const BesselDeriv& d, double r, const TruncationPolicy& tp = {});

/// 1 + r F''(r) / F'(r).
double eval_convex_quotient(Kind kind, const BesselDeriv& d, double r, const TruncationPolicy& tp = {});
Jet convex_quotient_jet(Kind kind, const BesselDeriv& d, double r, const TruncationPolicy& tp = {});

/// i r J^(n+1)(i r) / J^(n)(i r) for n-1 < nu < n: a quotient of two
/// positive-coefficient series, increasing in r from nu - n.
double eval_modified_quotient(const BesselDeriv& d, double r, const TruncationPolicy& tp = {});
Jet modified_quotient_jet(const BesselDeriv& d, double r, const TruncationPolicy& tp = {});

}  // namespace besselgeo
