#pragma once

#include <optional>
#include <vector>

namespace besselgeo {

/// Real polynomial, coefficients in ascending degree. Trailing zeros are
/// trimmed on construction so the leading coefficient is nonzero (the zero
/// polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<double> c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<double>& coefficients() const { return c_; }
  double operator[](int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : 0.0; }

  double operator()(double x) const;
  Poly derivative() const;
  Poly operator*(double s) const;
  Poly operator-(const Poly& o) const;
  /// x * p(x).
  Poly times_x() const;

  /// (1 - x/r_1)...(1 - x/r_k).
  static Poly from_roots_normalized(const std::vector<double>& roots);

 private:
  std::vector<double> c_;
};

/// Number of real roots in (lo, hi], counted with multiplicity. Uses Sturm
/// chains in exact rational arithmetic on the (exactly representable) double
/// coefficients, so the count is exact for the polynomial as stored. Throws
/// IllConditioned if a coefficient or endpoint is not finite, DomainError for
/// the zero polynomial or lo >= hi.
int count_real_roots(const Poly& p, double lo, double hi);

/// Cauchy bound: every root has modulus below this.
double root_bound(const Poly& p);

/// All roots real (counted over (-B, B] with B the Cauchy bound).
bool is_hyperbolic(const Poly& p);

/// Smallest root in (lo, hi] located by bisection on exact root counts, to
/// relative width tol. Empty if there is none.
std::optional<double> smallest_root_in(const Poly& p, double lo, double hi, double tol = 1e-14);

}  // namespace besselgeo
