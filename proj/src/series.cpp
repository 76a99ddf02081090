#include "besselgeo/series.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/binomial.hpp>

#include <cmath>
#include <limits>
#include <sstream>

#include "besselgeo/errors.hpp"

namespace besselgeo {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

[[noreturn]] void throw_non_convergence(const SeriesSpec& spec, double s) {
  std::ostringstream os;
  os << "series for nu=" << spec.deriv.nu << ", n=" << spec.deriv.n << " did not converge at s=" << s
     << " within " << spec.truncation.max_terms << " terms";
  throw NonConvergence(os.str());
}

void check_denominator(const SeriesValue& den, const TruncationPolicy& tp, double r) {
  if (std::abs(den.value) <= std::max(tp.abs_tol, 16.0 * kEps * den.magnitude)) {
    std::ostringstream os;
    os << "denominator series vanishes at r=" << r << " (too close to a zero)";
    throw PoleProximity(os.str());
  }
}

SeriesSpec with_policy(SeriesSpec spec, const TruncationPolicy& tp) {
  spec.truncation = tp;
  return spec;
}

// N/D and d(N/D)/ds for two series evaluated at the same s.
Jet ratio_jet(const SeriesSpec& num, const SeriesSpec& den, double s, double r) {
  const SeriesValue n = sum_at(num, s);
  const SeriesValue d = sum_at(den, s);
  check_denominator(d, den.truncation, r);
  Jet out;
  out.value = n.value / d.value;
  if (s == 0.0) {
    // d/ds at the origin is the ratio of first coefficients.
    const double n1 = num.coefficient(1), d1 = den.coefficient(1);
    const double n0 = num.coefficient(0), d0 = den.coefficient(0);
    out.slope = (n1 * d0 - n0 * d1) / (d0 * d0);
    return out;
  }
  SeriesSpec num_ds = num;
  num_ds.weight = num.weight.times_index();
  SeriesSpec den_ds = den;
  den_ds.weight = den.weight.times_index();
  const double sn = sum_at(num_ds, s).value;  // s N'(s)
  const double sd = sum_at(den_ds, s).value;  // s D'(s)
  out.slope = (sn * d.value - n.value * sd) / (s * d.value * d.value);
  return out;
}

void require_nonnegative(double r, const char* what) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError(std::string(what) + " requires a finite non-negative argument");
  }
}

void require_f_principal(const BesselDeriv& d) {
  if (!(d.nu > d.n)) {
    throw DomainError("f quotients on the real axis require nu > n");
  }
}

// r J^(k+1)(r) / J^(k)(r) = (nu - k) + 2 s G'(s)/G(s) with s = r^2.
Jet bessel_log_derivative_jet(const BesselDeriv& d, double r, const TruncationPolicy& tp) {
  const SeriesSpec den = with_policy(series::core(d), tp);
  SeriesSpec num = den;
  num.weight = Weight{0.0, 1.0};
  const double s = r * r;
  const Jet q = ratio_jet(num, den, s, r);
  return {shift(d) + 2.0 * q.value, 2.0 * q.slope * 2.0 * r};
}

}  // namespace

// ---------------------------------------------------------------------------
// Weight

double Weight::operator()(double m) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * m + *it;
  return acc;
}

Weight Weight::times_index() const {
  std::vector<double> out(c_.size() + 1, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i + 1] = c_[i];
  return Weight(std::move(out));
}

Weight Weight::shifted(int k) const {
  // Horner in the polynomial ring: w(m + k).
  std::vector<double> out{0.0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    std::vector<double> next(out.size() + 1, 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i + 1] += out[i];
      next[i] += out[i] * k;
    }
    next[0] += *it;
    out = std::move(next);
  }
  while (out.size() > 1 && out.back() == 0.0) out.pop_back();
  return Weight(std::move(out));
}

Weight Weight::operator*(const Weight& o) const {
  std::vector<double> out(c_.size() + o.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return Weight(std::move(out));
}

Weight Weight::operator*(double s) const {
  std::vector<double> out = c_;
  for (double& v : out) v *= s;
  return Weight(std::move(out));
}

// ---------------------------------------------------------------------------
// Coefficients

double log_base_coefficient(const BesselDeriv& d, int m) {
  const double nu = d.nu, n = d.n, mm = m;
  return std::lgamma(2 * mm + nu + 1) + std::lgamma(nu - n + 1) - std::lgamma(mm + 1) - mm * std::log(4.0) -
         std::lgamma(2 * mm - n + nu + 1) - std::lgamma(mm + nu + 1);
}

double base_coefficient_ratio(const BesselDeriv& d, int m) {
  const double nu = d.nu, n = d.n, k = m;
  return (2 * k + nu + 2) * (2 * k + nu + 1) /
         ((2 * k - n + nu + 2) * (2 * k - n + nu + 1) * 4.0 * (k + 1) * (k + nu + 1));
}

Parity SeriesSpec::parity() const {
  if (step == 1) return Parity::general;
  return leading_power % 2 == 0 ? Parity::even : Parity::odd;
}

double SeriesSpec::coefficient(int m) const {
  const int k = m + shift;
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(log_base_coefficient(deriv, k)) * weight(m);
}

SeriesValue sum_at(const SeriesSpec& spec, double s) {
  const TruncationPolicy& tp = spec.truncation;
  // a_shift by exact ratios from a_0 = 1.
  double base = 1.0;
  for (int k = 0; k < spec.shift; ++k) base *= base_coefficient_ratio(spec.deriv, k);
  if (spec.shift % 2 != 0) base = -base;

  CompensatedSum acc;
  double magnitude = 0.0;
  int small_run = 0;
  for (int m = 0; m < tp.max_terms; ++m) {
    const double term = base * spec.weight(m);
    acc.add(term);
    magnitude += std::abs(term);
    const double partial = acc.value();
    if (std::abs(term) <= tp.rel_tol * std::abs(partial) + tp.abs_tol) {
      if (++small_run >= tp.consecutive_small) return {partial, m + 1, term, magnitude};
    } else {
      small_run = 0;
    }
    base *= -s * base_coefficient_ratio(spec.deriv, m + spec.shift);
  }
  throw_non_convergence(spec, s);
}

SeriesValue evaluate(const SeriesSpec& spec, double z) {
  const double s = spec.step == 2 ? z * z : z;
  SeriesValue v = sum_at(spec, s);
  if (spec.leading_power != 0) {
    const double f = std::pow(z, spec.leading_power);
    v.value *= f;
    v.last_term *= f;
    v.magnitude *= std::abs(f);
  }
  return v;
}

double sum_by_bessel_identity(const BesselDeriv& d, const Weight& w, double x) {
  if (!(x > 0.0)) throw DomainError("Bessel-identity evaluation requires x > 0");
  const int deg = w.degree();
  const double sh = shift(d);
  // Coordinates over the basis B_k = x^(n-nu) x^k J^(n+k)(x). The Euler
  // operator x d/dx maps B_k to (n - nu + k) B_k + B_(k+1).
  std::vector<double> cur(deg + 1, 0.0), total(deg + 1, 0.0);
  cur[0] = 1.0;
  const auto& c = w.coefficients();
  for (int j = 0; j <= deg; ++j) {
    if (j > 0) {
      std::vector<double> next(deg + 1, 0.0);
      for (int k = 0; k < deg; ++k) {
        next[k] += 0.5 * (k - sh) * cur[k];
        next[k + 1] += 0.5 * cur[k];
      }
      cur = std::move(next);
    }
    for (int k = 0; k <= deg; ++k) total[k] += c[j] * cur[k];
  }
  CompensatedSum acc;
  for (int k = 0; k <= deg; ++k) {
    if (total[k] == 0.0) continue;
    const int order = d.n + k;
    CompensatedSum jk;
    for (int i = 0; i <= order; ++i) {
      const double binom = boost::math::binomial_coefficient<double>(order, i);
      const double sign = (i % 2 == 0) ? 1.0 : -1.0;
      jk.add(sign * binom * boost::math::cyl_bessel_j(d.nu - order + 2 * i, x));
    }
    acc.add(total[k] * std::ldexp(jk.value(), -order) * std::pow(x, k));
  }
  const double log_prefactor = d.nu * std::log(2.0) + std::lgamma(sh + 1) - sh * std::log(x);
  return std::exp(log_prefactor) * acc.value();
}

// ---------------------------------------------------------------------------
// Named series

namespace series {

SeriesSpec core(const BesselDeriv& d) { return {d, Weight{1.0}, 0, 2, 0, {}}; }
SeriesSpec g(const BesselDeriv& d) { return {d, Weight{1.0}, 0, 2, 1, {}}; }
SeriesSpec g_prime(const BesselDeriv& d) { return {d, Weight{1.0, 2.0}, 0, 2, 0, {}}; }
// 2 (m+1) (2m+3)
SeriesSpec g_prime_log_numerator(const BesselDeriv& d) { return {d, Weight{6.0, 10.0, 4.0}, 1, 2, 1, {}}; }
SeriesSpec delta(const BesselDeriv& d) { return {d, Weight{1.0, 4.0, 4.0}, 0, 2, 0, {}}; }
// 2 (m+1) (2m+3)^2
SeriesSpec delta_log_numerator(const BesselDeriv& d) {
  return {d, Weight{1.0, 1.0} * Weight{3.0, 2.0} * Weight{3.0, 2.0} * 2.0, 1, 2, 1, {}};
}
SeriesSpec h(const BesselDeriv& d) { return {d, Weight{1.0}, 0, 1, 1, {}}; }
SeriesSpec h_prime(const BesselDeriv& d) { return {d, Weight{1.0, 1.0}, 0, 1, 0, {}}; }
// (m+1)(m+2)
SeriesSpec h_prime_log_numerator(const BesselDeriv& d) { return {d, Weight{2.0, 3.0, 1.0}, 1, 1, 0, {}}; }
SeriesSpec theta(const BesselDeriv& d) { return {d, Weight{1.0, 2.0, 1.0}, 0, 1, 0, {}}; }
// (m+1)(m+2)^2
SeriesSpec theta_log_numerator(const BesselDeriv& d) {
  return {d, Weight{1.0, 1.0} * Weight{2.0, 1.0} * Weight{2.0, 1.0}, 1, 1, 0, {}};
}

}  // namespace series

// ---------------------------------------------------------------------------
// Functions of the Bessel derivative

namespace {

// Term-wise n-th derivative of sum (-1)^m (z/2)^(2m+nu) / (m! Gamma(m+nu+1)).
// Valid for every nu > -1, including n - 1 >= nu where the normalized
// coefficients a_m are undefined.
double direct_derivative_series(const BesselDeriv& d, double z, const TruncationPolicy& tp) {
  const double nu = d.nu;
  const double log_half_z = std::log(0.5 * z);
  CompensatedSum acc;
  int small_run = 0;
  for (int m = 0; m < tp.max_terms; ++m) {
    const double p = 2.0 * m + nu;
    double falling = 1.0;
    for (int i = 0; i < d.n; ++i) falling *= p - i;
    const double log_mag = p * log_half_z - d.n * std::log(z) - std::lgamma(m + 1.0) - std::lgamma(m + nu + 1.0);
    const double term = (m % 2 ? -1.0 : 1.0) * falling * std::exp(log_mag);
    acc.add(term);
    if (std::abs(term) <= tp.rel_tol * std::abs(acc.value()) + tp.abs_tol) {
      if (++small_run >= tp.consecutive_small) return acc.value();
    } else {
      small_run = 0;
    }
  }
  std::ostringstream os;
  os << "derivative series for nu=" << nu << ", n=" << d.n << " did not converge at z=" << z;
  throw NonConvergence(os.str());
}

}  // namespace

double eval_bessel_deriv(const BesselDeriv& d, double z, const TruncationPolicy& tp) {
  validate(d);
  require_nonnegative(z, "eval_bessel_deriv");
  const double sh = shift(d);
  if (z == 0.0) {
    if (sh > 0.0) return 0.0;
    if (sh == 0.0) return std::exp(-d.nu * std::log(2.0));
    throw DomainError("J_nu^(n) is unbounded at z = 0 when nu < n");
  }
  const double core = sum_at(with_policy(series::core(d), tp), z * z).value;
  const double log_prefactor = sh * std::log(z) - d.nu * std::log(2.0) - std::lgamma(sh + 1);
  return std::exp(log_prefactor) * core;
}

double eval_bessel_deriv_direct(const BesselDeriv& d, double z, const TruncationPolicy& tp) {
  if (!std::isfinite(d.nu) || d.n < 0 || !(d.nu > -1.0)) {
    throw DomainError("eval_bessel_deriv_direct needs a finite nu > -1 and n >= 0");
  }
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("eval_bessel_deriv_direct needs z > 0");
  return direct_derivative_series(d, z, tp);
}

double eval_normalized(Kind kind, const BesselDeriv& d, double z, const TruncationPolicy& tp) {
  validate(d);
  require_nonnegative(z, "eval_normalized");
  switch (kind) {
    case Kind::g:
      return evaluate(with_policy(series::g(d), tp), z).value;
    case Kind::h:
      return evaluate(with_policy(series::h(d), tp), z).value;
    case Kind::f: {
      if (shift(d) == 0.0) throw DomainError("f is undefined for nu = n");
      if (z == 0.0) return 0.0;
      const double base = sum_at(with_policy(series::core(d), tp), z * z).value;
      if (!(base > 0.0)) throw DomainError("f requires a positive base, i.e. 0 < z < j_(nu,1)^(n)");
      return z * std::pow(base, 1.0 / shift(d));
    }
  }
  throw DomainError("unknown kind");
}

Jet star_quotient_jet(Kind kind, const BesselDeriv& d, double r, const TruncationPolicy& tp) {
  validate(d);
  require_nonnegative(r, "eval_star_quotient");
  const SeriesSpec den = with_policy(series::core(d), tp);
  SeriesSpec num = den;
  num.weight = Weight{0.0, 1.0};
  switch (kind) {
    case Kind::g: {
      const Jet q = ratio_jet(num, den, r * r, r);
      return {1.0 + 2.0 * q.value, 2.0 * q.slope * 2.0 * r};
    }
    case Kind::h: {
      const Jet q = ratio_jet(num, den, r, r);
      return {1.0 + q.value, q.slope};
    }
    case Kind::f: {
      require_f_principal(d);
      const double lambda = 2.0 / shift(d);
      const Jet q = ratio_jet(num, den, r * r, r);
      return {1.0 + lambda * q.value, lambda * q.slope * 2.0 * r};
    }
  }
  throw DomainError("unknown kind");
}

double eval_star_quotient(Kind kind, const BesselDeriv& d, double r, const TruncationPolicy& tp) {
  return star_quotient_jet(kind, d, r, tp).value;
}

Jet convex_quotient_jet(Kind kind, const BesselDeriv& d, double r, const TruncationPolicy& tp) {
  validate(d);
  require_nonnegative(r, "eval_convex_quotient");
  switch (kind) {
    case Kind::g: {
      const Jet q = ratio_jet(with_policy(series::delta(d), tp), with_policy(series::g_prime(d), tp), r * r, r);
      return {q.value, q.slope * 2.0 * r};
    }
    case Kind::h: {
      const Jet q = ratio_jet(with_policy(series::theta(d), tp), with_policy(series::h_prime(d), tp), r, r);
      return q;
    }
    case Kind::f: {
      require_f_principal(d);
      // 1 + r J^(n+2)/J^(n+1) + (1/(nu-n) - 1) r J^(n+1)/J^(n)
      const Jet upper = bessel_log_derivative_jet({d.nu, d.n + 1}, r, tp);
      const Jet lower = bessel_log_derivative_jet(d, r, tp);
      const double mix = 1.0 / shift(d) - 1.0;
      return {1.0 + upper.value + mix * lower.value, upper.slope + mix * lower.slope};
    }
  }
  throw DomainError("unknown kind");
}

double eval_convex_quotient(Kind kind, const BesselDeriv& d, double r, const TruncationPolicy& tp) {
  return convex_quotient_jet(kind, d, r, tp).value;
}

Jet modified_quotient_jet(const BesselDeriv& d, double r, const TruncationPolicy& tp) {
  validate(d);
  if (!(d.nu < d.n)) throw DomainError("modified quotient requires n - 1 < nu < n");
  require_nonnegative(r, "eval_modified_quotient");
  // On the imaginary axis s = z^2 = -r^2, so every term is positive. The
  // 2^(2m+nu) scaling of the textbook form is a constant multiple of the
  // base coefficients and cancels in the ratio.
  const SeriesSpec den = with_policy(series::core(d), tp);
  SeriesSpec num = den;
  num.weight = Weight{0.0, 1.0};
  const Jet q = ratio_jet(num, den, -r * r, r);
  return {shift(d) + 2.0 * q.value, 2.0 * q.slope * (-2.0 * r)};
}

double eval_modified_quotient(const BesselDeriv& d, double r, const TruncationPolicy& tp) {
  return modified_quotient_jet(d, r, tp).value;
}

}  // namespace besselgeo
