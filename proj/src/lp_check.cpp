#include "besselgeo/lp_check.hpp"

#include <cmath>
#include <sstream>

#include "besselgeo/errors.hpp"
#include "besselgeo/series.hpp"
#include "besselgeo/zeros.hpp"

namespace besselgeo {

namespace {

double binomial(int m, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (m - k + i) / i;
  return std::round(c);
}

bool hyperbolic_positive(const Poly& p) {
  if (p.degree() <= 0) return true;
  const double b = root_bound(p);
  return count_real_roots(p, 0.0, b) == p.degree();
}

}  // namespace

Poly jensen_poly(const std::vector<double>& mu, int m) {
  if (m < 0) throw DomainError("Jensen order must be nonnegative");
  if (static_cast<int>(mu.size()) < m + 1) {
    throw LengthError("Jensen polynomial of order " + std::to_string(m) + " needs " + std::to_string(m + 1) +
                      " coefficients, got " + std::to_string(mu.size()));
  }
  std::vector<double> c(m + 1);
  for (int k = 0; k <= m; ++k) c[k] = binomial(m, k) * mu[k];
  return Poly(std::move(c));
}

std::vector<double> bessel_jensen_mu(const BesselDeriv& d, int count) {
  validate(d);
  std::vector<double> mu(count);
  for (int k = 0; k < count; ++k) {
    const double log_mag = log_base_coefficient(d, k) + k * std::log(4.0) + std::lgamma(k + 1.0);
    mu[k] = (k % 2 ? -1.0 : 1.0) * std::exp(log_mag);
  }
  return mu;
}

CpMinusXdpReport verify_cp_minus_xdp(const Poly& p, double C) {
  if (p.degree() < 1) throw DomainError("p must have positive degree");
  if (p[0] != 1.0) throw DomainError("p must satisfy p(0) = 1");
  if (!std::isfinite(C)) throw DomainError("C must be finite");
  if (!hyperbolic_positive(p)) throw DomainError("p must be hyperbolic with positive roots");

  CpMinusXdpReport r;
  r.p_first = *smallest_root_in(p, 0.0, root_bound(p));
  const Poly q = p * C - p.derivative().times_x();
  r.hyperbolic = is_hyperbolic(q);
  // Roots of q strictly inside (0, p_first): count on (0, p_first] minus a
  // possible root at p_first itself, which would mean p and p' share it.
  int inside = count_real_roots(q, 0.0, r.p_first);
  if (q(r.p_first) == 0.0) --inside;
  if (inside > 0) r.q_first_below = smallest_root_in(q, 0.0, r.p_first);
  r.location_ok = (C < 0.0) == (inside > 0);

  std::ostringstream os;
  os << "deg p=" << p.degree() << " C=" << C << " x1=" << r.p_first << " q "
     << (r.hyperbolic ? "hyperbolic" : "not hyperbolic") << ", roots in (0,x1): " << inside;
  r.detail = os.str();
  return r;
}

DiniReport verify_dini_precedence(const BesselDeriv& d, double a, int m) {
  validate(d);
  if (!(a < 0.0)) throw DomainError("a must be negative");
  if (m < 1) throw DomainError("Jensen order must be at least 1");
  if (m > kMaxJensenOrder) {
    throw IllConditioned("Jensen order " + std::to_string(m) + " exceeds " + std::to_string(kMaxJensenOrder));
  }

  DiniReport r;
  const Poly pj = jensen_poly(bessel_jensen_mu(d, m + 1), m);
  const Poly pw = pj * a - pj.derivative().times_x();

  r.bessel_hyperbolic_positive = hyperbolic_positive(pj);
  r.w_hyperbolic_positive = hyperbolic_positive(pw);
  r.bessel_first = smallest_root_in(pj, 0.0, root_bound(pj)).value_or(NAN);
  r.w_first = smallest_root_in(pw, 0.0, root_bound(pw)).value_or(NAN);
  r.precedence = r.w_first <= r.bessel_first;

  const double j1 = first_zero(ZeroFamily::j_deriv, d);
  // (2a-n+nu) J^(n)(z) - z J^(n+1)(z) = 2 c z^(nu-n) sum (-1)^k a_k (a-k) z^(2k), c > 0.
  const Weight weight{a, -1.0};
  auto w = [&](double z) {
    if (z <= kSeriesArgumentLimit) return sum_at(SeriesSpec{d, weight, 0, 2, 0, {}}, z * z).value;
    return sum_by_bessel_identity(d, weight, z);
  };
  const double near = w(1e-3 * j1);
  const double at = w(j1);
  r.function_sign_change = (near < 0.0 && at > 0.0) || (near > 0.0 && at < 0.0);

  std::ostringstream os;
  os << "nu=" << d.nu << " n=" << d.n << " a=" << a << " m=" << m << ": first Jensen zero " << r.w_first
     << " (W) vs " << r.bessel_first << " (J), W(0+)=" << near << " W(j1)=" << at;
  r.detail = os.str();
  return r;
}

}  // namespace besselgeo
