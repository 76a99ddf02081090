#include "besselgeo/rayleigh.hpp"

#include <cmath>

#include "besselgeo/errors.hpp"
#include "besselgeo/series.hpp"

namespace besselgeo {

namespace {

// Recurring factors: D = (nu-n+2)(nu-n+1), E = (nu-n+4)(nu-n+3),
// A = nu+2, B = (nu+4)(nu+3).
struct Factors {
  double D, E, A, B;
};

Factors factors(const BesselDeriv& d) {
  validate(d);
  const double nu = d.nu, n = d.n;
  return {(nu - n + 2) * (nu - n + 1), (nu - n + 4) * (nu - n + 3), nu + 2, (nu + 4) * (nu + 3)};
}

}  // namespace

std::string_view to_string(SumFamily f) {
  switch (f) {
    case SumFamily::j2: return "j2";
    case SumFamily::j4: return "j4";
    case SumFamily::sigma1: return "sigma1";
    case SumFamily::sigma2: return "sigma2";
    case SumFamily::rho1: return "rho1";
    case SumFamily::rho2: return "rho2";
    case SumFamily::kappa1: return "kappa1";
    case SumFamily::kappa2: return "kappa2";
    case SumFamily::omega1: return "omega1";
    case SumFamily::omega2: return "omega2";
  }
  return "?";
}

std::string_view to_string(AuxFamily f) {
  switch (f) {
    case AuxFamily::sigma: return "sigma";
    case AuxFamily::rho: return "rho";
    case AuxFamily::kappa: return "kappa";
    case AuxFamily::omega: return "omega";
  }
  return "?";
}

AuxFamily parse_aux_family(std::string_view s) {
  for (AuxFamily f : {AuxFamily::sigma, AuxFamily::rho, AuxFamily::kappa, AuxFamily::omega}) {
    if (s == to_string(f)) return f;
  }
  throw DomainError("unknown sum family '" + std::string(s) + "'");
}

ZeroFamily zero_family_of(AuxFamily f) {
  switch (f) {
    case AuxFamily::sigma: return ZeroFamily::g_prime;
    case AuxFamily::rho: return ZeroFamily::h_prime;
    case AuxFamily::kappa: return ZeroFamily::delta;
    case AuxFamily::omega: return ZeroFamily::theta;
  }
  return ZeroFamily::j_deriv;
}

SumValue zero_power_sum(const BesselDeriv& d, int power) {
  const auto [D, E, A, B] = factors(d);
  if (power == 2) return {SumFamily::j2, d, A / (4 * D)};
  if (power == 4) return {SumFamily::j4, d, 1.0 / (16 * D) * (A * A / D - B / E)};
  throw DomainError("zero_power_sum supports power 2 or 4");
}

std::pair<SumValue, SumValue> auxiliary_sums(AuxFamily family, const BesselDeriv& d) {
  const auto [D, E, A, B] = factors(d);
  switch (family) {
    case AuxFamily::sigma:
      return {{SumFamily::sigma1, d, 3 * A / (4 * D)},
              {SumFamily::sigma2, d, 3 * A / (16 * D) * (3 * A / D - 5 * B / (3 * E * A))}};
    case AuxFamily::rho:
      return {{SumFamily::rho1, d, A / (2 * D)}, {SumFamily::rho2, d, A / (4 * D) * (A / D - 3 * B / (4 * E * A))}};
    case AuxFamily::kappa:
      return {{SumFamily::kappa1, d, 9 * A / (4 * D)},
              {SumFamily::kappa2, d, 9 * A / (16 * D) * (9 * A / D - 25 * B / (9 * E * A))}};
    case AuxFamily::omega:
      return {{SumFamily::omega1, d, A / D}, {SumFamily::omega2, d, A / D * (A / D - 9 * B / (16 * E * A))}};
  }
  throw DomainError("unknown sum family");
}

std::string_view to_string(BoundTarget t) {
  switch (t) {
    case BoundTarget::starlike_g: return "starlike-g";
    case BoundTarget::starlike_h: return "starlike-h";
    case BoundTarget::convex_g: return "convex-g";
    case BoundTarget::convex_h: return "convex-h";
  }
  return "?";
}

BoundTarget parse_bound_target(std::string_view s) {
  for (BoundTarget t :
       {BoundTarget::starlike_g, BoundTarget::starlike_h, BoundTarget::convex_g, BoundTarget::convex_h}) {
    if (s == to_string(t)) return t;
  }
  throw DomainError("unknown bound target '" + std::string(s) + "'");
}

BoundsPair radius_bounds(BoundTarget target, const BesselDeriv& d) {
  const auto [D, E, A, B] = factors(d);
  BoundsPair out;
  out.target = target;
  out.deriv = d;
  switch (target) {
    case BoundTarget::starlike_g:
      out.lower = 2 * std::sqrt(D / (3 * A));
      out.upper = 2 * std::sqrt(1 / (3 * A / D - 5 * B / (3 * E * A)));
      out.extra_upper = std::sqrt(2 * D / A);
      break;
    case BoundTarget::starlike_h:
      out.lower = 2 * D / A;
      out.upper = 2 / (A / D - 3 * B / (4 * E * A));
      // 1/r = sum 1/(j^2 - r) > sum 1/j^2 = A/(4D).
      out.extra_upper = 4 * D / A;
      break;
    case BoundTarget::convex_g:
      out.lower = 2.0 / 3.0 * std::sqrt(D / A);
      out.upper = 2 * std::sqrt(1 / (9 * A / D - 25 * B / (9 * E * A)));
      break;
    case BoundTarget::convex_h:
      out.lower = D / A;
      out.upper = 1 / (A / D - 9 * B / (16 * E * A));
      break;
  }
  return out;
}

std::vector<double> rayleigh_sums_by_coefficients(ZeroFamily family, const BesselDeriv& d, int kmax) {
  validate(d);
  if (kmax < 1) throw DomainError("kmax must be at least 1");
  std::vector<double> sums(kmax);

  if (family == ZeroFamily::j_deriv) {
    // prod (1 - t/t_m) = sum c_m t^m with c_0 = 1; Newton's identities.
    const SeriesSpec core = series::core(d);
    std::vector<double> c(kmax + 1);
    for (int m = 0; m <= kmax; ++m) c[m] = core.coefficient(m);
    for (int k = 1; k <= kmax; ++k) {
      double p = -k * c[k];
      for (int i = 1; i < k; ++i) p -= c[i] * sums[k - i - 1];
      sums[k - 1] = p;
    }
    return sums;
  }

  // F'/F as num/den, both power series in the product variable t. For
  // families even in z, F'(z)/F(z) = 2z * (d/dt log F), and the numerator
  // series carries that extra factor 2.
  SeriesSpec num, den;
  double scale = 1.0;
  switch (family) {
    case ZeroFamily::g_prime:
      num = series::g_prime_log_numerator(d);
      den = series::g_prime(d);
      scale = 2.0;
      break;
    case ZeroFamily::delta:
      num = series::delta_log_numerator(d);
      den = series::delta(d);
      scale = 2.0;
      break;
    case ZeroFamily::h_prime:
      num = series::h_prime_log_numerator(d);
      den = series::h_prime(d);
      break;
    case ZeroFamily::theta:
      num = series::theta_log_numerator(d);
      den = series::theta(d);
      break;
    case ZeroFamily::j_deriv:
      break;
  }
  std::vector<double> nc(kmax), dc(kmax), q(kmax);
  for (int m = 0; m < kmax; ++m) {
    nc[m] = num.coefficient(m);
    dc[m] = den.coefficient(m);
  }
  for (int k = 0; k < kmax; ++k) {
    double v = nc[k];
    for (int i = 1; i <= k; ++i) v -= dc[i] * q[k - i];
    q[k] = v / dc[0];
  }
  // d/dt log F = -sum_k S_(k+1) t^k.
  for (int k = 0; k < kmax; ++k) sums[k] = -q[k] / scale;
  return sums;
}

double numeric_rayleigh_sum(const ZeroSequence& seq, int k) {
  if (k < 1) throw DomainError("power must be at least 1");
  if (seq.size() < 2) throw LengthError("numeric sums need at least two zeros");
  // Smallest terms first.
  double sum = ZeroTail(seq).inverse_power_sum(2.0 * k);
  for (std::size_t i = seq.size(); i-- > 0;) {
    const double x = seq.argument(i);
    sum += std::pow(x, -2.0 * k);
  }
  return sum;
}

}  // namespace besselgeo
