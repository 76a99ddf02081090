#include "besselgeo/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "besselgeo/errors.hpp"

namespace besselgeo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kScanStart = 1e-3;
constexpr double kScanStep = kPi / 8.0;

bool same_sign(double a, double b) { return (a > 0.0) == (b > 0.0); }

double scan_limit(const BesselDeriv& d, int count) {
  return (count + std::abs(d.nu) + d.n + 10.0) * kPi + 10.0;
}

}  // namespace

std::string_view to_string(ZeroFamily f) {
  switch (f) {
    case ZeroFamily::j_deriv: return "J-deriv";
    case ZeroFamily::g_prime: return "g-prime";
    case ZeroFamily::h_prime: return "h-prime";
    case ZeroFamily::delta: return "Delta";
    case ZeroFamily::theta: return "Theta";
  }
  return "?";
}

ZeroFamily parse_zero_family(std::string_view s) {
  for (ZeroFamily f : {ZeroFamily::j_deriv, ZeroFamily::g_prime, ZeroFamily::h_prime, ZeroFamily::delta,
                       ZeroFamily::theta}) {
    if (s == to_string(f)) return f;
  }
  throw DomainError("unknown zero family '" + std::string(s) + "'");
}

ZeroVariable variable_of(ZeroFamily f) {
  return (f == ZeroFamily::h_prime || f == ZeroFamily::theta) ? ZeroVariable::h_argument
                                                              : ZeroVariable::bessel_argument;
}

Weight family_weight(ZeroFamily f) {
  switch (f) {
    case ZeroFamily::j_deriv: return Weight{1.0};
    case ZeroFamily::g_prime: return Weight{1.0, 2.0};
    case ZeroFamily::h_prime: return Weight{1.0, 1.0};
    case ZeroFamily::delta: return Weight{1.0, 4.0, 4.0};
    case ZeroFamily::theta: return Weight{1.0, 2.0, 1.0};
  }
  return Weight{1.0};
}

Jet eval_family(ZeroFamily f, const BesselDeriv& d, double x) {
  const Weight w = family_weight(f);
  // d/dx sum c_m w(m) x^(2m) = (1/x) sum c_m 2m w(m) x^(2m)
  const Weight dw = w.times_index() * 2.0;
  if (x <= kSeriesArgumentLimit) {
    const SeriesSpec value{d, w, 0, 2, 0, {}};
    const SeriesSpec slope{d, dw, 0, 2, 0, {}};
    const double s = x * x;
    return {sum_at(value, s).value, sum_at(slope, s).value / x};
  }
  return {sum_by_bessel_identity(d, w, x), sum_by_bessel_identity(d, dw, x) / x};
}

double ZeroSequence::argument(std::size_t i) const {
  const double v = zeros.at(i);
  return variable() == ZeroVariable::h_argument ? std::sqrt(v) : v;
}

ZeroSequence find_zeros(ZeroFamily which, const BesselDeriv& d, int count, double refine_tol) {
  validate(d);
  if (count < 1) throw DomainError("count must be at least 1");
  if (!(refine_tol > 0.0)) throw DomainError("refine_tol must be positive");

  ZeroSequence out;
  out.which = which;
  out.deriv = d;
  out.refine_tol = refine_tol;
  out.zeros.reserve(count);
  out.brackets.reserve(count);

  auto value = [&](double x) { return eval_family(which, d, x).value; };

  const double limit = scan_limit(d, count);
  double x0 = kScanStart;
  double f0 = value(x0);
  while (static_cast<int>(out.zeros.size()) < count) {
    if (x0 > limit) {
      std::ostringstream os;
      os << "found only " << out.zeros.size() << " of " << count << " zeros of " << to_string(which)
         << " (nu=" << d.nu << ", n=" << d.n << ") below x=" << limit;
      throw ScanExhausted(os.str());
    }
    double x1 = x0 + kScanStep;
    double f1 = value(x1);
    if (f1 == 0.0) {
      x1 += 1e-6 * kScanStep;
      f1 = value(x1);
    }
    if (same_sign(f0, f1)) {
      x0 = x1;
      f0 = f1;
      continue;
    }

    double lo = x0, hi = x1, flo = f0;
    for (int it = 0; it < 200 && hi - lo > refine_tol * std::max(1.0, lo); ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = value(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if (same_sign(fm, flo)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    double x = 0.5 * (lo + hi);
    for (int polish = 0; polish < 2; ++polish) {
      const Jet j = eval_family(which, d, x);
      if (j.slope == 0.0 || !std::isfinite(j.slope)) break;
      const double next = x - j.value / j.slope;
      if (!(next >= lo && next <= hi)) break;
      x = next;
    }

    if (!out.brackets.empty()) {
      const double prev = out.brackets.back().hi;
      if (x - prev <= 10.0 * refine_tol * std::max(1.0, x)) {
        std::ostringstream os;
        os << "zeros of " << to_string(which) << " near x=" << x << " are not separated";
        throw IllConditioned(os.str());
      }
    }
    out.brackets.push_back({lo, hi});
    out.zeros.push_back(variable_of(which) == ZeroVariable::h_argument ? x * x : x);

    x0 = x1;
    f0 = f1;
  }
  return out;
}

double first_zero(ZeroFamily which, const BesselDeriv& d) { return find_zeros(which, d, 1).zeros.front(); }

InterlacingReport check_interlacing(const ZeroSequence& a, const ZeroSequence& b) {
  if (a.size() < 2 || b.size() < 2) {
    throw LengthMismatch("interlacing needs at least two zeros in each sequence");
  }
  if (a.deriv.nu != b.deriv.nu) throw DomainError("interlacing compares zeros for the same nu");

  const std::size_t common = std::min(a.size(), b.size());
  const bool b_leads = b.argument(0) < a.argument(0);
  std::vector<double> merged;
  merged.reserve(2 * common);
  for (std::size_t i = 0; i < common; ++i) {
    if (b_leads) {
      merged.push_back(b.argument(i));
      merged.push_back(a.argument(i));
    } else {
      merged.push_back(a.argument(i));
      merged.push_back(b.argument(i));
    }
  }

  InterlacingReport report;
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    if (!(merged[i] < merged[i + 1])) {
      report.ok = false;
      report.violation = i + 1;
      std::ostringstream os;
      os << "comparison " << i + 1 << " fails: " << merged[i] << " is not below " << merged[i + 1];
      report.detail = os.str();
      return report;
    }
  }
  report.ok = true;
  report.detail = b_leads ? "second sequence leads" : "first sequence leads";
  return report;
}

ZeroTail::ZeroTail(const ZeroSequence& seq, int explicit_terms) : explicit_terms_(explicit_terms) {
  if (seq.size() < 2) throw LengthError("tail extrapolation needs at least two zeros");
  const double last = seq.argument(seq.size() - 1);
  const double spacing = last - seq.argument(seq.size() - 2);
  // x_M = b - c/b and x_M - x_(M-1) = pi + c pi / (b (b - pi)).
  double b = last, c = 0.0;
  for (int it = 0; it < 50; ++it) {
    c = (spacing - kPi) * b * (b - kPi) / kPi;
    b = last + c / b;
  }
  anchor_ = b;
  curvature_ = c;
}

double ZeroTail::extrapolated(int k) const {
  const double b = anchor_ + k * kPi;
  return b - curvature_ / b;
}

double ZeroTail::inverse_power_sum(double p) const {
  double sum = 0.0;
  for (int k = explicit_terms_; k >= 1; --k) sum += std::pow(extrapolated(k), -p);
  // Midpoint-rule remainder with unit spacing in k.
  const double edge = anchor_ + (explicit_terms_ + 0.5) * kPi;
  return sum + std::pow(edge, 1.0 - p) / ((p - 1.0) * kPi);
}

double ZeroTail::log_product(double z) const {
  const double z2 = z * z;
  double sum = 0.0;
  for (int k = explicit_terms_; k >= 1; --k) {
    const double x = extrapolated(k);
    sum += std::log1p(-z2 / (x * x));
  }
  const double edge = anchor_ + (explicit_terms_ + 0.5) * kPi;
  return sum - z2 / (kPi * edge);
}

}  // namespace besselgeo
