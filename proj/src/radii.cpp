#include "besselgeo/radii.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "besselgeo/errors.hpp"

namespace besselgeo {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPoleShrink = 1e-9;
constexpr double kLowerFraction = 1e-8;

std::string describe(Property prop, Kind kind, const Params& p) {
  std::ostringstream os;
  os << to_string(prop) << " radius of " << to_string(kind) << " (nu=" << p.nu << ", n=" << p.n
     << ", beta=" << p.beta << ")";
  return os.str();
}

RadiusResult solve(Property prop, Kind kind, const Params& p, double lo, double hi, const TruncationPolicy& tp) {
  auto eq = [&](double r) { return radius_equation(prop, kind, p, r, tp); };
  double flo = eq(lo).value;
  const double fhi = eq(hi).value;
  if (!(flo > 0.0) || !(fhi < 0.0)) {
    std::ostringstream os;
    os << describe(prop, kind, p) << ": no sign change on [" << lo << ", " << hi << "] (values " << flo << ", "
       << fhi << ")";
    throw BracketFailure(os.str());
  }
  for (int it = 0; it < 400 && hi - lo > 8.0 * kEps * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = eq(mid).value;
    if (fm > 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double r = 0.5 * (lo + hi);
  Jet at = eq(r);
  for (int polish = 0; polish < 2; ++polish) {
    if (at.slope == 0.0 || !std::isfinite(at.slope)) break;
    const double next = r - at.value / at.slope;
    if (!(next > lo && next < hi)) break;
    const Jet trial = eq(next);
    if (std::abs(trial.value) > std::abs(at.value)) break;
    r = next;
    at = trial;
  }
  RadiusResult out;
  out.kind = kind;
  out.property = prop;
  out.params = p;
  out.radius = r;
  out.bracket = {lo, hi};
  out.residual = at.value;
  out.branch = branch_for(prop, kind, p.deriv());
  return out;
}

}  // namespace

std::string_view to_string(Branch b) { return b == Branch::principal ? "principal" : "modified"; }

Branch branch_for(Property prop, Kind kind, const BesselDeriv& d) {
  if (prop == Property::starlike && kind == Kind::f && d.nu < d.n) return Branch::modified;
  return Branch::principal;
}

Jet radius_equation(Property prop, Kind kind, const Params& p, double r, const TruncationPolicy& tp) {
  const BesselDeriv d = p.deriv();
  if (prop == Property::convex) {
    const Jet q = convex_quotient_jet(kind, d, r, tp);
    return {q.value - p.beta, q.slope};
  }
  if (branch_for(prop, kind, d) == Branch::modified) {
    const Jet q = modified_quotient_jet(d, r, tp);
    return {q.value / shift(d) - p.beta, q.slope / shift(d)};
  }
  const Jet q = star_quotient_jet(kind, d, r, tp);
  return {q.value - p.beta, q.slope};
}

double certified_limit(Property prop, Kind kind, const BesselDeriv& d) {
  if (prop == Property::starlike) {
    const double j1 = first_zero(ZeroFamily::j_deriv, d);
    return kind == Kind::h ? j1 * j1 : j1;
  }
  switch (kind) {
    case Kind::f: return first_zero(ZeroFamily::j_deriv, {d.nu, d.n + 1});
    case Kind::g: return first_zero(ZeroFamily::g_prime, d);
    case Kind::h: return first_zero(ZeroFamily::h_prime, d);
  }
  throw DomainError("unknown kind");
}

RadiusResult starlike_radius(Kind kind, const Params& p, const TruncationPolicy& tp) {
  validate(p);
  const BesselDeriv d = p.deriv();
  if (kind == Kind::f && d.nu == d.n) throw DomainError("f is undefined for nu = n");

  if (branch_for(Property::starlike, kind, d) == Branch::modified) {
    // The modified quotient is increasing on (0, inf), so the root is unique;
    // grow the right end until the sign flips.
    double lo = kLowerFraction;
    double hi = 1.0;
    while (radius_equation(Property::starlike, kind, p, hi, tp).value >= 0.0) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e4) throw BracketFailure(describe(Property::starlike, kind, p) + ": no root below 1e4");
    }
    return solve(Property::starlike, kind, p, lo, hi, tp);
  }

  const double limit = certified_limit(Property::starlike, kind, d);
  return solve(Property::starlike, kind, p, limit * kLowerFraction, limit * (1.0 - kPoleShrink), tp);
}

RadiusResult convex_radius(Kind kind, const Params& p, const TruncationPolicy& tp) {
  validate(p);
  const BesselDeriv d = p.deriv();
  if (kind == Kind::f && !(d.nu > d.n)) throw DomainError("convexity radius of f requires nu > n");
  const double limit = certified_limit(Property::convex, kind, d);
  return solve(Property::convex, kind, p, limit * kLowerFraction, limit * (1.0 - kPoleShrink), tp);
}

RadiusResult compute_radius(Property prop, Kind kind, const Params& p, const TruncationPolicy& tp) {
  return prop == Property::starlike ? starlike_radius(kind, p, tp) : convex_radius(kind, p, tp);
}

}  // namespace besselgeo
