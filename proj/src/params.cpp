#include "besselgeo/params.hpp"

#include <cmath>
#include <sstream>

#include "besselgeo/errors.hpp"

namespace besselgeo {

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::f: return "f";
    case Kind::g: return "g";
    case Kind::h: return "h";
  }
  return "?";
}

std::string_view to_string(Property p) { return p == Property::starlike ? "starlike" : "convex"; }

Kind parse_kind(std::string_view s) {
  if (s == "f") return Kind::f;
  if (s == "g") return Kind::g;
  if (s == "h") return Kind::h;
  throw DomainError("unknown kind '" + std::string(s) + "' (expected f, g or h)");
}

Property parse_property(std::string_view s) {
  if (s == "starlike") return Property::starlike;
  if (s == "convex") return Property::convex;
  throw DomainError("unknown property '" + std::string(s) + "' (expected starlike or convex)");
}

void validate(const BesselDeriv& d) {
  if (!std::isfinite(d.nu)) throw DomainError("nu must be finite");
  if (d.n < 0) throw DomainError("derivative order n must be non-negative");
  if (!(d.nu > d.n - 1)) {
    std::ostringstream os;
    os << "nu must exceed n - 1 (got nu=" << d.nu << ", n=" << d.n << ")";
    throw DomainError(os.str());
  }
}

void validate(const Params& p) {
  validate(p.deriv());
  if (!(p.beta >= 0.0 && p.beta < 1.0)) {
    std::ostringstream os;
    os << "beta must lie in [0, 1) (got " << p.beta << ")";
    throw DomainError(os.str());
  }
}

}  // namespace besselgeo
