#include "besselgeo/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "besselgeo/errors.hpp"

namespace besselgeo {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using RPoly = std::vector<Rational>;  // ascending, trimmed

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational exact(double x) {
  if (!std::isfinite(x)) throw IllConditioned("non-finite value in exact polynomial arithmetic");
  // Every finite double is a dyadic rational: x = mant * 2^e with an integer mant.
  int e = 0;
  const double mant = std::frexp(x, &e);
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  e -= 53;
  Rational r = Rational(scaled);
  if (e > 0) {
    r *= Rational(boost::multiprecision::cpp_int(1) << e);
  } else if (e < 0) {
    r /= Rational(boost::multiprecision::cpp_int(1) << -e);
  }
  return r;
}

RPoly to_rational(const Poly& p) {
  RPoly r;
  r.reserve(p.coefficients().size());
  for (double c : p.coefficients()) r.push_back(exact(c));
  trim(r);
  return r;
}

RPoly derivative(const RPoly& p) {
  RPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<int>(k));
  trim(d);
  return d;
}

// Remainder of a / b.
RPoly remainder(RPoly a, const RPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

RPoly quotient(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) return {};
  RPoly q(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
    a.pop_back();
  }
  trim(q);
  return q;
}

void normalize(RPoly& p) {
  const Rational lead = abs(p.back());
  for (auto& c : p) c /= lead;
}

Rational eval(const RPoly& p, const Rational& x) {
  Rational v = 0;
  for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
  return v;
}

std::vector<RPoly> sturm_chain(const RPoly& p) {
  std::vector<RPoly> chain{p, derivative(p)};
  normalize(chain[0]);
  if (!chain[1].empty()) normalize(chain[1]);
  while (!chain.back().empty()) {
    RPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    normalize(r);
    chain.push_back(std::move(r));
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

int variations(const std::vector<RPoly>& chain, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& q : chain) {
    const Rational v = eval(q, x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Sturm chains of the square-free factors p_1, p_2, ... with p = prod p_k^k
// grouped so that chain k counts the distinct roots of multiplicity >= k.
using ChainSet = std::vector<std::vector<RPoly>>;

ChainSet multiplicity_chains(RPoly p) {
  ChainSet out;
  while (p.size() > 1) {
    const auto chain = sturm_chain(p);
    const RPoly& g = chain.back();  // gcd(p, p') up to a constant
    out.push_back(g.size() > 1 ? sturm_chain(quotient(p, g)) : chain);
    if (g.size() <= 1) break;
    p = g;
  }
  return out;
}

int count_in(const ChainSet& chains, const Rational& lo, const Rational& hi) {
  int total = 0;
  for (const auto& c : chains) total += variations(c, lo) - variations(c, hi);
  return total;
}

}  // namespace

Poly::Poly(std::vector<double> c) : c_(std::move(c)) {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

double Poly::operator()(double x) const {
  double v = 0.0;
  for (std::size_t k = c_.size(); k-- > 0;) v = v * x + c_[k];
  return v;
}

Poly Poly::derivative() const {
  std::vector<double> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<double>(k));
  return Poly(std::move(d));
}

Poly Poly::operator*(double s) const {
  std::vector<double> c = c_;
  for (auto& v : c) v *= s;
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<double> c(std::max(c_.size(), o.c_.size()), 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = (*this)[static_cast<int>(k)] - o[static_cast<int>(k)];
  return Poly(std::move(c));
}

Poly Poly::times_x() const {
  if (c_.empty()) return {};
  std::vector<double> c(c_.size() + 1, 0.0);
  std::copy(c_.begin(), c_.end(), c.begin() + 1);
  return Poly(std::move(c));
}

Poly Poly::from_roots_normalized(const std::vector<double>& roots) {
  std::vector<double> c{1.0};
  for (double r : roots) {
    if (r == 0.0) throw DomainError("normalized product needs nonzero roots");
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] += c[k];
      next[k + 1] -= c[k] / r;
    }
    c = std::move(next);
  }
  return Poly(std::move(c));
}

int count_real_roots(const Poly& p, double lo, double hi) {
  if (p.is_zero()) throw DomainError("zero polynomial has no finite root count");
  if (!(lo < hi)) throw DomainError("root counting interval must satisfy lo < hi");
  return count_in(multiplicity_chains(to_rational(p)), exact(lo), exact(hi));
}

double root_bound(const Poly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has no root bound");
  const auto& c = p.coefficients();
  double m = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) m = std::max(m, std::abs(c[k] / c.back()));
  // Pad so rounding in the bound itself cannot exclude a root.
  return (1.0 + m) * (1.0 + 1e-9) + 1.0;
}

bool is_hyperbolic(const Poly& p) {
  if (p.degree() <= 0) return true;
  const double b = root_bound(p);
  return count_real_roots(p, -b, b) == p.degree();
}

std::optional<double> smallest_root_in(const Poly& p, double lo, double hi, double tol) {
  if (count_real_roots(p, lo, hi) == 0) return std::nullopt;
  const ChainSet chains = multiplicity_chains(to_rational(p));
  double a = lo, b = hi;
  // Invariant: no root in (lo, a], at least one in (a, b].
  for (int it = 0; it < 2000 && b - a > tol * std::max(std::abs(a), std::abs(b)); ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    if (count_in(chains, exact(a), exact(mid)) > 0) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return b;
}

}  // namespace besselgeo
