#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <sstream>

#include "app.hpp"
#include "besselgeo/errors.hpp"
#include "besselgeo/lp_check.hpp"
#include "besselgeo/radii.hpp"
#include "besselgeo/rayleigh.hpp"
#include "besselgeo/zeros.hpp"

namespace besselgeo::app {

namespace {

constexpr Kind kKinds[] = {Kind::f, Kind::g, Kind::h};
constexpr Property kProps[] = {Property::starlike, Property::convex};

SuiteResult suite(std::string name) {
  SuiteResult s;
  s.name = std::move(name);
  return s;
}

std::string label(const BesselDeriv& d) {
  std::ostringstream os;
  os << "nu=" << d.nu << " n=" << d.n;
  return os.str();
}

std::vector<BesselDeriv> grid(const VerifyOptions& o, int max_n) {
  std::vector<BesselDeriv> out;
  for (double nu : o.grid_nu) {
    for (int n = 0; n <= max_n; ++n) {
      if (nu > n - 1) out.push_back({nu, n});
    }
  }
  return out;
}

bool defined(Property prop, Kind kind, const BesselDeriv& d) {
  if (kind != Kind::f) return true;
  return prop == Property::starlike ? d.nu != d.n : d.nu > d.n;
}

void check(SuiteResult& s, bool ok, const std::string& what) {
  ++s.total;
  if (ok) {
    ++s.passed;
  } else {
    s.failures.push_back(what);
  }
}

void merge(SuiteResult& into, const SuiteResult& part) {
  into.passed += part.passed;
  into.total += part.total;
  into.failures.insert(into.failures.end(), part.failures.begin(), part.failures.end());
}

SuiteResult table_suite(int which) {
  SuiteResult s = suite("table-" + std::to_string(which));
  const TableReport rep = run_table(which);
  for (const auto& c : rep.cells) {
    std::ostringstream os;
    os << to_string(c.kind) << " n=" << c.n << " beta=" << c.beta;
    if (!c.computed) {
      check(s, false, os.str() + ": " + c.error);
      continue;
    }
    if (c.anomaly) continue;
    os << ": " << *c.computed << " vs " << c.reference;
    check(s, *c.deviation < 1e-3, os.str());
  }
  // beta monotonicity within every row, anomaly cell included
  for (std::size_t i = 0; i + 1 < rep.cells.size(); i += 2) {
    const auto& a = rep.cells[i];
    const auto& b = rep.cells[i + 1];
    if (a.computed && b.computed) {
      check(s, *b.computed < *a.computed,
            std::string(to_string(a.kind)) + " n=" + std::to_string(a.n) + ": not decreasing in beta");
    }
  }
  return s;
}

SuiteResult elementary_suite() {
  SuiteResult s = suite("elementary");
  const double g = compute_radius(Property::starlike, Kind::g, {1.5, 2, 0.0}).radius;
  const double h = compute_radius(Property::starlike, Kind::h, {1.5, 2, 0.0}).radius;
  check(s, std::sqrt(2.0 / 7.0) < g && g < std::sqrt(3.0 / 7.0), "g_{1.5,2} radius " + format_number(g));
  check(s, 3.0 / 7.0 < h && h < 2940.0 / 5969.0, "h_{1.5,2} radius " + format_number(h));
  return s;
}

SuiteResult sums_for(const BesselDeriv& d, int count, double tol) {
  SuiteResult s;
  auto compare = [&](const std::string& name, double numeric, double closed) {
    const double rel = std::abs(numeric / closed - 1.0);
    check(s, rel < tol, label(d) + " " + name + ": relative error " + format_number(rel));
  };
  const ZeroSequence j = find_zeros(ZeroFamily::j_deriv, d, count);
  compare("j2", numeric_rayleigh_sum(j, 1), zero_power_sum(d, 2).value);
  compare("j4", numeric_rayleigh_sum(j, 2), zero_power_sum(d, 4).value);
  for (AuxFamily f : {AuxFamily::sigma, AuxFamily::rho, AuxFamily::kappa, AuxFamily::omega}) {
    const ZeroSequence z = find_zeros(zero_family_of(f), d, count);
    const auto [first, second] = auxiliary_sums(f, d);
    compare(std::string(to_string(f)) + "1", numeric_rayleigh_sum(z, 1), first.value);
    compare(std::string(to_string(f)) + "2", numeric_rayleigh_sum(z, 2), second.value);
  }
  return s;
}

SuiteResult sum_suite(const VerifyOptions& o) {
  SuiteResult s = suite("sum-identity");
  std::vector<std::future<SuiteResult>> jobs;
  for (const auto& d : grid(o, 3)) {
    jobs.push_back(std::async(std::launch::async, sums_for, d, o.zero_count, o.sum_rel_tol));
  }
  for (auto& j : jobs) merge(s, j.get());
  return s;
}

SuiteResult bounds_suite(const VerifyOptions& o) {
  SuiteResult s = suite("bounds-sandwich");
  struct Case {
    BoundTarget target;
    Property prop;
    Kind kind;
  };
  const Case cases[] = {{BoundTarget::starlike_g, Property::starlike, Kind::g},
                        {BoundTarget::starlike_h, Property::starlike, Kind::h},
                        {BoundTarget::convex_g, Property::convex, Kind::g},
                        {BoundTarget::convex_h, Property::convex, Kind::h}};
  for (const auto& d : grid(o, 3)) {
    for (const auto& c : cases) {
      const BoundsPair b = radius_bounds(c.target, d);
      const double r = compute_radius(c.prop, c.kind, {d.nu, d.n, 0.0}).radius;
      std::ostringstream os;
      os << label(d) << " " << to_string(c.target) << ": " << b.lower << " < " << r << " < " << b.upper;
      check(s, b.lower < r && r < b.upper, os.str());
      if (b.extra_upper) check(s, r < *b.extra_upper, os.str() + " (extra " + format_number(*b.extra_upper) + ")");
    }
  }
  return s;
}

SuiteResult interlacing_suite(const VerifyOptions& o) {
  SuiteResult s = suite("interlacing");
  for (const auto& d : grid(o, 3)) {
    if (d.nu > d.n) {
      const auto a = find_zeros(ZeroFamily::j_deriv, d, 10);
      const auto b = find_zeros(ZeroFamily::j_deriv, {d.nu, d.n + 1}, 10);
      const InterlacingReport r = check_interlacing(a, b);
      check(s, r.ok, label(d) + ": " + r.detail);
    }
    const double j1 = first_zero(ZeroFamily::j_deriv, d);
    const double gamma1 = first_zero(ZeroFamily::g_prime, d);
    const double delta1 = first_zero(ZeroFamily::h_prime, d);
    check(s, gamma1 <= j1, label(d) + ": gamma_1 exceeds j_1");
    check(s, delta1 <= j1 * j1, label(d) + ": delta_1 exceeds j_1^2");
  }
  return s;
}

SuiteResult monotonicity_suite(const VerifyOptions& o) {
  SuiteResult s = suite("monotonicity");
  const double betas[] = {0.0, 0.25, 0.5, 0.75};
  for (const auto& d : grid(o, 3)) {
    for (Property prop : kProps) {
      for (Kind kind : kKinds) {
        if (!defined(prop, kind, d)) continue;
        const std::string tag = label(d) + " " + std::string(to_string(prop)) + " " + std::string(to_string(kind));
        double prev = INFINITY;
        for (double beta : betas) {
          const double r = compute_radius(prop, kind, {d.nu, d.n, beta}).radius;
          check(s, r < prev, tag + ": not decreasing at beta=" + format_number(beta));
          prev = r;
        }
        const BesselDeriv next{d.nu, d.n + 1};
        if (d.nu > next.n - 1 && defined(prop, kind, next)) {
          for (double beta : {0.0, 0.5}) {
            const double r0 = compute_radius(prop, kind, {d.nu, d.n, beta}).radius;
            const double r1 = compute_radius(prop, kind, {d.nu, next.n, beta}).radius;
            check(s, r1 < r0, tag + ": not decreasing in n at beta=" + format_number(beta));
          }
        }
      }
    }
    for (Kind kind : kKinds) {
      if (!defined(Property::convex, kind, d)) continue;
      for (double beta : {0.0, 0.5}) {
        const double rc = compute_radius(Property::convex, kind, {d.nu, d.n, beta}).radius;
        const double rs = compute_radius(Property::starlike, kind, {d.nu, d.n, beta}).radius;
        check(s, rc <= rs, label(d) + " " + std::string(to_string(kind)) + ": convex radius exceeds starlike");
      }
    }
  }
  return s;
}

SuiteResult product_suite(const VerifyOptions& o) {
  SuiteResult s = suite("product");
  for (const auto& d : grid(o, 3)) {
    const ZeroSequence zs = find_zeros(ZeroFamily::j_deriv, d, o.zero_count);
    const ZeroTail tail(zs);
    const double half = 0.5 * zs.argument(0);
    double worst = 0.0;
    for (int i = 1; i <= 20; ++i) {
      const double z = half * i / 20.0;
      double log_prod = tail.log_product(z);
      for (std::size_t m = zs.size(); m-- > 0;) log_prod += std::log1p(-(z * z) / (zs.argument(m) * zs.argument(m)));
      const double series = sum_at(series::core(d), z * z).value;
      worst = std::max(worst, std::abs(std::exp(log_prod) / series - 1.0));
    }
    check(s, worst < 1e-6, label(d) + ": product vs series relative error " + format_number(worst));
  }
  return s;
}

SuiteResult cp_minus_xdp_suite(const VerifyOptions& o) {
  SuiteResult s = suite("cp-minus-xdp");
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> degree(1, 6);
  std::uniform_real_distribution<double> root(0.0, 10.0), neg(-5.0, 0.0), pos(0.0, 5.0);
  for (int i = 0; i < o.random_polys; ++i) {
    std::vector<double> roots(degree(rng));
    for (auto& r : roots) {
      do {
        r = root(rng);
      } while (r == 0.0);
    }
    const Poly p = Poly::from_roots_normalized(roots);
    for (double C : {neg(rng), pos(rng)}) {
      const CpMinusXdpReport r = verify_cp_minus_xdp(p, C);
      check(s, r.ok(), "poly " + std::to_string(i) + ": " + r.detail);
    }
  }
  return s;
}

SuiteResult dini_suite(const VerifyOptions& o) {
  SuiteResult s = suite("dini-precedence");
  for (const auto& d : grid(o, 2)) {
    for (double a : {-1.0, -0.5, -0.25}) {
      const DiniReport r = verify_dini_precedence(d, a, 8);
      check(s, r.ok(), r.detail);
    }
  }
  return s;
}

SuiteResult oracle_suite() {
  SuiteResult s = suite("oracle");
  const double c = std::sqrt(2.0 / std::numbers::pi);
  struct Oracle {
    BesselDeriv d;
    double (*f)(double);
  };
  // c = sqrt(2/pi) is folded in below.
  const Oracle oracles[] = {
      {{0.5, 0}, [](double z) { return std::sin(z) / std::sqrt(z); }},
      {{0.5, 1}, [](double z) { return (z * std::cos(z) - std::sin(z) / 2) / std::pow(z, 1.5); }},
      {{0.5, 2},
       [](double z) { return (-z * z * std::sin(z) - z * std::cos(z) + 0.75 * std::sin(z)) / std::pow(z, 2.5); }},
      {{1.5, 0}, [](double z) { return (std::sin(z) - z * std::cos(z)) / std::pow(z, 1.5); }},
      {{1.5, 1},
       [](double z) { return (2 * z * z * std::sin(z) + 3 * z * std::cos(z) - 3 * std::sin(z)) / (2 * std::pow(z, 2.5)); }},
      {{1.5, 2},
       [](double z) {
         return (4 * z * z * z * std::cos(z) - 8 * z * z * std::sin(z) - 15 * z * std::cos(z) + 15 * std::sin(z)) /
                (4 * std::pow(z, 3.5));
       }},
  };
  for (const auto& orc : oracles) {
    double worst = 0.0, at = 0.0;
    for (int i = 0; i <= 99; ++i) {
      const double z = 0.1 + 9.9 * i / 99.0;
      const double want = c * orc.f(z);
      const double got = orc.d.nu > orc.d.n - 1 ? eval_bessel_deriv(orc.d, z) : eval_bessel_deriv_direct(orc.d, z);
      const double rel = std::abs(got - want) / std::abs(want);
      if (rel > worst) {
        worst = rel;
        at = z;
      }
    }
    check(s, worst < 1e-10,
          label(orc.d) + ": relative error " + format_number(worst) + " at z=" + format_number(at));
  }
  return s;
}

}  // namespace

void validate(const VerifyOptions& o) {
  if (o.grid_nu.empty()) throw DomainError("grid-nu must not be empty");
  for (double nu : o.grid_nu) {
    if (!std::isfinite(nu) || !(nu > -1.0)) {
      throw DomainError("grid-nu value " + format_number(nu) + " admits no derivative order (need nu > n - 1)");
    }
  }
  if (o.zero_count < 2) throw DomainError("zero count must be at least 2");
  if (!(o.sum_rel_tol > 0.0)) throw DomainError("sum tolerance must be positive");
  if (o.random_polys < 1) throw DomainError("random polynomial count must be positive");
}

std::vector<SuiteResult> run_verify(const VerifyOptions& o) {
  validate(o);
  auto guarded = [](std::string name, auto fn) {
    try {
      SuiteResult r = fn();
      r.name = name;
      return r;
    } catch (const Error& e) {
      SuiteResult r = suite(name);
      r.total = 1;
      r.failures.push_back(e.what());
      return r;
    }
  };
  std::vector<std::future<SuiteResult>> jobs;
  jobs.push_back(std::async(std::launch::async, [&] { return guarded("table-1", [] { return table_suite(1); }); }));
  jobs.push_back(std::async(std::launch::async, [&] { return guarded("table-2", [] { return table_suite(2); }); }));
  jobs.push_back(std::async(std::launch::async, [&] { return guarded("elementary", elementary_suite); }));
  jobs.push_back(
      std::async(std::launch::async, [&] { return guarded("sum-identity", [&] { return sum_suite(o); }); }));
  jobs.push_back(
      std::async(std::launch::async, [&] { return guarded("bounds-sandwich", [&] { return bounds_suite(o); }); }));
  jobs.push_back(
      std::async(std::launch::async, [&] { return guarded("interlacing", [&] { return interlacing_suite(o); }); }));
  jobs.push_back(
      std::async(std::launch::async, [&] { return guarded("monotonicity", [&] { return monotonicity_suite(o); }); }));
  jobs.push_back(std::async(std::launch::async, [&] { return guarded("product", [&] { return product_suite(o); }); }));
  jobs.push_back(std::async(std::launch::async, [&] { return guarded("cp-minus-xdp", [&] { return cp_minus_xdp_suite(o); }); }));
  jobs.push_back(std::async(std::launch::async, [&] { return guarded("dini-precedence", [&] { return dini_suite(o); }); }));
  jobs.push_back(std::async(std::launch::async, [&] { return guarded("oracle", oracle_suite); }));

  std::vector<SuiteResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace besselgeo::app
