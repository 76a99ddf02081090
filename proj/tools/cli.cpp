#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "app.hpp"
#include "besselgeo/errors.hpp"
#include "besselgeo/radii.hpp"
#include "besselgeo/rayleigh.hpp"
#include "besselgeo/zeros.hpp"

namespace besselgeo::app {

namespace {

struct Flags {
  std::string format = "json";
  std::string kind;
  std::string property = "starlike";
  std::string which_family = "J-deriv";
  std::string target = "starlike-g";
  std::string family = "j";
  double nu = NAN;
  int n = 0;
  double beta = 0.0;
  double z = NAN;
  int count = 5;
  int table = 1;
  double rel_tol = TruncationPolicy{}.rel_tol;
  int max_terms = TruncationPolicy{}.max_terms;
  bool bessel_argument = false;
  std::vector<double> grid_nu{0.5, 1.5, 2.5, 3.5};
  int sum_zeros = 200;
};

TruncationPolicy policy(const Flags& f) {
  if (!(f.rel_tol > 0.0 && f.rel_tol < 1.0)) throw DomainError("rel-tol must lie in (0, 1)");
  if (f.max_terms < 1) throw DomainError("max-terms must be positive");
  TruncationPolicy tp;
  tp.rel_tol = f.rel_tol;
  tp.max_terms = f.max_terms;
  return tp;
}

std::string fixed4(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << x;
  return os.str();
}

Output cmd_eval(const Flags& f) {
  const BesselDeriv d{f.nu, f.n};
  validate(d);
  if (!std::isfinite(f.z) || f.z < 0.0) throw DomainError("z must be a finite nonnegative number");
  const TruncationPolicy tp = policy(f);

  Output out;
  out.doc = envelope("eval", f.nu, f.n, std::nullopt);
  double value = 0.0;
  std::string what;
  if (f.kind.empty()) {
    value = eval_bessel_deriv(d, f.z, tp);
    what = "J";
  } else {
    const Kind k = parse_kind(f.kind);
    what = std::string(to_string(k));
    if (f.property.empty() || f.property == "none") {
      value = eval_normalized(k, d, f.z, tp);
    } else if (parse_property(f.property) == Property::starlike) {
      value = eval_star_quotient(k, d, f.z, tp);
      what = "z " + what + "'/" + what;
    } else {
      value = eval_convex_quotient(k, d, f.z, tp);
      what = "1 + z " + what + "''/" + what + "'";
    }
  }
  out.doc["result"] = number(value);
  out.columns = {"command", "nu", "n", "z", "quantity", "value"};
  out.rows.push_back({"eval", number(f.nu), f.n, number(f.z), what, number(value)});
  out.text = what + " at z=" + format_number(f.z) + " (nu=" + format_number(f.nu) + ", n=" + std::to_string(f.n) +
             "): " + format_number(value) + "\n";
  return out;
}

Output cmd_zeros(const Flags& f) {
  const BesselDeriv d{f.nu, f.n};
  validate(d);
  if (f.count < 1) throw DomainError("count must be at least 1");
  const ZeroFamily which = parse_zero_family(f.which_family);
  const ZeroSequence zs = find_zeros(which, d, f.count);

  Output out;
  out.doc = envelope("zeros", f.nu, f.n, std::nullopt);
  json zeros = json::array(), brackets = json::array();
  out.columns = {"command", "nu", "n", "family", "index", "zero", "bracket_lo", "bracket_hi"};
  std::ostringstream text;
  text << "zeros of " << to_string(which) << " (nu=" << format_number(f.nu) << ", n=" << f.n << ")";
  if (zs.variable() == ZeroVariable::h_argument) text << ", in the variable of h";
  text << "\n";
  for (std::size_t i = 0; i < zs.size(); ++i) {
    zeros.push_back(number(zs.zeros[i]));
    brackets.push_back({number(zs.brackets[i].lo), number(zs.brackets[i].hi)});
    out.rows.push_back({"zeros", number(f.nu), f.n, std::string(to_string(which)), static_cast<int>(i + 1),
                        number(zs.zeros[i]), number(zs.brackets[i].lo), number(zs.brackets[i].hi)});
    text << std::setw(4) << i + 1 << "  " << format_number(zs.zeros[i]) << "\n";
  }
  out.doc["result"] = zeros;
  out.doc["bracket"] = brackets;
  if (zs.variable() == ZeroVariable::h_argument) {
    out.doc["warnings"].push_back("zeros are in the variable of h; brackets are in the Bessel argument");
  }
  out.text = text.str();
  return out;
}

Output cmd_radius(const Flags& f) {
  const Params p{f.nu, f.n, f.beta};
  validate(p);
  const Kind kind = parse_kind(f.kind.empty() ? "g" : f.kind);
  const Property prop = parse_property(f.property);
  const RadiusResult r = compute_radius(prop, kind, p, policy(f));

  const bool convert = f.bessel_argument && kind == Kind::h;
  auto conv = [&](double v) { return convert ? h_radius_to_bessel_argument(v) : v; };

  Output out;
  out.doc = envelope("radius", f.nu, f.n, f.beta);
  out.doc["result"] = number(conv(r.radius));
  out.doc["bracket"] = {number(conv(r.bracket.lo)), number(conv(r.bracket.hi))};
  out.doc["residual"] = number(r.residual);
  if (r.branch == Branch::modified) {
    out.doc["warnings"].push_back("modified branch: n-1 < nu < n, extremal point on the imaginary axis");
  }
  if (convert) out.doc["warnings"].push_back("h radius reported as a Bessel argument (square root of h's variable)");
  out.columns = {"command", "property", "kind", "nu", "n", "beta", "radius", "bracket_lo", "bracket_hi", "residual",
                 "branch"};
  out.rows.push_back({"radius", std::string(to_string(prop)), std::string(to_string(kind)), number(f.nu), f.n,
                      number(f.beta), number(conv(r.radius)), number(conv(r.bracket.lo)), number(conv(r.bracket.hi)),
                      number(r.residual), std::string(to_string(r.branch))});
  std::ostringstream text;
  text << to_string(prop) << " radius of " << to_string(kind) << " (nu=" << format_number(f.nu) << ", n=" << f.n
       << ", beta=" << format_number(f.beta) << "): " << format_number(conv(r.radius)) << "\n";
  if (kind == Kind::h && !convert) {
    text << "  in h's variable; Bessel argument " << format_number(h_radius_to_bessel_argument(r.radius)) << "\n";
  }
  text << "  branch " << to_string(r.branch) << ", residual " << format_number(r.residual) << "\n";
  out.text = text.str();
  return out;
}

Output cmd_bounds(const Flags& f) {
  const BesselDeriv d{f.nu, f.n};
  validate(d);
  const BoundTarget t = parse_bound_target(f.target);
  const BoundsPair b = radius_bounds(t, d);

  Output out;
  out.doc = envelope("bounds", f.nu, f.n, 0.0);
  json result{{"target", std::string(to_string(t))}, {"lower", number(b.lower)}, {"upper", number(b.upper)}};
  result["extra_upper"] = b.extra_upper ? number(*b.extra_upper) : json(nullptr);
  out.doc["result"] = result;
  out.columns = {"command", "target", "nu", "n", "lower", "upper", "extra_upper"};
  out.rows.push_back({"bounds", std::string(to_string(t)), number(f.nu), f.n, number(b.lower), number(b.upper),
                      result["extra_upper"]});
  std::ostringstream text;
  text << to_string(t) << " (nu=" << format_number(f.nu) << ", n=" << f.n << "): " << format_number(b.lower)
       << " < r < " << format_number(b.upper);
  if (b.extra_upper) text << "  (also r < " << format_number(*b.extra_upper) << ")";
  out.text = text.str() + "\n";
  return out;
}

Output cmd_sums(const Flags& f) {
  const BesselDeriv d{f.nu, f.n};
  validate(d);
  SumValue first, second;
  ZeroFamily zf = ZeroFamily::j_deriv;
  if (f.family == "j") {
    first = zero_power_sum(d, 2);
    second = zero_power_sum(d, 4);
  } else {
    const AuxFamily a = parse_aux_family(f.family);
    std::tie(first, second) = auxiliary_sums(a, d);
    zf = zero_family_of(a);
  }

  Output out;
  out.doc = envelope("sums", f.nu, f.n, std::nullopt);
  json result{{"family", f.family}, {"first", number(first.value)}, {"second", number(second.value)}};
  double n1 = NAN, n2 = NAN;
  if (f.count > 1) {
    const ZeroSequence zs = find_zeros(zf, d, f.count);
    n1 = numeric_rayleigh_sum(zs, 1);
    n2 = numeric_rayleigh_sum(zs, 2);
  }
  result["numeric_first"] = number(n1);
  result["numeric_second"] = number(n2);
  out.doc["result"] = result;
  out.columns = {"command", "family", "nu", "n", "first", "second", "numeric_first", "numeric_second"};
  out.rows.push_back({"sums", f.family, number(f.nu), f.n, number(first.value), number(second.value), number(n1),
                      number(n2)});
  std::ostringstream text;
  text << to_string(first.family) << " = " << format_number(first.value) << ", " << to_string(second.family) << " = "
       << format_number(second.value) << "\n";
  if (f.count > 1) {
    text << "over " << f.count << " zeros plus tail: " << format_number(n1) << ", " << format_number(n2) << "\n";
  }
  out.text = text.str();
  return out;
}

Output cmd_table(const Flags& f) {
  const TableReport rep = run_table(f.table);

  Output out;
  out.doc = envelope("table", rep.nu, std::nullopt, std::nullopt);
  json cells = json::array();
  out.columns = {"table", "property", "nu", "n", "kind", "beta", "computed", "reference", "deviation", "anomaly",
                 "error"};
  bool failed = false;
  for (const auto& c : rep.cells) {
    const json computed = c.computed ? number(*c.computed) : json(nullptr);
    const json deviation = c.deviation ? number(*c.deviation) : json(nullptr);
    json cell{{"n", c.n},
              {"kind", std::string(to_string(c.kind))},
              {"beta", number(c.beta)},
              {"computed", computed},
              {"reference", number(c.reference)},
              {"deviation", deviation},
              {"anomaly", c.anomaly}};
    cell["error"] = c.error.empty() ? json(nullptr) : json(c.error);
    cells.push_back(cell);
    out.rows.push_back({rep.which, std::string(to_string(rep.property)), number(rep.nu), c.n,
                        std::string(to_string(c.kind)), number(c.beta), computed, number(c.reference), deviation,
                        c.anomaly, cell["error"]});
    if (!c.error.empty()) {
      failed = true;
      out.doc["warnings"].push_back(std::string(to_string(c.kind)) + " n=" + std::to_string(c.n) + ": " + c.error);
    }
    if (c.anomaly && c.computed) {
      out.doc["warnings"].push_back("anomaly: g n=0 beta=0 reference " + format_number(c.reference) + ", computed " +
                                    fixed4(*c.computed));
    }
  }
  out.doc["result"] = {{"table", rep.which}, {"property", std::string(to_string(rep.property))}, {"cells", cells}};

  std::ostringstream text;
  text << "Radii of " << (rep.property == Property::starlike ? "starlikeness" : "convexity")
       << " for f, g and h, nu = " << format_number(rep.nu) << " (computed / reference)\n";
  text << "  n |      f b=0 |    f b=0.5 |      g b=0 |    g b=0.5 |      h b=0 |    h b=0.5\n";
  for (int n = 0; n < 4; ++n) {
    std::ostringstream comp, ref;
    comp << std::setw(3) << n << " |";
    ref << "    |";
    for (int col = 0; col < 6; ++col) {
      const TableCell& c = rep.cells[n * 6 + col];
      const std::string v = c.computed ? fixed4(*c.computed) : "error";
      comp << std::setw(11) << (c.anomaly ? v + "*" : v) << " |";
      ref << std::setw(11) << fixed4(c.reference) << " |";
    }
    std::string a = comp.str(), b = ref.str();
    a.resize(a.size() - 2);
    b.resize(b.size() - 2);
    text << a << "\n" << b << "\n";
  }
  text << "* reference value inconsistent with monotonicity in beta; computed value reported\n";
  out.text = text.str();
  out.exit_code = failed ? kExitNumeric : kExitOk;
  return out;
}

Output cmd_verify(const Flags& f) {
  VerifyOptions o;
  o.grid_nu = f.grid_nu;
  o.zero_count = f.sum_zeros;
  const auto suites = run_verify(o);

  Output out;
  out.doc = envelope("verify", std::nullopt, std::nullopt, std::nullopt);
  json result = json::array();
  out.columns = {"suite", "passed", "total", "ok"};
  std::ostringstream text;
  bool all = true;
  for (const auto& s : suites) {
    result.push_back({{"suite", s.name}, {"passed", s.passed}, {"total", s.total}, {"ok", s.ok()},
                      {"failures", s.failures}});
    out.rows.push_back({s.name, s.passed, s.total, s.ok()});
    text << (s.ok() ? "PASS " : "FAIL ") << std::left << std::setw(16) << s.name << std::right << s.passed << "/"
         << s.total << "\n";
    for (const auto& msg : s.failures) text << "     " << msg << "\n";
    all = all && s.ok();
  }
  json grid = json::array();
  for (double nu : o.grid_nu) grid.push_back(number(nu));
  out.doc["result"] = {{"grid_nu", grid}, {"suites", result}, {"ok", all}};
  out.text = text.str();
  out.exit_code = all ? kExitOk : kExitVerify;
  return out;
}

int emit_error(const std::string& fmt, const std::string& type, const std::string& message, int code) {
  const json err{{"error", {{"type", type}, {"message", message}}}, {"exit_code", code}};
  if (fmt == "csv") {
    std::cout << "error,message\r\n" << csv_field(type) << "," << csv_field(message) << "\r\n";
  } else if (fmt == "text") {
    std::cerr << "error (" << type << "): " << message << "\n";
  } else {
    std::cout << err.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int run_cli(int argc, char** argv) {
  Flags f;
  CLI::App app{"Radii of starlikeness and convexity for derivatives of Bessel functions"};
  app.require_subcommand(1);
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  auto add_params = [&](CLI::App* sub, bool with_beta) {
    sub->add_option("--nu", f.nu, "Bessel order nu")->required();
    sub->add_option("--n", f.n, "Derivative order n")->check(CLI::NonNegativeNumber);
    if (with_beta) sub->add_option("--beta", f.beta, "Order beta in [0, 1)");
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_tolerances = [&](CLI::App* sub) {
    sub->add_option("--rel-tol", f.rel_tol, "Relative truncation tolerance for series");
    sub->add_option("--max-terms", f.max_terms, "Maximum number of series terms");
  };

  CLI::App* eval = app.add_subcommand("eval", "Evaluate J_nu^(n), f, g, h or their geometric quotients");
  add_params(eval, false);
  add_tolerances(eval);
  eval->add_option("--z", f.z, "Evaluation point (h: its own variable)")->required();
  eval->add_option("--kind", f.kind, "f, g or h; omit for J_nu^(n)")->check(CLI::IsMember({"f", "g", "h"}));
  eval->add_option("--property", f.property, "none, starlike (z F'/F) or convex (1 + z F''/F')")
      ->check(CLI::IsMember({"none", "starlike", "convex"}));

  CLI::App* zeros = app.add_subcommand("zeros", "Positive zeros of J^(n), g', h', (z g')', (z h')'");
  add_params(zeros, false);
  zeros->add_option("--which", f.which_family, "J-deriv, g-prime, h-prime, Delta or Theta")
      ->check(CLI::IsMember({"J-deriv", "g-prime", "h-prime", "Delta", "Theta"}));
  zeros->add_option("--count", f.count, "Number of zeros");

  CLI::App* radius = app.add_subcommand("radius", "Radius of starlikeness or convexity of order beta");
  add_params(radius, true);
  add_tolerances(radius);
  radius->add_option("--kind", f.kind, "f, g or h")->check(CLI::IsMember({"f", "g", "h"}));
  radius->add_option("--property", f.property, "starlike or convex")->check(CLI::IsMember({"starlike", "convex"}));
  radius->add_flag("--bessel-argument", f.bessel_argument, "Report h radii as a Bessel argument");

  CLI::App* bounds = app.add_subcommand("bounds", "Euler-Rayleigh bounds for the beta = 0 radii of g and h");
  add_params(bounds, false);
  bounds->add_option("--target", f.target, "starlike-g, starlike-h, convex-g or convex-h")
      ->check(CLI::IsMember({"starlike-g", "starlike-h", "convex-g", "convex-h"}));

  CLI::App* sums = app.add_subcommand("sums", "Euler-Rayleigh sums, closed form and optionally from zeros");
  add_params(sums, false);
  sums->add_option("--family", f.family, "j, sigma, rho, kappa or omega")
      ->check(CLI::IsMember({"j", "sigma", "rho", "kappa", "omega"}));
  sums->add_option("--count", f.count, "Zeros used for the numeric check (0 to skip)");

  CLI::App* table = app.add_subcommand("table", "Reproduce the starlikeness (1) or convexity (2) table");
  table->add_option("--which", f.table, "1 or 2")->check(CLI::IsMember({1, 2}));
  table->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--grid-nu", f.grid_nu, "Comma-separated nu values")->delimiter(',');
  verify->add_option("--count", f.sum_zeros, "Zeros per family for the sum identities");
  verify->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(f.format, "ValidationError", e.what(), kExitValidation);
  }

  // Zeros and sums share --count; sums default to the closed form only.
  if (*sums && sums->count("--count") == 0) f.count = 0;

  try {
    Output out;
    if (*eval) out = cmd_eval(f);
    if (*zeros) out = cmd_zeros(f);
    if (*radius) out = cmd_radius(f);
    if (*bounds) out = cmd_bounds(f);
    if (*sums) out = cmd_sums(f);
    if (*table) out = cmd_table(f);
    if (*verify) out = cmd_verify(f);
    std::cout << render(out, parse_format(f.format));
    return out.exit_code;
  } catch (const DomainError& e) {
    return emit_error(f.format, "DomainError", e.what(), kExitValidation);
  } catch (const LengthError& e) {
    return emit_error(f.format, "LengthError", e.what(), kExitValidation);
  } catch (const LengthMismatch& e) {
    return emit_error(f.format, "LengthMismatch", e.what(), kExitValidation);
  } catch (const NonConvergence& e) {
    return emit_error(f.format, "NonConvergence", e.what(), kExitNumeric);
  } catch (const PoleProximity& e) {
    return emit_error(f.format, "PoleProximity", e.what(), kExitNumeric);
  } catch (const ScanExhausted& e) {
    return emit_error(f.format, "ScanExhausted", e.what(), kExitNumeric);
  } catch (const BracketFailure& e) {
    return emit_error(f.format, "BracketFailure", e.what(), kExitNumeric);
  } catch (const IllConditioned& e) {
    return emit_error(f.format, "IllConditioned", e.what(), kExitNumeric);
  } catch (const Error& e) {
    return emit_error(f.format, "Error", e.what(), kExitNumeric);
  }
}

}  // namespace besselgeo::app
