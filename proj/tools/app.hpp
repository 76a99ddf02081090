#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "besselgeo/params.hpp"

namespace besselgeo::app {

using json = nlohmann::json;

enum class Format { json, csv, text };

Format parse_format(const std::string& s);

/// Rounds to 12 significant digits. Non-finite values pass through.
double round_sig(double x);
/// Shortest decimal text of round_sig(x); "nan"/"inf" spelled out.
std::string format_number(double x);
/// JSON number for round_sig(x), or null when x is not finite.
json number(double x);
/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

/// One command's output: a JSON document and the same data as flat rows.
struct Output {
  json doc;
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
  std::string text;
  int exit_code = 0;
};

std::string render(const Output& out, Format f);

/// {"command", "params": {"nu", "n", "beta"}, "result", "bracket", "residual", "warnings"}.
json envelope(const std::string& command, std::optional<double> nu, std::optional<int> n,
              std::optional<double> beta);

/// Reference grids: 4 rows (n = 0..3) x 6 columns (f, g, h each at beta = 0, 0.5).
using Grid = std::array<std::array<double, 6>, 4>;

struct TableCell {
  Kind kind = Kind::f;
  int n = 0;
  double beta = 0.0;
  std::optional<double> computed;
  double reference = 0.0;
  std::optional<double> deviation;
  bool anomaly = false;
  std::string error;
};

struct TableReport {
  int which = 1;
  double nu = 0.0;
  Property property = Property::starlike;
  std::vector<TableCell> cells;  // row-major: n, then kind, then beta
};

double table_nu(int which);
Property table_property(int which);
const Grid& reference_grid(int which);
/// The convexity-table cell whose reference value is inconsistent with its row.
bool is_anomaly(int which, Kind kind, int n, double beta);

/// Computes all 24 cells concurrently. Per-cell errors are recorded, not thrown.
TableReport run_table(int which);

struct SuiteResult {
  std::string name;
  int passed = 0;
  int total = 0;
  std::vector<std::string> failures;
  bool ok() const { return passed == total; }
};

struct VerifyOptions {
  std::vector<double> grid_nu{0.5, 1.5, 2.5, 3.5};
  int zero_count = 200;
  double sum_rel_tol = 1e-6;
  int random_polys = 100;
  std::uint64_t seed = 20240601;
};

/// Rejects grid values that admit no n >= 0 (nu <= -1) or are not finite.
void validate(const VerifyOptions& o);

std::vector<SuiteResult> run_verify(const VerifyOptions& o);

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitVerify = 4;

/// Entry point used by main(); returns the process exit code.
int run_cli(int argc, char** argv);

}  // namespace besselgeo::app
