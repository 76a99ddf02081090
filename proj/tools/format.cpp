#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "app.hpp"
#include "besselgeo/errors.hpp"

namespace besselgeo::app {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw DomainError("unknown format '" + s + "'");
}

double round_sig(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, round_sig(x));
  return std::string(buf, res.ptr);
}

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round_sig(x);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_string()) return csv_field(v.get<std::string>());
  return csv_field(v.dump());
}

}  // namespace

std::string render(const Output& out, Format f) {
  switch (f) {
    case Format::json:
      return out.doc.dump(2) + "\n";
    case Format::csv: {
      std::ostringstream os;
      for (std::size_t i = 0; i < out.columns.size(); ++i) os << (i ? "," : "") << csv_field(out.columns[i]);
      os << "\r\n";
      for (const auto& row : out.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << "\r\n";
      }
      return os.str();
    }
    case Format::text:
      return out.text;
  }
  return {};
}

json envelope(const std::string& command, std::optional<double> nu, std::optional<int> n,
              std::optional<double> beta) {
  json params = json::object();
  params["nu"] = nu ? number(*nu) : json(nullptr);
  params["n"] = n ? json(*n) : json(nullptr);
  params["beta"] = beta ? number(*beta) : json(nullptr);
  return json{{"command", command},
              {"params", params},
              {"result", nullptr},
              {"bracket", nullptr},
              {"residual", nullptr},
              {"warnings", json::array()}};
}

}  // namespace besselgeo::app
