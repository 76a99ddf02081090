#include <doctest.h>

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "app.hpp"

using namespace besselgeo;
using namespace besselgeo::app;

namespace {

struct Run {
  int code = 0;
  std::string out;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "besselgeo");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream captured;
  std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
  std::streambuf* old_err = std::cerr.rdbuf(captured.rdbuf());
  Run r;
  try {
    r.code = run_cli(static_cast<int>(argv.size()), argv.data());
  } catch (...) {
    std::cout.rdbuf(old);
    std::cerr.rdbuf(old_err);
    throw;
  }
  std::cout.rdbuf(old);
  std::cerr.rdbuf(old_err);
  r.out = captured.str();
  return r;
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  for (std::size_t next; (next = s.find(sep, pos)) != std::string::npos; pos = next + sep.size()) {
    parts.push_back(s.substr(pos, next - pos));
  }
  if (pos < s.size()) parts.push_back(s.substr(pos));
  return parts;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("number formatting") {
    CHECK(round_sig(0.1234567890123456) == 0.123456789012);
    CHECK(format_number(3.0 / 7.0) == "0.428571428571");
    CHECK(format_number(2.0) == "2");
    CHECK(format_number(1e-20 / 3.0) == "3.33333333333e-21");
    CHECK(format_number(NAN) == "nan");
    CHECK(number(INFINITY).is_null());
  }

  TEST_CASE("csv quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
  }

  TEST_CASE("json output round-trips byte for byte") {
    const Run r = run({"radius", "--nu", "2.5", "--n", "1", "--kind", "g", "--beta", "0.5"});
    REQUIRE(r.code == kExitOk);
    const json doc = json::parse(r.out);
    CHECK(doc.dump(2) + "\n" == r.out);
    CHECK(doc["command"] == "radius");
    CHECK(doc["params"]["nu"] == 2.5);
    CHECK(doc["params"]["n"] == 1);
    CHECK(std::abs(doc["result"].get<double>() - 1.3307) < 1e-3);
    CHECK(doc["bracket"].size() == 2);
    CHECK(doc["warnings"].is_array());
  }

  TEST_CASE("csv and json carry the same numbers") {
    const std::vector<std::string> base{"bounds", "--nu", "1.5", "--n", "2", "--target", "starlike-h"};
    const Run j = run(base);
    auto csv_args = base;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    const Run c = run(csv_args);
    REQUIRE(j.code == kExitOk);
    REQUIRE(c.code == kExitOk);
    const json doc = json::parse(j.out);
    const auto lines = split(c.out, "\r\n");
    REQUIRE(lines.size() == 2);
    const auto header = split(lines[0], ",");
    const auto values = split(lines[1], ",");
    REQUIRE(header.size() == values.size());
    int matched = 0;
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (doc["result"].contains(header[i]) && doc["result"][header[i]].is_number()) {
        CHECK(values[i] == doc["result"][header[i]].dump());
        ++matched;
      }
    }
    CHECK(matched >= 3);
    CHECK(doc["result"]["lower"].dump() == "0.428571428571");
  }

  TEST_CASE("exit codes") {
    CHECK(run({"eval", "--nu", "2.5", "--n", "1", "--z", "1.0"}).code == kExitOk);
    const Run bad = run({"eval", "--nu", "0.5", "--n", "2", "--z", "1.0"});
    CHECK(bad.code == kExitValidation);
    const json err = json::parse(bad.out);
    CHECK(err["error"]["type"] == "DomainError");
    CHECK(err["exit_code"] == kExitValidation);
    CHECK(run({"radius", "--nu", "2.5", "--beta", "1.5"}).code == kExitValidation);
    CHECK(run({"radius", "--nu", "2.5", "--bogus"}).code == kExitValidation);
    CHECK(run({"eval", "--nu", "2.5", "--z", "1.0", "--max-terms", "3", "--z", "8"}).code != kExitOk);
    CHECK(run({"eval", "--nu", "2.5", "--z", "8", "--max-terms", "3"}).code == kExitNumeric);
    CHECK(run({"verify", "--grid-nu", "-1.5"}).code == kExitValidation);
  }

  TEST_CASE("table cells and anomaly flag") {
    const TableReport t1 = run_table(1);
    REQUIRE(t1.cells.size() == 24);
    const TableCell& first = t1.cells[0];
    CHECK(first.kind == Kind::f);
    CHECK(first.n == 0);
    CHECK(first.beta == 0.0);
    REQUIRE(first.computed);
    CHECK(std::abs(*first.computed - 3.6328) < 1e-3);

    const TableReport t2 = run_table(2);
    int anomalies = 0;
    for (const auto& c : t2.cells) {
      CHECK(c.error.empty());
      if (c.anomaly) {
        ++anomalies;
        CHECK(c.kind == Kind::g);
        CHECK(c.n == 0);
        CHECK(c.beta == 0.0);
        REQUIRE(c.computed);
        CHECK(std::abs(*c.computed - c.reference) > 0.5);
      } else if (c.computed) {
        CHECK(std::abs(*c.computed - c.reference) < 1e-3);
      }
      if (c.kind == Kind::h && c.n == 3 && c.beta == 0.5) {
        REQUIRE(c.computed);
        CHECK(std::abs(*c.computed - 0.4968) < 1e-3);
      }
    }
    CHECK(anomalies == 1);
    CHECK(is_anomaly(2, Kind::g, 0, 0.0));
    CHECK_FALSE(is_anomaly(1, Kind::g, 0, 0.0));
  }

  TEST_CASE("text table marks the anomaly") {
    const Run r = run({"table", "--which", "2", "--format", "text"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("*") != std::string::npos);
    for (const auto& line : split(r.out, "\n")) CHECK((line.empty() || line.back() != ' '));
  }
}
