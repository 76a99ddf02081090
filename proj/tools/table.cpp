#include <cmath>
#include <future>

#include "app.hpp"
#include "besselgeo/errors.hpp"
#include "besselgeo/radii.hpp"

namespace besselgeo::app {

namespace {

// Reference values, columns f(0), f(.5), g(0), g(.5), h(0), h(.5).
constexpr Grid kStarlike{{
    {3.6328, 2.7569, 2.5011, 1.8192, 11.1696, 6.2556},
    {2.1056, 1.5926, 1.7975, 1.3307, 5.4265, 3.2312},
    {0.8512, 0.6229, 1.1285, 0.8512, 2.0284, 1.2735},
    {0.4586, 0.3051, 0.4819, 0.3703, 0.3543, 0.2323},
}};

constexpr Grid kConvex{{
    {2.7183, 2.0865, 0.5234, 1.1461, 6.2189, 3.7194},
    {1.8179, 1.3998, 1.2017, 0.9084, 3.7394, 2.2873},
    {1.0592, 0.8123, 0.8833, 0.6715, 1.9450, 1.2190},
    {0.4141, 0.3131, 0.5683, 0.4350, 0.7726, 0.4968},
}};

constexpr Kind kKinds[] = {Kind::f, Kind::g, Kind::h};
constexpr double kBetas[] = {0.0, 0.5};

void check_which(int which) {
  if (which != 1 && which != 2) throw DomainError("table must be 1 or 2");
}

}  // namespace

double table_nu(int which) {
  check_which(which);
  return which == 1 ? 2.5 : 3.5;
}

Property table_property(int which) {
  check_which(which);
  return which == 1 ? Property::starlike : Property::convex;
}

const Grid& reference_grid(int which) {
  check_which(which);
  return which == 1 ? kStarlike : kConvex;
}

bool is_anomaly(int which, Kind kind, int n, double beta) {
  return which == 2 && kind == Kind::g && n == 0 && beta == 0.0;
}

TableReport run_table(int which) {
  TableReport rep;
  rep.which = which;
  rep.nu = table_nu(which);
  rep.property = table_property(which);
  const Grid& ref = reference_grid(which);

  std::vector<std::future<TableCell>> jobs;
  for (int n = 0; n < 4; ++n) {
    for (int k = 0; k < 3; ++k) {
      for (int b = 0; b < 2; ++b) {
        jobs.push_back(std::async(std::launch::async, [&, n, k, b] {
          TableCell c;
          c.kind = kKinds[k];
          c.n = n;
          c.beta = kBetas[b];
          c.reference = ref[n][2 * k + b];
          c.anomaly = is_anomaly(which, c.kind, n, c.beta);
          try {
            const RadiusResult r = compute_radius(rep.property, c.kind, {rep.nu, n, c.beta});
            c.computed = r.radius;
            c.deviation = std::abs(r.radius - c.reference);
          } catch (const Error& e) {
            c.error = e.what();
          }
          return c;
        }));
      }
    }
  }
  for (auto& j : jobs) rep.cells.push_back(j.get());
  return rep;
}

}  // namespace besselgeo::app
