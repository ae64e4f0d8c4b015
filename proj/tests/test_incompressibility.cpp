#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hydro/error.hpp"
#include "hydro/incompressibility.hpp"
#include "oracles.hpp"

using namespace hydro;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("horizontal divergence") {
  const Grid g = Grid::cube(16);
  const ScalarField u = ScalarField::sample(g, [](double x, double, double) { return std::sin(2 * kPi * x); });
  const ScalarField want = ScalarField::sample(g, [](double x, double, double) { return 2 * kPi * std::cos(2 * kPi * x); });
  CHECK(oracle::max_diff(horizontal_divergence(u, ScalarField(g)), want) < 1e-10);

  // stream function psi = sin(2 pi (x + 2y)) cos(2 pi z) + cos(2 pi (3x - y))
  const ScalarField su = ScalarField::sample(g, [](double x, double y, double z) {
    return 4 * kPi * std::cos(2 * kPi * (x + 2 * y)) * std::cos(2 * kPi * z) + 2 * kPi * std::sin(2 * kPi * (3 * x - y));
  });
  const ScalarField sv = ScalarField::sample(g, [](double x, double y, double z) {
    return -2 * kPi * std::cos(2 * kPi * (x + 2 * y)) * std::cos(2 * kPi * z) + 6 * kPi * std::sin(2 * kPi * (3 * x - y));
  });
  CHECK(max_abs(horizontal_divergence(su, sv)) < 1e-10);

  ScalarField c(g);
  for (auto& x : c.values()) x = 2.5;
  CHECK(max_abs(horizontal_divergence(c, c)) < 1e-14);
}

TEST_CASE("w reconstruction") {
  const Grid g = Grid::cube(16);
  const ScalarField u = ScalarField::sample(g, [](double x, double, double z) { return std::sin(2 * kPi * x) * std::cos(2 * kPi * z); });
  const auto r = reconstruct_w(u, ScalarField(g));
  const ScalarField want = ScalarField::sample(g, [](double x, double, double z) { return -std::cos(2 * kPi * x) * std::sin(2 * kPi * z); });
  CHECK(oracle::max_diff(r.w, want) < 1e-12);
  CHECK(r.report.compat_l2 < 1e-12);
  CHECK(r.report.w_boundary_max < 1e-12);
  CHECK(r.report.div_l2 < 1e-10);

  // z-independent u with nonzero divergence: compat_l2 is the divergence norm
  const ScalarField flat = ScalarField::sample(g, [](double x, double y, double) { return std::sin(2 * kPi * (x + y)); });
  const auto bad = reconstruct_w(flat, ScalarField(g));
  CHECK(bad.report.compat_l2 == doctest::Approx(l2_norm(horizontal_divergence(flat, ScalarField(g)))).epsilon(1e-12));
  CHECK(max_abs(bad.w) < 1e-12);
  CHECK_THROWS_AS(hydrostatic_velocity(flat, ScalarField(g)), Error);
  try {
    require_compatible(flat, ScalarField(g));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Constraint);
  }

  const auto zero = reconstruct_w(ScalarField(g), ScalarField(g));
  CHECK(max_abs(zero.w) == 0.0);
  CHECK(zero.report.compat_l2 == 0.0);
  CHECK(zero.report.w_boundary_max == 0.0);
  CHECK(zero.report.div_l2 == 0.0);
}

TEST_CASE("structure residuals") {
  const Grid g = Grid::cube(8);
  std::vector<Snapshot> steady;
  for (int n = 0; n < 5; ++n) steady.push_back({0.1 * n, {ScalarField(g), ScalarField(g), ScalarField(g)}, ScalarField(g)});
  for (const auto& r : check_weak_solution_structure(steady, 0.0)) {
    CHECK(r.momentum_x == 0.0);
    CHECK(r.momentum_y == 0.0);
    CHECK(r.hydrostatic == 0.0);
    CHECK(r.divergence == 0.0);
  }
  CHECK(check_weak_solution_structure(steady, 0.0).size() == 3);

  const ScalarField p = ScalarField::sample(g, [](double, double, double z) { return std::cos(2 * kPi * z); });
  for (auto& s : steady) s.pressure = p;
  const double want = l2_norm(derivative(p, Axis::Z));
  for (const auto& r : check_weak_solution_structure(steady, 0.0)) CHECK(r.hydrostatic == doctest::Approx(want).epsilon(1e-12));

  steady.resize(2);
  CHECK_THROWS_AS(check_weak_solution_structure(steady, 0.0), Error);
}

TEST_CASE("time differences are exact for quartic time dependence") {
  // u = a(t) cos(2 pi z) with v = w = 0 and p = 0: the flux vanishes, so the residual is |a'(t)| ||cos(2 pi z)||
  const Grid g = Grid::cube(8);
  auto a = [](double t) { return 1.0 + t - 2 * t * t + 0.5 * t * t * t * t; };
  auto da = [](double t) { return 1.0 - 4 * t + 2 * t * t * t; };
  const ScalarField c = ScalarField::sample(g, [](double, double, double z) { return std::cos(2 * kPi * z); });
  std::vector<Snapshot> snaps;
  for (int n = 0; n < 7; ++n) {
    const double t = 0.05 * n;
    snaps.push_back({t, {a(t) * c, ScalarField(g), ScalarField(g)}, ScalarField(g)});
  }
  const auto res = check_weak_solution_structure(snaps, 0.0);
  for (std::size_t n = 0; n < res.size(); ++n) CHECK(res[n].momentum_x == doctest::Approx(std::abs(da(res[n].time)) / std::sqrt(2.0)).epsilon(1e-10));
}
