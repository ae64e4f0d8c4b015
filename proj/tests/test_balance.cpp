#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hydro/balance.hpp"
#include "hydro/error.hpp"
#include "hydro/incompressibility.hpp"
#include "hydro/solver.hpp"
#include "hydro/synth.hpp"

using namespace hydro;

namespace {
Trajectory steady(const VectorField& vf, int count, double dt) {
  Trajectory t;
  for (int n = 0; n < count; ++n) {
    t.snapshots.push_back({n * dt, vf, ScalarField(vf.grid())});
    t.energy.push_back(horizontal_energy(vf.u, vf.v));
  }
  return t;
}
}  // namespace

TEST_CASE("bump") {
  TestFunction psi;
  psi.t0 = 1.0;
  psi.t1 = 3.0;
  CHECK(psi.bump(1.0) == 0.0);
  CHECK(psi.bump(3.5) == 0.0);
  CHECK(psi.bump(2.0) == doctest::Approx(std::exp(-4.0)));
  const double h = 1e-6;
  CHECK(psi.bump_rate(1.7) == doctest::Approx((psi.bump(1.7 + h) - psi.bump(1.7 - h)) / (2 * h)).epsilon(1e-6));
}

TEST_CASE("zero test function and support checks") {
  const Grid g = Grid::cube(32);
  const VectorField vf = synth_smooth(2, g, 1);
  const Trajectory t = steady(vf, 11, 0.01);
  TestFunction zero = default_test_function(g, 0.0, 0.1);
  zero.pattern = ScalarField(g);
  CHECK(balance_residual(t, 0.125, zero) == 0.0);

  TestFunction wide = default_test_function(g, 0.0, 0.2);
  CHECK_THROWS_AS(balance_residual(t, 0.125, wide), Error);
  const Trajectory two = steady(vf, 2, 0.01);
  CHECK_THROWS_AS(balance_residual(two, 0.125, default_test_function(g, 0.0, 0.01)), Error);
}

TEST_CASE("steady fields with a spatially constant test function leave only the defect term") {
  const Grid g = Grid::cube(32);
  const VectorField vf = synth_smooth(2, g, 1);
  const Trajectory t = steady(vf, 21, 0.01);
  TestFunction psi = default_test_function(g, 0.0, 0.2);
  for (auto& x : psi.pattern.values()) x = 1.0;
  const double eps = 0.125;
  const double mean_d = mean(defect_density(vf, eps));
  const double e = horizontal_energy(vf.u, vf.v);
  double bump_int = 0.0, rate_int = 0.0;
  for (int n = 1; n < 21; ++n) {
    bump_int += 0.005 * (psi.bump(n * 0.01) + psi.bump((n - 1) * 0.01));
    rate_int += 0.005 * (psi.bump_rate(n * 0.01) + psi.bump_rate((n - 1) * 0.01));
  }
  const double want = std::abs(e * rate_int - 0.5 * mean_d * bump_int);
  CHECK(balance_residual(t, eps, psi) == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("residual decreases under eps refinement on a smooth trajectory") {
  SolverConfig c;
  c.grid = Grid::cube(32);
  c.dt = 2e-3;
  c.t_end = 0.04;
  c.snapshot_stride = 1;
  const Trajectory traj = run(c, synth_smooth(1, c.grid, 1));
  const TestFunction psi = default_test_function(c.grid, 0.0, 0.04);
  const BalanceReport r = balance_report(traj, {0.25, 0.125, 0.0625}, psi);
  CHECK(r.residuals.size() == 3);
  CHECK(r.residuals[1] < r.residuals[0]);
  CHECK(r.residuals[2] < r.residuals[1]);
  CHECK(r.residual_fit.slope >= 1.0);
  CHECK(r.times.size() == traj.snapshots.size());
}
