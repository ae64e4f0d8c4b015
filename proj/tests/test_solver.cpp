#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hydro/error.hpp"
#include "hydro/incompressibility.hpp"
#include "hydro/solver.hpp"
#include "hydro/synth.hpp"
#include "oracles.hpp"

using namespace hydro;

namespace {
constexpr double kPi = std::numbers::pi;

ScalarField constant(const Grid& g, double c) {
  ScalarField f(g);
  for (auto& x : f.values()) x = c;
  return f;
}

SolverConfig config(int n) {
  SolverConfig c;
  c.grid = Grid::cube(n);
  return c;
}
}  // namespace

TEST_CASE("energy") {
  const Grid g = Grid::cube(16);
  const ScalarField s = ScalarField::sample(g, [](double x, double, double) { return std::sin(2 * kPi * x); });
  CHECK(horizontal_energy(s, ScalarField(g)) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(horizontal_energy(ScalarField(g), ScalarField(g)) == 0.0);
  CHECK(horizontal_energy(2.0 * s, s) == doctest::Approx(4 * 0.5 + 0.5).epsilon(1e-14));
}

TEST_CASE("config validation") {
  SolverConfig c = config(16);
  c.t_end = 0.6;
  CHECK_THROWS_AS(validate(c), Error);
  c = config(16);
  c.dt = 0.0;
  CHECK_THROWS_AS(validate(c), Error);
  c = config(16);
  c.t_end = 0.0105;
  CHECK_THROWS_AS(validate(c), Error);
}

TEST_CASE("tendencies") {
  SolverConfig c = config(16);
  const Grid& g = c.grid;
  const Tendency z = rhs(c, {fft3(ScalarField(g)), fft3(ScalarField(g))});
  CHECK(spectral_energy(z.du) == 0.0);
  CHECK(spectral_energy(z.dv) == 0.0);

  c.omega = 3.0;
  const Tendency r = rhs(c, {fft3(constant(g, 0.7)), fft3(constant(g, -0.2))});
  CHECK(oracle::max_diff(ifft3(r.du), constant(g, 3.0 * -0.2)) < 1e-14);
  CHECK(oracle::max_diff(ifft3(r.dv), constant(g, -3.0 * 0.7)) < 1e-14);

  // z-independent data stays z-independent
  c.omega = 0.0;
  const ScalarField u = ScalarField::sample(g, [](double x, double y, double) { return std::sin(2 * kPi * y) + 0.3 * std::cos(2 * kPi * (x - y)); });
  const ScalarField v = ScalarField::sample(g, [](double x, double y, double) { return std::cos(2 * kPi * x) + 0.3 * std::cos(2 * kPi * (x - y)); });
  const Tendency t = rhs(c, {fft3(u), fft3(v)});
  CHECK(max_abs(derivative(ifft3(t.du), Axis::Z)) < 1e-12);
  CHECK(max_abs(derivative(ifft3(t.dv), Axis::Z)) < 1e-12);
  CHECK(max_abs(ifft3(t.du)) > 0.1);

  const ScalarField bad = ScalarField::sample(g, [](double x, double, double) { return std::sin(2 * kPi * x); });
  CHECK_THROWS_AS(rhs(c, {fft3(bad), fft3(ScalarField(g))}), Error);
}

TEST_CASE("RK4 rotation") {
  SolverConfig c = config(16);
  c.omega = 2.0;
  const Grid& g = c.grid;
  const double dt = 0.05;
  const SpectralState s = step(c, {fft3(constant(g, 1.0)), fft3(constant(g, 0.0))}, dt);
  // exact: (cos(Omega t), -sin(Omega t)); RK4 local error O(dt^5)
  const double u = ifft3(s.u)(0, 0, 0), v = ifft3(s.v)(0, 0, 0);
  CHECK(std::abs(u - std::cos(2.0 * dt)) < std::pow(2.0 * dt, 5));
  CHECK(std::abs(v + std::sin(2.0 * dt)) < std::pow(2.0 * dt, 5));
}

TEST_CASE("dt halving gives fourth-order global error") {
  SolverConfig c = config(32);
  const VectorField init = synth_smooth(1, c.grid, 1);
  auto final_state = [&](double dt) {
    SolverConfig k = c;
    k.dt = dt;
    k.t_end = 0.04;
    k.snapshot_stride = 1000;
    return run(k, init).snapshots.back().velocity.u;
  };
  const ScalarField ref = final_state(0.0005);
  const double e1 = l2_norm(final_state(0.004) - ref), e2 = l2_norm(final_state(0.002) - ref);
  CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.3));
}

TEST_CASE("inviscid, viscous and rotating runs") {
  SolverConfig c = config(32);
  c.t_end = 0.05;
  c.snapshot_stride = 5;
  const VectorField init = synth_smooth(1, c.grid, 1);
  const Trajectory inv = run(c, init);
  CHECK(inv.snapshots.size() == 11);
  CHECK(inv.max_relative_energy_drift() < 1e-6);
  CHECK_FALSE(inv.blow_up_time);
  double wall = 0.0;
  for (const auto& s : inv.snapshots) {
    CHECK(max_abs(derivative(s.pressure, Axis::Z)) < 1e-12);
    for (int i = 0; i < 32; ++i)
      for (int j = 0; j < 32; ++j) wall = std::max(wall, std::abs(s.velocity.w(i, j, 0)));
  }
  CHECK(wall < 1e-10);

  SolverConfig rot = c;
  rot.omega = 10.0;
  CHECK(std::abs(run(rot, init).max_relative_energy_drift() - inv.max_relative_energy_drift()) < 1e-6);

  SolverConfig visc = c;
  visc.nu = 0.01;
  const Trajectory v = run(visc, init);
  for (std::size_t n = 1; n < v.energy.size(); ++n) CHECK(v.energy[n] < v.energy[n - 1]);

  SolverConfig fast = c;
  fast.dt = 0.05;
  fast.t_end = 0.1;
  CHECK_THROWS_AS(run(fast, init), Error);
}

TEST_CASE("projection keeps compatibility without dealiasing") {
  SolverConfig c = config(16);
  c.dealias = false;
  c.dt = 0.002;
  c.t_end = 0.02;
  const Trajectory t = run(c, synth_smooth(1, c.grid, 2));
  REQUIRE_FALSE(t.blow_up_time);
  for (const auto& s : t.snapshots) CHECK(reconstruct_w(s.velocity.u, s.velocity.v).report.compat_l2 < 1e-12);
}
