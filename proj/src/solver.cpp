#include "hydro/solver.hpp"

#include <cmath>
#include <numbers>

#include "hydro/error.hpp"
#include "hydro/incompressibility.hpp"

namespace hydro {

void validate(const SolverConfig& c) {
  if (!(c.dt > 0.0)) fail(ErrorKind::Parameter, "dt must be positive");
  if (!(c.t_end > 0.0)) fail(ErrorKind::Parameter, "t_end must be positive");
  if (c.t_end > c.max_t_end) fail(ErrorKind::Parameter, "t_end exceeds the short-time limit");
  if (!(c.nu >= 0.0)) fail(ErrorKind::Parameter, "viscosity must be nonnegative");
  if (c.hyper_order < 1) fail(ErrorKind::Parameter, "hyperviscosity order must be >= 1");
  if (c.snapshot_stride < 1) fail(ErrorKind::Parameter, "snapshot stride must be >= 1");
  const double steps = c.t_end / c.dt;
  if (std::abs(steps - std::round(steps)) > 1e-9 * steps)
    fail(ErrorKind::Parameter, "t_end must be a whole number of steps");
}

double horizontal_energy(const ScalarField& u, const ScalarField& v) {
  require_same_grid(u.grid(), v.grid(), "horizontal_energy");
  return mean(multiply(u, u)) + mean(multiply(v, v));
}

Tendency rhs(const SolverConfig& c, const SpectralState& s) {
  const Grid& g = s.u.grid();
  double compat = 0.0;
  const SpectralField W = reconstruct_w_spectral(s.u, s.v, &compat);
  const double scale = std::max(1.0, std::sqrt(spectral_energy(s.u) + spectral_energy(s.v)));
  if (compat > 1e-10 * scale) fail(ErrorKind::Constraint, "state violates the compatibility condition");
  const ScalarField u = ifft3(s.u, Parity::Even), v = ifft3(s.v, Parity::Even), w = ifft3(W, Parity::Odd);
  const FluxDivergence N = momentum_flux_divergence(u, v, w, c.dealias);

  Tendency t{SpectralField(g), SpectralField(g), SpectralField(g)};
  const double two_pi = 2.0 * std::numbers::pi;
  for (int i = 0; i < g.nx; ++i) {
    const double kx = wavenumber(i, g.nx);
    for (int j = 0; j < g.ny; ++j) {
      const double ky = wavenumber(j, g.ny);
      for (int kz = 0; kz < g.nzh(); ++kz) {
        const double k2 = kx * kx + ky * ky + static_cast<double>(kz) * kz;
        const double damp = c.nu > 0.0 ? c.nu * std::pow(two_pi * two_pi * k2, c.hyper_order) : 0.0;
        const auto U = s.u.at(i, j, kz), V = s.v.at(i, j, kz);
        t.du.at(i, j, kz) = -N.nu.at(i, j, kz) + c.omega * V - damp * U;
        t.dv.at(i, j, kz) = -N.nv.at(i, j, kz) - c.omega * U - damp * V;
      }
      // odd derivatives vanish at Nyquist, so the projection must use the same wavenumbers
      const double px = 2 * std::abs(kx) == g.nx ? 0.0 : kx, py = 2 * std::abs(ky) == g.ny ? 0.0 : ky;
      const double kh2 = px * px + py * py;
      if (kh2 == 0.0) continue;
      auto& ru = t.du.at(i, j, 0);
      auto& rv = t.dv.at(i, j, 0);
      const std::complex<double> p = (px * ru + py * rv) / (std::complex<double>(0.0, two_pi) * kh2);
      t.pressure.at(i, j, 0) = p;
      ru -= std::complex<double>(0.0, two_pi * px) * p;
      rv -= std::complex<double>(0.0, two_pi * py) * p;
    }
  }
  return t;
}

namespace {

SpectralState axpy(const SpectralState& s, double a, const Tendency& k) {
  SpectralState out = s;
  SpectralField du = k.du, dv = k.dv;
  du *= a;
  dv *= a;
  out.u += du;
  out.v += dv;
  return out;
}

bool finite(const SpectralState& s) {
  return std::isfinite(spectral_energy(s.u)) && std::isfinite(spectral_energy(s.v));
}

double max_speed(const VectorField& vf) {
  return std::max({max_abs(vf.u), max_abs(vf.v), max_abs(vf.w)});
}

}  // namespace

SpectralState step(const SolverConfig& c, const SpectralState& s, double dt) {
  const Tendency k1 = rhs(c, s);
  const Tendency k2 = rhs(c, axpy(s, 0.5 * dt, k1));
  const Tendency k3 = rhs(c, axpy(s, 0.5 * dt, k2));
  const Tendency k4 = rhs(c, axpy(s, dt, k3));
  SpectralState out = s;
  const Grid& g = s.u.grid();
  for (std::size_t m = 0; m < g.spectral_size(); ++m) {
    out.u.coeffs()[m] += dt / 6.0 * (k1.du.coeffs()[m] + 2.0 * k2.du.coeffs()[m] + 2.0 * k3.du.coeffs()[m] + k4.du.coeffs()[m]);
    out.v.coeffs()[m] += dt / 6.0 * (k1.dv.coeffs()[m] + 2.0 * k2.dv.coeffs()[m] + 2.0 * k3.dv.coeffs()[m] + k4.dv.coeffs()[m]);
  }
  return out;
}

Snapshot make_snapshot(const SolverConfig& c, const SpectralState& s, double time) {
  Snapshot snap;
  snap.time = time;
  snap.velocity.u = ifft3(s.u, Parity::Even);
  snap.velocity.v = ifft3(s.v, Parity::Even);
  snap.velocity.w = ifft3(reconstruct_w_spectral(s.u, s.v), Parity::Odd);
  snap.pressure = ifft3(rhs(c, s).pressure, Parity::Even);
  return snap;
}

Trajectory run(const SolverConfig& c, const VectorField& initial, double t0) {
  validate(c);
  require_same_grid(c.grid, initial.grid(), "solver initial data");
  require_compatible(initial.u, initial.v, 1e-10 * std::max(1.0, l2_norm(initial.u) + l2_norm(initial.v)));
  const double speed = max_speed(hydrostatic_velocity(initial.u, initial.v, INFINITY));
  const double h = 1.0 / c.grid.n_min();
  if (speed > 0.0 && c.dt > 0.5 * h / speed) fail(ErrorKind::Parameter, "dt violates the CFL bound 0.5 h / max|u|");

  SpectralState s{fft3(initial.u), fft3(initial.v)};
  if (c.dealias) {
    s.u = dealias(s.u);
    s.v = dealias(s.v);
  }
  Trajectory traj;
  auto record = [&](double t) {
    traj.snapshots.push_back(make_snapshot(c, s, t));
    traj.energy.push_back(spectral_energy(s.u) + spectral_energy(s.v));
  };
  record(t0);
  const long steps = std::lround(c.t_end / c.dt);
  for (long n = 1; n <= steps; ++n) {
    s = step(c, s, c.dt);
    const double t = t0 + static_cast<double>(n) * c.dt;
    if (!finite(s)) {
      traj.blow_up_time = t;
      return traj;
    }
    if (n % c.snapshot_stride == 0 || n == steps) record(t);
  }
  return traj;
}

}  // namespace hydro
