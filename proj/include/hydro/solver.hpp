#pragma once

#include "hydro/grid.hpp"
#include "hydro/trajectory.hpp"

namespace hydro {

struct SolverConfig {
  Grid grid = Grid::cube(64);
  double omega = 0.0;  ///< Coriolis parameter
  double nu = 0.0;     ///< (hyper)viscosity
  int hyper_order = 1;
  double dt = 1e-3;
  double t_end = 0.25;
  int snapshot_stride = 1;
  bool dealias = true;
  double max_t_end = 0.5;
};

void validate(const SolverConfig& c);

struct SpectralState {
  SpectralField u, v;
};

struct Tendency {
  SpectralField du, dv;
  SpectralField pressure;  ///< kz = 0 plane only
};

/// Time derivative of (u, v): w is reconstructed, fluxes are formed pointwise, and the pressure
/// projects the vertical mean of the momentum residual onto horizontally divergence-free fields.
Tendency rhs(const SolverConfig& c, const SpectralState& s);

/// One classical RK4 step.
SpectralState step(const SolverConfig& c, const SpectralState& s, double dt);

/// Builds a snapshot (velocity with reconstructed w, and pressure) from a spectral state.
Snapshot make_snapshot(const SolverConfig& c, const SpectralState& s, double time);

/// Integrates from t0 to t0 + t_end with a fixed step. Non-finite states stop the run and set
/// blow_up_time; the snapshots up to that point are kept.
Trajectory run(const SolverConfig& c, const VectorField& initial, double t0 = 0.0);

/// E = mean(u^2 + v^2).
double horizontal_energy(const ScalarField& u, const ScalarField& v);

}  // namespace hydro
