#pragma once

#include <optional>
#include <vector>

#include "hydro/grid.hpp"

namespace hydro {

struct Snapshot {
  double time = 0.0;
  VectorField velocity;
  ScalarField pressure;
};

struct Trajectory {
  std::vector<Snapshot> snapshots;
  std::vector<double> energy;  ///< E(t) per snapshot
  std::optional<double> blow_up_time;

  std::vector<double> times() const;
  double max_relative_energy_drift() const;
};

}  // namespace hydro
