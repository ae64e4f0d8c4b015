#pragma once

#include <array>
#include <vector>

#include "hydro/grid.hpp"

namespace hydro {

enum class DirectionClass { Horizontal, Vertical, Oblique };

/// Which of the 13 lattice directions to use.
enum class DirectionSet { Isotropic, Horizontal, Vertical, Oblique };

const char* to_string(DirectionSet s);

/// The 13 directions: 3 axes, 6 face diagonals, 4 body diagonals (integer, not normalised).
const std::array<std::array<int, 3>, 13>& lattice_directions();
DirectionClass direction_class(int direction);
bool in_set(DirectionSet set, int direction);

struct LatticeOffset {
  std::array<int, 3> cells;  ///< offset in grid cells per axis
  double length = 0.0;       ///< |xi| on the unit torus
  double horizontal_length = 0.0;
  int direction = 0;
};

/// count log-spaced magnitudes in [r_min, r_max] along every direction of the set, rounded to
/// the nearest grid offset; duplicates within a direction are dropped.
std::vector<LatticeOffset> offset_lattice(const Grid& g, DirectionSet set, double r_min, double r_max,
                                          int count = 24);

/// Lattice used for Besov seminorms: |h| from 2 grid cells to 1/4.
std::vector<LatticeOffset> besov_lattice(const Grid& g, DirectionSet set = DirectionSet::Isotropic);
/// Lattice used for structure functions: |h| from 1 grid cell to 1/4.
std::vector<LatticeOffset> structure_lattice(const Grid& g, DirectionSet set = DirectionSet::Isotropic);

/// ||Delta^order_h f||_{L^p} for a whole-cell offset, order 1 or 2; p = infinity gives the max.
double increment_norm(const ScalarField& f, const std::array<int, 3>& cells, double p, int order = 1);

}  // namespace hydro
