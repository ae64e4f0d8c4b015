#include "hydro/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hydro/error.hpp"
#include "hydro/parallel.hpp"

namespace hydro {

const char* to_string(DirectionSet s) {
  switch (s) {
    case DirectionSet::Horizontal: return "horizontal";
    case DirectionSet::Vertical: return "vertical";
    case DirectionSet::Oblique: return "oblique";
    default: return "isotropic";
  }
}

const std::array<std::array<int, 3>, 13>& lattice_directions() {
  static const std::array<std::array<int, 3>, 13> dirs = {{
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
      {1, 1, 0}, {1, -1, 0}, {1, 0, 1}, {1, 0, -1}, {0, 1, 1}, {0, 1, -1},
      {1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {-1, 1, 1},
  }};
  return dirs;
}

DirectionClass direction_class(int direction) {
  const auto& d = lattice_directions()[direction];
  if (d[2] == 0) return DirectionClass::Horizontal;
  if (d[0] == 0 && d[1] == 0) return DirectionClass::Vertical;
  return DirectionClass::Oblique;
}

bool in_set(DirectionSet set, int direction) {
  switch (set) {
    case DirectionSet::Isotropic: return true;
    case DirectionSet::Horizontal: return direction_class(direction) == DirectionClass::Horizontal;
    case DirectionSet::Vertical: return direction_class(direction) == DirectionClass::Vertical;
    case DirectionSet::Oblique: return direction_class(direction) == DirectionClass::Oblique;
  }
  return false;
}

std::vector<LatticeOffset> offset_lattice(const Grid& g, DirectionSet set, double r_min, double r_max, int count) {
  if (count < 2 || !(r_max > r_min) || r_min <= 0.0) fail(ErrorKind::Parameter, "bad lattice range");
  std::vector<LatticeOffset> out;
  const auto& dirs = lattice_directions();
  for (int d = 0; d < 13; ++d) {
    if (!in_set(set, d)) continue;
    const double norm = std::sqrt(static_cast<double>(dirs[d][0] * dirs[d][0] + dirs[d][1] * dirs[d][1] +
                                                      dirs[d][2] * dirs[d][2]));
    std::set<std::array<int, 3>> seen;
    for (int m = 0; m < count; ++m) {
      const double r = r_min * std::pow(r_max / r_min, static_cast<double>(m) / (count - 1));
      std::array<int, 3> cells{};
      for (int a = 0; a < 3; ++a) cells[a] = static_cast<int>(std::lround(r * dirs[d][a] / norm * g.n(a)));
      if (cells == std::array<int, 3>{0, 0, 0} || !seen.insert(cells).second) continue;
      LatticeOffset o;
      o.cells = cells;
      o.direction = d;
      double l2 = 0.0;
      for (int a = 0; a < 3; ++a) l2 += std::pow(cells[a] * g.h(a), 2);
      o.length = std::sqrt(l2);
      o.horizontal_length = std::hypot(cells[0] * g.h(0), cells[1] * g.h(1));
      out.push_back(o);
    }
  }
  return out;
}

std::vector<LatticeOffset> besov_lattice(const Grid& g, DirectionSet set) {
  return offset_lattice(g, set, 2.0 / g.n_min(), 0.25);
}

std::vector<LatticeOffset> structure_lattice(const Grid& g, DirectionSet set) {
  return offset_lattice(g, set, 1.0 / g.n_min(), 0.25);
}

namespace {

inline double powp(double x, double p) {
  x = std::abs(x);
  if (p == 2.0) return x * x;
  if (p == 3.0) return x * x * x;
  if (p == 4.0) return (x * x) * (x * x);
  if (p == 1.0) return x;
  return std::pow(x, p);
}

}  // namespace

double increment_norm(const ScalarField& f, const std::array<int, 3>& cells, double p, int order) {
  if (order != 1 && order != 2) fail(ErrorKind::UnsupportedOrder, "difference order must be 1 or 2");
  const Grid& g = f.grid();
  const bool sup = std::isinf(p);
  auto wrap = [](int k, int n) { return ((k % n) + n) % n; };
  const int dk = wrap(cells[2], g.nz);
  const int dk2 = wrap(2 * cells[2], g.nz);
  auto row_sum = [&](std::size_t i) {
    double acc = 0.0;
    const int i1 = wrap(static_cast<int>(i) + cells[0], g.nx);
    const int i2 = wrap(static_cast<int>(i) + 2 * cells[0], g.nx);
    for (int j = 0; j < g.ny; ++j) {
      const double* f0 = f.data() + g.index(static_cast<int>(i), j, 0);
      const double* f1 = f.data() + g.index(i1, wrap(j + cells[1], g.ny), 0);
      if (order == 1) {
        for (int k = 0; k < g.nz; ++k) {
          int k1 = k + dk;
          if (k1 >= g.nz) k1 -= g.nz;
          const double d = f1[k1] - f0[k];
          acc = sup ? std::max(acc, std::abs(d)) : acc + powp(d, p);
        }
      } else {
        const double* f2 = f.data() + g.index(i2, wrap(j + 2 * cells[1], g.ny), 0);
        for (int k = 0; k < g.nz; ++k) {
          int k1 = k + dk, k2 = k + dk2;
          if (k1 >= g.nz) k1 -= g.nz;
          if (k2 >= g.nz) k2 -= g.nz;
          const double d = f2[k2] - 2.0 * f1[k1] + f0[k];
          acc = sup ? std::max(acc, std::abs(d)) : acc + powp(d, p);
        }
      }
    }
    return acc;
  };
  if (sup) return ordered_max(static_cast<std::size_t>(g.nx), row_sum);
  const double total = ordered_sum(static_cast<std::size_t>(g.nx), row_sum);
  return std::pow(total / static_cast<double>(g.size()), 1.0 / p);
}

}  // namespace hydro
