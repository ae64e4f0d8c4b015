#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hydro/pressure.hpp"
#include "oracles.hpp"

using namespace hydro;

namespace {
constexpr double kPi = std::numbers::pi;

// p_k = -k_i k_j S_ij(k) / |k_h|^2 from direct DFTs of the vertical means of the stresses.
ScalarField pressure_oracle(const ScalarField& u, const ScalarField& v) {
  const Grid& g = u.grid();
  ScalarField sxx(g), sxy(g), syy(g);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      double a = 0, b = 0, c = 0;
      for (int k = 0; k < g.nz; ++k) {
        a += u(i, j, k) * u(i, j, k);
        b += u(i, j, k) * v(i, j, k);
        c += v(i, j, k) * v(i, j, k);
      }
      for (int k = 0; k < g.nz; ++k) {
        sxx(i, j, k) = a / g.nz;
        sxy(i, j, k) = b / g.nz;
        syy(i, j, k) = c / g.nz;
      }
    }
  ScalarField p(g);
  for (int kx = -g.nx / 2 + 1; kx < g.nx / 2; ++kx)
    for (int ky = -g.ny / 2 + 1; ky < g.ny / 2; ++ky) {
      if (kx == 0 && ky == 0) continue;
      const auto c = -(double(kx) * kx * oracle::dft_coefficient(sxx, kx, ky, 0) +
                       2.0 * kx * ky * oracle::dft_coefficient(sxy, kx, ky, 0) +
                       double(ky) * ky * oracle::dft_coefficient(syy, kx, ky, 0)) /
                     double(kx * kx + ky * ky);
      for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j) {
          const double ph = oracle::kTwoPi * (double(kx) * i / g.nx + double(ky) * j / g.ny);
          const double val = (c * std::complex<double>(std::cos(ph), std::sin(ph))).real();
          for (int k = 0; k < g.nz; ++k) p(i, j, k) += val;
        }
    }
  return p;
}
}  // namespace

TEST_CASE("pressure of zero and of a y-mode") {
  const Grid g = Grid::cube(16);
  CHECK(max_abs(solve_pressure(ScalarField(g), ScalarField(g))) == 0.0);
  // S_xx = sin^2(2 pi y) varies only in y and meets d_xx: p = 0
  const ScalarField u = ScalarField::sample(g, [](double, double y, double) { return std::sin(2 * kPi * y); });
  CHECK(max_abs(solve_pressure(u, ScalarField(g))) < 1e-14);
}

TEST_CASE("manufactured single mode") {
  const Grid g = Grid::cube(16);
  const ScalarField u = ScalarField::sample(g, [](double x, double, double) { return std::sin(2 * kPi * x); });
  const ScalarField p = solve_pressure(u, ScalarField(g));
  // Lap_H p = -d_xx (u^2) = -8 pi^2 cos(4 pi x)  =>  p = cos(4 pi x) / 2
  const ScalarField want = ScalarField::sample(g, [](double x, double, double) { return 0.5 * std::cos(4 * kPi * x); });
  CHECK(oracle::max_diff(p, want) < 1e-10);
  CHECK(oracle::max_diff(p, pressure_oracle(u, ScalarField(g))) < 1e-12);
  CHECK(max_abs(derivative(p, Axis::Z)) < 1e-12);
  CHECK(std::abs(mean(p)) < 1e-12);
}

TEST_CASE("random band-limited velocity against the direct oracle") {
  const Grid g = Grid::cube(12);
  std::mt19937_64 rng(4);
  const ScalarField u = oracle::random_modal(rng, 4, 1).sample(g);
  const ScalarField v = oracle::random_modal(rng, 4, 1).sample(g);
  const ScalarField p = solve_pressure(u, v);
  CHECK(oracle::max_diff(p, pressure_oracle(u, v)) < 1e-11);
  CHECK(std::abs(mean(p)) < 1e-12);
  CHECK(max_abs(derivative(p, Axis::Z)) < 1e-12);
}
