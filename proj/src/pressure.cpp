#include "hydro/pressure.hpp"

namespace hydro {

namespace {

ScalarField solve_from_spectra(const SpectralField& Sxx, const SpectralField& Sxy, const SpectralField& Syy) {
  const Grid& g = Sxx.grid();
  SpectralField P(g);
  // only the kz = 0 plane (the vertical mean) survives
  for (int i = 0; i < g.nx; ++i) {
    const int kx = wavenumber(i, g.nx);
    for (int j = 0; j < g.ny; ++j) {
      const int ky = wavenumber(j, g.ny);
      if (kx == 0 && ky == 0) continue;
      if (!dealias_keeps(g, kx, ky, 0)) continue;
      const double k2 = static_cast<double>(kx) * kx + static_cast<double>(ky) * ky;
      // -(2 pi)^2 |k|^2 p = (2 pi)^2 k_a k_b S_ab
      P.at(i, j, 0) = -(static_cast<double>(kx) * kx * Sxx.at(i, j, 0) +
                        2.0 * static_cast<double>(kx) * ky * Sxy.at(i, j, 0) +
                        static_cast<double>(ky) * ky * Syy.at(i, j, 0)) / k2;
    }
  }
  return ifft3(P, Parity::Even);
}

}  // namespace

ScalarField pressure_from_stress(const ScalarField& sxx, const ScalarField& sxy, const ScalarField& syy) {
  require_same_grid(sxx.grid(), sxy.grid(), "pressure_from_stress");
  require_same_grid(sxx.grid(), syy.grid(), "pressure_from_stress");
  return solve_from_spectra(fft3(sxx), fft3(sxy), fft3(syy));
}

ScalarField solve_pressure(const ScalarField& u, const ScalarField& v) {
  require_same_grid(u.grid(), v.grid(), "solve_pressure");
  return pressure_from_stress(multiply(u, u), multiply(u, v), multiply(v, v));
}

}  // namespace hydro
