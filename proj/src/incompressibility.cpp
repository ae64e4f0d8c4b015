#include "hydro/incompressibility.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hydro/error.hpp"

namespace hydro {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool uniform(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b)); }
}  // namespace

std::vector<double> Trajectory::times() const {
  std::vector<double> t;
  t.reserve(snapshots.size());
  for (const auto& s : snapshots) t.push_back(s.time);
  return t;
}

double Trajectory::max_relative_energy_drift() const {
  if (energy.empty() || energy.front() == 0.0) return 0.0;
  double m = 0.0;
  for (double e : energy) m = std::max(m, std::abs(e - energy.front()) / energy.front());
  return m;
}

ScalarField horizontal_divergence(const ScalarField& u, const ScalarField& v) {
  require_same_grid(u.grid(), v.grid(), "horizontal_divergence");
  SpectralField d = spectral_derivative(fft3(u), Axis::X);
  d += spectral_derivative(fft3(v), Axis::Y);
  return ifft3(d, u.parity());
}

SpectralField reconstruct_w_spectral(const SpectralField& U, const SpectralField& V, double* compat_l2) {
  require_same_grid(U.grid(), V.grid(), "reconstruct_w");
  SpectralField div = spectral_derivative(U, Axis::X);
  div += spectral_derivative(V, Axis::Y);
  SpectralField mean_part;
  SpectralField W = vertical_antiderivative_spectral(div, &mean_part);
  W *= -1.0;
  if (compat_l2) *compat_l2 = std::sqrt(spectral_energy(mean_part));
  return W;
}

WReconstruction reconstruct_w(const ScalarField& u, const ScalarField& v) {
  require_same_grid(u.grid(), v.grid(), "reconstruct_w");
  const Grid& g = u.grid();
  const SpectralField U = fft3(u), V = fft3(v);
  WReconstruction out;
  SpectralField W = reconstruct_w_spectral(U, V, &out.report.compat_l2);
  const Parity wp = (u.parity() == Parity::Even && v.parity() == Parity::Even) ? Parity::Odd : Parity::None;
  out.w = ifft3(W, wp);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      out.report.w_boundary_max = std::max(out.report.w_boundary_max, std::abs(out.w(i, j, 0)));
  SpectralField div = spectral_derivative(U, Axis::X);
  div += spectral_derivative(V, Axis::Y);
  div += spectral_derivative(W, Axis::Z);
  out.report.div_l2 = std::sqrt(spectral_energy(div));
  return out;
}

void require_compatible(const ScalarField& u, const ScalarField& v, double tol) {
  double compat = 0.0;
  reconstruct_w_spectral(fft3(u), fft3(v), &compat);
  if (compat > tol) {
    std::ostringstream msg;
    msg << "not a hydrostatic velocity: compat_l2 = " << compat;
    fail(ErrorKind::Constraint, msg.str());
  }
}

VectorField hydrostatic_velocity(const ScalarField& u, const ScalarField& v, double tol) {
  WReconstruction r = reconstruct_w(u, v);
  if (r.report.compat_l2 > tol) {
    std::ostringstream msg;
    msg << "not a hydrostatic velocity: compat_l2 = " << r.report.compat_l2;
    fail(ErrorKind::Constraint, msg.str());
  }
  return VectorField{u, v, std::move(r.w)};
}

FluxDivergence momentum_flux_divergence(const ScalarField& u, const ScalarField& v,
                                        const ScalarField& w, bool dealias_products) {
  const Grid& g = u.grid();
  require_same_grid(g, v.grid(), "momentum flux");
  require_same_grid(g, w.grid(), "momentum flux");
  const SpectralField uu = fft3(multiply(u, u));
  const SpectralField uv = fft3(multiply(u, v));
  const SpectralField uw = fft3(multiply(u, w));
  const SpectralField vv = fft3(multiply(v, v));
  const SpectralField vw = fft3(multiply(v, w));
  FluxDivergence out{SpectralField(g), SpectralField(g)};
  for (int i = 0; i < g.nx; ++i) {
    const int kx = wavenumber(i, g.nx);
    const double dx = is_nyquist(kx, g.nx) ? 0.0 : kTwoPi * kx;
    for (int j = 0; j < g.ny; ++j) {
      const int ky = wavenumber(j, g.ny);
      const double dy = is_nyquist(ky, g.ny) ? 0.0 : kTwoPi * ky;
      for (int kz = 0; kz < g.nzh(); ++kz) {
        const int kzs = wavenumber(kz, g.nz);
        if (dealias_products && !dealias_keeps(g, kx, ky, kzs)) continue;
        const double dz = is_nyquist(kzs, g.nz) ? 0.0 : kTwoPi * kzs;
        const std::complex<double> I(0.0, 1.0);
        out.nu.at(i, j, kz) = I * (dx * uu.at(i, j, kz) + dy * uv.at(i, j, kz) + dz * uw.at(i, j, kz));
        out.nv.at(i, j, kz) = I * (dx * uv.at(i, j, kz) + dy * vv.at(i, j, kz) + dz * vw.at(i, j, kz));
      }
    }
  }
  return out;
}

std::vector<StructureResidual> check_weak_solution_structure(const std::vector<Snapshot>& snaps,
                                                             double omega) {
  if (snaps.size() < 3) fail(ErrorKind::InsufficientData, "need at least 3 snapshots for a time derivative");
  for (std::size_t n = 1; n < snaps.size(); ++n)
    if (!(snaps[n].time > snaps[n - 1].time)) fail(ErrorKind::InsufficientData, "snapshot times must increase");
  const Grid& g = snaps.front().velocity.grid();
  std::vector<StructureResidual> out;
  for (std::size_t n = 1; n + 1 < snaps.size(); ++n) {
    const auto& s = snaps[n];
    const double h1 = s.time - snaps[n - 1].time;
    const double h2 = snaps[n + 1].time - s.time;
    ScalarField dudt(g), dvdt(g);
    bool five = snaps.size() >= 5;
    for (std::size_t m = 1; five && m + 1 < snaps.size(); ++m)
      five = uniform(snaps[m].time - snaps[m - 1].time, snaps[m + 1].time - snaps[m].time);
    if (five) {
      // fourth-order weights (times 12h) for the derivative at position m of five equally spaced points
      static constexpr double kW[5][5] = {{-25, 48, -36, 16, -3},
                                          {-3, -10, 18, -6, 1},
                                          {1, -8, 0, 8, -1},
                                          {-1, 6, -18, 10, 3},
                                          {3, -16, 36, -48, 25}};
      const std::size_t start = std::min(n < 2 ? 0 : n - 2, snaps.size() - 5);
      const double* w = kW[n - start];
      const double c = 1.0 / (12.0 * h1);
      for (std::size_t m = 0; m < g.size(); ++m) {
        double du = 0.0, dv = 0.0;
        for (int q = 0; q < 5; ++q) {
          du += w[q] * snaps[start + q].velocity.u[m];
          dv += w[q] * snaps[start + q].velocity.v[m];
        }
        dudt[m] = c * du;
        dvdt[m] = c * dv;
      }
    } else {
      const double a = -h2 / (h1 * (h1 + h2)), b = (h2 - h1) / (h1 * h2), c = h1 / (h2 * (h1 + h2));
      for (std::size_t m = 0; m < g.size(); ++m) {
        dudt[m] = a * snaps[n - 1].velocity.u[m] + b * s.velocity.u[m] + c * snaps[n + 1].velocity.u[m];
        dvdt[m] = a * snaps[n - 1].velocity.v[m] + b * s.velocity.v[m] + c * snaps[n + 1].velocity.v[m];
      }
    }
    const auto& vel = s.velocity;
    FluxDivergence N = momentum_flux_divergence(vel.u, vel.v, vel.w, true);
    const SpectralField P = fft3(s.pressure);
    SpectralField ru = fft3(dudt), rv = fft3(dvdt);
    ru += N.nu;
    rv += N.nv;
    SpectralField cu = fft3(vel.v), cv = fft3(vel.u);
    cu *= -omega;
    cv *= omega;
    ru += cu;
    rv += cv;
    ru += spectral_derivative(P, Axis::X);
    rv += spectral_derivative(P, Axis::Y);
    SpectralField div = spectral_derivative(fft3(vel.u), Axis::X);
    div += spectral_derivative(fft3(vel.v), Axis::Y);
    div += spectral_derivative(fft3(vel.w), Axis::Z);
    StructureResidual r;
    r.time = s.time;
    r.momentum_x = std::sqrt(spectral_energy(ru));
    r.momentum_y = std::sqrt(spectral_energy(rv));
    r.hydrostatic = std::sqrt(spectral_energy(spectral_derivative(P, Axis::Z)));
    r.divergence = std::sqrt(spectral_energy(div));
    out.push_back(r);
  }
  return out;
}

}  // namespace hydro
