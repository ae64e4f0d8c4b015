#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "hydro/error.hpp"
#include "hydro/grid.hpp"

namespace hydro {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// FFTW_ESTIMATE keeps the chosen algorithm, and hence every bit of output, independent of timing.
const Plans& plans_for(const Grid& g) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, Plans> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(g.nx, g.ny, g.nz);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  RealArray r(g.size());
  ComplexArray c(g.spectral_size());
  auto* cptr = reinterpret_cast<fftw_complex*>(c.data());
  Plans p;
  p.forward = fftw_plan_dft_r2c_3d(g.nx, g.ny, g.nz, r.data(), cptr, FFTW_ESTIMATE);
  p.backward = fftw_plan_dft_c2r_3d(g.nx, g.ny, g.nz, cptr, r.data(), FFTW_ESTIMATE);
  if (!p.forward || !p.backward) fail(ErrorKind::InvalidGrid, "FFT planning failed");
  return cache.emplace(key, p).first->second;
}

}  // namespace

SpectralField fft3(const ScalarField& f) {
  const Grid& g = f.grid();
  if (f.size() != g.size()) fail(ErrorKind::InvalidGrid, "field size does not match its grid");
  const Plans& p = plans_for(g);
  SpectralField F(g);
  // r2c leaves the input intact, but the new-array API wants a non-const pointer
  fftw_execute_dft_r2c(p.forward, const_cast<double*>(f.data()),
                       reinterpret_cast<fftw_complex*>(F.data()));
  const double inv = 1.0 / static_cast<double>(g.size());
  for (auto& c : F.coeffs()) c *= inv;
  return F;
}

ScalarField ifft3(const SpectralField& F, Parity parity) {
  const Grid& g = F.grid();
  const Plans& p = plans_for(g);
  ComplexArray scratch(F.coeffs());  // c2r overwrites its input
  ScalarField out(g, parity);
  fftw_execute_dft_c2r(p.backward, reinterpret_cast<fftw_complex*>(scratch.data()), out.data());
  return out;
}

SpectralField spectral_derivative(const SpectralField& F, Axis axis, int order) {
  if (order < 1) fail(ErrorKind::Parameter, "derivative order must be positive");
  const Grid& g = F.grid();
  const int a = static_cast<int>(axis);
  const int n = g.n(a);
  SpectralField out(g);
  // (2 pi i k)^order = (2 pi k)^order * i^order
  static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<double> unit = ipow[order % 4];
  for (int i = 0; i < g.nx; ++i) {
    const int kx = wavenumber(i, g.nx);
    for (int j = 0; j < g.ny; ++j) {
      const int ky = wavenumber(j, g.ny);
      for (int kz = 0; kz < g.nzh(); ++kz) {
        const int k = a == 0 ? kx : a == 1 ? ky : wavenumber(kz, g.nz);
        if (order % 2 == 1 && is_nyquist(k, n)) {
          out.at(i, j, kz) = 0.0;
          continue;
        }
        out.at(i, j, kz) = F.at(i, j, kz) * unit * std::pow(kTwoPi * k, order);
      }
    }
  }
  return out;
}

ScalarField derivative(const ScalarField& f, Axis axis, int order) {
  return ifft3(spectral_derivative(fft3(f), axis, order));
}

bool dealias_keeps(const Grid& g, int kx, int ky, int kz) {
  return 3 * std::abs(kx) <= g.nx && 3 * std::abs(ky) <= g.ny && 3 * std::abs(kz) <= g.nz;
}

SpectralField dealias(const SpectralField& F) {
  const Grid& g = F.grid();
  SpectralField out(F);
  for (int i = 0; i < g.nx; ++i) {
    const int kx = wavenumber(i, g.nx);
    for (int j = 0; j < g.ny; ++j) {
      const int ky = wavenumber(j, g.ny);
      for (int kz = 0; kz < g.nzh(); ++kz)
        if (!dealias_keeps(g, kx, ky, wavenumber(kz, g.nz))) out.at(i, j, kz) = 0.0;
    }
  }
  return out;
}

namespace {

struct Source {
  int k;
  double w;
};

// Which source wavenumbers feed target wavenumber kt on one axis.
std::vector<Source> axis_sources(int kt, int ns, int nt) {
  if (nt == ns) return {{kt, 1.0}};
  if (nt > ns) {
    if (std::abs(kt) < ns / 2) return {{kt, 1.0}};
    if (std::abs(kt) == ns / 2) return {{-ns / 2, 0.5}};
    return {};
  }
  if (std::abs(kt) < nt / 2) return {{kt, 1.0}};
  return {{-nt / 2, 1.0}, {nt / 2, 1.0}};
}

}  // namespace

SpectralField resample_spectrum(const SpectralField& F, const Grid& target) {
  const Grid& s = F.grid();
  SpectralField out(target);
  for (int i = 0; i < target.nx; ++i) {
    auto sx = axis_sources(wavenumber(i, target.nx), s.nx, target.nx);
    if (sx.empty()) continue;
    for (int j = 0; j < target.ny; ++j) {
      auto sy = axis_sources(wavenumber(j, target.ny), s.ny, target.ny);
      if (sy.empty()) continue;
      for (int kz = 0; kz < target.nzh(); ++kz) {
        auto sz = axis_sources(wavenumber(kz, target.nz), s.nz, target.nz);
        std::complex<double> c = 0.0;
        for (const auto& a : sx)
          for (const auto& b : sy)
            for (const auto& d : sz) c += a.w * b.w * d.w * F.coeff(a.k, b.k, d.k);
        out.at(i, j, kz) = c;
      }
    }
  }
  return out;
}

SpectralField vertical_antiderivative_spectral(const SpectralField& F, SpectralField* removed_mean) {
  const Grid& g = F.grid();
  SpectralField P(g);
  if (removed_mean) *removed_mean = SpectralField(g);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      for (int kz = 1; kz < g.nz / 2; ++kz)
        P.at(i, j, kz) = F.at(i, j, kz) / std::complex<double>(0.0, kTwoPi * kz);
      if (removed_mean) removed_mean->at(i, j, 0) = F.at(i, j, 0);
    }
  // kz = 0 plane fixes P(z=0) = 0: P0(k_h) = -sum_{kz != 0} P(k_h, kz)
  for (int i = 0; i < g.nx; ++i) {
    const int mi = (g.nx - i) % g.nx;
    for (int j = 0; j < g.ny; ++j) {
      const int mj = (g.ny - j) % g.ny;
      std::complex<double> s = 0.0;
      for (int kz = 1; kz < g.nz / 2; ++kz) s += P.at(i, j, kz) + std::conj(P.at(mi, mj, kz));
      P.at(i, j, 0) = -s;
    }
  }
  return P;
}

Antiderivative vertical_antiderivative(const ScalarField& f) {
  SpectralField mean_part;
  SpectralField P = vertical_antiderivative_spectral(fft3(f), &mean_part);
  Antiderivative out{ifft3(P), ifft3(mean_part)};
  // the primitive of an even field is odd; z = 0 is exactly zero by construction up to rounding
  const Grid& g = f.grid();
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) out.primitive(i, j, 0) = 0.0;
  if (f.parity() == Parity::Even) out.primitive.set_parity(Parity::Odd);
  if (f.parity() == Parity::Odd) out.primitive.set_parity(Parity::Even);
  return out;
}

SpectralField shift(const SpectralField& F, const std::array<double, 3>& xi) {
  const Grid& g = F.grid();
  auto factors = [&](int a) {
    std::vector<std::complex<double>> ph(a == 2 ? g.nzh() : g.n(a));
    for (std::size_t idx = 0; idx < ph.size(); ++idx) {
      const int k = wavenumber(static_cast<int>(idx), g.n(a));
      const double t = kTwoPi * k * xi[a];
      ph[idx] = is_nyquist(k, g.n(a)) ? std::complex<double>(std::cos(t), 0.0)
                                      : std::complex<double>(std::cos(t), std::sin(t));
    }
    return ph;
  };
  const auto px = factors(0), py = factors(1), pz = factors(2);
  SpectralField out(g);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      const std::complex<double> pxy = px[i] * py[j];
      for (int kz = 0; kz < g.nzh(); ++kz) out.at(i, j, kz) = F.at(i, j, kz) * pxy * pz[kz];
    }
  return out;
}

ScalarField shift(const ScalarField& f, const std::array<double, 3>& xi) {
  return ifft3(shift(fft3(f), xi), f.parity());
}

}  // namespace hydro
