#pragma once

// Independent reference evaluations used by the tests. Nothing here goes through the FFT.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "hydro/grid.hpp"
#include "hydro/mollify.hpp"

namespace oracle {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Finite trigonometric sum a cos(2 pi k.x) + b sin(2 pi k.x), evaluable anywhere.
struct ModalField {
  struct Mode {
    int k[3];
    double a, b;
  };
  std::vector<Mode> modes;

  double operator()(double x, double y, double z) const {
    double s = 0.0;
    for (const auto& m : modes) {
      const double ph = kTwoPi * (m.k[0] * x + m.k[1] * y + m.k[2] * z);
      s += m.a * std::cos(ph) + m.b * std::sin(ph);
    }
    return s;
  }

  hydro::ScalarField sample(const hydro::Grid& g) const {
    return hydro::ScalarField::sample(g, [this](double x, double y, double z) { return (*this)(x, y, z); });
  }
};

/// Random modes with |k_a| <= kmax. With vertical_modes every kz is nonzero, so any pair of such
/// fields has vertically mean-free horizontal divergence.
inline ModalField random_modal(std::mt19937_64& rng, int count, int kmax, bool vertical_modes = false) {
  std::uniform_int_distribution<int> k(-kmax, kmax);
  std::normal_distribution<double> c(0.0, 1.0);
  ModalField f;
  for (int n = 0; n < count; ++n) {
    const int kx = k(rng), ky = k(rng);
    int kz = k(rng);
    while (vertical_modes && kz == 0) kz = k(rng);
    f.modes.push_back({{kx, ky, kz}, c(rng), c(rng)});
  }
  return f;
}

/// Direct DFT coefficient c_k = (1/N) sum_x f(x) exp(-2 pi i k.x).
inline std::complex<double> dft_coefficient(const hydro::ScalarField& f, int kx, int ky, int kz) {
  const auto& g = f.grid();
  std::complex<double> s = 0.0;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      for (int k = 0; k < g.nz; ++k) {
        const double ph = -kTwoPi * (double(kx) * i / g.nx + double(ky) * j / g.ny + double(kz) * k / g.nz);
        s += f(i, j, k) * std::complex<double>(std::cos(ph), std::sin(ph));
      }
  return s / double(g.size());
}

/// Stencil quadrature of f^eps at x.
inline double mollify_at(const ModalField& f, const hydro::Mollifier& moll, double eps, double x, double y,
                         double z) {
  double s = 0.0;
  for (const auto& n : moll.nodes()) s += n.kernel * f(x + eps * n.u[0], y + eps * n.u[1], z + eps * n.u[2]);
  return s;
}

/// Brute-force defect density: (1/eps) sum_i grad_i . delta(u, v, w) (|delta u|^2 + |delta v|^2).
inline double defect_at(const ModalField& u, const ModalField& v, const ModalField& w, const hydro::Mollifier& moll,
                        double eps, double x, double y, double z) {
  const double u0 = u(x, y, z), v0 = v(x, y, z), w0 = w(x, y, z);
  double s = 0.0;
  for (const auto& n : moll.nodes()) {
    const double X = x + eps * n.u[0], Y = y + eps * n.u[1], Z = z + eps * n.u[2];
    const double du = u(X, Y, Z) - u0, dv = v(X, Y, Z) - v0, dw = w(X, Y, Z) - w0;
    s += (n.grad[0] * du + n.grad[1] * dv + n.grad[2] * dw) * (du * du + dv * dv);
  }
  return s / eps;
}

/// Stencil quadrature of sum_i K_i (f(x + eps u_i) - f(x)) (g(x + eps u_i) - g(x)).
inline double cez_cross_at(const ModalField& f, const ModalField& g, const hydro::Mollifier& moll, double eps,
                           double x, double y, double z) {
  const double f0 = f(x, y, z), g0 = g(x, y, z);
  double s = 0.0;
  for (const auto& n : moll.nodes()) {
    const double X = x + eps * n.u[0], Y = y + eps * n.u[1], Z = z + eps * n.u[2];
    s += n.kernel * (f(X, Y, Z) - f0) * (g(X, Y, Z) - g0);
  }
  return s;
}

/// Littlewood-Paley low-pass profile: 1 below 3/4, 0 above 4/3, smooth step in between.
inline double chi(double r) {
  const auto e = [](double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; };
  const double t = (r - 0.75) / (4.0 / 3.0 - 0.75);
  if (t <= 0.0) return 1.0;
  if (t >= 1.0) return 0.0;
  return 1.0 - e(t) / (e(t) + e(1.0 - t));
}

/// Weight of block j at |k| = r: chi for j = -1, chi(r / 2^{j+1}) - chi(r / 2^j) otherwise.
inline double block_weight(int j, double r) {
  if (j < 0) return chi(r);
  return chi(r / std::ldexp(1.0, j + 1)) - chi(r / std::ldexp(1.0, j));
}

/// Circular convolution of two real fields' spectra, truncated to the 2/3 band: the exact
/// dealiased product evaluated in physical space.
inline hydro::ScalarField truncated_product(const hydro::ScalarField& a, const hydro::ScalarField& b) {
  const auto& g = a.grid();
  struct Coef {
    int k[3];
    std::complex<double> c;
  };
  auto spectrum = [&](const hydro::ScalarField& f) {
    std::vector<Coef> out;
    for (int kx = -g.nx / 2 + 1; kx < g.nx / 2; ++kx)
      for (int ky = -g.ny / 2 + 1; ky < g.ny / 2; ++ky)
        for (int kz = -g.nz / 2 + 1; kz < g.nz / 2; ++kz) {
          const auto c = dft_coefficient(f, kx, ky, kz);
          if (std::abs(c) > 1e-13) out.push_back({{kx, ky, kz}, c});
        }
    return out;
  };
  const auto A = spectrum(a), B = spectrum(b);
  auto keep = [&](const int* k) {
    return 3 * std::abs(k[0]) <= g.nx && 3 * std::abs(k[1]) <= g.ny && 3 * std::abs(k[2]) <= g.nz;
  };
  hydro::ScalarField out(g);
  for (const auto& p : A)
    for (const auto& q : B) {
      const int k[3] = {p.k[0] + q.k[0], p.k[1] + q.k[1], p.k[2] + q.k[2]};
      if (!keep(k)) continue;
      const auto c = p.c * q.c;
      for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j)
          for (int z = 0; z < g.nz; ++z) {
            const double ph = kTwoPi * (double(k[0]) * i / g.nx + double(k[1]) * j / g.ny + double(k[2]) * z / g.nz);
            out(i, j, z) += (c * std::complex<double>(std::cos(ph), std::sin(ph))).real();
          }
    }
  return out;
}

inline double max_diff(const hydro::ScalarField& a, const hydro::ScalarField& b) {
  double m = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) m = std::max(m, std::abs(a[n] - b[n]));
  return m;
}

}  // namespace oracle
