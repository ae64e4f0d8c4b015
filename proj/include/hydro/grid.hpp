#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "hydro/aligned.hpp"

namespace hydro {

enum class Axis { X = 0, Y = 1, Z = 2 };

/// Parity in z; the code is the byte stored in HSF1 files.
enum class Parity : std::uint8_t { None = 0, Even = 1, Odd = 2 };

const char* to_string(Parity p);

/// Uniform grid on the unit torus. Storage is z-fastest: index = (i*ny + j)*nz + k.
struct Grid {
  int nx = 8, ny = 8, nz = 8;

  Grid() = default;
  Grid(int nx, int ny, int nz);
  static Grid cube(int n) { return Grid(n, n, n); }

  int n(int axis) const { return axis == 0 ? nx : axis == 1 ? ny : nz; }
  int n_min() const;
  double h(int axis) const { return 1.0 / n(axis); }
  std::size_t size() const { return static_cast<std::size_t>(nx) * ny * nz; }
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * ny + j) * nz + k;
  }
  /// Stored z-extent of the half spectrum (kz = 0..nz/2).
  int nzh() const { return nz / 2 + 1; }
  std::size_t spectral_size() const { return static_cast<std::size_t>(nx) * ny * nzh(); }
  std::size_t spectral_index(int i, int j, int kz) const {
    return (static_cast<std::size_t>(i) * ny + j) * nzh() + kz;
  }

  bool operator==(const Grid& o) const { return nx == o.nx && ny == o.ny && nz == o.nz; }
  bool operator!=(const Grid& o) const { return !(*this == o); }
};

/// Signed wavenumber of storage index idx on an axis of n points, in [-n/2, n/2).
inline int wavenumber(int idx, int n) { return idx < n / 2 ? idx : idx - n; }
inline bool is_nyquist(int k, int n) { return k == -n / 2 || k == n / 2; }

void require_same_grid(const Grid& a, const Grid& b, const char* where);

class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(const Grid& g, Parity parity = Parity::None);
  ScalarField(const Grid& g, RealArray values, Parity parity = Parity::None);

  /// Samples f(x, y, z) at the grid nodes x = i/nx, y = j/ny, z = k/nz.
  static ScalarField sample(const Grid& g, const std::function<double(double, double, double)>& f,
                            Parity parity = Parity::None);

  const Grid& grid() const { return grid_; }
  Parity parity() const { return parity_; }
  void set_parity(Parity p) { parity_ = p; }

  double& operator()(int i, int j, int k) { return values_[grid_.index(i, j, k)]; }
  double operator()(int i, int j, int k) const { return values_[grid_.index(i, j, k)]; }
  double& operator[](std::size_t n) { return values_[n]; }
  double operator[](std::size_t n) const { return values_[n]; }

  RealArray& values() { return values_; }
  const RealArray& values() const { return values_; }
  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }
  std::size_t size() const { return values_.size(); }

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(double s);

 private:
  Grid grid_;
  RealArray values_ = RealArray(Grid().size(), 0.0);
  Parity parity_ = Parity::None;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);
/// Pointwise product.
ScalarField multiply(const ScalarField& a, const ScalarField& b);

/// Finite values, and a vanishing z=0 plane when the parity is odd.
void validate(const ScalarField& f);

double mean(const ScalarField& f);
double max_abs(const ScalarField& f);
/// (mean |f|^p)^(1/p) on the unit torus; p = infinity gives max |f|.
double lp_norm(const ScalarField& f, double p);
double l2_norm(const ScalarField& f);

struct VectorField {
  ScalarField u, v, w;
  const Grid& grid() const { return u.grid(); }
};

void validate(const VectorField& vf);

/// Fourier coefficients c_k with f(x) = sum_k c_k exp(2 pi i k.x), i.e. the DFT divided by N.
/// Parseval: mean(f^2) = sum over all k of |c_k|^2. Only kz >= 0 is stored; the rest follows
/// from Hermitian symmetry.
class SpectralField {
 public:
  SpectralField() = default;
  explicit SpectralField(const Grid& g);

  const Grid& grid() const { return grid_; }
  std::complex<double>& at(int i, int j, int kz) { return coeffs_[grid_.spectral_index(i, j, kz)]; }
  const std::complex<double>& at(int i, int j, int kz) const {
    return coeffs_[grid_.spectral_index(i, j, kz)];
  }
  /// Coefficient of the signed wavevector (kx, ky, kz), any sign of kz.
  std::complex<double> coeff(int kx, int ky, int kz) const;

  ComplexArray& coeffs() { return coeffs_; }
  const ComplexArray& coeffs() const { return coeffs_; }
  std::complex<double>* data() { return coeffs_.data(); }
  const std::complex<double>* data() const { return coeffs_.data(); }

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(std::complex<double> s);

  /// Calls fn(i, j, kz_index, kx, ky, kz) over the stored half spectrum.
  void for_each_mode(const std::function<void(int, int, int, int, int, int)>& fn) const;

 private:
  Grid grid_;
  ComplexArray coeffs_ = ComplexArray(Grid().spectral_size());
};

/// Sum of |c_k|^2 over the full (not half) spectrum.
double spectral_energy(const SpectralField& F);

SpectralField fft3(const ScalarField& f);
ScalarField ifft3(const SpectralField& F, Parity parity = Parity::None);

/// Multiplies by (2 pi i k_axis)^order; the Nyquist plane of that axis is zeroed for odd orders.
SpectralField spectral_derivative(const SpectralField& F, Axis axis, int order = 1);
ScalarField derivative(const ScalarField& f, Axis axis, int order = 1);

/// 2/3 rule: zeroes every mode with |k_a| > n_a/3 on any axis.
SpectralField dealias(const SpectralField& F);
bool dealias_keeps(const Grid& g, int kx, int ky, int kz);

/// Zero-pads (or truncates) a spectrum onto another grid. Nyquist content is split or folded so
/// the real-space interpolant is preserved.
SpectralField resample_spectrum(const SpectralField& F, const Grid& target);

struct Antiderivative {
  ScalarField primitive;     ///< F with dF/dz = f - mean_z f, F(z=0) = 0
  ScalarField removed_mean;  ///< the vertical mean of f (z-independent)
};

/// Periodic vertical antiderivative. The vertical mean has no periodic primitive, so it is
/// removed first and returned alongside. The z-Nyquist mode is dropped.
Antiderivative vertical_antiderivative(const ScalarField& f);
SpectralField vertical_antiderivative_spectral(const SpectralField& F, SpectralField* removed_mean);

/// Samples on the half channel z in [0, 1/2]: nz_half + 1 planes including both walls.
struct ChannelField {
  int nx = 8, ny = 8, nz_half = 4;
  RealArray values;  ///< index (i*ny + j)*(nz_half+1) + k

  ChannelField() = default;
  ChannelField(int nx, int ny, int nz_half);
  static ChannelField sample(int nx, int ny, int nz_half,
                             const std::function<double(double, double, double)>& f);
  double& operator()(int i, int j, int k) { return values[(static_cast<std::size_t>(i) * ny + j) * (nz_half + 1) + k]; }
  double operator()(int i, int j, int k) const { return values[(static_cast<std::size_t>(i) * ny + j) * (nz_half + 1) + k]; }
};

/// Even or odd reflection about z = 0 onto the full torus (nz = 2 nz_half).
ScalarField extend_symmetric(const ChannelField& f, Parity parity);
ChannelField restrict_to_channel(const ScalarField& f);

/// Periodic shift by whole grid cells: result(x) = f(x + (di, dj, dk) h).
ScalarField roll(const ScalarField& f, int di, int dj, int dk);

/// delta f(xi; x) = f(x + xi) - f(x). Grid-aligned offsets use roll, others a spectral phase shift.
ScalarField increment(const ScalarField& f, const std::array<double, 3>& xi);
/// f(x + xi) via the spectral phase shift (Nyquist modes take the real part of the phase).
ScalarField shift(const ScalarField& f, const std::array<double, 3>& xi);
SpectralField shift(const SpectralField& F, const std::array<double, 3>& xi);

}  // namespace hydro
