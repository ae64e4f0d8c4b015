#include "hydro/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hydro/error.hpp"

namespace hydro {

const char* to_string(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    default: return "none";
  }
}

Grid::Grid(int nx_, int ny_, int nz_) : nx(nx_), ny(ny_), nz(nz_) {
  for (int n : {nx, ny, nz}) {
    if (n < 8 || n % 2 != 0) {
      fail(ErrorKind::InvalidGrid, "grid dimensions must be even and >= 8, got " +
                                       std::to_string(nx) + "x" + std::to_string(ny) + "x" +
                                       std::to_string(nz));
    }
  }
}

int Grid::n_min() const { return std::min({nx, ny, nz}); }

void require_same_grid(const Grid& a, const Grid& b, const char* where) {
  if (a != b) fail(ErrorKind::InvalidGrid, std::string("grid mismatch in ") + where);
}

ScalarField::ScalarField(const Grid& g, Parity parity)
    : grid_(g), values_(g.size(), 0.0), parity_(parity) {}

ScalarField::ScalarField(const Grid& g, RealArray values, Parity parity)
    : grid_(g), values_(std::move(values)), parity_(parity) {
  if (values_.size() != g.size()) fail(ErrorKind::InvalidGrid, "value count does not match grid");
}

ScalarField ScalarField::sample(const Grid& g, const std::function<double(double, double, double)>& f,
                                Parity parity) {
  ScalarField out(g, parity);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      for (int k = 0; k < g.nz; ++k)
        out(i, j, k) = f(static_cast<double>(i) / g.nx, static_cast<double>(j) / g.ny,
                         static_cast<double>(k) / g.nz);
  return out;
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  require_same_grid(grid_, o.grid_, "field addition");
  for (std::size_t n = 0; n < values_.size(); ++n) values_[n] += o.values_[n];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
  require_same_grid(grid_, o.grid_, "field subtraction");
  for (std::size_t n = 0; n < values_.size(); ++n) values_[n] -= o.values_[n];
  return *this;
}

ScalarField& ScalarField::operator*=(double s) {
  for (double& x : values_) x *= s;
  return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double s, ScalarField a) { return a *= s; }

ScalarField multiply(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid(), "pointwise product");
  ScalarField out(a.grid());
  for (std::size_t n = 0; n < a.size(); ++n) out[n] = a[n] * b[n];
  return out;
}

void validate(const ScalarField& f) {
  for (double x : f.values()) {
    if (!std::isfinite(x)) fail(ErrorKind::Constraint, "field contains non-finite values");
  }
  if (f.parity() == Parity::Odd) {
    const Grid& g = f.grid();
    const double scale = std::max(max_abs(f), 1e-300);
    for (int i = 0; i < g.nx; ++i)
      for (int j = 0; j < g.ny; ++j)
        if (std::abs(f(i, j, 0)) > 1e-12 * scale)
          fail(ErrorKind::Constraint, "odd field does not vanish on the z=0 plane");
  }
}

void validate(const VectorField& vf) {
  require_same_grid(vf.u.grid(), vf.v.grid(), "vector field");
  require_same_grid(vf.u.grid(), vf.w.grid(), "vector field");
  validate(vf.u);
  validate(vf.v);
  validate(vf.w);
}

double mean(const ScalarField& f) {
  double s = 0.0;
  for (double x : f.values()) s += x;
  return s / static_cast<double>(f.size());
}

double max_abs(const ScalarField& f) {
  double m = 0.0;
  for (double x : f.values()) m = std::max(m, std::abs(x));
  return m;
}

double lp_norm(const ScalarField& f, double p) {
  if (std::isinf(p)) return max_abs(f);
  if (!(p >= 1.0)) fail(ErrorKind::Parameter, "Lp norm requires p >= 1");
  double s = 0.0;
  if (p == 2.0) {
    for (double x : f.values()) s += x * x;
    return std::sqrt(s / static_cast<double>(f.size()));
  }
  for (double x : f.values()) s += std::pow(std::abs(x), p);
  return std::pow(s / static_cast<double>(f.size()), 1.0 / p);
}

double l2_norm(const ScalarField& f) { return lp_norm(f, 2.0); }

SpectralField::SpectralField(const Grid& g) : grid_(g), coeffs_(g.spectral_size()) {}

std::complex<double> SpectralField::coeff(int kx, int ky, int kz) const {
  const Grid& g = grid_;
  auto wrap = [](int k, int n) { return ((k % n) + n) % n; };
  int iz = wrap(kz, g.nz);
  if (iz <= g.nz / 2) return at(wrap(kx, g.nx), wrap(ky, g.ny), iz);
  return std::conj(at(wrap(-kx, g.nx), wrap(-ky, g.ny), g.nz - iz));
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  require_same_grid(grid_, o.grid_, "spectral addition");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  require_same_grid(grid_, o.grid_, "spectral subtraction");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

SpectralField& SpectralField::operator*=(std::complex<double> s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

void SpectralField::for_each_mode(const std::function<void(int, int, int, int, int, int)>& fn) const {
  const Grid& g = grid_;
  for (int i = 0; i < g.nx; ++i) {
    const int kx = wavenumber(i, g.nx);
    for (int j = 0; j < g.ny; ++j) {
      const int ky = wavenumber(j, g.ny);
      for (int kz = 0; kz < g.nzh(); ++kz) fn(i, j, kz, kx, ky, wavenumber(kz, g.nz));
    }
  }
}

double spectral_energy(const SpectralField& F) {
  const Grid& g = F.grid();
  double s = 0.0;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      for (int kz = 0; kz < g.nzh(); ++kz) {
        const double w = (kz == 0 || kz == g.nz / 2) ? 1.0 : 2.0;
        s += w * std::norm(F.at(i, j, kz));
      }
  return s;
}

ChannelField::ChannelField(int nx_, int ny_, int nz_half_)
    : nx(nx_), ny(ny_), nz_half(nz_half_),
      values(static_cast<std::size_t>(nx_) * ny_ * (nz_half_ + 1), 0.0) {
  static_cast<void>(Grid(nx, ny, 2 * nz_half));  // validates the torus shape
}

ChannelField ChannelField::sample(int nx, int ny, int nz_half,
                                  const std::function<double(double, double, double)>& f) {
  ChannelField c(nx, ny, nz_half);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int k = 0; k <= nz_half; ++k)
        c(i, j, k) = f(static_cast<double>(i) / nx, static_cast<double>(j) / ny,
                       0.5 * static_cast<double>(k) / nz_half);
  return c;
}

ScalarField extend_symmetric(const ChannelField& f, Parity parity) {
  if (parity == Parity::None) fail(ErrorKind::Parameter, "extension needs even or odd parity");
  const Grid g(f.nx, f.ny, 2 * f.nz_half);
  if (f.values.size() != static_cast<std::size_t>(f.nx) * f.ny * (f.nz_half + 1))
    fail(ErrorKind::InvalidGrid, "channel sample count does not match its shape");
  if (parity == Parity::Odd) {
    double scale = 0.0;
    for (double x : f.values) scale = std::max(scale, std::abs(x));
    for (int i = 0; i < f.nx; ++i)
      for (int j = 0; j < f.ny; ++j)
        for (int k : {0, f.nz_half})
          if (std::abs(f(i, j, k)) > 1e-12 * std::max(scale, 1e-300))
            fail(ErrorKind::Constraint, "odd extension requires f = 0 on the z=0 and z=1/2 planes");
  }
  const double sign = parity == Parity::Odd ? -1.0 : 1.0;
  ScalarField out(g, parity);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      for (int k = 0; k <= f.nz_half; ++k) out(i, j, k) = f(i, j, k);
      for (int k = 1; k < f.nz_half; ++k) out(i, j, g.nz - k) = sign * f(i, j, k);
    }
  // exact zeros on the walls
  if (parity == Parity::Odd)
    for (int i = 0; i < g.nx; ++i)
      for (int j = 0; j < g.ny; ++j) {
        out(i, j, 0) = 0.0;
        out(i, j, f.nz_half) = 0.0;
      }
  return out;
}

ChannelField restrict_to_channel(const ScalarField& f) {
  const Grid& g = f.grid();
  ChannelField c(g.nx, g.ny, g.nz / 2);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      for (int k = 0; k <= g.nz / 2; ++k) c(i, j, k) = f(i, j, k);
  return c;
}

ScalarField roll(const ScalarField& f, int di, int dj, int dk) {
  const Grid& g = f.grid();
  auto wrap = [](int k, int n) { return ((k % n) + n) % n; };
  ScalarField out(g, f.parity());
  for (int i = 0; i < g.nx; ++i) {
    const int si = wrap(i + di, g.nx);
    for (int j = 0; j < g.ny; ++j) {
      const int sj = wrap(j + dj, g.ny);
      const double* src = f.data() + g.index(si, sj, 0);
      double* dst = out.data() + g.index(i, j, 0);
      for (int k = 0; k < g.nz; ++k) dst[k] = src[wrap(k + dk, g.nz)];
    }
  }
  return out;
}

ScalarField increment(const ScalarField& f, const std::array<double, 3>& xi) {
  const Grid& g = f.grid();
  std::array<int, 3> cells{};
  bool aligned = true;
  for (int a = 0; a < 3; ++a) {
    const double c = xi[a] * g.n(a);
    cells[a] = static_cast<int>(std::lround(c));
    if (std::abs(c - cells[a]) > 1e-9) aligned = false;
  }
  ScalarField shifted = aligned ? roll(f, cells[0], cells[1], cells[2]) : shift(f, xi);
  shifted -= f;
  shifted.set_parity(Parity::None);
  return shifted;
}

}  // namespace hydro
