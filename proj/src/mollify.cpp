#include "hydro/mollify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hydro/error.hpp"
#include "hydro/incompressibility.hpp"

namespace hydro {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Trig tables on the non-negative half axis: row = storage index of a wavenumber, column = node.
struct Table {
  int rows = 0, cols = 0;
  std::vector<double> v;
  double operator()(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }
};

Table trig_table(int n, int rows, const std::vector<double>& u, double eps, bool sine) {
  Table t{rows, static_cast<int>(u.size()), std::vector<double>(static_cast<std::size_t>(rows) * u.size())};
  for (int r = 0; r < rows; ++r) {
    const int k = wavenumber(r, n);
    for (std::size_t c = 0; c < u.size(); ++c) {
      const double th = kTwoPi * k * eps * u[c];
      // odd multipliers vanish on the Nyquist line, as odd derivatives do
      t.v[r * u.size() + c] = sine ? (is_nyquist(k, n) ? 0.0 : std::sin(th)) : std::cos(th);
    }
  }
  return t;
}

// out(i,j,kz) = sum_{a,b,c} W[a][b][c] X(i,a) Y(j,b) Z(kz,c), sum-factorised.
RealArray separable_transform(const std::vector<double>& W, int h, const Table& X, const Table& Y,
                              const Table& Z) {
  const int nx = X.rows, ny = Y.rows, nzh = Z.rows;
  std::vector<double> t1(static_cast<std::size_t>(h) * h * nzh, 0.0);
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b) {
      const double* w = &W[(static_cast<std::size_t>(a) * h + b) * h];
      double* dst = &t1[(static_cast<std::size_t>(a) * h + b) * nzh];
      for (int c = 0; c < h; ++c) {
        if (w[c] == 0.0) continue;
        for (int kz = 0; kz < nzh; ++kz) dst[kz] += w[c] * Z(kz, c);
      }
    }
  std::vector<double> t2(static_cast<std::size_t>(h) * ny * nzh, 0.0);
  for (int a = 0; a < h; ++a)
    for (int j = 0; j < ny; ++j) {
      double* dst = &t2[(static_cast<std::size_t>(a) * ny + j) * nzh];
      for (int b = 0; b < h; ++b) {
        const double y = Y(j, b);
        const double* src = &t1[(static_cast<std::size_t>(a) * h + b) * nzh];
        for (int kz = 0; kz < nzh; ++kz) dst[kz] += y * src[kz];
      }
    }
  RealArray out(static_cast<std::size_t>(nx) * ny * nzh, 0.0);
  for (int i = 0; i < nx; ++i)
    for (int a = 0; a < h; ++a) {
      const double x = X(i, a);
      if (x == 0.0) continue;
      for (int j = 0; j < ny; ++j) {
        double* dst = &out[(static_cast<std::size_t>(i) * ny + j) * nzh];
        const double* src = &t2[(static_cast<std::size_t>(a) * ny + j) * nzh];
        for (int kz = 0; kz < nzh; ++kz) dst[kz] += x * src[kz];
      }
    }
  return out;
}

}  // namespace

MollifierProfile parse_profile(const std::string& name) {
  if (name == "standard") return MollifierProfile::Standard;
  if (name == "flat") return MollifierProfile::Flat;
  fail(ErrorKind::Parameter, "unknown mollifier profile '" + name + "' (standard|flat)");
}

const char* to_string(MollifierProfile p) {
  return p == MollifierProfile::Standard ? "standard" : "flat";
}

double Mollifier::phi(double r) const {
  if (r >= 1.0) return 0.0;
  const double s = profile_ == MollifierProfile::Standard ? r * r : r * r * r * r;
  return std::exp(-1.0 / (1.0 - s));
}

double Mollifier::phi_prime(double r) const {
  if (r >= 1.0) return 0.0;
  if (profile_ == MollifierProfile::Standard) {
    const double d = 1.0 - r * r;
    return std::exp(-1.0 / d) * (-2.0 * r / (d * d));
  }
  const double d = 1.0 - r * r * r * r;
  return std::exp(-1.0 / d) * (-4.0 * r * r * r / (d * d));
}

Mollifier::Mollifier(MollifierProfile profile, int stencil) : profile_(profile), m_(stencil) {
  if (m_ < 3 || m_ % 2 == 0) fail(ErrorKind::Parameter, "mollifier stencil must be odd and >= 3");
  axis_.resize(m_);
  std::vector<double> w1(m_, 1.0);
  for (int c = 0; c < m_; ++c) axis_[c] = -1.0 + 2.0 * c / (m_ - 1);
  w1.front() = w1.back() = 0.5;
  const std::size_t m3 = static_cast<std::size_t>(m_) * m_ * m_;
  kernel3_.assign(m3, 0.0);
  for (auto& g : grad3_) g.assign(m3, 0.0);
  double mass = 0.0;
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b)
      for (int c = 0; c < m_; ++c) {
        const double r = std::sqrt(axis_[a] * axis_[a] + axis_[b] * axis_[b] + axis_[c] * axis_[c]);
        if (r >= 1.0) continue;
        const double w = w1[a] * w1[b] * w1[c];
        const std::size_t idx = (static_cast<std::size_t>(a) * m_ + b) * m_ + c;
        kernel3_[idx] = w * phi(r);
        mass += kernel3_[idx];
        if (r > 0.0) {
          const double radial = w * phi_prime(r) / r;
          grad3_[0][idx] = radial * axis_[a];
          grad3_[1][idx] = radial * axis_[b];
          grad3_[2][idx] = radial * axis_[c];
        }
      }
  for (std::size_t idx = 0; idx < m3; ++idx) {
    kernel3_[idx] /= mass;
    for (auto& g : grad3_) g[idx] /= mass;
  }
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b)
      for (int c = 0; c < m_; ++c) {
        const std::size_t idx = (static_cast<std::size_t>(a) * m_ + b) * m_ + c;
        if (kernel3_[idx] == 0.0 && grad3_[0][idx] == 0.0 && grad3_[1][idx] == 0.0 && grad3_[2][idx] == 0.0)
          continue;
        nodes_.push_back({{axis_[a], axis_[b], axis_[c]},
                          kernel3_[idx],
                          {grad3_[0][idx], grad3_[1][idx], grad3_[2][idx]}});
      }
}

Mollifier::Transforms Mollifier::transforms(const Grid& g, double eps) const {
  // Fold the stencil onto u >= 0 using its reflection symmetry in each coordinate.
  const int h = (m_ + 1) / 2;
  const int c0 = m_ / 2;
  std::vector<double> half(axis_.begin() + c0, axis_.end());
  auto fold = [&](const std::vector<double>& W, int odd_axis) {
    std::vector<double> F(static_cast<std::size_t>(h) * h * h, 0.0);
    for (int a = 0; a < h; ++a)
      for (int b = 0; b < h; ++b)
        for (int c = 0; c < h; ++c) {
          const int idx[3] = {a, b, c};
          double mult = 1.0;
          for (int ax = 0; ax < 3; ++ax) {
            if (idx[ax] > 0) mult *= 2.0;
            else if (ax == odd_axis) mult = 0.0;
          }
          F[(static_cast<std::size_t>(a) * h + b) * h + c] =
              mult * W[(static_cast<std::size_t>(a + c0) * m_ + (b + c0)) * m_ + (c + c0)];
        }
    return F;
  };
  const Table cx = trig_table(g.nx, g.nx, half, eps, false), sx = trig_table(g.nx, g.nx, half, eps, true);
  const Table cy = trig_table(g.ny, g.ny, half, eps, false), sy = trig_table(g.ny, g.ny, half, eps, true);
  const Table cz = trig_table(g.nz, g.nzh(), half, eps, false), sz = trig_table(g.nz, g.nzh(), half, eps, true);
  Transforms t;
  t.kernel = separable_transform(fold(kernel3_, -1), h, cx, cy, cz);
  t.grad[0] = separable_transform(fold(grad3_[0], 0), h, sx, cy, cz);
  t.grad[1] = separable_transform(fold(grad3_[1], 1), h, cx, sy, cz);
  t.grad[2] = separable_transform(fold(grad3_[2], 2), h, cx, cy, sz);
  for (auto& gr : t.grad)
    for (double& x : gr) x /= eps;
  return t;
}

void check_scale(const Grid& g, double eps) {
  const double lo = 2.0 / g.n_min();
  if (!(eps >= lo * (1.0 - 1e-12) && eps <= 0.25 * (1.0 + 1e-12))) {
    std::ostringstream msg;
    msg << "mollifier scale " << eps << " outside [" << lo << ", 0.25]";
    fail(ErrorKind::Scale, msg.str());
  }
}

SpectralField mollify(const SpectralField& F, double eps, const Mollifier& moll) {
  check_scale(F.grid(), eps);
  const auto t = moll.transforms(F.grid(), eps);
  SpectralField out(F);
  for (std::size_t n = 0; n < out.coeffs().size(); ++n) out.coeffs()[n] *= t.kernel[n];
  return out;
}

ScalarField mollify(const ScalarField& f, double eps, const Mollifier& moll) {
  return ifft3(mollify(fft3(f), eps, moll), f.parity());
}

namespace {

using Multiplier = std::array<ComplexArray, 3>;

// D = sum_a { C_a[u_a Q] - 2u C_a[u_a u] - 2v C_a[u_a v] + Q C_a[u_a]
//             + u_a (-C_a[Q] + 2u C_a[u] + 2v C_a[v]) },
// where C_a[X] is the a-th gradient correlation of X, given as a Fourier multiplier.
ScalarField assemble_defect(const VectorField& vf, const Multiplier& mult) {
  const Grid& g = vf.grid();
  const ScalarField& u = vf.u;
  const ScalarField& v = vf.v;
  const ScalarField& w = vf.w;
  const ScalarField Q = multiply(u, u) + multiply(v, v);
  const std::array<const ScalarField*, 3> vel{&u, &v, &w};
  std::array<SpectralField, 3> Fvel, FvelQ, FvelU, FvelV;
  for (int a = 0; a < 3; ++a) {
    Fvel[a] = fft3(*vel[a]);
    FvelQ[a] = fft3(multiply(*vel[a], Q));
    FvelU[a] = fft3(multiply(*vel[a], u));
    FvelV[a] = fft3(a == 0 ? multiply(u, v) : multiply(*vel[a], v));
  }
  const SpectralField FQ = fft3(Q), Fu = Fvel[0], Fv = Fvel[1];
  auto correlate_sum = [&](const std::array<SpectralField, 3>& X) {
    SpectralField s(g);
    for (int a = 0; a < 3; ++a)
      for (std::size_t n = 0; n < s.coeffs().size(); ++n) s.coeffs()[n] += mult[a][n] * X[a].coeffs()[n];
    return ifft3(s);
  };
  auto correlate = [&](int a, const SpectralField& X) {
    SpectralField s(g);
    for (std::size_t n = 0; n < s.coeffs().size(); ++n) s.coeffs()[n] = mult[a][n] * X.coeffs()[n];
    return ifft3(s);
  };
  const ScalarField T0 = correlate_sum(FvelQ);
  const ScalarField T1 = correlate_sum(FvelU);
  const ScalarField T2 = correlate_sum(FvelV);
  const ScalarField T3 = correlate_sum(Fvel);
  ScalarField D(g);
  for (std::size_t n = 0; n < g.size(); ++n)
    D[n] = T0[n] - 2.0 * u[n] * T1[n] - 2.0 * v[n] * T2[n] + Q[n] * T3[n];
  for (int a = 0; a < 3; ++a) {
    const ScalarField cq = correlate(a, FQ), cu = correlate(a, Fu), cv = correlate(a, Fv);
    const ScalarField& va = *vel[a];
    for (std::size_t n = 0; n < g.size(); ++n)
      D[n] += va[n] * (-cq[n] + 2.0 * u[n] * cu[n] + 2.0 * v[n] * cv[n]);
  }
  return D;
}

void require_defect_input(const VectorField& vf, double eps) {
  require_same_grid(vf.u.grid(), vf.v.grid(), "defect");
  require_same_grid(vf.u.grid(), vf.w.grid(), "defect");
  check_scale(vf.grid(), eps);
  const double scale = std::max(1.0, l2_norm(vf.u) + l2_norm(vf.v));
  require_compatible(vf.u, vf.v, 1e-10 * scale * vf.grid().n_min());
}

}  // namespace

ScalarField defect_density(const VectorField& vf, double eps, const Mollifier& moll) {
  require_defect_input(vf, eps);
  const auto t = moll.transforms(vf.grid(), eps);
  Multiplier mult;
  for (int a = 0; a < 3; ++a) {
    mult[a].resize(t.grad[a].size());
    for (std::size_t n = 0; n < t.grad[a].size(); ++n) mult[a][n] = {0.0, t.grad[a][n]};
  }
  return assemble_defect(vf, mult);
}

ScalarField defect_density_products(const VectorField& vf, double eps, const Mollifier& moll) {
  require_defect_input(vf, eps);
  const Grid& g = vf.grid();
  const auto t = moll.transforms(g, eps);
  // int grad phi_eps(xi) X(x + xi) dxi = -d_a (X^eps): multiplier -(2 pi i k_a) kernel(k)
  Multiplier mult;
  for (auto& m : mult) m.assign(g.spectral_size(), 0.0);
  for (int i = 0; i < g.nx; ++i) {
    const int kx = wavenumber(i, g.nx);
    for (int j = 0; j < g.ny; ++j) {
      const int ky = wavenumber(j, g.ny);
      for (int kz = 0; kz < g.nzh(); ++kz) {
        const int kzs = wavenumber(kz, g.nz);
        const std::size_t n = g.spectral_index(i, j, kz);
        const int k[3] = {kx, ky, kzs};
        for (int a = 0; a < 3; ++a) {
          if (is_nyquist(k[a], g.n(a))) continue;
          mult[a][n] = {0.0, -kTwoPi * k[a] * t.kernel[n]};
        }
      }
    }
  }
  return assemble_defect(vf, mult);
}

std::vector<double> geometric_scales(double eps_max, double eps_min, int count) {
  if (count < 2 || !(eps_max > eps_min) || eps_min <= 0.0) fail(ErrorKind::Parameter, "bad scale range");
  std::vector<double> out(count);
  for (int n = 0; n < count; ++n)
    out[n] = eps_max * std::pow(eps_min / eps_max, static_cast<double>(n) / (count - 1));
  out.back() = eps_min;
  return out;
}

DefectSweep defect_sweep(const VectorField& vf, const std::vector<double>& epsilons, const Mollifier& moll) {
  if (epsilons.size() < 4) fail(ErrorKind::Fit, "defect sweep needs at least 4 scales");
  for (std::size_t n = 1; n < epsilons.size(); ++n)
    if (!(epsilons[n] < epsilons[n - 1])) fail(ErrorKind::Fit, "scales must be strictly decreasing");
  if (epsilons.front() / epsilons.back() < 10.0 * (1.0 - 1e-9))
    fail(ErrorKind::Fit, "scales must span at least one decade");
  DefectSweep sweep;
  sweep.epsilons = epsilons;
  std::vector<double> x, y;
  for (double eps : epsilons) {
    const ScalarField D = defect_density(vf, eps, moll);
    double s = 0.0;
    for (double d : D.values()) s += std::abs(d);
    const double l1 = s / static_cast<double>(D.size());
    sweep.d_l1.push_back(l1);
    if (l1 > 0.0) {
      x.push_back(std::log(eps));
      y.push_back(std::log(l1));
    }
  }
  const double peak = *std::max_element(sweep.d_l1.begin(), sweep.d_l1.end());
  if (x.size() < 3 || peak < 1e-300) {
    sweep.degenerate = true;
    return sweep;
  }
  sweep.fit = least_squares(x, y);
  return sweep;
}

CezTerms cez_decompose(const ScalarField& f, const ScalarField& g, double eps, const Mollifier& moll) {
  require_same_grid(f.grid(), g.grid(), "cez_decompose");
  const Grid& grid = f.grid();
  const ScalarField fe = mollify(f, eps, moll), ge = mollify(g, eps, moll);
  const ScalarField fg = multiply(f, g);
  const ScalarField fge = mollify(fg, eps, moll);
  CezTerms t{ScalarField(grid), ScalarField(grid), ScalarField(grid)};
  for (std::size_t n = 0; n < grid.size(); ++n) {
    t.mollified_product[n] = fe[n] * ge[n];
    // sum_i K_i (f(x - xi_i) - f(x))(g(x - xi_i) - g(x)), expanded; the stencil is symmetric
    t.cross[n] = fge[n] - f[n] * ge[n] - g[n] * fe[n] + fg[n];
    t.remainder[n] = -(f[n] - fe[n]) * (g[n] - ge[n]);
  }
  return t;
}

}  // namespace hydro
