#include "hydro/paraproduct.hpp"

#include <algorithm>
#include <cmath>

#include "hydro/error.hpp"
#include "hydro/parallel.hpp"
#include "hydro/synth.hpp"

namespace hydro {

namespace {

double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

double radius(int kx, int ky, int kz, bool horizontal_only) {
  const double h2 = static_cast<double>(kx) * kx + static_cast<double>(ky) * ky;
  return horizontal_only ? std::sqrt(h2) : std::sqrt(h2 + static_cast<double>(kz) * kz);
}

int padded(int n) {
  const int m = (3 * n + 1) / 2;
  return m + (m % 2);
}

}  // namespace

double lp_low_profile(double r) { return 1.0 - smooth_step((r - 0.75) / (4.0 / 3.0 - 0.75)); }

double lp_annulus_profile(double r) { return lp_low_profile(0.5 * r) - lp_low_profile(r); }

double lp_weight(int j, double r) {
  if (j < 0) return lp_low_profile(r);
  return lp_annulus_profile(std::ldexp(r, -j));
}

int lp_max_block(const Grid& g, bool horizontal_only) {
  const double r_max = radius(g.nx / 2, g.ny / 2, horizontal_only ? 0 : g.nz / 2, horizontal_only);
  return std::max(0, static_cast<int>(std::ceil(std::log2(2.0 * r_max / 3.0) - 1e-12)));
}

SpectralField lp_block(const SpectralField& F, int j, bool horizontal_only) {
  SpectralField out(F.grid());
  const Grid& g = F.grid();
  parallel_for(static_cast<std::size_t>(g.nx), [&](std::size_t i) {
    const int kx = wavenumber(static_cast<int>(i), g.nx);
    for (int jj = 0; jj < g.ny; ++jj) {
      const int ky = wavenumber(jj, g.ny);
      for (int kz = 0; kz < g.nzh(); ++kz) {
        const double w = lp_weight(j, radius(kx, ky, kz, horizontal_only));
        if (w != 0.0) out.at(static_cast<int>(i), jj, kz) = w * F.at(static_cast<int>(i), jj, kz);
      }
    }
  });
  return out;
}

ScalarField LPDecomposition::reconstruct() const {
  SpectralField sum(grid);
  for (const auto& b : blocks) sum += b;
  return ifft3(sum);
}

LPDecomposition lp_blocks(const ScalarField& f) {
  const Grid& g = f.grid();
  if (g.n_min() < 16) fail(ErrorKind::InvalidGrid, "Littlewood-Paley blocks need a grid of at least 16 points per axis");
  LPDecomposition d;
  d.grid = g;
  d.j_max = lp_max_block(g);
  const SpectralField F = fft3(f);
  for (int j = -1; j <= d.j_max; ++j) d.blocks.push_back(lp_block(F, j));
  return d;
}

std::vector<double> lp_block_norms(const ScalarField& f, double p, bool horizontal_only) {
  const Grid& g = f.grid();
  if (g.n_min() < 16) fail(ErrorKind::InvalidGrid, "Littlewood-Paley blocks need a grid of at least 16 points per axis");
  const SpectralField F = fft3(f);
  const int j_max = lp_max_block(g, horizontal_only);
  std::vector<double> norms;
  for (int j = -1; j <= j_max; ++j) norms.push_back(lp_norm(ifft3(lp_block(F, j, horizontal_only)), p));
  return norms;
}

double lp_besov_norm(const ScalarField& f, double s, double p) {
  const auto norms = lp_block_norms(f, p);
  double best = 0.0;
  for (std::size_t n = 0; n < norms.size(); ++n) {
    const int j = static_cast<int>(n) - 1;
    best = std::max(best, std::pow(2.0, j * s) * norms[n]);
  }
  return best;
}

BonyDecomposition bony(const ScalarField& f, const ScalarField& g) {
  require_same_grid(f.grid(), g.grid(), "bony");
  const Grid& grid = f.grid();
  const Grid pad(padded(grid.nx), padded(grid.ny), padded(grid.nz));
  const int j_max = lp_max_block(grid);
  const SpectralField F = fft3(f), G = fft3(g);

  std::vector<ScalarField> af, ag;
  for (int j = -1; j <= j_max; ++j) {
    af.push_back(ifft3(resample_spectrum(lp_block(F, j), pad)));
    ag.push_back(ifft3(resample_spectrum(lp_block(G, j), pad)));
  }
  auto A = [&](std::vector<ScalarField>& v, int j) -> const ScalarField* {
    if (j < -1 || j > j_max) return nullptr;
    return &v[static_cast<std::size_t>(j + 1)];
  };

  ScalarField tfg(pad), tgf(pad), res(pad), prod(pad);
  ScalarField low_f(pad), low_g(pad);
  const std::size_t n = pad.size();
  for (int j = -1; j <= j_max; ++j) {
    if (j - 2 >= -1) {
      low_f += *A(af, j - 2);
      low_g += *A(ag, j - 2);
    }
    const ScalarField& fj = *A(af, j);
    const ScalarField& gj = *A(ag, j);
    const ScalarField* gm = A(ag, j - 1);
    const ScalarField* gp = A(ag, j + 1);
    parallel_for(static_cast<std::size_t>(pad.nx), [&](std::size_t i) {
      const std::size_t begin = i * n / pad.nx, end = (i + 1) * n / pad.nx;
      for (std::size_t m = begin; m < end; ++m) {
        tfg[m] += low_f[m] * gj[m];
        tgf[m] += low_g[m] * fj[m];
        double near = gj[m];
        if (gm) near += (*gm)[m];
        if (gp) near += (*gp)[m];
        res[m] += fj[m] * near;
      }
    });
  }
  const ScalarField fp = ifft3(resample_spectrum(F, pad)), gp = ifft3(resample_spectrum(G, pad));
  for (std::size_t m = 0; m < n; ++m) prod[m] = fp[m] * gp[m];

  auto back = [&](const ScalarField& x) { return ifft3(resample_spectrum(fft3(x), grid)); };
  return BonyDecomposition{back(tfg), back(tgf), back(res), back(prod)};
}

void validate_probe(const ProbeParams& q) {
  static const char* ids[] = {"B2.1", "B2.2", "B3.1", "B4.1", "B4.2", "B4.3"};
  if (std::find(std::begin(ids), std::end(ids), q.estimate) == std::end(ids))
    fail(ErrorKind::Parameter, "unknown estimate id " + q.estimate);
  for (double p : {q.p, q.p1, q.p2})
    if (!(p >= 1.0)) fail(ErrorKind::Parameter, "Lebesgue exponents must be >= 1");
  if (std::abs(1.0 / q.p - 1.0 / q.p1 - 1.0 / q.p2) > 1e-12)
    fail(ErrorKind::Parameter, "Hoelder relation 1/p = 1/p1 + 1/p2 violated");
  if (q.estimate == "B2.2" && !(q.alpha < 0.0)) fail(ErrorKind::Parameter, "B2.2 needs alpha < 0");
  if (q.estimate == "B3.1" && !(q.alpha + q.beta > 0.0)) fail(ErrorKind::Parameter, "B3.1 needs alpha + beta > 0");
  if (q.estimate == "B4.1" && !(q.alpha < q.beta && q.alpha + q.beta > 0.0))
    fail(ErrorKind::Parameter, "B4.1 needs alpha < beta and alpha + beta > 0");
  if ((q.estimate == "B4.2" || q.estimate == "B4.3") && !(q.alpha > 0.0))
    fail(ErrorKind::Parameter, q.estimate + " needs alpha > 0");
  if (q.estimate == "B4.3" && !(q.theta > 0.0)) fail(ErrorKind::Parameter, "B4.3 needs theta > 0");
}

ProbeResult product_estimate_probe(const Grid& g, int members, std::uint64_t seed, const ProbeParams& q) {
  validate_probe(q);
  if (members < 1) fail(ErrorKind::Parameter, "ensemble needs at least one member");
  ProbeResult out;
  out.estimate = q.estimate;
  out.grid_n = g.n_min();
  out.ratios.assign(static_cast<std::size_t>(members), 0.0);
  for (int m = 0; m < members; ++m) {
    const ScalarField f = ensemble_member(g, seed, 2 * m);
    const ScalarField h = ensemble_member(g, seed, 2 * m + 1);
    const BonyDecomposition b = bony(f, q.estimate == "B4.3" ? f : h);
    double lhs = 0.0, rhs = 0.0;
    if (q.estimate == "B2.1") {
      lhs = lp_besov_norm(b.t_f_g, q.beta, q.p);
      rhs = lp_norm(f, q.p1) * lp_besov_norm(h, q.beta, q.p2);
    } else if (q.estimate == "B2.2") {
      lhs = lp_besov_norm(b.t_f_g, q.alpha + q.beta, q.p);
      rhs = lp_besov_norm(f, q.alpha, q.p1) * lp_besov_norm(h, q.beta, q.p2);
    } else if (q.estimate == "B3.1") {
      lhs = lp_besov_norm(b.resonant, q.alpha + q.beta, q.p);
      rhs = lp_besov_norm(f, q.alpha, q.p1) * lp_besov_norm(h, q.beta, q.p2);
    } else if (q.estimate == "B4.1") {
      lhs = lp_besov_norm(b.product, q.alpha, q.p);
      rhs = lp_besov_norm(f, q.alpha, q.p1) * lp_besov_norm(h, q.beta, q.p2);
    } else if (q.estimate == "B4.2") {
      lhs = lp_besov_norm(b.product, q.alpha, q.p);
      rhs = lp_besov_norm(f, q.alpha, q.p1) * lp_besov_norm(h, q.alpha, q.p2);
    } else {
      lhs = lp_besov_norm(b.product, q.alpha, q.p);
      rhs = lp_besov_norm(f, q.theta, q.p1) * lp_besov_norm(f, q.alpha + q.theta, q.p2);
    }
    out.ratios[static_cast<std::size_t>(m)] = rhs > 0.0 ? lhs / rhs : 0.0;
  }
  out.max_ratio = *std::max_element(out.ratios.begin(), out.ratios.end());
  return out;
}

}  // namespace hydro
