#include "hydro/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hydro/error.hpp"
#include "hydro/incompressibility.hpp"
#include "hydro/paraproduct.hpp"

namespace hydro {

StructureFunction structure_function(const ScalarField& f, double p, DirectionSet set, int order) {
  StructureFunction sf;
  sf.p = p;
  sf.order = order;
  sf.set = set;
  for (const auto& o : structure_lattice(f.grid(), set))
    sf.entries.push_back({o.length, o.direction, increment_norm(f, o.cells, p, order)});
  return sf;
}

Exponent fit_regularity(const StructureFunction& sf, FitRange range) {
  return fit_regularity(std::vector<StructureFunction>{sf}, range);
}

Exponent fit_regularity(const std::vector<StructureFunction>& pooled, FitRange range) {
  std::set<double> separations;
  bool any = false;
  for (const auto& sf : pooled)
    for (const auto& e : sf.entries) {
      separations.insert(e.separation);
      any = any || e.value > 0.0;
    }
  if (separations.size() < 6 || *separations.rbegin() < 10.0 * *separations.begin() * (1.0 - 1e-12))
    fail(ErrorKind::Fit, "exponent fit needs 6 separations spanning a decade");
  Exponent ex;
  ex.order = pooled.empty() ? 1 : pooled.front().order;
  if (!any) return ex;

  const double lmin = std::log(*separations.begin()), lmax = std::log(*separations.rbegin());
  double lo = lmin + 0.25 * (lmax - lmin), hi = lmin + 0.75 * (lmax - lmin);
  if (range == FitRange::SmallSeparations) {
    lo = lmin;
    hi = lmin + 0.5 * (lmax - lmin);
  }
  const double slack = 1e-9 * (lmax - lmin);
  std::vector<double> x, y;
  std::vector<int> group;
  for (std::size_t s = 0; s < pooled.size(); ++s)
    for (const auto& e : pooled[s].entries) {
      const double l = std::log(e.separation);
      if (e.value <= 0.0 || l < lo - slack || l > hi + slack) continue;
      x.push_back(l);
      y.push_back(std::log(e.value));
      group.push_back(static_cast<int>(s) * 13 + e.direction);
    }
  std::map<int, int> count;
  for (int gid : group) ++count[gid];
  std::vector<double> xs, ys;
  std::vector<int> gs;
  for (std::size_t n = 0; n < x.size(); ++n)
    if (count[group[n]] >= 2) {
      xs.push_back(x[n]);
      ys.push_back(y[n]);
      gs.push_back(group[n]);
    }
  const LinearFit fit = grouped_least_squares(xs, ys, gs);
  ex.value = fit.slope;
  ex.band = fit.band;
  ex.residual = fit.residual_rms;
  ex.defined = true;
  return ex;
}

namespace {

int order_for(double s) {
  if (!(s > 0.0 && s < 2.0)) fail(ErrorKind::UnsupportedOrder, "smoothness index must lie in (0, 2)");
  return static_cast<int>(std::floor(s)) + 1;
}

double log_minus(double r) { return std::max(0.0, -std::log(r)); }

}  // namespace

double besov_seminorm(const ScalarField& f, double s, double p) {
  const int order = order_for(s);
  double best = 0.0;
  for (const auto& o : besov_lattice(f.grid()))
    best = std::max(best, increment_norm(f, o.cells, p, order) / std::pow(o.length, s));
  return best;
}

double besov_norm(const ScalarField& f, double s, double p) { return lp_norm(f, p) + besov_seminorm(f, s, p); }

double log_holder_seminorm(const ScalarField& f, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) fail(ErrorKind::Parameter, "log-Hoelder exponent must lie in (0, 1)");
  double best = 0.0;
  for (const auto& o : structure_lattice(f.grid())) {
    const double d = increment_norm(f, o.cells, INFINITY, 1);
    best = std::max(best, d * (1.0 + log_minus(o.length)) / std::pow(o.length, gamma));
  }
  return best;
}

double log_holder_growth(const ScalarField& f, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) fail(ErrorKind::Parameter, "log-Hoelder exponent must lie in (0, 1)");
  const auto lattice = structure_lattice(f.grid());
  double rmin = INFINITY, rmax = 0.0;
  for (const auto& o : lattice) {
    rmin = std::min(rmin, o.length);
    rmax = std::max(rmax, o.length);
  }
  const double split = rmin * std::pow(rmax / rmin, 1.0 / 3.0);
  double fine = 0.0, coarse = 0.0;
  for (const auto& o : lattice) {
    const double d = increment_norm(f, o.cells, INFINITY, 1);
    const double weighted = d * (1.0 + log_minus(o.length)) / std::pow(o.length, gamma);
    if (o.length <= split)
      fine = std::max(fine, weighted);
    else
      coarse = std::max(coarse, weighted);
  }
  if (coarse == 0.0) return fine == 0.0 ? 1.0 : INFINITY;
  return fine / coarse;
}

double anisotropic_norm(const ScalarField& f, double alpha, double beta, double p) {
  if (!(alpha > 0.0 && alpha < 1.0 && beta > 0.0 && beta < 1.0))
    fail(ErrorKind::UnsupportedOrder, "anisotropic exponents must lie in (0, 1)");
  double iso = 0.0, hor = 0.0;
  for (const auto& o : besov_lattice(f.grid()))
    iso = std::max(iso, increment_norm(f, o.cells, p, 1) / std::pow(o.length, alpha));
  for (const auto& o : besov_lattice(f.grid(), DirectionSet::Horizontal))
    hor = std::max(hor, increment_norm(f, o.cells, p, 1) / std::pow(o.horizontal_length, beta));
  return lp_norm(f, p) + iso + hor;
}

double negative_besov_norm(const ScalarField& f, double s, double p) {
  if (!(s > 0.0)) fail(ErrorKind::Parameter, "negative Besov index needs s > 0");
  return lp_besov_norm(f, -s, p);
}

Exponent lp_decay_exponent(const ScalarField& f, double p, bool horizontal_only) {
  const auto norms = lp_block_norms(f, p, horizontal_only);
  std::vector<double> x, y;
  for (std::size_t n = 2; n + 1 < norms.size(); ++n) {
    if (norms[n] <= 0.0) continue;
    x.push_back(static_cast<double>(n) - 1.0);
    y.push_back(std::log2(norms[n]));
  }
  Exponent ex;
  if (x.size() < 3) return ex;
  const LinearFit fit = least_squares(x, y);
  ex.value = fit.slope;
  ex.band = fit.band;
  ex.residual = fit.residual_rms;
  ex.defined = true;
  return ex;
}

std::vector<std::array<int, 3>> shift_probe_offsets(const Grid& g) {
  std::vector<std::array<int, 3>> out;
  for (const auto& o : offset_lattice(g, DirectionSet::Isotropic, 1.0 / 32.0, 0.25, 4)) out.push_back(o.cells);
  return out;
}

double besov_shift_ratio(const ScalarField& f, double s, double eps, double p,
                         const std::vector<std::array<int, 3>>& xis) {
  const LPDecomposition d = lp_blocks(f);
  std::vector<ScalarField> blocks;
  double rhs = 0.0;
  for (int j = -1; j <= d.j_max; ++j) {
    blocks.push_back(ifft3(d.block(j)));
    rhs = std::max(rhs, std::pow(2.0, j * (s + eps)) * lp_norm(blocks.back(), p));
  }
  if (rhs == 0.0) return 0.0;
  const Grid& g = f.grid();
  double worst = 0.0;
  for (const auto& xi : xis) {
    double len2 = 0.0;
    for (int a = 0; a < 3; ++a) len2 += std::pow(xi[a] * g.h(a), 2);
    double lhs = 0.0;
    for (int j = -1; j <= d.j_max; ++j)
      lhs = std::max(lhs, std::pow(2.0, j * s) * increment_norm(blocks[static_cast<std::size_t>(j + 1)], xi, p, 1));
    worst = std::max(worst, lhs / (std::pow(std::sqrt(len2), eps) * rhs));
  }
  return worst;
}

namespace {

Exponent class_exponent(const ScalarField& u, const ScalarField& v, double p, DirectionSet set, FitRange range) {
  return fit_regularity({structure_function(u, p, set, 2), structure_function(v, p, set, 2)}, range);
}

}  // namespace

void measure_exponents(const ScalarField& u, const ScalarField& v, RegularityReport& r, double p, FitRange range) {
  require_same_grid(u.grid(), v.grid(), "measure_exponents");
  r.grid_n = u.grid().n_min();
  r.beta_horizontal = class_exponent(u, v, p, DirectionSet::Horizontal, range);
  r.alpha_vertical = class_exponent(u, v, p, DirectionSet::Vertical, range);
  r.alpha_oblique = class_exponent(u, v, p, DirectionSet::Oblique, range);
  r.alpha_iso = Exponent{};
  for (const Exponent* e : {&r.beta_horizontal, &r.alpha_vertical, &r.alpha_oblique})
    if (e->defined && (!r.alpha_iso.defined || e->value < r.alpha_iso.value)) r.alpha_iso = *e;
}

RegularityReport measure_regularity(const ScalarField& u, const ScalarField& v, const ScalarField* w,
                                    const RegularityOptions& opt) {
  RegularityReport r;
  measure_exponents(u, v, r, opt.p, opt.range);
  for (const auto& [s, p] : opt.besov)
    r.besov_seminorms[{s, p}] = std::max(besov_seminorm(u, s, p), besov_seminorm(v, s, p));
  if (opt.log_holder) {
    r.log_holder_gamma_half = std::max(log_holder_seminorm(u, 0.5), log_holder_seminorm(v, 0.5));
    r.log_holder_growth_half = std::max(log_holder_growth(u, 0.5), log_holder_growth(v, 0.5));
  }
  if (opt.extra_exponents) {
    r.gradient_l8 = class_exponent(u, v, 8.0, DirectionSet::Isotropic, opt.range);
    r.besov_9_4 = class_exponent(u, v, 9.0 / 4.0, DirectionSet::Isotropic, opt.range);
  }
  if (opt.w_norms) {
    ScalarField wr;
    const ScalarField* wp = w;
    if (!wp) {
      WReconstruction rec = reconstruct_w(u, v);
      r.compat_l2 = rec.report.compat_l2;
      const double scale = std::max(1.0, l2_norm(u) + l2_norm(v)) * u.grid().n_min();
      if (rec.report.compat_l2 <= 1e-10 * scale) {
        wr = std::move(rec.w);
        wp = &wr;
      }
    }
    if (wp) {
      for (const auto& [s, p] : opt.negative) r.negative_besov[{s, p}] = negative_besov_norm(*wp, s, p);
      r.w_decay = lp_decay_exponent(*wp, opt.p);
      r.w_plane_decay = lp_decay_exponent(*wp, opt.p, true);
    }
  }
  return r;
}

}  // namespace hydro
