#include "hydro/fit.hpp"

#include <cmath>
#include <map>

#include "hydro/error.hpp"

namespace hydro {

double t_quantile_95(int dof) {
  static const double table[] = {12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
                                 2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
                                 2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};
  if (dof < 1) return INFINITY;
  if (dof <= 30) return table[dof - 1];
  if (dof <= 60) return 2.000;
  if (dof <= 120) return 1.980;
  return 1.960;
}

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  return grouped_least_squares(x, y, std::vector<int>(x.size(), 0));
}

LinearFit grouped_least_squares(const std::vector<double>& x, const std::vector<double>& y,
                                const std::vector<int>& group) {
  if (x.size() != y.size() || x.size() != group.size()) fail(ErrorKind::Fit, "fit input size mismatch");
  std::map<int, std::pair<double, double>> sums;  // group -> (sum x, sum y)
  std::map<int, int> counts;
  for (std::size_t n = 0; n < x.size(); ++n) {
    sums[group[n]].first += x[n];
    sums[group[n]].second += y[n];
    counts[group[n]] += 1;
  }
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) {
    const int c = counts[group[n]];
    const double dx = x[n] - sums[group[n]].first / c;
    const double dy = y[n] - sums[group[n]].second / c;
    sxx += dx * dx;
    sxy += dx * dy;
  }
  const int groups = static_cast<int>(counts.size());
  const int points = static_cast<int>(x.size());
  if (points < groups + 2 || sxx <= 0.0) fail(ErrorKind::Fit, "not enough distinct points for a slope");
  LinearFit fit;
  fit.points = points;
  fit.slope = sxy / sxx;
  double ss = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) {
    const int c = counts[group[n]];
    const double dx = x[n] - sums[group[n]].first / c;
    const double dy = y[n] - sums[group[n]].second / c;
    const double r = dy - fit.slope * dx;
    ss += r * r;
  }
  if (groups == 1) {
    const double mx = sums.begin()->second.first / points, my = sums.begin()->second.second / points;
    fit.intercept = my - fit.slope * mx;
  }
  const int dof = points - groups - 1;
  fit.residual_rms = std::sqrt(ss / points);
  const double se = dof > 0 ? std::sqrt(ss / dof / sxx) : INFINITY;
  fit.band = t_quantile_95(dof) * se;
  return fit;
}

}  // namespace hydro
