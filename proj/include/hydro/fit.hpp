#pragma once

#include <vector>

namespace hydro {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double band = 0.0;         ///< half-width of the 95% confidence interval of the slope
  double residual_rms = 0.0;
  int points = 0;
};

/// Two-sided 95% Student-t quantile.
double t_quantile_95(int dof);

/// Ordinary least squares y = a + b x.
LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

/// Common slope with one intercept per group (fixed effects).
LinearFit grouped_least_squares(const std::vector<double>& x, const std::vector<double>& y,
                                const std::vector<int>& group);

}  // namespace hydro
