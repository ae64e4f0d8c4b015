#pragma once

#include <vector>

#include "hydro/fit.hpp"
#include "hydro/grid.hpp"
#include "hydro/mollify.hpp"
#include "hydro/trajectory.hpp"

namespace hydro {

/// psi(x, t) = pattern(x) * bump((t - t0) / (t1 - t0)), with the bump supported in (t0, t1).
struct TestFunction {
  ScalarField pattern;
  double t0 = 0.0, t1 = 1.0;

  double bump(double t) const;
  double bump_rate(double t) const;  ///< d bump / dt
};

/// Smooth pattern 1 + cos(2 pi x) cos(2 pi y) cos(2 pi z) / 2 with the bump on the middle 80% of [t_begin, t_end].
TestFunction default_test_function(const Grid& g, double t_begin, double t_end);

/// |int int [(u^2 + v^2) d_t psi + (u^2 + v^2 + 2p) u . grad psi] dx dt - 1/2 int int D_eps psi dx dt|
/// by trapezoid quadrature over the snapshots.
double balance_residual(const Trajectory& traj, double eps, const TestFunction& psi,
                        const Mollifier& moll = Mollifier());

struct BalanceReport {
  std::vector<double> times;
  std::vector<double> energy;
  std::vector<double> epsilons;
  std::vector<double> defect_l1;  ///< time average of ||D_eps||_{L^1} over the snapshots
  std::vector<double> residuals;
  LinearFit residual_fit;  ///< log residual against log eps
};

BalanceReport balance_report(const Trajectory& traj, const std::vector<double>& epsilons, const TestFunction& psi,
                             const Mollifier& moll = Mollifier());

}  // namespace hydro
