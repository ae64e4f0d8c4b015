#include "hydro/balance.hpp"

#include <cmath>
#include <numbers>

#include "hydro/error.hpp"

namespace hydro {

namespace {

double bump_profile(double s) {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  return std::exp(-1.0 / (s * (1.0 - s)));
}

double bump_profile_rate(double s) {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  const double q = s * (1.0 - s);
  return bump_profile(s) * (1.0 - 2.0 * s) / (q * q);
}

void check_support(const Trajectory& traj, const TestFunction& psi) {
  if (traj.snapshots.size() < 3) fail(ErrorKind::InsufficientData, "balance residual needs at least 3 snapshots");
  if (!(psi.t1 > psi.t0) || psi.t0 < traj.snapshots.front().time || psi.t1 > traj.snapshots.back().time)
    fail(ErrorKind::TestFunction, "test function must be supported inside the trajectory's time interval");
}

}  // namespace

double TestFunction::bump(double t) const { return bump_profile((t - t0) / (t1 - t0)); }

double TestFunction::bump_rate(double t) const { return bump_profile_rate((t - t0) / (t1 - t0)) / (t1 - t0); }

TestFunction default_test_function(const Grid& g, double t_begin, double t_end) {
  const double two_pi = 2.0 * std::numbers::pi;
  TestFunction psi;
  psi.pattern = ScalarField::sample(g, [&](double x, double y, double z) {
    return 1.0 + 0.5 * std::cos(two_pi * x) * std::cos(two_pi * y) * std::cos(two_pi * z);
  });
  const double span = t_end - t_begin;
  psi.t0 = t_begin + 0.1 * span;
  psi.t1 = t_end - 0.1 * span;
  return psi;
}

namespace {

struct SnapshotTerms {
  double transport = 0.0;  ///< int (u^2+v^2) psi_x dx times bump'(t) plus flux term times bump(t)
  double defect = 0.0;     ///< int D_eps pattern dx times bump(t)
  double defect_l1 = 0.0;
};

SnapshotTerms snapshot_terms(const Snapshot& s, double eps, const TestFunction& psi, const Mollifier& moll,
                             const std::array<ScalarField, 3>& grad) {
  SnapshotTerms t;
  const double b = psi.bump(s.time), db = psi.bump_rate(s.time);
  const auto& vel = s.velocity;
  const Grid& g = vel.grid();
  const ScalarField D = defect_density(vel, eps, moll);
  double e_psi = 0.0, flux = 0.0, d_psi = 0.0, d_abs = 0.0;
  for (std::size_t m = 0; m < g.size(); ++m) {
    const double q = vel.u[m] * vel.u[m] + vel.v[m] * vel.v[m];
    e_psi += q * psi.pattern[m];
    flux += (q + 2.0 * s.pressure[m]) * (vel.u[m] * grad[0][m] + vel.v[m] * grad[1][m] + vel.w[m] * grad[2][m]);
    d_psi += D[m] * psi.pattern[m];
    d_abs += std::abs(D[m]);
  }
  const double inv = 1.0 / static_cast<double>(g.size());
  t.transport = inv * (e_psi * db + flux * b);
  t.defect = inv * d_psi * b;
  t.defect_l1 = inv * d_abs;
  return t;
}

double trapezoid(const std::vector<double>& t, const std::vector<double>& f) {
  double acc = 0.0;
  for (std::size_t n = 1; n < t.size(); ++n) acc += 0.5 * (t[n] - t[n - 1]) * (f[n] + f[n - 1]);
  return acc;
}

struct Evaluation {
  double residual;
  double defect_l1;
};

Evaluation evaluate(const Trajectory& traj, double eps, const TestFunction& psi, const Mollifier& moll) {
  check_support(traj, psi);
  const std::array<ScalarField, 3> grad = {derivative(psi.pattern, Axis::X), derivative(psi.pattern, Axis::Y),
                                           derivative(psi.pattern, Axis::Z)};
  std::vector<double> times, integrand, l1;
  for (const auto& s : traj.snapshots) {
    times.push_back(s.time);
    if (psi.bump(s.time) == 0.0 && psi.bump_rate(s.time) == 0.0) {
      integrand.push_back(0.0);
      l1.push_back(0.0);
      continue;
    }
    const SnapshotTerms t = snapshot_terms(s, eps, psi, moll, grad);
    integrand.push_back(t.transport - 0.5 * t.defect);
    l1.push_back(t.defect_l1);
  }
  const double span = times.back() - times.front();
  return {std::abs(trapezoid(times, integrand)), trapezoid(times, l1) / span};
}

}  // namespace

double balance_residual(const Trajectory& traj, double eps, const TestFunction& psi, const Mollifier& moll) {
  return evaluate(traj, eps, psi, moll).residual;
}

BalanceReport balance_report(const Trajectory& traj, const std::vector<double>& epsilons, const TestFunction& psi,
                             const Mollifier& moll) {
  BalanceReport r;
  r.times = traj.times();
  r.energy = traj.energy;
  r.epsilons = epsilons;
  std::vector<double> x, y;
  for (double eps : epsilons) {
    const Evaluation e = evaluate(traj, eps, psi, moll);
    r.residuals.push_back(e.residual);
    r.defect_l1.push_back(e.defect_l1);
    if (e.residual > 0.0) {
      x.push_back(std::log(eps));
      y.push_back(std::log(e.residual));
    }
  }
  if (x.size() >= 2) {
    if (x.size() == 2) {
      r.residual_fit.slope = (y[1] - y[0]) / (x[1] - x[0]);
      r.residual_fit.points = 2;
      r.residual_fit.band = INFINITY;
    } else {
      r.residual_fit = least_squares(x, y);
    }
  }
  return r;
}

}  // namespace hydro
