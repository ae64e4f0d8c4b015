// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hydro/balance.hpp"
#include "hydro/criteria.hpp"
#include "hydro/error.hpp"
#include "hydro/incompressibility.hpp"
#include "hydro/mollify.hpp"
#include "hydro/paraproduct.hpp"
#include "hydro/pressure.hpp"
#include "hydro/regularity.hpp"
#include "hydro/solver.hpp"
#include "hydro/synth.hpp"
#include "oracles.hpp"

using namespace hydro;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const char* fmt, ...) __attribute__((format(printf, 3, 4)));
};

void Outcome::require(bool ok, const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  pass = pass && ok;
  if (!detail.empty()) detail += "; ";
  detail += buf;
  if (!ok) detail += " [fail]";
}

double rel(const ScalarField& a, const ScalarField& b) { return l2_norm(a - b) / l2_norm(b); }

// Every synthesized pair is checked against the constraint and boundary tolerances in criterion 3.
struct SynthLog {
  struct Entry {
    std::string label;
    CompatibilityReport report;
  };
  std::vector<Entry> entries;
  SynthResult make(const SynthSpec& s, const Grid& g, const std::string& label) {
    SynthResult r = synth_pair(s, g);
    entries.push_back({label, reconstruct_w(r.u, r.v).report});
    return r;
  }
};

SynthLog synth_log;

VectorField upsample(const VectorField& vf, int n) {
  const Grid target = Grid::cube(n);
  return VectorField{ifft3(resample_spectrum(fft3(vf.u), target), vf.u.parity()),
                     ifft3(resample_spectrum(fft3(vf.v), target), vf.v.parity()),
                     ifft3(resample_spectrum(fft3(vf.w), target), vf.w.parity())};
}

// The smooth inviscid run shared by criteria 5, 7 and 11.
const Trajectory& smooth_run() {
  static const Trajectory traj = [] {
    SolverConfig c;
    c.grid = Grid::cube(64);
    c.dt = 1e-3;
    c.t_end = 0.25;
    c.snapshot_stride = 5;
    return run(c, synth_smooth(1, c.grid, 1));
  }();
  return traj;
}

Outcome criterion1() {
  Outcome o;
  const Grid g = Grid::cube(64);
  double bony_worst = 0.0, lp_worst = 0.0;
  for (int m = 0; m < 50; ++m) {
    const ScalarField f = ensemble_member(g, 11, 2 * m), h = ensemble_member(g, 11, 2 * m + 1);
    const BonyDecomposition b = bony(f, h);
    bony_worst = std::max(bony_worst, rel(b.t_f_g + b.t_g_f + b.resonant, b.product));
    lp_worst = std::max(lp_worst, rel(lp_blocks(f).reconstruct(), f));
  }
  o.require(bony_worst < 1e-10, "Bony max rel %.2e < 1e-10", bony_worst);
  o.require(lp_worst < 1e-12, "LP max rel %.2e < 1e-12", lp_worst);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Grid g = Grid::cube(64);
  const Mollifier moll(MollifierProfile::Standard, 9);
  const double eps = 0.125;
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int m = 0; m < 50; ++m) {
    const ScalarField f = oracle::random_modal(rng, 6, 8).sample(g), h = oracle::random_modal(rng, 6, 8).sample(g);
    const CezTerms t = cez_decompose(f, h, eps, moll);
    worst = std::max(worst, rel(t.mollified_product + t.cross + t.remainder, mollify(multiply(f, h), eps, moll)));
  }
  o.require(worst < 1e-8, "max rel %.2e < 1e-8 over 50 pairs", worst);
  return o;
}

Outcome criterion3() {
  Outcome o;
  if (synth_log.entries.empty()) {
    SynthSpec s;
    s.seed = 3;
    synth_log.make(s, Grid::cube(64), "alpha 0.6 n 64");
  }
  double compat = 0.0, wall = 0.0, div = 0.0;
  for (const auto& e : synth_log.entries) {
    compat = std::max(compat, e.report.compat_l2);
    wall = std::max(wall, e.report.w_boundary_max);
    div = std::max(div, e.report.div_l2);
  }
  o.require(compat < 1e-12, "%zu pairs: compat_l2 %.2e < 1e-12", synth_log.entries.size(), compat);
  o.require(wall < 1e-10, "w(z=0) %.2e < 1e-10", wall);
  o.require(div < 1e-10, "div %.2e < 1e-10", div);
  return o;
}

Outcome criterion4() {
  Outcome o;
  const Grid g = Grid::cube(64);
  const ScalarField u = ScalarField::sample(g, [](double x, double, double) { return std::sin(2 * kPi * x); });
  const ScalarField p = solve_pressure(u, ScalarField(g));
  const ScalarField want = ScalarField::sample(g, [](double x, double, double) { return 0.5 * std::cos(4 * kPi * x); });
  const double err = oracle::max_diff(p, want), dz = max_abs(derivative(p, Axis::Z)), avg = std::abs(mean(p));
  o.require(err < 1e-10, "max |p - cos(4 pi x)/2| %.2e < 1e-10", err);
  o.require(dz < 1e-12, "max |dp/dz| %.2e < 1e-12", dz);
  o.require(avg < 1e-12, "|mean p| %.2e < 1e-12", avg);
  return o;
}

Outcome criterion5() {
  Outcome o;
  const Trajectory& t = smooth_run();
  o.require(!t.blow_up_time, "run completed");
  const double drift = t.max_relative_energy_drift();
  o.require(drift < 1e-6, "max relative energy drift %.2e < 1e-6", drift);

  // momentum residuals from snapshots every step, so the time stencil sees the dt under test
  const Grid g = Grid::cube(64);
  const VectorField init = synth_smooth(1, g, 1);
  double res[2];
  for (int r = 0; r < 2; ++r) {
    SolverConfig c;
    c.grid = g;
    c.dt = r ? 5e-4 : 1e-3;
    c.t_end = 8 * c.dt;
    c.snapshot_stride = 1;
    double worst = 0.0;
    for (const auto& s : check_weak_solution_structure(run(c, init).snapshots, 0.0))
      worst = std::max(worst, s.momentum_x + s.momentum_y);
    res[r] = worst;
  }
  const double ratio = res[0] / res[1];
  o.require(std::abs(ratio - 16.0) <= 0.3 * 16.0, "momentum residual ratio under dt halving %.2f (16 +- 30%%)", ratio);
  return o;
}

Outcome criterion6() {
  Outcome o;
  const Grid g = Grid::cube(256);
  for (double a : {0.35, 0.6, 0.9}) {
    SynthSpec s;
    s.alpha = a;
    s.seed = 1;
    try {
      const SynthResult r = synth_log.make(s, g, "alpha " + std::to_string(a));
      const double got = r.report.alpha_iso.value;
      o.require(std::abs(got - a) <= 0.05, "alpha %.2f -> %.3f", a, got);
    } catch (const Error& e) {
      o.require(false, "alpha %.2f: %s", a, e.what());
    }
  }
  SynthSpec s;
  s.target = SynthTarget::Anisotropic;
  s.alpha = 0.35;
  s.beta = 0.75;
  s.seed = 1;
  try {
    const SynthResult r = synth_log.make(s, g, "aniso 0.35 0.75");
    const double av = r.report.alpha_vertical.value, bh = r.report.beta_horizontal.value;
    o.require(std::abs(av - 0.35) <= 0.05 && std::abs(bh - 0.75) <= 0.05, "(0.35, 0.75) -> (%.3f, %.3f)", av, bh);
  } catch (const Error& e) {
    o.require(false, "(0.35, 0.75): %s", e.what());
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const Grid g = Grid::cube(128);
  const auto eps = geometric_scales(0.25, 2.0 / 128, 6);
  VectorField rough;
  for (double a : {0.6, 0.75, 0.9}) {
    SynthSpec s;
    s.alpha = a;
    s.seed = 7;
    const SynthResult r = synth_log.make(s, g, "alpha " + std::to_string(a) + " n 128");
    const VectorField vf = hydrostatic_velocity(r.u, r.v, 1e-9);
    const DefectSweep sw = defect_sweep(vf, eps);
    o.require(sw.fit.slope >= 2 * a - 1 - sw.fit.band, "alpha %.2f: slope %.3f +- %.3f >= %.2f", a, sw.fit.slope,
              sw.fit.band, 2 * a - 1);
    if (a == 0.75) rough = vf;
  }
  const VectorField smooth = upsample(smooth_run().snapshots[25].velocity, 128);
  const DefectSweep ss = defect_sweep(smooth, eps);
  o.require(ss.fit.slope >= 1.5, "smooth snapshot slope %.3f >= 1.5", ss.fit.slope);

  const DefectSweep a = defect_sweep(rough, eps, Mollifier(MollifierProfile::Standard));
  const DefectSweep b = defect_sweep(rough, eps, Mollifier(MollifierProfile::Flat));
  const double gap = std::abs(a.fit.slope - b.fit.slope);
  o.require(gap <= a.fit.band + b.fit.band, "profiles: |%.3f - %.3f| <= %.3f", a.fit.slope, b.fit.slope,
            a.fit.band + b.fit.band);
  return o;
}

Outcome criterion8() {
  Outcome o;
  const Grid g = Grid::cube(128);
  SynthSpec s;
  s.target = SynthTarget::Anisotropic;
  s.alpha = 0.45;
  s.beta = 1.2;
  s.seed = 7;
  const SynthResult r = synth_log.make(s, g, "aniso 0.45 1.2");
  const VectorField vf = hydrostatic_velocity(r.u, r.v, 1e-9);
  const RegularityReport rep = measure_regularity(vf.u, vf.v, &vf.w);
  const DefectSweep sw = defect_sweep(vf, geometric_scales(0.25, 2.0 / 128, 6));
  const auto v = criterion_engine(rep, &sw, {"P3.1", "P3.6"});
  const CriterionVerdict& p31 = v[0];
  const CriterionVerdict& p36 = v[1];
  o.require(p36.hypothesis_holds, "P3.6 holds (alpha_v %.3f, beta_h %.3f)", p36.inputs.at("alpha_vertical"),
            p36.inputs.at("beta_horizontal"));
  o.require(!p31.hypothesis_holds, "P3.1 fails (alpha %.3f)", p31.inputs.at("alpha"));
  const double pred = p36.predicted.value_or(NAN);
  o.require(sw.fit.slope >= pred - sw.fit.band, "slope %.3f +- %.3f >= P3.6 rate %.3f", sw.fit.slope, sw.fit.band, pred);
  return o;
}

Outcome criterion9() {
  Outcome o;
  const Grid coarse = Grid::cube(64), fine = Grid::cube(256);
  const double w64 = log_holder_seminorm(cusp_profile(coarse, 0.5, true), 0.5);
  const double w256 = log_holder_seminorm(cusp_profile(fine, 0.5, true), 0.5);
  const double p64 = log_holder_seminorm(cusp_profile(coarse, 0.5, false), 0.5);
  const double p256 = log_holder_seminorm(cusp_profile(fine, 0.5, false), 0.5);
  const double drift = std::max(w256 / w64, w64 / w256);
  o.require(drift < 2.0, "weighted cusp %.4f -> %.4f, drift %.3f < 2", w64, w256, drift);
  o.require(p256 / p64 >= 1.5, "plain cusp %.4f -> %.4f, growth %.3f >= 1.5", p64, p256, p256 / p64);
  return o;
}

Outcome criterion10() {
  Outcome o;
  double worst[2];
  for (int r = 0; r < 2; ++r) {
    const Grid g = Grid::cube(r ? 128 : 64);
    const auto xis = shift_probe_offsets(g);
    worst[r] = 0.0;
    for (int m = 0; m < 100; ++m)
      worst[r] = std::max(worst[r], besov_shift_ratio(ensemble_member(g, 10, m), 0.3, 0.2, 3.0, xis));
  }
  o.require(std::isfinite(worst[0]) && std::isfinite(worst[1]), "max ratio %.4f (n 64), %.4f (n 128)", worst[0], worst[1]);
  const double drift = std::max(worst[1] / worst[0], worst[0] / worst[1]);
  o.require(drift < 2.0, "drift %.3f < 2", drift);
  return o;
}

Outcome criterion11() {
  Outcome o;
  const Trajectory& t = smooth_run();
  const TestFunction psi = default_test_function(Grid::cube(64), 0.0, 0.25);
  const BalanceReport b = balance_report(t, {0.125, 0.0625, 0.03125}, psi);
  const bool decreasing = b.residuals[1] < b.residuals[0] && b.residuals[2] < b.residuals[1];
  o.require(decreasing, "residuals %.3e, %.3e, %.3e", b.residuals[0], b.residuals[1], b.residuals[2]);
  o.require(b.residual_fit.slope >= 1.0, "slope %.3f >= 1", b.residual_fit.slope);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                          criterion5, criterion6, criterion7, criterion8,
                                                          criterion9, criterion10, criterion11};
  std::set<int> wanted;
  for (int a = 1; a < argc; ++a) wanted.insert(std::atoi(argv[a]));
  // criterion 3 audits the pairs made by 6 to 8, so it runs last
  std::vector<int> order = {1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 3};
  int failed = 0;
  std::vector<std::string> lines(12);
  for (int k : order) {
    if (!wanted.empty() && !wanted.count(k)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k - 1]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char head[64];
    std::snprintf(head, sizeof head, "criterion %2d: %s (%.0f s) ", k, o.pass ? "PASS" : "FAIL", secs);
    lines[k] = head + o.detail;
    std::fprintf(stderr, "%s\n", lines[k].c_str());
    failed += !o.pass;
  }
  for (int k = 1; k <= 11; ++k)
    if (!lines[k].empty()) std::printf("%s\n", lines[k].c_str());
  return failed == 0 ? 0 : 1;
}
