#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "hydro/balance.hpp"
#include "hydro/criteria.hpp"
#include "hydro/error.hpp"
#include "hydro/field_io.hpp"
#include "hydro/incompressibility.hpp"
#include "hydro/mollify.hpp"
#include "hydro/parallel.hpp"
#include "hydro/paraproduct.hpp"
#include "hydro/pressure.hpp"
#include "hydro/regularity.hpp"
#include "hydro/report_json.hpp"
#include "hydro/solver.hpp"
#include "hydro/synth.hpp"
#include "run_dir.hpp"

namespace hydro::cli {

namespace fs = std::filesystem;

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double compat_tolerance(const ScalarField& u, const ScalarField& v) {
  return 1e-10 * std::max(1.0, l2_norm(u) + l2_norm(v)) * u.grid().n_min();
}

void write_velocity(RunDir& out, const std::string& prefix, const VectorField& vf, double time,
                    const std::string& provenance) {
  out.write_field(prefix + "u.hsf1", vf.u, {"u", time, provenance});
  out.write_field(prefix + "v.hsf1", vf.v, {"v", time, provenance});
  out.write_field(prefix + "w.hsf1", vf.w, {"w", time, provenance});
}

/// u.hsf1 and v.hsf1 from a directory, plus w.hsf1 when present.
struct LoadedPair {
  ScalarField u, v;
  std::optional<ScalarField> w;
  double time = 0.0;
};

LoadedPair load_pair(const std::string& dir) {
  LoadedPair p;
  FieldMeta meta;
  p.u = read_hsf1((fs::path(dir) / "u.hsf1").string(), &meta);
  p.v = read_hsf1((fs::path(dir) / "v.hsf1").string());
  p.time = meta.time;
  require_same_grid(p.u.grid(), p.v.grid(), "field pair");
  const auto wpath = fs::path(dir) / "w.hsf1";
  if (fs::exists(wpath)) {
    p.w = read_hsf1(wpath.string());
    require_same_grid(p.u.grid(), p.w->grid(), "field pair");
  }
  return p;
}

/// The full velocity; without a stored w the pair must be compatible.
VectorField velocity_of(const LoadedPair& p) {
  if (p.w) return VectorField{p.u, p.v, *p.w};
  WReconstruction rec = reconstruct_w(p.u, p.v);
  if (rec.report.compat_l2 > compat_tolerance(p.u, p.v)) {
    std::cerr << "compat_l2 = " << rec.report.compat_l2 << "\n";
    fail(ErrorKind::Constraint, "w is absent and (u, v) is not hydrostatic: compat_l2 = " +
                                    num(rec.report.compat_l2));
  }
  return VectorField{p.u, p.v, std::move(rec.w)};
}

std::vector<std::string> snapshot_dirs(const std::string& traj_dir) {
  const fs::path root = fs::path(traj_dir) / "snapshots";
  if (!fs::is_directory(root)) fail(ErrorKind::Io, traj_dir + " has no snapshots directory");
  std::vector<std::string> dirs;
  for (const auto& e : fs::directory_iterator(root))
    if (e.is_directory()) dirs.push_back(e.path().string());
  std::sort(dirs.begin(), dirs.end());
  if (dirs.empty()) fail(ErrorKind::Io, traj_dir + " holds no snapshots");
  return dirs;
}

Trajectory load_trajectory(const std::string& traj_dir) {
  Trajectory traj;
  for (const auto& d : snapshot_dirs(traj_dir)) {
    LoadedPair p = load_pair(d);
    Snapshot s;
    s.time = p.time;
    s.velocity = velocity_of(p);
    const auto ppath = fs::path(d) / "p.hsf1";
    s.pressure = fs::exists(ppath) ? read_hsf1(ppath.string()) : solve_pressure(s.velocity.u, s.velocity.v);
    traj.energy.push_back(horizontal_energy(s.velocity.u, s.velocity.v));
    traj.snapshots.push_back(std::move(s));
  }
  return traj;
}

std::string snapshot_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snapshots/%05zu/", index);
  return buf;
}

/// The smallest power-of-two resolution whose admissible scales [2/n, 1/4] span a decade.
int sweep_resolution(int n) {
  int m = n;
  while (0.25 * m / 2.0 < 10.0) m *= 2;
  return m;
}

VectorField upsample(const VectorField& vf, int n) {
  const Grid target = Grid::cube(n);
  return VectorField{ifft3(resample_spectrum(fft3(vf.u), target), vf.u.parity()),
                     ifft3(resample_spectrum(fft3(vf.v), target), vf.v.parity()),
                     ifft3(resample_spectrum(fft3(vf.w), target), vf.w.parity())};
}

/// Explicit scales, or six log-spaced scales from eps_max down to 2/n on a grid fine enough to span a decade.
struct SweepPlan {
  VectorField velocity;
  std::vector<double> eps;
  int resolution = 0;
};

SweepPlan plan_sweep(const VectorField& vf, std::vector<double> eps, double eps_max, double eps_min, int count) {
  SweepPlan plan;
  const int n = vf.grid().n_min();
  if (!eps.empty()) {
    std::sort(eps.rbegin(), eps.rend());
    plan.velocity = vf;
    plan.eps = std::move(eps);
    plan.resolution = n;
    return plan;
  }
  const bool cube = vf.grid() == Grid::cube(n);
  const int m = eps_min > 0.0 || !cube ? n : sweep_resolution(n);
  plan.velocity = m == n ? vf : upsample(vf, m);
  plan.resolution = m;
  plan.eps = geometric_scales(eps_max, eps_min > 0.0 ? eps_min : 2.0 / m, count);
  return plan;
}

nlohmann::json sweep_json(const DefectSweep& s, const SweepPlan& plan, const Mollifier& moll) {
  nlohmann::json j = to_json(s);
  j["resolution"] = plan.resolution;
  j["profile"] = to_string(moll.profile());
  j["stencil"] = moll.stencil();
  return j;
}

nlohmann::json verdicts_json(const std::vector<CriterionVerdict>& verdicts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : verdicts) arr.push_back(to_json(v));
  return arr;
}

/// Pointwise minimum of two exponents, keeping the band of the smaller.
Exponent worse(const Exponent& a, const Exponent& b) {
  if (!a.defined) return b;
  if (!b.defined) return a;
  return a.value - a.band <= b.value - b.band ? a : b;
}

std::optional<Exponent> worse(const std::optional<Exponent>& a, const std::optional<Exponent>& b, bool larger_is_worse) {
  if (!a || !b) return a ? a : b;
  if (!larger_is_worse) return worse(*a, *b);
  if (!a->defined) return b;
  if (!b->defined) return a;
  return a->value + a->band >= b->value + b->band ? a : b;
}

/// Combines per-snapshot reports into one that holds at every snapshot: exponents and the w decay
/// slope take their worst value, norms their largest.
RegularityReport worst_case(const std::vector<RegularityReport>& reports) {
  RegularityReport r = reports.front();
  for (std::size_t n = 1; n < reports.size(); ++n) {
    const auto& o = reports[n];
    r.alpha_iso = worse(r.alpha_iso, o.alpha_iso);
    r.beta_horizontal = worse(r.beta_horizontal, o.beta_horizontal);
    r.alpha_vertical = worse(r.alpha_vertical, o.alpha_vertical);
    r.alpha_oblique = worse(r.alpha_oblique, o.alpha_oblique);
    for (auto& [k, val] : r.besov_seminorms)
      if (o.besov_seminorms.count(k)) val = std::max(val, o.besov_seminorms.at(k));
    for (auto& [k, val] : r.negative_besov)
      if (o.negative_besov.count(k)) val = std::max(val, o.negative_besov.at(k));
    if (r.log_holder_gamma_half && o.log_holder_gamma_half)
      r.log_holder_gamma_half = std::max(*r.log_holder_gamma_half, *o.log_holder_gamma_half);
    if (r.log_holder_growth_half && o.log_holder_growth_half)
      r.log_holder_growth_half = std::max(*r.log_holder_growth_half, *o.log_holder_growth_half);
    r.w_decay = worse(r.w_decay, o.w_decay, true);
    r.w_plane_decay = worse(r.w_plane_decay, o.w_plane_decay, true);
    r.gradient_l8 = worse(r.gradient_l8, o.gradient_l8, false);
    r.besov_9_4 = worse(r.besov_9_4, o.besov_9_4, false);
  }
  return r;
}

}  // namespace

void cmd_synth(const GlobalOptions& g, const SynthOptions& o, const std::string& config) {
  set_num_threads(g.threads);
  const Grid grid = Grid::cube(o.n);
  RunDir out(g.output_dir);
  if (o.smooth_modes > 0) {
    const VectorField vf = synth_smooth(g.seed, grid, o.smooth_modes);
    write_velocity(out, "", vf, 0.0, "synth_smooth");
    out.write_json("regularity.json", to_json(measure_regularity(vf.u, vf.v, &vf.w)));
    out.write_manifest("synth", config);
    return;
  }
  SynthSpec spec;
  spec.seed = g.seed;
  spec.p = o.p;
  if (o.gamma >= 0.0) {
    spec.target = SynthTarget::LogHolder;
    spec.gamma = o.gamma;
  } else if (o.beta >= 0.0) {
    spec.target = SynthTarget::Anisotropic;
    spec.alpha = o.alpha;
    spec.beta = o.beta;
  } else {
    spec.alpha = o.alpha < 0.0 ? spec.alpha : o.alpha;
  }
  if (o.beta >= 0.0 && o.alpha < 0.0) fail(ErrorKind::Parameter, "--beta needs --alpha (the vertical exponent)");
  validate(spec);
  const SynthResult r = synth_pair(spec, grid);
  const WReconstruction w = reconstruct_w(r.u, r.v);
  write_velocity(out, "", VectorField{r.u, r.v, w.w}, 0.0, "synth_pair");
  nlohmann::json j = to_json(r.report);
  j["law_alpha"] = r.law_alpha;
  j["law_beta"] = r.law_beta;
  j["rounds"] = r.rounds;
  out.write_json("regularity.json", j);
  out.write_manifest("synth", config);
}

void cmd_simulate(const GlobalOptions& g, const SimulateOptions& o, const std::string& config) {
  set_num_threads(g.threads);
  SolverConfig c;
  c.grid = Grid::cube(o.n);
  c.omega = o.omega;
  c.nu = o.nu;
  c.hyper_order = o.hyper_order;
  c.dt = o.dt;
  c.snapshot_stride = o.stride;
  c.dealias = !o.no_dealias;

  const bool resume = !o.resume_dir.empty();
  RunDir out(resume ? o.resume_dir : g.output_dir);
  VectorField initial;
  double t0 = 0.0;
  std::size_t first_index = 0;
  std::string energy_csv = "time,energy,relative_drift\n";
  double e0 = 0.0;
  if (resume) {
    const auto dirs = snapshot_dirs(o.resume_dir);
    LoadedPair p = load_pair(dirs.back());
    initial = velocity_of(p);
    t0 = p.time;
    first_index = dirs.size() - 1;
    c.grid = initial.grid();
    std::istringstream prev(read_file(out.file("energy.csv")));
    std::string line;
    std::getline(prev, line);
    std::vector<std::string> rows;
    while (std::getline(prev, line))
      if (!line.empty()) rows.push_back(line);
    if (rows.size() != dirs.size()) fail(ErrorKind::Io, "energy.csv does not match the stored snapshots");
    e0 = std::stod(rows.front().substr(rows.front().find(',') + 1));
    for (std::size_t n = 0; n + 1 < rows.size(); ++n) energy_csv += rows[n] + "\n";
  } else if (!o.init_dir.empty()) {
    initial = velocity_of(load_pair(o.init_dir));
    c.grid = initial.grid();
  } else {
    initial = synth_smooth(g.seed, c.grid, o.modes);
  }
  c.t_end = o.t_end - t0;
  if (!(c.t_end > 0.0)) fail(ErrorKind::Parameter, "t_end must exceed the resume time");
  const double steps = c.t_end / c.dt;
  if (std::abs(steps - std::round(steps)) > 1e-9 * steps)
    fail(ErrorKind::Parameter, "t_end - t0 must be a whole number of steps");
  c.t_end = std::round(steps) * c.dt;

  const Trajectory traj = run(c, initial, t0);
  if (!resume) e0 = traj.energy.front();
  for (std::size_t n = 0; n < traj.snapshots.size(); ++n) {
    const Snapshot& s = traj.snapshots[n];
    const std::string prefix = snapshot_name(first_index + n);
    write_velocity(out, prefix, s.velocity, s.time, "simulate");
    out.write_field(prefix + "p.hsf1", s.pressure, {"p", s.time, "simulate"});
    const double drift = e0 > 0.0 ? std::abs(traj.energy[n] - e0) / e0 : 0.0;
    energy_csv += num(s.time) + "," + num(traj.energy[n]) + "," + num(drift) + "\n";
  }
  out.write_text("energy.csv", energy_csv);
  out.write_manifest("simulate", config);
  if (traj.blow_up_time)
    fail(ErrorKind::BlowUp, "non-finite state at t = " + num(*traj.blow_up_time) + "; partial trajectory kept");
}

void cmd_analyze(const GlobalOptions& g, const AnalyzeOptions& o, const std::string& config) {
  set_num_threads(g.threads);
  if (o.field_dir.empty() == o.trajectory_dir.empty())
    fail(ErrorKind::Parameter, "analyze needs exactly one of --field and --trajectory");
  const Mollifier moll(parse_profile(o.profile), o.stencil);
  EngineOptions engine;
  RunDir out(g.output_dir);

  RegularityReport report;
  VectorField swept;
  if (!o.field_dir.empty()) {
    const LoadedPair p = load_pair(o.field_dir);
    swept = velocity_of(p);
    report = measure_regularity(swept.u, swept.v, &swept.w);
    if (!p.w) report.compat_l2 = reconstruct_w(p.u, p.v).report.compat_l2;
  } else {
    const Trajectory traj = load_trajectory(o.trajectory_dir);
    const std::size_t count = traj.snapshots.size();
    const std::size_t k = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(o.snapshots, 1)), 1, count);
    std::vector<RegularityReport> reports;
    for (std::size_t n = 0; n < k; ++n) {
      const std::size_t idx = k == 1 ? count - 1 : n * (count - 1) / (k - 1);
      const auto& vel = traj.snapshots[idx].velocity;
      reports.push_back(measure_regularity(vel.u, vel.v, &vel.w));
    }
    report = worst_case(reports);
    engine.spatial_only = false;
    swept = traj.snapshots.back().velocity;

    const int n = traj.snapshots.front().velocity.grid().n_min();
    std::vector<double> beps;
    for (double e : {0.125, 0.0625, 0.03125})
      if (e >= 2.0 / n) beps.push_back(e);
    if (count >= 3 && beps.size() >= 2) {
      const auto& t = traj.snapshots;
      const TestFunction psi = default_test_function(t.front().velocity.grid(), t.front().time, t.back().time);
      out.write_json("balance.json", to_json(balance_report(traj, beps, psi, moll)));
    }
  }
  out.write_json("regularity.json", to_json(report));

  const SweepPlan plan = plan_sweep(swept, o.eps, 0.25, 0.0, 6);
  const DefectSweep sweep = defect_sweep(plan.velocity, plan.eps, moll);
  out.write_json("defect_sweep.json", sweep_json(sweep, plan, moll));
  out.write_text("defect_sweep.csv", defect_sweep_csv(sweep));

  const auto verdicts = criterion_engine(report, &sweep, o.criteria, engine);
  out.write_json("criteria.json", verdicts_json(verdicts));
  out.write_text("criteria.csv", verdicts_csv(verdicts));
  out.write_manifest("analyze", config);
}

void cmd_defect_sweep(const GlobalOptions& g, const SweepOptions& o, const std::string& config) {
  set_num_threads(g.threads);
  const Mollifier moll(parse_profile(o.profile), o.stencil);
  const VectorField vf = velocity_of(load_pair(o.field_dir));
  const SweepPlan plan = plan_sweep(vf, o.eps, o.eps_max, o.eps_min, o.count);
  const DefectSweep sweep = defect_sweep(plan.velocity, plan.eps, moll);
  RunDir out(g.output_dir);
  out.write_json("defect_sweep.json", sweep_json(sweep, plan, moll));
  out.write_text("defect_sweep.csv", defect_sweep_csv(sweep));
  out.write_manifest("defect-sweep", config);
}

void cmd_besov_fit(const GlobalOptions& g, const BesovFitOptions& o, const std::string& config) {
  set_num_threads(g.threads);
  DirectionSet set;
  if (o.directions == "isotropic") set = DirectionSet::Isotropic;
  else if (o.directions == "horizontal") set = DirectionSet::Horizontal;
  else if (o.directions == "vertical") set = DirectionSet::Vertical;
  else if (o.directions == "oblique") set = DirectionSet::Oblique;
  else fail(ErrorKind::Parameter, "unknown direction set '" + o.directions + "'");
  FitRange range;
  if (o.range == "inertial") range = FitRange::Inertial;
  else if (o.range == "small") range = FitRange::SmallSeparations;
  else fail(ErrorKind::Parameter, "unknown fit range '" + o.range + "' (inertial|small)");
  if (o.order != 1 && o.order != 2) fail(ErrorKind::UnsupportedOrder, "difference order must be 1 or 2");
  if (!(o.p >= 1.0)) fail(ErrorKind::Parameter, "p must be at least 1");

  const ScalarField f = read_hsf1(o.field);
  const StructureFunction sf = structure_function(f, o.p, set, o.order);
  const Exponent ex = fit_regularity(sf, range);
  RunDir out(g.output_dir);
  out.write_text("structure_function.csv", structure_function_csv(sf));
  out.write_json("fit.json", {{"exponent", to_json(ex)}, {"structure_function", to_json(sf)}});
  out.write_manifest("besov-fit", config);
}

void cmd_paraprobe(const GlobalOptions& g, const ProbeOptions& o, const std::string& config) {
  set_num_threads(g.threads);
  ProbeParams params;
  params.estimate = o.estimate;
  params.alpha = o.alpha;
  params.beta = o.beta;
  params.theta = o.theta;
  params.p = o.p;
  params.p1 = o.p1;
  params.p2 = o.p2;
  validate_probe(params);
  if (o.members < 1) fail(ErrorKind::Parameter, "--members must be positive");
  const ProbeResult r = product_estimate_probe(Grid::cube(o.n), o.members, g.seed, params);
  RunDir out(g.output_dir);
  out.write_json("probe.json", to_json(r));
  std::string csv = "member,ratio\n";
  for (std::size_t n = 0; n < r.ratios.size(); ++n) csv += std::to_string(n) + "," + num(r.ratios[n]) + "\n";
  out.write_text("probe.csv", csv);
  out.write_manifest("paraprobe", config);
}

void cmd_report(const GlobalOptions& g, const ReportOptions& o, const std::string& config) {
  if (o.runs.empty()) fail(ErrorKind::Parameter, "report needs at least one run directory");
  auto cell = [](const nlohmann::json& v) -> std::string {
    if (v.is_null()) return "";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return num(v.get<double>());
    return v.get<std::string>();
  };
  std::string csv = "run,id,hypothesis_holds,predicted,measured,tolerance,pass,spatial_only\n";
  nlohmann::json summary = nlohmann::json::array();
  for (const auto& run : o.runs) {
    const std::string path = (fs::path(run) / "criteria.json").string();
    nlohmann::json verdicts;
    try {
      verdicts = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::Io, "cannot parse " + path + ": " + e.what());
    }
    int holds = 0, passed = 0, failed = 0;
    for (const auto& v : verdicts) {
      csv += run + "," + cell(v.at("id")) + "," + cell(v.at("hypothesis_holds")) + "," + cell(v.at("predicted")) +
             "," + cell(v.at("measured")) + "," + cell(v.at("tolerance")) + "," + cell(v.at("pass")) + "," +
             cell(v.at("spatial_only")) + "\n";
      holds += v.at("hypothesis_holds").get<bool>();
      if (v.at("pass").is_boolean()) (v.at("pass").get<bool>() ? passed : failed) += 1;
    }
    summary.push_back({{"run", run},
                       {"criteria", verdicts.size()},
                       {"hypotheses_hold", holds},
                       {"passed", passed},
                       {"failed", failed}});
  }
  RunDir out(g.output_dir);
  out.write_text("report.csv", csv);
  out.write_json("report.json", summary);
  out.write_manifest("report", config);
}

}  // namespace hydro::cli
