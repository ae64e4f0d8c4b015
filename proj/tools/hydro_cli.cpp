#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "hydro/error.hpp"
#include "hydro/version.hpp"

int main(int argc, char** argv) {
  using namespace hydro::cli;
  CLI::App app{"Hydrostatic Euler regularity and energy-balance toolkit", "hydro"};
  app.set_version_flag("--version", std::string(hydro::kVersion));
  app.set_config("--config", "", "INI/TOML file of option values; unknown keys are rejected");
  app.allow_config_extras(false);
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--out", g.output_dir, "Output directory")->capture_default_str();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1, 1024))->capture_default_str();

  SynthOptions so;
  auto* synth = app.add_subcommand("synth", "Generate a field pair with prescribed regularity");
  synth->add_option("--alpha", so.alpha, "Isotropic exponent, or vertical exponent with --beta");
  synth->add_option("--beta", so.beta, "Horizontal exponent (anisotropic target)");
  synth->add_option("--gamma", so.gamma, "Log-Hoelder exponent");
  synth->add_option("--smooth-modes", so.smooth_modes, "Band-limited analytic field with |k_a| <= modes");
  synth->add_option("--n", so.n, "Grid points per axis")->capture_default_str();
  synth->add_option("--p", so.p, "Lebesgue exponent of the measured regularity")->capture_default_str();

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Integrate the hydrostatic Euler equations");
  simulate->add_option("--n", sim.n, "Grid points per axis")->capture_default_str();
  simulate->add_option("--dt", sim.dt, "Time step")->capture_default_str();
  simulate->add_option("--t-end", sim.t_end, "Final time")->capture_default_str();
  simulate->add_option("--omega", sim.omega, "Coriolis parameter")->capture_default_str();
  simulate->add_option("--nu", sim.nu, "(Hyper)viscosity")->capture_default_str();
  simulate->add_option("--hyper-order", sim.hyper_order, "Order h of (-Laplacian)^h")->capture_default_str();
  simulate->add_option("--stride", sim.stride, "Steps between snapshots")->capture_default_str();
  simulate->add_flag("--no-dealias", sim.no_dealias, "Disable 2/3 dealiasing");
  simulate->add_option("--modes", sim.modes, "Modes of the default analytic initial field")->capture_default_str();
  simulate->add_option("--init", sim.init_dir, "Directory holding initial u.hsf1, v.hsf1");
  simulate->add_option("--resume", sim.resume_dir, "Continue a trajectory directory from its last snapshot");

  AnalyzeOptions an;
  auto* analyze = app.add_subcommand("analyze", "Measure regularity, sweep the defect, evaluate criteria");
  analyze->add_option("--field", an.field_dir, "Directory holding u.hsf1, v.hsf1 and optionally w.hsf1");
  analyze->add_option("--trajectory", an.trajectory_dir, "Trajectory directory written by simulate");
  analyze->add_option("--criteria", an.criteria, "Criterion ids (default: all)")->delimiter(',');
  analyze->add_option("--eps", an.eps, "Mollification scales")->delimiter(',');
  analyze->add_option("--profile", an.profile, "Mollifier profile (standard|flat)")->capture_default_str();
  analyze->add_option("--stencil", an.stencil, "Mollifier stencil points per axis")->capture_default_str();
  analyze->add_option("--snapshots", an.snapshots, "Trajectory snapshots measured")->capture_default_str();

  SweepOptions sw;
  auto* sweep = app.add_subcommand("defect-sweep", "L1 norm of the defect term against the scale");
  sweep->add_option("--field", sw.field_dir, "Directory holding u.hsf1, v.hsf1")->required();
  sweep->add_option("--eps", sw.eps, "Explicit scales")->delimiter(',');
  sweep->add_option("--eps-max", sw.eps_max, "Largest scale")->capture_default_str();
  sweep->add_option("--eps-min", sw.eps_min, "Smallest scale (0: 2/n)")->capture_default_str();
  sweep->add_option("--count", sw.count, "Number of scales")->capture_default_str();
  sweep->add_option("--profile", sw.profile, "Mollifier profile (standard|flat)")->capture_default_str();
  sweep->add_option("--stencil", sw.stencil, "Mollifier stencil points per axis")->capture_default_str();

  BesovFitOptions bf;
  auto* besov = app.add_subcommand("besov-fit", "Structure function and fitted exponent of one field");
  besov->add_option("--field", bf.field, "HSF1 file")->required();
  besov->add_option("--p", bf.p, "Lebesgue exponent")->capture_default_str();
  besov->add_option("--order", bf.order, "Difference order (1|2)")->capture_default_str();
  besov->add_option("--directions", bf.directions, "isotropic|horizontal|vertical|oblique")->capture_default_str();
  besov->add_option("--range", bf.range, "inertial|small")->capture_default_str();

  ProbeOptions pp;
  auto* probe = app.add_subcommand("paraprobe", "Ratio of a product estimate's two sides over an ensemble");
  probe->add_option("--estimate", pp.estimate, "B2.1|B2.2|B3.1|B4.1|B4.2|B4.3")->capture_default_str();
  probe->add_option("--alpha", pp.alpha)->capture_default_str();
  probe->add_option("--beta", pp.beta)->capture_default_str();
  probe->add_option("--theta", pp.theta)->capture_default_str();
  probe->add_option("--p", pp.p)->capture_default_str();
  probe->add_option("--p1", pp.p1)->capture_default_str();
  probe->add_option("--p2", pp.p2)->capture_default_str();
  probe->add_option("--n", pp.n, "Grid points per axis")->capture_default_str();
  probe->add_option("--members", pp.members, "Ensemble size")->capture_default_str();

  ReportOptions rp;
  auto* report = app.add_subcommand("report", "Tabulate criteria.json files of several runs");
  report->add_option("--runs", rp.runs, "Run directories")->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string config = app.config_to_str(true, false);
  try {
    if (*synth) cmd_synth(g, so, config);
    else if (*simulate) cmd_simulate(g, sim, config);
    else if (*analyze) cmd_analyze(g, an, config);
    else if (*sweep) cmd_defect_sweep(g, sw, config);
    else if (*besov) cmd_besov_fit(g, bf, config);
    else if (*probe) cmd_paraprobe(g, pp, config);
    else if (*report) cmd_report(g, rp, config);
  } catch (const hydro::Error& e) {
    std::cerr << "hydro: " << e.what() << "\n";
    return hydro::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "hydro: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
