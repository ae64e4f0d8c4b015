#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hydro::cli {

struct GlobalOptions {
  std::string output_dir = "run";
  std::uint64_t seed = 1;
  int threads = 1;
};

struct SynthOptions {
  double alpha = -1.0;  ///< isotropic exponent, or vertical when beta is set
  double beta = -1.0;   ///< horizontal exponent, selects the anisotropic target
  double gamma = -1.0;  ///< selects the log-Hoelder target
  int smooth_modes = 0; ///< > 0 selects the band-limited analytic generator
  int n = 64;
  double p = 3.0;
};

struct SimulateOptions {
  int n = 64;
  double dt = 1e-3;
  double t_end = 0.25;
  double omega = 0.0;
  double nu = 0.0;
  int hyper_order = 1;
  int stride = 10;
  bool no_dealias = false;
  int modes = 1;
  std::string init_dir;
  std::string resume_dir;
};

struct AnalyzeOptions {
  std::string field_dir;
  std::string trajectory_dir;
  std::vector<std::string> criteria;
  std::vector<double> eps;
  std::string profile = "standard";
  int stencil = 81;
  int snapshots = 3;  ///< trajectory snapshots measured for the criteria
};

struct SweepOptions {
  std::string field_dir;
  std::vector<double> eps;
  double eps_max = 0.25;
  double eps_min = 0.0;  ///< 0 means 2/n
  int count = 6;
  std::string profile = "standard";
  int stencil = 81;
};

struct BesovFitOptions {
  std::string field;
  double p = 3.0;
  int order = 1;
  std::string directions = "isotropic";
  std::string range = "inertial";
};

struct ProbeOptions {
  std::string estimate = "B4.2";
  double alpha = 0.5, beta = 0.5, theta = 0.2;
  double p = 3.0, p1 = 6.0, p2 = 6.0;
  int n = 32;
  int members = 100;
};

struct ReportOptions {
  std::vector<std::string> runs;
};

void cmd_synth(const GlobalOptions& g, const SynthOptions& o, const std::string& config);
void cmd_simulate(const GlobalOptions& g, const SimulateOptions& o, const std::string& config);
void cmd_analyze(const GlobalOptions& g, const AnalyzeOptions& o, const std::string& config);
void cmd_defect_sweep(const GlobalOptions& g, const SweepOptions& o, const std::string& config);
void cmd_besov_fit(const GlobalOptions& g, const BesovFitOptions& o, const std::string& config);
void cmd_paraprobe(const GlobalOptions& g, const ProbeOptions& o, const std::string& config);
void cmd_report(const GlobalOptions& g, const ReportOptions& o, const std::string& config);

}  // namespace hydro::cli
