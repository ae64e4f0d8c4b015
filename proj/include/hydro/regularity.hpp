#pragma once

#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hydro/fit.hpp"
#include "hydro/grid.hpp"
#include "hydro/lattice.hpp"

namespace hydro {

struct StructureFunction {
  double p = 3.0;
  int order = 1;
  DirectionSet set = DirectionSet::Isotropic;
  struct Entry {
    double separation;
    int direction;
    double value;  ///< ||Delta^order_xi f||_{L^p}
  };
  std::vector<Entry> entries;
};

/// Increments on the structure lattice (|xi| from one cell to 1/4).
StructureFunction structure_function(const ScalarField& f, double p, DirectionSet set, int order = 1);

enum class FitRange {
  Inertial,          ///< middle half of the log-separation range
  SmallSeparations,  ///< lower half of the log-separation range
};

struct Exponent {
  double value = std::numeric_limits<double>::quiet_NaN();
  double band = 0.0;
  double residual = 0.0;
  int order = 1;
  bool defined = false;
};

/// Log-log slope with one intercept per direction (and per field when pooled).
/// Needs 6 distinct separations spanning a decade; all-zero data leaves the exponent undefined.
Exponent fit_regularity(const StructureFunction& sf, FitRange range = FitRange::Inertial);
Exponent fit_regularity(const std::vector<StructureFunction>& pooled, FitRange range = FitRange::Inertial);

/// sup over the Besov lattice of ||Delta^{floor(s)+1}_h f||_p / |h|^s, s in (0, 2).
double besov_seminorm(const ScalarField& f, double s, double p);
/// ||f||_p plus the seminorm.
double besov_norm(const ScalarField& f, double s, double p);

/// sup over the structure lattice of max_x |delta f| (1 + log^-|xi|) / |xi|^gamma, gamma in (0, 1).
double log_holder_seminorm(const ScalarField& f, double gamma);
/// Ratio of the weighted increment sup over the finest third of the lattice to the sup over the rest.
/// Values above 1 mean the weighted modulus keeps growing toward the grid scale.
double log_holder_growth(const ScalarField& f, double gamma);

/// ||f||_p + sup_3D ||delta f||_p / |xi|^alpha + sup_horizontal ||delta f||_p / |xi_h|^beta.
double anisotropic_norm(const ScalarField& f, double alpha, double beta, double p);

/// sup_j 2^{-js} ||Delta_j f||_p over the LP blocks; needs at least 4 dyadic shells.
double negative_besov_norm(const ScalarField& f, double s, double p);

/// Slope sigma of log2 ||Delta_j f||_p against j over the interior blocks, so ||Delta_j f|| ~ 2^{sigma j}.
Exponent lp_decay_exponent(const ScalarField& f, double p, bool horizontal_only = false);

/// ||delta_xi f||_{B^s} / (|xi|^eps ||f||_{B^{s+eps}}) maximised over xi, with LP Besov norms.
double besov_shift_ratio(const ScalarField& f, double s, double eps, double p,
                         const std::vector<std::array<int, 3>>& xis);
/// 13 directions times |xi| in {1/32, 1/16, 1/8, 1/4}.
std::vector<std::array<int, 3>> shift_probe_offsets(const Grid& g);

struct RegularityReport {
  Exponent alpha_iso;        ///< smallest of the direction-class exponents
  Exponent beta_horizontal;  ///< horizontal class
  Exponent alpha_vertical;   ///< vertical class
  Exponent alpha_oblique;
  std::map<std::pair<double, double>, double> besov_seminorms;  ///< (s, p) -> value
  std::optional<double> log_holder_gamma_half;
  std::optional<double> log_holder_growth_half;
  std::map<std::pair<double, double>, double> negative_besov;  ///< of w, (s, p) -> value
  std::optional<Exponent> w_decay;        ///< LP decay sigma of w in L^3
  std::optional<Exponent> w_plane_decay;  ///< same with horizontal-only blocks
  std::optional<Exponent> gradient_l8;    ///< first-order exponent in L^8
  std::optional<Exponent> besov_9_4;      ///< second-order exponent in L^{9/4}
  std::optional<double> compat_l2;
  int grid_n = 0;
};

struct RegularityOptions {
  double p = 3.0;
  FitRange range = FitRange::Inertial;
  bool log_holder = true;
  bool w_norms = true;
  bool extra_exponents = true;
  std::vector<std::pair<double, double>> besov = {{1.0 / 3.0, 3.0}, {0.5, 3.0}};
  std::vector<std::pair<double, double>> negative = {{1.0 / 3.0, 3.0}};
};

/// Direction-class exponents of (u, v) pooled, fitted from second-order differences so that one
/// estimator covers exponents in (0, 2).
void measure_exponents(const ScalarField& u, const ScalarField& v, RegularityReport& report,
                       double p = 3.0, FitRange range = FitRange::Inertial);

/// Full report; w is reconstructed when absent and (u, v) are compatible.
RegularityReport measure_regularity(const ScalarField& u, const ScalarField& v, const ScalarField* w,
                                    const RegularityOptions& options = {});

}  // namespace hydro
