#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "hydro/grid.hpp"
#include "hydro/regularity.hpp"

namespace hydro {

enum class SynthTarget { Isotropic, Anisotropic, LogHolder };

struct SynthSpec {
  SynthTarget target = SynthTarget::Isotropic;
  double alpha = 0.6;  ///< isotropic exponent, or the vertical one for anisotropic targets
  double beta = 0.6;   ///< horizontal exponent (anisotropic)
  double gamma = 0.5;  ///< log-Hoelder exponent
  double p = 3.0;      ///< L^p in which exponents are measured
  std::uint64_t seed = 1;
  int max_rounds = 5;
  double tolerance = 0.05;
};

/// Throws a Parameter error for exponents outside the supported ranges.
void validate(const SynthSpec& spec);

struct SynthResult {
  ScalarField u, v;
  RegularityReport report;
  double law_alpha = 0.0;  ///< amplitude-law exponents after calibration
  double law_beta = 0.0;
  int rounds = 0;
};

/// Amplitude of mode (kx, ky, kz); zero outside 1 <= |k| <= n/3.
using AmplitudeLaw = std::function<double(int, int, int)>;

/// Random-phase spectrum with the given amplitudes. With z_even the coefficients depend on |kz|
/// only, so the field is a cosine series in z.
SpectralField random_phase_spectrum(const Grid& g, std::uint64_t seed, std::int64_t stream,
                                    const AmplitudeLaw& law, bool z_even);

/// Horizontal Leray projection of the kz = 0 plane, which removes the vertical mean of
/// du/dx + dv/dy exactly.
void project_compatible(SpectralField& U, SpectralField& V);

/// Compatible, z-even pair with E = mean(u^2 + v^2) = 1 whose measured exponents match the target
/// within tolerance; calibration failure throws a Calibration error. Log-Hoelder targets are
/// released uncalibrated with their measured report.
SynthResult synth_pair(const SynthSpec& spec, const Grid& g);

/// Band-limited analytic velocity with |k_a| <= modes, (u, v) even in z, w reconstructed, E = 1.
VectorField synth_smooth(std::uint64_t seed, const Grid& g, int modes);

/// Member of the probe ensemble: random-phase field with |k|^{-(a + 3/2)} amplitudes,
/// a uniform in [0.3, 1.5] per member, unit L2 norm.
ScalarField ensemble_member(const Grid& g, std::uint64_t seed, int member);

/// rho^gamma, or rho^gamma / (1 - log rho), with rho the distance to the centre (1/2, 1/2, 1/2) of the unit
/// cell; the distance is taken inside the cell, so the field is continuous on the torus.
ScalarField cusp_profile(const Grid& g, double gamma, bool log_weight);

}  // namespace hydro
