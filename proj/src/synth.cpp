#include "hydro/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hydro/error.hpp"
#include "hydro/incompressibility.hpp"
#include "hydro/parallel.hpp"
#include "hydro/random.hpp"

namespace hydro {

namespace {

double kmag(int kx, int ky, int kz) {
  return std::sqrt(static_cast<double>(kx) * kx + static_cast<double>(ky) * ky + static_cast<double>(kz) * kz);
}

bool in_band(const Grid& g, int kx, int ky, int kz) {
  const double k = kmag(kx, ky, kz);
  return k >= 1.0 && k <= g.n_min() / 3.0;
}

// Phase antisymmetric under the reflection that Hermitian symmetry imposes.
double phase(std::uint64_t seed, std::int64_t stream, int kx, int ky, int kz, bool z_even) {
  if (z_even) kz = std::abs(kz);
  bool flip = false;
  if (z_even || kz == 0) {
    flip = kx < 0 || (kx == 0 && ky < 0);
  } else {
    flip = kz < 0;
  }
  if (flip) {
    kx = -kx;
    ky = -ky;
    if (!z_even) kz = -kz;
  }
  const double u = hash_uniform({static_cast<std::int64_t>(seed), stream, kx, ky, kz});
  if (kx == 0 && ky == 0 && (z_even || kz == 0)) return u < 0.5 ? 0.0 : std::numbers::pi;
  const double theta = 2.0 * std::numbers::pi * u;
  return flip ? -theta : theta;
}

void normalize_energy(ScalarField& u, ScalarField& v) {
  const double e = mean(multiply(u, u)) + mean(multiply(v, v));
  if (e <= 0.0) fail(ErrorKind::Calibration, "synthesised field vanished");
  const double s = 1.0 / std::sqrt(e);
  u *= s;
  v *= s;
}

}  // namespace

void validate(const SynthSpec& s) {
  auto open01 = [](double x) { return x > 0.0 && x < 1.0; };
  switch (s.target) {
    case SynthTarget::Isotropic:
      if (!open01(s.alpha)) fail(ErrorKind::Parameter, "isotropic exponent must lie in (0, 1)");
      break;
    case SynthTarget::Anisotropic:
      if (!open01(s.alpha)) fail(ErrorKind::Parameter, "vertical exponent must lie in (0, 1)");
      if (!(s.beta > 0.0 && s.beta < 2.0)) fail(ErrorKind::Parameter, "horizontal exponent must lie in (0, 2)");
      break;
    case SynthTarget::LogHolder:
      if (!open01(s.gamma)) fail(ErrorKind::Parameter, "log-Hoelder exponent must lie in (0, 1)");
      break;
  }
  if (!(s.p >= 1.0)) fail(ErrorKind::Parameter, "calibration norm needs p >= 1");
  if (s.max_rounds < 1) fail(ErrorKind::Parameter, "calibration needs at least one round");
}

SpectralField random_phase_spectrum(const Grid& g, std::uint64_t seed, std::int64_t stream,
                                    const AmplitudeLaw& law, bool z_even) {
  SpectralField F(g);
  parallel_for(static_cast<std::size_t>(g.nx), [&](std::size_t i) {
    const int kx = wavenumber(static_cast<int>(i), g.nx);
    for (int j = 0; j < g.ny; ++j) {
      const int ky = wavenumber(j, g.ny);
      for (int kz = 0; kz < g.nzh(); ++kz) {
        if (is_nyquist(kx, g.nx) || is_nyquist(ky, g.ny) || is_nyquist(kz, g.nz)) continue;
        const double a = law(kx, ky, kz);
        if (a == 0.0) continue;
        F.at(static_cast<int>(i), j, kz) = std::polar(a, phase(seed, stream, kx, ky, kz, z_even));
      }
    }
  });
  return F;
}

void project_compatible(SpectralField& U, SpectralField& V) {
  const Grid& g = U.grid();
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      const double kx = wavenumber(i, g.nx), ky = wavenumber(j, g.ny);
      const double k2 = kx * kx + ky * ky;
      if (k2 == 0.0) continue;
      auto& a = U.at(i, j, 0);
      auto& b = V.at(i, j, 0);
      const std::complex<double> d = (kx * a + ky * b) / k2;
      a -= kx * d;
      b -= ky * d;
    }
}

namespace {

struct Law {
  SynthTarget target;
  double a, b, gamma;
};

void synthesize(const Law& law, const Grid& g, std::uint64_t seed, ScalarField& u, ScalarField& v) {
  AmplitudeLaw amp = [&](int kx, int ky, int kz) -> double {
    if (!in_band(g, kx, ky, kz)) return 0.0;
    const double k = kmag(kx, ky, kz);
    switch (law.target) {
      case SynthTarget::Isotropic: return std::pow(k, -(law.a + 1.5));
      case SynthTarget::LogHolder: return std::pow(k, -(law.gamma + 1.5)) / (1.0 + std::log(k));
      case SynthTarget::Anisotropic: {
        const double kh = std::hypot(static_cast<double>(kx), static_cast<double>(ky));
        const double fh = kh == 0.0 ? 1.0 : std::pow(kh, -(law.b + 1.0));
        const double fz = kz == 0 ? 1.0 : std::pow(std::abs(kz), -(law.a + 0.5));
        return fh * fz;
      }
    }
    return 0.0;
  };
  SpectralField U = random_phase_spectrum(g, seed, 0, amp, true);
  SpectralField V = random_phase_spectrum(g, seed, 1, amp, true);
  project_compatible(U, V);
  u = ifft3(U, Parity::Even);
  v = ifft3(V, Parity::Even);
  normalize_energy(u, v);
}

}  // namespace

SynthResult synth_pair(const SynthSpec& spec, const Grid& g) {
  validate(spec);
  if (g.n_min() < 24) fail(ErrorKind::InvalidGrid, "synthesis needs n >= 24 for three dyadic shells");
  Law law{spec.target, spec.alpha, spec.beta, spec.gamma};
  SynthResult out;
  for (int round = 1; round <= spec.max_rounds; ++round) {
    synthesize(law, g, spec.seed, out.u, out.v);
    out.rounds = round;
    out.law_alpha = law.a;
    out.law_beta = law.b;
    out.report = RegularityReport{};
    measure_exponents(out.u, out.v, out.report, spec.p);
    if (spec.target == SynthTarget::LogHolder) return out;
    if (spec.target == SynthTarget::Isotropic) {
      const Exponent& m = out.report.alpha_iso;
      if (!m.defined) break;
      const double miss = spec.alpha - m.value;
      if (std::abs(miss) <= spec.tolerance) return out;
      law.a = std::clamp(law.a + miss, 0.02, 2.5);
    } else {
      const Exponent& mv = out.report.alpha_vertical;
      const Exponent& mh = out.report.beta_horizontal;
      if (!mv.defined || !mh.defined) break;
      const double miss_a = spec.alpha - mv.value, miss_b = spec.beta - mh.value;
      if (std::abs(miss_a) <= spec.tolerance && std::abs(miss_b) <= spec.tolerance) return out;
      law.a = std::clamp(law.a + miss_a, 0.02, 2.5);
      law.b = std::clamp(law.b + miss_b, 0.02, 2.5);
    }
  }
  fail(ErrorKind::Calibration, "measured exponents missed the target after " + std::to_string(out.rounds) +
                                   " rounds (alpha_iso " + std::to_string(out.report.alpha_iso.value) +
                                   ", vertical " + std::to_string(out.report.alpha_vertical.value) +
                                   ", horizontal " + std::to_string(out.report.beta_horizontal.value) + ")");
}

VectorField synth_smooth(std::uint64_t seed, const Grid& g, int modes) {
  if (modes < 1 || 6 * modes > g.n_min()) fail(ErrorKind::Parameter, "smooth synthesis needs 1 <= modes <= n/6");
  AmplitudeLaw amp = [&](int kx, int ky, int kz) -> double {
    if (std::abs(kx) > modes || std::abs(ky) > modes || std::abs(kz) > modes) return 0.0;
    if (kx == 0 && ky == 0 && kz == 0) return 0.0;
    return 1.0 / (1.0 + static_cast<double>(kx * kx + ky * ky + kz * kz));
  };
  SpectralField U = random_phase_spectrum(g, seed, 10, amp, true);
  SpectralField V = random_phase_spectrum(g, seed, 11, amp, true);
  project_compatible(U, V);
  VectorField vf;
  vf.u = ifft3(U, Parity::Even);
  vf.v = ifft3(V, Parity::Even);
  normalize_energy(vf.u, vf.v);
  vf.w = reconstruct_w(vf.u, vf.v).w;
  return vf;
}

ScalarField ensemble_member(const Grid& g, std::uint64_t seed, int member) {
  const double a = 0.3 + 1.2 * hash_uniform({static_cast<std::int64_t>(seed), member, -1});
  AmplitudeLaw amp = [&](int kx, int ky, int kz) -> double {
    return in_band(g, kx, ky, kz) ? std::pow(kmag(kx, ky, kz), -(a + 1.5)) : 0.0;
  };
  ScalarField f = ifft3(random_phase_spectrum(g, seed, 100 + member, amp, false));
  f *= 1.0 / l2_norm(f);
  return f;
}

ScalarField cusp_profile(const Grid& g, double gamma, bool log_weight) {
  if (!(gamma > 0.0 && gamma < 1.0)) fail(ErrorKind::Parameter, "cusp exponent must lie in (0, 1)");
  return ScalarField::sample(g, [&](double x, double y, double z) {
    auto d = [](double t) { return std::abs(t - 0.5); };
    const double rho = std::sqrt(d(x) * d(x) + d(y) * d(y) + d(z) * d(z));
    if (rho == 0.0) return 0.0;
    const double f = std::pow(rho, gamma);
    return log_weight ? f / (1.0 - std::log(rho)) : f;
  });
}

}  // namespace hydro
