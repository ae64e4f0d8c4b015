#pragma once

#include <vector>

#include "hydro/grid.hpp"
#include "hydro/trajectory.hpp"

namespace hydro {

struct CompatibilityReport {
  double compat_l2 = 0.0;       ///< L2 norm of the vertical mean of du/dx + dv/dy
  double w_boundary_max = 0.0;  ///< max |w| on the z = 0 plane
  double div_l2 = 0.0;          ///< L2 norm of du/dx + dv/dy + dw/dz after reconstruction

  /// The compatibility condition holds to within tol.
  bool hydrostatic(double tol = 1e-10) const { return compat_l2 <= tol; }
};

ScalarField horizontal_divergence(const ScalarField& u, const ScalarField& v);

struct WReconstruction {
  ScalarField w;
  CompatibilityReport report;
};

/// w = -int_0^z (du/dx + dv/dy) dz', built from the vertically mean-free part of the divergence.
WReconstruction reconstruct_w(const ScalarField& u, const ScalarField& v);
SpectralField reconstruct_w_spectral(const SpectralField& U, const SpectralField& V,
                                     double* compat_l2 = nullptr);

/// (u, v, w) with w reconstructed; throws a constraint error when compat_l2 exceeds tol.
VectorField hydrostatic_velocity(const ScalarField& u, const ScalarField& v, double tol = 1e-10);

/// Throws a constraint error unless u, v satisfy the compatibility condition.
void require_compatible(const ScalarField& u, const ScalarField& v, double tol = 1e-10);

/// Spectral d/dx(u a) + d/dy(v a) + d/dz(w a) for a = u and a = v, products formed pointwise.
struct FluxDivergence {
  SpectralField nu, nv;
};
FluxDivergence momentum_flux_divergence(const ScalarField& u, const ScalarField& v,
                                        const ScalarField& w, bool dealias_products = true);

struct StructureResidual {
  double time = 0.0;
  double momentum_x = 0.0;   ///< L2 residual of the u equation
  double momentum_y = 0.0;   ///< L2 residual of the v equation
  double hydrostatic = 0.0;  ///< ||dp/dz||
  double divergence = 0.0;   ///< ||div u||
};

/// Strong-form residuals of the momentum, hydrostatic and divergence equations at every snapshot
/// except the first and last. Uniformly spaced runs of five or more snapshots use fourth-order five-point
/// differences (one-sided near the ends); otherwise a three-point difference is used.
std::vector<StructureResidual> check_weak_solution_structure(const std::vector<Snapshot>& snaps,
                                                             double omega);

}  // namespace hydro
