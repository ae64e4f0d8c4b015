#pragma once

#include <array>
#include <string>
#include <vector>

#include "hydro/fit.hpp"
#include "hydro/grid.hpp"

namespace hydro {

enum class MollifierProfile {
  Standard,  ///< exp(-1/(1-r^2))
  Flat,      ///< exp(-1/(1-r^4)), flatter top
};

MollifierProfile parse_profile(const std::string& name);
const char* to_string(MollifierProfile p);

/// Radial C_c^infty kernel on the unit ball, discretised on an m^3 tensor-trapezoid stencil
/// restricted to the ball and renormalised to unit discrete mass.
class Mollifier {
 public:
  struct Node {
    std::array<double, 3> u;     ///< position in the unit ball
    double kernel;               ///< weight of phi, sums to 1
    std::array<double, 3> grad;  ///< weight of grad phi at unit scale
  };

  explicit Mollifier(MollifierProfile profile = MollifierProfile::Standard, int stencil = 81);

  MollifierProfile profile() const { return profile_; }
  int stencil() const { return m_; }
  double phi(double r) const;       ///< unnormalised profile
  double phi_prime(double r) const;  ///< analytic d phi / dr
  const std::vector<Node>& nodes() const { return nodes_; }

  /// Fourier multipliers at scale eps: f^eps has coefficients kernel(k) c_k, and
  /// sum_i grad_i(eps) f(x + eps u_i) has coefficients i * grad[a](k) c_k.
  struct Transforms {
    RealArray kernel;
    std::array<RealArray, 3> grad;
  };
  Transforms transforms(const Grid& g, double eps) const;

 private:
  MollifierProfile profile_;
  int m_;
  std::vector<Node> nodes_;
  std::vector<double> axis_;                    ///< 1D node coordinates u_0..u_{m-1}
  std::vector<double> kernel3_;                 ///< m^3 kernel weights (zero outside the ball)
  std::array<std::vector<double>, 3> grad3_;    ///< m^3 gradient weights
};

/// Requires 2/n_min <= eps <= 1/4.
void check_scale(const Grid& g, double eps);

ScalarField mollify(const ScalarField& f, double eps, const Mollifier& moll = Mollifier());
SpectralField mollify(const SpectralField& F, double eps, const Mollifier& moll = Mollifier());

/// D_eps(u)(x) = int grad phi_eps(xi) . delta u (|delta u|^2 + |delta v|^2) dxi, the stencil sum
/// evaluated exactly through spectral shifts.
ScalarField defect_density(const VectorField& vf, double eps, const Mollifier& moll = Mollifier());

/// The same quantity assembled from mollified products and their derivatives.
ScalarField defect_density_products(const VectorField& vf, double eps, const Mollifier& moll = Mollifier());

struct DefectSweep {
  std::vector<double> epsilons;  ///< strictly decreasing
  std::vector<double> d_l1;
  LinearFit fit;                 ///< log d_l1 against log eps
  bool degenerate = false;       ///< D_eps vanished identically at every scale
};

/// Needs at least 4 scales spanning a decade. Checks compatibility of (u, v) first.
DefectSweep defect_sweep(const VectorField& vf, const std::vector<double>& epsilons,
                         const Mollifier& moll = Mollifier());

/// Log-spaced scales from eps_max down to eps_min.
std::vector<double> geometric_scales(double eps_max, double eps_min, int count);

struct CezTerms {
  ScalarField mollified_product;  ///< f^eps g^eps
  ScalarField cross;              ///< int phi_eps(y) delta f(-y) delta g(-y) dy
  ScalarField remainder;          ///< -(f - f^eps)(g - g^eps)
};

CezTerms cez_decompose(const ScalarField& f, const ScalarField& g, double eps,
                       const Mollifier& moll = Mollifier());

}  // namespace hydro
