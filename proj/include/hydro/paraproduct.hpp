#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hydro/grid.hpp"

namespace hydro {

/// Low-frequency cutoff: 1 for r <= 3/4, 0 for r >= 4/3, smooth in between.
double lp_low_profile(double r);
/// Annulus profile rho(r) = chi(r/2) - chi(r), supported in [3/4, 8/3].
double lp_annulus_profile(double r);
/// Weight of block j at radius r: chi(r) for j = -1, rho(2^-j r) otherwise.
double lp_weight(int j, double r);
/// Largest block index needed for the partition to reach 1 at every resolved wavevector.
int lp_max_block(const Grid& g, bool horizontal_only = false);

struct LPDecomposition {
  Grid grid;
  int j_max = 0;
  std::vector<SpectralField> blocks;  ///< blocks[j + 1] = Delta_j f
  const SpectralField& block(int j) const { return blocks[static_cast<std::size_t>(j + 1)]; }
  ScalarField reconstruct() const;
};

/// Requires n_min >= 16.
LPDecomposition lp_blocks(const ScalarField& f);
/// A single block; horizontal_only filters by |k_h| (plane-wise blocks in z).
SpectralField lp_block(const SpectralField& F, int j, bool horizontal_only = false);
/// ||Delta_j f||_{L^p} for j = -1..j_max.
std::vector<double> lp_block_norms(const ScalarField& f, double p, bool horizontal_only = false);
/// sup_j 2^{js} ||Delta_j f||_{L^p}; s may be negative.
double lp_besov_norm(const ScalarField& f, double s, double p);

struct BonyDecomposition {
  ScalarField t_f_g;     ///< T_f g: low blocks of f times high blocks of g
  ScalarField t_g_f;     ///< T_g f
  ScalarField resonant;  ///< R(f, g)
  ScalarField product;   ///< f g, formed on the same padded grid
};

/// Block products are formed on a 3/2-padded grid and truncated back.
BonyDecomposition bony(const ScalarField& f, const ScalarField& g);

/// Estimates probed by product_estimate_probe.
/// B2.1: ||T_f g||_{B^b_p} <= C ||f||_{L^p1} ||g||_{B^b_p2}
/// B2.2: ||T_f g||_{B^{a+b}_p} <= C ||f||_{B^a_p1} ||g||_{B^b_p2}, a < 0
/// B3.1: ||R(f,g)||_{B^{a+b}_p} <= C ||f||_{B^a_p1} ||g||_{B^b_p2}, a + b > 0
/// B4.1: ||fg||_{B^a_p} <= C (||f||_{L^p1} ||g||_{B^a_p2} + ||g||_{L^p1} ||f||_{B^a_p2}), a > 0
/// B4.2: ||fg||_{B^a_p} <= C ||f||_{B^a_p1} ||g||_{B^a_p2}, same, with p1 = p2 = 2p
/// B4.3: ||f^2||_{B^a_p} <= C ||f||_{B^t_p1} ||f||_{B^{a+t}_p2}
struct ProbeParams {
  std::string estimate = "B4.2";
  double alpha = 0.5;
  double beta = 0.5;
  double theta = 0.2;
  double p = 3.0;
  double p1 = 6.0;
  double p2 = 6.0;
};

/// Throws a Parameter error when the cited estimate's hypotheses fail.
void validate_probe(const ProbeParams& params);

struct ProbeResult {
  std::string estimate;
  int grid_n = 0;
  double max_ratio = 0.0;
  std::vector<double> ratios;
};

/// Worst LHS/RHS ratio over a seeded ensemble of random-phase fields, using LP norms.
ProbeResult product_estimate_probe(const Grid& g, int members, std::uint64_t seed, const ProbeParams& params);

}  // namespace hydro
