#include "hydro/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "hydro/error.hpp"

namespace hydro {

const std::vector<std::string>& criterion_ids() {
  static const std::vector<std::string> ids = {"P3.1", "P3.4", "P3.5",  "P3.6", "T4.10",
                                               "P4.11", "P4.14", "P4.15", "P5.1", "P6.1"};
  return ids;
}

namespace {

// Undefined exponents come from identically vanishing increments, i.e. no roughness at all.
constexpr double kSmooth = 2.0;

double edge(const Exponent& e) { return e.defined ? e.value - e.band : kSmooth; }
double edge(const std::optional<Exponent>& e) { return edge(*e); }

// LP decay slope of w turned into the index s of w in B^{-s}; the pessimistic edge is the larger s.
double w_index(const std::optional<Exponent>& decay) {
  if (!decay->defined) return 0.0;
  return std::max(0.0, decay->value + decay->band);
}

// Regularity of w (negative of the decay slope), pessimistic edge.
double w_regularity(const std::optional<Exponent>& decay) {
  if (!decay->defined) return kSmooth;
  return -(decay->value + decay->band);
}

struct Needs {
  bool w = false, w_plane = false, log_holder = false, gradient = false, besov_9_4 = false;
};

Needs needs_for(const std::string& id) {
  Needs n;
  if (id == "P3.4") n.log_holder = true;
  if (id == "P3.5" || id == "T4.10") n.w = true;
  if (id == "P4.14") n.w_plane = true;
  if (id == "P5.1") n.gradient = true;
  if (id == "P6.1") n.besov_9_4 = true;
  return n;
}

}  // namespace

std::vector<CriterionVerdict> criterion_engine(const RegularityReport& r, const DefectSweep* sweep,
                                               const std::vector<std::string>& requested,
                                               const EngineOptions& opt) {
  std::vector<std::string> ids;
  for (const auto& id : criterion_ids())
    if (requested.empty() || std::find(requested.begin(), requested.end(), id) != requested.end()) ids.push_back(id);
  for (const auto& id : requested)
    if (std::find(criterion_ids().begin(), criterion_ids().end(), id) == criterion_ids().end())
      fail(ErrorKind::Parameter, "unknown criterion " + id);

  std::vector<std::string> missing;
  for (const auto& id : ids) {
    const Needs n = needs_for(id);
    if (n.w && !r.w_decay) missing.push_back(id + ": LP decay of w");
    if (n.w_plane && !r.w_plane_decay) missing.push_back(id + ": plane-wise LP decay of w");
    if (n.log_holder && !r.log_holder_growth_half) missing.push_back(id + ": log-Hoelder growth");
    if (n.gradient && !r.gradient_l8) missing.push_back(id + ": L^8 exponent");
    if (n.besov_9_4 && !r.besov_9_4) missing.push_back(id + ": L^(9/4) exponent");
  }
  if (!missing.empty()) {
    std::string msg = "missing measurements:";
    for (const auto& m : missing) msg += " [" + m + "]";
    fail(ErrorKind::IncompleteInput, msg);
  }

  const double a_iso = edge(r.alpha_iso);
  const double a_v = edge(r.alpha_vertical);
  const double b_h = edge(r.beta_horizontal);
  const double a1 = std::min(a_iso, 1.0);

  std::optional<double> measured;
  double tol = opt.min_tolerance;
  bool degenerate = false;
  if (sweep) {
    degenerate = sweep->degenerate;
    if (!degenerate) {
      measured = sweep->fit.slope;
      if (std::isfinite(sweep->fit.band)) tol = std::max(tol, sweep->fit.band);
    }
  }

  std::vector<CriterionVerdict> out;
  for (const auto& id : ids) {
    CriterionVerdict v;
    v.id = id;
    v.spatial_only = opt.spatial_only;
    if (id == "P3.1") {
      v.hypothesis = "alpha > 1/2";
      v.inputs = {{"alpha", a_iso}};
      v.hypothesis_holds = a_iso > 0.5;
      v.predicted = 2.0 * a1 - 1.0;
    } else if (id == "P3.4") {
      v.hypothesis = "u, v in C^{0,1/2}_log (weighted modulus bounded toward the grid scale)";
      v.inputs = {{"log_holder_growth", *r.log_holder_growth_half}};
      if (r.log_holder_gamma_half) v.inputs["log_holder_seminorm"] = *r.log_holder_gamma_half;
      v.hypothesis_holds = *r.log_holder_growth_half <= opt.log_holder_growth_limit;
      v.note = "logarithmic rate, no power-law exponent";
    } else if (id == "P3.5") {
      const double beta_w = std::min(w_regularity(r.w_decay), a_iso);
      v.hypothesis = "beta_w > 0 and 2 alpha > 1 - beta_w, beta_w = min(w regularity, alpha)";
      v.inputs = {{"alpha", a_iso}, {"beta_w", beta_w}};
      v.hypothesis_holds = beta_w > 0.0 && 2.0 * a_iso > 1.0 - beta_w;
      v.predicted = 2.0 * a1 + std::min(beta_w, 1.0) - 1.0;
      v.note = "instance p2 = 3, q2 = 6";
    } else if (id == "P3.6") {
      const double a = std::min(a_v, 1.0), b = std::min(b_h, 2.0);
      v.hypothesis = "beta > 2/3, alpha > 1/3, 2 alpha + beta > 2";
      v.inputs = {{"alpha_vertical", a_v}, {"beta_horizontal", b_h}};
      v.hypothesis_holds = b_h > 2.0 / 3.0 && a_v > 1.0 / 3.0 && 2.0 * a_v + b_h > 2.0;
      v.predicted = std::min({b + 1.0, 3.0, 2.0 * a + b - 1.0, 2.0 * a + 1.0}) - 1.0;
      v.proof_derived = true;
    } else if (id == "T4.10") {
      const double s = w_index(r.w_decay);
      v.hypothesis = "alpha > 1/2 + s/2";
      v.inputs = {{"alpha", a_iso}, {"s", s}};
      v.hypothesis_holds = a_iso > 0.5 + 0.5 * s;
      v.predicted = 2.0 * a1 - 1.0 - s;
      v.proof_derived = true;
      v.note = "theta -> 0 limit of the proof's rate";
    } else if (id == "P4.11") {
      v.hypothesis = "alpha > 2/3";
      v.inputs = {{"alpha", a_iso}};
      v.hypothesis_holds = a_iso > 2.0 / 3.0;
      v.predicted = 2.0 * a1 - 4.0 / 3.0;
      v.proof_derived = true;
    } else if (id == "P4.14") {
      const double s = w_index(r.w_plane_decay);
      v.hypothesis = "alpha > 1/2 and beta > 1/2 + s/2 (plane-wise s)";
      v.inputs = {{"alpha_vertical", a_v}, {"beta_horizontal", b_h}, {"s_plane", s}};
      v.hypothesis_holds = a_v > 0.5 && b_h > 0.5 + 0.5 * s;
    } else if (id == "P4.15") {
      v.hypothesis = "alpha > 1/2 and beta > 2/3";
      v.inputs = {{"alpha_vertical", a_v}, {"beta_horizontal", b_h}};
      v.hypothesis_holds = a_v > 0.5 && b_h > 2.0 / 3.0;
    } else if (id == "P5.1") {
      const double g8 = edge(r.gradient_l8);
      v.hypothesis = "W^{1,p} with p > 6 (L^8 exponent > 1), or Hoelder beta > 1/2 with W^{1,p}";
      v.inputs = {{"l8_exponent", g8}, {"alpha", a_iso}};
      v.hypothesis_holds = g8 > 1.0;
      v.predicted = 2.0 * a1 - 1.0;
    } else if (id == "P6.1") {
      const double s = edge(r.besov_9_4);
      v.hypothesis = "B^s_{9/4} with s > 1";
      v.inputs = {{"s", s}};
      v.hypothesis_holds = s > 1.0;
      v.predicted = std::min(2.0 * s - 2.0, 1.0);
      v.proof_derived = true;
    }
    v.tolerance = tol;
    if (v.hypothesis_holds && v.predicted) {
      if (degenerate) {
        v.pass = true;
        v.note += v.note.empty() ? "defect vanishes identically" : "; defect vanishes identically";
      } else if (measured) {
        v.measured = measured;
        v.pass = *measured >= *v.predicted - tol;
      }
    } else if (measured) {
      v.measured = measured;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hydro
