#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hydro/mollify.hpp"
#include "hydro/regularity.hpp"

namespace hydro {

/// Criterion ids in table order.
const std::vector<std::string>& criterion_ids();

struct CriterionVerdict {
  std::string id;
  std::string hypothesis;                ///< the inequality evaluated
  std::map<std::string, double> inputs;  ///< measured quantities used
  bool hypothesis_holds = false;
  std::optional<double> predicted;  ///< defect decay exponent supplied by the proof
  std::optional<double> measured;   ///< defect sweep slope
  double tolerance = 0.0;
  std::optional<bool> pass;  ///< measured >= predicted - tolerance, when both exist and the hypothesis holds
  bool spatial_only = true;
  bool proof_derived = false;  ///< rate read off the proof rather than the statement
  std::string note;
};

struct EngineOptions {
  double log_holder_growth_limit = 1.05;  ///< P3.4 holds when the weighted modulus stops growing
  double min_tolerance = 0.05;            ///< floor on the pass tolerance
  bool spatial_only = true;
};

/// Evaluates the requested criteria (all when ids is empty). A hypothesis holds only when it holds
/// with every measured exponent moved to the pessimistic edge of its fit band. Missing measurements
/// raise an IncompleteInput error naming them.
std::vector<CriterionVerdict> criterion_engine(const RegularityReport& report, const DefectSweep* sweep,
                                               const std::vector<std::string>& ids = {},
                                               const EngineOptions& options = {});

}  // namespace hydro
