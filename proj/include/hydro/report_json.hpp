#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hydro/balance.hpp"
#include "hydro/criteria.hpp"
#include "hydro/incompressibility.hpp"
#include "hydro/mollify.hpp"
#include "hydro/paraproduct.hpp"
#include "hydro/regularity.hpp"

namespace hydro {

nlohmann::json to_json(const Exponent& e);
nlohmann::json to_json(const RegularityReport& r);
nlohmann::json to_json(const StructureFunction& sf);
nlohmann::json to_json(const LinearFit& f);
nlohmann::json to_json(const DefectSweep& s);
nlohmann::json to_json(const CompatibilityReport& c);
nlohmann::json to_json(const CriterionVerdict& v);
nlohmann::json to_json(const BalanceReport& b);
nlohmann::json to_json(const ProbeResult& p);

/// Columns: id, hypothesis_holds, predicted, measured, tolerance, pass, spatial_only, proof_derived, inputs, note
std::string verdicts_csv(const std::vector<CriterionVerdict>& verdicts);
/// Columns: separation, direction, value
std::string structure_function_csv(const StructureFunction& sf);
/// Columns: eps, defect_l1
std::string defect_sweep_csv(const DefectSweep& s);

}  // namespace hydro
