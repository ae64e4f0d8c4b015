#include "hydro/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hydro {

using nlohmann::json;

namespace {

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string csv_number(double x) {
  if (!std::isfinite(x)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string pair_key(const std::pair<double, double>& k) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "s=%.6g,p=%.6g", k.first, k.second);
  return buf;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json to_json(const Exponent& e) {
  return json{{"value", number(e.value)}, {"band", number(e.band)}, {"residual", number(e.residual)},
              {"order", e.order}, {"defined", e.defined}};
}

json to_json(const RegularityReport& r) {
  json j{{"grid_n", r.grid_n},
         {"alpha_iso", to_json(r.alpha_iso)},
         {"beta_horizontal", to_json(r.beta_horizontal)},
         {"alpha_vertical", to_json(r.alpha_vertical)},
         {"alpha_oblique", to_json(r.alpha_oblique)}};
  json besov = json::object(), neg = json::object();
  for (const auto& [k, v] : r.besov_seminorms) besov[pair_key(k)] = number(v);
  for (const auto& [k, v] : r.negative_besov) neg[pair_key(k)] = number(v);
  j["besov_seminorms"] = besov;
  j["negative_besov_w"] = neg;
  j["log_holder_gamma_half"] = r.log_holder_gamma_half ? number(*r.log_holder_gamma_half) : json(nullptr);
  j["log_holder_growth_half"] = r.log_holder_growth_half ? number(*r.log_holder_growth_half) : json(nullptr);
  j["w_decay"] = r.w_decay ? to_json(*r.w_decay) : json(nullptr);
  j["w_plane_decay"] = r.w_plane_decay ? to_json(*r.w_plane_decay) : json(nullptr);
  j["l8_exponent"] = r.gradient_l8 ? to_json(*r.gradient_l8) : json(nullptr);
  j["l9_4_exponent"] = r.besov_9_4 ? to_json(*r.besov_9_4) : json(nullptr);
  j["compat_l2"] = r.compat_l2 ? number(*r.compat_l2) : json(nullptr);
  return j;
}

json to_json(const StructureFunction& sf) {
  json entries = json::array();
  for (const auto& e : sf.entries)
    entries.push_back({{"separation", e.separation}, {"direction", e.direction}, {"value", number(e.value)}});
  return json{{"p", sf.p}, {"order", sf.order}, {"directions", to_string(sf.set)}, {"entries", entries}};
}

json to_json(const LinearFit& f) {
  return json{{"slope", number(f.slope)}, {"intercept", number(f.intercept)}, {"band", number(f.band)},
              {"residual_rms", number(f.residual_rms)}, {"points", f.points}};
}

json to_json(const DefectSweep& s) {
  json d = json::array();
  for (double x : s.d_l1) d.push_back(number(x));
  return json{{"epsilons", s.epsilons}, {"defect_l1", d}, {"fit", to_json(s.fit)}, {"degenerate", s.degenerate}};
}

json to_json(const CompatibilityReport& c) {
  return json{{"compat_l2", number(c.compat_l2)}, {"w_boundary_max", number(c.w_boundary_max)},
              {"div_l2", number(c.div_l2)}};
}

json to_json(const CriterionVerdict& v) {
  json inputs = json::object();
  for (const auto& [k, x] : v.inputs) inputs[k] = number(x);
  return json{{"id", v.id},
              {"hypothesis", v.hypothesis},
              {"inputs", inputs},
              {"hypothesis_holds", v.hypothesis_holds},
              {"predicted", v.predicted ? number(*v.predicted) : json(nullptr)},
              {"measured", v.measured ? number(*v.measured) : json(nullptr)},
              {"tolerance", number(v.tolerance)},
              {"pass", v.pass ? json(*v.pass) : json(nullptr)},
              {"spatial_only", v.spatial_only},
              {"proof_derived", v.proof_derived},
              {"note", v.note}};
}

json to_json(const BalanceReport& b) {
  json res = json::array(), d = json::array();
  for (double x : b.residuals) res.push_back(number(x));
  for (double x : b.defect_l1) d.push_back(number(x));
  return json{{"times", b.times}, {"energy", b.energy}, {"epsilons", b.epsilons},
              {"defect_l1", d}, {"residuals", res}, {"residual_fit", to_json(b.residual_fit)}};
}

json to_json(const ProbeResult& p) {
  return json{{"estimate", p.estimate}, {"grid_n", p.grid_n}, {"max_ratio", number(p.max_ratio)}, {"ratios", p.ratios}};
}

std::string verdicts_csv(const std::vector<CriterionVerdict>& verdicts) {
  std::ostringstream os;
  os << "id,hypothesis_holds,predicted,measured,tolerance,pass,spatial_only,proof_derived,inputs,note\n";
  for (const auto& v : verdicts) {
    std::string inputs;
    for (const auto& [k, x] : v.inputs) inputs += (inputs.empty() ? "" : ";") + k + "=" + csv_number(x);
    os << v.id << ',' << (v.hypothesis_holds ? "true" : "false") << ','
       << (v.predicted ? csv_number(*v.predicted) : "") << ',' << (v.measured ? csv_number(*v.measured) : "") << ','
       << csv_number(v.tolerance) << ',' << (v.pass ? (*v.pass ? "true" : "false") : "") << ','
       << (v.spatial_only ? "true" : "false") << ',' << (v.proof_derived ? "true" : "false") << ','
       << quote(inputs) << ',' << quote(v.note) << '\n';
  }
  return os.str();
}

std::string structure_function_csv(const StructureFunction& sf) {
  std::ostringstream os;
  os << "separation,direction,value\n";
  for (const auto& e : sf.entries) os << csv_number(e.separation) << ',' << e.direction << ',' << csv_number(e.value) << '\n';
  return os.str();
}

std::string defect_sweep_csv(const DefectSweep& s) {
  std::ostringstream os;
  os << "eps,defect_l1\n";
  for (std::size_t n = 0; n < s.epsilons.size(); ++n)
    os << csv_number(s.epsilons[n]) << ',' << csv_number(s.d_l1[n]) << '\n';
  return os.str();
}

}  // namespace hydro
