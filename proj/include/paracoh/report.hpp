#pragma once

#include <json.hpp>

#include "paracoh/dkahler.hpp"
#include "paracoh/deform.hpp"

namespace paracoh {

/// Whether linear verdicts transfer to the quotient manifold (Nomizu /
/// Hattori need a nilpotent or completely-solvable group).
struct Applicability {
  bool nilpotent = false;
  SolvabilityFlag flag = SolvabilityFlag::solvable_unknown;
  bool unimodular = false;
  bool transfers() const {
    return flag == SolvabilityFlag::nilpotent || flag == SolvabilityFlag::solvable_real_spectrum;
  }
};

Applicability applicability_of(const LieAlgebra& g);

nlohmann::json applicability_json(const Applicability& a);

/// The stable per-(stage, side) record schema.
template <Field F>
nlohmann::json subgroup_report_json(const std::string& algebra, const std::string& k,
                                    const SubgroupReport<F>& rep, const Applicability& app) {
  nlohmann::json j;
  j["algebra"] = algebra;
  j["k"] = k;
  j["stage"] = rep.stage;
  j["betti"] = rep.betti;
  j["dim_plus"] = rep.dim_plus;
  j["dim_minus"] = rep.dim_minus;
  j["intersection_dim"] = rep.intersection_dim;
  j["pure"] = rep.pure;
  j["full"] = rep.full;
  j["pure_and_full"] = rep.pure_and_full;
  nlohmann::json plus = nlohmann::json::array(), minus = nlohmann::json::array();
  for (const auto& f : rep.plus_reps) plus.push_back(f.str());
  for (const auto& f : rep.minus_reps) minus.push_back(f.str());
  j["plus_reps"] = plus;
  j["minus_reps"] = minus;
  j["side"] = to_string(rep.side);
  j["applicability"] = applicability_json(app);
  return j;
}

nlohmann::json dkahler_json(const DKahlerVerdict& v);

nlohmann::json scan_json(const std::vector<ScanRow>& rows, const std::vector<JumpEntry>& jumps);

std::string text_report(const SubgroupReport<Rational>& rep);

}  // namespace paracoh
