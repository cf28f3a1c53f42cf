#include "paracoh/report.hpp"

#include <sstream>

namespace paracoh {

Applicability applicability_of(const LieAlgebra& g) {
  Applicability a;
  a.flag = completely_solvable_flag(g);
  a.nilpotent = a.flag == SolvabilityFlag::nilpotent;
  a.unimodular = is_unimodular(g);
  return a;
}

nlohmann::json applicability_json(const Applicability& a) {
  nlohmann::json j;
  j["nilpotent"] = a.nilpotent;
  j["completely_solvable_flag"] = to_string(a.flag);
  if (!a.transfers()) {
    j["note"] = "verdicts are Lie-algebra level only (no Nomizu/Hattori transfer)";
  }
  return j;
}

nlohmann::json dkahler_json(const DKahlerVerdict& v) {
  nlohmann::json j;
  j["status"] = to_string(v.status);
  j["candidate_space_dim"] = v.candidate_space_dim;
  if (v.witness) j["witness"] = v.witness->str();
  if (!v.obstruction_note.empty()) j["obstruction_note"] = v.obstruction_note;
  return j;
}

nlohmann::json scan_json(const std::vector<ScanRow>& rows, const std::vector<JumpEntry>& jumps) {
  nlohmann::json out;
  nlohmann::json jrows = nlohmann::json::array();
  for (const ScanRow& r : rows) {
    nlohmann::json jr;
    jr["t"] = r.t_label();
    if (r.error) {
      jr["error"] = *r.error;
    } else {
      jr["betti"] = r.betti;
      jr["dim_plus"] = r.dim_plus;
      jr["dim_minus"] = r.dim_minus;
      jr["pure"] = r.pure;
      jr["full"] = r.full;
      jr["integrable"] = r.integrable;
    }
    jrows.push_back(jr);
  }
  out["rows"] = jrows;
  nlohmann::json jj = nlohmann::json::array();
  for (const JumpEntry& e : jumps) {
    jj.push_back({{"t", e.t.str()},
                  {"generic", {e.generic_plus, e.generic_minus}},
                  {"sampled", {e.sampled_plus, e.sampled_minus}}});
  }
  out["jumps"] = jj;
  return out;
}

std::string text_report(const SubgroupReport<Rational>& rep) {
  std::ostringstream os;
  os << (rep.side == Side::cohomology ? "H^" : "H_") << rep.stage << ": betti " << rep.betti
     << ", dim+ " << rep.dim_plus << ", dim- " << rep.dim_minus << ", intersection "
     << rep.intersection_dim << ", pure " << (rep.pure ? "yes" : "no") << ", full "
     << (rep.full ? "yes" : "no") << "\n";
  os << "  plus reps:";
  for (const auto& f : rep.plus_reps) os << "  " << f.str();
  os << "\n  minus reps:";
  for (const auto& f : rep.minus_reps) os << "  " << f.str();
  os << "\n";
  return os.str();
}

}  // namespace paracoh
