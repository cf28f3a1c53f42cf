#include "paracoh/randomcheck.hpp"

#include "paracoh/batch.hpp"

namespace paracoh {

namespace {

std::string matrix_str(const Matrix<Rational>& m) {
  std::string s;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m(i, j).str();
    }
  }
  return s;
}

struct TrialResult {
  bool sampled = false;
  bool abelian = false;
  std::string counterexample;
};

}  // namespace

RandomCheckOutcome random_check_4dim(const LieAlgebra& g, int trials, std::uint64_t seed,
                                     int max_attempts_per_trial, int threads) {
  if (g.dim() != 4 || !is_nilpotent(g)) {
    throw Error("random-check targets 4-dimensional nilpotent algebras");
  }
  std::vector<TrialResult> results = batch::map_indexed<TrialResult>(trials, threads, [&](int i) {
    TrialResult r;
    auto ps = random_paracomplex(g, batch::mix_seed(seed, static_cast<std::uint64_t>(i)),
                                 /*require_integrable=*/true, max_attempts_per_trial);
    if (!ps) return r;
    r.sampled = true;
    r.abelian = is_abelian_structure(*ps, g);
    SubgroupReport<Rational> coh = subgroup_dims(g, *ps, 2);
    SubgroupReport<Rational> hom = homology_subgroups(g, *ps, 2);
    if (!r.abelian) {
      r.counterexample = "non-Abelian integrable structure K = [" + matrix_str(ps->k) + "]";
    } else if (!coh.pure_and_full) {
      r.counterexample = "not C-infinity-pure-and-full at stage 2: K = [" + matrix_str(ps->k) +
                         "], dims (" + std::to_string(coh.dim_plus) + "," +
                         std::to_string(coh.dim_minus) + "), betti " + std::to_string(coh.betti);
    } else if (!hom.pure_and_full) {
      r.counterexample = "not pure-and-full (homology) at stage 2: K = [" + matrix_str(ps->k) +
                         "], dims (" + std::to_string(hom.dim_plus) + "," +
                         std::to_string(hom.dim_minus) + "), betti " + std::to_string(hom.betti);
    }
    return r;
  });
  RandomCheckOutcome out;
  out.trials = trials;
  for (const TrialResult& r : results) {
    if (!r.sampled) {
      ++out.sampling_failures;
      continue;
    }
    if (r.abelian) ++out.abelian_count;
    if (!r.counterexample.empty()) out.counterexamples.push_back(r.counterexample);
  }
  return out;
}

}  // namespace paracoh
