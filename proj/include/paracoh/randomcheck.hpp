#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "paracoh/cohomology.hpp"

namespace paracoh {

struct RandomCheckOutcome {
  int trials = 0;
  int abelian_count = 0;
  int sampling_failures = 0;                // trials where no integrable K was found
  std::vector<std::string> counterexamples; // certificates that would falsify the theorem
  bool ok() const { return counterexamples.empty(); }
};

/// Randomized verification of the 4-dimensional theorem: every sampled
/// integrable structure on a 4-dimensional nilpotent algebra must be
/// C-infinity-pure-and-full and pure-and-full at stage 2, and Abelian.
/// Trial i uses seed mix(seed, i), so results are identical for any thread
/// count; `threads` > 1 runs trials through the OpenMP batch kernel.
RandomCheckOutcome random_check_4dim(const LieAlgebra& g, int trials, std::uint64_t seed,
                                     int max_attempts_per_trial, int threads);

}  // namespace paracoh
