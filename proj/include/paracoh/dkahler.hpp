#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paracoh/cohomology.hpp"

namespace paracoh {

enum class DKStatus {
  witness,
  no_invariant_candidate,
  generic_degenerate,
  cohomologically_obstructed_top_square,
};

std::string to_string(DKStatus s);

struct DKahlerVerdict {
  DKStatus status = DKStatus::no_invariant_candidate;
  std::optional<Form<Rational>> witness;
  int candidate_space_dim = 0;
  std::string obstruction_note;
};

/// Z^2 ∩ Lambda^{2-}: closed K-anti-invariant two-forms (for integrable K
/// this equals Z^2 ∩ Lambda^{(1,1)}).
template <Field F>
Subspace<F> anti_invariant_closed_2forms(const LieAlgebra& g, const ParaStructure<F>& ps) {
  return subspace_intersect(cochain_slice<F>(g, 2).z, form_minus_subspace(ps, 2));
}

struct TopPowerResult {
  bool identically_zero = true;
  std::optional<Form<Rational>> witness;      // an element with nonzero n-th power
  std::vector<Rational> witness_coefficients; // its coordinates in the given basis
};

/// Expands (sum x_i w_i)^n symbolically over the top exterior power. An
/// identically-zero polynomial is an exact nonexistence certificate for
/// nondegenerate elements; otherwise a small-integer witness is located by a
/// deterministic grid search in shells of growing magnitude (the full
/// {-n..n} grid exceeds the per-variable degree, so a hit is guaranteed).
TopPowerResult generic_top_power(const std::vector<Form<Rational>>& basis, int n_half);

/// Re-derivable witness validity check: d omega = 0, K omega = -omega,
/// omega^n != 0, each through an independent module call.
bool verify_dkahler_witness(const LieAlgebra& g, const ParaStructure<Rational>& ps,
                            const Form<Rational>& omega, std::string* why = nullptr);

/// Decision pipeline: candidate space, then symbolic nondegeneracy, then -
/// when invariant cohomology is the whole cohomology (completely-solvable
/// grades, unimodular) - the class-level top-square obstruction.
DKahlerVerdict dkahler_decide(const LieAlgebra& g, const ParaStructure<Rational>& ps);

}  // namespace paracoh
