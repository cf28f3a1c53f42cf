#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paracoh/cohomology.hpp"

namespace paracoh {

/// One-parameter family K_t with entries in Q(t); the involution and
/// eigenspace-balance conditions are identities in the field Q(t).
struct DeformationFamily {
  LieAlgebra g;
  Matrix<RationalFunction> k_of_t;
  std::string domain_note;  // e.g. "t in [0,1]"
};

struct FamilyValidation {
  bool involution_ok = false;
  bool balance_ok = false;
  bool integrable_generic = false;
};

/// K_t^2 - I must vanish identically in Q(t) (InvolutionFailsInField names
/// the offending entry otherwise); integrability over Q(t) is reported.
FamilyValidation validate_family(const DeformationFamily& f);

struct ScanRow {
  std::optional<Rational> t;  // unset = the generic fiber
  int betti = 0;
  int dim_plus = 0, dim_minus = 0, intersection_dim = 0;
  bool pure = false, full = false, pure_and_full = false;
  bool integrable = false;
  std::optional<std::string> error;  // per-point pole message; row carries no dims then
  std::string t_label() const { return t ? t->str() : "generic"; }
};

/// Subgroup dimensions computed by honest Q(t) linear algebra; equal to the
/// pointwise dimensions at all but finitely many t.
ScanRow generic_dims(const DeformationFamily& f, int stage);

/// Exact evaluation of the family matrix; PoleError when any entry has a
/// pole at t0.
Matrix<Rational> evaluate_family(const DeformationFamily& f, const Rational& t0);

/// Per-point exact analysis, rows in input order. Points are independent and
/// evaluated through the batch layer (PARACOH_THREADS caps workers).
std::vector<ScanRow> sample_scan(const DeformationFamily& f, const std::vector<Rational>& ts,
                                 int stage, int threads = 1);

struct JumpEntry {
  Rational t;
  int generic_plus = 0, generic_minus = 0;
  int sampled_plus = 0, sampled_minus = 0;
};

/// Sampled points whose (dim+, dim-) differ from the generic fiber.
std::vector<JumpEntry> jump_report(const DeformationFamily& f, const std::vector<Rational>& ts,
                                   int stage, int threads = 1);

/// "t,betti,dim_plus,dim_minus,pure,full,integrable" with the generic row
/// first; rationals rendered as "p/q".
std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace paracoh
