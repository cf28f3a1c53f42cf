#include "paracoh/deform.hpp"

#include "paracoh/batch.hpp"

namespace paracoh {

FamilyValidation validate_family(const DeformationFamily& f) {
  FamilyValidation out;
  int n = f.g.dim();
  if (f.k_of_t.rows() != n || f.k_of_t.cols() != n) {
    throw AmbientMismatch("family matrix must match the algebra dimension");
  }
  Matrix<RationalFunction> k2 = f.k_of_t * f.k_of_t;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      RationalFunction expect = i == j ? RationalFunction::one() : RationalFunction::zero();
      if (!(k2(i, j) == expect)) {
        throw InvolutionFailsInField("K_t^2 != I in Q(t): entry (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ") = " + k2(i, j).str());
      }
    }
  }
  out.involution_ok = true;
  ParaStructure<RationalFunction> ps = validate_para(f.k_of_t, f.g);  // EigenspaceImbalance on failure
  out.balance_ok = true;
  out.integrable_generic = integrability(ps, f.g).integrable();
  return out;
}

namespace {

template <Field F>
ScanRow row_from_report(const SubgroupReport<F>& rep, bool integrable) {
  ScanRow row;
  row.betti = rep.betti;
  row.dim_plus = rep.dim_plus;
  row.dim_minus = rep.dim_minus;
  row.intersection_dim = rep.intersection_dim;
  row.pure = rep.pure;
  row.full = rep.full;
  row.pure_and_full = rep.pure_and_full;
  row.integrable = integrable;
  return row;
}

}  // namespace

ScanRow generic_dims(const DeformationFamily& f, int stage) {
  ParaStructure<RationalFunction> ps = validate_para(f.k_of_t, f.g);
  ScanRow row = row_from_report(subgroup_dims(f.g, ps, stage), integrability(ps, f.g).integrable());
  row.t = std::nullopt;
  return row;
}

Matrix<Rational> evaluate_family(const DeformationFamily& f, const Rational& t0) {
  Matrix<Rational> k(f.k_of_t.rows(), f.k_of_t.cols());
  for (int i = 0; i < k.rows(); ++i) {
    for (int j = 0; j < k.cols(); ++j) k(i, j) = f.k_of_t(i, j).eval(t0);
  }
  return k;
}

std::vector<ScanRow> sample_scan(const DeformationFamily& f, const std::vector<Rational>& ts,
                                 int stage, int threads) {
  return batch::map_indexed<ScanRow>(static_cast<int>(ts.size()), threads, [&](int i) {
    const Rational& t0 = ts[static_cast<std::size_t>(i)];
    ScanRow row;
    row.t = t0;
    try {
      ParaStructure<Rational> ps = validate_para(evaluate_family(f, t0), f.g);
      row = row_from_report(subgroup_dims(f.g, ps, stage), integrability(ps, f.g).integrable());
      row.t = t0;
    } catch (const PoleError& e) {
      row.error = e.what();
    }
    return row;
  });
}

std::vector<JumpEntry> jump_report(const DeformationFamily& f, const std::vector<Rational>& ts,
                                   int stage, int threads) {
  ScanRow generic = generic_dims(f, stage);
  std::vector<JumpEntry> out;
  for (const ScanRow& row : sample_scan(f, ts, stage, threads)) {
    if (row.error) continue;
    if (row.dim_plus != generic.dim_plus || row.dim_minus != generic.dim_minus) {
      JumpEntry e;
      e.t = *row.t;
      e.generic_plus = generic.dim_plus;
      e.generic_minus = generic.dim_minus;
      e.sampled_plus = row.dim_plus;
      e.sampled_minus = row.dim_minus;
      out.push_back(e);
    }
  }
  return out;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string csv = "t,betti,dim_plus,dim_minus,pure,full,integrable\n";
  for (const ScanRow& r : rows) {
    if (r.error) continue;
    csv += r.t_label() + "," + std::to_string(r.betti) + "," + std::to_string(r.dim_plus) + "," +
           std::to_string(r.dim_minus) + "," + (r.pure ? "true" : "false") + "," +
           (r.full ? "true" : "false") + "," + (r.integrable ? "true" : "false") + "\n";
  }
  return csv;
}

}  // namespace paracoh
