#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paracoh/exterior.hpp"
#include "paracoh/polynomial.hpp"
#include "paracoh/subspace.hpp"

namespace paracoh {

/// Key (l, m, k) with l < m; value c^k_{lm} in  d e^k = sum c^k_{lm} e^l ^ e^m.
using StructureConstants = std::map<std::array<int, 3>, Rational>;

struct JacobiViolation {
  int generator;             // first k with d(d e^k) != 0
  std::string residue;       // rendered d^2 e^k
};

/// Lie algebra given by exact structure constants; the single source of truth
/// for the Chevalley-Eilenberg differential. Valid (Jacobi) by construction.
///
/// Sign convention, fixed once here: d e^k = sum_{l<m} c^k_{lm} e^l ^ e^m and
/// d alpha(x, y) = -alpha([x, y]), hence [e_l, e_m] = -sum_k c^k_{lm} e_k.
/// bracket() below is the only place that conversion happens.
class LieAlgebra {
public:
  static LieAlgebra create(int dim, StructureConstants constants);

  /// Verdict-returning Jacobi check (d o d = 0 on every generator).
  static std::optional<JacobiViolation> validate_jacobi(int dim, const StructureConstants& constants);

  int dim() const { return dim_; }
  const StructureConstants& constants() const { return c_; }

  bool is_abelian_algebra() const { return c_.empty(); }

  /// d e^k as a 2-form.
  Form<Rational> d_generator(int k) const;

  /// [x, y] in coordinates; the sign-convention authority.
  std::vector<Rational> bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

  /// Matrix of ad_x = [x, .].
  Matrix<Rational> ad(const std::vector<Rational>& x) const;

  std::vector<Rational> basis_vector(int i) const;

  /// Canonical structure-equation string, e.g. "(0,0,12,13)".
  std::string str() const;

private:
  LieAlgebra(int dim, StructureConstants constants) : dim_(dim), c_(std::move(constants)) {}

  int dim_;
  StructureConstants c_;
};

// ---- Chevalley-Eilenberg differential and its dual boundary ----

/// d extended as an antiderivation; accepts mixed-degree input.
template <Field F>
Form<F> cdiff(const LieAlgebra& g, const Form<F>& a) {
  if (a.ambient() != g.dim()) throw AmbientMismatch("form ambient != algebra dimension");
  Form<F> out(g.dim());
  for (const auto& [idx, coeff] : a.terms()) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      Form<Rational> dgen = g.d_generator(idx[j]);
      if (dgen.is_zero()) continue;
      IndexTuple rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t m = 0; m < idx.size(); ++m) {
        if (m != j) rest.push_back(idx[m]);
      }
      int outer_sign = (j % 2 == 0) ? 1 : -1;
      for (const auto& [pair_idx, c] : dgen.terms()) {
        IndexTuple merged = pair_idx;
        merged.insert(merged.end(), rest.begin(), rest.end());
        F term = coeff * F::from_rational(c);
        out.add_term(std::move(merged), outer_sign > 0 ? term : -term);
      }
    }
  }
  return out;
}

/// Matrix of d: Lambda^ell -> Lambda^{ell+1} in the lex monomial bases
/// (columns are images of the degree-ell monomials).
template <Field F>
Matrix<F> cdiff_matrix(const LieAlgebra& g, int ell) {
  int n = g.dim();
  std::vector<IndexTuple> dom = monomial_basis(n, ell);
  long codim = binomial(n, ell + 1);
  Matrix<F> m(static_cast<int>(codim), static_cast<int>(dom.size()));
  for (std::size_t j = 0; j < dom.size(); ++j) {
    Form<F> img = cdiff(g, Form<F>::monomial(n, dom[j]));
    for (const auto& [idx, c] : img.terms()) {
      m(monomial_rank(n, idx), static_cast<int>(j)) = c;
    }
  }
  return m;
}

/// Boundary on multivectors: the transpose of d w.r.t. the monomial pairing,
/// <del v, alpha> = <v, d alpha>.
template <Field F>
Matrix<F> boundary_matrix(const LieAlgebra& g, int ell) {
  return cdiff_matrix<F>(g, ell - 1).transpose();
}

template <Field F>
Form<F> boundary(const LieAlgebra& g, const Form<F>& v) {
  if (v.ambient() != g.dim()) throw AmbientMismatch("multivector ambient != algebra dimension");
  auto deg = v.degree();
  if (v.is_zero()) return Form<F>(g.dim());
  if (!deg.has_value()) throw Error("boundary requires a homogeneous multivector");
  int ell = *deg;
  if (ell == 0) return Form<F>(g.dim());
  Matrix<F> del = boundary_matrix<F>(g, ell);
  return Form<F>::from_coords(g.dim(), ell - 1, del.apply(v.coords(ell)));
}

// ---- classification checks ----

struct LcsReport {
  std::vector<Subspace<Rational>> series;  // g^0 ⊋ g^1 ⊋ ... until stabilization
  std::optional<int> step;                 // inf{ n : g^n = 0 }, unset when the series stalls above 0
  std::vector<int> dims() const {
    std::vector<int> d;
    d.reserve(series.size());
    for (const auto& s : series) d.push_back(s.dim());
    return d;
  }
};

/// Lower central series g^{n+1} = [g^n, g].
LcsReport lower_central_series(const LieAlgebra& g);

/// Derived series g^{(n+1)} = [g^(n), g^(n)].
LcsReport derived_series(const LieAlgebra& g);

bool is_nilpotent(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);

/// trace(ad_x) = 0 for all x; cross-checked against d|_{Lambda^{n-1}} = 0
/// (the two must agree on every algebra).
bool is_unimodular(const LieAlgebra& g);

enum class SolvabilityFlag { nilpotent, solvable_real_spectrum, solvable_unknown, not_solvable };

std::string to_string(SolvabilityFlag f);

/// Nilpotent via the lower central series; solvable via the derived series;
/// the real-spectrum grade is the Sturm-counted necessary condition on the
/// basis adjoints (a heuristic, not a theorem-grade completely-solvable test).
SolvabilityFlag completely_solvable_flag(const LieAlgebra& g);

/// Nilpotent step of a subalgebra h (its own lower central series, brackets
/// taken in g); unset when the series stalls above zero.
std::optional<int> subalgebra_step(const LieAlgebra& g, const Subspace<Rational>& h);

/// Characteristic polynomial (monic, degree n) via Faddeev-LeVerrier.
Polynomial char_poly(const Matrix<Rational>& m);

/// Block-diagonal direct sum; cross brackets zero.
LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2);

}  // namespace paracoh
