#pragma once

#include <string>
#include <vector>

#include "paracoh/paracomplex.hpp"

namespace paracoh {

enum class Side { cohomology, homology };

inline std::string to_string(Side s) { return s == Side::cohomology ? "cohomology" : "homology"; }

/// Cocycles, coboundaries and their difference at one degree.
template <Field F>
struct ComplexSlice {
  Subspace<F> z{0}, b{0};
  int betti = 0;
};

template <Field F>
ComplexSlice<F> cochain_slice(const LieAlgebra& g, int ell) {
  if (ell < 0 || ell > g.dim()) throw Error("degree out of range");
  ComplexSlice<F> s;
  s.z = Subspace<F>::span(static_cast<int>(binomial(g.dim(), ell)), kernel_basis(cdiff_matrix<F>(g, ell)));
  s.b = ell == 0 ? Subspace<F>::zero_subspace(1)
                 : Subspace<F>::column_space(cdiff_matrix<F>(g, ell - 1));
  s.betti = s.z.dim() - s.b.dim();
  return s;
}

/// Chain-side slice on multivectors: Z = ker(del_ell), B = im(del_{ell+1}),
/// with del the transpose of d.
template <Field F>
ComplexSlice<F> chain_slice(const LieAlgebra& g, int ell) {
  if (ell < 0 || ell > g.dim()) throw Error("degree out of range");
  int dim = static_cast<int>(binomial(g.dim(), ell));
  ComplexSlice<F> s;
  s.z = ell == 0 ? Subspace<F>::full(dim)
                 : Subspace<F>::span(dim, kernel_basis(boundary_matrix<F>(g, ell)));
  s.b = ell == g.dim() ? Subspace<F>::zero_subspace(dim)
                       : Subspace<F>::column_space(boundary_matrix<F>(g, ell + 1));
  s.betti = s.z.dim() - s.b.dim();
  return s;
}

template <Field F = Rational>
int betti(const LieAlgebra& g, int ell) {
  return cochain_slice<F>(g, ell).betti;
}

template <Field F>
struct SubgroupReport {
  int stage = 0;
  Side side = Side::cohomology;
  int betti = 0;
  int dim_plus = 0, dim_minus = 0, intersection_dim = 0;
  bool pure = false, full = false, pure_and_full = false;
  std::vector<Form<F>> plus_reps, minus_reps;
};

namespace detail {

/// The shared subgroup computation: dimensions by the closed-form identity
/// dim(Z ∩ W) − dim(B ∩ W), cross-checked against the direct image of Z ∩ W
/// inside explicit Z/B coordinates; intersection of the two images taken at
/// quotient level (representative matching would be wrong: equal classes can
/// have different-type representatives).
template <Field F>
SubgroupReport<F> analyze_subgroups(int n, int ell, Side side, const ComplexSlice<F>& slice,
                                    const Subspace<F>& w_plus, const Subspace<F>& w_minus) {
  SubgroupReport<F> rep;
  rep.stage = ell;
  rep.side = side;
  rep.betti = slice.betti;

  Subspace<F> zp = subspace_intersect(slice.z, w_plus);
  Subspace<F> zm = subspace_intersect(slice.z, w_minus);
  Subspace<F> bp = subspace_intersect(slice.b, w_plus);
  Subspace<F> bm = subspace_intersect(slice.b, w_minus);
  rep.dim_plus = zp.dim() - bp.dim();
  rep.dim_minus = zm.dim() - bm.dim();

  // representatives: an echelon complement of B ∩ W inside Z ∩ W
  for (const auto& v : complement_basis(bp, zp)) rep.plus_reps.push_back(Form<F>::from_coords(n, ell, v));
  for (const auto& v : complement_basis(bm, zm)) rep.minus_reps.push_back(Form<F>::from_coords(n, ell, v));

  // quotient-level route: coordinates on H = Z/B via a complement of B in Z
  std::vector<std::vector<F>> h_rows = complement_basis(slice.b, slice.z);
  int b_dim = slice.b.dim();
  int h_dim = static_cast<int>(h_rows.size());
  if (h_dim != slice.betti) throw InternalCheckError("quotient coordinate dimension mismatch");
  // rows of A: [h_1..h_betti, b_1..b_dimB] form a basis of Z
  Matrix<F> a_t(slice.z.ambient_dim(), h_dim + b_dim);
  for (int j = 0; j < h_dim; ++j)
    for (int i = 0; i < slice.z.ambient_dim(); ++i) a_t(i, j) = h_rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  for (int j = 0; j < b_dim; ++j)
    for (int i = 0; i < slice.z.ambient_dim(); ++i) a_t(i, h_dim + j) = slice.b.basis()(j, i);
  auto class_coords = [&](const std::vector<F>& v) {
    auto x = solve(a_t, v);
    if (!x) throw InternalCheckError("cocycle not expressible in Z basis");
    return std::vector<F>(x->begin(), x->begin() + h_dim);
  };
  std::vector<std::vector<F>> img_plus, img_minus;
  for (int i = 0; i < zp.dim(); ++i) img_plus.push_back(class_coords(zp.basis_vector(i)));
  for (int i = 0; i < zm.dim(); ++i) img_minus.push_back(class_coords(zm.basis_vector(i)));
  Subspace<F> h_plus = Subspace<F>::span(h_dim, img_plus);
  Subspace<F> h_minus = Subspace<F>::span(h_dim, img_minus);
  if (h_plus.dim() != rep.dim_plus || h_minus.dim() != rep.dim_minus) {
    throw InternalCheckError("subgroup dimension routes disagree at stage " + std::to_string(ell));
  }
  rep.intersection_dim = subspace_intersect(h_plus, h_minus).dim();

  rep.pure = rep.intersection_dim == 0;
  rep.full = rep.dim_plus + rep.dim_minus - rep.intersection_dim == rep.betti;
  rep.pure_and_full = rep.pure && rep.full;
  if (rep.dim_plus + rep.dim_minus - rep.intersection_dim > rep.betti) {
    throw InternalCheckError("subgroup sum exceeds Betti number");
  }
  return rep;
}

}  // namespace detail

/// H^{ell+} / H^{ell-}: classes admitting a K-invariant / K-anti-invariant
/// closed representative. Works for almost (non-integrable) structures too.
template <Field F>
SubgroupReport<F> subgroup_dims(const LieAlgebra& g, const ParaStructure<F>& ps, int ell) {
  return detail::analyze_subgroups(g.dim(), ell, Side::cohomology, cochain_slice<F>(g, ell),
                                   form_plus_subspace(ps, ell), form_minus_subspace(ps, ell));
}

/// Homology-side subgroups on the multivector complex, K acting by its
/// exterior extension.
template <Field F>
SubgroupReport<F> homology_subgroups(const LieAlgebra& g, const ParaStructure<F>& ps, int ell) {
  return detail::analyze_subgroups(g.dim(), ell, Side::homology, chain_slice<F>(g, ell),
                                   multivector_plus_subspace(ps, ell),
                                   multivector_minus_subspace(ps, ell));
}

template <Field F>
struct PqReport {
  int p = 0, q = 0;
  int dim = 0;
  std::vector<Form<F>> reps;
};

/// H^{(p,q)}_K: image of Z^{p+q} ∩ Lambda^{(p,q)} in H^{p+q}. Integrable
/// structures only; the even/odd-q sums reproduce subgroup_dims.
template <Field F>
PqReport<F> pq_subgroup(const LieAlgebra& g, const ParaStructure<F>& ps, int p, int q) {
  if (!integrability(ps, g).integrable()) {
    throw NotIntegrable("H^{(p,q)} requires an integrable structure");
  }
  int ell = p + q;
  ComplexSlice<F> slice = cochain_slice<F>(g, ell);
  auto projectors = bigrade_projectors(ps, ell);
  auto it = projectors.find({p, q});
  Subspace<F> w = it == projectors.end()
                      ? Subspace<F>::zero_subspace(static_cast<int>(binomial(g.dim(), ell)))
                      : it->second;
  PqReport<F> rep;
  rep.p = p;
  rep.q = q;
  Subspace<F> zw = subspace_intersect(slice.z, w);
  Subspace<F> bw = subspace_intersect(slice.b, w);
  rep.dim = zw.dim() - bw.dim();
  for (const auto& v : complement_basis(bw, zw)) rep.reps.push_back(Form<F>::from_coords(g.dim(), ell, v));
  return rep;
}

/// Wedge on the level of classes; both inputs must be closed.
template <Field F>
Form<F> cup(const LieAlgebra& g, const Form<F>& a, const Form<F>& b) {
  if (!cdiff(g, a).is_zero()) throw NotClosed("cup: first argument is not closed");
  if (!cdiff(g, b).is_zero()) throw NotClosed("cup: second argument is not closed");
  return a.wedge(b);
}

/// Whether two closed forms represent the same class.
template <Field F>
bool class_equal(const LieAlgebra& g, const Form<F>& a, const Form<F>& b) {
  Form<F> diff = a - b;
  if (diff.is_zero()) return true;
  auto deg = diff.degree();
  if (!deg) throw Error("class_equal requires homogeneous forms of one degree");
  ComplexSlice<F> slice = cochain_slice<F>(g, *deg);
  return slice.b.contains(diff.coords(*deg));
}

/// <[alpha], [v]> for a closed form and a del-closed multivector of the same
/// degree; independent of representatives.
template <Field F>
F top_pairing(const LieAlgebra& g, const Form<F>& alpha, const Form<F>& v) {
  if (!cdiff(g, alpha).is_zero()) throw NotClosed("pairing: form is not closed");
  if (!boundary(g, v).is_zero()) throw NotClosed("pairing: multivector is not del-closed");
  return form_pairing(alpha, v);
}

}  // namespace paracoh
