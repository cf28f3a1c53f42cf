#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>

#include "paracoh/lie.hpp"

namespace paracoh {

/// Bracket with coefficients in an extension field of Q, same sign authority
/// as LieAlgebra::bracket.
template <Field F>
std::vector<F> bracket_in(const LieAlgebra& g, const std::vector<F>& x, const std::vector<F>& y) {
  if (static_cast<int>(x.size()) != g.dim() || static_cast<int>(y.size()) != g.dim()) {
    throw AmbientMismatch("bracket operand length != algebra dimension");
  }
  std::vector<F> out(static_cast<std::size_t>(g.dim()), F::zero());
  for (const auto& [key, c] : g.constants()) {
    auto [l, m, k] = key;
    F coeff = x[static_cast<std::size_t>(l - 1)] * y[static_cast<std::size_t>(m - 1)] -
              x[static_cast<std::size_t>(m - 1)] * y[static_cast<std::size_t>(l - 1)];
    if (!coeff.is_zero()) {
      out[static_cast<std::size_t>(k - 1)] = out[static_cast<std::size_t>(k - 1)] - F::from_rational(c) * coeff;
    }
  }
  return out;
}

/// Almost D-complex structure: an involution of g with equidimensional
/// eigenspaces, together with the adapted frame data the bigrading needs.
/// eigenbasis columns are a plus-basis followed by a minus-basis; coframe is
/// its inverse, so coframe row i is the adapted covector f^i (rows 1..n/2
/// annihilate g^-, rows n/2+1..n annihilate g^+).
template <Field F>
struct ParaStructure {
  Matrix<F> k;
  Subspace<F> g_plus{0}, g_minus{0};
  Matrix<F> eigenbasis;
  Matrix<F> coframe;
  int n = 0, half = 0;
};

template <Field F>
ParaStructure<F> validate_para(const Matrix<F>& k, const LieAlgebra& g) {
  int n = g.dim();
  if (k.rows() != n || k.cols() != n) {
    throw AmbientMismatch("K must be a square matrix matching the algebra dimension");
  }
  Matrix<F> k2 = k * k;
  if (!(k2 == Matrix<F>::identity(n))) throw NotInvolution("K^2 != identity");
  Matrix<F> id = Matrix<F>::identity(n);
  Subspace<F> plus = Subspace<F>::span(n, kernel_basis(k - id));
  Subspace<F> minus = Subspace<F>::span(n, kernel_basis(k + id));
  if (n % 2 != 0 || plus.dim() != n / 2 || minus.dim() != n / 2) {
    throw EigenspaceImbalance("eigenspace dimensions " + std::to_string(plus.dim()) + "/" +
                              std::to_string(minus.dim()) + " are not both " +
                              std::to_string(n) + "/2");
  }
  ParaStructure<F> ps;
  ps.k = k;
  ps.g_plus = plus;
  ps.g_minus = minus;
  ps.n = n;
  ps.half = n / 2;
  ps.eigenbasis = Matrix<F>(n, n);
  for (int j = 0; j < ps.half; ++j) {
    for (int i = 0; i < n; ++i) ps.eigenbasis(i, j) = plus.basis()(j, i);
  }
  for (int j = 0; j < ps.half; ++j) {
    for (int i = 0; i < n; ++i) ps.eigenbasis(i, ps.half + j) = minus.basis()(j, i);
  }
  auto inv = inverse(ps.eigenbasis);
  if (!inv) throw InternalCheckError("eigenbasis not invertible");
  ps.coframe = *inv;
  return ps;
}

/// N_K(x, y) = [x,y] + [Kx,Ky] - K[Kx,y] - K[x,Ky]; bilinear, antisymmetric,
/// vanishes identically iff both eigenspaces are subalgebras.
template <Field F>
std::vector<F> nijenhuis(const ParaStructure<F>& ps, const LieAlgebra& g, const std::vector<F>& x,
                         const std::vector<F>& y) {
  std::vector<F> kx = ps.k.apply(x);
  std::vector<F> ky = ps.k.apply(y);
  std::vector<F> a = bracket_in(g, x, y);
  std::vector<F> b = bracket_in(g, kx, ky);
  std::vector<F> c = ps.k.apply(bracket_in(g, kx, y));
  std::vector<F> d = ps.k.apply(bracket_in(g, x, ky));
  std::vector<F> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i] - c[i] - d[i];
  return out;
}

struct IntegrabilityReport {
  bool plus_closed = false;
  bool minus_closed = false;
  bool nijenhuis_zero = false;
  std::string witness;  // first offending bracket, when not integrable
  bool integrable() const { return plus_closed && minus_closed; }
};

namespace detail {
template <Field F>
bool subalgebra_closed(const LieAlgebra& g, const Subspace<F>& h, std::string* witness) {
  for (int i = 0; i < h.dim(); ++i) {
    for (int j = i + 1; j < h.dim(); ++j) {
      std::vector<F> br = bracket_in(g, h.basis_vector(i), h.basis_vector(j));
      if (!h.contains(br)) {
        if (witness && witness->empty()) {
          Form<F> v1(g.dim()), v2(g.dim()), bf(g.dim());
          for (int t = 0; t < g.dim(); ++t) {
            v1.add_term({t + 1}, h.basis()(i, t));
            v2.add_term({t + 1}, h.basis()(j, t));
            bf.add_term({t + 1}, br[static_cast<std::size_t>(t)]);
          }
          *witness = "[" + v1.str() + ", " + v2.str() + "] = " + bf.str() + " (indices name basis vectors)";
        }
        return false;
      }
    }
  }
  return true;
}
}  // namespace detail

/// Subalgebra closure of both eigenspaces, cross-checked against Nijenhuis
/// vanishing on all basis pairs; the two criteria must agree.
template <Field F>
IntegrabilityReport integrability(const ParaStructure<F>& ps, const LieAlgebra& g) {
  IntegrabilityReport rep;
  rep.plus_closed = detail::subalgebra_closed(g, ps.g_plus, &rep.witness);
  rep.minus_closed = detail::subalgebra_closed(g, ps.g_minus, &rep.witness);
  rep.nijenhuis_zero = true;
  for (int i = 1; i <= g.dim() && rep.nijenhuis_zero; ++i) {
    for (int j = i + 1; j <= g.dim() && rep.nijenhuis_zero; ++j) {
      std::vector<F> x(static_cast<std::size_t>(g.dim()), F::zero());
      std::vector<F> y(static_cast<std::size_t>(g.dim()), F::zero());
      x[static_cast<std::size_t>(i - 1)] = F::one();
      y[static_cast<std::size_t>(j - 1)] = F::one();
      for (const F& c : nijenhuis(ps, g, x, y)) {
        if (!c.is_zero()) {
          rep.nijenhuis_zero = false;
          break;
        }
      }
    }
  }
  if (rep.nijenhuis_zero != (rep.plus_closed && rep.minus_closed)) {
    throw InternalCheckError("integrability criteria disagree");
  }
  return rep;
}

template <Field F>
bool is_abelian_structure(const ParaStructure<F>& ps, const LieAlgebra& g) {
  auto vanishes = [&](const Subspace<F>& h) {
    for (int i = 0; i < h.dim(); ++i) {
      for (int j = i + 1; j < h.dim(); ++j) {
        for (const F& c : bracket_in(g, h.basis_vector(i), h.basis_vector(j))) {
          if (!c.is_zero()) return false;
        }
      }
    }
    return true;
  };
  return vanishes(ps.g_plus) && vanishes(ps.g_minus);
}

// ---- bigrading ----

namespace detail {

/// Rewrites a graded element through a generator substitution: generator j
/// maps to sum_i M(j-1, i-1) * (new generator i).
template <Field F>
Form<F> substitute_generators(const Form<F>& src, const Matrix<F>& m) {
  int n = src.ambient();
  Form<F> out(n);
  for (const auto& [idx, coeff] : src.terms()) {
    Form<F> acc = Form<F>::scalar(n, coeff);
    for (int j : idx) {
      Form<F> gen(n);
      for (int i = 0; i < n; ++i) {
        if (!m(j - 1, i).is_zero()) gen.add_term({i + 1}, m(j - 1, i));
      }
      acc = acc.wedge(gen);
    }
    out = out + acc;
  }
  return out;
}

}  // namespace detail

/// Standard-coordinate form -> adapted coframe coordinates (indices then name
/// f^1..f^n, the first half dual to g^+).
template <Field F>
Form<F> form_to_adapted(const ParaStructure<F>& ps, const Form<F>& standard) {
  return detail::substitute_generators(standard, ps.eigenbasis);  // e^j = sum_i P_{ji} f^i
}

template <Field F>
Form<F> form_to_standard(const ParaStructure<F>& ps, const Form<F>& adapted) {
  return detail::substitute_generators(adapted, ps.coframe);  // f^i = sum_j C_{ij} e^j
}

/// Multivector versions: adapted basis vectors are the eigenbasis columns.
template <Field F>
Form<F> multivector_to_adapted(const ParaStructure<F>& ps, const Form<F>& standard) {
  return detail::substitute_generators(standard, ps.coframe.transpose());  // e_j = sum_i C_{ij} p_i
}

template <Field F>
Form<F> multivector_to_standard(const ParaStructure<F>& ps, const Form<F>& adapted) {
  return detail::substitute_generators(adapted, ps.eigenbasis.transpose());  // p_i = sum_j P_{ji} e_j
}

/// (p, q) of an adapted index tuple: p indices in the plus coframe half.
inline std::pair<int, int> adapted_signature(const IndexTuple& idx, int half) {
  int p = 0;
  for (int i : idx) {
    if (i <= half) ++p;
  }
  return {p, static_cast<int>(idx.size()) - p};
}

/// Bidegree of a form, when homogeneous in the adapted bigrading.
template <Field F>
std::optional<std::pair<int, int>> bidegree_of(const ParaStructure<F>& ps, const Form<F>& form) {
  Form<F> ad = form_to_adapted(ps, form);
  if (ad.is_zero()) return std::nullopt;
  std::optional<std::pair<int, int>> sig;
  for (const auto& [idx, c] : ad.terms()) {
    auto s = adapted_signature(idx, ps.half);
    if (sig && *sig != s) return std::nullopt;
    sig = s;
  }
  return sig;
}

/// Direct-sum decomposition of Lambda^ell into Lambda^{(p,q)} subspaces in
/// standard monomial coordinates. K acts on the (p,q) block as (+1)^p (-1)^q.
template <Field F>
std::map<std::pair<int, int>, Subspace<F>> bigrade_projectors(const ParaStructure<F>& ps, int ell) {
  std::map<std::pair<int, int>, std::vector<std::vector<F>>> gens;
  for (int p = 0; p <= ell; ++p) {
    if (p <= ps.half && ell - p <= ps.half) gens[{p, ell - p}] = {};
  }
  long dim = binomial(ps.n, ell);
  for (const IndexTuple& s : monomial_basis(ps.n, ell)) {
    auto sig = adapted_signature(s, ps.half);
    Form<F> standard = form_to_standard(ps, Form<F>::monomial(ps.n, s));
    gens[sig].push_back(standard.coords(ell));
  }
  std::map<std::pair<int, int>, Subspace<F>> out;
  for (auto& [sig, rows] : gens) {
    out.emplace(sig, Subspace<F>::span(static_cast<int>(dim), rows));
  }
  return out;
}

namespace detail {
template <Field F>
Subspace<F> parity_subspace(const ParaStructure<F>& ps, int ell, int parity, bool multivector) {
  long dim = binomial(ps.n, ell);
  std::vector<std::vector<F>> gens;
  for (const IndexTuple& s : monomial_basis(ps.n, ell)) {
    auto [p, q] = adapted_signature(s, ps.half);
    if (q % 2 != parity) continue;
    Form<F> standard = multivector ? multivector_to_standard(ps, Form<F>::monomial(ps.n, s))
                                   : form_to_standard(ps, Form<F>::monomial(ps.n, s));
    gens.push_back(standard.coords(ell));
  }
  return Subspace<F>::span(static_cast<int>(dim), gens);
}
}  // namespace detail

/// Lambda^{ell+} (q even) and Lambda^{ell-} (q odd) in standard coordinates.
template <Field F>
Subspace<F> form_plus_subspace(const ParaStructure<F>& ps, int ell) {
  return detail::parity_subspace(ps, ell, 0, false);
}
template <Field F>
Subspace<F> form_minus_subspace(const ParaStructure<F>& ps, int ell) {
  return detail::parity_subspace(ps, ell, 1, false);
}
template <Field F>
Subspace<F> multivector_plus_subspace(const ParaStructure<F>& ps, int ell) {
  return detail::parity_subspace(ps, ell, 0, true);
}
template <Field F>
Subspace<F> multivector_minus_subspace(const ParaStructure<F>& ps, int ell) {
  return detail::parity_subspace(ps, ell, 1, true);
}

/// K extended to Lambda^ell covectors (K alpha = alpha o K), computed by
/// substituting e^j -> sum_i K_{ji} e^i term by term. Independent of the
/// adapted-frame route, which is exactly why witness checks use it.
template <Field F>
Form<F> k_action_on_form(const ParaStructure<F>& ps, const Form<F>& form) {
  return detail::substitute_generators(form, ps.k);
}

/// d = del_+ + del_- on a form of pure bidegree (p,q): returns the
/// (p+1, q) and (p, q+1) components. Defined only for integrable structures;
/// refuses (rather than projecting) when d leaks outside the two targets.
template <Field F>
std::pair<Form<F>, Form<F>> dee_split(const ParaStructure<F>& ps, const LieAlgebra& g,
                                      const Form<F>& a) {
  auto bid = bidegree_of(ps, a);
  if (!bid && !a.is_zero()) throw Error("dee_split requires a form of pure bidegree");
  Form<F> da = cdiff(g, a);
  Form<F> plus(g.dim()), minus(g.dim());
  if (da.is_zero()) return {plus, minus};
  Form<F> ad = form_to_adapted(ps, da);
  Form<F> plus_ad(g.dim()), minus_ad(g.dim());
  for (const auto& [idx, c] : ad.terms()) {
    auto s = adapted_signature(idx, ps.half);
    if (s.first == bid->first + 1 && s.second == bid->second) {
      plus_ad.add_term(idx, c);
    } else if (s.first == bid->first && s.second == bid->second + 1) {
      minus_ad.add_term(idx, c);
    } else {
      throw NotIntegrable("d leaks into bidegree (" + std::to_string(s.first) + "," +
                          std::to_string(s.second) + ") from (" + std::to_string(bid->first) +
                          "," + std::to_string(bid->second) + ")");
    }
  }
  return {form_to_standard(ps, plus_ad), form_to_standard(ps, minus_ad)};
}

// ---- randomized generation ----

/// Draws K = M D M^{-1} with D the standard diagonal split and M a random
/// integer matrix; K^2 = I and equidimensionality hold by construction, so
/// only integrability needs rejection. Deterministic for a given seed.
std::optional<ParaStructure<Rational>> random_paracomplex(const LieAlgebra& g, std::uint64_t seed,
                                                          bool require_integrable,
                                                          int max_attempts);

}  // namespace paracoh
