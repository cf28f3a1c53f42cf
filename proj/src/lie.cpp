#include "paracoh/lie.hpp"

#include <sstream>

namespace paracoh {

namespace {

void check_constants(int dim, const StructureConstants& c) {
  if (dim < 1) throw Error("algebra dimension must be positive");
  if (dim > 9) throw IndexError("dimension capped at 9 (single-digit index notation)");
  for (const auto& [key, value] : c) {
    auto [l, m, k] = key;
    if (l >= m) throw IndexError("structure constant with l >= m");
    if (l < 1 || m > dim || k < 1 || k > dim) throw IndexError("structure constant index out of range");
    (void)value;
  }
}

}  // namespace

LieAlgebra LieAlgebra::create(int dim, StructureConstants constants) {
  check_constants(dim, constants);
  // drop explicit zeros so equality and rendering are canonical
  for (auto it = constants.begin(); it != constants.end();) {
    it = it->second.is_zero() ? constants.erase(it) : std::next(it);
  }
  if (auto violation = validate_jacobi(dim, constants)) {
    throw JacobiError("Jacobi identity fails: d^2 e^" + std::to_string(violation->generator) +
                      " = " + violation->residue);
  }
  return LieAlgebra(dim, std::move(constants));
}

std::optional<JacobiViolation> LieAlgebra::validate_jacobi(int dim, const StructureConstants& constants) {
  check_constants(dim, constants);
  LieAlgebra raw(dim, constants);
  for (int k = 1; k <= dim; ++k) {
    Form<Rational> d2 = cdiff(raw, raw.d_generator(k));
    if (!d2.is_zero()) return JacobiViolation{k, d2.str()};
  }
  return std::nullopt;
}

Form<Rational> LieAlgebra::d_generator(int k) const {
  Form<Rational> f(dim_);
  for (const auto& [key, value] : c_) {
    if (key[2] == k) f.add_term(IndexTuple{key[0], key[1]}, value);
  }
  return f;
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& x,
                                          const std::vector<Rational>& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_) {
    throw AmbientMismatch("bracket operand length != algebra dimension");
  }
  std::vector<Rational> out(static_cast<std::size_t>(dim_));
  for (const auto& [key, c] : c_) {
    auto [l, m, k] = key;
    // [e_l, e_m] = -c^k_{lm} e_k
    Rational coeff = x[static_cast<std::size_t>(l - 1)] * y[static_cast<std::size_t>(m - 1)] -
                     x[static_cast<std::size_t>(m - 1)] * y[static_cast<std::size_t>(l - 1)];
    if (!coeff.is_zero()) out[static_cast<std::size_t>(k - 1)] -= c * coeff;
  }
  return out;
}

Matrix<Rational> LieAlgebra::ad(const std::vector<Rational>& x) const {
  Matrix<Rational> m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    std::vector<Rational> img = bracket(x, basis_vector(j + 1));
    for (int i = 0; i < dim_; ++i) m(i, j) = img[static_cast<std::size_t>(i)];
  }
  return m;
}

std::vector<Rational> LieAlgebra::basis_vector(int i) const {
  std::vector<Rational> v(static_cast<std::size_t>(dim_));
  v[static_cast<std::size_t>(i - 1)] = Rational::one();
  return v;
}

std::string LieAlgebra::str() const {
  std::ostringstream os;
  os << "(";
  for (int k = 1; k <= dim_; ++k) {
    if (k > 1) os << ",";
    Form<Rational> d = d_generator(k);
    if (d.is_zero()) {
      os << "0";
      continue;
    }
    bool first = true;
    for (const auto& [idx, c] : d.terms()) {
      bool neg = c.is_negative();
      Rational mag = c.abs();
      if (first) {
        if (neg) os << "-";
        first = false;
      } else {
        os << (neg ? "-" : "+");
      }
      if (!mag.is_one()) os << mag.str() << "*";
      os << idx[0] << idx[1];
    }
  }
  os << ")";
  return os.str();
}

namespace {

Subspace<Rational> bracket_span(const LieAlgebra& g, const Subspace<Rational>& a,
                                const Subspace<Rational>& b) {
  std::vector<std::vector<Rational>> gens;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < b.dim(); ++j) {
      std::vector<Rational> v = g.bracket(a.basis_vector(i), b.basis_vector(j));
      bool zero = true;
      for (const Rational& x : v) zero = zero && x.is_zero();
      if (!zero) gens.push_back(std::move(v));
    }
  }
  return Subspace<Rational>::span(g.dim(), gens);
}

LcsReport descending_series(const LieAlgebra& g, bool derived) {
  LcsReport report;
  report.series.push_back(Subspace<Rational>::full(g.dim()));
  while (true) {
    const Subspace<Rational>& prev = report.series.back();
    Subspace<Rational> next =
        derived ? bracket_span(g, prev, prev) : bracket_span(g, prev, Subspace<Rational>::full(g.dim()));
    if (next.dim() == prev.dim()) break;  // stabilized (possibly at zero)
    report.series.push_back(next);
    if (next.dim() == 0) break;
  }
  if (report.series.back().dim() == 0) {
    report.step = static_cast<int>(report.series.size()) - 1;
  }
  return report;
}

}  // namespace

LcsReport lower_central_series(const LieAlgebra& g) { return descending_series(g, false); }

std::optional<int> subalgebra_step(const LieAlgebra& g, const Subspace<Rational>& h) {
  std::vector<int> dims{h.dim()};
  Subspace<Rational> cur = h;
  while (cur.dim() > 0) {
    Subspace<Rational> next = bracket_span(g, cur, h);
    if (next.dim() == cur.dim()) return std::nullopt;
    cur = next;
    dims.push_back(cur.dim());
  }
  return static_cast<int>(dims.size()) - 1;
}

LcsReport derived_series(const LieAlgebra& g) { return descending_series(g, true); }

bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).step.has_value(); }

bool is_solvable(const LieAlgebra& g) { return derived_series(g).step.has_value(); }

bool is_unimodular(const LieAlgebra& g) {
  bool traces_vanish = true;
  for (int i = 1; i <= g.dim(); ++i) {
    if (!trace(g.ad(g.basis_vector(i))).is_zero()) {
      traces_vanish = false;
      break;
    }
  }
  bool top_minus_one_closed = cdiff_matrix<Rational>(g, g.dim() - 1).is_zero();
  if (traces_vanish != top_minus_one_closed) {
    throw InternalCheckError("unimodularity criteria disagree on " + g.str());
  }
  return traces_vanish;
}

std::string to_string(SolvabilityFlag f) {
  switch (f) {
    case SolvabilityFlag::nilpotent: return "nilpotent";
    case SolvabilityFlag::solvable_real_spectrum: return "solvable_real_spectrum";
    case SolvabilityFlag::solvable_unknown: return "solvable_unknown";
    case SolvabilityFlag::not_solvable: return "not_solvable";
  }
  return "?";
}

SolvabilityFlag completely_solvable_flag(const LieAlgebra& g) {
  if (is_nilpotent(g)) return SolvabilityFlag::nilpotent;
  if (!is_solvable(g)) return SolvabilityFlag::not_solvable;
  for (int i = 1; i <= g.dim(); ++i) {
    Polynomial p = char_poly(g.ad(g.basis_vector(i)));
    Polynomial sf = squarefree_part(p);
    if (sturm_real_root_count(p) != sf.degree()) return SolvabilityFlag::solvable_unknown;
  }
  return SolvabilityFlag::solvable_real_spectrum;
}

Polynomial char_poly(const Matrix<Rational>& m) {
  if (m.rows() != m.cols()) throw Error("char_poly of non-square matrix");
  int n = m.rows();
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[static_cast<std::size_t>(n)] = Rational::one();
  Matrix<Rational> mk = Matrix<Rational>::identity(n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk;
    Rational ck = -(trace(mk) / Rational(k));
    coeffs[static_cast<std::size_t>(n - k)] = ck;
    for (int i = 0; i < n; ++i) mk(i, i) += ck;
  }
  return Polynomial(std::move(coeffs));
}

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
  int n1 = g1.dim();
  if (n1 + g2.dim() > 9) throw IndexError("direct sum exceeds the dimension cap of 9");
  StructureConstants c = g1.constants();
  for (const auto& [key, value] : g2.constants()) {
    c[{key[0] + n1, key[1] + n1, key[2] + n1}] = value;
  }
  return LieAlgebra::create(n1 + g2.dim(), std::move(c));
}

}  // namespace paracoh
