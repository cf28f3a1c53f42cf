#include "paracoh/paracomplex.hpp"

namespace paracoh {

namespace {

bool span_closed(const LieAlgebra& g, const Subspace<Rational>& h) {
  for (int i = 0; i < h.dim(); ++i) {
    for (int j = i + 1; j < h.dim(); ++j) {
      if (!h.contains(g.bracket(h.basis_vector(i), h.basis_vector(j)))) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<ParaStructure<Rational>> random_paracomplex(const LieAlgebra& g, std::uint64_t seed,
                                                          bool require_integrable,
                                                          int max_attempts) {
  int n = g.dim();
  if (n % 2 != 0) throw EigenspaceImbalance("random_paracomplex needs an even-dimensional algebra");
  int half = n / 2;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> box(-2, 2);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Matrix<Rational> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rational(box(rng));
    // K = M D M^{-1} has the first/last half column spans as eigenspaces, so
    // the (cheap) rejection tests run on the spans before any inversion.
    std::vector<std::vector<Rational>> pc, mc;
    for (int j = 0; j < half; ++j) pc.push_back(m.col(j));
    for (int j = half; j < n; ++j) mc.push_back(m.col(j));
    Subspace<Rational> plus = Subspace<Rational>::span(n, pc);
    Subspace<Rational> minus = Subspace<Rational>::span(n, mc);
    if (plus.dim() != half || minus.dim() != half) continue;
    if (subspace_sum(plus, minus).dim() != n) continue;
    if (require_integrable && !(span_closed(g, plus) && span_closed(g, minus))) continue;
    Matrix<Rational> p(n, n);
    for (int j = 0; j < half; ++j)
      for (int i = 0; i < n; ++i) p(i, j) = plus.basis()(j, i);
    for (int j = 0; j < half; ++j)
      for (int i = 0; i < n; ++i) p(i, half + j) = minus.basis()(j, i);
    auto pinv = inverse(p);
    if (!pinv) throw InternalCheckError("complementary eigenspaces gave a singular basis");
    Matrix<Rational> d(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = Rational(i < half ? 1 : -1);
    ParaStructure<Rational> ps = validate_para(p * d * *pinv, g);
    if (require_integrable && !integrability(ps, g).integrable()) {
      throw InternalCheckError("span-level closure disagrees with the integrability report");
    }
    return ps;
  }
  return std::nullopt;
}

}  // namespace paracoh
