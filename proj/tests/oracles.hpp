// Test-side oracles, independent of the library code paths they check.
#pragma once

#include <random>
#include <vector>

#include "paracoh/exterior.hpp"
#include "paracoh/polynomial.hpp"

namespace oracles {

using paracoh::Form;
using paracoh::IndexTuple;
using paracoh::Polynomial;
using paracoh::Rational;

// ---- permutation sign via determinant of the permutation matrix ----
// (cofactor expansion over integers; shares nothing with the insertion-sort
// sign in the library)

inline long perm_matrix_det(std::vector<std::vector<long>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) row.push_back(m[i][j]);
      }
      minor.push_back(row);
    }
    long sign = col % 2 == 0 ? 1 : -1;
    return sign * m[0][col] * perm_matrix_det(minor);
  }
  return 0;
}

// sign of the permutation taking `seq` to sorted order; 0 on duplicates
inline int permutation_sign(const IndexTuple& seq) {
  IndexTuple sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) return 0;
  }
  std::size_t n = seq.size();
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t target =
        static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), seq[i]) - sorted.begin());
    m[i][target] = 1;
  }
  return static_cast<int>(perm_matrix_det(m));
}

// ---- Descartes-bound bisection (VCA) real-root isolation over Q ----
// Counts distinct real roots of a squarefree polynomial by exact interval
// bisection; never touches the Sturm chain.

inline int descartes_variations(const Polynomial& p) {
  int count = 0, prev = 0;
  for (const Rational& c : p.coeffs()) {
    int s = c.sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// maps (a, b) to (0, inf): q(x) = (x+1)^n p((a + b x)/(1 + x)); positive-root
// variations of q bound the roots of p in (a, b)
inline Polynomial interval_transform(const Polynomial& p, const Rational& a, const Rational& b) {
  int n = p.degree();
  Polynomial num = Polynomial(std::vector<Rational>{a, b});       // a + b x
  Polynomial den = Polynomial(std::vector<Rational>{Rational(1), Rational(1)});  // 1 + x
  Polynomial acc;
  for (int i = 0; i <= n; ++i) {
    if (p.coeff(i).is_zero()) continue;
    acc = acc + (num.pow(static_cast<unsigned>(i)) * den.pow(static_cast<unsigned>(n - i)))
                    .scaled(p.coeff(i));
  }
  return acc;
}

// distinct roots in the open interval (a, b); p squarefree, p(a) != 0, p(b) != 0
inline int vca_count(const Polynomial& p, const Rational& a, const Rational& b) {
  int v = descartes_variations(interval_transform(p, a, b));
  if (v == 0) return 0;
  if (v == 1) return 1;
  Rational mid = (a + b) / Rational(2);
  int at_mid = p.eval(mid).is_zero() ? 1 : 0;
  return vca_count(p, a, mid) + at_mid + vca_count(p, mid, b);
}

// distinct real roots of an arbitrary nonzero polynomial over all of R
inline int bisection_real_root_count(const Polynomial& p) {
  Polynomial f = paracoh::squarefree_part(p);
  if (f.degree() <= 0) return 0;
  Rational bound = Rational(1);
  Rational lead = f.leading().abs();
  for (const Rational& c : f.coeffs()) {
    Rational ratio = c.abs() / lead;
    if (ratio > bound) bound = ratio;
  }
  bound = bound + Rational(1);  // strict Cauchy bound: all roots in (-B, B)
  return vca_count(f, -bound, bound);
}

// ---- random generators with fixed-seed determinism ----

inline Rational random_rational(std::mt19937_64& rng, int num_range = 20, int den_range = 12) {
  std::uniform_int_distribution<long> num(-num_range, num_range);
  std::uniform_int_distribution<long> den(1, den_range);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng) {
  while (true) {
    Rational r = random_rational(rng);
    if (!r.is_zero()) return r;
  }
}

// polynomial with known real-root count: distinct rational roots times
// root-free quadratics (x^2 + positive)
struct KnownRootsPoly {
  Polynomial p;
  int distinct_real_roots = 0;
};

inline KnownRootsPoly random_known_roots_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nlin(0, 3), nquad(0, 1), rootpick(-6, 6), shift(1, 5);
  KnownRootsPoly out;
  out.p = Polynomial::one();
  std::vector<Rational> used;
  int lin = nlin(rng);
  for (int i = 0; i < lin; ++i) {
    Rational root(rootpick(rng), 1 + (i % 2));  // mixes integers and halves
    bool dup = false;
    for (const Rational& u : used) dup = dup || u == root;
    if (dup) continue;
    used.push_back(root);
    out.p = out.p * Polynomial(std::vector<Rational>{-root, Rational(1)});
    ++out.distinct_real_roots;
  }
  int quad = nquad(rng);
  for (int i = 0; i < quad; ++i) {
    out.p = out.p * Polynomial(std::vector<Rational>{Rational(shift(rng)), Rational(0), Rational(1)});
  }
  return out;
}

inline Form<Rational> random_form(std::mt19937_64& rng, int n, int degree, int terms = 3) {
  Form<Rational> f(n);
  std::vector<IndexTuple> basis = paracoh::monomial_basis(n, degree);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int t = 0; t < terms; ++t) {
    f.add_term(basis[pick(rng)], random_rational(rng, 6, 4));
  }
  return f;
}

}  // namespace oracles
