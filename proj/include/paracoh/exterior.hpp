#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "paracoh/field.hpp"
#include "paracoh/matrix.hpp"

namespace paracoh {

/// Strictly increasing 1-based index tuple, e.g. {1,4} for e^{14}.
using IndexTuple = std::vector<int>;

/// All ell-subsets of {1..n} in lexicographic order. This ordering is part of
/// the report format: coordinates, matrices and rendered forms all use it.
std::vector<IndexTuple> monomial_basis(int n, int ell);

/// Index of a tuple in monomial_basis(n, |t|), by binomial ranking.
int monomial_rank(int n, const IndexTuple& t);

long binomial(int n, int k);

/// Sorts t in place; returns the permutation sign, or 0 if an index repeats.
int sort_index_tuple(IndexTuple& t);

/// Graded exterior-algebra element with exact coefficients, indexed by
/// strictly increasing tuples. Also used for multivectors: the chain side
/// carries the same shape with lower indices understood.
template <Field F>
class Form {
public:
  explicit Form(int n) : n_(n) {}

  static Form zero(int n) { return Form(n); }

  static Form monomial(int n, IndexTuple idx, F coeff = F::one()) {
    Form f(n);
    f.add_term(std::move(idx), std::move(coeff));
    return f;
  }

  static Form scalar(int n, F value) {
    Form f(n);
    f.add_term(IndexTuple{}, std::move(value));
    return f;
  }

  int ambient() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IndexTuple, F>& terms() const { return terms_; }

  /// Homogeneous degree; nullopt for the zero form or a mixed-degree element.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    std::size_t d = terms_.begin()->first.size();
    for (const auto& [idx, c] : terms_) {
      if (idx.size() != d) return std::nullopt;
    }
    return static_cast<int>(d);
  }

  bool is_homogeneous(int ell) const {
    if (terms_.empty()) return true;
    auto d = degree();
    return d.has_value() && *d == ell;
  }

  Form& add_term(IndexTuple idx, F c) {
    if (c.is_zero()) return *this;
    int sign = sort_index_tuple(idx);
    if (sign == 0) return *this;
    for (int i : idx) {
      if (i < 1 || i > n_) throw AmbientMismatch("form index out of range");
    }
    if (sign < 0) c = -c;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
      terms_.emplace(std::move(idx), std::move(c));
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  Form operator+(const Form& o) const {
    require_same_ambient(o);
    Form r = *this;
    for (const auto& [idx, c] : o.terms_) r.add_term(idx, c);
    return r;
  }

  Form operator-(const Form& o) const { return *this + o.scaled(-F::one()); }

  Form scaled(const F& s) const {
    Form r(n_);
    if (s.is_zero()) return r;
    for (const auto& [idx, c] : terms_) r.terms_.emplace(idx, c * s);
    return r;
  }

  Form operator-() const { return scaled(-F::one()); }

  bool operator==(const Form& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const Form& o) const { return !(*this == o); }

  /// Graded-commutative product; Koszul sign via sorting-permutation parity.
  Form wedge(const Form& o) const {
    require_same_ambient(o);
    Form r(n_);
    for (const auto& [ta, ca] : terms_) {
      for (const auto& [tb, cb] : o.terms_) {
        IndexTuple merged = ta;
        merged.insert(merged.end(), tb.begin(), tb.end());
        r.add_term(std::move(merged), ca * cb);
      }
    }
    return r;
  }

  /// Coordinates in the lex monomial basis of degree ell; the form must be
  /// homogeneous of that degree (the zero form qualifies for any).
  std::vector<F> coords(int ell) const {
    if (!is_homogeneous(ell)) throw Error("coords: form is not homogeneous of the requested degree");
    std::vector<F> v(static_cast<std::size_t>(binomial(n_, ell)), F::zero());
    for (const auto& [idx, c] : terms_) v[static_cast<std::size_t>(monomial_rank(n_, idx))] = c;
    return v;
  }

  static Form from_coords(int n, int ell, const std::vector<F>& v) {
    std::vector<IndexTuple> basis = monomial_basis(n, ell);
    if (v.size() != basis.size()) throw Error("from_coords: coordinate length mismatch");
    Form f(n);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) f.terms_.emplace(basis[i], v[i]);
    }
    return f;
  }

  /// "e14 + 2*e23 - 1/2*e56"; lexicographic term order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
      std::string cs = coeff_str(c);
      bool neg = !cs.empty() && cs[0] == '-';
      std::string mag = neg ? cs.substr(1) : cs;
      if (first) {
        if (neg) os << "-";
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      if (idx.empty()) {
        os << mag;
        continue;
      }
      if (mag != "1") os << mag << "*";
      os << "e";
      for (int i : idx) os << i;
    }
    return os.str();
  }

private:
  void require_same_ambient(const Form& o) const {
    if (n_ != o.n_) throw AmbientMismatch("forms over different ambient dimensions");
  }

  static std::string coeff_str(const Rational& c) { return c.str(); }
  static std::string coeff_str(const RationalFunction& c) {
    if (c.is_constant()) return c.num().is_zero() ? "0" : c.num().coeff(0).str();
    return "(" + c.str() + ")";
  }

  int n_;
  std::map<IndexTuple, F> terms_;
};

template <Field F>
using Multivector = Form<F>;

/// Monomial-basis contraction <alpha, v> = sum over matching tuples.
template <Field F>
F form_pairing(const Form<F>& alpha, const Form<F>& v) {
  if (alpha.ambient() != v.ambient()) throw AmbientMismatch("pairing over different ambients");
  F acc = F::zero();
  const auto& a = alpha.terms();
  const auto& b = v.terms();
  auto it = a.begin();
  auto jt = b.begin();
  while (it != a.end() && jt != b.end()) {
    if (it->first < jt->first) {
      ++it;
    } else if (jt->first < it->first) {
      ++jt;
    } else {
      acc = acc + it->second * jt->second;
      ++it;
      ++jt;
    }
  }
  return acc;
}

/// Parses the rendering produced by Form::str over Q, e.g.
/// "e14 + 2*e23 - 1/2*e56". Only single-digit indices exist (n <= 9).
Form<Rational> parse_form(int n, const std::string& text);

}  // namespace paracoh
