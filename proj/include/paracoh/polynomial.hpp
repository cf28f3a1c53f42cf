#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paracoh/rational.hpp"

namespace paracoh {

/// Univariate polynomial over Q. Coefficient i is the coefficient of t^i;
/// trailing zeros are trimmed, so the zero polynomial has empty storage.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return constant(Rational::one()); }
  static Polynomial constant(const Rational& r);
  static Polynomial t();  // the variable

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  // degree of zero polynomial is -1 by convention
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const { return c_.empty() ? Rational::zero() : c_.back(); }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& r) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // quotient and remainder of exact division over Q; divisor nonzero
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  Polynomial derivative() const;
  Rational eval(const Rational& t0) const;
  Polynomial monic() const;  // leading coefficient scaled to 1; zero stays zero
  Polynomial pow(unsigned e) const;

  std::string str(const std::string& var = "t") const;

private:
  void trim();
  std::vector<Rational> c_;
};

// gcd via the subresultant pseudo-remainder sequence on integer-primitive
// parts; result is monic (or zero when both inputs are zero).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// p / gcd(p, p'): same distinct roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

/// Number of distinct real roots of p in (lo, hi]; an unset bound means
/// -infinity / +infinity. Throws ZeroPolynomialError on the zero polynomial.
int sturm_real_root_count(const Polynomial& p, std::optional<Rational> lo = std::nullopt,
                          std::optional<Rational> hi = std::nullopt);

/// Element of Q(t): numerator/denominator in lowest terms, denominator monic.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(Polynomial::one()) {}
  RationalFunction(long n) : num_(Polynomial::constant(Rational(n))), den_(Polynomial::one()) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(const Rational& r)
      : num_(Polynomial::constant(r)), den_(Polynomial::one()) {}

  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return RationalFunction(1); }
  static RationalFunction t() { return RationalFunction(Polynomial::t(), Polynomial::one()); }
  static RationalFunction from_rational(const Rational& r) { return RationalFunction(r); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { *this = *this + o; return *this; }
  RationalFunction& operator-=(const RationalFunction& o) { *this = *this - o; return *this; }
  RationalFunction& operator*=(const RationalFunction& o) { *this = *this * o; return *this; }
  RationalFunction& operator/=(const RationalFunction& o) { *this = *this / o; return *this; }
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction inverse() const;

  // exact evaluation; throws PoleError when the denominator vanishes at t0
  Rational eval(const Rational& t0) const;
  bool has_pole_at(const Rational& t0) const { return den_.eval(t0).is_zero(); }

  std::string str(const std::string& var = "t") const;

private:
  Polynomial num_, den_;
};

}  // namespace paracoh
