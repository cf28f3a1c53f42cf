#include "paracoh/polynomial.hpp"

#include <sstream>

namespace paracoh {

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& r) {
  if (r.is_zero()) return Polynomial();
  return Polynomial(std::vector<Rational>{r});
}

Polynomial Polynomial::t() {
  return Polynomial(std::vector<Rational>{Rational::zero(), Rational::one()});
}

const Rational& Polynomial::coeff(int i) const {
  static const Rational kZero;
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled(const Rational& s) const {
  if (s.is_zero()) return Polynomial();
  std::vector<Rational> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
  return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw ZeroPolynomialError();
  Polynomial rem = *this;
  if (rem.degree() < divisor.degree()) return {Polynomial(), rem};
  std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1);
  Rational lead_inv = divisor.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    int shift = rem.degree() - divisor.degree();
    Rational factor = rem.leading() * lead_inv;
    q[static_cast<std::size_t>(shift)] = factor;
    std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational::zero());
    sub.push_back(factor);
    rem = rem - divisor * Polynomial(std::move(sub));
  }
  return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(r));
}

Rational Polynomial::eval(const Rational& t0) const {
  Rational acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t0 + c_[i];
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return Polynomial();
  return scaled(leading().inverse());
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc = Polynomial::one();
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (first) {
      if (c.is_negative()) os << "-";
      first = false;
    } else {
      os << (c.is_negative() ? " - " : " + ");
    }
    if (i == 0) {
      os << a.str();
    } else {
      if (!a.is_one()) os << a.str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// Clears denominators and divides by integer content: primitive integer
// coefficient vector plus its sign normalization (leading > 0).
struct PrimitivePart {
  std::vector<mpz_class> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
};

PrimitivePart primitive_of(const Polynomial& p) {
  PrimitivePart out;
  if (p.is_zero()) return out;
  mpz_class common_den = 1;
  for (const Rational& r : p.coeffs()) {
    mpz_class den = r.denominator();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), common_den.get_mpz_t(), den.get_mpz_t());
    common_den = common_den / g * den;
  }
  out.c.resize(p.coeffs().size());
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    const Rational& r = p.coeffs()[i];
    out.c[i] = r.numerator() * (common_den / r.denominator());
  }
  mpz_class content = 0;
  for (const mpz_class& z : out.c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
  if (content != 0) {
    for (mpz_class& z : out.c) z /= content;
  }
  if (out.c.back() < 0) {
    for (mpz_class& z : out.c) z = -z;
  }
  return out;
}

// pseudo-remainder: prem(a, b) with a, b integer polynomials, deg a >= deg b
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  const mpz_class& lb = b.back();
  int da = static_cast<int>(a.size()) - 1;
  int db = static_cast<int>(b.size()) - 1;
  for (int k = da; k >= db; --k) {
    mpz_class top = a[static_cast<std::size_t>(k)];
    for (int i = 0; i <= k; ++i) {
      std::size_t ui = static_cast<std::size_t>(i);
      a[ui] *= lb;
      int j = i - (k - db);
      if (j >= 0 && j <= db) a[ui] -= top * b[static_cast<std::size_t>(j)];
    }
  }
  a.resize(static_cast<std::size_t>(db));
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  std::vector<mpz_class> f = primitive_of(a).c;
  std::vector<mpz_class> g = primitive_of(b).c;
  if (f.size() < g.size()) std::swap(f, g);
  // Brown's subresultant PRS: each pseudo-remainder is exactly divisible by
  // beta = lc * h^delta, which keeps coefficient growth polynomial.
  mpz_class lc = 1, h = 1;
  while (true) {
    int delta = static_cast<int>(f.size()) - static_cast<int>(g.size());
    std::vector<mpz_class> r = pseudo_rem(f, g);
    if (r.empty()) break;
    if (r.size() == 1) return Polynomial::one();
    mpz_class beta = lc;
    for (int i = 0; i < delta; ++i) beta *= h;
    for (mpz_class& z : r) z /= beta;
    f = std::move(g);
    g = std::move(r);
    lc = f.back();
    if (delta >= 1) {
      mpz_class hn = 1;
      for (int i = 0; i < delta; ++i) hn *= lc;
      for (int i = 0; i < delta - 1; ++i) hn /= h;
      h = hn;
    }
  }
  // g is the gcd up to content; normalize to primitive then monic over Q
  mpz_class content = 0;
  for (const mpz_class& z : g) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
  std::vector<Rational> coeffs(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) coeffs[i] = Rational(mpq_class(g[i] / content));
  return Polynomial(std::move(coeffs)).monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  if (p.degree() == 0) return Polynomial::one();
  Polynomial g = poly_gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

namespace {

int sign_at(const Polynomial& p, const std::optional<Rational>& point, bool at_plus_inf) {
  if (point.has_value()) return p.eval(*point).sign();
  if (p.is_zero()) return 0;
  int lead = p.leading().sign();
  if (at_plus_inf) return lead;
  return p.degree() % 2 == 0 ? lead : -lead;
}

int sign_variations(const std::vector<Polynomial>& chain, const std::optional<Rational>& point,
                    bool at_plus_inf) {
  int count = 0, prev = 0;
  for (const Polynomial& p : chain) {
    int s = sign_at(p, point, at_plus_inf);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int sturm_real_root_count(const Polynomial& p, std::optional<Rational> lo,
                          std::optional<Rational> hi) {
  if (p.is_zero()) throw ZeroPolynomialError();
  Polynomial f = squarefree_part(p);
  if (f.degree() == 0) return 0;
  std::vector<Polynomial> chain{f, f.derivative()};
  while (!chain.back().is_zero()) {
    const Polynomial& a = chain[chain.size() - 2];
    const Polynomial& b = chain.back();
    chain.push_back(-(a.divmod(b).second));
  }
  chain.pop_back();
  int v_lo = sign_variations(chain, lo, /*at_plus_inf=*/false);
  int v_hi = sign_variations(chain, hi, /*at_plus_inf=*/true);
  // Sturm counts roots in (lo, hi]; a root at lo itself is excluded because
  // the squarefree chain has p(lo) = 0 contributing no variation change.
  return v_lo - v_hi;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw Error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial::one();
    return;
  }
  Polynomial g = poly_gcd(num, den);
  num = num.divmod(g).first;
  den = den.divmod(g).first;
  Rational lead = den.leading();
  num_ = num.scaled(lead.inverse());
  den_ = den.monic();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw Error("rational function division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error("zero has no inverse");
  return RationalFunction(den_, num_);
}

Rational RationalFunction::eval(const Rational& t0) const {
  Rational den_val = den_.eval(t0);
  if (den_val.is_zero()) {
    throw PoleError("pole at t = " + t0.str() + " in " + str());
  }
  return num_.eval(t0) / den_val;
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_.is_one()) return num_.str(var);
  std::string n = num_.str(var);
  if (num_.degree() > 0) n = "(" + n + ")";
  return n + "/(" + den_.str(var) + ")";
}

}  // namespace paracoh
