#include "paracoh/rational.hpp"

#include <cctype>
#include <ostream>

namespace paracoh {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> Rational { throw ParseError(i, msg); };
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  std::size_t begin = i;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits_start) return fail("expected digits in rational");
  std::string num(s.substr(begin, i - begin));
  std::string den = "1";
  if (i < s.size() && s[i] == '/') {
    ++i;
    std::size_t den_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_start) return fail("expected digits after '/'");
    den = std::string(s.substr(den_start, i - den_start));
  }
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i != s.size()) return fail("trailing characters in rational");
  mpq_class v(num + "/" + den);
  if (v.get_den() == 0) throw ParseError(begin, "zero denominator");
  v.canonicalize();
  return Rational(v);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace paracoh
