#include "paracoh/exterior.hpp"

#include <cctype>

namespace paracoh {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<IndexTuple> monomial_basis(int n, int ell) {
  std::vector<IndexTuple> out;
  if (ell < 0 || ell > n) return out;
  IndexTuple cur(static_cast<std::size_t>(ell));
  for (int i = 0; i < ell; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = ell - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (ell - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < ell; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

int monomial_rank(int n, const IndexTuple& t) {
  // number of ell-subsets lexicographically before t
  int ell = static_cast<int>(t.size());
  long rank = 0;
  int prev = 0;
  for (int i = 0; i < ell; ++i) {
    for (int v = prev + 1; v < t[static_cast<std::size_t>(i)]; ++v) {
      rank += binomial(n - v, ell - 1 - i);
    }
    prev = t[static_cast<std::size_t>(i)];
  }
  return static_cast<int>(rank);
}

int sort_index_tuple(IndexTuple& t) {
  // insertion sort, counting transpositions
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    int v = t[i];
    std::size_t j = i;
    while (j > 0 && t[j - 1] > v) {
      t[j] = t[j - 1];
      --j;
      sign = -sign;
    }
    t[j] = v;
  }
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] == t[i - 1]) return 0;
  }
  return sign;
}

Form<Rational> parse_form(int n, const std::string& text) {
  Form<Rational> f(n);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == '0' && i + 1 == text.size()) return f;
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError(i, "expected '+' or '-' between form terms");
    }
    skip_ws();
    Rational coeff = Rational::one();
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string num(text.substr(start, i - start));
      std::string den = "1";
      if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t ds = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == ds) throw ParseError(i, "expected denominator digits");
        den = std::string(text.substr(ds, i - ds));
      }
      coeff = Rational::parse(num + "/" + den);
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size() || text[i] != 'e') {
      // bare rational term (degree 0)
      f.add_term(IndexTuple{}, sign < 0 ? -coeff : coeff);
      first = false;
      skip_ws();
      continue;
    }
    ++i;  // consume 'e'
    IndexTuple idx;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      idx.push_back(text[i] - '0');
      ++i;
    }
    if (idx.empty()) throw ParseError(i, "expected indices after 'e'");
    f.add_term(std::move(idx), sign < 0 ? -coeff : coeff);
    first = false;
    skip_ws();
  }
  return f;
}

}  // namespace paracoh
