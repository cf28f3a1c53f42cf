#include "paracoh/catalog.hpp"

#include <cctype>

namespace paracoh {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  bool done() const { return i >= s.size(); }
  char peek() const { return done() ? '\0' : s[i]; }
  char take() { return s[i++]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool consume(char c) {
    skip_ws();
    if (!done() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i, msg); }
};

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string strip_outer_parens(const std::string& s) {
  std::string t = trimmed(s);
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
    int depth = 0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      if (t[i] == '(') ++depth;
      if (t[i] == ')') --depth;
      if (depth == 0) return t;  // outer parens do not wrap the whole string
    }
    return trimmed(t.substr(1, t.size() - 2));
  }
  return t;
}

// one structure-equation entry ("0", "12", "13+14", "-24", "1/2*12+34") into
// constants for generator k
void parse_entry(const std::string& entry, int k, int dim, StructureConstants& c) {
  Cursor cur{entry};
  cur.skip_ws();
  if (cur.done()) cur.fail("empty structure-equation entry");
  if (cur.peek() == '0') {
    std::size_t save = cur.i;
    cur.take();
    cur.skip_ws();
    if (cur.done()) return;
    cur.i = save;  // "0..." with trailing content: fall through to term list
  }
  bool first = true;
  while (true) {
    cur.skip_ws();
    if (cur.done()) break;
    int sign = 1;
    if (cur.peek() == '+' || cur.peek() == '-') {
      sign = cur.take() == '-' ? -1 : 1;
    } else if (!first) {
      cur.fail("expected '+' or '-' between terms");
    }
    cur.skip_ws();
    // digits (and optional /digits) followed by '*' form a coefficient;
    // otherwise they must be exactly the index pair
    std::size_t start = cur.i;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.take();
    std::string digits = cur.s.substr(start, cur.i - start);
    Rational coeff(sign);
    std::string pair;
    bool has_coeff = false;
    if (!cur.done() && cur.peek() == '/') {
      cur.take();
      std::size_t ds = cur.i;
      while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.take();
      if (cur.i == ds) cur.fail("expected denominator digits");
      coeff = coeff * Rational::parse(digits + "/" + cur.s.substr(ds, cur.i - ds));
      has_coeff = true;
    }
    cur.skip_ws();
    if (!cur.done() && cur.peek() == '*') {
      cur.take();
      if (!has_coeff) {
        if (digits.empty()) cur.fail("expected coefficient before '*'");
        coeff = coeff * Rational::parse(digits);
      }
      has_coeff = true;
      cur.skip_ws();
      std::size_t ps = cur.i;
      while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.take();
      pair = cur.s.substr(ps, cur.i - ps);
    } else {
      if (has_coeff) cur.fail("expected '*' after rational coefficient");
      pair = digits;
    }
    if (pair.size() != 2) cur.fail("expected a two-digit index pair, got '" + pair + "'");
    int lo = pair[0] - '0';
    int hi = pair[1] - '0';
    if (lo == 0 || hi == 0) throw IndexError("index 0 in pair '" + pair + "'");
    if (lo >= hi) throw IndexError("index pair '" + pair + "' needs j < k");
    if (hi > dim) throw IndexError("index pair '" + pair + "' out of range for dimension " + std::to_string(dim));
    if (!coeff.is_zero()) {
      std::array<int, 3> key{lo, hi, k};
      auto it = c.find(key);
      if (it == c.end()) {
        c.emplace(key, coeff);
      } else {
        it->second += coeff;
        if (it->second.is_zero()) c.erase(it);
      }
    }
    first = false;
  }
}

}  // namespace

LieAlgebra parse_algebra(const std::string& text) {
  std::string body = strip_outer_parens(text);
  if (body.empty()) throw ParseError(0, "empty structure-equation list");
  std::vector<std::string> raw = split_top_level(body, ',');
  // expand "0^k"
  std::vector<std::string> entries;
  for (const std::string& r : raw) {
    std::string e = trimmed(r);
    if (e.size() >= 2 && e[0] == '0' && e[1] == '^') {
      std::size_t count = 0;
      try {
        count = std::stoul(e.substr(2));
      } catch (...) {
        throw ParseError(0, "bad zero-run '" + e + "'");
      }
      if (count == 0 || count > 9) throw ParseError(0, "zero-run length out of range in '" + e + "'");
      for (std::size_t j = 0; j < count; ++j) entries.push_back("0");
    } else {
      entries.push_back(e);
    }
  }
  int dim = static_cast<int>(entries.size());
  if (dim > 9) throw IndexError("dimension " + std::to_string(dim) + " exceeds the cap of 9");
  StructureConstants c;
  for (int k = 1; k <= dim; ++k) parse_entry(entries[static_cast<std::size_t>(k - 1)], k, dim, c);
  return LieAlgebra::create(dim, std::move(c));  // JacobiError if the equations are inconsistent
}

std::string render_algebra(const LieAlgebra& g) { return g.str(); }

Matrix<Rational> parse_k(const std::string& text, int dim) {
  std::string body = strip_outer_parens(text);
  if (body.find(';') != std::string::npos) {
    std::vector<std::string> rows = split_top_level(body, ';');
    if (static_cast<int>(rows.size()) != dim) {
      throw ParseError(0, "matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(dim));
    }
    Matrix<Rational> k(dim, dim);
    for (int i = 0; i < dim; ++i) {
      std::vector<std::string> cells = split_top_level(rows[static_cast<std::size_t>(i)], ',');
      if (static_cast<int>(cells.size()) != dim) {
        throw ParseError(0, "matrix row " + std::to_string(i + 1) + " has " + std::to_string(cells.size()) +
                         " entries, expected " + std::to_string(dim));
      }
      for (int j = 0; j < dim; ++j) k(i, j) = Rational::parse(cells[static_cast<std::size_t>(j)]);
    }
    return k;
  }
  // sign string
  std::vector<int> signs;
  for (std::size_t i = 0; i < body.size(); ++i) {
    char ch = body[i];
    if (ch == '+') {
      signs.push_back(1);
    } else if (ch == '-') {
      signs.push_back(-1);
    } else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      continue;
    } else {
      throw ParseError(i, std::string("unexpected character '") + ch + "' in sign string");
    }
  }
  if (static_cast<int>(signs.size()) != dim) {
    throw ParseError(0, "sign string length " + std::to_string(signs.size()) + " != algebra dimension " +
                     std::to_string(dim));
  }
  Matrix<Rational> k(dim, dim);
  for (int i = 0; i < dim; ++i) k(i, i) = Rational(signs[static_cast<std::size_t>(i)]);
  return k;
}

namespace {

// recursive-descent expression grammar over Q(t)
RationalFunction parse_expr(Cursor& cur);

RationalFunction parse_atom(Cursor& cur) {
  cur.skip_ws();
  if (cur.done()) cur.fail("unexpected end of expression");
  char c = cur.peek();
  if (c == '(') {
    cur.take();
    RationalFunction inner = parse_expr(cur);
    if (!cur.consume(')')) cur.fail("expected ')'");
    return inner;
  }
  if (c == 't') {
    cur.take();
    return RationalFunction::t();
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::size_t start = cur.i;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.take();
    return RationalFunction(Rational::parse(cur.s.substr(start, cur.i - start)));
  }
  cur.fail(std::string("unexpected character '") + c + "'");
}

RationalFunction parse_power(Cursor& cur) {
  RationalFunction base = parse_atom(cur);
  cur.skip_ws();
  if (!cur.done() && cur.peek() == '^') {
    cur.take();
    cur.skip_ws();
    std::size_t start = cur.i;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.take();
    if (cur.i == start) cur.fail("expected exponent digits after '^'");
    unsigned e = static_cast<unsigned>(std::stoul(cur.s.substr(start, cur.i - start)));
    RationalFunction acc = RationalFunction::one();
    for (unsigned r = 0; r < e; ++r) acc *= base;
    return acc;
  }
  return base;
}

RationalFunction parse_unary(Cursor& cur) {
  cur.skip_ws();
  bool neg = false;
  while (!cur.done() && (cur.peek() == '-' || cur.peek() == '+')) {
    if (cur.take() == '-') neg = !neg;
    cur.skip_ws();
  }
  RationalFunction v = parse_power(cur);
  return neg ? -v : v;
}

RationalFunction parse_term(Cursor& cur) {
  RationalFunction acc = parse_unary(cur);
  while (true) {
    cur.skip_ws();
    if (!cur.done() && cur.peek() == '*') {
      cur.take();
      acc *= parse_unary(cur);
    } else if (!cur.done() && cur.peek() == '/') {
      cur.take();
      acc /= parse_unary(cur);
    } else {
      break;
    }
  }
  return acc;
}

RationalFunction parse_expr(Cursor& cur) {
  RationalFunction acc = parse_term(cur);
  while (true) {
    cur.skip_ws();
    if (!cur.done() && (cur.peek() == '+' || cur.peek() == '-')) {
      char op = cur.take();
      RationalFunction rhs = parse_term(cur);
      acc = op == '+' ? acc + rhs : acc - rhs;
    } else {
      break;
    }
  }
  return acc;
}

}  // namespace

RationalFunction parse_rational_function(const std::string& text) {
  Cursor cur{text};
  RationalFunction v = parse_expr(cur);
  cur.skip_ws();
  if (!cur.done()) cur.fail("trailing characters in expression");
  return v;
}

Matrix<RationalFunction> parse_k_family(const std::string& text, int dim) {
  std::string body = strip_outer_parens(text);
  std::vector<std::string> rows = split_top_level(body, ';');
  if (static_cast<int>(rows.size()) != dim) {
    throw ParseError(0, "family matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(dim));
  }
  Matrix<RationalFunction> k(dim, dim);
  for (int i = 0; i < dim; ++i) {
    std::vector<std::string> cells = split_top_level(rows[static_cast<std::size_t>(i)], ',');
    if (static_cast<int>(cells.size()) != dim) {
      throw ParseError(0, "family matrix row " + std::to_string(i + 1) + " has " + std::to_string(cells.size()) +
                       " entries, expected " + std::to_string(dim));
    }
    for (int j = 0; j < dim; ++j) k(i, j) = parse_rational_function(cells[static_cast<std::size_t>(j)]);
  }
  return k;
}

std::string to_string(KSpec::Kind k) {
  switch (k) {
    case KSpec::Kind::sign: return "sign";
    case KSpec::Kind::matrix: return "matrix";
    case KSpec::Kind::family: return "family";
  }
  return "?";
}

Matrix<Rational> CatalogEntry::k_matrix(const std::string& structure) const {
  auto it = structures.find(structure);
  if (it == structures.end()) throw UnknownEntry("no structure '" + structure + "' in entry '" + name + "'");
  if (it->second.kind == KSpec::Kind::family) {
    throw Error("structure '" + structure + "' is a family; evaluate it at a point instead");
  }
  return parse_k(it->second.value, algebra().dim());
}

DeformationFamily CatalogEntry::family(const std::string& structure) const {
  auto it = structures.find(structure);
  if (it == structures.end()) throw UnknownEntry("no structure '" + structure + "' in entry '" + name + "'");
  DeformationFamily f{algebra(), Matrix<RationalFunction>(), "t in [0,1]"};
  if (it->second.kind == KSpec::Kind::family) {
    f.k_of_t = parse_k_family(it->second.value, f.g.dim());
  } else {
    f.k_of_t = lift_matrix<RationalFunction>(parse_k(it->second.value, f.g.dim()));
  }
  return f;
}

std::string CatalogEntry::default_structure() const {
  if (structures.empty()) throw UnknownEntry("entry '" + name + "' has no structures");
  for (const auto& [sname, spec] : structures) {
    if (spec.kind != KSpec::Kind::family) return sname;
  }
  return structures.begin()->first;
}

nlohmann::json CatalogEntry::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["algebra"] = algebra_str;
  nlohmann::json s = nlohmann::json::object();
  for (const auto& [sname, spec] : structures) {
    s[sname] = {{"kind", to_string(spec.kind)}, {"value", spec.value}};
  }
  j["structures"] = s;
  j["expected"] = expected;
  j["notes"] = notes;
  return j;
}

namespace {

std::vector<CatalogEntry> build_catalog() {
  using nlohmann::json;
  std::vector<CatalogEntry> entries;

  {
    CatalogEntry e;
    e.name = "torus4";
    e.algebra_str = "(0,0,0,0)";
    e.structures["K"] = {KSpec::Kind::sign, "(+,+,-,-)"};
    e.expected = json{{"K", {{"cohomology", {{"2", {{"betti", 6}, {"dim_plus", 2}, {"dim_minus", 4},
                                                     {"pure", true}, {"full", true}}}}}}}};
    e.notes = "abelian baseline; every structure is integrable and pure-and-full at every stage";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "torus6";
    e.algebra_str = "(0,0,0,0,0,0)";
    e.structures["K"] = {KSpec::Kind::sign, "(+,+,+,-,-,-)"};
    e.notes = "abelian baseline in dimension six";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "heis3";
    e.algebra_str = "(0,0,12)";
    e.notes = "Heisenberg algebra; odd-dimensional building block for products";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "heis3R";
    e.algebra_str = "(0,0,12,0)";
    e.structures["K"] = {KSpec::Kind::sign, "(+,-,-,+)"};
    e.expected = json{{"K", {{"cohomology", {{"2", {{"betti", 4}, {"dim_plus", 2}, {"dim_minus", 2},
                                                     {"pure_and_full", true}}}}}}}};
    e.notes = "heis3 x R; 4-dimensional nilpotent target for the random-check harness";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "filiform4";
    e.algebra_str = "(0,0,12,13)";
    e.structures["K"] = {KSpec::Kind::sign, "(+,-,-,+)"};
    e.expected = json{{"K", {{"cohomology", {{"2", {{"betti", 2}, {"dim_plus", 2}, {"dim_minus", 0},
                                                     {"pure_and_full", true}}}}}}}};
    e.notes = "4-dimensional filiform nilpotent algebra; random-check target";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "prod-heis3";
    e.algebra_str = "(0,0,12,0,0,45)";
    e.structures["K"] = {KSpec::Kind::sign, "(+,+,+,-,-,-)"};
    e.expected = json{{"K", {{"pure_and_full_every_stage", true}}}};
    e.notes = "heis3 x heis3 with the product structure; [g+, g-] = 0";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "ex2.5";
    e.algebra_str = "(0^4,12,13)";
    e.structures["K"] = {KSpec::Kind::sign, "(-,+,+,-,-,+)"};
    e.expected = json{
        {"K",
         {{"cohomology",
           {{"2",
             {{"betti", 9},
              {"dim_plus", 4},
              {"dim_minus", 4},
              {"pure", true},
              {"full", false},
              {"plus_span", {"e14", "e15", "e23", "e36"}},
              {"minus_span", {"e16", "e24", "e25", "e34"}}}}}},
          {"abelian", true},
          {"dkahler", {{"status", "witness"}, {"compatible_form", "e16 + e25 + e34"}}}}}};
    e.notes = "6-dimensional D-Kahler nilmanifold, C-infinity-pure but not full at stage 2";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "ex2.6";
    e.algebra_str = "(0,0,0,12,13+14,24)";
    e.structures["K"] = {KSpec::Kind::sign, "(+,-,+,-,+,-)"};
    e.expected = json{
        {"K",
         {{"cohomology",
           {{"2", {{"pure", false}, {"intersection_contains", "e13"}, {"equal_class_pair", {"e13", "-1*e14"}}}},
            {"4", {{"full", false}}}}},
          {"abelian", false},
          {"dkahler", {{"status", "witness"}, {"compatible_form", "e16 + e25 + e34"}}}}}};
    e.notes = "6-dimensional D-Kahler nilmanifold that is not C-infinity-pure at stage 2";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "ex2.8";
    e.algebra_str = "(0,0,12,13)";
    e.structures["K"] = {KSpec::Kind::matrix, "1,0,0,0; 0,-1,0,-2; 0,0,-1,0; 0,0,0,1"};
    e.expected = json{
        {"K",
         {{"integrable", false},
          {"witness_bracket_image", "e3"},
          {"cohomology", {{"2", {{"pure", false}, {"full", false}, {"intersection_contains", "e14"}}}}}}}};
    e.notes =
        "almost (non-integrable) structure with g+ = <e1, e4 - e2>, g- = <e2, e3>; the source text "
        "calls this algebra the product of the Heisenberg group and R, which conflicts with its own "
        "structure equations (a filiform algebra) - the equations win here";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "ex2.17";
    e.algebra_str = "(0,0,23,-24)";
    e.structures["K_t"] = {KSpec::Kind::family, "-1,0,0,0; 0,1,0,-2*t; 0,0,1,0; 0,0,0,-1"};
    e.structures["K0"] = {KSpec::Kind::sign, "(-,+,+,-)"};
    e.expected = json{
        {"K_t",
         {{"family_integrable", true},
          {"generic", {{"2", {{"dim_plus", 1}, {"dim_minus", 1}, {"pure", false}, {"full", false}}}}},
          {"at",
           {{"0", {{"2", {{"dim_plus", 0}, {"dim_minus", 2}, {"pure_and_full", true}}}}}}},
          {"jump_grid", {"0", "1/2", "1", "2"}},
          {"jump_exceptional", {"0"}},
          {"dkahler_at",
           {{"0", {{"status", "witness"}, {"witness", "e12 + e34"}}},
            {"1", {{"status", "cohomologically_obstructed_top_square"}}}}}}}};
    e.notes = "completely-solvable solvmanifold; D-Kahler at t = 0, obstructed for t != 0";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "jump-sci";
    e.algebra_str = "(0,0,0,12,13,24)";
    e.structures["K_t"] = {
        KSpec::Kind::family,
        "1,0,0,0,0,0;"
        " 0,-1,0,0,0,0;"
        " 0,0,((1-t)^2-t^2)/((1-t)^2+t^2),(2*t*(1-t))/((1-t)^2+t^2),0,0;"
        " 0,0,(2*t*(1-t))/((1-t)^2+t^2),-((1-t)^2-t^2)/((1-t)^2+t^2),0,0;"
        " 0,0,0,0,1,0;"
        " 0,0,0,0,0,-1"};
    e.expected = json{
        {"K_t",
         {{"family_integrable", true},
          {"betti2", 6},
          {"generic", {{"2", {{"dim_plus", 4}, {"dim_minus", 3}, {"pure", false}, {"full", false}}}}},
          {"at",
           {{"0", {{"2", {{"dim_plus", 3}, {"dim_minus", 3}, {"pure_and_full", true}}}}},
            {"1", {{"2", {{"dim_plus", 4}, {"dim_minus", 2}, {"pure_and_full", true}}}}}}},
          {"jump_grid", {"0", "1/3", "1/2", "2/3", "1"}},
          {"jump_exceptional", {"0", "1"}}}}};
    e.notes = "dimensions jump lower-semi-continuously along the curve";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "jump-scs";
    e.algebra_str = "(0,0,0,12,13,24)";
    e.structures["K_t"] = {
        KSpec::Kind::family,
        "1,0,0,0,0,0;"
        " 0,-1,0,0,0,0;"
        " 0,0,-1,0,0,0;"
        " 0,0,0,1,0,0;"
        " 0,0,0,0,((1-t)^2-t^2)/((1-t)^2+t^2),(2*t*(1-t))/((1-t)^2+t^2);"
        " 0,0,0,0,(2*t*(1-t))/((1-t)^2+t^2),-((1-t)^2-t^2)/((1-t)^2+t^2)"};
    e.expected = json{
        {"K_t",
         {{"family_integrable", true},
          {"family_abelian", true},
          {"generic", {{"2", {{"dim_plus", 2}, {"dim_minus", 1}, {"pure", true}, {"full", false}}}}},
          {"at",
           {{"0", {{"2", {{"dim_plus", 4}, {"dim_minus", 2}, {"pure_and_full", true}}}}},
            {"1", {{"2", {{"dim_plus", 3}, {"dim_minus", 2}, {"pure", true}, {"full", false}}}}}}},
          {"jump_grid", {"0", "1/3", "1/2", "2/3", "1"}},
          {"jump_exceptional", {"0", "1"}}}}};
    e.notes = "dimensions jump upper-semi-continuously along the curve; Abelian for every t";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "solv-nonuni";
    e.algebra_str = "(0,0,0,13+34)";
    e.structures["K"] = {KSpec::Kind::sign, "(+,+,-,-)"};
    e.expected = json{
        {"K",
         {{"unimodular", false},
          {"cohomology",
           {{"2",
             {{"betti", 3},
              {"dim_plus", 2},
              {"dim_minus", 2},
              {"pure", false},
              {"full", true},
              {"equal_class_pair", {"e34", "-1*e13"}}}}}},
          {"abelian", false}}}};
    e.notes =
        "non-unimodular solvable counterexample: linear C-infinity-full but not pure at stage 2; the "
        "subgroup H^{2-} contains [e23] and [e34] = -[e13], so its dimension is 2 (the source lists "
        "only a complementary spanning set)";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "so3";
    e.algebra_str = "(23,-13,12)";
    e.expected = json{{"flags", {{"solvability", "not_solvable"}}}};
    e.notes = "compact simple algebra; not solvable, used by classification tests";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "e2R";
    e.algebra_str = "(0,13,-12,0)";
    e.structures["K"] = {KSpec::Kind::sign, "(+,-,-,+)"};
    e.expected = json{{"flags", {{"solvability", "solvable_unknown"}}}};
    e.notes =
        "e(2) x R: solvable with non-real adjoint spectrum, so linear verdicts do not transfer to a "
        "quotient manifold; reports carry the applicability note";
    entries.push_back(e);
  }
  return entries;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const CatalogEntry& e : catalog()) out.push_back(e.name);
    return out;
  }();
  return names;
}

const CatalogEntry& catalog_get(const std::string& name) {
  for (const CatalogEntry& e : catalog()) {
    if (e.name == name) return e;
  }
  throw UnknownEntry("no catalog entry named '" + name + "'");
}

}  // namespace paracoh
