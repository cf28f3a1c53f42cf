#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "paracoh/deform.hpp"

namespace paracoh {

/// Structure-equation notation: "(0^4, 12, 13)" means d e^5 = e^12,
/// d e^6 = e^13 with four closed generators. Entry i defines d e^i; a term is
/// [sign][coefficient "*"]? followed by a digit pair jk with j < k.
LieAlgebra parse_algebra(const std::string& text);

/// Canonical rendering (explicit zeros, lex term order); parse_algebra is a
/// left inverse of this.
std::string render_algebra(const LieAlgebra& g);

/// Sign-string "(-,+,+,-,-,+)" (with or without commas) to a diagonal matrix
/// where "+" puts the basis vector in g^+, or full matrix syntax
/// "rows of comma-separated rationals separated by ';'".
Matrix<Rational> parse_k(const std::string& text, int dim);

/// Matrix of rational-function expressions in t, rows separated by ';',
/// entries by ','. Grammar: + - * / ^ ( ) t and integer literals.
Matrix<RationalFunction> parse_k_family(const std::string& text, int dim);

RationalFunction parse_rational_function(const std::string& text);

struct KSpec {
  enum class Kind { sign, matrix, family };
  Kind kind = Kind::sign;
  std::string value;
};

std::string to_string(KSpec::Kind k);

/// A named fixture: algebra, its structures, the published expected values
/// (consumed by the acceptance suite rather than hard-coded there), notes.
struct CatalogEntry {
  std::string name;
  std::string algebra_str;
  std::map<std::string, KSpec> structures;
  nlohmann::json expected;
  std::string notes;

  LieAlgebra algebra() const { return parse_algebra(algebra_str); }
  Matrix<Rational> k_matrix(const std::string& structure) const;
  DeformationFamily family(const std::string& structure) const;
  /// The entry's single point-structure (or family) name, when unambiguous.
  std::string default_structure() const;

  nlohmann::json to_json() const;
};

const std::vector<std::string>& catalog_names();
const CatalogEntry& catalog_get(const std::string& name);

}  // namespace paracoh
