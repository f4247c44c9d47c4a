#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ukern/code.hpp"
#include "ukern/value.hpp"

namespace ukern {

// Plain s-expression tree with byte offsets for diagnostics.
struct SExpr {
  bool is_atom = true;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t pos = 0;
};

// Reads one s-expression; trailing non-whitespace is a syntax error.
SExpr read_sexpr(std::string_view text);
// Reads a whole file worth of forms.
std::vector<SExpr> read_sexprs(std::string_view text);

// Grammar:
//   code ::= "*" | "Nat" | "0" | "(Fin" NAT ")" | "(Pi" code fam ")"
//          | "(Sigma" code fam ")" | "(Id" code val val ")" | "(Quot" code rel ")"
//   fam  ::= "(const" code ")" | "(table" "(" val code ")"* ")"
//   rel  ::= "(rel" "(" val val ")"* ")"
//   val  ::= "star" | "(fin" NAT ")" | "(nat" NAT ")" | "(pair" val val ")"
//          | "(fun" "(" val val ")"* ")" | "refl" | "(class" val ")"
Code code_from_sexpr(const SExpr& s);
Value value_from_sexpr(const SExpr& s);

Code parse_code(std::string_view text);
Value parse_value(std::string_view text);

// Canonical, deterministic textual forms; parse(print(c)) == c.
std::string print(const Code& c);
std::string print(const Value& v);

}  // namespace ukern
