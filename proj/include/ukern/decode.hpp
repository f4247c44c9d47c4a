#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ukern/code.hpp"
#include "ukern/value.hpp"

namespace ukern {

enum class Tri : std::uint8_t { no, yes, unknown };

// Exact cardinality of a decoded type, without enumerating it.
// "huge" saturates finite arithmetic past 2^62; "infinite" means the
// extension genuinely contains Nat. Families over infinite domains are
// constant, which keeps the arithmetic total on every constructible code.
struct Card {
  enum class Kind : std::uint8_t { finite, huge, infinite };
  Kind kind = Kind::finite;
  std::uint64_t n = 0;

  static Card finite(std::uint64_t n) { return Card{Kind::finite, n}; }
  static Card huge() { return Card{Kind::huge, 0}; }
  static Card infinite() { return Card{Kind::infinite, 0}; }

  bool is_zero() const { return kind == Kind::finite && n == 0; }
  bool is_finite() const { return kind == Kind::finite; }
  bool at_most_one() const { return kind == Kind::finite && n <= 1; }
};

Card card(const Code& c);

// The decoded set of a code: an explicit, canonically ordered,
// duplicate-free list of values, or the symbolic extension of Nat.
struct Extension {
  bool nat_set = false;
  std::vector<Value> elements;

  std::size_t cardinality() const { return elements.size(); }
  bool contains(const Value& v) const;
};

// Number of elements decode() is willing to materialize.
inline constexpr std::uint64_t kDecodeCap = 2'000'000;

// Evaluates a code to its extension. Throws non_finitary when a full
// enumeration of an infinite part is demanded, and resource_limit when
// the extension exceeds the cap.
Extension decode(const Code& c);

// True when decode(c) yields an explicit finite extension.
bool is_finitary(const Code& c);

// Brings a value denoting an element of decode(c) into canonical form:
// quotient classes are renamed to their least representative, recursively.
// Returns nothing when the value does not denote an element at all.
std::optional<Value> try_normalize(const Code& c, const Value& v);
Value normalize(const Code& c, const Value& v);  // throws not_in_carrier
bool member(const Code& c, const Value& v);

// Element equality in the carrier u; both sides are normalized first.
bool value_eq(const Code& u, const Value& a, const Value& b);

// Decidable inhabitation verdict via the cardinality analysis.
Tri inhabited(const Code& c);

}  // namespace ukern
