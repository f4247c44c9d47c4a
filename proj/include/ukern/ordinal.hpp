#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace ukern {

// Ordinals below w^3 in Cantor normal form: w2*a2 + w*a1 + a0.
// The canonical form is unique, so equality is componentwise and the
// total order is lexicographic on (a2, a1, a0).
struct RankOrdinal {
  std::uint64_t a2 = 0;
  std::uint64_t a1 = 0;
  std::uint64_t a0 = 0;

  friend auto operator<=>(const RankOrdinal&, const RankOrdinal&) = default;

  bool is_zero() const { return a2 == 0 && a1 == 0 && a0 == 0; }
};

inline RankOrdinal ord(std::uint64_t a2, std::uint64_t a1, std::uint64_t a0) {
  return RankOrdinal{a2, a1, a0};
}
inline RankOrdinal ord_fin(std::uint64_t n) { return RankOrdinal{0, 0, n}; }
inline RankOrdinal ord_omega() { return RankOrdinal{0, 1, 0}; }
inline RankOrdinal ord_omega2(std::uint64_t k) { return RankOrdinal{k, 0, 0}; }

// Maximum under the total order; the empty supremum is 0.
RankOrdinal sup(std::span<const RankOrdinal> xs);
RankOrdinal sup(const RankOrdinal& a, const RankOrdinal& b);

// Ordinal successor: x + 1.
RankOrdinal succ(const RankOrdinal& x);

// x + w; the finite part is absorbed.
RankOrdinal add_omega(const RankOrdinal& x);

// Textual form "w2*A+w*B+C" with zero terms omitted; "0" for zero.
std::string to_string(const RankOrdinal& x);
RankOrdinal parse_ordinal(std::string_view text);

}  // namespace ukern
