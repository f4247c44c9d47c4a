#include "ukern/ordinal.hpp"

#include <algorithm>
#include <cstdlib>

#include "ukern/error.hpp"

namespace ukern {

RankOrdinal sup(std::span<const RankOrdinal> xs) {
  RankOrdinal best;  // zero
  for (const auto& x : xs) best = std::max(best, x);
  return best;
}

RankOrdinal sup(const RankOrdinal& a, const RankOrdinal& b) { return std::max(a, b); }

RankOrdinal succ(const RankOrdinal& x) { return RankOrdinal{x.a2, x.a1, x.a0 + 1}; }

RankOrdinal add_omega(const RankOrdinal& x) { return RankOrdinal{x.a2, x.a1 + 1, 0}; }

std::string to_string(const RankOrdinal& x) {
  std::string out;
  auto term = [&](const char* head, std::uint64_t c) {
    if (c == 0) return;
    if (!out.empty()) out += '+';
    out += head;
    out += std::to_string(c);
  };
  term("w2*", x.a2);
  term("w*", x.a1);
  if (x.a0 != 0) {
    if (!out.empty()) out += '+';
    out += std::to_string(x.a0);
  }
  return out.empty() ? "0" : out;
}

namespace {

std::uint64_t parse_nat(std::string_view s, std::string_view whole) {
  if (s.empty()) fail(errc::parse, "bad ordinal literal '" + std::string(whole) + "'");
  std::uint64_t n = 0;
  for (char c : s) {
    if (c < '0' || c > '9') fail(errc::parse, "bad ordinal literal '" + std::string(whole) + "'");
    n = n * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return n;
}

}  // namespace

RankOrdinal parse_ordinal(std::string_view text) {
  RankOrdinal out;
  bool seen_a2 = false, seen_a1 = false, seen_a0 = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('+', pos);
    std::string_view term = text.substr(pos, next == std::string_view::npos ? next : next - pos);
    if (term.starts_with("w2*")) {
      if (seen_a2 || seen_a1 || seen_a0) fail(errc::parse, "ordinal terms out of order in '" + std::string(text) + "'");
      out.a2 = parse_nat(term.substr(3), text);
      seen_a2 = true;
    } else if (term.starts_with("w*")) {
      if (seen_a1 || seen_a0) fail(errc::parse, "ordinal terms out of order in '" + std::string(text) + "'");
      out.a1 = parse_nat(term.substr(2), text);
      seen_a1 = true;
    } else {
      if (seen_a0) fail(errc::parse, "ordinal terms out of order in '" + std::string(text) + "'");
      out.a0 = parse_nat(term, text);
      seen_a0 = true;
    }
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace ukern
