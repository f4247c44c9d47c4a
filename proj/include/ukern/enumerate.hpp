#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ukern/code.hpp"
#include "ukern/ordinal.hpp"

namespace ukern {

struct EnumBounds {
  std::size_t max_size = 6;
  std::uint64_t max_fin = 3;
  bool allow_nat = true;
  std::size_t cap = 200'000;  // population cap; exceeding it is an error
};

// Every code buildable within the bounds, exactly once, sorted by
// (size, print). Tabulated families range over all entry assignments the
// size budget admits; Id endpoints and relation pairs are drawn from
// carriers of cardinality at most max_fin.
struct CodePopulation {
  EnumBounds bounds;
  std::vector<Code> codes;
};

CodePopulation enumerate_codes(const EnumBounds& bounds);

// Stage at which each code is generated by iterating the universe
// operator over the population: base codes are available immediately,
// pi/sigma/id one stage after their parts, and quotients omega stages
// above theirs. Computed as a fixpoint over the population, recording the
// first stage that contains each code; independent of the structural rank
// recursion, which it must reproduce exactly.
std::vector<RankOrdinal> generation_ranks(const CodePopulation& pop);

// The stage of one code; it must be a member of the population.
RankOrdinal generation_rank(const Code& c, const CodePopulation& pop);

}  // namespace ukern
