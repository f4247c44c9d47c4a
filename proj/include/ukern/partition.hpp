#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace ukern {

// Equivalence closure of a pair list over {0, ..., n-1}, two ways.
// Both return rep[i] = least index of the class of i, so agreement is a
// plain vector comparison.

// Fast path: union by size with path compression, then a canonicalizing
// sweep that relabels every class by its least member.
std::vector<std::size_t> closure_union_find(std::size_t n,
                                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

// Oracle path: reflexive-symmetric base T0, then T_{n+1} adds one
// relational composition per step until the fixpoint. steps_out, when
// given, receives the least n with T_n = T_{n+1}.
std::vector<std::size_t> closure_iterative(std::size_t n,
                                           const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                           std::size_t* steps_out = nullptr);

}  // namespace ukern
