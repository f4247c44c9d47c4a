#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ukern/code.hpp"
#include "ukern/rank.hpp"

namespace ukern {

// A code together with a level it is a member of.
struct LeveledCode {
  Code code;
  std::size_t level = 0;
};

LeveledCode make_leveled(const Code& c, std::size_t level, const TowerConfig& cfg);

// The lift functor acts as the identity on syntax; only the level moves.
// Lifting below the current level is an error.
LeveledCode lift(const LeveledCode& c, std::size_t to, const TowerConfig& cfg);

// lift(Pi(A,B)) against Pi(lift A, lift o B): syntactic equality plus
// extension agreement (when enumerable; a non-enumerable code lifts to the
// selfsame non-enumerable code).
bool check_pi_preservation(const Code& domain, const Family& fam, std::size_t from, std::size_t to,
                           const TowerConfig& cfg);

struct CumulativityReport {
  std::size_t codes_checked = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Membership at level i must imply membership at every level j >= i.
CumulativityReport check_cumulativity(std::span<const Code> population, const TowerConfig& cfg);

}  // namespace ukern
