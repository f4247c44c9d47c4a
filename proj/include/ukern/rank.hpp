#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ukern/code.hpp"
#include "ukern/ordinal.hpp"

namespace ukern {

// Structural rank: the ordinal stage at which a code is generated.
//   base codes                  -> 0
//   pi/sigma(A, B)              -> succ(sup{rk(A), sup_x rk(B(x))})
//   id(u, s, t)                 -> succ(rk(u))
//   quot(u, R)                  -> add_omega(sup{rk(u), 0})
// The inner supremum for pi/sigma ranges over the decoded domain, so a
// constant family over a provably empty domain contributes nothing.
// Extensional relations carry no code structure and have rank 0.
RankOrdinal rk(const Code& c);

// Two-variable complexity measure (rank, node count), ordered
// lexicographically with rank first.
struct Complexity {
  RankOrdinal rank;
  std::size_t size = 0;

  friend auto operator<=>(const Complexity&, const Complexity&) = default;
};

Complexity complexity(const Code& c);

// Strictly increasing budget ordinals; level i holds the codes of rank
// below budgets[i]. The default family w2*(i+1) is closed under succ and
// add_omega; other budgets are accepted but reported by closure_warnings.
class TowerConfig {
 public:
  static TowerConfig defaults(std::size_t levels = 8);
  static TowerConfig from_budgets(std::vector<RankOrdinal> budgets);

  const std::vector<RankOrdinal>& budgets() const { return budgets_; }
  std::size_t levels() const { return budgets_.size(); }

  std::vector<std::string> closure_warnings() const;

 private:
  std::vector<RankOrdinal> budgets_;
};

// rk(c) < budgets[level]; the level index must be in range.
bool level_member(const Code& c, std::size_t level, const TowerConfig& cfg);

// Least level whose budget exceeds rk(c), if any.
std::optional<std::size_t> least_level(const Code& c, const TowerConfig& cfg);

}  // namespace ukern
