#include "ukern/tower.hpp"

#include "ukern/decode.hpp"
#include "ukern/error.hpp"
#include "ukern/sexpr.hpp"

namespace ukern {

LeveledCode make_leveled(const Code& c, std::size_t level, const TowerConfig& cfg) {
  if (!level_member(c, level, cfg))
    fail(errc::level, "code of rank " + to_string(rk(c)) + " is not a member of level " + std::to_string(level));
  return LeveledCode{c, level};
}

LeveledCode lift(const LeveledCode& c, std::size_t to, const TowerConfig& cfg) {
  if (to < c.level) fail(errc::level, "lift target below the current level");
  if (to >= cfg.levels()) fail(errc::level, "lift target out of range");
  return LeveledCode{c.code, to};
}

bool check_pi_preservation(const Code& domain, const Family& fam, std::size_t from, std::size_t to,
                           const TowerConfig& cfg) {
  Code pi = Code::pi(domain, fam);
  LeveledCode lifted = lift(make_leveled(pi, from, cfg), to, cfg);
  // The right-hand side rebuilds the code from parts lifted one by one;
  // lift is the identity on syntax, so the parts are the codes themselves.
  Code rebuilt = Code::pi(lift(make_leveled(domain, from, cfg), to, cfg).code, fam);
  if (!code_eq(lifted.code, rebuilt)) return false;
  if (is_finitary(lifted.code) != is_finitary(rebuilt)) return false;
  Card n = card(lifted.code);
  if (is_finitary(lifted.code) && n.is_finite() && n.n <= kDecodeCap) {
    Extension lhs = decode(lifted.code);
    Extension rhs = decode(rebuilt);
    if (lhs.elements != rhs.elements) return false;
  }
  return true;
}

CumulativityReport check_cumulativity(std::span<const Code> population, const TowerConfig& cfg) {
  CumulativityReport report;
  for (const Code& c : population) {
    ++report.codes_checked;
    RankOrdinal r = rk(c);
    bool member_below = false;
    for (std::size_t i = 0; i < cfg.levels(); ++i) {
      bool m = r < cfg.budgets()[i];
      ++report.pairs_checked;
      if (member_below && !m)
        report.violations.push_back("membership lost between levels at " + print(c) +
                                    " (level " + std::to_string(i) + ")");
      member_below = member_below || m;
    }
  }
  return report;
}

}  // namespace ukern
