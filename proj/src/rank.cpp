#include "ukern/rank.hpp"

#include "ukern/decode.hpp"
#include "ukern/error.hpp"

namespace ukern {

RankOrdinal rk(const Code& c) {
  switch (c.tag()) {
    case Code::Tag::star:
    case Code::Tag::nat:
    case Code::Tag::fin:
    case Code::Tag::zero:
      return RankOrdinal{};
    case Code::Tag::pi:
    case Code::Tag::sigma: {
      RankOrdinal bound = rk(c.child());
      const Family& fam = c.family();
      if (fam.is_constant()) {
        if (!card(c.child()).is_zero()) bound = sup(bound, rk(fam.body()));
      } else {
        for (const auto& [k, fc] : fam.entries()) bound = sup(bound, rk(fc));
      }
      return succ(bound);
    }
    case Code::Tag::id:
      return succ(rk(c.child()));
    case Code::Tag::quot:
      return add_omega(sup(rk(c.child()), RankOrdinal{}));
  }
  return RankOrdinal{};
}

Complexity complexity(const Code& c) { return Complexity{rk(c), size(c)}; }

TowerConfig TowerConfig::defaults(std::size_t levels) {
  std::vector<RankOrdinal> budgets;
  budgets.reserve(levels);
  for (std::size_t i = 0; i < levels; ++i) budgets.push_back(ord_omega2(i + 1));
  return from_budgets(std::move(budgets));
}

TowerConfig TowerConfig::from_budgets(std::vector<RankOrdinal> budgets) {
  if (budgets.empty()) fail(errc::invalid_code, "tower needs at least one budget");
  for (std::size_t i = 0; i < budgets.size(); ++i) {
    if (budgets[i].is_zero()) fail(errc::invalid_code, "budget must be positive");
    if (i > 0 && !(budgets[i - 1] < budgets[i]))
      fail(errc::invalid_code, "budgets must be strictly increasing");
  }
  TowerConfig cfg;
  cfg.budgets_ = std::move(budgets);
  return cfg;
}

std::vector<std::string> TowerConfig::closure_warnings() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < budgets_.size(); ++i) {
    const RankOrdinal& b = budgets_[i];
    if (b.a0 != 0)
      out.push_back("budget " + std::to_string(i) + " (" + to_string(b) + ") is not closed under succ");
    else if (b.a1 != 0 || b.a2 == 0)
      out.push_back("budget " + std::to_string(i) + " (" + to_string(b) + ") is not closed under add_omega");
  }
  return out;
}

bool level_member(const Code& c, std::size_t level, const TowerConfig& cfg) {
  if (level >= cfg.levels()) fail(errc::level, "level index out of range");
  return rk(c) < cfg.budgets()[level];
}

std::optional<std::size_t> least_level(const Code& c, const TowerConfig& cfg) {
  RankOrdinal r = rk(c);
  for (std::size_t i = 0; i < cfg.levels(); ++i)
    if (r < cfg.budgets()[i]) return i;
  return std::nullopt;
}

}  // namespace ukern
