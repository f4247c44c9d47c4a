#include "ukern/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ukern/decode.hpp"
#include "ukern/error.hpp"
#include "ukern/sexpr.hpp"

namespace ukern {

namespace {

struct Enumerator {
  EnumBounds bounds;
  std::vector<std::vector<Code>> by_size;  // index 0 unused
  std::set<std::string> seen;
  std::size_t total = 0;

  void add(std::size_t s, const Code& c) {
    if (!seen.insert(print(c)).second) return;
    if (++total > bounds.cap) fail(errc::resource_limit, "population cap exceeded");
    by_size[s].push_back(c);
  }

  // Enumerable carriers of cardinality at most max_fin; Id endpoints and
  // relation pairs are drawn from these.
  bool small_carrier(const Code& c, std::vector<Value>& elements) {
    Card n = card(c);
    if (!n.is_finite() || n.n > bounds.max_fin) return false;
    if (!is_finitary(c)) return false;
    elements = decode(c).elements;
    return true;
  }

  // All ways to split budget into parts positive summands, in order.
  void compositions(std::size_t budget, std::size_t parts, std::vector<std::size_t>& acc,
                    const std::function<void(const std::vector<std::size_t>&)>& emit) {
    if (parts == 0) {
      if (budget == 0) emit(acc);
      return;
    }
    for (std::size_t first = 1; first + (parts - 1) <= budget; ++first) {
      acc.push_back(first);
      compositions(budget - first, parts - 1, acc, emit);
      acc.pop_back();
    }
  }

  void families_over(const Code& domain, std::size_t budget,
                     const std::function<void(const Family&)>& emit) {
    if (budget >= 1)
      for (const Code& body : by_size[budget]) emit(Family::constant(body));
    Card n = card(domain);
    if (!n.is_finite() || !is_finitary(domain)) return;
    std::size_t k = n.n;
    if (k == 0) {
      if (budget == 0) emit(Family::table({}));
      return;
    }
    if (k > budget) return;
    std::vector<Value> keys = decode(domain).elements;
    std::vector<std::size_t> acc;
    compositions(budget, k, acc, [&](const std::vector<std::size_t>& split) {
      // Cartesian product of per-slot code choices.
      std::vector<std::size_t> idx(k, 0);
      for (;;) {
        std::vector<std::pair<Value, Code>> entries;
        entries.reserve(k);
        bool viable = true;
        for (std::size_t i = 0; i < k; ++i) {
          if (by_size[split[i]].empty()) {
            viable = false;
            break;
          }
          entries.emplace_back(keys[i], by_size[split[i]][idx[i]]);
        }
        if (!viable) return;
        emit(Family::table(std::move(entries)));
        std::size_t i = k;
        for (;;) {
          if (i == 0) return;
          --i;
          if (++idx[i] < by_size[split[i]].size()) break;
          idx[i] = 0;
        }
      }
    });
  }

  // All relation subsets over elements^2 whose value nodes sum to budget.
  void relations_over(const std::vector<Value>& elements, std::size_t budget,
                      const std::function<void(const RelFamily&)>& emit) {
    std::vector<std::pair<Value, Value>> all_pairs;
    for (const Value& a : elements)
      for (const Value& b : elements) all_pairs.emplace_back(a, b);
    std::vector<std::pair<Value, Value>> acc;
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t left) {
      if (i == all_pairs.size()) {
        if (left == 0) emit(RelFamily(acc));
        return;
      }
      go(i + 1, left);  // exclude
      std::size_t w = all_pairs[i].first.node_count() + all_pairs[i].second.node_count();
      if (w <= left) {
        acc.push_back(all_pairs[i]);
        go(i + 1, left - w);
        acc.pop_back();
      }
    };
    go(0, budget);
  }

  void run() {
    by_size.assign(bounds.max_size + 1, {});
    // Leaves.
    add(1, Code::star());
    if (bounds.allow_nat) add(1, Code::nat());
    add(1, Code::zero());
    for (std::uint64_t k = 0; k <= bounds.max_fin; ++k) add(1, Code::fin(k));

    for (std::size_t s = 2; s <= bounds.max_size; ++s) {
      // pi / sigma: 1 + size(domain) + family budget.
      for (std::size_t ds = 1; ds + 1 <= s; ++ds) {
        std::size_t budget = s - 1 - ds;
        for (const Code& domain : by_size[ds]) {
          families_over(domain, budget, [&](const Family& fam) {
            add(s, Code::pi(domain, fam));
            add(s, Code::sigma(domain, fam));
          });
        }
      }
      // id: 1 + size(carrier) + endpoint value nodes.
      for (std::size_t us = 1; us + 3 <= s; ++us) {
        for (const Code& u : by_size[us]) {
          std::vector<Value> elements;
          if (!small_carrier(u, elements)) continue;
          for (const Value& a : elements)
            for (const Value& b : elements)
              if (1 + us + a.node_count() + b.node_count() == s) add(s, Code::id(u, a, b));
        }
      }
      // quot: 1 + size(carrier) + relation value nodes.
      for (std::size_t us = 1; us + 1 <= s; ++us) {
        std::size_t budget = s - 1 - us;
        for (const Code& u : by_size[us]) {
          std::vector<Value> elements;
          if (!small_carrier(u, elements)) continue;
          relations_over(elements, budget,
                         [&](const RelFamily& rel) { add(s, Code::quot(u, rel)); });
        }
      }
    }
  }
};

}  // namespace

CodePopulation enumerate_codes(const EnumBounds& bounds) {
  if (bounds.max_size < 1) fail(errc::invalid_code, "max_size must be at least 1");
  Enumerator e;
  e.bounds = bounds;
  e.run();
  CodePopulation pop;
  pop.bounds = bounds;
  for (auto& bucket : e.by_size)
    for (Code& c : bucket) pop.codes.push_back(std::move(c));
  std::stable_sort(pop.codes.begin(), pop.codes.end(), [](const Code& a, const Code& b) {
    std::size_t sa = size(a), sb = size(b);
    if (sa != sb) return sa < sb;
    return print(a) < print(b);
  });
  return pop;
}

namespace {

// Fibre codes the universe operator needs before it can emit c. A constant
// family over a provably empty domain has no needed fibres; every other
// family needs its body (once) or all of its table entries.
std::vector<Code> requirements(const Code& c) {
  switch (c.tag()) {
    case Code::Tag::star:
    case Code::Tag::nat:
    case Code::Tag::fin:
    case Code::Tag::zero:
      return {};
    case Code::Tag::pi:
    case Code::Tag::sigma: {
      std::vector<Code> out{c.child()};
      const Family& fam = c.family();
      if (fam.is_constant()) {
        if (!card(c.child()).is_zero()) out.push_back(fam.body());
      } else {
        for (const auto& [k, fc] : fam.entries()) out.push_back(fc);
      }
      return out;
    }
    case Code::Tag::id:
    case Code::Tag::quot:
      return {c.child()};
  }
  return {};
}

}  // namespace

std::vector<RankOrdinal> generation_ranks(const CodePopulation& pop) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < pop.codes.size(); ++i) index[print(pop.codes[i])] = i;

  std::vector<std::vector<std::size_t>> reqs(pop.codes.size());
  for (std::size_t i = 0; i < pop.codes.size(); ++i) {
    for (const Code& r : requirements(pop.codes[i])) {
      auto it = index.find(print(r));
      if (it == index.end())
        fail(errc::invalid_code, "population is not closed under subcodes at " + print(pop.codes[i]));
      reqs[i].push_back(it->second);
    }
  }

  // Fixpoint of the stage assignment: a code enters one stage after all of
  // its requirements (omega stages for quotients). Every pass settles at
  // least the codes whose requirements settled in the previous one.
  std::vector<RankOrdinal> stage(pop.codes.size());
  std::vector<bool> done(pop.codes.size(), false);
  for (;;) {
    bool progress = false;
    for (std::size_t i = 0; i < pop.codes.size(); ++i) {
      if (done[i]) continue;
      bool ready = true;
      RankOrdinal bound;
      for (std::size_t r : reqs[i]) {
        if (!done[r]) {
          ready = false;
          break;
        }
        bound = sup(bound, stage[r]);
      }
      if (!ready) continue;
      switch (pop.codes[i].tag()) {
        case Code::Tag::star:
        case Code::Tag::nat:
        case Code::Tag::fin:
        case Code::Tag::zero:
          stage[i] = RankOrdinal{};
          break;
        case Code::Tag::quot:
          stage[i] = add_omega(bound);
          break;
        default:
          stage[i] = succ(bound);
      }
      done[i] = true;
      progress = true;
    }
    if (!progress) break;
  }
  for (std::size_t i = 0; i < pop.codes.size(); ++i)
    if (!done[i]) fail(errc::invalid_code, "generation fixpoint failed to settle " + print(pop.codes[i]));
  return stage;
}

RankOrdinal generation_rank(const Code& c, const CodePopulation& pop) {
  std::string key = print(c);
  for (std::size_t i = 0; i < pop.codes.size(); ++i)
    if (print(pop.codes[i]) == key) {
      std::vector<RankOrdinal> all = generation_ranks(pop);
      return all[i];
    }
  fail(errc::invalid_code, "code is outside the population");
}

}  // namespace ukern
