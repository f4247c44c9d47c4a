#include <cstdint>
#include <vector>

#include "doctest.h"
#include "ukern/partition.hpp"

using namespace ukern;

TEST_CASE("chains close transitively") {
  std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}, {1, 2}};
  auto fast = closure_union_find(3, pairs);
  std::size_t steps = 0;
  auto slow = closure_iterative(3, pairs, &steps);
  CHECK(fast == std::vector<std::size_t>{0, 0, 0});
  CHECK(fast == slow);
  CHECK(steps <= 3);
}

TEST_CASE("empty relation yields singletons") {
  auto fast = closure_union_find(3, {});
  std::size_t steps = 0;
  auto slow = closure_iterative(3, {}, &steps);
  CHECK(fast == std::vector<std::size_t>{0, 1, 2});
  CHECK(fast == slow);
  CHECK(steps == 0);
}

TEST_CASE("disjoint chains stay disjoint") {
  std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}, {2, 3}};
  auto fast = closure_union_find(4, pairs);
  CHECK(fast == std::vector<std::size_t>{0, 0, 2, 2});
  CHECK(fast == closure_iterative(4, pairs));
}

TEST_CASE("the two paths agree on random relations") {
  std::uint64_t state = 0x2545f4914f6cdd1dull;
  auto next = [&] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int round = 0; round < 300; ++round) {
    std::size_t n = 1 + next() % 8;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = next() % 10; i > 0; --i) pairs.emplace_back(next() % n, next() % n);
    std::size_t steps = 0;
    auto slow = closure_iterative(n, pairs, &steps);
    CHECK(closure_union_find(n, pairs) == slow);
    CHECK(steps <= n);
  }
}
