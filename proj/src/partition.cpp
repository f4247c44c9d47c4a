#include "ukern/partition.hpp"

#include <algorithm>
#include <numeric>

namespace ukern {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  std::size_t root = x;
  while (parent[root] != root) root = parent[root];
  while (parent[x] != root) {
    std::size_t next = parent[x];
    parent[x] = root;
    x = next;
  }
  return root;
}

}  // namespace

std::vector<std::size_t> closure_union_find(std::size_t n,
                                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::size_t> parent(n);
  std::vector<std::size_t> size(n, 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [a, b] : pairs) {
    std::size_t ra = find_root(parent, a);
    std::size_t rb = find_root(parent, b);
    if (ra == rb) continue;
    if (size[ra] < size[rb]) std::swap(ra, rb);
    parent[rb] = ra;
    size[ra] += size[rb];
  }
  // Relabel each class by its least member.
  std::vector<std::size_t> rep(n);
  for (std::size_t i = 0; i < n; ++i) rep[i] = n;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find_root(parent, i);
    if (rep[r] == n) rep[r] = i;  // first visit in index order is the least
  }
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = rep[find_root(parent, i)];
  return out;
}

std::vector<std::size_t> closure_iterative(std::size_t n,
                                           const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                           std::size_t* steps_out) {
  // T as an n*n boolean matrix; T0 is the reflexive-symmetric base.
  std::vector<char> t(n * n, 0);
  auto at = [&](std::size_t i, std::size_t j) -> char& { return t[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) at(i, i) = 1;
  for (const auto& [a, b] : pairs) {
    at(a, b) = 1;
    at(b, a) = 1;
  }
  std::size_t steps = 0;
  for (;;) {
    std::vector<char> next = t;
    bool grew = false;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (!at(x, y)) continue;
        for (std::size_t z = 0; z < n; ++z)
          if (at(y, z) && !next[x * n + z]) {
            next[x * n + z] = 1;
            grew = true;
          }
      }
    if (!grew) break;
    t = std::move(next);
    ++steps;
  }
  if (steps_out) *steps_out = steps;
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t least = i;
    for (std::size_t j = 0; j < n; ++j)
      if (at(i, j)) {
        least = j;
        break;
      }
    out[i] = least;
  }
  return out;
}

}  // namespace ukern
