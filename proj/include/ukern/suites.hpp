#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ukern/enumerate.hpp"
#include "ukern/rank.hpp"

namespace ukern {

struct SuiteBounds {
  std::size_t max_size = 6;
  std::uint64_t max_fin = 3;
  std::size_t cap = 200'000;
  std::uint64_t seed = 0;  // reserved for sampling extensions; echoed in reports
};

struct SuiteFailure {
  std::size_t size = 0;   // of the offending code, for minimality ordering
  std::string item;       // canonical print of the offending case
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  SuiteBounds bounds;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::uint64_t failures_total = 0;
  std::vector<SuiteFailure> failures;  // minimal counterexamples, by (size, item)

  bool ok() const { return failures_total == 0; }
};

inline const char* const kSuiteNames[] = {
    "rank-adequacy", "pi-sigma-closure", "decode-counts",      "id-closure",
    "limits",        "colimits",         "quotient-stability", "cumulativity",
    "lift-pi",       "adjunction",       "maclane-pushout",
};

SuiteReport run_suite(const std::string& name, const SuiteBounds& bounds, const TowerConfig& cfg);

}  // namespace ukern
