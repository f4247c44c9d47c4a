#include <set>
#include <string>

#include "doctest.h"
#include "ukern/enumerate.hpp"
#include "ukern/error.hpp"
#include "ukern/rank.hpp"
#include "ukern/sexpr.hpp"
#include "ukern/suites.hpp"

using namespace ukern;

TEST_CASE("leaf population") {
  CodePopulation pop = enumerate_codes(EnumBounds{1, 2, true, 1000});
  std::set<std::string> prints;
  for (const Code& c : pop.codes) prints.insert(print(c));
  CHECK(prints == std::set<std::string>{"*", "Nat", "0", "(Fin 0)", "(Fin 1)", "(Fin 2)"});
}

TEST_CASE("composite codes appear within their size bound") {
  CodePopulation pop = enumerate_codes(EnumBounds{3, 2, true, 100000});
  std::set<std::string> prints;
  for (const Code& c : pop.codes) prints.insert(print(c));
  CHECK(prints.count("(Pi (Fin 2) (const *))") == 1);
  CHECK(prints.count("(Sigma (Fin 2) (const Nat))") == 1);
  CHECK(prints.count("(Quot (Fin 2) (rel))") == 1);
  for (const Code& c : pop.codes) CHECK(size(c) <= 3);
}

TEST_CASE("populations are deterministic and duplicate-free") {
  CodePopulation a = enumerate_codes(EnumBounds{4, 2, true, 100000});
  CodePopulation b = enumerate_codes(EnumBounds{4, 2, true, 100000});
  REQUIRE(a.codes.size() == b.codes.size());
  std::set<std::string> prints;
  for (std::size_t i = 0; i < a.codes.size(); ++i) {
    CHECK(print(a.codes[i]) == print(b.codes[i]));
    CHECK(prints.insert(print(a.codes[i])).second);
  }
}

TEST_CASE("the population cap trips loudly") {
  CHECK_THROWS_AS(enumerate_codes(EnumBounds{5, 3, true, 50}), Error);
}

TEST_CASE("Nat can be excluded from the bases") {
  CodePopulation pop = enumerate_codes(EnumBounds{2, 1, false, 1000});
  for (const Code& c : pop.codes) CHECK(print(c).find("Nat") == std::string::npos);
}

TEST_CASE("generation stages match the examples") {
  CodePopulation pop = enumerate_codes(EnumBounds{3, 2, true, 100000});
  CHECK(generation_rank(Code::star(), pop) == ord_fin(0));
  CHECK(generation_rank(parse_code("(Pi (Fin 2) (const *))"), pop) == ord_fin(1));
  CHECK(generation_rank(parse_code("(Quot (Fin 2) (rel))"), pop) == ord_omega());
  CHECK_THROWS_AS(generation_rank(Code::fin(9), pop), Error);
}

TEST_CASE("generation rank equals structural rank on a small population") {
  CodePopulation pop = enumerate_codes(EnumBounds{4, 2, true, 100000});
  std::vector<RankOrdinal> grk = generation_ranks(pop);
  for (std::size_t i = 0; i < pop.codes.size(); ++i) {
    INFO(print(pop.codes[i]));
    CHECK(grk[i] == rk(pop.codes[i]));
  }
}

TEST_CASE("suite runner") {
  TowerConfig cfg = TowerConfig::defaults();
  CHECK_THROWS_AS(run_suite("no-such-suite", SuiteBounds{}, cfg), Error);
  SuiteBounds small{3, 2, 100000, 0};
  SuiteReport report = run_suite("rank-adequacy", small, cfg);
  CHECK(report.ok());
  CHECK(report.checked > 0);
  // Reports are reproducible.
  SuiteReport again = run_suite("rank-adequacy", small, cfg);
  CHECK(again.checked == report.checked);
  CHECK(again.failures_total == report.failures_total);
}
