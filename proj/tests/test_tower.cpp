#include <vector>

#include "doctest.h"
#include "ukern/error.hpp"
#include "ukern/sexpr.hpp"
#include "ukern/tower.hpp"

using namespace ukern;

TEST_CASE("lift is the identity on syntax") {
  TowerConfig cfg = TowerConfig::defaults();
  LeveledCode star = make_leveled(Code::star(), 0, cfg);
  LeveledCode up = lift(star, 2, cfg);
  CHECK(up.level == 2);
  CHECK(code_eq(up.code, Code::star()));

  Code q = parse_code("(Quot (Fin 3) (rel ((fin 0) (fin 1))))");
  LeveledCode lq = lift(make_leveled(q, 0, cfg), 1, cfg);
  CHECK(code_eq(lq.code, q));

  CHECK_THROWS_AS(lift(make_leveled(Code::star(), 1, cfg), 0, cfg), Error);
  CHECK_THROWS_AS(lift(star, 99, cfg), Error);
}

TEST_CASE("lift is strictly functorial") {
  TowerConfig cfg = TowerConfig::defaults();
  for (const char* text : {"*", "(Fin 2)", "(Pi (Fin 2) (const *))",
                           "(Quot (Fin 2) (rel ((fin 0) (fin 1))))"}) {
    LeveledCode base = make_leveled(parse_code(text), 0, cfg);
    LeveledCode two = lift(lift(base, 2, cfg), 5, cfg);
    LeveledCode one = lift(base, 5, cfg);
    CHECK(two.level == one.level);
    CHECK(code_eq(two.code, one.code));
    LeveledCode same = lift(base, 0, cfg);
    CHECK(same.level == 0);
    CHECK(code_eq(same.code, base.code));
  }
}

TEST_CASE("lift commutes with pi on the nose") {
  TowerConfig cfg = TowerConfig::defaults();
  CHECK(check_pi_preservation(Code::fin(2), Family::constant(Code::star()), 0, 1, cfg));
  CHECK(check_pi_preservation(Code::star(), Family::constant(Code::nat()), 0, 3, cfg));
  CHECK(check_pi_preservation(Code::fin(2), Family::constant(Code::star()), 0, 0, cfg));
  Family table = Family::table({{Value::fin(0), Code::star()}, {Value::fin(1), Code::fin(2)}});
  CHECK(check_pi_preservation(Code::fin(2), table, 0, 7, cfg));
}

TEST_CASE("sigma and id lift by the same identity argument") {
  TowerConfig cfg = TowerConfig::defaults();
  Code sig = parse_code("(Sigma (Fin 2) (const (Fin 3)))");
  Code idc = parse_code("(Id (Fin 2) (fin 0) (fin 0))");
  for (const Code& c : {sig, idc}) {
    LeveledCode lifted = lift(make_leveled(c, 0, cfg), 4, cfg);
    CHECK(code_eq(lifted.code, c));
  }
}

TEST_CASE("cumulativity over a small population") {
  TowerConfig cfg = TowerConfig::defaults();
  std::vector<Code> population{Code::star(),
                               Code::nat(),
                               Code::zero(),
                               Code::fin(3),
                               parse_code("(Pi (Fin 2) (const *))"),
                               parse_code("(Quot (Fin 3) (rel ((fin 0) (fin 1))))")};
  CumulativityReport report = check_cumulativity(population, cfg);
  CHECK(report.ok());
  CHECK(report.codes_checked == population.size());
}

TEST_CASE("a code on the budget boundary moves up one level") {
  TowerConfig tight = TowerConfig::from_budgets({ord_omega(), ord_omega2(1)});
  Code q = parse_code("(Quot (Fin 3) (rel))");  // rank exactly w*1
  CHECK(rk(q) == ord_omega());
  CHECK_FALSE(level_member(q, 0, tight));
  CHECK(level_member(q, 1, tight));
  CHECK_THROWS_AS(make_leveled(q, 0, tight), Error);
  CumulativityReport report = check_cumulativity(std::vector<Code>{q}, tight);
  CHECK(report.ok());  // absent below, present above: monotone
}
