#include "doctest.h"
#include "ukern/code.hpp"
#include "ukern/error.hpp"
#include "ukern/sexpr.hpp"

using namespace ukern;

TEST_CASE("node counting") {
  CHECK(size(Code::star()) == 1);
  CHECK(size(Code::zero()) == 1);
  CHECK(size(Code::pi(Code::fin(2), Family::constant(Code::star()))) == 3);
  // Values embedded in codes count their constructors.
  CHECK(size(parse_code("(Id (Fin 2) (fin 0) (fin 1))")) == 4);
  CHECK(size(parse_code("(Quot (Fin 3) (rel ((fin 0) (fin 1))))")) == 4);
  CHECK(size(parse_code("(Sigma (Fin 2) (table ((fin 0) *) ((fin 1) 0)))")) == 4);
}

TEST_CASE("size is strictly monotone in subcodes") {
  Code inner = parse_code("(Pi (Fin 2) (const (Fin 3)))");
  Code outer = Code::sigma(inner, Family::constant(Code::star()));
  CHECK(size(outer) > size(inner));
  Code q = Code::quot(Code::fin(2), RelFamily({{Value::fin(0), Value::fin(1)}}));
  CHECK(size(q) > size(Code::fin(2)));
}

TEST_CASE("structural equality") {
  CHECK(code_eq(Code::star(), Code::star()));
  CHECK_FALSE(code_eq(Code::fin(2), Code::fin(3)));
  // Distinct syntax, equal semantics: still unequal.
  Code by_const = Code::pi(Code::fin(1), Family::constant(Code::star()));
  Code by_table = Code::pi(Code::fin(1), Family::table({{Value::fin(0), Code::star()}}));
  CHECK_FALSE(code_eq(by_const, by_table));
  // Table order is canonicalized before comparison.
  Code t1 = parse_code("(Pi (Fin 2) (table ((fin 0) *) ((fin 1) Nat)))");
  Code t2 = parse_code("(Pi (Fin 2) (table ((fin 1) Nat) ((fin 0) *)))");
  CHECK(code_eq(t1, t2));
}

TEST_CASE("construction invariants") {
  // Id endpoints must live in the carrier.
  CHECK_THROWS_AS(Code::id(Code::fin(2), Value::fin(2), Value::fin(0)), Error);
  CHECK_THROWS_AS(Code::id(Code::zero(), Value::star(), Value::star()), Error);
  // Tables must be total and exactly keyed.
  CHECK_THROWS_AS(Code::pi(Code::fin(2), Family::table({{Value::fin(0), Code::star()}})), Error);
  CHECK_THROWS_AS(Code::pi(Code::fin(1), Family::table({{Value::fin(0), Code::star()},
                                                        {Value::fin(1), Code::star()}})),
                  Error);
  // Only constant families over Nat.
  CHECK_THROWS_AS(Code::pi(Code::nat(), Family::table({})), Error);
  CHECK_NOTHROW(Code::pi(Code::nat(), Family::constant(Code::star())));
  // Quotient pairs must live in the carrier.
  CHECK_THROWS_AS(Code::quot(Code::fin(2), RelFamily({{Value::fin(0), Value::fin(2)}})), Error);
  // Duplicate table keys are rejected outright.
  CHECK_THROWS_AS(Family::table({{Value::fin(0), Code::star()}, {Value::fin(0), Code::nat()}}),
                  Error);
}

TEST_CASE("id over a quotient carrier accepts class aliases") {
  Code q = parse_code("(Quot (Fin 3) (rel ((fin 0) (fin 1))))");
  // class(fin 1) denotes the class of fin 0; construction accepts it.
  CHECK_NOTHROW(Code::id(q, Value::cls(Value::fin(1)), Value::cls(Value::fin(0))));
}
