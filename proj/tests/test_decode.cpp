#include <algorithm>
#include <vector>

#include "doctest.h"
#include "ukern/decode.hpp"
#include "ukern/error.hpp"
#include "ukern/sexpr.hpp"

using namespace ukern;

TEST_CASE("base extensions") {
  CHECK(decode(Code::star()).elements == std::vector<Value>{Value::star()});
  CHECK(decode(Code::zero()).elements.empty());
  CHECK(decode(Code::fin(3)).elements ==
        std::vector<Value>{Value::fin(0), Value::fin(1), Value::fin(2)});
  CHECK(decode(Code::nat()).nat_set);
}

TEST_CASE("pi extension against brute-force function enumeration") {
  Code c = parse_code("(Pi (Fin 2) (const (Fin 3)))");
  // Independent oracle: both assignments spelled out digit by digit.
  std::vector<Value> expected;
  for (std::uint64_t a = 0; a < 3; ++a)
    for (std::uint64_t b = 0; b < 3; ++b)
      expected.push_back(Value::fun({{Value::fin(0), Value::fin(a)}, {Value::fin(1), Value::fin(b)}}));
  std::sort(expected.begin(), expected.end());
  Extension got = decode(c);
  CHECK(got.elements.size() == 9);
  CHECK(got.elements == expected);
  // Every member is total on the domain.
  for (const Value& f : got.elements) {
    CHECK(f.entries().size() == 2);
    CHECK(f.entries()[0].first == Value::fin(0));
    CHECK(f.entries()[1].first == Value::fin(1));
  }
}

TEST_CASE("sigma extension against direct pair enumeration") {
  Code c = parse_code("(Sigma (Fin 2) (table ((fin 0) (Fin 1)) ((fin 1) (Fin 3))))");
  std::vector<Value> expected{
      Value::pair(Value::fin(0), Value::fin(0)), Value::pair(Value::fin(1), Value::fin(0)),
      Value::pair(Value::fin(1), Value::fin(1)), Value::pair(Value::fin(1), Value::fin(2))};
  std::sort(expected.begin(), expected.end());
  CHECK(decode(c).elements == expected);
}

TEST_CASE("identity extensions") {
  CHECK(decode(parse_code("(Id (Fin 2) (fin 0) (fin 1))")).elements.empty());
  CHECK(decode(parse_code("(Id (Fin 2) (fin 1) (fin 1))")).elements ==
        std::vector<Value>{Value::refl()});
  CHECK(decode(parse_code("(Id Nat (nat 4) (nat 4))")).elements ==
        std::vector<Value>{Value::refl()});
}

TEST_CASE("quotient extensions use least representatives") {
  Code q = parse_code("(Quot (Fin 3) (rel ((fin 0) (fin 1))))");
  CHECK(decode(q).elements ==
        std::vector<Value>{Value::cls(Value::fin(0)), Value::cls(Value::fin(2))});
  CHECK(value_eq(q, Value::cls(Value::fin(0)), Value::cls(Value::fin(1))));
  CHECK_FALSE(value_eq(q, Value::cls(Value::fin(0)), Value::cls(Value::fin(2))));
}

TEST_CASE("value equality checks the carrier") {
  CHECK(value_eq(Code::fin(3), Value::fin(1), Value::fin(1)));
  CHECK_FALSE(value_eq(Code::fin(3), Value::fin(1), Value::fin(2)));
  CHECK_THROWS_AS(value_eq(Code::fin(3), Value::fin(3), Value::fin(0)), Error);
}

TEST_CASE("empty fibres kill dependent products") {
  Code c = parse_code("(Pi (Fin 2) (table ((fin 0) (Fin 1)) ((fin 1) 0)))");
  CHECK(inhabited(c) == Tri::no);
  CHECK(decode(c).elements.empty());
  // The mirror sum is inhabited through its first fibre only.
  Code s = parse_code("(Sigma (Fin 2) (table ((fin 0) (Fin 1)) ((fin 1) 0)))");
  CHECK(decode(s).elements.size() == 1);
}

TEST_CASE("inhabitation analysis") {
  CHECK(inhabited(Code::zero()) == Tri::no);
  CHECK(inhabited(Code::nat()) == Tri::yes);
  CHECK(inhabited(parse_code("(Pi Nat (const 0))")) == Tri::no);
  CHECK(inhabited(parse_code("(Pi Nat (const (Fin 1)))")) == Tri::yes);
  CHECK(inhabited(parse_code("(Sigma Nat (const 0))")) == Tri::no);
}

TEST_CASE("non-finitary enumeration fails loudly") {
  CHECK_THROWS_AS(decode(parse_code("(Pi Nat (const *))")), Error);
  CHECK_THROWS_AS(decode(parse_code("(Sigma (Fin 2) (const Nat))")), Error);
  CHECK_THROWS_AS(decode(parse_code("(Quot Nat (rel ((nat 0) (nat 1))))")), Error);
  // A pi over an empty domain is a singleton even with a wild body.
  CHECK(decode(parse_code("(Pi 0 (const Nat))")).elements ==
        std::vector<Value>{Value::fun({})});
}

TEST_CASE("cardinality analysis is exact") {
  CHECK(card(parse_code("(Pi (Fin 3) (const (Fin 3)))")).n == 27);
  CHECK(card(parse_code("(Sigma (Fin 3) (const (Fin 2)))")).n == 6);
  CHECK(card(parse_code("(Quot (Fin 3) (rel ((fin 0) (fin 1)) ((fin 1) (fin 2))))")).n == 1);
  CHECK(card(Code::nat()).kind == Card::Kind::infinite);
  // Saturation instead of overflow.
  Code big = Code::pi(parse_code("(Pi (Fin 3) (const (Fin 3)))"),
                      Family::constant(parse_code("(Pi (Fin 3) (const (Fin 3)))")));
  CHECK(card(big).kind == Card::Kind::huge);
}

TEST_CASE("decode is deterministic") {
  Code c = parse_code("(Pi (Fin 2) (const (Fin 2)))");
  Extension a = decode(c);
  Extension b = decode(c);
  CHECK(a.elements == b.elements);
}
