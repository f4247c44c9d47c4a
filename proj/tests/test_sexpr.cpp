#include <string>
#include <vector>

#include "doctest.h"
#include "ukern/code.hpp"
#include "ukern/error.hpp"
#include "ukern/sexpr.hpp"

using namespace ukern;

TEST_CASE("parsing the grammar") {
  Code c = parse_code("(Pi (Fin 2) (const *))");
  CHECK(c.tag() == Code::Tag::pi);
  CHECK(c.child().tag() == Code::Tag::fin);
  CHECK(c.family().is_constant());

  CHECK(parse_code("*").tag() == Code::Tag::star);
  CHECK(parse_code("Nat").tag() == Code::Tag::nat);
  CHECK(parse_code("0").tag() == Code::Tag::zero);

  Code idc = parse_code("(Id (Fin 2) (fin 0) (fin 1))");
  CHECK(idc.tag() == Code::Tag::id);
  CHECK(idc.lhs() == Value::fin(0));
  CHECK(idc.rhs() == Value::fin(1));

  CHECK(parse_code("  (Quot (Fin 3)\n  (rel ((fin 0) (fin 1))))").tag() == Code::Tag::quot);
}

TEST_CASE("printing is canonical") {
  CHECK(print(Code::star()) == "*");
  CHECK(print(Code::zero()) == "0");
  CHECK(print(Code::sigma(Code::fin(2), Family::constant(Code::fin(3)))) ==
        "(Sigma (Fin 2) (const (Fin 3)))");
  // Table entries print in canonical key order however they were given.
  Code t1 = parse_code("(Pi (Fin 2) (table ((fin 1) Nat) ((fin 0) *)))");
  CHECK(print(t1) == "(Pi (Fin 2) (table ((fin 0) *) ((fin 1) Nat)))");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_code("(Pi (Fin 2)"), doctest::Contains("unterminated"), Error);
  CHECK_THROWS_WITH_AS(parse_code("(Fin 2) *"), doctest::Contains("trailing"), Error);
  CHECK_THROWS_WITH_AS(parse_code("(Fin a)"), doctest::Contains("numeral"), Error);
  CHECK_THROWS_WITH_AS(parse_code("(Pi (Fin 2))"), doctest::Contains("arity"), Error);
  CHECK_THROWS_AS(parse_code("(Quot (Fin 2) (rel ((fin 5) (fin 0))))"), Error);  // not in carrier
  CHECK_THROWS_AS(parse_code("(Id (Fin 2) (fin 0) (nat 0))"), Error);
}

namespace {

struct Rng {
  std::uint64_t state = 0x853c49e6748fea9bull;
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
};

// Random well-formed code, biased toward small shapes.
Code random_code(Rng& rng, int depth) {
  switch (rng.next() % (depth > 0 ? 8 : 4)) {
    case 0:
      return Code::star();
    case 1:
      return Code::nat();
    case 2:
      return Code::zero();
    case 3:
      return Code::fin(rng.next() % 4);
    case 4: {
      Code dom = Code::fin(rng.next() % 3);
      if (rng.next() % 2) return Code::pi(dom, Family::constant(random_code(rng, depth - 1)));
      std::vector<std::pair<Value, Code>> entries;
      for (std::uint64_t k = 0; k < dom.fin_size(); ++k)
        entries.emplace_back(Value::fin(k), random_code(rng, depth - 1));
      return Code::pi(dom, Family::table(std::move(entries)));
    }
    case 5:
      return Code::sigma(Code::fin(rng.next() % 3), Family::constant(random_code(rng, depth - 1)));
    case 6: {
      std::uint64_t n = 1 + rng.next() % 3;
      return Code::id(Code::fin(n), Value::fin(rng.next() % n), Value::fin(rng.next() % n));
    }
    default: {
      std::uint64_t n = 1 + rng.next() % 3;
      std::vector<std::pair<Value, Value>> pairs;
      for (int i = rng.next() % 3; i > 0; --i)
        pairs.emplace_back(Value::fin(rng.next() % n), Value::fin(rng.next() % n));
      return Code::quot(Code::fin(n), RelFamily(std::move(pairs)));
    }
  }
}

}  // namespace

TEST_CASE("parse after print is the identity") {
  Rng rng;
  for (int i = 0; i < 400; ++i) {
    Code c = random_code(rng, 3);
    Code back = parse_code(print(c));
    CHECK(code_eq(c, back));
    CHECK(print(back) == print(c));
  }
}

TEST_CASE("value round trips") {
  for (const char* text : {"star", "refl", "(fin 3)", "(nat 12)", "(pair (fin 0) star)",
                           "(fun ((fin 0) (fin 1)) ((fin 1) (fin 0)))", "(class (fin 2))"}) {
    Value v = parse_value(text);
    CHECK(print(v) == text);
  }
}
