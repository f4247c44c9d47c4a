#include <vector>

#include "doctest.h"
#include "ukern/error.hpp"
#include "ukern/ordinal.hpp"

using namespace ukern;

namespace {

// Small deterministic generator for property loops.
struct Rng {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  RankOrdinal ordinal() { return ord(next() % 4, next() % 5, next() % 9); }
};

}  // namespace

TEST_CASE("sup of ordinal lists") {
  CHECK(sup({}) == ord_fin(0));
  std::vector<RankOrdinal> xs{ord(0, 1, 2), ord_fin(5)};
  CHECK(sup(xs) == ord(0, 1, 2));  // w > any finite
  std::vector<RankOrdinal> ys{ord_fin(3), ord_fin(7), ord_fin(7)};
  CHECK(sup(ys) == ord_fin(7));
}

TEST_CASE("succ") {
  CHECK(succ(ord_fin(0)) == ord_fin(1));
  CHECK(succ(ord(0, 2, 0)) == ord(0, 2, 1));
  CHECK(succ(ord(1, 0, 3)) == ord(1, 0, 4));
}

TEST_CASE("add_omega absorbs the finite part") {
  CHECK(add_omega(ord_fin(5)) == ord(0, 1, 0));
  CHECK(add_omega(ord(0, 1, 2)) == ord(0, 2, 0));
  CHECK(add_omega(ord(1, 0, 0)) == ord(1, 1, 0));
}

TEST_CASE("order is lexicographic") {
  CHECK(ord_fin(7) < ord_omega());
  CHECK(ord(0, 3, 99) < ord(1, 0, 0));
  CHECK(ord(1, 0, 0) < ord(1, 0, 1));
  CHECK(ord(2, 1, 0) == ord(2, 1, 0));
}

TEST_CASE("strict growth and the regularity surrogate") {
  Rng rng;
  for (int i = 0; i < 2000; ++i) {
    RankOrdinal x = rng.ordinal();
    CHECK(x < succ(x));
    CHECK(x < add_omega(x));
    for (std::uint64_t k = 1; k <= 4; ++k) {
      RankOrdinal budget = ord_omega2(k);
      if (x < budget) {
        CHECK(succ(x) < budget);
        CHECK(add_omega(x) < budget);
      }
    }
  }
}

TEST_CASE("sup behaves as a fold") {
  Rng rng;
  for (int i = 0; i < 500; ++i) {
    RankOrdinal a = rng.ordinal(), b = rng.ordinal(), c = rng.ordinal();
    CHECK(sup(a, a) == a);
    CHECK(sup(a, b) == sup(b, a));
    CHECK(sup(sup(a, b), c) == sup(a, sup(b, c)));
    std::vector<RankOrdinal> xs{a, b, c};
    RankOrdinal s = sup(xs);
    CHECK((s == a || s == b || s == c));
  }
}

TEST_CASE("textual form") {
  CHECK(to_string(ord_fin(0)) == "0");
  CHECK(to_string(ord_fin(7)) == "7");
  CHECK(to_string(ord(0, 1, 2)) == "w*1+2");
  CHECK(to_string(ord(1, 0, 0)) == "w2*1");
  CHECK(to_string(ord(2, 3, 4)) == "w2*2+w*3+4");

  CHECK(parse_ordinal("0") == ord_fin(0));
  CHECK(parse_ordinal("w*1+2") == ord(0, 1, 2));
  CHECK(parse_ordinal("w2*1") == ord(1, 0, 0));
  CHECK_THROWS_AS(parse_ordinal("w3*1"), Error);
  CHECK_THROWS_AS(parse_ordinal("1+w*1"), Error);

  Rng rng;
  for (int i = 0; i < 500; ++i) {
    RankOrdinal x = rng.ordinal();
    CHECK(parse_ordinal(to_string(x)) == x);
  }
}
