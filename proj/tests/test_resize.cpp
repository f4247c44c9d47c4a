#include <vector>

#include "doctest.h"
#include "ukern/error.hpp"
#include "ukern/resize.hpp"
#include "ukern/sexpr.hpp"

using namespace ukern;

TEST_CASE("h-proposition detection") {
  CHECK(is_hprop(parse_code("(Id (Fin 2) (fin 0) (fin 0))")) == Tri::yes);
  CHECK(is_hprop(Code::fin(2)) == Tri::no);
  CHECK(is_hprop(Code::zero()) == Tri::yes);
  CHECK(is_hprop(Code::star()) == Tri::yes);
  CHECK(is_hprop(Code::nat()) == Tri::no);
  CHECK(is_hprop(parse_code("(Quot (Fin 2) (rel ((fin 0) (fin 1))))")) == Tri::yes);
  CHECK(is_hprop(parse_code("(Pi Nat (const (Fin 1)))")) == Tri::yes);
  CHECK(is_hprop(parse_code("(Pi Nat (const (Fin 2)))")) == Tri::no);
}

TEST_CASE("resizing h-propositions to level 0") {
  TowerConfig cfg = TowerConfig::defaults();
  PropCode inhabited_prop = make_prop(parse_code("(Id (Fin 2) (fin 0) (fin 0))"), 1, cfg);
  PropCode empty_prop = make_prop(Code::zero(), 1, cfg);

  PropCode small = prop_res(inhabited_prop);
  CHECK(print(small.code) == "(Fin 1)");
  CHECK(small.level == 0);
  CHECK(rk(small.code).is_zero());

  PropCode none = prop_res(empty_prop);
  CHECK(print(none.code) == "(Fin 0)");
  CHECK(rk(none.code).is_zero());

  CHECK_THROWS_AS(make_prop(Code::fin(2), 1, cfg), Error);
  CHECK_THROWS_AS(prop_res(PropCode{Code::fin(2), 1}), Error);
}

TEST_CASE("resizing is idempotent and level independent") {
  TowerConfig cfg = TowerConfig::defaults();
  Code idc = parse_code("(Id (Fin 3) (fin 2) (fin 2))");
  PropCode at1 = make_prop(idc, 1, cfg);
  PropCode at5 = make_prop(idc, 5, cfg);
  CHECK(code_eq(prop_res(at1).code, prop_res(at5).code));
  PropCode twice = prop_res(prop_res(at1));
  CHECK(code_eq(twice.code, prop_res(at1).code));
}

TEST_CASE("the resizing witness is a two-sided equivalence") {
  TowerConfig cfg = TowerConfig::defaults();
  PropCode p = make_prop(parse_code("(Id (Fin 2) (fin 1) (fin 1))"), 1, cfg);
  ResizeWitness w = resize_witness(p);
  REQUIRE(w.forward.has_value());
  REQUIRE(w.inverse.has_value());
  CHECK(map_eq(compose(*w.forward, *w.inverse), MapTable::identity(prop_res(p).code)));
  CHECK(map_eq(compose(*w.inverse, *w.forward), MapTable::identity(p.code)));
}

TEST_CASE("hom existence between propositions") {
  TowerConfig cfg = TowerConfig::defaults();
  PropCode empty = make_prop(Code::zero(), 1, cfg);
  PropCode one = make_prop(Code::star(), 1, cfg);
  CHECK(prop_hom_exists(empty, one));
  CHECK(prop_hom_exists(empty, empty));
  CHECK(prop_hom_exists(one, one));
  CHECK_FALSE(prop_hom_exists(one, empty));
  CHECK(prop_hom(one, empty) == std::nullopt);
  auto h = prop_hom(empty, one);
  REQUIRE(h.has_value());
  REQUIRE(h->witness.has_value());
  CHECK(h->witness->graph().empty());
}

TEST_CASE("the resizing functor preserves identities and composites") {
  TowerConfig cfg = TowerConfig::defaults();
  std::vector<PropCode> props{
      make_prop(Code::zero(), 1, cfg),
      make_prop(Code::star(), 1, cfg),
      make_prop(parse_code("(Id (Fin 2) (fin 0) (fin 0))"), 1, cfg),
      make_prop(parse_code("(Id (Fin 2) (fin 0) (fin 1))"), 1, cfg),
      make_prop(parse_code("(Quot (Fin 2) (rel ((fin 0) (fin 1))))"), 1, cfg),
  };
  for (const PropCode& p : props) {
    // Identity maps to identity.
    auto idh = prop_hom(p, p);
    REQUIRE(idh.has_value());
    PropHom rid = prop_res_map(*idh);
    REQUIRE(rid.witness.has_value());
    CHECK(map_eq(*rid.witness, MapTable::identity(prop_res(p).code)));
  }
  // Composites map to composites: existence of f and g forces the image
  // composite to be the image of the composite, both being the unique hom.
  for (const PropCode& a : props)
    for (const PropCode& b : props)
      for (const PropCode& c : props) {
        auto f = prop_hom(a, b);
        auto g = prop_hom(b, c);
        if (!f || !g) continue;
        auto gf = prop_hom(a, c);
        REQUIRE(gf.has_value());
        PropHom lhs = prop_res_map(*gf);
        MapTable rhs = compose(*prop_res_map(*g).witness, *prop_res_map(*f).witness);
        CHECK(map_eq(*lhs.witness, rhs));
      }
}

TEST_CASE("adjunction report is clean on a small population") {
  TowerConfig cfg = TowerConfig::defaults();
  std::vector<PropCode> population{
      make_prop(Code::zero(), 1, cfg),
      make_prop(Code::star(), 1, cfg),
      make_prop(parse_code("(Id (Fin 2) (fin 0) (fin 1))"), 1, cfg),
      make_prop(parse_code("(Id (Fin 2) (fin 1) (fin 1))"), 1, cfg),
      make_prop(parse_code("(Pi Nat (const (Fin 1)))"), 1, cfg),
  };
  std::vector<PropCode> targets{PropCode{Code::fin(0), 0}, PropCode{Code::fin(1), 0}};
  AdjunctionReport report = check_adjunction(population, targets);
  CHECK(report.ok());
  CHECK(report.pairs_checked == population.size() * targets.size());
}
