#include "ukern/resize.hpp"

#include "ukern/error.hpp"
#include "ukern/sexpr.hpp"

namespace ukern {

Tri is_hprop(const Code& c) {
  return card(c).at_most_one() ? Tri::yes : Tri::no;
}

PropCode make_prop(const Code& c, std::size_t level, const TowerConfig& cfg) {
  if (is_hprop(c) != Tri::yes) fail(errc::not_a_proposition, print(c) + " is not an h-proposition");
  if (!level_member(c, level, cfg))
    fail(errc::level, print(c) + " is not a member of level " + std::to_string(level));
  return PropCode{c, level};
}

PropCode prop_res(const PropCode& p) {
  if (is_hprop(p.code) != Tri::yes)
    fail(errc::not_a_proposition, print(p.code) + " is not an h-proposition");
  Tri verdict = inhabited(p.code);
  if (verdict == Tri::unknown)
    fail(errc::undecidable, "inhabitation of " + print(p.code) + " is not decidable");
  return PropCode{Code::fin(verdict == Tri::yes ? 1 : 0), 0};
}

ResizeWitness resize_witness(const PropCode& p) {
  ResizeWitness w;
  if (!is_finitary(p.code)) return w;
  Code small = prop_res(p).code;
  Extension ext = decode(p.code);
  std::vector<std::pair<Value, Value>> fwd, inv;
  for (const Value& v : ext.elements) {
    fwd.emplace_back(v, Value::fin(0));
    inv.emplace_back(Value::fin(0), v);
  }
  w.forward = MapTable::make(p.code, small, std::move(fwd));
  w.inverse = MapTable::make(small, p.code, std::move(inv));
  return w;
}

bool prop_hom_exists(const PropCode& src, const PropCode& dst) {
  return inhabited(src.code) == Tri::no || inhabited(dst.code) == Tri::yes;
}

std::optional<PropHom> prop_hom(const PropCode& src, const PropCode& dst) {
  if (!prop_hom_exists(src, dst)) return std::nullopt;
  PropHom h{src, dst, std::nullopt};
  if (is_finitary(src.code) && is_finitary(dst.code)) {
    Extension s = decode(src.code);
    Extension d = decode(dst.code);
    std::vector<std::pair<Value, Value>> graph;
    for (const Value& v : s.elements) graph.emplace_back(v, d.elements.front());
    h.witness = MapTable::make(src.code, dst.code, std::move(graph));
  }
  return h;
}

PropHom prop_res_map(const PropHom& f) {
  PropCode rs = prop_res(f.src);
  PropCode rd = prop_res(f.dst);
  // A hom survives resizing: inhabitation verdicts are preserved exactly.
  auto h = prop_hom(rs, rd);
  if (!h) fail(errc::invalid_code, "resized hom vanished; endpoints were not propositions");
  return *h;
}

namespace {

void check_pair(const PropCode& p, const PropCode& q, AdjunctionReport& report) {
  auto blame = [&](const std::string& what) {
    report.violations.push_back(what + " for P = " + print(p.code) + ", Q = " + print(q.code));
  };

  PropCode rp = prop_res(p);
  if (!rk(rp.code).is_zero()) blame("resized code has nonzero rank");

  // The hom-set bijection, at the existence level.
  bool hom0 = prop_hom_exists(rp, q);
  bool homi = prop_hom_exists(p, q);
  if (hom0 != homi) blame("hom-set existence differs across the adjunction");

  // Uniqueness: between propositions there is at most one map, checked by
  // enumeration where the endpoints are enumerable.
  if (is_finitary(p.code)) {
    std::size_t n0 = all_maps(rp.code, q.code).size();
    std::size_t ni = all_maps(p.code, q.code).size();
    if (n0 != (hom0 ? 1u : 0u)) blame("hom-set at level 0 is not a singleton/empty as required");
    if (ni != (homi ? 1u : 0u)) blame("hom-set at level i is not a singleton/empty as required");

    // Composite identities through the resizing equivalence.
    ResizeWitness eps = resize_witness(p);
    if (eps.forward && eps.inverse) {
      if (auto g = prop_hom(rp, q); g && g->witness) {
        MapTable phi = compose(*g->witness, *eps.forward);        // Phi(g) = g . eps
        MapTable back = compose(phi, *eps.inverse);               // Psi(Phi(g))
        if (!map_eq(back, *g->witness)) blame("Psi . Phi is not the identity");
      }
      if (auto h = prop_hom(p, q); h && h->witness) {
        MapTable psi = compose(*h->witness, *eps.inverse);        // Psi(h) = h . eps^-1
        MapTable forth = compose(psi, *eps.forward);              // Phi(Psi(h))
        if (!map_eq(forth, *h->witness)) blame("Phi . Psi is not the identity");
      }
      // Triangle identities with eta = eps and delta = id. PropRes(eta_P)
      // composed with delta is eps . eps^-1 at the resized code.
      MapTable tri1 = compose(*eps.forward, *eps.inverse);
      if (!map_eq(tri1, MapTable::identity(rp.code))) blame("first triangle identity fails");
      MapTable tri2 = compose(*eps.inverse, *eps.forward);
      if (!map_eq(tri2, MapTable::identity(p.code))) blame("second triangle identity fails");
    }
  }

  // The counit side: resizing a level-0 proposition is the identity on
  // inhabitation, so eta at iota(Q) must be the identity map.
  PropCode rq = prop_res(PropCode{q.code, p.level});
  if (inhabited(rq.code) != inhabited(q.code)) blame("counit is not an identity on inhabitation");
}

}  // namespace

AdjunctionReport check_adjunction(const std::vector<PropCode>& population,
                                  const std::vector<PropCode>& targets) {
  AdjunctionReport report;
  for (const PropCode& p : population)
    for (const PropCode& q : targets) {
      ++report.pairs_checked;
      check_pair(p, q, report);
    }
  return report;
}

}  // namespace ukern
