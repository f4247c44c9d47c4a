#include "ukern/limits.hpp"

#include <algorithm>
#include <map>

#include "ukern/decode.hpp"
#include "ukern/error.hpp"
#include "ukern/partition.hpp"
#include "ukern/sexpr.hpp"

namespace ukern {

Code product(const Code& a, const Code& b) { return Code::sigma(a, Family::constant(b)); }

Code equaliser(const MapTable& f, const MapTable& g) {
  if (!code_eq(f.src(), g.src()) || !code_eq(f.dst(), g.dst()))
    fail(errc::endpoint_mismatch, "equaliser: maps must be a parallel pair");
  Extension dom = decode(f.src());
  std::vector<std::pair<Value, Code>> entries;
  entries.reserve(dom.elements.size());
  for (const Value& a : dom.elements)
    entries.emplace_back(a, Code::id(f.dst(), f.apply(a), g.apply(a)));
  return Code::sigma(f.src(), Family::table(std::move(entries)));
}

Code coproduct(const Code& a, const Code& b) {
  return Code::sigma(Code::fin(2), Family::table({{Value::fin(0), a}, {Value::fin(1), b}}));
}

MapTable coproduct_inl(const Code& a, const Code& b) {
  Code sum = coproduct(a, b);
  Extension ext = decode(a);
  std::vector<std::pair<Value, Value>> graph;
  graph.reserve(ext.elements.size());
  for (const Value& v : ext.elements) graph.emplace_back(v, Value::pair(Value::fin(0), v));
  return MapTable::make(a, sum, std::move(graph));
}

MapTable coproduct_inr(const Code& a, const Code& b) {
  Code sum = coproduct(a, b);
  Extension ext = decode(b);
  std::vector<std::pair<Value, Value>> graph;
  graph.reserve(ext.elements.size());
  for (const Value& v : ext.elements) graph.emplace_back(v, Value::pair(Value::fin(1), v));
  return MapTable::make(b, sum, std::move(graph));
}

MapTable case_map(const MapTable& f, const MapTable& g) {
  if (!code_eq(f.dst(), g.dst())) fail(errc::endpoint_mismatch, "case_map: targets differ");
  Code sum = coproduct(f.src(), g.src());
  std::vector<std::pair<Value, Value>> graph;
  for (const auto& [k, v] : f.graph()) graph.emplace_back(Value::pair(Value::fin(0), k), v);
  for (const auto& [k, v] : g.graph()) graph.emplace_back(Value::pair(Value::fin(1), k), v);
  return MapTable::make(sum, f.dst(), std::move(graph));
}

const Value& Partition::rep_of(const Value& v) const {
  for (const auto& block : blocks)
    if (std::binary_search(block.begin(), block.end(), v)) return block.front();
  fail(errc::not_in_carrier, "value is in no block of the partition");
}

bool Partition::same_block(const Value& a, const Value& b) const {
  return rep_of(a) == rep_of(b);
}

Partition quotient_closure(const Code& carrier, const RelFamily& rel) {
  Extension base = decode(carrier);
  if (base.nat_set) fail(errc::non_finitary, "quotient closure needs an enumerable carrier");
  auto index_of = [&](const Value& v) {
    return static_cast<std::size_t>(
        std::lower_bound(base.elements.begin(), base.elements.end(), v) - base.elements.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> ipairs;
  ipairs.reserve(rel.pairs().size());
  for (const auto& [a, b] : rel.pairs())
    ipairs.emplace_back(index_of(normalize(carrier, a)), index_of(normalize(carrier, b)));

  std::vector<std::size_t> fast = closure_union_find(base.elements.size(), ipairs);
  std::size_t steps = 0;
  std::vector<std::size_t> slow = closure_iterative(base.elements.size(), ipairs, &steps);
  if (fast != slow)
    fail(errc::invalid_code, "quotient closure paths disagree on " + print(carrier));

  Partition out;
  out.stabilization_steps = steps;
  std::map<std::size_t, std::vector<Value>> by_rep;
  for (std::size_t i = 0; i < fast.size(); ++i) by_rep[fast[i]].push_back(base.elements[i]);
  out.blocks.reserve(by_rep.size());
  for (auto& [rep, block] : by_rep) out.blocks.push_back(std::move(block));
  return out;
}

Code coequaliser(const MapTable& p, const MapTable& q) {
  if (!code_eq(p.src(), q.src()) || !code_eq(p.dst(), q.dst()))
    fail(errc::endpoint_mismatch, "coequaliser: maps must be a parallel pair");
  Extension dom = decode(p.src());
  std::vector<std::pair<Value, Value>> pairs;
  pairs.reserve(dom.elements.size());
  for (const Value& x : dom.elements) pairs.emplace_back(p.apply(x), q.apply(x));
  return Code::quot(p.dst(), RelFamily(std::move(pairs)));
}

MapTable coequaliser_proj(const MapTable& p, const MapTable& q) {
  Code quot = coequaliser(p, q);
  Extension ext = decode(p.dst());
  std::vector<std::pair<Value, Value>> graph;
  graph.reserve(ext.elements.size());
  for (const Value& v : ext.elements)
    graph.emplace_back(v, normalize(quot, Value::cls(v)));
  return MapTable::make(p.dst(), quot, std::move(graph));
}

Code pushout(const MapTable& f, const MapTable& g) {
  if (!code_eq(f.src(), g.src())) fail(errc::endpoint_mismatch, "pushout: spans must share their apex");
  MapTable inl = coproduct_inl(f.dst(), g.dst());
  MapTable inr = coproduct_inr(f.dst(), g.dst());
  return coequaliser(compose(inl, f), compose(inr, g));
}

UniversalProblem initial_problem(const Code& candidate) {
  return UniversalProblem{DiagramKind::initial, {}, {}, candidate, {}};
}

UniversalProblem terminal_problem(const Code& candidate) {
  return UniversalProblem{DiagramKind::terminal, {}, {}, candidate, {}};
}

UniversalProblem product_problem(const Code& a, const Code& b) {
  Code prod = product(a, b);
  Extension ext = decode(prod);
  std::vector<std::pair<Value, Value>> g1, g2;
  for (const Value& v : ext.elements) {
    g1.emplace_back(v, v.first());
    g2.emplace_back(v, v.second());
  }
  return UniversalProblem{DiagramKind::product,
                          {a, b},
                          {},
                          prod,
                          {MapTable::make(prod, a, std::move(g1)), MapTable::make(prod, b, std::move(g2))}};
}

UniversalProblem equaliser_problem(const MapTable& f, const MapTable& g) {
  Code eq = equaliser(f, g);
  Extension ext = decode(eq);
  std::vector<std::pair<Value, Value>> leg;
  for (const Value& v : ext.elements) leg.emplace_back(v, v.first());
  return UniversalProblem{DiagramKind::equaliser,
                          {f.src(), f.dst()},
                          {f, g},
                          eq,
                          {MapTable::make(eq, f.src(), std::move(leg))}};
}

UniversalProblem coproduct_problem(const Code& a, const Code& b) {
  return UniversalProblem{DiagramKind::coproduct,
                          {a, b},
                          {},
                          coproduct(a, b),
                          {coproduct_inl(a, b), coproduct_inr(a, b)}};
}

UniversalProblem coequaliser_problem(const MapTable& p, const MapTable& q) {
  return UniversalProblem{DiagramKind::coequaliser,
                          {p.src(), p.dst()},
                          {p, q},
                          coequaliser(p, q),
                          {coequaliser_proj(p, q)}};
}

UniversalProblem pushout_problem(const MapTable& f, const MapTable& g) {
  Code po = pushout(f, g);
  MapTable inl = coproduct_inl(f.dst(), g.dst());
  MapTable inr = coproduct_inr(f.dst(), g.dst());
  // Legs A -> P and B -> P through the coproduct followed by the class map.
  Extension sum = decode(inl.dst());
  std::vector<std::pair<Value, Value>> proj;
  for (const Value& v : sum.elements) proj.emplace_back(v, normalize(po, Value::cls(v)));
  MapTable to_po = MapTable::make(inl.dst(), po, std::move(proj));
  return UniversalProblem{DiagramKind::pushout,
                          {f.src(), f.dst(), g.dst()},
                          {f, g},
                          po,
                          {compose(to_po, inl), compose(to_po, inr)}};
}

namespace {

std::string graph_key(const MapTable& m) {
  std::string out;
  for (const auto& [k, v] : m.graph()) out += "(" + print(k) + " " + print(v) + ")";
  return out;
}

std::string cone_key(const MapTable& a, const MapTable& b) {
  return graph_key(a) + "|" + graph_key(b);
}

UniversalResult bad(const UniversalProblem& p, const Code& z, const std::string& what,
                    std::size_t mediators) {
  return UniversalResult{false, what + " against target " + print(z) + " for candidate " +
                                    print(p.candidate) + " (mediators found: " +
                                    std::to_string(mediators) + ")"};
}

}  // namespace

// For every (co)cone with tip in the test family there must be exactly one
// mediating map. All mediators out of (or into) the candidate are
// enumerated once per target and bucketed by the (co)cone they induce, so
// "exactly one" is a lookup instead of a rescan.
UniversalResult check_universal(const UniversalProblem& p, const std::vector<Code>& test_family) {
  switch (p.kind) {
    case DiagramKind::initial: {
      for (const Code& z : test_family) {
        std::size_t n = all_maps(p.candidate, z).size();
        if (n != 1) return bad(p, z, "initial-map count", n);
      }
      return UniversalResult{};
    }
    case DiagramKind::terminal: {
      for (const Code& z : test_family) {
        std::size_t n = all_maps(z, p.candidate).size();
        if (n != 1) return bad(p, z, "terminal-map count", n);
      }
      return UniversalResult{};
    }
    case DiagramKind::product: {
      const MapTable& p1 = p.legs[0];
      const MapTable& p2 = p.legs[1];
      for (const Code& z : test_family) {
        std::map<std::string, std::size_t> induced;
        for (const MapTable& m : all_maps(z, p.candidate))
          ++induced[cone_key(compose(p1, m), compose(p2, m))];
        for (const MapTable& f : all_maps(z, p.objects[0]))
          for (const MapTable& g : all_maps(z, p.objects[1])) {
            auto it = induced.find(cone_key(f, g));
            std::size_t n = it == induced.end() ? 0 : it->second;
            if (n != 1) return bad(p, z, "product cone", n);
          }
      }
      return UniversalResult{};
    }
    case DiagramKind::equaliser: {
      const MapTable& f = p.arrows[0];
      const MapTable& g = p.arrows[1];
      const MapTable& leg = p.legs[0];
      if (!map_eq(compose(f, leg), compose(g, leg)))
        return UniversalResult{false, "equaliser leg does not equalise the pair"};
      for (const Code& z : test_family) {
        std::map<std::string, std::size_t> induced;
        for (const MapTable& m : all_maps(z, p.candidate)) ++induced[graph_key(compose(leg, m))];
        for (const MapTable& h : all_maps(z, f.src())) {
          if (!map_eq(compose(f, h), compose(g, h))) continue;
          auto it = induced.find(graph_key(h));
          std::size_t n = it == induced.end() ? 0 : it->second;
          if (n != 1) return bad(p, z, "equalising fork", n);
        }
      }
      return UniversalResult{};
    }
    case DiagramKind::coproduct: {
      const MapTable& inl = p.legs[0];
      const MapTable& inr = p.legs[1];
      for (const Code& z : test_family) {
        std::map<std::string, std::size_t> induced;
        for (const MapTable& m : all_maps(p.candidate, z))
          ++induced[cone_key(compose(m, inl), compose(m, inr))];
        for (const MapTable& f : all_maps(p.objects[0], z))
          for (const MapTable& g : all_maps(p.objects[1], z)) {
            auto it = induced.find(cone_key(f, g));
            std::size_t n = it == induced.end() ? 0 : it->second;
            if (n != 1) return bad(p, z, "coproduct cocone", n);
          }
      }
      return UniversalResult{};
    }
    case DiagramKind::coequaliser: {
      const MapTable& pp = p.arrows[0];
      const MapTable& qq = p.arrows[1];
      const MapTable& proj = p.legs[0];
      if (!map_eq(compose(proj, pp), compose(proj, qq)))
        return UniversalResult{false, "coequaliser projection does not coequalise the pair"};
      for (const Code& z : test_family) {
        std::map<std::string, std::size_t> induced;
        for (const MapTable& m : all_maps(p.candidate, z)) ++induced[graph_key(compose(m, proj))];
        for (const MapTable& h : all_maps(pp.dst(), z)) {
          if (!map_eq(compose(h, pp), compose(h, qq))) continue;
          auto it = induced.find(graph_key(h));
          std::size_t n = it == induced.end() ? 0 : it->second;
          if (n != 1) return bad(p, z, "coequalising cocone", n);
        }
      }
      return UniversalResult{};
    }
    case DiagramKind::pushout: {
      const MapTable& f = p.arrows[0];
      const MapTable& g = p.arrows[1];
      const MapTable& ja = p.legs[0];
      const MapTable& jb = p.legs[1];
      if (!map_eq(compose(ja, f), compose(jb, g)))
        return UniversalResult{false, "pushout square does not commute"};
      for (const Code& z : test_family) {
        std::map<std::string, std::size_t> induced;
        for (const MapTable& m : all_maps(p.candidate, z))
          ++induced[cone_key(compose(m, ja), compose(m, jb))];
        for (const MapTable& u : all_maps(f.dst(), z))
          for (const MapTable& v : all_maps(g.dst(), z)) {
            if (!map_eq(compose(u, f), compose(v, g))) continue;
            auto it = induced.find(cone_key(u, v));
            std::size_t n = it == induced.end() ? 0 : it->second;
            if (n != 1) return bad(p, z, "pushout cocone", n);
          }
      }
      return UniversalResult{};
    }
  }
  return UniversalResult{};
}

std::vector<Code> default_test_family(const UniversalProblem& p, std::uint64_t max_fin) {
  std::vector<Code> out;
  for (std::uint64_t k = 0; k <= max_fin; ++k) out.push_back(Code::fin(k));
  for (const Code& c : p.objects) out.push_back(c);
  return out;
}

}  // namespace ukern
