#include "ukern/suites.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <thread>

#include "ukern/decode.hpp"
#include "ukern/error.hpp"
#include "ukern/limits.hpp"
#include "ukern/partition.hpp"
#include "ukern/resize.hpp"
#include "ukern/sexpr.hpp"
#include "ukern/tower.hpp"

namespace ukern {

namespace {

// Number of elements a suite is willing to enumerate per decode.
constexpr std::uint64_t kSuiteDecodeCap = 100'000;

struct Collector {
  SuiteReport report;

  void fail_case(const Code& c, const std::string& detail) {
    ++report.failures_total;
    report.failures.push_back(SuiteFailure{size(c), print(c), detail});
  }

  void fail_item(const std::string& item, const std::string& detail) {
    ++report.failures_total;
    report.failures.push_back(SuiteFailure{0, item, detail});
  }

  SuiteReport finish() {
    std::sort(report.failures.begin(), report.failures.end(), [](const auto& a, const auto& b) {
      if (a.size != b.size) return a.size < b.size;
      if (a.item != b.item) return a.item < b.item;
      return a.detail < b.detail;
    });
    if (report.failures.size() > 25) report.failures.resize(25);
    return std::move(report);
  }
};

EnumBounds to_enum_bounds(const SuiteBounds& b) {
  return EnumBounds{b.max_size, b.max_fin, true, b.cap};
}

// Checks are pure over immutable codes, so they run chunked in parallel;
// merging the per-chunk tallies in chunk order is the only join and keeps
// reports deterministic.
void parallel_over(const std::vector<Code>& codes, Collector& col,
                   const std::function<void(const Code&, Collector&)>& per_code) {
  std::size_t workers = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), 8);
  std::size_t chunk = (codes.size() + workers - 1) / std::max<std::size_t>(workers, 1);
  if (chunk == 0) return;
  std::vector<std::future<Collector>> parts;
  for (std::size_t begin = 0; begin < codes.size(); begin += chunk) {
    std::size_t end = std::min(codes.size(), begin + chunk);
    parts.push_back(std::async(std::launch::async, [&, begin, end] {
      Collector local;
      for (std::size_t i = begin; i < end; ++i) per_code(codes[i], local);
      return local;
    }));
  }
  for (auto& part : parts) {
    Collector local = part.get();
    col.report.checked += local.report.checked;
    col.report.skipped += local.report.skipped;
    col.report.failures_total += local.report.failures_total;
    for (auto& f : local.report.failures) col.report.failures.push_back(std::move(f));
  }
}

std::string extension_fingerprint(const Code& c) {
  std::string out;
  for (const Value& v : decode(c).elements) out += print(v) + ";";
  return out;
}

// Enumerable carriers with at most `card_bound` elements, one per distinct
// (extension, rank) pair, plus the Fin ladder up to the bound itself.
std::vector<Code> small_carriers(const CodePopulation& pop, std::uint64_t card_bound,
                                 bool rank_matters) {
  std::vector<Code> out;
  std::set<std::string> seen;
  auto consider = [&](const Code& c) {
    Card n = card(c);
    if (!n.is_finite() || n.n > card_bound || !is_finitary(c)) return;
    std::string key = extension_fingerprint(c);
    if (rank_matters) key += "#" + to_string(rk(c));
    if (seen.insert(key).second) out.push_back(c);
  };
  for (std::uint64_t k = 0; k <= card_bound; ++k) consider(Code::fin(k));
  for (const Code& c : pop.codes) consider(c);
  return out;
}

std::vector<Code> fin_grid(std::uint64_t max_fin) {
  std::vector<Code> out;
  for (std::uint64_t k = 0; k <= max_fin; ++k) out.push_back(Code::fin(k));
  return out;
}

void suite_rank_adequacy(const SuiteBounds& b, const TowerConfig&, Collector& col) {
  CodePopulation pop = enumerate_codes(to_enum_bounds(b));
  std::vector<RankOrdinal> grk = generation_ranks(pop);
  for (std::size_t i = 0; i < pop.codes.size(); ++i) {
    ++col.report.checked;
    RankOrdinal structural = rk(pop.codes[i]);
    if (grk[i] != structural)
      col.fail_case(pop.codes[i],
                    "generation rank " + to_string(grk[i]) + " != rk " + to_string(structural));
  }
}

void suite_pi_sigma_closure(const SuiteBounds& b, const TowerConfig& cfg, Collector& col) {
  CodePopulation pop = enumerate_codes(to_enum_bounds(b));
  // Every pi/sigma already in the population.
  for (const Code& c : pop.codes) {
    if (c.tag() != Code::Tag::pi && c.tag() != Code::Tag::sigma) continue;
    ++col.report.checked;
    if (!level_member(c, 0, cfg)) col.fail_case(c, "composite left level 0");
  }
  // Fresh pairs, one witness per (rank, empty-domain) class: membership of
  // Pi(A, const B) depends on nothing else, so the classes are exhaustive.
  std::map<std::pair<RankOrdinal, bool>, Code> witnesses;
  for (const Code& c : pop.codes)
    witnesses.emplace(std::make_pair(rk(c), card(c).is_zero()), c);
  for (const auto& [ka, a] : witnesses)
    for (const auto& [kb, bcode] : witnesses) {
      if (!level_member(a, 0, cfg) || !level_member(bcode, 0, cfg)) continue;
      Code pi = Code::pi(a, Family::constant(bcode));
      Code sigma = Code::sigma(a, Family::constant(bcode));
      col.report.checked += 2;
      if (!level_member(pi, 0, cfg)) col.fail_case(pi, "pi code left level 0");
      if (!level_member(sigma, 0, cfg)) col.fail_case(sigma, "sigma code left level 0");
    }
}

void suite_decode_counts(const SuiteBounds& b, const TowerConfig&, Collector& col) {
  CodePopulation pop = enumerate_codes(to_enum_bounds(b));
  parallel_over(pop.codes, col, [](const Code& c, Collector& out) {
    if (c.tag() != Code::Tag::pi && c.tag() != Code::Tag::sigma) return;
    // The counting laws quantify over fully enumerable inputs: the code,
    // its domain, and every fibre.
    if (!is_finitary(c) || !is_finitary(c.child())) return;
    Card n = card(c);
    Card dn = card(c.child());
    if (!n.is_finite() || n.n > kSuiteDecodeCap || !dn.is_finite() || dn.n > kSuiteDecodeCap) {
      ++out.report.skipped;
      return;
    }
    Extension dom = decode(c.child());
    std::uint64_t expected = c.tag() == Code::Tag::pi ? 1 : 0;
    for (const Value& x : dom.elements) {
      const Code& fc = c.family().fibre(x);
      if (!is_finitary(fc)) return;
      Extension fx = decode(fc);
      expected = c.tag() == Code::Tag::pi ? expected * fx.elements.size()
                                          : expected + fx.elements.size();
    }
    ++out.report.checked;
    Extension ext = decode(c);
    if (!std::is_sorted(ext.elements.begin(), ext.elements.end()) ||
        std::adjacent_find(ext.elements.begin(), ext.elements.end()) != ext.elements.end()) {
      out.fail_case(c, "extension is not canonically ordered");
      return;
    }
    if (ext.elements.size() != expected)
      out.fail_case(c, "cardinality " + std::to_string(ext.elements.size()) + " != expected " +
                           std::to_string(expected));
  });
}

void suite_id_closure(const SuiteBounds& b, const TowerConfig&, Collector& col) {
  CodePopulation pop = enumerate_codes(to_enum_bounds(b));
  for (const Code& u : small_carriers(pop, b.max_fin + 1, false)) {
    Extension ext = decode(u);
    for (const Value& s : ext.elements)
      for (const Value& t : ext.elements) {
        ++col.report.checked;
        Code idc = Code::id(u, s, t);
        std::size_t n = decode(idc).elements.size();
        bool eq = value_eq(u, s, t);
        if (n > 1) col.fail_case(idc, "identity type with more than one inhabitant");
        if ((n == 1) != eq)
          col.fail_case(idc, "inhabitation disagrees with element equality");
      }
  }
}

void suite_limits(const SuiteBounds& b, const TowerConfig&, Collector& col) {
  std::vector<Code> grid = fin_grid(std::min<std::uint64_t>(b.max_fin, 3));
  std::vector<Code> family = grid;
  family.push_back(Code::star());
  family.push_back(Code::zero());

  // Terminal object: exactly one map into star from everything.
  auto terminal = terminal_problem(Code::star());
  UniversalResult tr = check_universal(terminal, family);
  ++col.report.checked;
  if (!tr.ok) col.fail_item("*", tr.counterexample);

  // Product counting law.
  for (const Code& a : family)
    for (const Code& bc : family) {
      ++col.report.checked;
      Code prod = product(a, bc);
      std::size_t n = decode(prod).elements.size();
      std::size_t expected = decode(a).elements.size() * decode(bc).elements.size();
      if (n != expected) col.fail_case(prod, "product cardinality law fails");
    }

  // Equaliser extension equals the pointwise filter.
  for (const Code& a : grid)
    for (const Code& bc : grid) {
      std::vector<MapTable> maps = all_maps(a, bc);
      for (const MapTable& f : maps)
        for (const MapTable& g : maps) {
          ++col.report.checked;
          Code eq = equaliser(f, g);
          std::vector<Value> got;
          for (const Value& v : decode(eq).elements) got.push_back(v.first());
          std::vector<Value> expected;
          for (const Value& x : decode(a).elements)
            if (value_eq(bc, f.apply(x), g.apply(x))) expected.push_back(x);
          if (got != expected) col.fail_case(eq, "equaliser does not match the pointwise filter");
        }
    }

  // Universal property spot checks for the limit side.
  for (const Code& a : grid)
    for (const Code& bc : grid) {
      ++col.report.checked;
      auto pp = product_problem(a, bc);
      UniversalResult r = check_universal(pp, default_test_family(pp, b.max_fin + 1));
      if (!r.ok) col.fail_case(pp.candidate, r.counterexample);
    }
}

void suite_colimits(const SuiteBounds& b, const TowerConfig&, Collector& col) {
  std::vector<Code> grid = fin_grid(std::min<std::uint64_t>(b.max_fin, 3));
  std::uint64_t target_fin = b.max_fin + 1;

  auto initial = initial_problem(Code::zero());
  UniversalResult ir = check_universal(initial, default_test_family(initial, target_fin));
  ++col.report.checked;
  if (!ir.ok) col.fail_item("0", ir.counterexample);

  for (const Code& a : grid)
    for (const Code& bc : grid) {
      ++col.report.checked;
      auto p = coproduct_problem(a, bc);
      UniversalResult r = check_universal(p, default_test_family(p, target_fin));
      if (!r.ok) col.fail_case(p.candidate, r.counterexample);
    }

  for (const Code& r : grid)
    for (const Code& s : grid) {
      std::vector<MapTable> maps = all_maps(r, s);
      for (const MapTable& p : maps)
        for (const MapTable& q : maps) {
          ++col.report.checked;
          auto prob = coequaliser_problem(p, q);
          UniversalResult res = check_universal(prob, default_test_family(prob, target_fin));
          if (!res.ok) col.fail_case(prob.candidate, res.counterexample);
        }
    }
}

void quotient_checks(const Code& u, const Extension& ext, const RelFamily& rel,
                     const TowerConfig& cfg, Collector& col) {
  Code q = Code::quot(u, rel);
  ++col.report.checked;
  RankOrdinal expected = add_omega(sup(rk(u), RankOrdinal{}));
  if (rk(q) != expected) {
    col.fail_case(q, "quotient rank is not add_omega of its parts");
    return;
  }
  for (std::size_t lvl = 0; lvl < cfg.levels(); ++lvl)
    if (level_member(u, lvl, cfg) && !level_member(q, lvl, cfg))
      col.fail_case(q, "quotient left level " + std::to_string(lvl));
  try {
    Partition part = quotient_closure(u, rel);
    if (part.stabilization_steps > ext.elements.size())
      col.fail_case(q, "closure took more steps than the carrier size");
    if (decode(q).elements.size() != part.blocks.size())
      col.fail_case(q, "decoded class count differs from the partition");
  } catch (const Error& e) {
    col.fail_case(q, e.what());
  }
}

void suite_quotient_stability(const SuiteBounds& b, const TowerConfig& cfg, Collector& col) {
  std::uint64_t card_bound = b.max_fin + 1;
  // Closure behavior is determined by the pair pattern on element indices
  // (canonical members normalize to themselves), so running every relation
  // on the Fin ladder covers every relation on every carrier shape of the
  // same cardinality. The rank and level clauses do not depend on the
  // relation at all, so the composite carriers below get every relation
  // with at most one generating pair plus the total one.
  for (std::uint64_t k = 0; k <= std::min<std::uint64_t>(card_bound, 4); ++k) {
    Code u = Code::fin(k);
    Extension ext = decode(u);
    std::vector<std::pair<Value, Value>> all_pairs;
    for (const Value& a : ext.elements)
      for (const Value& bv : ext.elements) all_pairs.emplace_back(a, bv);
    std::uint64_t subsets = std::uint64_t{1} << all_pairs.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      std::vector<std::pair<Value, Value>> pairs;
      for (std::size_t i = 0; i < all_pairs.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) pairs.push_back(all_pairs[i]);
      quotient_checks(u, ext, RelFamily(pairs), cfg, col);
    }
  }
  CodePopulation pop = enumerate_codes(to_enum_bounds(b));
  for (const Code& u : small_carriers(pop, card_bound, true)) {
    Extension ext = decode(u);
    quotient_checks(u, ext, RelFamily{}, cfg, col);
    std::vector<std::pair<Value, Value>> total;
    for (const Value& a : ext.elements)
      for (const Value& bv : ext.elements) {
        quotient_checks(u, ext, RelFamily({{a, bv}}), cfg, col);
        total.emplace_back(a, bv);
      }
    if (!total.empty()) quotient_checks(u, ext, RelFamily(total), cfg, col);
  }
}

void suite_cumulativity(const SuiteBounds& b, const TowerConfig& cfg, Collector& col) {
  CodePopulation pop = enumerate_codes(to_enum_bounds(b));
  CumulativityReport rep = check_cumulativity(pop.codes, cfg);
  col.report.checked += rep.pairs_checked;
  for (const std::string& v : rep.violations) col.fail_item("population", v);

  // Boundary case: with the non-default budget w*1 the rank-omega quotient
  // sits exactly on the first budget, so it appears only from level 1 on.
  TowerConfig tight = TowerConfig::from_budgets({ord_omega(), ord_omega2(1)});
  Code q = Code::quot(Code::fin(3), RelFamily{});
  ++col.report.checked;
  if (level_member(q, 0, tight) || !level_member(q, 1, tight))
    col.fail_case(q, "budget boundary case misplaced");
}

void suite_lift_pi(const SuiteBounds& b, const TowerConfig& cfg, Collector& col) {
  CodePopulation pop = enumerate_codes(to_enum_bounds(b));
  std::size_t top = cfg.levels() - 1;
  parallel_over(pop.codes, col, [&cfg, top](const Code& c, Collector& out) {
    if (c.tag() != Code::Tag::pi) return;
    ++out.report.checked;
    bool ok = check_pi_preservation(c.child(), c.family(), 0, 0, cfg) &&
              check_pi_preservation(c.child(), c.family(), 0, 1, cfg) &&
              check_pi_preservation(c.child(), c.family(), 0, top, cfg);
    if (!ok) out.fail_case(c, "lift does not commute with the pi former");
  });
  // Strict functoriality of lift on a slice of the population.
  std::size_t sample = std::min<std::size_t>(pop.codes.size(), 100);
  for (std::size_t i = 0; i < sample; ++i) {
    const Code& c = pop.codes[i];
    ++col.report.checked;
    LeveledCode base = make_leveled(c, 0, cfg);
    LeveledCode two_hops = lift(lift(base, 1, cfg), top, cfg);
    LeveledCode one_hop = lift(base, top, cfg);
    bool ok = code_eq(two_hops.code, one_hop.code) && two_hops.level == one_hop.level &&
              code_eq(lift(base, 0, cfg).code, c);
    if (!ok) col.fail_case(c, "lift is not strictly functorial");
  }
}

void suite_adjunction(const SuiteBounds& b, const TowerConfig& cfg, Collector& col) {
  CodePopulation pop = enumerate_codes(to_enum_bounds(b));
  std::size_t source_level = std::min<std::size_t>(1, cfg.levels() - 1);
  std::vector<PropCode> population;
  for (const Code& c : pop.codes)
    if (is_hprop(c) == Tri::yes && level_member(c, source_level, cfg))
      population.push_back(PropCode{c, source_level});
  std::vector<PropCode> targets{PropCode{Code::fin(0), 0}, PropCode{Code::fin(1), 0}};
  AdjunctionReport rep = check_adjunction(population, targets);
  col.report.checked += rep.pairs_checked;
  for (const std::string& v : rep.violations) col.fail_item("adjunction", v);
}

void suite_maclane_pushout(const SuiteBounds& b, const TowerConfig&, Collector& col) {
  std::vector<Code> grid = fin_grid(std::min<std::uint64_t>(b.max_fin, 3));
  for (const Code& apex : grid)
    for (const Code& a : grid)
      for (const Code& bc : grid) {
        std::vector<MapTable> fs = all_maps(apex, a);
        std::vector<MapTable> gs = all_maps(apex, bc);
        for (const MapTable& f : fs)
          for (const MapTable& g : gs) {
            ++col.report.checked;
            Code po = pushout(f, g);
            std::size_t got = decode(po).elements.size();
            // Direct finite colimit of the span, computed from scratch:
            // tagged union indices glued along the span images.
            std::size_t na = decode(a).elements.size();
            std::size_t nb = decode(bc).elements.size();
            Extension apex_ext = decode(apex);
            Extension a_ext = decode(a);
            Extension b_ext = decode(bc);
            auto index_in = [](const Extension& ext, const Value& v) {
              return static_cast<std::size_t>(
                  std::lower_bound(ext.elements.begin(), ext.elements.end(), v) -
                  ext.elements.begin());
            };
            std::vector<std::pair<std::size_t, std::size_t>> glue;
            for (const Value& x : apex_ext.elements)
              glue.emplace_back(index_in(a_ext, f.apply(x)), na + index_in(b_ext, g.apply(x)));
            std::vector<std::size_t> rep = closure_iterative(na + nb, glue);
            std::set<std::size_t> classes(rep.begin(), rep.end());
            if (got != classes.size())
              col.fail_case(po, "pushout cardinality differs from the direct colimit");
          }
      }
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteBounds& bounds, const TowerConfig& cfg) {
  Collector col;
  col.report.suite = name;
  col.report.bounds = bounds;
  if (name == "rank-adequacy")
    suite_rank_adequacy(bounds, cfg, col);
  else if (name == "pi-sigma-closure")
    suite_pi_sigma_closure(bounds, cfg, col);
  else if (name == "decode-counts")
    suite_decode_counts(bounds, cfg, col);
  else if (name == "id-closure")
    suite_id_closure(bounds, cfg, col);
  else if (name == "limits")
    suite_limits(bounds, cfg, col);
  else if (name == "colimits")
    suite_colimits(bounds, cfg, col);
  else if (name == "quotient-stability")
    suite_quotient_stability(bounds, cfg, col);
  else if (name == "cumulativity")
    suite_cumulativity(bounds, cfg, col);
  else if (name == "lift-pi")
    suite_lift_pi(bounds, cfg, col);
  else if (name == "adjunction")
    suite_adjunction(bounds, cfg, col);
  else if (name == "maclane-pushout")
    suite_maclane_pushout(bounds, cfg, col);
  else
    fail(errc::unknown_suite, "unknown suite '" + name + "'");
  return col.finish();
}

}  // namespace ukern
