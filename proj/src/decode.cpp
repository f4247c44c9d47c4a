#include "ukern/decode.hpp"

#include <algorithm>
#include <limits>

#include "ukern/error.hpp"
#include "ukern/partition.hpp"

namespace ukern {

namespace {

constexpr std::uint64_t kHugeBound = std::uint64_t{1} << 62;

Card mul(Card a, Card b) {
  if (a.is_zero() || b.is_zero()) return Card::finite(0);
  if (a.kind == Card::Kind::infinite || b.kind == Card::Kind::infinite) return Card::infinite();
  if (a.kind == Card::Kind::huge || b.kind == Card::Kind::huge) return Card::huge();
  if (a.n > kHugeBound / b.n) return Card::huge();
  return Card::finite(a.n * b.n);
}

Card add(Card a, Card b) {
  if (a.kind == Card::Kind::infinite || b.kind == Card::Kind::infinite) return Card::infinite();
  if (a.kind == Card::Kind::huge || b.kind == Card::Kind::huge) return Card::huge();
  if (a.n > kHugeBound - b.n) return Card::huge();
  return Card::finite(a.n + b.n);
}

Card pow_fin(Card base, std::uint64_t e) {
  Card out = Card::finite(1);
  for (std::uint64_t i = 0; i < e; ++i) {
    out = mul(out, base);
    if (out.is_zero() || out.kind != Card::Kind::finite) break;
  }
  return out;
}

}  // namespace

Card card(const Code& c) {
  switch (c.tag()) {
    case Code::Tag::star:
      return Card::finite(1);
    case Code::Tag::nat:
      return Card::infinite();
    case Code::Tag::fin:
      return Card::finite(c.fin_size());
    case Code::Tag::zero:
      return Card::finite(0);
    case Code::Tag::id:
      return Card::finite(value_eq(c.child(), c.lhs(), c.rhs()) ? 1 : 0);
    case Code::Tag::pi: {
      Card dom = card(c.child());
      if (dom.is_zero()) return Card::finite(1);
      const Family& fam = c.family();
      if (fam.is_constant()) {
        Card body = card(fam.body());
        if (dom.is_finite()) return pow_fin(body, dom.n);
        // Infinitely (or unmanageably) many copies of the same fibre.
        if (body.is_zero()) return Card::finite(0);
        if (body.kind == Card::Kind::finite && body.n == 1) return Card::finite(1);
        return dom.kind == Card::Kind::huge ? Card::huge() : Card::infinite();
      }
      Card out = Card::finite(1);
      for (const auto& [k, fc] : fam.entries()) out = mul(out, card(fc));
      return out;
    }
    case Code::Tag::sigma: {
      Card dom = card(c.child());
      if (dom.is_zero()) return Card::finite(0);
      const Family& fam = c.family();
      if (fam.is_constant()) return mul(dom, card(fam.body()));
      Card out = Card::finite(0);
      for (const auto& [k, fc] : fam.entries()) out = add(out, card(fc));
      return out;
    }
    case Code::Tag::quot: {
      Card base = card(c.child());
      if (!base.is_finite()) return base;  // finitely many pairs cannot collapse an infinite carrier
      // Merges only happen among the values mentioned by the relation, so
      // the class count is computable without enumerating the carrier.
      std::vector<Value> mentioned;
      for (const auto& [a, b] : c.rel().pairs()) {
        mentioned.push_back(normalize(c.child(), a));
        mentioned.push_back(normalize(c.child(), b));
      }
      std::sort(mentioned.begin(), mentioned.end());
      mentioned.erase(std::unique(mentioned.begin(), mentioned.end()), mentioned.end());
      auto index_of = [&](const Value& v) {
        return static_cast<std::size_t>(std::lower_bound(mentioned.begin(), mentioned.end(), v) - mentioned.begin());
      };
      std::vector<std::pair<std::size_t, std::size_t>> ipairs;
      for (const auto& [a, b] : c.rel().pairs())
        ipairs.emplace_back(index_of(normalize(c.child(), a)), index_of(normalize(c.child(), b)));
      std::vector<std::size_t> rep = closure_union_find(mentioned.size(), ipairs);
      std::size_t classes = 0;
      for (std::size_t i = 0; i < rep.size(); ++i)
        if (rep[i] == i) ++classes;
      return Card::finite(base.n - (mentioned.size() - classes));
    }
  }
  return Card::finite(0);
}

bool Extension::contains(const Value& v) const {
  if (nat_set) return v.tag() == Value::Tag::nat;
  return std::binary_search(elements.begin(), elements.end(), v);
}

bool is_finitary(const Code& c) {
  if (card(c).is_zero()) return true;  // decode short-circuits to the empty extension
  switch (c.tag()) {
    case Code::Tag::star:
    case Code::Tag::fin:
    case Code::Tag::zero:
    case Code::Tag::id:
      return true;
    case Code::Tag::nat:
      return false;
    case Code::Tag::quot:
      return is_finitary(c.child());
    case Code::Tag::pi:
    case Code::Tag::sigma: {
      if (!is_finitary(c.child())) return false;
      if (card(c.child()).is_zero()) return true;
      const Family& fam = c.family();
      if (fam.is_constant()) return is_finitary(fam.body());
      for (const auto& [k, fc] : fam.entries())
        if (!is_finitary(fc)) return false;
      return true;
    }
  }
  return false;
}

namespace {

Extension finite_extension(std::vector<Value> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return Extension{false, std::move(elements)};
}

// Least representative of v's class under the closure of rel, computed on
// the values the relation mentions; everything else is a singleton.
Value class_rep(const Code& carrier, const RelFamily& rel, const Value& v) {
  std::vector<Value> mentioned{v};
  for (const auto& [a, b] : rel.pairs()) {
    mentioned.push_back(normalize(carrier, a));
    mentioned.push_back(normalize(carrier, b));
  }
  std::sort(mentioned.begin(), mentioned.end());
  mentioned.erase(std::unique(mentioned.begin(), mentioned.end()), mentioned.end());
  auto index_of = [&](const Value& x) {
    return static_cast<std::size_t>(std::lower_bound(mentioned.begin(), mentioned.end(), x) - mentioned.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> ipairs;
  for (const auto& [a, b] : rel.pairs())
    ipairs.emplace_back(index_of(normalize(carrier, a)), index_of(normalize(carrier, b)));
  std::vector<std::size_t> rep = closure_union_find(mentioned.size(), ipairs);
  return mentioned[rep[index_of(v)]];
}

}  // namespace

Extension decode(const Code& c) {
  Card n = card(c);
  if (n.is_zero()) return Extension{};
  switch (c.tag()) {
    case Code::Tag::star:
      return Extension{false, {Value::star()}};
    case Code::Tag::nat:
      return Extension{true, {}};
    case Code::Tag::fin: {
      std::vector<Value> out;
      out.reserve(c.fin_size());
      for (std::uint64_t k = 0; k < c.fin_size(); ++k) out.push_back(Value::fin(k));
      return Extension{false, std::move(out)};
    }
    case Code::Tag::zero:
      return Extension{};
    case Code::Tag::id:
      return Extension{false, {Value::refl()}};  // the empty case returned above
    case Code::Tag::pi: {
      if (n.kind == Card::Kind::infinite)
        fail(errc::non_finitary, "cannot enumerate an infinite function space");
      Extension dom = decode(c.child());
      if (dom.nat_set) fail(errc::non_finitary, "cannot enumerate functions over Nat");
      if (!n.is_finite() || n.n > kDecodeCap)
        fail(errc::resource_limit, "extension of pi code exceeds the enumeration cap");
      std::vector<std::vector<Value>> fibres;
      fibres.reserve(dom.elements.size());
      for (const Value& x : dom.elements) {
        Extension fx = decode(c.family().fibre(x));
        if (fx.nat_set) fail(errc::non_finitary, "cannot enumerate functions into Nat");
        fibres.push_back(std::move(fx.elements));
      }
      // Odometer over fibre choices, last key fastest: canonical order.
      std::vector<Value> out;
      out.reserve(n.n);
      std::vector<std::size_t> idx(fibres.size(), 0);
      for (;;) {
        std::vector<std::pair<Value, Value>> entries;
        entries.reserve(fibres.size());
        for (std::size_t i = 0; i < fibres.size(); ++i)
          entries.emplace_back(dom.elements[i], fibres[i][idx[i]]);
        out.push_back(Value::fun(std::move(entries)));
        std::size_t i = fibres.size();
        while (i > 0) {
          --i;
          if (++idx[i] < fibres[i].size()) break;
          idx[i] = 0;
          if (i == 0) return finite_extension(std::move(out));
        }
        if (fibres.empty()) return finite_extension(std::move(out));
      }
    }
    case Code::Tag::sigma: {
      if (n.kind == Card::Kind::infinite)
        fail(errc::non_finitary, "cannot enumerate an infinite pair space");
      Extension dom = decode(c.child());
      if (dom.nat_set) fail(errc::non_finitary, "cannot enumerate pairs over Nat");
      if (!n.is_finite() || n.n > kDecodeCap)
        fail(errc::resource_limit, "extension of sigma code exceeds the enumeration cap");
      std::vector<Value> out;
      out.reserve(n.n);
      for (const Value& x : dom.elements) {
        Extension fx = decode(c.family().fibre(x));
        if (fx.nat_set) fail(errc::non_finitary, "cannot enumerate pairs into Nat");
        for (const Value& y : fx.elements) out.push_back(Value::pair(x, y));
      }
      return finite_extension(std::move(out));
    }
    case Code::Tag::quot: {
      Extension base = decode(c.child());
      if (base.nat_set) fail(errc::non_finitary, "cannot enumerate classes over Nat");
      auto index_of = [&](const Value& v) {
        return static_cast<std::size_t>(
            std::lower_bound(base.elements.begin(), base.elements.end(), v) - base.elements.begin());
      };
      std::vector<std::pair<std::size_t, std::size_t>> ipairs;
      for (const auto& [a, b] : c.rel().pairs())
        ipairs.emplace_back(index_of(normalize(c.child(), a)), index_of(normalize(c.child(), b)));
      std::vector<std::size_t> rep = closure_union_find(base.elements.size(), ipairs);
      std::vector<Value> out;
      for (std::size_t i = 0; i < rep.size(); ++i)
        if (rep[i] == i) out.push_back(Value::cls(base.elements[i]));
      return Extension{false, std::move(out)};  // ascending reps are already sorted
    }
  }
  return Extension{};
}

std::optional<Value> try_normalize(const Code& c, const Value& v) {
  switch (c.tag()) {
    case Code::Tag::star:
      if (v.tag() == Value::Tag::star) return v;
      return std::nullopt;
    case Code::Tag::nat:
      if (v.tag() == Value::Tag::nat) return v;
      return std::nullopt;
    case Code::Tag::fin:
      if (v.tag() == Value::Tag::fin && v.num() < c.fin_size()) return v;
      return std::nullopt;
    case Code::Tag::zero:
      return std::nullopt;
    case Code::Tag::id:
      if (v.tag() == Value::Tag::refl && value_eq(c.child(), c.lhs(), c.rhs())) return v;
      return std::nullopt;
    case Code::Tag::pi: {
      if (v.tag() != Value::Tag::fun) return std::nullopt;
      if (!is_finitary(c.child())) return std::nullopt;  // no table is total on an infinite domain
      Extension dom = decode(c.child());
      std::vector<std::pair<Value, Value>> entries;
      entries.reserve(v.entries().size());
      for (const auto& [k, val] : v.entries()) {
        auto nk = try_normalize(c.child(), k);
        if (!nk) return std::nullopt;
        auto nv = try_normalize(c.family().fibre(*nk), val);
        if (!nv) return std::nullopt;
        entries.emplace_back(*nk, *nv);
      }
      std::sort(entries.begin(), entries.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      if (entries.size() != dom.elements.size()) return std::nullopt;
      for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].first != dom.elements[i]) return std::nullopt;  // not total (or duplicated)
      return Value::fun(std::move(entries));
    }
    case Code::Tag::sigma: {
      if (v.tag() != Value::Tag::pair) return std::nullopt;
      auto x = try_normalize(c.child(), v.first());
      if (!x) return std::nullopt;
      auto y = try_normalize(c.family().fibre(*x), v.second());
      if (!y) return std::nullopt;
      return Value::pair(*x, *y);
    }
    case Code::Tag::quot: {
      if (v.tag() != Value::Tag::cls) return std::nullopt;
      auto inner = try_normalize(c.child(), v.rep());
      if (!inner) return std::nullopt;
      return Value::cls(class_rep(c.child(), c.rel(), *inner));
    }
  }
  return std::nullopt;
}

Value normalize(const Code& c, const Value& v) {
  auto n = try_normalize(c, v);
  if (!n) fail(errc::not_in_carrier, "value is not an element of the carrier");
  return *n;
}

bool member(const Code& c, const Value& v) { return try_normalize(c, v).has_value(); }

bool value_eq(const Code& u, const Value& a, const Value& b) {
  return normalize(u, a) == normalize(u, b);
}

Tri inhabited(const Code& c) {
  Card n = card(c);
  return n.is_zero() ? Tri::no : Tri::yes;
}

}  // namespace ukern
