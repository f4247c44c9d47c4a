#include "ukern/code.hpp"

#include <algorithm>

#include "ukern/decode.hpp"
#include "ukern/error.hpp"

namespace ukern {

namespace {

std::shared_ptr<const CodeNode> leaf(Code::Tag tag, std::uint64_t n = 0) {
  auto node = std::make_shared<CodeNode>();
  node->tag = tag;
  node->n = n;
  return node;
}

}  // namespace

Code Code::star() { return Code(leaf(Tag::star)); }
Code Code::nat() { return Code(leaf(Tag::nat)); }
Code Code::fin(std::uint64_t n) { return Code(leaf(Tag::fin, n)); }
Code Code::zero() { return Code(leaf(Tag::zero)); }

namespace {

// Shared validation for pi and sigma: a constant family is total by
// construction (and the only legal shape over a non-enumerable domain),
// a table must be keyed by exactly the canonical enumeration of the domain.
void check_family(const Code& domain, const Family& fam, const char* former) {
  if (fam.is_constant()) return;
  if (!is_finitary(domain))
    fail(errc::invalid_code,
         std::string(former) + ": only a constant family is permitted over a non-enumerable domain");
  Extension dom = decode(domain);
  const auto& entries = fam.entries();
  if (entries.size() != dom.elements.size())
    fail(errc::invalid_code, std::string(former) + ": table is not total on the domain");
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].first != dom.elements[i])
      fail(errc::invalid_code, std::string(former) + ": table keys must be the canonical enumeration of the domain");
}

}  // namespace

Code Code::pi(const Code& domain, const Family& fam) {
  check_family(domain, fam, "pi");
  auto node = std::make_shared<CodeNode>();
  node->tag = Tag::pi;
  node->child = domain;
  node->fam = fam;
  return Code(std::move(node));
}

Code Code::sigma(const Code& domain, const Family& fam) {
  check_family(domain, fam, "sigma");
  auto node = std::make_shared<CodeNode>();
  node->tag = Tag::sigma;
  node->child = domain;
  node->fam = fam;
  return Code(std::move(node));
}

Code Code::id(const Code& carrier, const Value& lhs, const Value& rhs) {
  if (!member(carrier, lhs) || !member(carrier, rhs))
    fail(errc::not_in_carrier, "id: endpoint is not an element of the carrier");
  auto node = std::make_shared<CodeNode>();
  node->tag = Tag::id;
  node->child = carrier;
  node->lhs = lhs;
  node->rhs = rhs;
  return Code(std::move(node));
}

Code Code::quot(const Code& carrier, const RelFamily& rel) {
  for (const auto& [a, b] : rel.pairs())
    if (!member(carrier, a) || !member(carrier, b))
      fail(errc::not_in_carrier, "quot: related value is not an element of the carrier");
  auto node = std::make_shared<CodeNode>();
  node->tag = Tag::quot;
  node->child = carrier;
  node->rel = rel;
  return Code(std::move(node));
}

Family Family::constant(Code body) {
  Family f;
  f.constant_ = true;
  f.body_ = std::make_shared<const Code>(std::move(body));
  return f;
}

Family Family::table(std::vector<std::pair<Value, Code>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i - 1].first == entries[i].first)
      fail(errc::invalid_code, "duplicate key in family table");
  Family f;
  f.constant_ = false;
  f.entries_ = std::make_shared<const std::vector<std::pair<Value, Code>>>(std::move(entries));
  return f;
}

const Code& Family::fibre(const Value& key) const {
  if (constant_) return *body_;
  auto it = std::lower_bound(entries_->begin(), entries_->end(), key,
                             [](const auto& e, const Value& k) { return e.first < k; });
  if (it == entries_->end() || it->first != key)
    fail(errc::invalid_code, "family has no fibre over the given value");
  return it->second;
}

RelFamily::RelFamily() : pairs_(std::make_shared<const std::vector<std::pair<Value, Value>>>()) {}

RelFamily::RelFamily(std::vector<std::pair<Value, Value>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  pairs_ = std::make_shared<const std::vector<std::pair<Value, Value>>>(std::move(pairs));
}

std::size_t size(const Code& c) {
  switch (c.tag()) {
    case Code::Tag::star:
    case Code::Tag::nat:
    case Code::Tag::fin:
    case Code::Tag::zero:
      return 1;
    case Code::Tag::pi:
    case Code::Tag::sigma: {
      std::size_t n = 1 + size(c.child());
      const Family& fam = c.family();
      if (fam.is_constant()) {
        n += size(fam.body());
      } else {
        for (const auto& [k, fc] : fam.entries()) n += size(fc);
      }
      return n;
    }
    case Code::Tag::id:
      return 1 + size(c.child()) + c.lhs().node_count() + c.rhs().node_count();
    case Code::Tag::quot: {
      std::size_t n = 1 + size(c.child());
      for (const auto& [a, b] : c.rel().pairs()) n += a.node_count() + b.node_count();
      return n;
    }
  }
  return 1;
}

bool code_eq(const Code& a, const Code& b) {
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case Code::Tag::star:
    case Code::Tag::nat:
    case Code::Tag::zero:
      return true;
    case Code::Tag::fin:
      return a.fin_size() == b.fin_size();
    case Code::Tag::pi:
    case Code::Tag::sigma: {
      if (!code_eq(a.child(), b.child())) return false;
      const Family& fa = a.family();
      const Family& fb = b.family();
      if (fa.is_constant() != fb.is_constant()) return false;
      if (fa.is_constant()) return code_eq(fa.body(), fb.body());
      if (fa.entries().size() != fb.entries().size()) return false;
      for (std::size_t i = 0; i < fa.entries().size(); ++i) {
        if (fa.entries()[i].first != fb.entries()[i].first) return false;
        if (!code_eq(fa.entries()[i].second, fb.entries()[i].second)) return false;
      }
      return true;
    }
    case Code::Tag::id:
      return code_eq(a.child(), b.child()) && a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Code::Tag::quot: {
      if (!code_eq(a.child(), b.child())) return false;
      return a.rel().pairs() == b.rel().pairs();
    }
  }
  return false;
}

}  // namespace ukern
