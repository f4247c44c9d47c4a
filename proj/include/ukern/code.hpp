#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ukern/value.hpp"

namespace ukern {

struct CodeNode;

// A type code. Codes are immutable trees with shared structure; the
// factory functions validate the construction invariants, which for Id,
// Quot and tabulated families means checking membership against the
// decoded carrier. Everything downstream may therefore assume codes are
// well formed.
class Code {
 public:
  enum class Tag : std::uint8_t { star, nat, fin, zero, pi, sigma, id, quot };

  static Code star();
  static Code nat();
  static Code fin(std::uint64_t n);
  static Code zero();
  static Code pi(const Code& domain, const class Family& fam);
  static Code sigma(const Code& domain, const class Family& fam);
  static Code id(const Code& carrier, const Value& lhs, const Value& rhs);
  static Code quot(const Code& carrier, const class RelFamily& rel);

  Tag tag() const;
  std::uint64_t fin_size() const;       // fin
  const Code& child() const;            // pi/sigma domain, id/quot carrier
  const class Family& family() const;   // pi/sigma
  const Value& lhs() const;             // id
  const Value& rhs() const;             // id
  const class RelFamily& rel() const;   // quot

 private:
  explicit Code(std::shared_ptr<const CodeNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const CodeNode> node_;
};

// A total code-valued assignment on the decoded domain of the owning
// pi/sigma code: either a constant body or an extensional table whose
// key set must be exactly the canonical enumeration of the domain.
class Family {
 public:
  static Family constant(Code body);
  // Entries are sorted by key; totality is checked when the owning
  // pi/sigma code is built.
  static Family table(std::vector<std::pair<Value, Code>> entries);

  bool is_constant() const { return constant_; }
  const Code& body() const { return *body_; }
  const std::vector<std::pair<Value, Code>>& entries() const { return *entries_; }

  // Fibre over a canonical domain element.
  const Code& fibre(const Value& key) const;

 private:
  Family() = default;

  bool constant_ = true;
  std::shared_ptr<const Code> body_;
  std::shared_ptr<const std::vector<std::pair<Value, Code>>> entries_;
};

// An extensional binary relation on the decoded carrier: the set of
// related pairs. No closure properties are required here; reflexive,
// symmetric and transitive closure is computed downstream.
class RelFamily {
 public:
  RelFamily();
  explicit RelFamily(std::vector<std::pair<Value, Value>> pairs);  // sorts, dedups

  const std::vector<std::pair<Value, Value>>& pairs() const { return *pairs_; }

 private:
  std::shared_ptr<const std::vector<std::pair<Value, Value>>> pairs_;
};

struct CodeNode {
  Code::Tag tag = Code::Tag::star;
  std::uint64_t n = 0;
  std::optional<Code> child;
  std::optional<Family> fam;
  std::optional<Value> lhs, rhs;
  std::optional<RelFamily> rel;
};

inline Code::Tag Code::tag() const { return node_->tag; }
inline std::uint64_t Code::fin_size() const { return node_->n; }
inline const Code& Code::child() const { return *node_->child; }
inline const Family& Code::family() const { return *node_->fam; }
inline const Value& Code::lhs() const { return *node_->lhs; }
inline const Value& Code::rhs() const { return *node_->rhs; }
inline const RelFamily& Code::rel() const { return *node_->rel; }

// Node count of the code tree. Every code constructor counts one, family
// bodies count in full, and values embedded in Id endpoints and relation
// pairs count their value constructors. Table keys are not counted: they
// are forced by the domain.
std::size_t size(const Code& c);

// Structural equality. Tables and relation sets are stored sorted by the
// canonical value order, so plain recursion suffices.
bool code_eq(const Code& a, const Code& b);

}  // namespace ukern
