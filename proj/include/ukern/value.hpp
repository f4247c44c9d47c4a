#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ukern {

// Canonical elements of decoded types. Values are immutable and share
// structure; copying is cheap.
//
// The global canonical order is: constructor tag first (in the order the
// tags are declared below), then lexicographic on contents. It is what
// makes extensions, function tables and relation sets deterministic.
class Value {
 public:
  enum class Tag : std::uint8_t { star, nat, fin, pair, fun, refl, cls };

  static Value star();
  static Value nat(std::uint64_t n);
  static Value fin(std::uint64_t k);
  static Value pair(Value fst, Value snd);
  // Entries are sorted by key; duplicate keys are rejected.
  static Value fun(std::vector<std::pair<Value, Value>> entries);
  static Value refl();
  static Value cls(Value rep);

  Tag tag() const { return tag_; }
  std::uint64_t num() const { return num_; }  // nat / fin payload
  const Value& first() const { return (*parts_)[0]; }
  const Value& second() const { return (*parts_)[1]; }
  const Value& rep() const { return (*parts_)[0]; }
  const std::vector<std::pair<Value, Value>>& entries() const { return *entries_; }

  // Number of value constructors in this tree; the value contribution to
  // the node count of codes that embed values.
  std::size_t node_count() const;

 private:
  Value(Tag tag, std::uint64_t num) : tag_(tag), num_(num) {}

  Tag tag_ = Tag::star;
  std::uint64_t num_ = 0;
  std::shared_ptr<const std::vector<Value>> parts_;                           // pair, cls
  std::shared_ptr<const std::vector<std::pair<Value, Value>>> entries_;       // fun
};

// Three-way comparison in the canonical order: negative, zero, positive.
int value_cmp(const Value& a, const Value& b);

inline bool operator==(const Value& a, const Value& b) { return value_cmp(a, b) == 0; }
inline bool operator!=(const Value& a, const Value& b) { return value_cmp(a, b) != 0; }
inline bool operator<(const Value& a, const Value& b) { return value_cmp(a, b) < 0; }
inline bool operator<=(const Value& a, const Value& b) { return value_cmp(a, b) <= 0; }
inline bool operator>(const Value& a, const Value& b) { return value_cmp(a, b) > 0; }
inline bool operator>=(const Value& a, const Value& b) { return value_cmp(a, b) >= 0; }

}  // namespace ukern
