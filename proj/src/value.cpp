#include "ukern/value.hpp"

#include <algorithm>

#include "ukern/error.hpp"

namespace ukern {

Value Value::star() { return Value(Tag::star, 0); }

Value Value::nat(std::uint64_t n) { return Value(Tag::nat, n); }

Value Value::fin(std::uint64_t k) { return Value(Tag::fin, k); }

Value Value::pair(Value fst, Value snd) {
  Value v(Tag::pair, 0);
  v.parts_ = std::make_shared<const std::vector<Value>>(std::vector<Value>{std::move(fst), std::move(snd)});
  return v;
}

Value Value::fun(std::vector<std::pair<Value, Value>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i - 1].first == entries[i].first)
      fail(errc::invalid_code, "duplicate key in function table");
  Value v(Tag::fun, 0);
  v.entries_ = std::make_shared<const std::vector<std::pair<Value, Value>>>(std::move(entries));
  return v;
}

Value Value::refl() { return Value(Tag::refl, 0); }

Value Value::cls(Value rep) {
  Value v(Tag::cls, 0);
  v.parts_ = std::make_shared<const std::vector<Value>>(std::vector<Value>{std::move(rep)});
  return v;
}

std::size_t Value::node_count() const {
  switch (tag_) {
    case Tag::star:
    case Tag::nat:
    case Tag::fin:
    case Tag::refl:
      return 1;
    case Tag::pair:
      return 1 + first().node_count() + second().node_count();
    case Tag::cls:
      return 1 + rep().node_count();
    case Tag::fun: {
      std::size_t n = 1;
      for (const auto& [k, v] : entries()) n += k.node_count() + v.node_count();
      return n;
    }
  }
  return 1;
}

int value_cmp(const Value& a, const Value& b) {
  if (a.tag() != b.tag()) return a.tag() < b.tag() ? -1 : 1;
  switch (a.tag()) {
    case Value::Tag::star:
    case Value::Tag::refl:
      return 0;
    case Value::Tag::nat:
    case Value::Tag::fin:
      if (a.num() != b.num()) return a.num() < b.num() ? -1 : 1;
      return 0;
    case Value::Tag::pair: {
      int c = value_cmp(a.first(), b.first());
      if (c != 0) return c;
      return value_cmp(a.second(), b.second());
    }
    case Value::Tag::cls:
      return value_cmp(a.rep(), b.rep());
    case Value::Tag::fun: {
      const auto& ea = a.entries();
      const auto& eb = b.entries();
      for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i) {
        int c = value_cmp(ea[i].first, eb[i].first);
        if (c != 0) return c;
        c = value_cmp(ea[i].second, eb[i].second);
        if (c != 0) return c;
      }
      if (ea.size() != eb.size()) return ea.size() < eb.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

}  // namespace ukern
