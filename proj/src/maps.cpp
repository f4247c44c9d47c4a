#include "ukern/maps.hpp"

#include <algorithm>

#include "ukern/decode.hpp"
#include "ukern/error.hpp"

namespace ukern {

MapTable MapTable::make(Code src, Code dst, std::vector<std::pair<Value, Value>> graph) {
  Extension dom = decode(src);
  if (dom.nat_set) fail(errc::non_finitary, "map source must be enumerable");
  std::vector<std::pair<Value, Value>> canon;
  canon.reserve(graph.size());
  for (auto& [k, v] : graph) canon.emplace_back(normalize(src, k), normalize(dst, v));
  std::sort(canon.begin(), canon.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < canon.size(); ++i)
    if (canon[i - 1].first == canon[i].first)
      fail(errc::invalid_code, "map graph has a duplicate key");
  if (canon.size() != dom.elements.size())
    fail(errc::invalid_code, "map graph is not total on its source");
  for (std::size_t i = 0; i < canon.size(); ++i)
    if (canon[i].first != dom.elements[i])
      fail(errc::invalid_code, "map graph is not total on its source");
  return MapTable(std::move(src), std::move(dst), std::move(canon));
}

MapTable MapTable::identity(const Code& a) {
  Extension ext = decode(a);
  if (ext.nat_set) fail(errc::non_finitary, "identity map needs an enumerable code");
  std::vector<std::pair<Value, Value>> graph;
  graph.reserve(ext.elements.size());
  for (const Value& v : ext.elements) graph.emplace_back(v, v);
  return MapTable(a, a, std::move(graph));
}

MapTable MapTable::constant(const Code& src, const Code& dst, const Value& image) {
  Extension dom = decode(src);
  if (dom.nat_set) fail(errc::non_finitary, "map source must be enumerable");
  Value img = normalize(dst, image);
  std::vector<std::pair<Value, Value>> graph;
  graph.reserve(dom.elements.size());
  for (const Value& v : dom.elements) graph.emplace_back(v, img);
  return MapTable(src, dst, std::move(graph));
}

Value MapTable::apply(const Value& x) const {
  Value key = normalize(src_, x);
  auto it = std::lower_bound(graph_.begin(), graph_.end(), key,
                             [](const auto& e, const Value& k) { return e.first < k; });
  if (it == graph_.end() || it->first != key)
    fail(errc::not_in_carrier, "map applied outside its source");
  return it->second;
}

MapTable compose(const MapTable& g, const MapTable& f) {
  if (!code_eq(f.dst(), g.src())) fail(errc::endpoint_mismatch, "compose: endpoints do not match");
  std::vector<std::pair<Value, Value>> graph;
  graph.reserve(f.graph().size());
  for (const auto& [k, v] : f.graph()) graph.emplace_back(k, g.apply(v));
  return MapTable::make(f.src(), g.dst(), std::move(graph));
}

bool map_eq(const MapTable& a, const MapTable& b) {
  return code_eq(a.src(), b.src()) && code_eq(a.dst(), b.dst()) && a.graph() == b.graph();
}

std::vector<MapTable> all_maps(const Code& src, const Code& dst, std::size_t cap) {
  Extension dom = decode(src);
  Extension cod = decode(dst);
  if (dom.nat_set || cod.nat_set) fail(errc::non_finitary, "all_maps needs enumerable endpoints");
  std::vector<MapTable> out;
  if (dom.elements.empty()) {
    out.push_back(MapTable::make(src, dst, {}));
    return out;
  }
  if (cod.elements.empty()) return out;  // no map from nonempty into empty
  double total = 1;
  for (std::size_t i = 0; i < dom.elements.size(); ++i) {
    total *= static_cast<double>(cod.elements.size());
    if (total > static_cast<double>(cap)) fail(errc::resource_limit, "too many maps to enumerate");
  }
  std::vector<std::size_t> idx(dom.elements.size(), 0);
  for (;;) {
    std::vector<std::pair<Value, Value>> graph;
    graph.reserve(dom.elements.size());
    for (std::size_t i = 0; i < dom.elements.size(); ++i)
      graph.emplace_back(dom.elements[i], cod.elements[idx[i]]);
    out.push_back(MapTable::make(src, dst, std::move(graph)));
    std::size_t i = dom.elements.size();
    for (;;) {
      if (i == 0) return out;
      --i;
      if (++idx[i] < cod.elements.size()) break;
      idx[i] = 0;
    }
  }
}

}  // namespace ukern
