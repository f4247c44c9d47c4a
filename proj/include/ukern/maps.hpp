#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ukern/code.hpp"
#include "ukern/value.hpp"

namespace ukern {

// An internal map between decoded codes, given extensionally by its
// graph. The graph is stored with keys equal to the canonical enumeration
// of the source and images in canonical form, so two maps are equal iff
// their graphs are equal.
class MapTable {
 public:
  static MapTable make(Code src, Code dst, std::vector<std::pair<Value, Value>> graph);
  static MapTable identity(const Code& a);
  static MapTable constant(const Code& src, const Code& dst, const Value& image);

  const Code& src() const { return src_; }
  const Code& dst() const { return dst_; }
  const std::vector<std::pair<Value, Value>>& graph() const { return graph_; }

  Value apply(const Value& x) const;

 private:
  MapTable(Code src, Code dst, std::vector<std::pair<Value, Value>> graph)
      : src_(std::move(src)), dst_(std::move(dst)), graph_(std::move(graph)) {}

  Code src_;
  Code dst_;
  std::vector<std::pair<Value, Value>> graph_;
};

// g after f; endpoints must agree syntactically.
MapTable compose(const MapTable& g, const MapTable& f);

// Same endpoints (syntactically) and same graph.
bool map_eq(const MapTable& a, const MapTable& b);

// Every map src -> dst in a deterministic order. The count |dst|^|src|
// must stay under the cap.
std::vector<MapTable> all_maps(const Code& src, const Code& dst, std::size_t cap = 4'000'000);

}  // namespace ukern
