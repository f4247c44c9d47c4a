#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ukern/code.hpp"
#include "ukern/decode.hpp"
#include "ukern/maps.hpp"
#include "ukern/rank.hpp"

namespace ukern {

// At most one inhabitant. Decided through the cardinality analysis, which
// is total on the constructors this kernel ships.
Tri is_hprop(const Code& c);

// A proposition pinned to a level of the tower.
struct PropCode {
  Code code;
  std::size_t level = 0;
};

// Validates is_hprop and level membership.
PropCode make_prop(const Code& c, std::size_t level, const TowerConfig& cfg);

// Resizing to level 0: Fin 1 when inhabited, Fin 0 when empty. Both have
// rank 0. Throws not_a_proposition (and undecidable, should the fragment
// ever leave a verdict open).
PropCode prop_res(const PropCode& p);

// The two components of the resizing equivalence as explicit maps, when
// the proposition is enumerable.
struct ResizeWitness {
  std::optional<MapTable> forward;  // P -> PropRes(P)
  std::optional<MapTable> inverse;  // PropRes(P) -> P
};

ResizeWitness resize_witness(const PropCode& p);

// Between propositions a hom exists iff the source is empty or the target
// is inhabited, and it is then unique. The witness is present when both
// endpoints are enumerable.
struct PropHom {
  PropCode src;
  PropCode dst;
  std::optional<MapTable> witness;
};

bool prop_hom_exists(const PropCode& src, const PropCode& dst);
std::optional<PropHom> prop_hom(const PropCode& src, const PropCode& dst);

// Image of a hom under the resizing functor: the unique hom between the
// resized endpoints.
PropHom prop_res_map(const PropHom& f);

struct AdjunctionReport {
  std::size_t pairs_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// For every P in the population and Q in the targets, checks the hom-set
// bijection Hom0(PropRes P, Q) <-> Hom(P, Q), the two composite
// identities through the resizing equivalence, both triangle identities,
// and that the resized code always has rank 0. Hom-sets between
// propositions have at most one element, so uniqueness is verified by
// enumerating all maps where the endpoints are enumerable.
AdjunctionReport check_adjunction(const std::vector<PropCode>& population,
                                  const std::vector<PropCode>& targets);

}  // namespace ukern
