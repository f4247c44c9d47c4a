#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ukern/code.hpp"
#include "ukern/maps.hpp"

namespace ukern {

// Derived finite (co)limit constructors. Each returns a plain code built
// from the existing formers; the universal properties are verified
// separately by check_universal.

// Sigma(a, const b).
Code product(const Code& a, const Code& b);

// Sigma(A, table{a -> Id(B, f(a), g(a))}) for a parallel pair f,g : A -> B.
Code equaliser(const MapTable& f, const MapTable& g);

// Sigma(Fin 2, table{fin0 -> a, fin1 -> b}).
Code coproduct(const Code& a, const Code& b);
MapTable coproduct_inl(const Code& a, const Code& b);
MapTable coproduct_inr(const Code& a, const Code& b);
// Case analysis [f, g] : a + b -> Z for f : a -> Z, g : b -> Z.
MapTable case_map(const MapTable& f, const MapTable& g);

// Blocks of the least equivalence relation containing rel, with canonical
// (least) representatives.
struct Partition {
  std::vector<std::vector<Value>> blocks;  // each block sorted; blocks sorted by representative
  std::size_t stabilization_steps = 0;     // fixpoint step count of the iterative path

  const Value& rep_of(const Value& v) const;
  bool same_block(const Value& a, const Value& b) const;
};

// Runs both closure paths, union-find and stepwise iteration, and insists
// they agree before returning the partition.
Partition quotient_closure(const Code& carrier, const RelFamily& rel);

// Quot(S, rel{(p(x), q(x)) | x in decode(R)}) for p,q : R -> S.
Code coequaliser(const MapTable& p, const MapTable& q);
// The projection S -> coequaliser(p, q).
MapTable coequaliser_proj(const MapTable& p, const MapTable& q);

// Coequaliser of inl.f and inr.g over coproduct(dst f, dst g), for a span
// f : C -> A, g : C -> B.
Code pushout(const MapTable& f, const MapTable& g);

enum class DiagramKind : std::uint8_t {
  initial,
  terminal,
  product,
  equaliser,
  coproduct,
  coequaliser,
  pushout,
};

// A (co)limit candidate packaged with its diagram: the arrows of the
// diagram (parallel pair or span; empty otherwise), the candidate object
// and its legs (projections, injections, or the coequaliser projection).
struct UniversalProblem {
  DiagramKind kind;
  std::vector<Code> objects;
  std::vector<MapTable> arrows;
  Code candidate;
  std::vector<MapTable> legs;
};

UniversalProblem initial_problem(const Code& candidate);
UniversalProblem terminal_problem(const Code& candidate);
UniversalProblem product_problem(const Code& a, const Code& b);
UniversalProblem equaliser_problem(const MapTable& f, const MapTable& g);
UniversalProblem coproduct_problem(const Code& a, const Code& b);
UniversalProblem coequaliser_problem(const MapTable& p, const MapTable& q);
UniversalProblem pushout_problem(const MapTable& f, const MapTable& g);

struct UniversalResult {
  bool ok = true;
  std::string counterexample;  // empty when ok
};

// Brute-force check of the universal property against every test object:
// for each cone/cocone over the diagram with tip in the family, there must
// be exactly one mediating map, found by enumerating all candidates.
UniversalResult check_universal(const UniversalProblem& p, const std::vector<Code>& test_family);

// All Fin k for k <= max_fin plus the diagram's own objects.
std::vector<Code> default_test_family(const UniversalProblem& p, std::uint64_t max_fin = 4);

}  // namespace ukern
