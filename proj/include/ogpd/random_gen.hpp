// Seeded random instances for the property suites.  Generation is
// presheaf-first: a random poset, a master group, and monotone chains of
// subgroups always satisfy the ordered-groupoid axioms, and richer
// shapes come from closure operations (products, quotients, semidirect
// products) that preserve validity.

#pragma once

#include "ogpd/action.hpp"
#include "ogpd/builders.hpp"
#include "ogpd/functor.hpp"

namespace ogpd {

struct RandomParams {
  std::size_t max_poset = 4;
  std::size_t max_group = 8;
  bool allow_interval_product = true;
};

struct RandomInstance {
  GroupoidPtr g;
  std::optional<OrderedFunctor> functor;           // from g when present
  std::optional<std::vector<ArrowId>> normal_sub;  // of g when present
};

// Deterministic in the seed; the result always passes validation.
RandomInstance random_instance(std::uint64_t seed, const RandomParams& params = {});

// Kinds of functors the suites draw from.
enum class FunctorKind {
  any,             // mixed image/inclusion/collapse shapes
  fibration,       // star-surjective by construction
  star_injective,  // subpresheaf inclusions
  covering,        // projections of semidirect products over poset actions
};

OrderedFunctor random_functor(std::uint64_t seed, FunctorKind kind,
                              const RandomParams& params = {});

// (G, normal subgroupoid) pairs: random normal presheaves inside random
// presheaf groupoids.
RandomInstance random_with_normal(std::uint64_t seed, const RandomParams& params = {});

// A random inductive groupoid (presheaf over a meet semilattice).
GroupoidPtr random_inductive(std::uint64_t seed, const RandomParams& params = {});

// A random action of a random groupoid on a poset.
GroupoidAction random_poset_action(std::uint64_t seed, const RandomParams& params = {});

}  // namespace ogpd
