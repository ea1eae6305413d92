// Exhaustive, budgeted enumeration of ordered functors and natural
// transformations; the internal hom OGPD(A,B); currying along the
// exponential law; post-composition.

#pragma once

#include <functional>
#include <map>
#include <optional>

#include "ogpd/functor.hpp"

namespace ogpd {

// All ordered functors A -> B by backtracking over arrow images with
// order/composition pruning; deterministic output, sorted by arrow map.
std::vector<OrderedFunctor> enumerate_functors(GroupoidPtr a, GroupoidPtr b,
                                               SearchBudget& budget);

// Same search restricted to candidate images per arrow (candidates may
// be broader than the hom sets; they are intersected with them).
std::vector<OrderedFunctor> enumerate_functors_constrained(
    GroupoidPtr a, GroupoidPtr b,
    const std::function<std::vector<ArrowId>(ArrowId)>& candidates, SearchBudget& budget,
    std::size_t max_results = static_cast<std::size_t>(-1));

// The mapping groupoid OGPD(A,B): objects are the ordered functors
// A -> B, arrows the ordered natural transformations, ordered pointwise.
struct MappingGroupoid {
  GroupoidPtr source, target;  // A, B
  GroupoidPtr g;
  std::vector<OrderedFunctor> objects;  // per object id of g
  std::vector<NatTrans> arrows;         // per arrow id of g

  std::optional<ObjectId> object_of(const OrderedFunctor& f) const;
  std::optional<ArrowId> arrow_of(ObjectId from, ObjectId to,
                                  const std::vector<ArrowId>& components) const;

  std::map<std::vector<ArrowId>, ObjectId> object_index;
  std::map<std::tuple<ObjectId, ObjectId, std::vector<ArrowId>>, ArrowId> arrow_index;
};

MappingGroupoid mapping_groupoid(GroupoidPtr a, GroupoidPtr b, SearchBudget& budget);

// p_*: OGPD(T,G) -> OGPD(T,H) induced by composition with p.
struct PostComposition {
  MappingGroupoid tg, th;
  OrderedFunctor pstar;
};

PostComposition post_compose(const OrderedFunctor& p, GroupoidPtr t, SearchBudget& budget);

// curry(F : A x B -> C) : B -> OGPD(A,C), inverse to uncurry.
struct Curried {
  MappingGroupoid ac;
  OrderedFunctor functor;  // B -> OGPD(A,C)
};

Curried curry(const Product& ab, const OrderedFunctor& f, SearchBudget& budget);
OrderedFunctor uncurry(const Product& ab, const MappingGroupoid& ac,
                       const OrderedFunctor& g);

}  // namespace ogpd
