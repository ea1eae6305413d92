// Ordered actions of a groupoid on an ordered groupoid (posets appear as
// trivial groupoids), the semidirect product with its projection
// fibration, and the correspondence between coverings and poset actions.

#pragma once

#include <unordered_map>

#include "ogpd/cylinder.hpp"
#include "ogpd/functor.hpp"

namespace ogpd {

struct GroupoidAction {
  GroupoidPtr actor;    // G
  GroupoidPtr carrier;  // A
  OrderedFunctor omega; // A -> trivial groupoid on G's object poset
  std::unordered_map<std::uint64_t, ArrowId> act;  // (carrier arrow, actor arrow) -> carrier arrow

  // moment map: carrier arrows land on actor objects
  ObjectId moment(ArrowId a) const { return omega(a); }
  std::optional<ArrowId> act_on(ArrowId a, ArrowId g) const;
  ArrowId act_req(ArrowId a, ArrowId g) const;
};

// All five action axioms, exhaustively.
ValidationReport validate_action(const GroupoidAction& action);

// Trivial groupoid on the actor's object poset, the canonical target of
// moment maps.
GroupoidPtr objects_groupoid(const OrderedGroupoid& g);

GroupoidAction make_action(GroupoidPtr actor, GroupoidPtr carrier, std::vector<ObjectId> moment,
                           std::unordered_map<std::uint64_t, ArrowId> act);

struct SemidirectProduct {
  GroupoidAction action;
  GroupoidPtr g;            // G |x A
  OrderedFunctor projection;  // onto the actor
  std::vector<std::pair<ArrowId, ArrowId>> pairs;  // per arrow: (actor part, carrier part)
  std::unordered_map<std::uint64_t, ArrowId> index;

  ArrowId pair_of(ArrowId g_part, ArrowId a_part) const;
};

// Arrows are pairs (g, a) with moment(a) = cod(g); objects are the
// carrier objects.
SemidirectProduct semidirect_product(GroupoidAction action);

// Certified lift against the projection of a semidirect product.
OrderedFunctor lift_sdp_projection(const SemidirectProduct& sdp, const HomotopySquare& sq);

// A covering gamma : C -> G induces an action of G on the poset C_0 via
// unique star lifts.
GroupoidAction covering_to_action(const OrderedFunctor& gamma);

struct ActCovRoundTrip {
  GroupoidAction action;
  SemidirectProduct sdp;
  OrderedFunctor iso;  // C -> G |x C_0 over G, a verified order isomorphism
};

// Round trip from a covering through its action and back, with the
// explicit isomorphism over G.
ActCovRoundTrip action_to_covering_roundtrip(const OrderedFunctor& gamma);

}  // namespace ogpd
