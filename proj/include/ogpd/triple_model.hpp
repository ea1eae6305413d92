// The concrete triple model of OGPD(I,H): objects are the arrows of H,
// an arrow [h0,t,h1] is a commuting square with its fourth side
// suppressed.  Carries the evaluation fibrations eps0/eps1 with their
// certified lifts and the loop identification.

#pragma once

#include <array>
#include <unordered_map>

#include "ogpd/cylinder.hpp"

namespace ogpd {

struct TripleModel {
  GroupoidPtr h;  // the base H
  GroupoidPtr g;  // OGPD(I,H) in triple form
  OrderedFunctor eps0, eps1;
  std::vector<std::array<ArrowId, 3>> triple;  // per model arrow: (h0, t, h1)
  std::vector<ArrowId> object_arrow;           // model object -> H arrow
  std::unordered_map<std::uint64_t, ArrowId> index;

  ArrowId arrow_of(ArrowId h0, ArrowId t, ArrowId h1) const;
  ObjectId object_of(ArrowId h_arrow) const { return h_arrow; }
};

TripleModel interval_mapping_groupoid(GroupoidPtr h);

// The arrows of H as a poset under the arrow order.
Poset omega_poset(const OrderedGroupoid& h);

// Certified lifts against the evaluation fibrations.
OrderedFunctor lift_eps0(const TripleModel& model, const HomotopySquare& sq);
OrderedFunctor lift_eps1(const TripleModel& model, const HomotopySquare& sq);

// h |-> [h, id, h] identifies Omega H with ker eps0 cap ker eps1,
// verified bijective and order-preserving both ways.
struct LoopsIso {
  Poset omega;
  std::vector<ArrowId> to_model;      // H arrow -> model arrow
  std::vector<ArrowId> intersection;  // sorted model arrows in the kernel meet
};

LoopsIso loops_iso(const TripleModel& model);

}  // namespace ogpd
