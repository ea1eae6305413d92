// Homotopy lifting: the per-square lift decision by monotone-selection
// search, path lifting, and the theorem-certified lift constructions for
// coverings, semidirect projections and immersion-factored fibrations.

#pragma once

#include <functional>

#include "ogpd/cylinder.hpp"

namespace ogpd {

// A lift of a commuting square is determined by one arrow g_x per object
// x of the base, with g_x in star_G(xf), g_x p = (x,iota)F, chosen
// monotonically in x.  Backtracks over objects minimal-first; returns
// the first lift in canonical order or nothing once the search space is
// exhausted.
std::optional<OrderedFunctor> find_lift(const HomotopySquare& sq, SearchBudget& budget);

// Every lift, up to max_count of them.
std::vector<OrderedFunctor> find_all_lifts(const HomotopySquare& sq, SearchBudget& budget,
                                           std::size_t max_count = static_cast<std::size_t>(-1));

// Some g in star_G(e) over h, or nothing; h must start at the image of e.
std::optional<ArrowId> path_lift(const OrderedFunctor& p, ObjectId e, ArrowId h);

// Canonical lift against a covering: unique star lifts per object.
OrderedFunctor lift_covering(const HomotopySquare& sq);

// Given p = pi;psi with psi an immersion and a certified lifter for p,
// the lift of the p-square also lifts the pi-square.
OrderedFunctor lift_through_immersion(
    const HomotopySquare& sq_pi, const OrderedFunctor& psi,
    const std::function<OrderedFunctor(const HomotopySquare&)>& certified_lifter);

}  // namespace ogpd
