// DOT output: objects as nodes, non-identity arrows as solid edges,
// order covers as dashed edges.

#pragma once

#include <string>

#include "ogpd/functor.hpp"
#include "ogpd/quotient.hpp"

namespace ogpd {

std::string to_dot(const OrderedGroupoid& g, const std::string& name = "G");

// Two clusters with dotted edges tracking the object map.
std::string to_dot(const OrderedFunctor& f);

// Source, quotient and target clusters of a factorization.
std::string to_dot(const Factorization& fact);

}  // namespace ogpd
