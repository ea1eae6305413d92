// Normal ordered subgroupoids, nexuses, the quotient G // A with its
// fibration onto the classes, and the fibration/star-injective
// factorization of an ordered functor.

#pragma once

#include "ogpd/functor.hpp"

namespace ogpd {

// Wide, closed under inverse/composition/restriction, and closed under
// twisted conjugation h^{-1} a k for h, k below a common upper bound.
// Every condition is checked exhaustively.
ValidationReport is_normal(const OrderedGroupoid& g, const std::vector<ArrowId>& sub);

// A pair (a, p) of subgroupoid arrows witnessing e ~ f in the quotient:
// dom(a) <= e, cod(a) = f, dom(p) <= f, cod(p) = e.
struct Nexus {
  ArrowId a, p;
};

// First nexus in lexicographic order, or nothing; absence is equivalent
// to the identities of e and f not being related.
std::optional<Nexus> find_nexus(const OrderedGroupoid& g, const std::vector<ArrowId>& sub,
                                ObjectId e, ObjectId f);

struct QuotientGroupoid {
  GroupoidPtr parent;
  std::vector<ArrowId> sub;        // the normal subgroupoid
  GroupoidPtr g;                   // G // A
  std::vector<ArrowId> class_of;   // parent arrow -> quotient arrow
  std::vector<ArrowId> rep;        // quotient arrow -> minimal parent arrow
  OrderedFunctor varpi;            // the quotient fibration

  std::vector<std::vector<ArrowId>> members;  // per class, sorted
};

// Classes of the one-step relation g ~ h iff a g b <= h and c h d <= g
// for subgroupoid arrows; composition goes through a nexus and is
// independent of the nexus chosen.  The result re-runs the full axiom
// suite and the quotient map is checked star-surjective.
QuotientGroupoid quotient(GroupoidPtr g, std::vector<ArrowId> sub);

struct Factorization {
  QuotientGroupoid q;      // by ker theta
  OrderedFunctor varpi;    // G -> G // ker theta
  OrderedFunctor psi;      // G // ker theta -> H, star-injective
};

// theta = varpi ; psi with psi star-injective; psi is checked
// well-defined on every class member.
Factorization factorize(const OrderedFunctor& theta);

}  // namespace ogpd
