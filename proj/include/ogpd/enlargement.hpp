// Enlargements, the tensor poset U_0 (x) Omega H with its H-action, the
// maximum enlargement of a star-injective functor with its universal
// property, and the fibration/enlargement/covering factorization.

#pragma once

#include "ogpd/action.hpp"
#include "ogpd/enumerate.hpp"
#include "ogpd/quotient.hpp"

namespace ogpd {

struct EnlargementWitness {
  ValidationReport report;
  std::vector<ArrowId> connecting;  // per object of B: minimal arrow into A_0

  bool ok() const { return report.passed; }
};

// A subgroupoid A of B is an enlargement when A_0 is an order ideal, B
// is full over A_0, and every object of B connects into A_0.
EnlargementWitness is_enlargement(const OrderedGroupoid& b, const std::vector<ArrowId>& sub);

struct TensorPoset {
  OrderedFunctor phi;  // U -> H, star-injective
  std::vector<std::pair<ObjectId, ArrowId>> pairs;  // pullback pairs (e, h)
  std::vector<std::uint32_t> class_of;              // pair index -> class
  std::vector<std::uint32_t> rep;                   // class -> least pair index
  std::vector<std::vector<std::uint32_t>> members;  // per class
  Poset poset;                                      // order on classes

  std::uint32_t pair_index(ObjectId e, ArrowId h) const;
  std::uint32_t cls(ObjectId e, ArrowId h) const { return class_of[pair_index(e, h)]; }
  // the common range of the second components
  ObjectId moment(std::uint32_t c) const;
  std::optional<std::uint32_t> act(std::uint32_t c, ArrowId m) const;
};

namespace detail {
// Classes and the raw order relation without the star-injectivity
// precondition; exposes whether antisymmetry holds.
struct TensorRelation {
  std::vector<std::pair<ObjectId, ArrowId>> pairs;
  std::vector<std::uint32_t> class_of;
  std::vector<std::vector<std::uint32_t>> members;
  OrderPairs relation;
  bool antisymmetric = true;
};
TensorRelation tensor_relation(const OrderedFunctor& phi);
}  // namespace detail

// Requires phi star-injective (the order could otherwise fail
// antisymmetry); classes carry the right H-action by multiplication.
TensorPoset tensor_poset(const OrderedFunctor& phi);

struct MaximumEnlargement {
  OrderedFunctor phi;  // U -> H
  TensorPoset tensor;
  SemidirectProduct sdp;  // H |x (U_0 (x) Omega H)
  OrderedFunctor i;       // U -> sdp.g, an ordered embedding
  OrderedFunctor pi;      // sdp.g -> H, a covering, with phi = i ; pi
  std::vector<ArrowId> image;  // arrows of Ui, sorted
  EnlargementWitness witness;
};

MaximumEnlargement maximum_enlargement(const OrderedFunctor& phi);

struct UniversalMap {
  OrderedFunctor nu;  // H~ -> C with j = i;nu and pi = nu;xi
  bool unique;        // exhaustive search found exactly one candidate
};

// For any factorization phi = j ; xi through an ordered embedding j and
// a covering xi, the mediating functor nu, with bounded-exhaustive
// uniqueness certification.
UniversalMap universal_map(const MaximumEnlargement& me, const OrderedFunctor& j,
                           const OrderedFunctor& xi, SearchBudget& budget);

struct TripleFactorization {
  Factorization fact;       // phi = varpi ; psi
  MaximumEnlargement enl;   // of psi
};

// phi as a fibration followed by an enlargement followed by a covering;
// the composite is checked equal to phi.
TripleFactorization triple_factorization(const OrderedFunctor& phi);

}  // namespace ogpd
