// The mapping cocylinder M^phi of an ordered functor phi : G -> H, its
// strong fibration p_phi with certified lifts, the derived groupoid
// Der(phi) with its H-action, the gamma isomorphism onto the semidirect
// product, and the full factorization pipeline.

#pragma once

#include "ogpd/action.hpp"
#include "ogpd/enlargement.hpp"
#include "ogpd/homotopy.hpp"
#include "ogpd/quotient.hpp"
#include "ogpd/triple_model.hpp"

namespace ogpd {

struct Cocylinder {
  OrderedFunctor phi;  // G -> H
  GroupoidPtr m;       // M^phi
  OrderedFunctor i_phi;  // G -> M^phi
  OrderedFunctor p_phi;  // M^phi -> H, strong fibration
  OrderedFunctor q_phi;  // M^phi -> G, strong fibration

  std::vector<std::array<ArrowId, 3>> triple;        // per arrow: (h0, a, h1), a in G
  std::vector<std::pair<ObjectId, ArrowId>> objects; // per object: (e, h)
  std::unordered_map<std::uint64_t, ArrowId> arrow_index;
  std::unordered_map<std::uint64_t, ObjectId> object_index;

  ArrowId arrow_of(ArrowId h0, ArrowId a, ArrowId h1) const;
  ObjectId object_of(ObjectId e, ArrowId h) const;
};

// Arrows <h0, a, h1> with h0^{-1} (a phi) h1 defined; phi = i_phi ; p_phi
// is asserted.
Cocylinder mapping_cocylinder(const OrderedFunctor& phi);

// Certified lift against p_phi: append the iota image of F to the third
// component.
OrderedFunctor lift_p_phi(const Cocylinder& cocyl, const HomotopySquare& sq);

// Certified lift against q_phi, transported through the pullback of
// eps0 along phi.
OrderedFunctor lift_q_phi(const Cocylinder& cocyl, const TripleModel& model,
                          const HomotopySquare& sq);

struct DerivedGroupoid {
  OrderedFunctor phi;
  GroupoidPtr g;  // Der(phi)
  std::vector<std::pair<ArrowId, ArrowId>> pairs;  // per arrow: (a in G, h in H)
  std::unordered_map<std::uint64_t, ArrowId> index;
  GroupoidAction action;          // H acts by right multiplication
  OrderedFunctor to_cocylinder;   // bijection onto ker p_phi

  ArrowId pair_of(ArrowId a, ArrowId h) const;
};

// ker p_phi in pair coordinates (a, h) with (a phi) r = h d.
DerivedGroupoid derived_groupoid(const Cocylinder& cocyl);

struct GammaIso {
  SemidirectProduct sdp;     // H |x Der(phi)
  OrderedFunctor gamma;      // sdp.g -> M^phi
  OrderedFunctor gamma_inv;  // M^phi -> sdp.g
};

// (k,(g,h)) |-> <(g phi) h k^{-1}, g, h>, a two-sided order isomorphism
// carrying the projection to p_phi.
GammaIso gamma_iso(const Cocylinder& cocyl, const DerivedGroupoid& der);

struct FibrationPipeline {
  Cocylinder cocyl;
  std::vector<ArrowId> image;       // arrows of G i_phi
  EnlargementWitness enlargement;   // G i_phi inside M^phi
  Factorization fact;               // p_phi = varpi ; psi with psi a covering
  DerivedGroupoid der;
  OrderedFunctor q_restricted;      // q_phi on Der(phi), a covering
};

// phi as enlargement, strong fibration and covering, with every stage
// classification asserted.
FibrationPipeline fibration_theorem_pipeline(const OrderedFunctor& phi);

// Strong-fibration evidence for the quotient stage: a square against
// varpi lifts through the immersion psi using the certified p_phi lift.
OrderedFunctor pipeline_lift_varpi(const FibrationPipeline& pipe, const HomotopySquare& sq);

}  // namespace ogpd
