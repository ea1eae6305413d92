// Homotopy squares over the cylinder A x I.  A functor out of the
// cylinder is determined by its level-0 restriction together with one
// arrow per object of A (the iota images); squares are stored in full
// functor form but searched in that reduced form.

#pragma once

#include "ogpd/builders.hpp"
#include "ogpd/functor.hpp"

namespace ogpd {

struct Cylinder {
  Product prod;  // left = A, right = the interval groupoid

  const GroupoidPtr& base() const { return prod.left; }
  const GroupoidPtr& g() const { return prod.g; }
  ArrowId at0(ArrowId a) const { return prod.pair(a, kIntervalId0); }
  ArrowId at1(ArrowId a) const { return prod.pair(a, kIntervalId1); }
  ArrowId iota(ObjectId x) const { return prod.pair(base()->identity(x), kIntervalIota); }
};

Cylinder make_cylinder(GroupoidPtr a);

// i0 : A -> A x I, a |-> (a, 0)
OrderedFunctor inclusion0(const Cylinder& cyl);

// Extract the (x, iota) images of a functor on the cylinder.
std::vector<ArrowId> iota_images(const Cylinder& cyl, const OrderedFunctor& f);

// Build the cylinder functor with level-0 part f0 and the given iota
// images g_x (dom g_x must be the image of x under f0).  Throws
// domain_error when the data does not assemble into an ordered functor.
OrderedFunctor cylinder_functor(const Cylinder& cyl, const OrderedFunctor& f0,
                                const std::vector<ArrowId>& iota_images);

struct HomotopySquare {
  Cylinder cyl;       // over the base A
  OrderedFunctor p;   // G -> H
  OrderedFunctor f;   // A -> G
  OrderedFunctor F;   // A x I -> H
};

// Assembles the square with F determined by f;p at level 0 and the given
// iota images; checks commutativity.
HomotopySquare make_square(GroupoidPtr a, OrderedFunctor p, OrderedFunctor f,
                           const std::vector<ArrowId>& iota_images);

bool square_commutes(const HomotopySquare& sq);

// A lift must satisfy i0;lift == f and lift;p == F exactly.
bool verify_lift(const HomotopySquare& sq, const OrderedFunctor& lift);

}  // namespace ogpd
