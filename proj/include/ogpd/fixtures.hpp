// Canned instances used throughout the tests and the CLI: the Klein
// four-group lifting obstruction, its mapping-groupoid variant, and the
// seven-idempotent inverse semigroup with a non-inductive quotient.

#pragma once

#include "ogpd/cylinder.hpp"

namespace ogpd {

// E = {e >= z <= f} trivial; G a semilattice of groups over E with
// Klein four-group at the bottom; H over the chain 0 < 1; p the fiberwise
// surjection; the square chooses h_e = x = h_f, which has no lift.
struct KleinFixture {
  PresheafSpec e_spec, g_spec, h_spec;
  GroupoidPtr e, g, h;
  OrderedFunctor i;  // E -> G inclusion
  OrderedFunctor p;  // G -> H, star-surjective, not a strong fibration
  HomotopySquare square;  // the obstructed square

  // handy arrows of H
  ArrowId hx, hy;  // x in H_1, y in H_0
};

KleinFixture klein_fixture();

// Same groupoids; the natural transformation tau with e,f |-> x and
// z |-> y witnesses that p_* is not star-surjective at the inclusion i.
struct PStarFixture {
  KleinFixture base;
  std::vector<ArrowId> tau;  // components per object of E, in H
};

PStarFixture pstar_fixture();

// Seven objects x,y,k,l,m,n,z with arrows k ~ l and m ~ n; quotienting
// by everything leaves the five-element non-inductive poset.
struct ExampleViFixture {
  GroupoidPtr s;
  Poset expected_quotient;  // 2 maximal, 2 middle, 1 minimum
  ArrowId iota, eta;
};

ExampleViFixture example_vi_fixture();

}  // namespace ogpd
