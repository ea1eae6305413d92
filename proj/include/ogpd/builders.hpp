// Constructors for concrete instances: small group tables, presheaves of
// groups over posets, the interval groupoid, simplicial groupoids,
// inverse semigroup round trips and seeded random instances.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ogpd/functor.hpp"
#include "ogpd/groupoid.hpp"

namespace ogpd {

// Finite group as a multiplication table; element 0 is the identity.
struct GroupTable {
  std::string name;
  std::vector<std::string> element_names;
  std::vector<std::uint32_t> mul;  // n*n, row-major: mul[a*n+b] = ab

  std::size_t order() const { return element_names.size(); }
  std::uint32_t times(std::uint32_t a, std::uint32_t b) const {
    return mul[a * order() + b];
  }
  std::uint32_t inv(std::uint32_t a) const;
  bool is_group() const;
};

GroupTable cyclic_group(unsigned n);
GroupTable klein_four();          // {1, a, b, ab}
GroupTable symmetric_group_3();
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

// All subgroups as sorted element lists (the trivial one first).
std::vector<std::vector<std::uint32_t>> subgroups(const GroupTable& g);
std::vector<std::vector<std::uint32_t>> normal_subgroups(const GroupTable& g);
bool is_normal_subgroup(const GroupTable& g, const std::vector<std::uint32_t>& h);
// Smallest subgroup containing the given elements.
std::vector<std::uint32_t> generated_subgroup(const GroupTable& g,
                                              std::vector<std::uint32_t> gens);
// Group homomorphisms a -> b, at most `limit` of them, deterministic order.
std::vector<std::vector<std::uint32_t>> group_homomorphisms(const GroupTable& a,
                                                            const GroupTable& b,
                                                            std::size_t limit = 64);

// Presheaf of groups over a poset: a group per element and a linking
// homomorphism G_x -> G_y for every x >= y.
struct PresheafSpec {
  Poset base;
  std::vector<GroupTable> groups;  // per base element
  // linking[x][y] defined (non-empty) whenever y <= x; maps element
  // indices of G_x to element indices of G_y.
  std::vector<std::vector<std::vector<std::uint32_t>>> linking;

  // id on the diagonal, functorial, each map a homomorphism
  ValidationReport check() const;
};

// Raw tables of the presheaf groupoid: arrows are the disjoint union of
// the groups, ordered by g >= (g alpha).  No validation is performed, so
// corrupted specs can be probed with validate_ogpd.
GroupoidData presheaf_groupoid_data(const PresheafSpec& spec);
GroupoidPtr presheaf_groupoid(const PresheafSpec& spec);

// Arrow id of group element `elt` in fiber `x` of a presheaf groupoid
// built by presheaf_groupoid_data.
ArrowId presheaf_arrow(const PresheafSpec& spec, std::uint32_t x, std::uint32_t elt);

// A presheaf morphism: a monotone base map plus a hom per fiber
// commuting with the links.
OrderedFunctor presheaf_morphism(const PresheafSpec& src, GroupoidPtr src_g,
                                 const PresheafSpec& tgt, GroupoidPtr tgt_g,
                                 const std::vector<std::uint32_t>& base_map,
                                 const std::vector<std::vector<std::uint32_t>>& fiber_maps);

GroupoidPtr interval_groupoid();  // objects 0, 1; arrows id:0, id:1, iota, iota^-1
inline constexpr ArrowId kIntervalId0 = 0;
inline constexpr ArrowId kIntervalId1 = 1;
inline constexpr ArrowId kIntervalIota = 2;
inline constexpr ArrowId kIntervalIotaInv = 3;

GroupoidPtr trivial_groupoid(const Poset& p);
GroupoidPtr simplicial_groupoid(unsigned n);  // objects 0..n, one arrow per ordered pair
GroupoidPtr group_groupoid(const GroupTable& g);  // one object

// Inverse semigroup as a full multiplication table.
struct InverseSemigroupTable {
  std::vector<std::string> element_names;
  std::vector<std::uint32_t> mul;

  std::size_t size() const { return element_names.size(); }
  std::uint32_t times(std::uint32_t a, std::uint32_t b) const { return mul[a * size() + b]; }
  // associativity, unique generalized inverses, commuting idempotents
  ValidationReport check() const;
  std::uint32_t inv(std::uint32_t s) const;
};

struct InverseSemigroupRoundTrip {
  GroupoidPtr groupoid;            // the underlying inductive groupoid G(S)
  std::vector<ArrowId> arrow_of;   // element -> arrow
  InverseSemigroupTable reconstructed;  // from the pseudoproduct
};

// Builds G(S) (asserting it is inductive) and reconstructs the table via
// the pseudoproduct; the two tables must agree.
InverseSemigroupRoundTrip inverse_semigroup_roundtrip(const InverseSemigroupTable& s);

// The multiplication table of an inductive groupoid under the
// pseudoproduct.
InverseSemigroupTable semigroup_of_inductive(const OrderedGroupoid& g);

}  // namespace ogpd
