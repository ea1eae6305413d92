// Ordered groupoids as validated finite tables, plus the elementary
// calculus: restriction, corestriction, pseudoproduct, stars, products
// and the connected-component quotient.
//
// Composition is written left to right: compose(a, b) is "a then b",
// defined exactly when cod(a) == dom(b).  The domain identity of g is
// g g^{-1} and the range identity is g^{-1} g, so dom/cod of an arrow
// match the d/r maps of the algebraic presentation.

#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ogpd/base.hpp"
#include "ogpd/poset.hpp"

namespace ogpd {

struct ArrowDecl {
  std::string name;
  ObjectId dom = kNoObject;
  ObjectId cod = kNoObject;
};

// Raw, unvalidated groupoid tables.  validate_ogpd decides whether they
// form an ordered groupoid; OrderedGroupoid::create freezes them.
struct GroupoidData {
  std::vector<std::string> objects;
  OrderPairs object_leq;  // (lower, upper), reflexive pairs included
  std::vector<ArrowDecl> arrows;
  std::vector<ArrowId> identity;                  // per object
  std::vector<ArrowId> inverse;                   // per arrow
  std::vector<std::array<ArrowId, 3>> compose;    // (a, b, ab)
  OrderPairs arrow_leq;                           // (lower, upper), reflexive included

  std::size_t n_objects() const { return objects.size(); }
  std::size_t n_arrows() const { return arrows.size(); }
};

enum class Axiom {
  structure,       // malformed references, duplicate names, non-functional tables
  object_poset,    // object order not a partial order
  arrow_order,     // arrow order not a partial order
  category,        // composability/associativity/identity failures
  inverses,        // g g^{-1} != id(dom g) or dual
  order_agreement, // object order differs from identity-arrow order
  og1,
  og2,
  og3_existence,
  og3_uniqueness,
  // normal ordered subgroupoid conditions
  sub_wide,
  sub_closed,
  sub_restriction,
  sub_conjugation,
  // ordered action axioms
  act_typing,      // defined iff moment matches, with the moment of the result
  act_chain,       // a < gh = (a < g) < h
  act_product,     // (ab) < g = (a < g)(b < g)
  act_unit,        // a < (a omega) = a
  act_monotone,
  // enlargement conditions
  enl_ideal,
  enl_full,
  enl_connected,
};

const char* axiom_name(Axiom a);

struct Violation {
  Axiom axiom;
  std::string detail;
  std::vector<ArrowId> witnesses;
};

struct ValidationReport {
  bool passed = true;
  std::vector<Violation> violations;  // first witness per failed axiom

  void add(Axiom a, std::string detail, std::vector<ArrowId> witnesses = {});
  bool has(Axiom a) const;
  std::string summary() const;
};

// Exhaustive check of every ordered-groupoid axiom, including OG3
// existence and uniqueness.  Structural problems (dangling ids, tables
// that are not functions) are reported as Axiom::structure and mask the
// axiom scan.
ValidationReport validate_ogpd(const GroupoidData& raw);

class OrderedGroupoid;
using GroupoidPtr = std::shared_ptr<const OrderedGroupoid>;

class OrderedGroupoid {
 public:
  // Validates and freezes; throws invariant_error when validation fails.
  static GroupoidPtr create(GroupoidData data);

  std::size_t n_arrows() const { return data_.arrows.size(); }
  std::size_t n_objects() const { return data_.objects.size(); }

  ObjectId dom(ArrowId a) const { return data_.arrows[a].dom; }
  ObjectId cod(ArrowId a) const { return data_.arrows[a].cod; }
  ArrowId identity(ObjectId e) const { return data_.identity[e]; }
  ArrowId inverse(ArrowId a) const { return data_.inverse[a]; }
  bool is_identity(ArrowId a) const { return data_.identity[dom(a)] == a; }

  std::optional<ArrowId> compose(ArrowId a, ArrowId b) const;
  // Composition that must exist; invariant_error otherwise.
  ArrowId compose_req(ArrowId a, ArrowId b) const;

  bool arrow_leq(ArrowId lo, ArrowId hi) const { return order_.get(lo, hi); }
  std::span<const ArrowId> down(ArrowId a) const { return down_[a]; }
  std::span<const ArrowId> up(ArrowId a) const { return up_[a]; }

  std::span<const ArrowId> star(ObjectId e) const;    // arrows with dom == e
  std::span<const ArrowId> costar(ObjectId e) const;  // arrows with cod == e

  const Poset& object_poset() const { return object_poset_; }

  const std::string& arrow_name(ArrowId a) const { return data_.arrows[a].name; }
  const std::string& object_name(ObjectId e) const { return data_.objects[e]; }
  std::optional<ArrowId> arrow_by_name(const std::string& name) const;
  std::optional<ObjectId> object_by_name(const std::string& name) const;

  const GroupoidData& data() const { return data_; }

 private:
  GroupoidData data_;
  Poset object_poset_;
  BitRel order_;
  std::unordered_map<std::uint64_t, ArrowId> compose_;
  std::vector<std::vector<ArrowId>> down_, up_, star_, costar_;
  std::unordered_map<std::string, ArrowId> arrow_names_;
  std::unordered_map<std::string, ObjectId> object_names_;
};

// The unique arrow (f|g) <= g with dom f; requires f <= dom(g).
ArrowId restriction(const OrderedGroupoid& g, ObjectId f, ArrowId arrow);
// The unique arrow (g|f) <= g with cod f; defined as (f|g^{-1})^{-1}.
ArrowId corestriction(const OrderedGroupoid& g, ArrowId arrow, ObjectId f);

// (a | m)(m | b) through the greatest lower bound m of cod(a) and
// dom(b); empty when the glb does not exist.
std::optional<ArrowId> pseudoproduct(const OrderedGroupoid& g, ArrowId a, ArrowId b);

std::vector<ArrowId> local_group(const OrderedGroupoid& g, ObjectId e);

// True when the object poset is a meet semilattice (so the pseudoproduct
// is total).
bool is_inductive(const OrderedGroupoid& g);

class OrderedFunctor;  // functor.hpp

// Componentwise product groupoid with arrow pairing helpers.
struct Product {
  GroupoidPtr g;
  GroupoidPtr left, right;

  ArrowId pair(ArrowId a, ArrowId b) const;
  std::pair<ArrowId, ArrowId> unpair(ArrowId m) const;
  ObjectId pair_obj(ObjectId x, ObjectId y) const;
  std::pair<ObjectId, ObjectId> unpair_obj(ObjectId z) const;
};

Product product(GroupoidPtr a, GroupoidPtr b);

// Connected components with the induced component preorder and its
// poset quotient Q(G).
struct Pi0 {
  std::vector<std::uint32_t> component_of_object;
  std::vector<std::uint32_t> component_of_arrow;
  std::size_t n_components = 0;
  OrderPairs component_preorder;               // (lo, hi) component indices
  Poset q;                                     // the poset quotient
  std::vector<std::uint32_t> q_class_of_component;
};

Pi0 pi0_quotient(const OrderedGroupoid& g);

}  // namespace ogpd
