// Finite posets: validated order relations with meets, covers and linear
// extensions.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ogpd/base.hpp"

namespace ogpd {

using OrderPairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Reflexive-transitive closure of an arbitrary pair list (pairs are
// (lower, upper)).  The result may still fail antisymmetry; validation
// decides.
OrderPairs reflexive_transitive_closure(std::size_t n, const OrderPairs& pairs);

struct PosetCheck {
  bool ok = true;
  std::string what;  // empty when ok
};

PosetCheck check_poset(std::size_t n, const OrderPairs& pairs);

class Poset {
 public:
  Poset() = default;

  // Validates reflexivity, antisymmetry and transitivity; throws
  // domain_error when the pairs do not form a partial order.
  static Poset create(std::vector<std::string> names, const OrderPairs& pairs);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::uint32_t x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }

  bool leq(std::uint32_t x, std::uint32_t y) const { return rel_.get(x, y); }

  // Greatest lower bound, if one exists.  A maximal lower bound that
  // does not dominate every other lower bound does not count.
  std::optional<std::uint32_t> meet(std::uint32_t x, std::uint32_t y) const;

  bool is_meet_semilattice() const;

  // Hasse diagram edges as (lower, upper) pairs.
  OrderPairs covers() const;

  // All comparable pairs (lower, upper), including reflexive ones.
  OrderPairs pairs() const;

  // Elements ordered so that smaller elements come first; ties broken by id.
  std::vector<std::uint32_t> linear_extension() const;

  bool operator==(const Poset& other) const;

 private:
  std::vector<std::string> names_;
  BitRel rel_;
};

}  // namespace ogpd
