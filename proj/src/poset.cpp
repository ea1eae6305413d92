#include "ogpd/poset.hpp"

#include <algorithm>

namespace ogpd {

OrderPairs reflexive_transitive_closure(std::size_t n, const OrderPairs& pairs) {
  BitRel rel(n);
  for (std::size_t i = 0; i < n; ++i) rel.set(i, i);
  for (auto [lo, hi] : pairs) rel.set(lo, hi);
  // Floyd-Warshall style closure; n stays small at desk scale.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel.get(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (rel.get(k, j)) rel.set(i, j);
    }
  OrderPairs out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel.get(i, j)) out.emplace_back(i, j);
  return out;
}

PosetCheck check_poset(std::size_t n, const OrderPairs& pairs) {
  BitRel rel(n);
  for (auto [lo, hi] : pairs) {
    if (lo >= n || hi >= n) return {false, "order pair references unknown element"};
    rel.set(lo, hi);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!rel.get(i, i)) return {false, "order not reflexive at element " + std::to_string(i)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!rel.get(i, j)) continue;
      if (i != j && rel.get(j, i))
        return {false, "order not antisymmetric on (" + std::to_string(i) + "," +
                           std::to_string(j) + ")"};
      for (std::size_t k = 0; k < n; ++k)
        if (rel.get(j, k) && !rel.get(i, k))
          return {false, "order not transitive via (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")"};
    }
  return {};
}

Poset Poset::create(std::vector<std::string> names, const OrderPairs& pairs) {
  PosetCheck chk = check_poset(names.size(), pairs);
  if (!chk.ok) throw domain_error("not a poset: " + chk.what);
  Poset p;
  p.names_ = std::move(names);
  p.rel_ = BitRel(p.names_.size());
  for (auto [lo, hi] : pairs) p.rel_.set(lo, hi);
  return p;
}

std::optional<std::uint32_t> Poset::meet(std::uint32_t x, std::uint32_t y) const {
  std::vector<std::uint32_t> lower;
  for (std::uint32_t z = 0; z < size(); ++z)
    if (leq(z, x) && leq(z, y)) lower.push_back(z);
  for (std::uint32_t m : lower) {
    bool greatest = true;
    for (std::uint32_t z : lower)
      if (!leq(z, m)) {
        greatest = false;
        break;
      }
    if (greatest) return m;
  }
  return std::nullopt;
}

bool Poset::is_meet_semilattice() const {
  for (std::uint32_t x = 0; x < size(); ++x)
    for (std::uint32_t y = x; y < size(); ++y)
      if (!meet(x, y)) return false;
  return true;
}

OrderPairs Poset::covers() const {
  OrderPairs out;
  for (std::uint32_t x = 0; x < size(); ++x)
    for (std::uint32_t y = 0; y < size(); ++y) {
      if (x == y || !leq(x, y)) continue;
      bool cover = true;
      for (std::uint32_t z = 0; z < size(); ++z)
        if (z != x && z != y && leq(x, z) && leq(z, y)) {
          cover = false;
          break;
        }
      if (cover) out.emplace_back(x, y);
    }
  return out;
}

OrderPairs Poset::pairs() const {
  OrderPairs out;
  for (std::uint32_t x = 0; x < size(); ++x)
    for (std::uint32_t y = 0; y < size(); ++y)
      if (leq(x, y)) out.emplace_back(x, y);
  return out;
}

std::vector<std::uint32_t> Poset::linear_extension() const {
  std::vector<std::uint32_t> order(size());
  for (std::uint32_t i = 0; i < size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    std::size_t da = 0, db = 0;  // down-set sizes give a rank
    for (std::uint32_t z = 0; z < size(); ++z) {
      if (leq(z, a)) ++da;
      if (leq(z, b)) ++db;
    }
    if (da != db) return da < db;
    return a < b;
  });
  return order;
}

bool Poset::operator==(const Poset& other) const {
  if (size() != other.size() || names_ != other.names_) return false;
  for (std::uint32_t x = 0; x < size(); ++x)
    for (std::uint32_t y = 0; y < size(); ++y)
      if (leq(x, y) != other.leq(x, y)) return false;
  return true;
}

}  // namespace ogpd
