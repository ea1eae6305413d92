#include <algorithm>
#include <set>

#include "ogpd/builders.hpp"

namespace ogpd {

std::uint32_t GroupTable::inv(std::uint32_t a) const {
  for (std::uint32_t b = 0; b < order(); ++b)
    if (times(a, b) == 0) return b;
  throw invariant_error("group element without inverse in " + name);
}

bool GroupTable::is_group() const {
  const std::size_t n = order();
  if (mul.size() != n * n) return false;
  for (std::uint32_t a = 0; a < n; ++a)
    if (times(0, a) != a || times(a, 0) != a) return false;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      if (times(a, b) >= n) return false;
      for (std::uint32_t c = 0; c < n; ++c)
        if (times(times(a, b), c) != times(a, times(b, c))) return false;
    }
  for (std::uint32_t a = 0; a < n; ++a) {
    bool has_inv = false;
    for (std::uint32_t b = 0; b < n; ++b)
      if (times(a, b) == 0 && times(b, a) == 0) has_inv = true;
    if (!has_inv) return false;
  }
  return true;
}

GroupTable cyclic_group(unsigned n) {
  GroupTable g;
  g.name = "C" + std::to_string(n);
  for (unsigned i = 0; i < n; ++i)
    g.element_names.push_back(i == 0 ? "1" : "g" + std::to_string(i));
  g.mul.resize(n * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) g.mul[a * n + b] = (a + b) % n;
  return g;
}

GroupTable klein_four() {
  GroupTable g;
  g.name = "V4";
  g.element_names = {"1", "a", "b", "ab"};
  g.mul = {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  return g;
}

GroupTable symmetric_group_3() {
  // elements: 1, (12), (13), (23), (123), (132)
  GroupTable g;
  g.name = "S3";
  g.element_names = {"1", "s12", "s13", "s23", "r", "rr"};
  auto perm_mul = [](std::array<int, 3> p, std::array<int, 3> q) {
    // apply p first, then q
    return std::array<int, 3>{q[p[0]], q[p[1]], q[p[2]]};
  };
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                           {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  const unsigned n = 6;
  g.mul.resize(n * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      auto r = perm_mul(perms[a], perms[b]);
      for (unsigned c = 0; c < n; ++c)
        if (perms[c] == r) g.mul[a * n + b] = c;
    }
  return g;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  GroupTable g;
  g.name = a.name + "x" + b.name;
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      g.element_names.push_back("(" + a.element_names[i] + "," + b.element_names[j] + ")");
  g.mul.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto x = a.times(static_cast<std::uint32_t>(i / nb), static_cast<std::uint32_t>(j / nb));
      auto y = b.times(static_cast<std::uint32_t>(i % nb), static_cast<std::uint32_t>(j % nb));
      g.mul[i * n + j] = static_cast<std::uint32_t>(x * nb + y);
    }
  return g;
}

std::vector<std::uint32_t> generated_subgroup(const GroupTable& g,
                                              std::vector<std::uint32_t> gens) {
  std::set<std::uint32_t> closed{0};
  for (auto e : gens) closed.insert(e);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint32_t> cur(closed.begin(), closed.end());
    for (auto a : cur)
      for (auto b : cur)
        if (closed.insert(g.times(a, b)).second) grew = true;
    for (auto a : cur)
      if (closed.insert(g.inv(a)).second) grew = true;
  }
  return {closed.begin(), closed.end()};
}

std::vector<std::vector<std::uint32_t>> subgroups(const GroupTable& g) {
  std::set<std::vector<std::uint32_t>> found;
  found.insert({0});
  // close under adding one generator at a time
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = found;
    for (const auto& h : snapshot)
      for (std::uint32_t e = 0; e < g.order(); ++e) {
        auto gens = h;
        gens.push_back(e);
        if (found.insert(generated_subgroup(g, gens)).second) grew = true;
      }
  }
  std::vector<std::vector<std::uint32_t>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool is_normal_subgroup(const GroupTable& g, const std::vector<std::uint32_t>& h) {
  std::set<std::uint32_t> set(h.begin(), h.end());
  for (auto n : h)
    for (std::uint32_t x = 0; x < g.order(); ++x)
      if (!set.count(g.times(g.times(g.inv(x), n), x))) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> normal_subgroups(const GroupTable& g) {
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& h : subgroups(g))
    if (is_normal_subgroup(g, h)) out.push_back(h);
  return out;
}

namespace {

void extend_hom(const GroupTable& a, const GroupTable& b, std::vector<std::uint32_t>& img,
                std::uint32_t next, std::vector<std::vector<std::uint32_t>>& out,
                std::size_t limit) {
  if (out.size() >= limit) return;
  if (next == a.order()) {
    out.push_back(img);
    return;
  }
  if (img[next] != kNoArrow) {  // forced earlier
    extend_hom(a, b, img, next + 1, out, limit);
    return;
  }
  for (std::uint32_t y = 0; y < b.order(); ++y) {
    img[next] = y;
    // check all products against already-assigned elements
    bool ok = true;
    for (std::uint32_t x = 0; x <= next && ok; ++x) {
      if (img[x] == kNoArrow) continue;
      std::uint32_t p = a.times(x, next), q = a.times(next, x);
      if (p <= next && img[p] != kNoArrow && img[p] != b.times(img[x], y)) ok = false;
      if (q <= next && img[q] != kNoArrow && img[q] != b.times(y, img[x])) ok = false;
    }
    if (ok) extend_hom(a, b, img, next + 1, out, limit);
    img[next] = kNoArrow;
  }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> group_homomorphisms(const GroupTable& a,
                                                            const GroupTable& b,
                                                            std::size_t limit) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> img(a.order(), kNoArrow);
  img[0] = 0;
  extend_hom(a, b, img, 1, out, limit);
  // keep only genuine homomorphisms (the incremental check is partial)
  std::vector<std::vector<std::uint32_t>> full;
  for (auto& h : out) {
    bool ok = true;
    for (std::uint32_t x = 0; x < a.order() && ok; ++x)
      for (std::uint32_t y = 0; y < a.order(); ++y)
        if (h[a.times(x, y)] != b.times(h[x], h[y])) {
          ok = false;
          break;
        }
    if (ok) full.push_back(std::move(h));
  }
  return full;
}

}  // namespace ogpd
