#include <algorithm>

#include "ogpd/builders.hpp"

namespace ogpd {

ValidationReport PresheafSpec::check() const {
  ValidationReport rep;
  const std::size_t n = base.size();
  if (groups.size() != n || linking.size() != n) {
    rep.add(Axiom::structure, "presheaf tables do not match the base poset");
    return rep;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!groups[x].is_group()) {
      rep.add(Axiom::structure, "fiber over '" + base.name(x) + "' is not a group");
      return rep;
    }
    if (linking[x].size() != n) {
      rep.add(Axiom::structure, "linking table over '" + base.name(x) + "' has wrong shape");
      return rep;
    }
  }
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      const auto& a = linking[x][y];
      if (!base.leq(y, x)) {
        if (!a.empty())
          rep.add(Axiom::structure, "linking map present on unrelated pair ('" + base.name(x) +
                                        "','" + base.name(y) + "')");
        continue;
      }
      if (a.size() != groups[x].order()) {
        rep.add(Axiom::structure, "linking map ('" + base.name(x) + "'->'" + base.name(y) +
                                      "') has wrong size");
        continue;
      }
      for (std::uint32_t e = 0; e < groups[x].order(); ++e)
        if (a[e] >= groups[y].order()) {
          rep.add(Axiom::structure, "linking map ('" + base.name(x) + "'->'" + base.name(y) +
                                        "') is out of range");
          break;
        }
      if (!rep.passed) continue;
      if (x == y) {
        for (std::uint32_t e = 0; e < groups[x].order(); ++e)
          if (a[e] != e) {
            rep.add(Axiom::category, "diagonal linking map at '" + base.name(x) + "' is not id");
            break;
          }
      }
      for (std::uint32_t e = 0; e < groups[x].order() && rep.passed; ++e)
        for (std::uint32_t f = 0; f < groups[x].order(); ++f)
          if (a[groups[x].times(e, f)] != groups[y].times(a[e], a[f])) {
            rep.add(Axiom::category, "linking map ('" + base.name(x) + "'->'" + base.name(y) +
                                         "') is not a homomorphism");
            break;
          }
    }
  if (!rep.passed) return rep;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z) {
        if (!(base.leq(y, x) && base.leq(z, y))) continue;
        for (std::uint32_t e = 0; e < groups[x].order(); ++e)
          if (linking[y][z][linking[x][y][e]] != linking[x][z][e]) {
            rep.add(Axiom::category, "linking maps are not functorial via ('" + base.name(x) +
                                         "','" + base.name(y) + "','" + base.name(z) + "')");
            return rep;
          }
      }
  return rep;
}

namespace {

std::vector<std::size_t> fiber_offsets(const PresheafSpec& spec) {
  std::vector<std::size_t> off(spec.base.size() + 1, 0);
  for (std::size_t x = 0; x < spec.base.size(); ++x)
    off[x + 1] = off[x] + spec.groups[x].order();
  return off;
}

}  // namespace

ArrowId presheaf_arrow(const PresheafSpec& spec, std::uint32_t x, std::uint32_t elt) {
  return static_cast<ArrowId>(fiber_offsets(spec)[x] + elt);
}

GroupoidData presheaf_groupoid_data(const PresheafSpec& spec) {
  GroupoidData d;
  const std::size_t n = spec.base.size();
  auto off = fiber_offsets(spec);
  d.objects = spec.base.names();
  d.object_leq = spec.base.pairs();

  for (std::uint32_t x = 0; x < n; ++x) {
    const auto& g = spec.groups[x];
    for (std::uint32_t e = 0; e < g.order(); ++e) {
      std::string name = e == 0 ? "id:" + spec.base.name(x)
                                : spec.base.name(x) + ":" + g.element_names[e];
      d.arrows.push_back({std::move(name), x, x});
    }
  }
  d.identity.resize(n);
  for (std::uint32_t x = 0; x < n; ++x) d.identity[x] = static_cast<ArrowId>(off[x]);
  d.inverse.resize(d.arrows.size());
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t e = 0; e < spec.groups[x].order(); ++e)
      d.inverse[off[x] + e] = static_cast<ArrowId>(off[x] + spec.groups[x].inv(e));
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t e = 0; e < spec.groups[x].order(); ++e)
      for (std::uint32_t f = 0; f < spec.groups[x].order(); ++f)
        d.compose.push_back({static_cast<ArrowId>(off[x] + e), static_cast<ArrowId>(off[x] + f),
                             static_cast<ArrowId>(off[x] + spec.groups[x].times(e, f))});

  OrderPairs raw;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      if (!spec.base.leq(y, x) || x == y) continue;
      for (std::uint32_t e = 0; e < spec.groups[x].order(); ++e)
        raw.emplace_back(static_cast<std::uint32_t>(off[y] + spec.linking[x][y][e]),
                         static_cast<std::uint32_t>(off[x] + e));
    }
  d.arrow_leq = reflexive_transitive_closure(d.arrows.size(), raw);
  return d;
}

GroupoidPtr presheaf_groupoid(const PresheafSpec& spec) {
  ValidationReport rep = spec.check();
  if (!rep.passed) throw domain_error("bad presheaf spec: " + rep.summary());
  return OrderedGroupoid::create(presheaf_groupoid_data(spec));
}

OrderedFunctor presheaf_morphism(const PresheafSpec& src, GroupoidPtr src_g,
                                 const PresheafSpec& tgt, GroupoidPtr tgt_g,
                                 const std::vector<std::uint32_t>& base_map,
                                 const std::vector<std::vector<std::uint32_t>>& fiber_maps) {
  std::vector<ArrowId> map(src_g->n_arrows());
  for (std::uint32_t x = 0; x < src.base.size(); ++x)
    for (std::uint32_t e = 0; e < src.groups[x].order(); ++e)
      map[presheaf_arrow(src, x, e)] = presheaf_arrow(tgt, base_map[x], fiber_maps[x][e]);
  return make_functor(std::move(src_g), std::move(tgt_g), std::move(map));
}

GroupoidPtr interval_groupoid() {
  GroupoidData d;
  d.objects = {"0", "1"};
  d.object_leq = {{0, 0}, {1, 1}};
  d.arrows = {{"id:0", 0, 0}, {"id:1", 1, 1}, {"iota", 0, 1}, {"iota^-1", 1, 0}};
  d.identity = {kIntervalId0, kIntervalId1};
  d.inverse = {kIntervalId0, kIntervalId1, kIntervalIotaInv, kIntervalIota};
  d.compose = {{0, 0, 0}, {1, 1, 1}, {0, 2, 2}, {2, 1, 2},
               {1, 3, 3}, {3, 0, 3}, {2, 3, 0}, {3, 2, 1}};
  d.arrow_leq = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  return OrderedGroupoid::create(std::move(d));
}

GroupoidPtr trivial_groupoid(const Poset& p) {
  GroupoidData d;
  d.objects = p.names();
  d.object_leq = p.pairs();
  for (std::uint32_t x = 0; x < p.size(); ++x) {
    d.arrows.push_back({"id:" + p.name(x), x, x});
    d.identity.push_back(x);
    d.inverse.push_back(x);
    d.compose.push_back({x, x, x});
  }
  d.arrow_leq = d.object_leq;
  return OrderedGroupoid::create(std::move(d));
}

GroupoidPtr simplicial_groupoid(unsigned n) {
  GroupoidData d;
  const std::uint32_t k = n + 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    d.objects.push_back(std::to_string(i));
    d.object_leq.emplace_back(i, i);
  }
  auto arr = [&](std::uint32_t i, std::uint32_t j) { return i * k + j; };
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) {
      std::string name = i == j ? "id:" + std::to_string(i)
                                : "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      d.arrows.push_back({std::move(name), i, j});
    }
  for (std::uint32_t i = 0; i < k; ++i) d.identity.push_back(arr(i, i));
  d.inverse.resize(k * k);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) d.inverse[arr(i, j)] = arr(j, i);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j)
      for (std::uint32_t l = 0; l < k; ++l) d.compose.push_back({arr(i, j), arr(j, l), arr(i, l)});
  for (std::uint32_t a = 0; a < k * k; ++a) d.arrow_leq.emplace_back(a, a);
  return OrderedGroupoid::create(std::move(d));
}

GroupoidPtr group_groupoid(const GroupTable& g) {
  GroupoidData d;
  d.objects = {"*"};
  d.object_leq = {{0, 0}};
  for (std::uint32_t e = 0; e < g.order(); ++e) {
    d.arrows.push_back({e == 0 ? "id:*" : g.element_names[e], 0, 0});
    d.arrow_leq.emplace_back(e, e);
  }
  d.identity = {0};
  d.inverse.resize(g.order());
  for (std::uint32_t e = 0; e < g.order(); ++e) d.inverse[e] = g.inv(e);
  for (std::uint32_t e = 0; e < g.order(); ++e)
    for (std::uint32_t f = 0; f < g.order(); ++f) d.compose.push_back({e, f, g.times(e, f)});
  return OrderedGroupoid::create(std::move(d));
}

ValidationReport InverseSemigroupTable::check() const {
  ValidationReport rep;
  const std::size_t n = size();
  if (mul.size() != n * n) {
    rep.add(Axiom::structure, "multiplication table has wrong size");
    return rep;
  }
  for (auto v : mul)
    if (v >= n) {
      rep.add(Axiom::structure, "multiplication table out of range");
      return rep;
    }
  for (std::uint32_t a = 0; a < n && rep.passed; ++a)
    for (std::uint32_t b = 0; b < n && rep.passed; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (times(times(a, b), c) != times(a, times(b, c))) {
          rep.add(Axiom::category, "multiplication not associative at ('" + element_names[a] +
                                       "','" + element_names[b] + "','" + element_names[c] + "')");
          break;
        }
  for (std::uint32_t s = 0; s < n && rep.passed; ++s) {
    int count = 0;
    for (std::uint32_t t = 0; t < n; ++t)
      if (times(times(s, t), s) == s && times(times(t, s), t) == t) ++count;
    if (count != 1)
      rep.add(Axiom::inverses, "element '" + element_names[s] + "' has " +
                                   std::to_string(count) + " generalized inverses");
  }
  for (std::uint32_t e = 0; e < n && rep.passed; ++e)
    for (std::uint32_t f = 0; f < n; ++f)
      if (times(e, e) == e && times(f, f) == f && times(e, f) != times(f, e)) {
        rep.add(Axiom::og2, "idempotents '" + element_names[e] + "' and '" + element_names[f] +
                                "' do not commute");
        break;
      }
  return rep;
}

std::uint32_t InverseSemigroupTable::inv(std::uint32_t s) const {
  for (std::uint32_t t = 0; t < size(); ++t)
    if (times(times(s, t), s) == s && times(times(t, s), t) == t) return t;
  throw invariant_error("no generalized inverse for '" + element_names[s] + "'");
}

InverseSemigroupRoundTrip inverse_semigroup_roundtrip(const InverseSemigroupTable& s) {
  ValidationReport rep = s.check();
  if (!rep.passed) throw domain_error("not an inverse semigroup: " + rep.summary());

  const std::size_t n = s.size();
  std::vector<std::uint32_t> idem;  // element -> object index
  std::vector<std::uint32_t> obj_of(n, kNoObject);
  GroupoidData d;
  for (std::uint32_t e = 0; e < n; ++e)
    if (s.times(e, e) == e) {
      obj_of[e] = static_cast<std::uint32_t>(idem.size());
      idem.push_back(e);
      d.objects.push_back(s.element_names[e]);
    }
  for (std::uint32_t a = 0; a < idem.size(); ++a)
    for (std::uint32_t b = 0; b < idem.size(); ++b)
      if (s.times(idem[a], idem[b]) == idem[a]) d.object_leq.emplace_back(a, b);

  for (std::uint32_t t = 0; t < n; ++t) {
    std::uint32_t ti = s.inv(t);
    d.arrows.push_back({"<" + s.element_names[t] + ">", obj_of[s.times(t, ti)],
                        obj_of[s.times(ti, t)]});
  }
  d.identity.resize(idem.size());
  for (std::uint32_t i = 0; i < idem.size(); ++i) d.identity[i] = idem[i];
  d.inverse.resize(n);
  for (std::uint32_t t = 0; t < n; ++t) d.inverse[t] = s.inv(t);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (s.times(s.inv(a), a) == s.times(b, s.inv(b)))  // restricted product
        d.compose.push_back({a, b, s.times(a, b)});
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (s.times(s.times(a, s.inv(a)), b) == a)  // natural partial order a <= b
        d.arrow_leq.emplace_back(a, b);

  InverseSemigroupRoundTrip out;
  out.groupoid = OrderedGroupoid::create(std::move(d));
  if (!is_inductive(*out.groupoid))
    throw invariant_error("inverse semigroup produced a non-inductive groupoid");
  out.arrow_of.resize(n);
  for (std::uint32_t t = 0; t < n; ++t) out.arrow_of[t] = t;
  out.reconstructed = semigroup_of_inductive(*out.groupoid);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (out.reconstructed.times(a, b) != s.times(a, b))
        throw invariant_error("pseudoproduct does not reproduce the semigroup product at ('" +
                              s.element_names[a] + "','" + s.element_names[b] + "')");
  return out;
}

InverseSemigroupTable semigroup_of_inductive(const OrderedGroupoid& g) {
  if (!is_inductive(g)) throw domain_error("groupoid is not inductive");
  InverseSemigroupTable s;
  const std::size_t n = g.n_arrows();
  for (ArrowId a = 0; a < n; ++a) s.element_names.push_back(g.arrow_name(a));
  s.mul.resize(n * n);
  for (ArrowId a = 0; a < n; ++a)
    for (ArrowId b = 0; b < n; ++b) {
      auto p = pseudoproduct(g, a, b);
      if (!p) throw invariant_error("pseudoproduct undefined on an inductive groupoid");
      s.mul[a * n + b] = *p;
    }
  return s;
}

}  // namespace ogpd
