#include "ogpd/random_gen.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ogpd/quotient.hpp"
#include "ogpd/triple_model.hpp"

namespace ogpd {

namespace {

using Rng = std::mt19937_64;

std::size_t pick_index(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[pick_index(rng, v.size())];
}

std::vector<GroupTable> group_library(std::size_t max_order) {
  std::vector<GroupTable> lib = {cyclic_group(1), cyclic_group(2), cyclic_group(3),
                                 cyclic_group(4), klein_four(),    cyclic_group(5),
                                 cyclic_group(6), symmetric_group_3()};
  std::vector<GroupTable> out;
  for (auto& g : lib)
    if (g.order() <= max_order) out.push_back(std::move(g));
  return out;
}

Poset random_poset(Rng& rng, std::size_t max_elements) {
  std::size_t n = 1 + pick_index(rng, max_elements);
  OrderPairs pairs;
  // each new element goes above a random subset of the previous ones
  for (std::uint32_t i = 1; i < n; ++i)
    for (std::uint32_t j = 0; j < i; ++j)
      if (rng() % 2) pairs.emplace_back(j, i);
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return Poset::create(std::move(names), reflexive_transitive_closure(n, pairs));
}

// meet semilattices arrive as intersection-closed set families
Poset random_semilattice(Rng& rng, std::size_t max_elements) {
  std::set<std::uint32_t> family{0};  // subsets of a 3-element universe as bitmasks
  while (family.size() < max_elements && rng() % 4 != 0) family.insert(rng() % 8u);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto a : std::vector<std::uint32_t>(family.begin(), family.end()))
      for (auto b : std::vector<std::uint32_t>(family.begin(), family.end()))
        if (family.insert(a & b).second) grew = true;
  }
  std::vector<std::uint32_t> elems(family.begin(), family.end());
  std::vector<std::string> names;
  OrderPairs pairs;
  for (std::uint32_t i = 0; i < elems.size(); ++i) names.push_back("s" + std::to_string(i));
  for (std::uint32_t i = 0; i < elems.size(); ++i)
    for (std::uint32_t j = 0; j < elems.size(); ++j)
      if ((elems[i] & elems[j]) == elems[i]) pairs.emplace_back(i, j);
  return Poset::create(std::move(names), pairs);
}

GroupTable subgroup_table(const GroupTable& master, const std::vector<std::uint32_t>& elems) {
  GroupTable out;
  out.name = master.name + "-sub";
  std::vector<std::uint32_t> index(master.order(), kNoArrow);
  for (std::uint32_t i = 0; i < elems.size(); ++i) {
    index[elems[i]] = i;
    out.element_names.push_back(master.element_names[elems[i]]);
  }
  out.mul.resize(elems.size() * elems.size());
  for (std::uint32_t i = 0; i < elems.size(); ++i)
    for (std::uint32_t j = 0; j < elems.size(); ++j)
      out.mul[i * elems.size() + j] = index[master.times(elems[i], elems[j])];
  return out;
}

struct SubgroupPresheaf {
  GroupTable master;
  std::vector<std::vector<std::uint32_t>> fibers;  // master elements per base element
  PresheafSpec spec;
};

// monotone chains of subgroups of one master group; the linking maps are
// the inclusions, so functoriality is automatic
SubgroupPresheaf random_subgroup_presheaf(Rng& rng, const Poset& base, const GroupTable& master) {
  SubgroupPresheaf out;
  out.master = master;
  const std::size_t n = base.size();
  auto subs = subgroups(master);

  out.fibers.resize(n);
  std::vector<std::uint32_t> desc = base.linear_extension();
  std::reverse(desc.begin(), desc.end());  // maximal elements first
  for (std::uint32_t v : desc) {
    std::vector<std::uint32_t> need;
    for (std::uint32_t u = 0; u < n; ++u)
      if (u != v && base.leq(v, u))
        need.insert(need.end(), out.fibers[u].begin(), out.fibers[u].end());
    auto lower = generated_subgroup(master, need);
    std::vector<std::vector<std::uint32_t>> ok;
    for (const auto& s : subs)
      if (std::includes(s.begin(), s.end(), lower.begin(), lower.end())) ok.push_back(s);
    out.fibers[v] = pick(rng, ok);
  }

  out.spec.base = base;
  out.spec.groups.resize(n);
  out.spec.linking.assign(n, std::vector<std::vector<std::uint32_t>>(n));
  for (std::uint32_t x = 0; x < n; ++x) out.spec.groups[x] = subgroup_table(master, out.fibers[x]);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      if (!base.leq(y, x)) continue;
      std::vector<std::uint32_t> link(out.fibers[x].size());
      for (std::uint32_t i = 0; i < out.fibers[x].size(); ++i) {
        auto it = std::find(out.fibers[y].begin(), out.fibers[y].end(), out.fibers[x][i]);
        link[i] = static_cast<std::uint32_t>(it - out.fibers[y].begin());
      }
      out.spec.linking[x][y] = std::move(link);
    }
  return out;
}

}  // namespace

RandomInstance random_instance(std::uint64_t seed, const RandomParams& params) {
  Rng rng(seed * 2654435761u + 1);
  RandomInstance out;
  if (seed == 0) {  // minimal structure
    out.g = trivial_groupoid(Poset::create({"p0"}, {{0, 0}}));
    return out;
  }
  Poset base = random_poset(rng, params.max_poset);
  auto lib = group_library(params.max_group);
  auto pre = random_subgroup_presheaf(rng, base, pick(rng, lib));
  out.g = presheaf_groupoid(pre.spec);
  if (params.allow_interval_product && rng() % 4 == 0)
    out.g = product(out.g, interval_groupoid()).g;
  return out;
}

RandomInstance random_with_normal(std::uint64_t seed, const RandomParams& params) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 7);
  Poset base = random_poset(rng, params.max_poset);
  auto lib = group_library(params.max_group);
  auto pre = random_subgroup_presheaf(rng, base, pick(rng, lib));

  const std::size_t n = base.size();
  std::vector<std::vector<std::uint32_t>> normal_fibers(n);  // master elements
  std::vector<std::uint32_t> desc = base.linear_extension();
  std::reverse(desc.begin(), desc.end());
  for (std::uint32_t v : desc) {
    std::vector<std::uint32_t> need;
    for (std::uint32_t u = 0; u < n; ++u)
      if (u != v && base.leq(v, u))
        need.insert(need.end(), normal_fibers[u].begin(), normal_fibers[u].end());
    auto lower = generated_subgroup(pre.master, need);
    GroupTable fiber = subgroup_table(pre.master, pre.fibers[v]);
    std::vector<std::vector<std::uint32_t>> ok;  // as master element sets
    for (const auto& s : normal_subgroups(fiber)) {
      std::vector<std::uint32_t> elems;
      for (auto i : s) elems.push_back(pre.fibers[v][i]);
      std::sort(elems.begin(), elems.end());
      if (std::includes(elems.begin(), elems.end(), lower.begin(), lower.end()))
        ok.push_back(elems);
    }
    normal_fibers[v] = pick(rng, ok);
  }

  RandomInstance out;
  out.g = presheaf_groupoid(pre.spec);
  std::vector<ArrowId> sub;
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t i = 0; i < pre.fibers[v].size(); ++i)
      if (std::find(normal_fibers[v].begin(), normal_fibers[v].end(), pre.fibers[v][i]) !=
          normal_fibers[v].end())
        sub.push_back(presheaf_arrow(pre.spec, v, i));
  out.normal_sub = std::move(sub);
  return out;
}

GroupoidPtr random_inductive(std::uint64_t seed, const RandomParams& params) {
  Rng rng(seed * 0xc2b2ae3d27d4eb4full + 3);
  Poset base = random_semilattice(rng, params.max_poset);
  auto lib = group_library(params.max_group);
  auto pre = random_subgroup_presheaf(rng, base, pick(rng, lib));
  return presheaf_groupoid(pre.spec);
}

namespace {

OrderedFunctor subpresheaf_inclusion(Rng& rng, const RandomParams& params) {
  Poset base = random_poset(rng, params.max_poset);
  auto lib = group_library(params.max_group);
  const GroupTable& master = pick(rng, lib);
  auto big = random_subgroup_presheaf(rng, base, master);

  // shrink each fiber monotonically to get a subpresheaf
  const std::size_t n = base.size();
  SubgroupPresheaf small;
  small.master = master;
  small.fibers.resize(n);
  auto subs = subgroups(master);
  std::vector<std::uint32_t> desc = base.linear_extension();
  std::reverse(desc.begin(), desc.end());
  for (std::uint32_t v : desc) {
    std::vector<std::uint32_t> need;
    for (std::uint32_t u = 0; u < n; ++u)
      if (u != v && base.leq(v, u)) need.insert(need.end(), small.fibers[u].begin(), small.fibers[u].end());
    auto lower = generated_subgroup(master, need);
    std::vector<std::vector<std::uint32_t>> ok;
    for (const auto& s : subs) {
      if (!std::includes(s.begin(), s.end(), lower.begin(), lower.end())) continue;
      if (!std::includes(big.fibers[v].begin(), big.fibers[v].end(), s.begin(), s.end())) continue;
      ok.push_back(s);
    }
    small.fibers[v] = pick(rng, ok);
    if (ok.size() > 1 && small.fibers[v] == big.fibers[v] && rng() % 2) {
      // lean towards proper inclusions so the suite sees non-fibrations
      std::vector<std::vector<std::uint32_t>> proper;
      for (const auto& s : ok)
        if (s != big.fibers[v]) proper.push_back(s);
      small.fibers[v] = pick(rng, proper);
    }
  }
  small.spec.base = base;
  small.spec.groups.resize(n);
  small.spec.linking.assign(n, std::vector<std::vector<std::uint32_t>>(n));
  for (std::uint32_t x = 0; x < n; ++x) small.spec.groups[x] = subgroup_table(master, small.fibers[x]);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      if (!base.leq(y, x)) continue;
      std::vector<std::uint32_t> link(small.fibers[x].size());
      for (std::uint32_t i = 0; i < small.fibers[x].size(); ++i) {
        auto it = std::find(small.fibers[y].begin(), small.fibers[y].end(), small.fibers[x][i]);
        link[i] = static_cast<std::uint32_t>(it - small.fibers[y].begin());
      }
      small.spec.linking[x][y] = std::move(link);
    }

  GroupoidPtr u = presheaf_groupoid(small.spec);
  GroupoidPtr h = presheaf_groupoid(big.spec);
  std::vector<std::vector<std::uint32_t>> fiber_maps(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    fiber_maps[x].resize(small.fibers[x].size());
    for (std::uint32_t i = 0; i < small.fibers[x].size(); ++i) {
      auto it = std::find(big.fibers[x].begin(), big.fibers[x].end(), small.fibers[x][i]);
      fiber_maps[x][i] = static_cast<std::uint32_t>(it - big.fibers[x].begin());
    }
  }
  std::vector<std::uint32_t> base_map(n);
  for (std::uint32_t x = 0; x < n; ++x) base_map[x] = x;
  return presheaf_morphism(small.spec, u, big.spec, h, base_map, fiber_maps);
}

OrderedFunctor image_fibration(Rng& rng, const RandomParams& params) {
  Poset base = random_poset(rng, params.max_poset);
  auto lib = group_library(params.max_group);
  const GroupTable& master = pick(rng, lib);
  auto src = random_subgroup_presheaf(rng, base, master);

  auto homs = group_homomorphisms(master, master, 32);
  const auto& theta = pick(rng, homs);

  const std::size_t n = base.size();
  SubgroupPresheaf img;
  img.master = master;
  img.fibers.resize(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::vector<std::uint32_t> elems;
    for (auto e : src.fibers[x]) elems.push_back(theta[e]);
    img.fibers[x] = generated_subgroup(master, elems);  // theta image is already a subgroup
  }
  img.spec.base = base;
  img.spec.groups.resize(n);
  img.spec.linking.assign(n, std::vector<std::vector<std::uint32_t>>(n));
  for (std::uint32_t x = 0; x < n; ++x) img.spec.groups[x] = subgroup_table(master, img.fibers[x]);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      if (!base.leq(y, x)) continue;
      std::vector<std::uint32_t> link(img.fibers[x].size());
      for (std::uint32_t i = 0; i < img.fibers[x].size(); ++i) {
        auto it = std::find(img.fibers[y].begin(), img.fibers[y].end(), img.fibers[x][i]);
        link[i] = static_cast<std::uint32_t>(it - img.fibers[y].begin());
      }
      img.spec.linking[x][y] = std::move(link);
    }

  GroupoidPtr g = presheaf_groupoid(src.spec);
  GroupoidPtr h = presheaf_groupoid(img.spec);
  std::vector<std::vector<std::uint32_t>> fiber_maps(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    fiber_maps[x].resize(src.fibers[x].size());
    for (std::uint32_t i = 0; i < src.fibers[x].size(); ++i) {
      auto it = std::find(img.fibers[x].begin(), img.fibers[x].end(), theta[src.fibers[x][i]]);
      fiber_maps[x][i] = static_cast<std::uint32_t>(it - img.fibers[x].begin());
    }
  }
  std::vector<std::uint32_t> base_map(n);
  for (std::uint32_t x = 0; x < n; ++x) base_map[x] = x;
  return presheaf_morphism(src.spec, g, img.spec, h, base_map, fiber_maps);
}

}  // namespace

GroupoidAction random_poset_action(std::uint64_t seed, const RandomParams& params) {
  Rng rng(seed * 0xd1b54a32d192ed03ull + 11);
  RandomParams p = params;
  p.allow_interval_product = false;
  GroupoidPtr g = random_instance(1 + seed % 7919, p).g;
  const auto& G = *g;

  if (rng() % 2 == 0) {
    // trivial action on the object poset
    GroupoidPtr carrier = objects_groupoid(G);
    std::vector<ObjectId> moment(G.n_objects());
    for (ObjectId e = 0; e < G.n_objects(); ++e) moment[e] = e;
    std::unordered_map<std::uint64_t, ArrowId> act;
    for (ObjectId e = 0; e < G.n_objects(); ++e)
      for (ArrowId m : G.star(e)) act[key64(e, m)] = G.cod(m);
    return make_action(g, std::move(carrier), std::move(moment), std::move(act));
  }
  // right multiplication on the arrows-of-G poset
  GroupoidPtr carrier = trivial_groupoid(omega_poset(G));
  std::vector<ObjectId> moment(G.n_arrows());
  for (ArrowId h = 0; h < G.n_arrows(); ++h) moment[h] = G.cod(h);
  std::unordered_map<std::uint64_t, ArrowId> act;
  for (ArrowId h = 0; h < G.n_arrows(); ++h)
    for (ArrowId m : G.star(G.cod(h))) act[key64(h, m)] = G.compose_req(h, m);
  return make_action(g, std::move(carrier), std::move(moment), std::move(act));
}

OrderedFunctor random_functor(std::uint64_t seed, FunctorKind kind, const RandomParams& params) {
  Rng rng(seed * 0xa0761d6478bd642full + 13);
  switch (kind) {
    case FunctorKind::star_injective:
      return subpresheaf_inclusion(rng, params);
    case FunctorKind::fibration: {
      if (rng() % 3 == 0) {
        RandomInstance inst = random_with_normal(seed, params);
        return quotient(inst.g, *inst.normal_sub).varpi;
      }
      return image_fibration(rng, params);
    }
    case FunctorKind::covering: {
      SemidirectProduct sdp = semidirect_product(random_poset_action(seed, params));
      return sdp.projection;
    }
    case FunctorKind::any:
      break;
  }
  if (seed % 8 == 2) {
    // collapse everything onto a point
    RandomParams p = params;
    p.allow_interval_product = false;
    GroupoidPtr g = random_instance(1 + seed, p).g;
    GroupoidPtr pt = trivial_groupoid(Poset::create({"pt"}, {{0, 0}}));
    std::vector<ArrowId> map(g->n_arrows(), 0);
    return make_functor(g, pt, std::move(map));
  }
  if (seed % 8 == 6) {
    // the object inclusion G_0 -> G, never star-surjective once G has a
    // non-identity arrow
    RandomParams p = params;
    p.allow_interval_product = false;
    GroupoidPtr g;
    for (std::uint64_t probe = 1 + seed;; ++probe) {
      g = random_instance(probe, p).g;
      if (g->n_arrows() > g->n_objects()) break;
    }
    GroupoidPtr g0 = objects_groupoid(*g);
    std::vector<ArrowId> inc(g0->n_arrows());
    for (ObjectId e = 0; e < g->n_objects(); ++e) inc[e] = g->identity(e);
    return make_functor(g0, g, std::move(inc));
  }
  switch (seed % 4) {
    case 0: return subpresheaf_inclusion(rng, params);
    case 1: return image_fibration(rng, params);
    default: {
      SemidirectProduct sdp = semidirect_product(random_poset_action(seed, params));
      return sdp.projection;
    }
  }
}

}  // namespace ogpd
