#include "ogpd/functor.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace ogpd {

ValidationReport validate_functor_data(const GroupoidData& src, const GroupoidData& tgt,
                                       const std::vector<ArrowId>& map) {
  ValidationReport rep;
  const std::size_t mS = src.n_arrows(), mT = tgt.n_arrows();
  if (map.size() != mS) {
    rep.add(Axiom::structure, "arrow map size mismatch");
    return rep;
  }
  for (ArrowId a = 0; a < mS; ++a)
    if (map[a] >= mT) {
      rep.add(Axiom::structure, "arrow map has dangling image for '" + src.arrows[a].name + "'", {a});
      return rep;
    }

  auto obj_image = [&](ObjectId e) { return tgt.arrows[map[src.identity[e]]].dom; };

  for (ObjectId e = 0; e < src.n_objects(); ++e) {
    ArrowId i = map[src.identity[e]];
    if (tgt.identity[tgt.arrows[i].dom] != i) {
      rep.add(Axiom::category, "identity of '" + src.objects[e] + "' is not sent to an identity",
              {src.identity[e]});
      break;
    }
  }
  for (ArrowId a = 0; a < mS && !rep.has(Axiom::category); ++a) {
    if (tgt.arrows[map[a]].dom != obj_image(src.arrows[a].dom) ||
        tgt.arrows[map[a]].cod != obj_image(src.arrows[a].cod)) {
      rep.add(Axiom::category, "'" + src.arrows[a].name + "' has ill-typed image", {a});
      break;
    }
    if (map[src.inverse[a]] != tgt.inverse[map[a]]) {
      rep.add(Axiom::category, "inverse of '" + src.arrows[a].name + "' is not preserved", {a});
      break;
    }
  }
  if (!rep.has(Axiom::category)) {
    std::unordered_map<std::uint64_t, ArrowId> comp;
    for (const auto& t : tgt.compose) comp[key64(t[0], t[1])] = t[2];
    for (const auto& t : src.compose) {
      auto it = comp.find(key64(map[t[0]], map[t[1]]));
      if (it == comp.end() || it->second != map[t[2]]) {
        rep.add(Axiom::category,
                "composite of '" + src.arrows[t[0]].name + "' and '" + src.arrows[t[1]].name +
                    "' is not preserved",
                {t[0], t[1]});
        break;
      }
    }
  }
  {
    BitRel leq(mT);
    for (auto [lo, hi] : tgt.arrow_leq) leq.set(lo, hi);
    for (auto [lo, hi] : src.arrow_leq)
      if (!leq.get(map[lo], map[hi])) {
        rep.add(Axiom::arrow_order,
                "order pair ('" + src.arrows[lo].name + "' <= '" + src.arrows[hi].name +
                    "') is not preserved",
                {lo, hi});
        break;
      }
  }
  return rep;
}

ValidationReport validate_functor(const OrderedFunctor& f) {
  return validate_functor_data(f.source()->data(), f.target()->data(), f.map());
}

OrderedFunctor make_functor(GroupoidPtr source, GroupoidPtr target, std::vector<ArrowId> map) {
  ValidationReport rep = validate_functor_data(source->data(), target->data(), map);
  if (!rep.passed) throw domain_error("not an ordered functor: " + rep.summary());
  return OrderedFunctor(std::move(source), std::move(target), std::move(map));
}

OrderedFunctor identity_functor(GroupoidPtr g) {
  std::vector<ArrowId> map(g->n_arrows());
  for (ArrowId a = 0; a < map.size(); ++a) map[a] = a;
  return OrderedFunctor(g, g, std::move(map));
}

OrderedFunctor compose_functors(const OrderedFunctor& f, const OrderedFunctor& g) {
  if (f.target() != g.source())
    throw domain_error("functor composition: target/source mismatch");
  std::vector<ArrowId> map(f.map().size());
  for (ArrowId a = 0; a < map.size(); ++a) map[a] = g(f(a));
  return OrderedFunctor(f.source(), g.target(), std::move(map));
}

StarClass star_class_at(const OrderedFunctor& f, ObjectId e) {
  const auto& G = *f.source();
  const auto& H = *f.target();
  StarClass out;
  std::unordered_set<ArrowId> image;
  for (ArrowId a : G.star(e))
    if (!image.insert(f(a)).second) out.injective = false;
  for (ArrowId h : H.star(f.obj(e)))
    if (!image.count(h)) {
      out.surjective = false;
      break;
    }
  return out;
}

StarClass star_class(const OrderedFunctor& f) {
  StarClass out;
  for (ObjectId e = 0; e < f.source()->n_objects(); ++e) {
    StarClass at = star_class_at(f, e);
    out.surjective = out.surjective && at.surjective;
    out.injective = out.injective && at.injective;
  }
  return out;
}

std::vector<ArrowId> kernel(const OrderedFunctor& f) {
  const auto& G = *f.source();
  const auto& H = *f.target();
  std::vector<ArrowId> ker;
  bool only_identities = true;
  for (ArrowId a = 0; a < G.n_arrows(); ++a)
    if (H.is_identity(f(a))) {
      ker.push_back(a);
      if (!G.is_identity(a)) only_identities = false;
    }
  if (only_identities != star_class(f).injective)
    throw invariant_error("kernel/star-injectivity correspondence failed");
  return ker;
}

ValidationReport check_wide_subgroupoid(const OrderedGroupoid& g,
                                        const std::vector<ArrowId>& arrows) {
  ValidationReport rep;
  std::unordered_set<ArrowId> set(arrows.begin(), arrows.end());
  for (ObjectId e = 0; e < g.n_objects(); ++e)
    if (!set.count(g.identity(e))) {
      rep.add(Axiom::structure, "not wide: identity of '" + g.object_name(e) + "' missing");
      break;
    }
  for (ArrowId a : arrows) {
    if (!set.count(g.inverse(a))) {
      rep.add(Axiom::inverses, "not closed under inverse at '" + g.arrow_name(a) + "'", {a});
      break;
    }
  }
  for (ArrowId a : arrows) {
    bool bad = false;
    for (ArrowId b : arrows) {
      auto c = g.compose(a, b);
      if (c && !set.count(*c)) {
        rep.add(Axiom::category,
                "not closed under composition at ('" + g.arrow_name(a) + "','" + g.arrow_name(b) +
                    "')",
                {a, b});
        bad = true;
        break;
      }
    }
    if (bad) break;
  }
  return rep;
}

bool is_subgroupoid(const OrderedGroupoid& g, const std::vector<ArrowId>& arrows) {
  std::unordered_set<ArrowId> set(arrows.begin(), arrows.end());
  for (ArrowId a : arrows) {
    if (!set.count(g.identity(g.dom(a))) || !set.count(g.identity(g.cod(a)))) return false;
    if (!set.count(g.inverse(a))) return false;
    for (ArrowId b : arrows) {
      auto c = g.compose(a, b);
      if (c && !set.count(*c)) return false;
    }
  }
  return true;
}

ValidationReport validate_nat_trans(const NatTrans& t) {
  ValidationReport rep;
  if (t.from.source() != t.to.source() || t.from.target() != t.to.target()) {
    rep.add(Axiom::structure, "natural transformation endpoints live in different hom-sets");
    return rep;
  }
  const auto& A = *t.from.source();
  const auto& B = *t.from.target();
  if (t.component.size() != A.n_objects()) {
    rep.add(Axiom::structure, "component table size mismatch");
    return rep;
  }
  for (ObjectId x = 0; x < A.n_objects(); ++x) {
    ArrowId c = t.component[x];
    if (c >= B.n_arrows() || B.dom(c) != t.from.obj(x) || B.cod(c) != t.to.obj(x)) {
      rep.add(Axiom::structure, "component at '" + A.object_name(x) + "' is ill-typed");
      return rep;
    }
  }
  for (ArrowId a = 0; a < A.n_arrows(); ++a) {
    ObjectId x = A.dom(a), y = A.cod(a);
    if (B.compose_req(t.component[x], t.to(a)) != B.compose_req(t.from(a), t.component[y])) {
      rep.add(Axiom::category, "naturality square fails at '" + A.arrow_name(a) + "'", {a});
      break;
    }
  }
  for (ObjectId x = 0; x < A.n_objects(); ++x) {
    bool bad = false;
    for (ObjectId y = 0; y < A.n_objects(); ++y)
      if (A.object_poset().leq(x, y) && !B.arrow_leq(t.component[x], t.component[y])) {
        rep.add(Axiom::arrow_order, "components not order-preserving on ('" + A.object_name(x) +
                                        "','" + A.object_name(y) + "')");
        bad = true;
        break;
      }
    if (bad) break;
  }
  return rep;
}

bool is_order_isomorphism(const OrderedFunctor& f) {
  const auto& G = *f.source();
  const auto& H = *f.target();
  if (G.n_arrows() != H.n_arrows()) return false;
  std::vector<char> hit(H.n_arrows(), 0);
  for (ArrowId a = 0; a < G.n_arrows(); ++a) {
    if (hit[f(a)]) return false;
    hit[f(a)] = 1;
  }
  if (!validate_functor(f).passed) return false;
  for (ArrowId a = 0; a < G.n_arrows(); ++a)
    for (ArrowId b = 0; b < G.n_arrows(); ++b)
      if (H.arrow_leq(f(a), f(b)) && !G.arrow_leq(a, b)) return false;
  return true;
}

bool is_ordered_embedding(const OrderedFunctor& f) {
  const auto& G = *f.source();
  std::unordered_set<ArrowId> image;
  for (ArrowId a = 0; a < G.n_arrows(); ++a)
    if (!image.insert(f(a)).second) return false;
  for (ArrowId a = 0; a < G.n_arrows(); ++a)
    for (ArrowId b = 0; b < G.n_arrows(); ++b)
      if (f.target()->arrow_leq(f(a), f(b)) && !G.arrow_leq(a, b)) return false;
  return true;
}

PullbackGroupoid pullback(const OrderedFunctor& f, const OrderedFunctor& g) {
  if (f.target() != g.target()) throw domain_error("pullback: functors must share a target");
  const auto& A = *f.source();
  const auto& B = *g.source();

  GroupoidData d;
  std::unordered_map<std::uint64_t, ObjectId> objs;
  std::vector<std::pair<ObjectId, ObjectId>> obj_pairs;
  for (ObjectId x = 0; x < A.n_objects(); ++x)
    for (ObjectId y = 0; y < B.n_objects(); ++y)
      if (f.obj(x) == g.obj(y)) {
        objs[key64(x, y)] = static_cast<ObjectId>(d.objects.size());
        obj_pairs.emplace_back(x, y);
        d.objects.push_back("(" + A.object_name(x) + "," + B.object_name(y) + ")");
      }
  for (ObjectId i = 0; i < d.objects.size(); ++i)
    for (ObjectId j = 0; j < d.objects.size(); ++j)
      if (A.object_poset().leq(obj_pairs[i].first, obj_pairs[j].first) &&
          B.object_poset().leq(obj_pairs[i].second, obj_pairs[j].second))
        d.object_leq.emplace_back(i, j);

  std::unordered_map<std::uint64_t, ArrowId> arrs;
  std::vector<std::pair<ArrowId, ArrowId>> arrow_pairs;
  for (ArrowId a = 0; a < A.n_arrows(); ++a)
    for (ArrowId b = 0; b < B.n_arrows(); ++b)
      if (f(a) == g(b)) {
        arrs[key64(a, b)] = static_cast<ArrowId>(d.arrows.size());
        arrow_pairs.emplace_back(a, b);
        d.arrows.push_back({"(" + A.arrow_name(a) + "," + B.arrow_name(b) + ")",
                            objs.at(key64(A.dom(a), B.dom(b))),
                            objs.at(key64(A.cod(a), B.cod(b)))});
      }

  d.identity.resize(d.objects.size());
  for (ObjectId i = 0; i < d.objects.size(); ++i)
    d.identity[i] = arrs.at(key64(A.identity(obj_pairs[i].first), B.identity(obj_pairs[i].second)));
  d.inverse.resize(d.arrows.size());
  for (ArrowId i = 0; i < d.arrows.size(); ++i)
    d.inverse[i] = arrs.at(key64(A.inverse(arrow_pairs[i].first), B.inverse(arrow_pairs[i].second)));
  for (ArrowId i = 0; i < d.arrows.size(); ++i)
    for (ArrowId j = 0; j < d.arrows.size(); ++j) {
      auto ca = A.compose(arrow_pairs[i].first, arrow_pairs[j].first);
      auto cb = B.compose(arrow_pairs[i].second, arrow_pairs[j].second);
      if (ca && cb) d.compose.push_back({i, j, arrs.at(key64(*ca, *cb))});
    }
  for (ArrowId i = 0; i < d.arrows.size(); ++i)
    for (ArrowId j = 0; j < d.arrows.size(); ++j)
      if (A.arrow_leq(arrow_pairs[i].first, arrow_pairs[j].first) &&
          B.arrow_leq(arrow_pairs[i].second, arrow_pairs[j].second))
        d.arrow_leq.emplace_back(i, j);

  PullbackGroupoid out;
  out.g = OrderedGroupoid::create(std::move(d));
  out.arrow_pairs = std::move(arrow_pairs);
  std::vector<ArrowId> to_a(out.g->n_arrows()), to_b(out.g->n_arrows());
  for (ArrowId i = 0; i < out.g->n_arrows(); ++i) {
    to_a[i] = out.arrow_pairs[i].first;
    to_b[i] = out.arrow_pairs[i].second;
  }
  out.to_left = make_functor(out.g, f.source(), std::move(to_a));
  out.to_right = make_functor(out.g, g.source(), std::move(to_b));
  return out;
}

}  // namespace ogpd
