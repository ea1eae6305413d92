#include "ogpd/quotient.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace ogpd {

ValidationReport is_normal(const OrderedGroupoid& g, const std::vector<ArrowId>& sub) {
  ValidationReport rep;
  std::unordered_set<ArrowId> set(sub.begin(), sub.end());
  for (ArrowId a : sub)
    if (a >= g.n_arrows()) {
      rep.add(Axiom::structure, "subgroupoid references unknown arrow");
      return rep;
    }

  for (ObjectId e = 0; e < g.n_objects(); ++e)
    if (!set.count(g.identity(e))) {
      rep.add(Axiom::sub_wide, "identity of '" + g.object_name(e) + "' missing");
      break;
    }
  for (ArrowId a : sub)
    if (!set.count(g.inverse(a))) {
      rep.add(Axiom::sub_closed, "inverse of '" + g.arrow_name(a) + "' missing", {a});
      break;
    }
  for (ArrowId a : sub) {
    bool bad = false;
    for (ArrowId b : sub) {
      auto c = g.compose(a, b);
      if (c && !set.count(*c)) {
        rep.add(Axiom::sub_closed,
                "composite of '" + g.arrow_name(a) + "' and '" + g.arrow_name(b) + "' missing",
                {a, b});
        bad = true;
        break;
      }
    }
    if (bad) break;
  }

  // restriction-closed: e <= dom(a) pulls a down inside the subgroupoid
  for (ArrowId a : sub) {
    bool bad = false;
    for (ArrowId lo : g.down(a))
      if (!set.count(lo)) {
        // only restrictions matter, but every element below a is the
        // restriction to its own domain
        rep.add(Axiom::sub_restriction,
                "restriction '" + g.arrow_name(lo) + "' of '" + g.arrow_name(a) + "' missing",
                {a, lo});
        bad = true;
        break;
      }
    if (bad) break;
  }

  // conjugation: h,k below a common upper bound, h^{-1} a k defined
  {
    std::set<std::pair<ArrowId, ArrowId>> bounded;  // pairs with a common upper bound
    for (ArrowId up = 0; up < g.n_arrows(); ++up)
      for (ArrowId h : g.down(up))
        for (ArrowId k : g.down(up)) bounded.insert({h, k});
    bool done = false;
    for (auto [h, k] : bounded) {
      if (done) break;
      for (ArrowId a : sub) {
        if (g.dom(h) != g.dom(a) || g.cod(a) != g.dom(k)) continue;
        ArrowId c = g.compose_req(g.compose_req(g.inverse(h), a), k);
        if (!set.count(c)) {
          rep.add(Axiom::sub_conjugation,
                  "conjugate '" + g.arrow_name(c) + "' of '" + g.arrow_name(a) + "' by ('" +
                      g.arrow_name(h) + "','" + g.arrow_name(k) + "') missing",
                  {a, h, k, c});
          done = true;
          break;
        }
      }
    }
  }
  return rep;
}

std::optional<Nexus> find_nexus(const OrderedGroupoid& g, const std::vector<ArrowId>& sub,
                                ObjectId e, ObjectId f) {
  for (ArrowId a : sub) {
    if (g.cod(a) != f || !g.object_poset().leq(g.dom(a), e)) continue;
    for (ArrowId p : sub)
      if (g.cod(p) == e && g.object_poset().leq(g.dom(p), f)) return Nexus{a, p};
  }
  return std::nullopt;
}

namespace {

struct Relation {
  // translate sets T_g = { a g b : a, b in the subgroupoid }
  std::vector<std::vector<ArrowId>> translates;
  BitRel reach;  // reach(g, h): some translate of g lies below h

  bool equivalent(ArrowId g, ArrowId h) const { return reach.get(g, h) && reach.get(h, g); }
};

Relation build_relation(const OrderedGroupoid& g, const std::vector<ArrowId>& sub) {
  const std::size_t m = g.n_arrows();
  std::vector<std::vector<ArrowId>> by_cod(g.n_objects()), by_dom(g.n_objects());
  for (ArrowId a : sub) {
    by_cod[g.cod(a)].push_back(a);
    by_dom[g.dom(a)].push_back(a);
  }
  Relation rel;
  rel.translates.resize(m);
  for (ArrowId x = 0; x < m; ++x) {
    std::set<ArrowId> ts;
    for (ArrowId a : by_cod[g.dom(x)])
      for (ArrowId b : by_dom[g.cod(x)])
        ts.insert(g.compose_req(g.compose_req(a, x), b));
    rel.translates[x].assign(ts.begin(), ts.end());
  }
  rel.reach = BitRel(m);
  for (ArrowId x = 0; x < m; ++x)
    for (ArrowId h = 0; h < m; ++h)
      for (ArrowId t : rel.translates[x])
        if (g.arrow_leq(t, h)) {
          rel.reach.set(x, h);
          break;
        }
  return rel;
}

}  // namespace

QuotientGroupoid quotient(GroupoidPtr gp, std::vector<ArrowId> sub) {
  const auto& G = *gp;
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  if (ValidationReport rep = is_normal(G, sub); !rep.passed)
    throw domain_error("quotient: subgroupoid is not normal: " + rep.summary());

  const std::size_t m = G.n_arrows();
  Relation rel = build_relation(G, sub);

  // one-step transitivity sanity pass
  for (ArrowId x = 0; x < m; ++x)
    for (ArrowId y = 0; y < m; ++y) {
      if (!rel.equivalent(x, y)) continue;
      for (ArrowId z = 0; z < m; ++z)
        if (rel.equivalent(y, z) && !rel.equivalent(x, z))
          throw invariant_error("class relation is not transitive");
    }

  QuotientGroupoid out;
  out.parent = gp;
  out.sub = sub;
  out.class_of.assign(m, kNoArrow);
  for (ArrowId x = 0; x < m; ++x) {
    if (out.class_of[x] != kNoArrow) continue;
    ArrowId cls = static_cast<ArrowId>(out.rep.size());
    out.rep.push_back(x);
    out.members.push_back({});
    for (ArrowId y = x; y < m; ++y)
      if (rel.equivalent(x, y)) {
        out.class_of[y] = cls;
        out.members[cls].push_back(y);
      }
  }
  const std::size_t k = out.rep.size();

  // domains must be constant across a class
  for (ArrowId cls = 0; cls < k; ++cls)
    for (ArrowId mem : out.members[cls]) {
      if (out.class_of[G.identity(G.dom(mem))] != out.class_of[G.identity(G.dom(out.rep[cls]))] ||
          out.class_of[G.identity(G.cod(mem))] != out.class_of[G.identity(G.cod(out.rep[cls]))])
        throw invariant_error("class endpoints are not well-defined");
    }

  // objects of the quotient: classes of identities
  std::vector<ObjectId> obj_of_class(k, kNoObject);
  GroupoidData d;
  for (ObjectId e = 0; e < G.n_objects(); ++e) {
    ArrowId cls = out.class_of[G.identity(e)];
    if (obj_of_class[cls] == kNoObject) {
      obj_of_class[cls] = static_cast<ObjectId>(d.objects.size());
      d.objects.push_back("[" + G.arrow_name(out.rep[cls]) + "]");
    }
  }

  auto cls_dom = [&](ArrowId cls) {
    return obj_of_class[out.class_of[G.identity(G.dom(out.rep[cls]))]];
  };
  auto cls_cod = [&](ArrowId cls) {
    return obj_of_class[out.class_of[G.identity(G.cod(out.rep[cls]))]];
  };

  for (ArrowId cls = 0; cls < k; ++cls)
    d.arrows.push_back({"[" + G.arrow_name(out.rep[cls]) + "]", cls_dom(cls), cls_cod(cls)});

  d.identity.assign(d.objects.size(), kNoArrow);
  for (ObjectId e = 0; e < G.n_objects(); ++e) {
    ArrowId cls = out.class_of[G.identity(e)];
    d.identity[obj_of_class[cls]] = cls;
  }
  d.inverse.resize(k);
  for (ArrowId cls = 0; cls < k; ++cls)
    d.inverse[cls] = out.class_of[G.inverse(out.rep[cls])];

  // class order from representatives (nexus-independence is a lemma;
  // the property suite re-checks it against all members)
  for (ArrowId c1 = 0; c1 < k; ++c1)
    for (ArrowId c2 = 0; c2 < k; ++c2)
      if (rel.reach.get(out.rep[c1], out.rep[c2])) d.arrow_leq.emplace_back(c1, c2);
  for (ObjectId e = 0; e < d.objects.size(); ++e)
    for (ObjectId f = 0; f < d.objects.size(); ++f) {
      ArrowId ce = d.identity[e], cf = d.identity[f];
      if (rel.reach.get(out.rep[ce], out.rep[cf])) d.object_leq.emplace_back(e, f);
    }

  // composition through a nexus
  for (ArrowId c1 = 0; c1 < k; ++c1)
    for (ArrowId c2 = 0; c2 < k; ++c2) {
      if (cls_cod(c1) != cls_dom(c2)) continue;
      ArrowId g = out.rep[c1], h = out.rep[c2];
      auto nx = find_nexus(G, sub, G.cod(g), G.dom(h));
      if (!nx) throw invariant_error("composable classes admit no nexus");
      ArrowId gp_ = corestriction(G, g, G.dom(nx->a));
      ArrowId prod = G.compose_req(G.compose_req(gp_, nx->a), h);
      d.compose.push_back({c1, c2, out.class_of[prod]});
    }

  out.g = OrderedGroupoid::create(std::move(d));

  std::vector<ArrowId> vmap(m);
  for (ArrowId x = 0; x < m; ++x) vmap[x] = out.class_of[x];
  out.varpi = make_functor(gp, out.g, std::move(vmap));
  if (!star_class(out.varpi).surjective)
    throw invariant_error("quotient map is not star-surjective");
  return out;
}

Factorization factorize(const OrderedFunctor& theta) {
  Factorization out;
  std::vector<ArrowId> ker = kernel(theta);
  if (ValidationReport rep = is_normal(*theta.source(), ker); !rep.passed)
    throw invariant_error("kernel is not a normal ordered subgroupoid: " + rep.summary());
  out.q = quotient(theta.source(), std::move(ker));
  out.varpi = out.q.varpi;

  std::vector<ArrowId> psi(out.q.g->n_arrows());
  for (ArrowId cls = 0; cls < out.q.g->n_arrows(); ++cls) {
    psi[cls] = theta(out.q.rep[cls]);
    for (ArrowId mem : out.q.members[cls])
      if (theta(mem) != psi[cls])
        throw invariant_error("induced map is not constant on the class of '" +
                              theta.source()->arrow_name(out.q.rep[cls]) + "'");
  }
  out.psi = make_functor(out.q.g, theta.target(), std::move(psi));
  if (!star_class(out.psi).injective)
    throw invariant_error("induced functor is not star-injective");
  if (!(compose_functors(out.varpi, out.psi) == theta))
    throw invariant_error("factorization does not compose to theta");
  if (star_class(theta).surjective && !star_class(out.psi).bijective())
    throw invariant_error("induced functor of a fibration is not a covering");
  return out;
}

}  // namespace ogpd
