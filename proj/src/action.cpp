#include "ogpd/action.hpp"

#include <algorithm>

namespace ogpd {

std::optional<ArrowId> GroupoidAction::act_on(ArrowId a, ArrowId g) const {
  auto it = act.find(key64(a, g));
  if (it == act.end()) return std::nullopt;
  return it->second;
}

ArrowId GroupoidAction::act_req(ArrowId a, ArrowId g) const {
  auto r = act_on(a, g);
  if (!r)
    throw invariant_error("action undefined on ('" + carrier->arrow_name(a) + "','" +
                          actor->arrow_name(g) + "')");
  return *r;
}

GroupoidPtr objects_groupoid(const OrderedGroupoid& g) {
  return trivial_groupoid(g.object_poset());
}

GroupoidAction make_action(GroupoidPtr actor, GroupoidPtr carrier, std::vector<ObjectId> moment,
                           std::unordered_map<std::uint64_t, ArrowId> act) {
  GroupoidAction out;
  out.actor = std::move(actor);
  out.carrier = std::move(carrier);
  // in the trivial groupoid on the object poset, arrow ids equal object ids
  std::vector<ArrowId> map(moment.begin(), moment.end());
  out.omega = make_functor(out.carrier, objects_groupoid(*out.actor), std::move(map));
  out.act = std::move(act);
  if (ValidationReport rep = validate_action(out); !rep.passed)
    throw domain_error("not an ordered action: " + rep.summary());
  return out;
}

ValidationReport validate_action(const GroupoidAction& action) {
  ValidationReport rep;
  const auto& G = *action.actor;
  const auto& A = *action.carrier;

  if (action.omega.source() != action.carrier) {
    rep.add(Axiom::structure, "moment functor does not start at the carrier");
    return rep;
  }
  if (ValidationReport fr = validate_functor(action.omega); !fr.passed) {
    rep.add(Axiom::structure, "moment map is not an ordered functor: " + fr.summary());
    return rep;
  }
  for (const auto& [key, value] : action.act)
    if ((key >> 32) >= A.n_arrows() || (key & 0xffffffffu) >= G.n_arrows() ||
        value >= A.n_arrows()) {
      rep.add(Axiom::structure, "action table references unknown arrows");
      return rep;
    }

  // defined exactly on moment(a) == dom(g), landing over cod(g)
  for (ArrowId a = 0; a < A.n_arrows() && !rep.has(Axiom::act_typing); ++a)
    for (ArrowId g = 0; g < G.n_arrows(); ++g) {
      auto r = action.act_on(a, g);
      bool wanted = action.moment(a) == G.dom(g);
      if (wanted != r.has_value()) {
        rep.add(Axiom::act_typing,
                "action on ('" + A.arrow_name(a) + "','" + G.arrow_name(g) + "') is " +
                    (wanted ? "missing" : "spurious"),
                {a, g});
        break;
      }
      if (r && action.moment(*r) != G.cod(g)) {
        rep.add(Axiom::act_typing,
                "action result of ('" + A.arrow_name(a) + "','" + G.arrow_name(g) +
                    "') has wrong moment",
                {a, g});
        break;
      }
    }
  if (!rep.passed) return rep;

  for (ArrowId a = 0; a < A.n_arrows() && !rep.has(Axiom::act_chain); ++a)
    for (const auto& t : G.data().compose) {
      if (action.moment(a) != G.dom(t[0])) continue;
      if (action.act_req(a, t[2]) != action.act_req(action.act_req(a, t[0]), t[1])) {
        rep.add(Axiom::act_chain,
                "chain law fails on ('" + A.arrow_name(a) + "','" + G.arrow_name(t[0]) + "','" +
                    G.arrow_name(t[1]) + "')",
                {a, t[0], t[1]});
        break;
      }
    }

  for (const auto& t : A.data().compose) {
    if (rep.has(Axiom::act_product)) break;
    for (ArrowId g = 0; g < G.n_arrows(); ++g) {
      if (action.moment(t[0]) != G.dom(g)) continue;
      auto left = action.act_req(t[0], g), right = action.act_req(t[1], g);
      auto both = A.compose(left, right);
      if (!both || *both != action.act_req(t[2], g)) {
        rep.add(Axiom::act_product,
                "product law fails on ('" + A.arrow_name(t[0]) + "','" + A.arrow_name(t[1]) +
                    "','" + G.arrow_name(g) + "')",
                {t[0], t[1], g});
        break;
      }
    }
  }

  for (ArrowId a = 0; a < A.n_arrows(); ++a)
    if (action.act_req(a, G.identity(action.moment(a))) != a) {
      rep.add(Axiom::act_unit, "unit law fails at '" + A.arrow_name(a) + "'", {a});
      break;
    }

  {
    std::unordered_map<std::uint64_t, std::vector<std::pair<ArrowId, ArrowId>>> by_dom;
    for (auto [lo, hi] : G.data().arrow_leq)
      by_dom[key64(G.dom(lo), G.dom(hi))].push_back({lo, hi});
    bool done = false;
    for (auto [a, b] : A.data().arrow_leq) {
      if (done) break;
      auto it = by_dom.find(key64(action.moment(a), action.moment(b)));
      if (it == by_dom.end()) continue;
      for (auto [g, h] : it->second)
        if (!A.arrow_leq(action.act_req(a, g), action.act_req(b, h))) {
          rep.add(Axiom::act_monotone,
                  "monotonicity fails on ('" + A.arrow_name(a) + "'<='" + A.arrow_name(b) +
                      "', '" + G.arrow_name(g) + "'<='" + G.arrow_name(h) + "')",
                  {a, b, g, h});
          done = true;
          break;
        }
    }
  }
  return rep;
}

ArrowId SemidirectProduct::pair_of(ArrowId g_part, ArrowId a_part) const {
  auto it = index.find(key64(g_part, a_part));
  if (it == index.end())
    throw invariant_error("no semidirect pair ('" + action.actor->arrow_name(g_part) + "','" +
                          action.carrier->arrow_name(a_part) + "')");
  return it->second;
}

SemidirectProduct semidirect_product(GroupoidAction action) {
  if (ValidationReport rep = validate_action(action); !rep.passed)
    throw domain_error("semidirect product needs a valid action: " + rep.summary());
  const auto& G = *action.actor;
  const auto& A = *action.carrier;

  SemidirectProduct out;
  out.action = std::move(action);

  GroupoidData d;
  d.objects = A.data().objects;  // identify (G |x A)_0 with A_0
  d.object_leq = A.data().object_leq;

  for (ArrowId g = 0; g < G.n_arrows(); ++g)
    for (ArrowId a = 0; a < A.n_arrows(); ++a) {
      if (out.action.moment(a) != G.cod(g)) continue;
      ArrowId id = static_cast<ArrowId>(d.arrows.size());
      ArrowId back = out.action.act_req(a, G.inverse(g));
      d.arrows.push_back({"(" + G.arrow_name(g) + ";" + A.arrow_name(a) + ")", A.dom(back),
                          A.cod(a)});
      out.pairs.push_back({g, a});
      out.index[key64(g, a)] = id;
    }

  d.identity.resize(A.n_objects());
  for (ObjectId e = 0; e < A.n_objects(); ++e) {
    ArrowId ide = A.identity(e);
    d.identity[e] = out.index.at(key64(G.identity(out.action.moment(ide)), ide));
  }
  d.inverse.resize(d.arrows.size());
  for (ArrowId m = 0; m < d.arrows.size(); ++m) {
    auto [g, a] = out.pairs[m];
    d.inverse[m] = out.index.at(key64(G.inverse(g), out.action.act_req(A.inverse(a), G.inverse(g))));
  }
  {
    std::vector<std::vector<ArrowId>> by_dom(A.n_objects());
    for (ArrowId m = 0; m < d.arrows.size(); ++m) by_dom[d.arrows[m].dom].push_back(m);
    for (ArrowId m = 0; m < d.arrows.size(); ++m)
      for (ArrowId m2 : by_dom[d.arrows[m].cod]) {
        auto [g, a] = out.pairs[m];
        auto [h, b] = out.pairs[m2];
        ArrowId gh = G.compose_req(g, h);
        ArrowId ab = A.compose_req(out.action.act_req(a, h), b);
        d.compose.push_back({m, m2, out.index.at(key64(gh, ab))});
      }
  }
  for (ArrowId m = 0; m < d.arrows.size(); ++m)
    for (ArrowId m2 = 0; m2 < d.arrows.size(); ++m2)
      if (G.arrow_leq(out.pairs[m].first, out.pairs[m2].first) &&
          A.arrow_leq(out.pairs[m].second, out.pairs[m2].second))
        d.arrow_leq.emplace_back(m, m2);

  out.g = OrderedGroupoid::create(std::move(d));
  std::vector<ArrowId> proj(out.g->n_arrows());
  for (ArrowId m = 0; m < out.g->n_arrows(); ++m) proj[m] = out.pairs[m].first;
  out.projection = make_functor(out.g, out.action.actor, std::move(proj));
  return out;
}

OrderedFunctor lift_sdp_projection(const SemidirectProduct& sdp, const HomotopySquare& sq) {
  if (!(sq.p == sdp.projection))
    throw domain_error("lift_sdp_projection: square is not against the projection");
  const auto& A = *sq.cyl.base();
  const auto& C = *sdp.action.carrier;
  std::vector<ArrowId> gs(A.n_objects());
  for (ObjectId y = 0; y < A.n_objects(); ++y) {
    ObjectId py = sq.f.obj(y);  // carrier object under f
    ArrowId hy = sq.F(sq.cyl.iota(y));
    ArrowId carrier_part = sdp.action.act_req(C.identity(py), hy);
    gs[y] = sdp.pair_of(hy, carrier_part);
  }
  OrderedFunctor lift = cylinder_functor(sq.cyl, sq.f, gs);
  if (!verify_lift(sq, lift)) throw invariant_error("semidirect projection lift failed");
  return lift;
}

GroupoidAction covering_to_action(const OrderedFunctor& gamma) {
  if (!star_class(gamma).bijective())
    throw domain_error("covering_to_action: functor is not a covering");
  const auto& C = *gamma.source();
  const auto& G = *gamma.target();

  GroupoidPtr carrier = trivial_groupoid(C.object_poset());
  std::vector<ObjectId> moment(carrier->n_arrows());
  for (ObjectId x = 0; x < C.n_objects(); ++x) moment[x] = gamma.obj(x);

  std::unordered_map<std::uint64_t, ArrowId> act;
  for (ObjectId x = 0; x < C.n_objects(); ++x)
    for (ArrowId g = 0; g < G.n_arrows(); ++g) {
      if (gamma.obj(x) != G.dom(g)) continue;
      ArrowId lift = kNoArrow;
      for (ArrowId c : C.star(x))
        if (gamma(c) == g) {
          if (lift != kNoArrow) throw invariant_error("covering star lift not unique");
          lift = c;
        }
      if (lift == kNoArrow) throw invariant_error("covering star lift missing");
      act[key64(x, g)] = C.cod(lift);  // carrier arrows are the objects of C
    }
  return make_action(gamma.target(), std::move(carrier), std::move(moment), std::move(act));
}

ActCovRoundTrip action_to_covering_roundtrip(const OrderedFunctor& gamma) {
  ActCovRoundTrip out;
  out.action = covering_to_action(gamma);
  out.sdp = semidirect_product(out.action);
  const auto& C = *gamma.source();
  std::vector<ArrowId> iso(C.n_arrows());
  for (ArrowId c = 0; c < C.n_arrows(); ++c) iso[c] = out.sdp.pair_of(gamma(c), C.cod(c));
  out.iso = make_functor(gamma.source(), out.sdp.g, std::move(iso));
  if (!is_order_isomorphism(out.iso))
    throw invariant_error("covering is not isomorphic to its action groupoid");
  if (!(compose_functors(out.iso, out.sdp.projection) == gamma))
    throw invariant_error("isomorphism does not commute over the base");
  return out;
}

}  // namespace ogpd
