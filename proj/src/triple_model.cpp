#include "ogpd/triple_model.hpp"

#include <algorithm>

namespace ogpd {

namespace {

std::uint64_t triple_key(const OrderedGroupoid& h, ArrowId h0, ArrowId t, ArrowId h1) {
  const std::uint64_t m = h.n_arrows();
  return (static_cast<std::uint64_t>(h0) * m + t) * m + h1;
}

}  // namespace

ArrowId TripleModel::arrow_of(ArrowId h0, ArrowId t, ArrowId h1) const {
  auto it = index.find(triple_key(*h, h0, t, h1));
  if (it == index.end())
    throw invariant_error("no triple [" + h->arrow_name(h0) + ";" + h->arrow_name(t) + ";" +
                          h->arrow_name(h1) + "]");
  return it->second;
}

TripleModel interval_mapping_groupoid(GroupoidPtr hp) {
  const auto& H = *hp;
  TripleModel out;
  out.h = hp;

  GroupoidData d;
  const std::size_t m = H.n_arrows();
  // one object per arrow of H
  for (ArrowId a = 0; a < m; ++a) {
    d.objects.push_back("[" + H.arrow_name(a) + "]");
    out.object_arrow.push_back(a);
  }
  d.object_leq = H.data().arrow_leq;

  for (ArrowId h0 = 0; h0 < m; ++h0)
    for (ArrowId h1 = 0; h1 < m; ++h1)
      for (ArrowId t : H.star(H.dom(h0))) {
        if (H.cod(t) != H.dom(h1)) continue;
        ArrowId id = static_cast<ArrowId>(d.arrows.size());
        d.arrows.push_back({"[" + H.arrow_name(h0) + ";" + H.arrow_name(t) + ";" +
                                H.arrow_name(h1) + "]",
                            h0, h1});
        out.triple.push_back({h0, t, h1});
        out.index[triple_key(H, h0, t, h1)] = id;
      }

  d.identity.resize(m);
  for (ArrowId a = 0; a < m; ++a)
    d.identity[a] = out.index.at(triple_key(H, a, H.identity(H.dom(a)), a));
  d.inverse.resize(d.arrows.size());
  for (ArrowId t = 0; t < d.arrows.size(); ++t) {
    auto [h0, mid, h1] = out.triple[t];
    d.inverse[t] = out.index.at(triple_key(H, h1, H.inverse(mid), h0));
  }
  for (ArrowId s = 0; s < d.arrows.size(); ++s)
    for (ArrowId t = 0; t < d.arrows.size(); ++t) {
      if (out.triple[s][2] != out.triple[t][0]) continue;
      ArrowId mid = H.compose_req(out.triple[s][1], out.triple[t][1]);
      d.compose.push_back({s, t, out.index.at(triple_key(H, out.triple[s][0], mid, out.triple[t][2]))});
    }
  for (ArrowId s = 0; s < d.arrows.size(); ++s)
    for (ArrowId t = 0; t < d.arrows.size(); ++t)
      if (H.arrow_leq(out.triple[s][0], out.triple[t][0]) &&
          H.arrow_leq(out.triple[s][1], out.triple[t][1]) &&
          H.arrow_leq(out.triple[s][2], out.triple[t][2]))
        d.arrow_leq.emplace_back(s, t);

  out.g = OrderedGroupoid::create(std::move(d));

  std::vector<ArrowId> e0(out.g->n_arrows()), e1(out.g->n_arrows());
  for (ArrowId t = 0; t < out.g->n_arrows(); ++t) {
    auto [h0, mid, h1] = out.triple[t];
    e0[t] = mid;
    e1[t] = H.compose_req(H.inverse(h0), H.compose_req(mid, h1));
  }
  out.eps0 = make_functor(out.g, hp, std::move(e0));
  out.eps1 = make_functor(out.g, hp, std::move(e1));
  return out;
}

Poset omega_poset(const OrderedGroupoid& h) {
  std::vector<std::string> names;
  for (ArrowId a = 0; a < h.n_arrows(); ++a) names.push_back(h.arrow_name(a));
  return Poset::create(std::move(names), h.data().arrow_leq);
}

OrderedFunctor lift_eps0(const TripleModel& model, const HomotopySquare& sq) {
  if (!(sq.p == model.eps0)) throw domain_error("lift_eps0: square is not against eps0");
  const auto& A = *sq.cyl.base();
  const auto& H = *model.h;
  std::vector<ArrowId> gs(A.n_objects());
  for (ObjectId x = 0; x < A.n_objects(); ++x) {
    ArrowId hx = model.object_arrow[sq.f.obj(x)];
    ArrowId lx = sq.F(sq.cyl.iota(x));
    // l_x starts at dom(h_x); the lift ends at the identity over cod(l_x)
    gs[x] = model.arrow_of(hx, lx, H.identity(H.cod(lx)));
  }
  OrderedFunctor lift = cylinder_functor(sq.cyl, sq.f, gs);
  if (!verify_lift(sq, lift)) throw invariant_error("eps0 lift failed verification");
  return lift;
}

OrderedFunctor lift_eps1(const TripleModel& model, const HomotopySquare& sq) {
  if (!(sq.p == model.eps1)) throw domain_error("lift_eps1: square is not against eps1");
  const auto& A = *sq.cyl.base();
  const auto& H = *model.h;
  std::vector<ArrowId> gs(A.n_objects());
  for (ObjectId x = 0; x < A.n_objects(); ++x) {
    ArrowId hx = model.object_arrow[sq.f.obj(x)];
    ArrowId lx = sq.F(sq.cyl.iota(x));
    if (H.dom(lx) != H.cod(hx)) throw invariant_error("eps1 lift: iota image is ill-placed");
    gs[x] = model.arrow_of(hx, H.identity(H.dom(hx)), H.compose_req(hx, lx));
  }
  OrderedFunctor lift = cylinder_functor(sq.cyl, sq.f, gs);
  if (!verify_lift(sq, lift)) throw invariant_error("eps1 lift failed verification");
  return lift;
}

LoopsIso loops_iso(const TripleModel& model) {
  const auto& H = *model.h;
  LoopsIso out;
  out.omega = omega_poset(H);
  for (ArrowId t = 0; t < model.g->n_arrows(); ++t)
    if (H.is_identity(model.eps0(t)) && H.is_identity(model.eps1(t)))
      out.intersection.push_back(t);
  std::sort(out.intersection.begin(), out.intersection.end());

  out.to_model.resize(H.n_arrows());
  for (ArrowId a = 0; a < H.n_arrows(); ++a)
    out.to_model[a] = model.arrow_of(a, H.identity(H.dom(a)), a);

  if (out.intersection.size() != H.n_arrows())
    throw invariant_error("loop identification: size mismatch");
  for (ArrowId a : out.to_model)
    if (!std::binary_search(out.intersection.begin(), out.intersection.end(), a))
      throw invariant_error("loop identification: image misses the kernel meet");
  for (ArrowId a = 0; a < H.n_arrows(); ++a)
    for (ArrowId b = 0; b < H.n_arrows(); ++b)
      if (H.arrow_leq(a, b) != model.g->arrow_leq(out.to_model[a], out.to_model[b]))
        throw invariant_error("loop identification is not an order isomorphism");
  return out;
}

}  // namespace ogpd
