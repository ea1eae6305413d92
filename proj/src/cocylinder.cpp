#include "ogpd/cocylinder.hpp"

#include <algorithm>

namespace ogpd {

namespace {

std::uint64_t tkey(std::size_t g_arrows, std::size_t h_arrows, ArrowId h0, ArrowId a,
                   ArrowId h1) {
  return (static_cast<std::uint64_t>(h0) * h_arrows + h1) * (g_arrows + 1) + a;
}

}  // namespace

ArrowId Cocylinder::arrow_of(ArrowId h0, ArrowId a, ArrowId h1) const {
  auto it = arrow_index.find(
      tkey(phi.source()->n_arrows(), phi.target()->n_arrows(), h0, a, h1));
  if (it == arrow_index.end())
    throw invariant_error("no cocylinder arrow <" + phi.target()->arrow_name(h0) + "|" +
                          phi.source()->arrow_name(a) + "|" + phi.target()->arrow_name(h1) + ">");
  return it->second;
}

ObjectId Cocylinder::object_of(ObjectId e, ArrowId h) const {
  auto it = object_index.find(key64(e, h));
  if (it == object_index.end()) throw invariant_error("no cocylinder object");
  return it->second;
}

Cocylinder mapping_cocylinder(const OrderedFunctor& phi) {
  const auto& G = *phi.source();
  const auto& H = *phi.target();
  Cocylinder out;
  out.phi = phi;

  GroupoidData d;
  for (ObjectId e = 0; e < G.n_objects(); ++e)
    for (ArrowId h = 0; h < H.n_arrows(); ++h)
      if (phi.obj(e) == H.dom(h)) {
        out.object_index[key64(e, h)] = static_cast<ObjectId>(d.objects.size());
        out.objects.emplace_back(e, h);
        d.objects.push_back("(" + G.object_name(e) + ";" + H.arrow_name(h) + ")");
      }
  for (ObjectId i = 0; i < d.objects.size(); ++i)
    for (ObjectId j = 0; j < d.objects.size(); ++j)
      if (G.object_poset().leq(out.objects[i].first, out.objects[j].first) &&
          H.arrow_leq(out.objects[i].second, out.objects[j].second))
        d.object_leq.emplace_back(i, j);

  for (ArrowId a = 0; a < G.n_arrows(); ++a) {
    ArrowId ha = phi(a);
    for (ArrowId h0 : H.star(H.dom(ha)))
      for (ArrowId h1 : H.star(H.cod(ha))) {
        // orientation: h0, h1 start where a phi starts/ends
        ArrowId id = static_cast<ArrowId>(d.arrows.size());
        d.arrows.push_back({"<" + H.arrow_name(h0) + "|" + G.arrow_name(a) + "|" +
                                H.arrow_name(h1) + ">",
                            out.object_index.at(key64(G.dom(a), h0)),
                            out.object_index.at(key64(G.cod(a), h1))});
        out.triple.push_back({h0, a, h1});
        out.arrow_index[tkey(G.n_arrows(), H.n_arrows(), h0, a, h1)] = id;
      }
  }

  d.identity.resize(d.objects.size());
  for (ObjectId i = 0; i < d.objects.size(); ++i) {
    auto [e, h] = out.objects[i];
    d.identity[i] = out.arrow_index.at(tkey(G.n_arrows(), H.n_arrows(), h, G.identity(e), h));
  }
  d.inverse.resize(d.arrows.size());
  for (ArrowId m = 0; m < d.arrows.size(); ++m) {
    auto [h0, a, h1] = out.triple[m];
    d.inverse[m] = out.arrow_index.at(tkey(G.n_arrows(), H.n_arrows(), h1, G.inverse(a), h0));
  }
  {
    std::vector<std::vector<ArrowId>> by_dom(d.objects.size());
    for (ArrowId m = 0; m < d.arrows.size(); ++m) by_dom[d.arrows[m].dom].push_back(m);
    for (ArrowId m = 0; m < d.arrows.size(); ++m)
      for (ArrowId m2 : by_dom[d.arrows[m].cod]) {
        auto [h0, a, h1] = out.triple[m];
        auto [k0, b, k1] = out.triple[m2];
        d.compose.push_back({m, m2, out.arrow_index.at(tkey(G.n_arrows(), H.n_arrows(), h0, G.compose_req(a, b), k1))});
      }
  }
  for (ArrowId m = 0; m < d.arrows.size(); ++m)
    for (ArrowId m2 = 0; m2 < d.arrows.size(); ++m2)
      if (H.arrow_leq(out.triple[m][0], out.triple[m2][0]) &&
          G.arrow_leq(out.triple[m][1], out.triple[m2][1]) &&
          H.arrow_leq(out.triple[m][2], out.triple[m2][2]))
        d.arrow_leq.emplace_back(m, m2);

  out.m = OrderedGroupoid::create(std::move(d));

  std::vector<ArrowId> imap(G.n_arrows()), pmap(out.m->n_arrows()), qmap(out.m->n_arrows());
  for (ArrowId a = 0; a < G.n_arrows(); ++a)
    imap[a] = out.arrow_of(H.identity(phi.obj(G.dom(a))), a, H.identity(phi.obj(G.cod(a))));
  for (ArrowId m = 0; m < out.m->n_arrows(); ++m) {
    auto [h0, a, h1] = out.triple[m];
    pmap[m] = H.compose_req(H.inverse(h0), H.compose_req(phi(a), h1));
    qmap[m] = a;
  }
  out.i_phi = make_functor(phi.source(), out.m, std::move(imap));
  out.p_phi = make_functor(out.m, phi.target(), std::move(pmap));
  out.q_phi = make_functor(out.m, phi.source(), std::move(qmap));
  if (!(compose_functors(out.i_phi, out.p_phi) == phi))
    throw invariant_error("cocylinder: phi != i_phi ; p_phi");
  return out;
}

OrderedFunctor lift_p_phi(const Cocylinder& cocyl, const HomotopySquare& sq) {
  if (!(sq.p == cocyl.p_phi)) throw domain_error("lift_p_phi: square is not against p_phi");
  const auto& A = *sq.cyl.base();
  const auto& G = *cocyl.phi.source();
  const auto& H = *cocyl.phi.target();
  std::vector<ArrowId> gs(A.n_objects());
  for (ObjectId x = 0; x < A.n_objects(); ++x) {
    auto [e, h] = cocyl.objects[sq.f.obj(x)];
    ArrowId lx = sq.F(sq.cyl.iota(x));
    if (H.dom(lx) != H.cod(h)) throw invariant_error("lift_p_phi: iota image is ill-placed");
    gs[x] = cocyl.arrow_of(h, G.identity(e), H.compose_req(h, lx));
  }
  OrderedFunctor lift = cylinder_functor(sq.cyl, sq.f, gs);
  if (!verify_lift(sq, lift)) throw invariant_error("p_phi lift failed verification");
  return lift;
}

OrderedFunctor lift_q_phi(const Cocylinder& cocyl, const TripleModel& model,
                          const HomotopySquare& sq) {
  if (!(sq.p == cocyl.q_phi)) throw domain_error("lift_q_phi: square is not against q_phi");
  if (model.h != cocyl.phi.target()) throw domain_error("lift_q_phi: model over the wrong base");
  const auto& A = *sq.cyl.base();

  // transport the square through the pullback presentation of q_phi
  std::vector<ArrowId> f2map(A.n_arrows());
  for (ArrowId a = 0; a < A.n_arrows(); ++a) {
    auto [h0, gpart, h1] = cocyl.triple[sq.f(a)];
    f2map[a] = model.arrow_of(h0, cocyl.phi(gpart), h1);
  }
  OrderedFunctor f2 = make_functor(sq.cyl.base(), model.g, std::move(f2map));
  HomotopySquare sq2{sq.cyl, model.eps0, f2, compose_functors(sq.F, cocyl.phi)};
  OrderedFunctor lift2 = lift_eps0(model, sq2);

  std::vector<ArrowId> gs(A.n_objects());
  for (ObjectId x = 0; x < A.n_objects(); ++x) {
    ArrowId t = lift2(sq.cyl.iota(x));
    gs[x] = cocyl.arrow_of(model.triple[t][0], sq.F(sq.cyl.iota(x)), model.triple[t][2]);
  }
  OrderedFunctor lift = cylinder_functor(sq.cyl, sq.f, gs);
  if (!verify_lift(sq, lift)) throw invariant_error("q_phi lift failed verification");
  return lift;
}

ArrowId DerivedGroupoid::pair_of(ArrowId a, ArrowId h) const {
  auto it = index.find(key64(a, h));
  if (it == index.end())
    throw invariant_error("no derived pair ('" + phi.source()->arrow_name(a) + "','" +
                          phi.target()->arrow_name(h) + "')");
  return it->second;
}

DerivedGroupoid derived_groupoid(const Cocylinder& cocyl) {
  const OrderedFunctor& phi = cocyl.phi;
  const auto& G = *phi.source();
  const auto& H = *phi.target();
  DerivedGroupoid out;
  out.phi = phi;

  GroupoidData d;
  d.objects.reserve(cocyl.objects.size());
  for (auto [e, h] : cocyl.objects)
    d.objects.push_back("(" + G.object_name(e) + ";" + H.arrow_name(h) + ")");
  for (ObjectId i = 0; i < cocyl.objects.size(); ++i)
    for (ObjectId j = 0; j < cocyl.objects.size(); ++j)
      if (G.object_poset().leq(cocyl.objects[i].first, cocyl.objects[j].first) &&
          H.arrow_leq(cocyl.objects[i].second, cocyl.objects[j].second))
        d.object_leq.emplace_back(i, j);

  for (ArrowId a = 0; a < G.n_arrows(); ++a)
    for (ArrowId h : H.star(H.cod(phi(a)))) {
      ArrowId id = static_cast<ArrowId>(d.arrows.size());
      d.arrows.push_back({"(" + G.arrow_name(a) + ";" + H.arrow_name(h) + ")",
                          cocyl.object_of(G.dom(a), H.compose_req(phi(a), h)),
                          cocyl.object_of(G.cod(a), h)});
      out.pairs.emplace_back(a, h);
      out.index[key64(a, h)] = id;
    }

  d.identity.resize(d.objects.size());
  for (ObjectId i = 0; i < d.objects.size(); ++i) {
    auto [e, h] = cocyl.objects[i];
    d.identity[i] = out.index.at(key64(G.identity(e), h));
  }
  d.inverse.resize(d.arrows.size());
  for (ArrowId m = 0; m < d.arrows.size(); ++m) {
    auto [a, h] = out.pairs[m];
    d.inverse[m] = out.index.at(key64(G.inverse(a), H.compose_req(phi(a), h)));
  }
  {
    std::vector<std::vector<ArrowId>> by_dom(d.objects.size());
    for (ArrowId m = 0; m < d.arrows.size(); ++m) by_dom[d.arrows[m].dom].push_back(m);
    for (ArrowId m = 0; m < d.arrows.size(); ++m)
      for (ArrowId m2 : by_dom[d.arrows[m].cod]) {
        auto [a, h] = out.pairs[m];
        auto [b, k] = out.pairs[m2];
        d.compose.push_back({m, m2, out.index.at(key64(G.compose_req(a, b), k))});
      }
  }
  for (ArrowId m = 0; m < d.arrows.size(); ++m)
    for (ArrowId m2 = 0; m2 < d.arrows.size(); ++m2)
      if (G.arrow_leq(out.pairs[m].first, out.pairs[m2].first) &&
          H.arrow_leq(out.pairs[m].second, out.pairs[m2].second))
        d.arrow_leq.emplace_back(m, m2);

  out.g = OrderedGroupoid::create(std::move(d));

  // H acts by right multiplication on the second coordinate
  std::vector<ObjectId> moment(out.g->n_arrows());
  for (ArrowId m = 0; m < out.g->n_arrows(); ++m) moment[m] = H.cod(out.pairs[m].second);
  std::unordered_map<std::uint64_t, ArrowId> act;
  for (ArrowId m = 0; m < out.g->n_arrows(); ++m) {
    auto [a, h] = out.pairs[m];
    for (ArrowId hp : H.star(H.cod(h))) act[key64(m, hp)] = out.index.at(key64(a, H.compose_req(h, hp)));
  }
  out.action = make_action(phi.target(), out.g, std::move(moment), std::move(act));

  // the pair coordinates are exactly ker p_phi
  std::vector<ArrowId> inc(out.g->n_arrows());
  for (ArrowId m = 0; m < out.g->n_arrows(); ++m) {
    auto [a, h] = out.pairs[m];
    inc[m] = cocyl.arrow_of(H.compose_req(phi(a), h), a, h);
  }
  out.to_cocylinder = make_functor(out.g, cocyl.m, std::move(inc));
  std::vector<ArrowId> image, ker;
  for (ArrowId m = 0; m < out.g->n_arrows(); ++m) image.push_back(out.to_cocylinder(m));
  for (ArrowId m = 0; m < cocyl.m->n_arrows(); ++m)
    if (H.is_identity(cocyl.p_phi(m))) ker.push_back(m);
  std::sort(image.begin(), image.end());
  std::sort(ker.begin(), ker.end());
  if (image != ker) throw invariant_error("derived groupoid does not match ker p_phi");
  return out;
}

GammaIso gamma_iso(const Cocylinder& cocyl, const DerivedGroupoid& der) {
  const auto& H = *cocyl.phi.target();
  GammaIso out;
  out.sdp = semidirect_product(der.action);

  std::vector<ArrowId> gmap(out.sdp.g->n_arrows());
  for (ArrowId m = 0; m < out.sdp.g->n_arrows(); ++m) {
    auto [k, dm] = out.sdp.pairs[m];
    auto [g, h] = der.pairs[dm];
    ArrowId h0 = H.compose_req(cocyl.phi(g), H.compose_req(h, H.inverse(k)));
    gmap[m] = cocyl.arrow_of(h0, g, h);
  }
  out.gamma = make_functor(out.sdp.g, cocyl.m, std::move(gmap));

  std::vector<ArrowId> ginv(cocyl.m->n_arrows());
  for (ArrowId m = 0; m < cocyl.m->n_arrows(); ++m) {
    auto [h0, a, h1] = cocyl.triple[m];
    ginv[m] = out.sdp.pair_of(cocyl.p_phi(m), der.pair_of(a, h1));
  }
  out.gamma_inv = make_functor(cocyl.m, out.sdp.g, std::move(ginv));

  for (ArrowId m = 0; m < out.sdp.g->n_arrows(); ++m)
    if (out.gamma_inv(out.gamma(m)) != m) throw invariant_error("gamma is not left-invertible");
  for (ArrowId m = 0; m < cocyl.m->n_arrows(); ++m)
    if (out.gamma(out.gamma_inv(m)) != m) throw invariant_error("gamma is not right-invertible");
  if (!is_order_isomorphism(out.gamma) || !is_order_isomorphism(out.gamma_inv))
    throw invariant_error("gamma is not an order isomorphism");
  if (!(compose_functors(out.gamma, cocyl.p_phi) == out.sdp.projection))
    throw invariant_error("gamma does not carry the projection to p_phi");
  return out;
}

FibrationPipeline fibration_theorem_pipeline(const OrderedFunctor& phi) {
  FibrationPipeline out;
  out.cocyl = mapping_cocylinder(phi);
  const auto& G = *phi.source();

  out.image.resize(G.n_arrows());
  for (ArrowId a = 0; a < G.n_arrows(); ++a) out.image[a] = out.cocyl.i_phi(a);
  std::sort(out.image.begin(), out.image.end());
  out.image.erase(std::unique(out.image.begin(), out.image.end()), out.image.end());
  out.enlargement = is_enlargement(*out.cocyl.m, out.image);
  if (!out.enlargement.ok())
    throw invariant_error("G i_phi is not an enlargement in M^phi: " +
                          out.enlargement.report.summary());

  if (!star_class(out.cocyl.p_phi).surjective)
    throw invariant_error("p_phi is not star-surjective");
  out.fact = factorize(out.cocyl.p_phi);
  if (!star_class(out.fact.psi).bijective())
    throw invariant_error("induced map of the p_phi quotient is not a covering");

  out.der = derived_groupoid(out.cocyl);
  out.q_restricted = compose_functors(out.der.to_cocylinder, out.cocyl.q_phi);
  if (!star_class(out.q_restricted).bijective())
    throw invariant_error("q_phi restricted to Der(phi) is not a covering");
  // its kernel is exactly Der(phi)_0
  for (ArrowId m = 0; m < out.der.g->n_arrows(); ++m)
    if (G.is_identity(out.q_restricted(m)) != out.der.g->is_identity(m))
      throw invariant_error("ker of q_phi on Der(phi) is not the object set");
  return out;
}

OrderedFunctor pipeline_lift_varpi(const FibrationPipeline& pipe, const HomotopySquare& sq) {
  if (!(sq.p == pipe.fact.varpi))
    throw domain_error("pipeline_lift_varpi: square is not against the quotient map");
  auto lifter = [&](const HomotopySquare& total) { return lift_p_phi(pipe.cocyl, total); };
  return lift_through_immersion(sq, pipe.fact.psi, lifter);
}

}  // namespace ogpd
