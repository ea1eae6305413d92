#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ogpd/cocylinder.hpp"
#include "ogpd/fixtures.hpp"
#include "ogpd/random_gen.hpp"
#include "square_gen.hpp"

using namespace ogpd;

TEST_CASE("the triple model of a trivial groupoid has only identity triples") {
  GroupoidPtr t = trivial_groupoid(Poset::create({"pt"}, {{0, 0}}));
  TripleModel model = interval_mapping_groupoid(t);
  CHECK(model.g->n_objects() == 1);
  CHECK(model.g->n_arrows() == 1);
}

TEST_CASE("triple model on the interval") {
  TripleModel model = interval_mapping_groupoid(interval_groupoid());
  CHECK(model.g->n_objects() == 4);
  CHECK(model.g->n_arrows() == 16);
  CHECK(validate_functor(model.eps0).passed);
  CHECK(validate_functor(model.eps1).passed);
  CHECK(star_class(model.eps0).surjective);
  CHECK(star_class(model.eps1).surjective);
}

TEST_CASE("mapping cocylinder structure") {
  KleinFixture fx = klein_fixture();

  SUBCASE("identity on a trivial groupoid recovers the groupoid") {
    GroupoidPtr t = trivial_groupoid(Poset::create({"pt"}, {{0, 0}}));
    Cocylinder c = mapping_cocylinder(identity_functor(t));
    CHECK(c.m->n_arrows() == 1);
    CHECK(is_order_isomorphism(c.i_phi));
  }
  SUBCASE("objects count the pullback pairs") {
    Cocylinder c = mapping_cocylinder(fx.p);
    std::size_t expect = 0;
    for (ObjectId e = 0; e < fx.g->n_objects(); ++e)
      for (ArrowId h = 0; h < fx.h->n_arrows(); ++h)
        if (fx.p.obj(e) == fx.h->dom(h)) ++expect;
    CHECK(c.m->n_objects() == expect);
    CHECK(validate_ogpd(c.m->data()).passed);
    CHECK(compose_functors(c.i_phi, c.p_phi) == fx.p);
  }
  SUBCASE("connecting arrows exist at every object") {
    Cocylinder c = mapping_cocylinder(fx.p);
    const auto& H = *fx.h;
    const auto& G = *fx.g;
    for (ObjectId i = 0; i < c.m->n_objects(); ++i) {
      auto [e, h] = c.objects[i];
      ArrowId conn = c.arrow_of(h, G.identity(e), H.identity(H.cod(h)));
      CHECK(c.m->dom(conn) == i);
      CHECK(c.objects[c.m->cod(conn)].second == H.identity(H.cod(h)));
    }
  }
  SUBCASE("M^phi equals the pullback of eps0 along phi") {
    Cocylinder c = mapping_cocylinder(fx.p);
    TripleModel model = interval_mapping_groupoid(fx.h);
    PullbackGroupoid pb = pullback(fx.p, model.eps0);
    REQUIRE(pb.g->n_arrows() == c.m->n_arrows());
    // m |-> (a, [h0, a phi, h1]) matches arrow for arrow
    std::vector<ArrowId> iso(c.m->n_arrows());
    std::map<std::pair<ArrowId, ArrowId>, ArrowId> pb_index;
    for (ArrowId m = 0; m < pb.g->n_arrows(); ++m) pb_index[pb.arrow_pairs[m]] = m;
    for (ArrowId m = 0; m < c.m->n_arrows(); ++m) {
      auto [h0, a, h1] = c.triple[m];
      iso[m] = pb_index.at({a, model.arrow_of(h0, fx.p(a), h1)});
    }
    OrderedFunctor f = make_functor(c.m, pb.g, std::move(iso));
    CHECK(is_order_isomorphism(f));
  }
}

TEST_CASE("certified lift against p_phi") {
  KleinFixture fx = klein_fixture();
  Cocylinder c = mapping_cocylinder(fx.p);
  SearchBudget budget{100'000'000};

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    HomotopySquare sq = test_square(c.p_phi, seed);
    OrderedFunctor lift = lift_p_phi(c, sq);
    CHECK(verify_lift(sq, lift));
    CHECK(find_lift(sq, budget).has_value());
  }

  SUBCASE("the Klein obstruction square lifts against p_p") {
    // transplant the obstructed iota images onto the cocylinder fibration
    std::vector<ArrowId> fmap(fx.e->n_arrows());
    for (ObjectId x = 0; x < fx.e->n_objects(); ++x)
      fmap[x] = c.i_phi(fx.i(fx.e->identity(x)));
    OrderedFunctor f = make_functor(fx.e, c.m, std::move(fmap));
    HomotopySquare sq = make_square(fx.e, c.p_phi, f, {fx.hx, fx.hx, fx.hy});
    OrderedFunctor lift = lift_p_phi(c, sq);
    CHECK(verify_lift(sq, lift));
  }
}

TEST_CASE("certified lift against q_phi") {
  KleinFixture fx = klein_fixture();
  Cocylinder c = mapping_cocylinder(fx.p);
  TripleModel model = interval_mapping_groupoid(fx.h);
  SearchBudget budget{100'000'000};
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    HomotopySquare sq = test_square(c.q_phi, seed);
    OrderedFunctor lift = lift_q_phi(c, model, sq);
    CHECK(verify_lift(sq, lift));
    CHECK(find_lift(sq, budget).has_value());
  }
}

TEST_CASE("derived groupoid") {
  KleinFixture fx = klein_fixture();

  SUBCASE("of the object inclusion it is Omega G") {
    GroupoidPtr g0 = objects_groupoid(*fx.g);
    std::vector<ArrowId> inc(g0->n_arrows());
    for (ObjectId e = 0; e < fx.g->n_objects(); ++e) inc[e] = fx.g->identity(e);
    OrderedFunctor phi = make_functor(g0, fx.g, std::move(inc));
    Cocylinder c = mapping_cocylinder(phi);
    DerivedGroupoid der = derived_groupoid(c);
    CHECK(der.g->n_arrows() == fx.g->n_arrows());  // pairs (dom h, h)
    // all arrows are identities: a trivial groupoid on Omega G
    for (ArrowId m = 0; m < der.g->n_arrows(); ++m) CHECK(der.g->is_identity(m));
  }
  SUBCASE("pair coordinates count ker p_phi two ways") {
    Cocylinder c = mapping_cocylinder(fx.p);
    DerivedGroupoid der = derived_groupoid(c);
    std::size_t kernel_count = 0;
    for (ArrowId m = 0; m < c.m->n_arrows(); ++m)
      if (fx.h->is_identity(c.p_phi(m))) ++kernel_count;
    CHECK(der.g->n_arrows() == kernel_count);
    CHECK(validate_action(der.action).passed);
  }
}

TEST_CASE("gamma is an isomorphism carrying the projection to p_phi") {
  KleinFixture fx = klein_fixture();

  SUBCASE("trivial phi") {
    GroupoidPtr t = trivial_groupoid(Poset::create({"pt"}, {{0, 0}}));
    Cocylinder c = mapping_cocylinder(identity_functor(t));
    GammaIso gi = gamma_iso(c, derived_groupoid(c));
    CHECK(is_order_isomorphism(gi.gamma));
  }
  SUBCASE("Klein p, exhaustively") {
    Cocylinder c = mapping_cocylinder(fx.p);
    DerivedGroupoid der = derived_groupoid(c);
    GammaIso gi = gamma_iso(c, der);
    for (ArrowId m = 0; m < gi.sdp.g->n_arrows(); ++m)
      CHECK(gi.gamma_inv(gi.gamma(m)) == m);
    for (ArrowId m = 0; m < c.m->n_arrows(); ++m)
      CHECK(gi.gamma(gi.gamma_inv(m)) == m);
    CHECK(compose_functors(gi.gamma, c.p_phi) == gi.sdp.projection);
  }
  SUBCASE("the p_phi lift transports to the projection lift") {
    Cocylinder c = mapping_cocylinder(fx.p);
    DerivedGroupoid der = derived_groupoid(c);
    GammaIso gi = gamma_iso(c, der);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      HomotopySquare sq = test_square(gi.sdp.projection, seed);
      OrderedFunctor via_sdp = lift_sdp_projection(gi.sdp, sq);
      // push the square through gamma and lift against p_phi
      HomotopySquare sq2{sq.cyl, c.p_phi, compose_functors(sq.f, gi.gamma),
                         compose_functors(sq.F, identity_functor(fx.h))};
      OrderedFunctor via_p = lift_p_phi(c, sq2);
      for (ArrowId m = 0; m < sq.cyl.g()->n_arrows(); ++m)
        CHECK(gi.gamma(via_sdp(m)) == via_p(m));
    }
  }
}

TEST_CASE("fibration theorem pipeline") {
  KleinFixture fx = klein_fixture();

  SUBCASE("identity phi is a degenerate pipeline") {
    GroupoidPtr t = trivial_groupoid(Poset::create({"a", "b"}, {{0, 0}, {1, 1}}));
    FibrationPipeline pipe = fibration_theorem_pipeline(identity_functor(t));
    CHECK(pipe.enlargement.ok());
    CHECK(star_class(pipe.fact.psi).bijective());
  }
  SUBCASE("Klein p passes every stage") {
    FibrationPipeline pipe = fibration_theorem_pipeline(fx.p);
    CHECK(pipe.enlargement.ok());
    CHECK(star_class(pipe.cocyl.p_phi).surjective);
    CHECK(star_class(pipe.fact.psi).bijective());
    CHECK(star_class(pipe.q_restricted).bijective());
    OrderedFunctor composite = compose_functors(
        pipe.cocyl.i_phi, compose_functors(pipe.fact.varpi, pipe.fact.psi));
    CHECK(composite == fx.p);
  }
  SUBCASE("random suite") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      OrderedFunctor phi = random_functor(seed, FunctorKind::any);
      if (phi.source()->n_arrows() > 14 || phi.target()->n_arrows() > 14) continue;
      FibrationPipeline pipe = fibration_theorem_pipeline(phi);
      CHECK(pipe.enlargement.ok());
      CHECK(star_class(pipe.fact.psi).bijective());
      OrderedFunctor composite = compose_functors(
          pipe.cocyl.i_phi, compose_functors(pipe.fact.varpi, pipe.fact.psi));
      CHECK(composite == phi);
    }
  }
}
