#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ogpd/cocylinder.hpp"
#include "ogpd/enumerate.hpp"
#include "ogpd/fixtures.hpp"
#include "ogpd/homotopy.hpp"
#include "ogpd/random_gen.hpp"
#include "square_gen.hpp"

using namespace ogpd;

TEST_CASE("the Klein square separates fibrations from strong fibrations") {
  KleinFixture fx = klein_fixture();
  SearchBudget budget;
  CHECK(star_class(fx.p).surjective);
  CHECK_FALSE(find_lift(fx.square, budget).has_value());

  SUBCASE("choosing identity iota images instead admits a lift") {
    ArrowId h1 = fx.h->identity(*fx.h->object_by_name("1"));
    ArrowId h0 = fx.h->identity(*fx.h->object_by_name("0"));
    HomotopySquare sq = make_square(fx.e, fx.p, fx.i, {h1, h1, h0});
    auto lift = find_lift(sq, budget);
    REQUIRE(lift.has_value());
    CHECK(verify_lift(sq, *lift));
  }
}

TEST_CASE("lifts against isomorphisms are unique") {
  KleinFixture fx = klein_fixture();
  SearchBudget budget;
  HomotopySquare sq = test_square(identity_functor(fx.g), 1);
  auto lifts = find_all_lifts(sq, budget);
  CHECK(lifts.size() == 1);
}

TEST_CASE("path lifting matches star-surjectivity") {
  KleinFixture fx = klein_fixture();

  SUBCASE("identities always lift") {
    ObjectId e = *fx.g->object_by_name("e");
    auto lift = path_lift(fx.p, e, fx.h->identity(fx.p.obj(e)));
    REQUIRE(lift.has_value());
    CHECK(fx.g->is_identity(*lift));
  }
  SUBCASE("the Klein p lifts x at e to a") {
    ObjectId e = *fx.g->object_by_name("e");
    auto lift = path_lift(fx.p, e, fx.hx);
    REQUIRE(lift.has_value());
    CHECK(*lift == presheaf_arrow(fx.g_spec, 0, 1));
  }
  SUBCASE("precondition violation throws") {
    ObjectId e = *fx.g->object_by_name("e");
    CHECK_THROWS_AS(path_lift(fx.p, e, fx.hy), domain_error);
  }
  SUBCASE("over many random functors: total path lifting iff star-surjective") {
    int positives = 0, negatives = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      OrderedFunctor f = random_functor(seed, FunctorKind::any);
      bool total = true;
      for (ObjectId e = 0; e < f.source()->n_objects() && total; ++e)
        for (ArrowId h : f.target()->star(f.obj(e)))
          if (!path_lift(f, e, h)) {
            total = false;
            break;
          }
      bool surj = star_class(f).surjective;
      CHECK(total == surj);
      (surj ? positives : negatives)++;
    }
    CHECK(positives >= 5);
    CHECK(negatives >= 5);
  }
}

TEST_CASE("certified covering lifts") {
  SearchBudget budget{50'000'000};
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    OrderedFunctor cov = random_functor(seed, FunctorKind::covering);
    HomotopySquare sq = test_square(cov, seed);
    OrderedFunctor lift = lift_covering(sq);
    CHECK(verify_lift(sq, lift));
    auto found = find_lift(sq, budget);
    REQUIRE(found.has_value());
    CHECK(found->map() == lift.map());  // the covering lift is the only one
  }

  SUBCASE("restriction monotonicity of the canonical lift") {
    // y <= x in the base forces g_y = (yf | g_x)
    OrderedFunctor cov = random_functor(2, FunctorKind::covering);
    HomotopySquare sq = test_square(cov, 11);
    OrderedFunctor lift = lift_covering(sq);
    const auto& A = *sq.cyl.base();
    const auto& G = *cov.source();
    for (ObjectId y = 0; y < A.n_objects(); ++y)
      for (ObjectId x = 0; x < A.n_objects(); ++x) {
        if (!A.object_poset().leq(y, x)) continue;
        ArrowId gy = lift(sq.cyl.iota(y)), gx = lift(sq.cyl.iota(x));
        CHECK(gy == restriction(G, sq.f.obj(y), gx));
      }
  }
  SUBCASE("identity covering transposes F") {
    KleinFixture fx = klein_fixture();
    HomotopySquare sq = test_square(identity_functor(fx.h), 3);
    OrderedFunctor lift = lift_covering(sq);
    for (ArrowId m = 0; m < sq.cyl.g()->n_arrows(); ++m) CHECK(lift(m) == sq.F(m));
  }
  SUBCASE("non-coverings are rejected") {
    KleinFixture fx = klein_fixture();
    CHECK_THROWS_AS(lift_covering(fx.square), domain_error);
  }
}

TEST_CASE("certified eps lifts") {
  SearchBudget budget{50'000'000};
  KleinFixture fx = klein_fixture();
  for (GroupoidPtr h : {interval_groupoid(), fx.h}) {
    TripleModel model = interval_mapping_groupoid(h);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      HomotopySquare sq0 = test_square(model.eps0, seed);
      OrderedFunctor l0 = lift_eps0(model, sq0);
      CHECK(verify_lift(sq0, l0));
      CHECK(find_lift(sq0, budget).has_value());

      HomotopySquare sq1 = test_square(model.eps1, seed + 50);
      OrderedFunctor l1 = lift_eps1(model, sq1);
      CHECK(verify_lift(sq1, l1));
      CHECK(find_lift(sq1, budget).has_value());
    }
  }
}

TEST_CASE("lift through an immersion") {
  SearchBudget budget{50'000'000};
  // factor p_phi as varpi ; psi and lift against varpi
  for (std::uint64_t seed : {1u, 4u}) {
    OrderedFunctor phi = random_functor(seed, FunctorKind::any);
    if (phi.source()->n_arrows() > 12 || phi.target()->n_arrows() > 12) continue;
    FibrationPipeline pipe = fibration_theorem_pipeline(phi);
    HomotopySquare sq = test_square(pipe.fact.varpi, seed);
    OrderedFunctor lift = pipeline_lift_varpi(pipe, sq);
    CHECK(verify_lift(sq, lift));
    auto found = find_lift(sq, budget);
    CHECK(found.has_value());
  }

  SUBCASE("identity immersion reduces to the certified lift") {
    OrderedFunctor cov = random_functor(5, FunctorKind::covering);
    HomotopySquare sq = test_square(cov, 9);
    auto lifter = [&](const HomotopySquare& total) { return lift_covering(total); };
    OrderedFunctor lift = lift_through_immersion(sq, identity_functor(cov.target()), lifter);
    CHECK(verify_lift(sq, lift));
  }
}

TEST_CASE("every certified lift agrees with an enumerated lift") {
  SearchBudget budget{50'000'000};
  for (std::uint64_t seed : {2u, 6u}) {
    OrderedFunctor cov = random_functor(seed, FunctorKind::covering);
    HomotopySquare sq = test_square(cov, seed + 20);
    OrderedFunctor lift = lift_covering(sq);
    auto all = find_all_lifts(sq, budget);
    bool member = false;
    for (const auto& l : all) member = member || l.map() == lift.map();
    CHECK(member);
  }
}

TEST_CASE("loop space identification") {
  SUBCASE("trivial groupoid has only identity loops") {
    GroupoidPtr t = trivial_groupoid(Poset::create({"pt"}, {{0, 0}}));
    TripleModel model = interval_mapping_groupoid(t);
    LoopsIso iso = loops_iso(model);
    CHECK(iso.intersection.size() == 1);
  }
  SUBCASE("Omega I has four elements") {
    TripleModel model = interval_mapping_groupoid(interval_groupoid());
    LoopsIso iso = loops_iso(model);
    CHECK(iso.omega.size() == 4);
    CHECK(iso.intersection.size() == 4);
  }
  SUBCASE("the coinitial-pair composition law holds in ker eps0") {
    KleinFixture fx = klein_fixture();
    TripleModel model = interval_mapping_groupoid(fx.h);
    const auto& H = *fx.h;
    for (ArrowId h0 = 0; h0 < H.n_arrows(); ++h0)
      for (ArrowId h1 = 0; h1 < H.n_arrows(); ++h1) {
        if (H.dom(h0) != H.dom(h1)) continue;
        for (ArrowId h2 = 0; h2 < H.n_arrows(); ++h2) {
          if (H.dom(h1) != H.dom(h2)) continue;
          ArrowId s = model.arrow_of(h0, H.identity(H.dom(h0)), h1);
          ArrowId t = model.arrow_of(h1, H.identity(H.dom(h1)), h2);
          ArrowId st = model.g->compose_req(s, t);
          CHECK(st == model.arrow_of(h0, H.identity(H.dom(h0)), h2));
        }
      }
  }
  SUBCASE("random instances") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      GroupoidPtr g = random_instance(seed).g;
      if (g->n_arrows() > 24) continue;
      TripleModel model = interval_mapping_groupoid(g);
      LoopsIso iso = loops_iso(model);
      CHECK(iso.omega.size() == g->n_arrows());
    }
  }
}
