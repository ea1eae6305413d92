#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ogpd/builders.hpp"
#include "ogpd/fixtures.hpp"
#include "ogpd/quotient.hpp"
#include "ogpd/random_gen.hpp"

using namespace ogpd;

TEST_CASE("interval groupoid validates with trivial order") {
  GroupoidPtr i = interval_groupoid();
  CHECK(i->n_objects() == 2);
  CHECK(i->n_arrows() == 4);
  CHECK(validate_ogpd(i->data()).passed);
  CHECK_FALSE(i->arrow_leq(kIntervalIota, kIntervalIotaInv));
  CHECK(i->compose(kIntervalIota, kIntervalIotaInv) == kIntervalId0);
}

TEST_CASE("presheaf over a 3-chain validates") {
  // groups C4 -> C4 -> C2 along a chain with quotient-style links
  PresheafSpec spec;
  spec.base = Poset::create({"a", "b", "c"},
                            reflexive_transitive_closure(3, {{1, 0}, {2, 1}}));
  spec.groups = {cyclic_group(4), cyclic_group(4), cyclic_group(2)};
  spec.linking.assign(3, std::vector<std::vector<std::uint32_t>>(3));
  spec.linking[0][0] = {0, 1, 2, 3};
  spec.linking[1][1] = {0, 1, 2, 3};
  spec.linking[2][2] = {0, 1};
  spec.linking[0][1] = {0, 1, 2, 3};        // identity link
  spec.linking[1][2] = {0, 1, 0, 1};        // mod 2
  spec.linking[0][2] = {0, 1, 0, 1};
  CHECK(spec.check().passed);
  GroupoidPtr g = presheaf_groupoid(spec);
  CHECK(g->n_arrows() == 10);
  CHECK(validate_ogpd(g->data()).passed);

  SUBCASE("corrupting one linking value breaks OG2 but not the rest") {
    PresheafSpec bad = spec;
    bad.linking[1][2] = {0, 1, 1, 1};  // no longer a homomorphism
    GroupoidData data = presheaf_groupoid_data(bad);
    ValidationReport rep = validate_ogpd(data);
    CHECK_FALSE(rep.passed);
    CHECK(rep.has(Axiom::og2));
  }
}

TEST_CASE("restriction and corestriction") {
  KleinFixture fx = klein_fixture();
  const auto& G = *fx.g;
  ArrowId a_e = presheaf_arrow(fx.g_spec, 0, 1);
  ArrowId a_z = presheaf_arrow(fx.g_spec, 2, 1);
  ObjectId e = *G.object_by_name("e");
  ObjectId z = *G.object_by_name("z");

  CHECK(restriction(G, e, a_e) == a_e);  // restriction to the full domain
  CHECK(restriction(G, z, a_e) == a_z);  // the presheaf link
  CHECK(corestriction(G, a_e, G.cod(a_e)) == a_e);
  CHECK(corestriction(G, a_e, z) == a_z);
  CHECK_THROWS_AS(restriction(G, e, a_z), domain_error);

  SUBCASE("restriction agrees with a brute-force scan on random instances") {
    for (std::uint64_t seed : {3u, 5u, 8u, 13u}) {
      GroupoidPtr g = random_instance(seed).g;
      for (ArrowId arrow = 0; arrow < g->n_arrows(); ++arrow)
        for (ObjectId f = 0; f < g->n_objects(); ++f) {
          if (!g->object_poset().leq(f, g->dom(arrow))) continue;
          std::vector<ArrowId> hits;
          for (ArrowId h = 0; h < g->n_arrows(); ++h)
            if (g->arrow_leq(h, arrow) && g->dom(h) == f) hits.push_back(h);
          REQUIRE(hits.size() == 1);
          CHECK(restriction(*g, f, arrow) == hits[0]);
        }
    }
  }
}

TEST_CASE("meet and pseudoproduct") {
  KleinFixture fx = klein_fixture();
  const Poset& e_poset = fx.e->object_poset();
  // E = {e >= z <= f}
  CHECK(e_poset.meet(0, 0) == 0);
  CHECK(e_poset.meet(0, 1) == 2);

  SUBCASE("no glb means no pseudoproduct") {
    // diamond with two incomparable lower bounds below two tops
    Poset p = Poset::create({"t1", "t2", "b1", "b2"},
                            reflexive_transitive_closure(
                                4, {{2, 0}, {2, 1}, {3, 0}, {3, 1}}));
    CHECK_FALSE(p.meet(0, 1).has_value());
    GroupoidPtr t = trivial_groupoid(p);
    CHECK_FALSE(pseudoproduct(*t, t->identity(0), t->identity(1)).has_value());
  }

  SUBCASE("ordinary composition is a pseudoproduct") {
    const auto& G = *fx.g;
    ArrowId a_z = presheaf_arrow(fx.g_spec, 2, 1);
    ArrowId b_z = presheaf_arrow(fx.g_spec, 2, 2);
    CHECK(pseudoproduct(G, a_z, b_z) == G.compose(a_z, b_z));
  }

  SUBCASE("pseudoproduct crosses fibers through the meet") {
    const auto& G = *fx.g;
    ArrowId a_e = presheaf_arrow(fx.g_spec, 0, 1);
    ArrowId b_f = presheaf_arrow(fx.g_spec, 1, 1);
    ArrowId ab_z = presheaf_arrow(fx.g_spec, 2, 3);
    CHECK(pseudoproduct(G, a_e, b_f) == ab_z);
  }
}

TEST_CASE("pseudoproduct is associative on inductive instances") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    GroupoidPtr g = random_inductive(seed);
    REQUIRE(is_inductive(*g));
    for (ArrowId a = 0; a < g->n_arrows(); ++a)
      for (ArrowId b = 0; b < g->n_arrows(); ++b)
        for (ArrowId c = 0; c < g->n_arrows(); ++c) {
          auto left = pseudoproduct(*g, *pseudoproduct(*g, a, b), c);
          auto right = pseudoproduct(*g, a, *pseudoproduct(*g, b, c));
          CHECK(left == right);
        }
  }
}

TEST_CASE("star and local group") {
  KleinFixture fx = klein_fixture();
  GroupoidPtr ip = interval_groupoid();
  const auto& I = *ip;
  auto st = I.star(0);
  CHECK(std::vector<ArrowId>(st.begin(), st.end()) ==
        std::vector<ArrowId>{kIntervalId0, kIntervalIota});

  const auto& G = *fx.g;
  ObjectId z = *G.object_by_name("z");
  CHECK(G.star(z).size() == 4);  // the whole Klein fiber
  CHECK(local_group(G, z).size() == 4);
  CHECK_THROWS_AS(G.star(99), domain_error);
}

TEST_CASE("products") {
  KleinFixture fx = klein_fixture();
  GroupoidPtr one = trivial_groupoid(Poset::create({"pt"}, {{0, 0}}));

  SUBCASE("product with a point is the same groupoid") {
    Product p = product(fx.g, one);
    CHECK(p.g->n_arrows() == fx.g->n_arrows());
    CHECK(validate_ogpd(p.g->data()).passed);
  }
  SUBCASE("E x I has 6 objects and 12 arrows") {
    Product p = product(fx.e, interval_groupoid());
    CHECK(p.g->n_objects() == 6);
    CHECK(p.g->n_arrows() == 12);
  }
  SUBCASE("I x I has 4 objects and 16 arrows") {
    Product p = product(interval_groupoid(), interval_groupoid());
    CHECK(p.g->n_objects() == 4);
    CHECK(p.g->n_arrows() == 16);
  }
  SUBCASE("projections are ordered functors") {
    Product p = product(fx.e, interval_groupoid());
    std::vector<ArrowId> left(p.g->n_arrows()), right(p.g->n_arrows());
    for (ArrowId m = 0; m < p.g->n_arrows(); ++m) {
      left[m] = p.unpair(m).first;
      right[m] = p.unpair(m).second;
    }
    CHECK_NOTHROW(make_functor(p.g, p.left, left));
    CHECK_NOTHROW(make_functor(p.g, p.right, right));
  }
}

TEST_CASE("product of validated groupoids validates") {
  for (std::uint64_t seed : {2u, 7u}) {
    GroupoidPtr a = random_instance(seed).g;
    GroupoidPtr b = random_instance(seed + 100).g;
    if (a->n_arrows() * b->n_arrows() > 600) continue;
    Product p = product(a, b);
    CHECK(validate_ogpd(p.g->data()).passed);
  }
}

TEST_CASE("pi0 and the poset quotient") {
  SUBCASE("connected groupoid has one component") {
    Pi0 pi = pi0_quotient(*interval_groupoid());
    CHECK(pi.n_components == 1);
    CHECK(pi.q.size() == 1);
  }
  SUBCASE("presheaf over an antichain has one component per point") {
    PresheafSpec spec;
    spec.base = Poset::create({"u", "v", "w"}, {{0, 0}, {1, 1}, {2, 2}});
    spec.groups.assign(3, cyclic_group(2));
    spec.linking.assign(3, std::vector<std::vector<std::uint32_t>>(3));
    for (int x = 0; x < 3; ++x) spec.linking[x][x] = {0, 1};
    Pi0 pi = pi0_quotient(*presheaf_groupoid(spec));
    CHECK(pi.n_components == 3);
    CHECK(pi.q.size() == 3);
    for (auto [lo, hi] : pi.q.pairs()) CHECK(lo == hi);
  }
  SUBCASE("Q(G) is a poset on every random instance") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      GroupoidPtr g = random_instance(seed).g;
      Pi0 pi = pi0_quotient(*g);
      CHECK(check_poset(pi.q.size(), pi.q.pairs()).ok);
    }
  }
}

TEST_CASE("validation catches broken structures") {
  GroupoidData d = interval_groupoid()->data();

  SUBCASE("dangling reference is a structural error") {
    GroupoidData bad = d;
    bad.arrows[2].cod = 9;
    ValidationReport rep = validate_ogpd(bad);
    CHECK_FALSE(rep.passed);
    CHECK(rep.has(Axiom::structure));
  }
  SUBCASE("missing composite is a category error") {
    GroupoidData bad = d;
    bad.compose.pop_back();
    ValidationReport rep = validate_ogpd(bad);
    CHECK_FALSE(rep.passed);
    CHECK(rep.has(Axiom::category));
  }
  SUBCASE("broken inverse law") {
    GroupoidData bad = d;
    // iota . iota^-1 must be id:0, point it at id:1 in a way that also
    // keeps the tables total: swap the inverse table instead
    bad.inverse[kIntervalIota] = kIntervalIota;
    ValidationReport rep = validate_ogpd(bad);
    CHECK_FALSE(rep.passed);
    CHECK(rep.has(Axiom::structure));
  }
  SUBCASE("object order must agree with identity order") {
    GroupoidData bad = d;
    bad.object_leq.emplace_back(0, 1);
    ValidationReport rep = validate_ogpd(bad);
    CHECK_FALSE(rep.passed);
    CHECK(rep.has(Axiom::order_agreement));
  }
  SUBCASE("OG1 violation") {
    GroupoidData bad = d;
    bad.object_leq.emplace_back(0, 1);
    bad.arrow_leq.emplace_back(kIntervalId0, kIntervalId1);
    bad.arrow_leq.emplace_back(kIntervalId0, kIntervalIota);
    ValidationReport rep = validate_ogpd(bad);
    CHECK_FALSE(rep.passed);
    CHECK(rep.has(Axiom::og1));
  }
  SUBCASE("OG3 existence violation") {
    // drop the restriction of iota to z in the seven-object example
    ExampleViFixture fx = example_vi_fixture();
    GroupoidData bad = fx.s->data();
    ArrowId idz = *fx.s->arrow_by_name("id:z");
    OrderPairs kept;
    for (auto [lo, hi] : bad.arrow_leq)
      if (!(lo == idz && hi == fx.iota)) kept.emplace_back(lo, hi);
    bad.arrow_leq = kept;
    ValidationReport rep = validate_ogpd(bad);
    CHECK_FALSE(rep.passed);
    CHECK(rep.has(Axiom::og3_existence));
  }
  SUBCASE("OG3 uniqueness violation") {
    // a second arrow with domain z below e:a in the Klein groupoid
    KleinFixture fx = klein_fixture();
    GroupoidData bad = fx.g->data();
    bad.arrow_leq.emplace_back(presheaf_arrow(fx.g_spec, 2, 2),
                               presheaf_arrow(fx.g_spec, 0, 1));
    ValidationReport rep = validate_ogpd(bad);
    CHECK_FALSE(rep.passed);
    CHECK(rep.has(Axiom::og3_uniqueness));
  }
}

TEST_CASE("random instances always validate") {
  for (std::uint64_t seed = 0; seed <= 30; ++seed) {
    GroupoidPtr g = random_instance(seed).g;
    CHECK(validate_ogpd(g->data()).passed);
  }
}
