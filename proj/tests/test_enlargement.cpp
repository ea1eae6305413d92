#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ogpd/enlargement.hpp"
#include "ogpd/fixtures.hpp"
#include "ogpd/random_gen.hpp"
#include "ogpd/triple_model.hpp"

using namespace ogpd;

namespace {

// the object inclusion G_0 -> G
OrderedFunctor object_inclusion(GroupoidPtr g) {
  GroupoidPtr g0 = objects_groupoid(*g);
  std::vector<ArrowId> inc(g0->n_arrows());
  for (ObjectId e = 0; e < g->n_objects(); ++e) inc[e] = g->identity(e);
  return make_functor(g0, g, std::move(inc));
}

}  // namespace

TEST_CASE("enlargement witness") {
  KleinFixture fx = klein_fixture();

  SUBCASE("a groupoid is an enlargement of itself") {
    std::vector<ArrowId> all(fx.g->n_arrows());
    for (ArrowId a = 0; a < all.size(); ++a) all[a] = a;
    EnlargementWitness w = is_enlargement(*fx.g, all);
    CHECK(w.ok());
    for (ObjectId e = 0; e < fx.g->n_objects(); ++e)
      CHECK(fx.g->is_identity(w.connecting[e]));
  }
  SUBCASE("a non-full subgroupoid fails") {
    // identities only, inside a groupoid with non-identity arrows
    std::vector<ArrowId> ids;
    for (ObjectId e = 0; e < fx.g->n_objects(); ++e) ids.push_back(fx.g->identity(e));
    EnlargementWitness w = is_enlargement(*fx.g, ids);
    CHECK_FALSE(w.ok());
    CHECK(w.report.has(Axiom::enl_full));
  }
  SUBCASE("an isolated object fails connectivity") {
    ExampleViFixture vi = example_vi_fixture();
    // the component of iota misses x, y, m, n, z
    std::vector<ArrowId> sub = {*vi.s->arrow_by_name("id:k"), *vi.s->arrow_by_name("id:l"),
                                vi.iota, vi.s->inverse(vi.iota)};
    EnlargementWitness w = is_enlargement(*vi.s, sub);
    CHECK_FALSE(w.ok());
    CHECK((w.report.has(Axiom::enl_connected) || w.report.has(Axiom::enl_ideal)));
  }
}

TEST_CASE("tensor poset") {
  KleinFixture fx = klein_fixture();

  SUBCASE("over the object inclusion of H0 the tensor is Omega H") {
    OrderedFunctor phi = object_inclusion(fx.h);
    TensorPoset t = tensor_poset(phi);
    Poset omega = omega_poset(*fx.h);
    REQUIRE(t.rep.size() == omega.size());
    // classes are singletons (e, h) with e = dom h, ordered like Omega H
    for (std::uint32_t c = 0; c < t.rep.size(); ++c) CHECK(t.members[c].size() == 1);
    for (std::uint32_t c = 0; c < t.rep.size(); ++c)
      for (std::uint32_t d = 0; d < t.rep.size(); ++d)
        CHECK(t.poset.leq(c, d) ==
              omega.leq(t.pairs[t.rep[c]].second, t.pairs[t.rep[d]].second));
  }
  SUBCASE("(dom u (x) u phi) is identified with (cod u (x) cod u phi)") {
    OrderedFunctor phi = random_functor(1, FunctorKind::star_injective);
    TensorPoset t = tensor_poset(phi);
    const auto& U = *phi.source();
    const auto& H = *phi.target();
    for (ArrowId u = 0; u < U.n_arrows(); ++u)
      CHECK(t.cls(U.dom(u), phi(u)) == t.cls(U.cod(u), H.identity(phi.obj(U.cod(u)))));
  }
  SUBCASE("the precondition is enforced") {
    KleinFixture fx2 = klein_fixture();
    CHECK_THROWS_AS(tensor_poset(fx2.p), domain_error);
  }
  SUBCASE("finite tensor relations stay antisymmetric even without star-injectivity") {
    // The antisymmetry argument needs star-injectivity in general, but a
    // finite ordered groupoid admits no witness: arrows never join
    // strictly comparable objects, which close the failure pattern.
    int non_injective = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      OrderedFunctor f = random_functor(seed, FunctorKind::any);
      if (star_class(f).injective) continue;
      ++non_injective;
      detail::TensorRelation rel = detail::tensor_relation(f);
      CHECK(rel.antisymmetric);
    }
    CHECK(non_injective >= 5);
  }
}

TEST_CASE("no finite ordered groupoid links strictly comparable objects") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GroupoidPtr g = random_instance(seed).g;
    for (ArrowId a = 0; a < g->n_arrows(); ++a) {
      if (g->dom(a) == g->cod(a)) continue;
      CHECK_FALSE(g->object_poset().leq(g->dom(a), g->cod(a)));
      CHECK_FALSE(g->object_poset().leq(g->cod(a), g->dom(a)));
    }
  }
}

TEST_CASE("maximum enlargement") {
  KleinFixture fx = klein_fixture();

  SUBCASE("of the identity is an isomorphism") {
    MaximumEnlargement me = maximum_enlargement(identity_functor(fx.h));
    CHECK(me.sdp.g->n_arrows() == fx.h->n_arrows());
    CHECK(is_order_isomorphism(me.i));
  }
  SUBCASE("of the object inclusion matches the arrow action") {
    MaximumEnlargement me = maximum_enlargement(object_inclusion(fx.g));
    // H~ = G |x Omega G: count the pullback pairs
    const auto& G = *fx.g;
    std::size_t expect = 0;
    for (ArrowId g = 0; g < G.n_arrows(); ++g)
      for (ArrowId h = 0; h < G.n_arrows(); ++h)
        if (G.cod(h) == G.cod(g)) ++expect;
    CHECK(me.sdp.g->n_arrows() == expect);
    CHECK(star_class(me.pi).bijective());
  }
  SUBCASE("random star-injective suite") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      OrderedFunctor phi = random_functor(seed, FunctorKind::star_injective);
      MaximumEnlargement me = maximum_enlargement(phi);
      CHECK(me.witness.ok());
      CHECK(is_ordered_embedding(me.i));
      CHECK(star_class(me.pi).bijective());
      CHECK(compose_functors(me.i, me.pi) == phi);
      CHECK(validate_ogpd(me.sdp.g->data()).passed);
    }
  }
  SUBCASE("non-star-injective functors are refused") {
    CHECK_THROWS_AS(maximum_enlargement(fx.p), domain_error);
  }
}

TEST_CASE("universal property") {
  SearchBudget budget{200'000'000};
  KleinFixture fx = klein_fixture();

  SUBCASE("factoring through the enlargement itself gives the identity") {
    OrderedFunctor phi = random_functor(2, FunctorKind::star_injective);
    MaximumEnlargement me = maximum_enlargement(phi);
    UniversalMap um = universal_map(me, me.i, me.pi, budget);
    CHECK(um.nu == identity_functor(me.sdp.g));
    CHECK(um.unique);
  }
  SUBCASE("phi = j = xi = id forces nu = pi") {
    MaximumEnlargement me = maximum_enlargement(identity_functor(fx.h));
    UniversalMap um = universal_map(me, identity_functor(fx.h), identity_functor(fx.h), budget);
    CHECK(um.nu == me.pi);
    CHECK(um.unique);
  }
  SUBCASE("a strictly smaller covering factorization") {
    // phi : G_0 -> G factors through the trivial-action covering
    GroupoidPtr small;
    for (std::uint64_t probe = 3;; ++probe) {
      small = random_instance(probe, {3, 4, false}).g;
      if (small->n_arrows() > small->n_objects()) break;
    }
    OrderedFunctor phi = object_inclusion(small);
    MaximumEnlargement me = maximum_enlargement(phi);

    GroupoidPtr g0 = phi.source();
    const auto& G = *small;
    std::vector<ObjectId> moment(G.n_objects());
    for (ObjectId e = 0; e < G.n_objects(); ++e) moment[e] = e;
    std::unordered_map<std::uint64_t, ArrowId> act;
    for (ObjectId e = 0; e < G.n_objects(); ++e)
      for (ArrowId m : G.star(e)) act[key64(e, m)] = G.cod(m);
    SemidirectProduct c = semidirect_product(
        make_action(small, objects_groupoid(G), std::move(moment), std::move(act)));
    std::vector<ArrowId> jmap(g0->n_arrows());
    for (ObjectId e = 0; e < G.n_objects(); ++e) jmap[e] = c.g->identity(e);
    OrderedFunctor j = make_functor(g0, c.g, std::move(jmap));

    REQUIRE(c.g->n_arrows() < me.sdp.g->n_arrows());
    UniversalMap um = universal_map(me, j, c.projection, budget);
    CHECK(um.unique);
    CHECK(compose_functors(me.i, um.nu) == j);
    CHECK(compose_functors(um.nu, c.projection) == me.pi);
  }
  SUBCASE("subpresheaf inclusions against the identity covering") {
    for (std::uint64_t seed : {1u, 5u, 9u}) {
      OrderedFunctor phi = random_functor(seed, FunctorKind::star_injective);
      MaximumEnlargement me = maximum_enlargement(phi);
      UniversalMap um = universal_map(me, phi, identity_functor(phi.target()), budget);
      CHECK(um.unique);
      CHECK(um.nu == me.pi);  // forced by pi = nu ; id
    }
  }
}

TEST_CASE("triple factorization") {
  KleinFixture fx = klein_fixture();

  SUBCASE("of the Klein p") {
    TripleFactorization tf = triple_factorization(fx.p);
    CHECK(star_class(tf.fact.varpi).surjective);
    CHECK(star_class(tf.enl.pi).bijective());
    CHECK(tf.enl.witness.ok());
  }
  SUBCASE("random suite composes back to phi") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      OrderedFunctor phi = random_functor(seed, FunctorKind::any);
      if (phi.source()->n_arrows() > 25 || phi.target()->n_arrows() > 25) continue;
      TripleFactorization tf = triple_factorization(phi);
      OrderedFunctor composite =
          compose_functors(tf.fact.varpi, compose_functors(tf.enl.i, tf.enl.pi));
      CHECK(composite == phi);
    }
  }
}
