#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ogpd/fixtures.hpp"
#include "ogpd/homotopy.hpp"
#include "ogpd/random_gen.hpp"
#include "quotient_oracle.hpp"
#include "square_gen.hpp"

using namespace ogpd;

namespace {

std::vector<ArrowId> all_arrows(const OrderedGroupoid& g) {
  std::vector<ArrowId> out(g.n_arrows());
  for (ArrowId a = 0; a < out.size(); ++a) out[a] = a;
  return out;
}

std::vector<ArrowId> identity_arrows(const OrderedGroupoid& g) {
  std::vector<ArrowId> out;
  for (ObjectId e = 0; e < g.n_objects(); ++e) out.push_back(g.identity(e));
  return out;
}

}  // namespace

TEST_CASE("normality checks") {
  KleinFixture fx = klein_fixture();

  SUBCASE("identities are normal") {
    CHECK(is_normal(*fx.g, identity_arrows(*fx.g)).passed);
  }
  SUBCASE("kernels are normal") {
    CHECK(is_normal(*fx.g, kernel(fx.p)).passed);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      OrderedFunctor f = random_functor(seed, FunctorKind::any);
      CHECK(is_normal(*f.source(), kernel(f)).passed);
    }
  }
  SUBCASE("a non-normal subgroup fails the conjugation scan") {
    // presheaf with one S3 fiber and a non-normal 2-subgroup
    PresheafSpec spec;
    spec.base = Poset::create({"x"}, {{0, 0}});
    spec.groups = {symmetric_group_3()};
    spec.linking.assign(1, std::vector<std::vector<std::uint32_t>>(1));
    spec.linking[0][0] = {0, 1, 2, 3, 4, 5};
    GroupoidPtr g = presheaf_groupoid(spec);
    std::vector<ArrowId> sub = {presheaf_arrow(spec, 0, 0), presheaf_arrow(spec, 0, 1)};
    ValidationReport rep = is_normal(*g, sub);
    CHECK_FALSE(rep.passed);
    CHECK(rep.has(Axiom::sub_conjugation));
  }
  SUBCASE("restriction closure is demanded") {
    // take only the top fiber of the Klein kernel: not restriction-closed
    std::vector<ArrowId> sub = identity_arrows(*fx.g);
    sub.push_back(presheaf_arrow(fx.g_spec, 0, 1));  // a in G_e without a_z
    ValidationReport rep = is_normal(*fx.g, sub);
    CHECK_FALSE(rep.passed);
  }
}

TEST_CASE("nexus search") {
  ExampleViFixture fx = example_vi_fixture();
  const auto& S = *fx.s;
  std::vector<ArrowId> sub = all_arrows(S);

  SUBCASE("e = f gives the identity nexus") {
    ObjectId x = *S.object_by_name("x");
    auto nx = find_nexus(S, sub, x, x);
    REQUIRE(nx.has_value());
    CHECK(S.cod(nx->a) == x);
    CHECK(S.cod(nx->p) == x);
  }
  SUBCASE("iota links k and l") {
    ObjectId k = *S.object_by_name("k");
    ObjectId l = *S.object_by_name("l");
    auto nx = find_nexus(S, sub, k, l);
    REQUIRE(nx.has_value());
    CHECK(S.cod(nx->a) == l);
    CHECK(S.cod(nx->p) == k);
  }
  SUBCASE("x and y are not linked") {
    ObjectId x = *S.object_by_name("x");
    ObjectId y = *S.object_by_name("y");
    CHECK_FALSE(find_nexus(S, sub, x, y).has_value());
  }
  SUBCASE("nexus existence matches the class relation on identities") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      RandomInstance inst = random_with_normal(seed);
      OracleQuotient oracle = oracle_quotient(*inst.g, *inst.normal_sub);
      for (ObjectId e = 0; e < inst.g->n_objects(); ++e)
        for (ObjectId f = 0; f < inst.g->n_objects(); ++f) {
          bool related = oracle.class_of[inst.g->identity(e)] ==
                         oracle.class_of[inst.g->identity(f)];
          CHECK(find_nexus(*inst.g, *inst.normal_sub, e, f).has_value() == related);
        }
    }
  }
}

TEST_CASE("quotient by the identities is the original groupoid") {
  KleinFixture fx = klein_fixture();
  QuotientGroupoid q = quotient(fx.g, identity_arrows(*fx.g));
  CHECK(q.g->n_arrows() == fx.g->n_arrows());
  CHECK(q.g->n_objects() == fx.g->n_objects());
  CHECK(is_order_isomorphism(q.varpi));
}

TEST_CASE("the seven-object example collapses to the five-element poset") {
  ExampleViFixture fx = example_vi_fixture();
  QuotientGroupoid q = quotient(fx.s, all_arrows(*fx.s));
  CHECK(q.g->n_objects() == 5);
  CHECK(q.g->n_arrows() == 5);  // trivial groupoid
  CHECK_FALSE(is_inductive(*q.g));

  // shape: two maximal above two middle above one minimum
  const Poset& p = q.g->object_poset();
  int maximal = 0, minimal = 0;
  for (ObjectId e = 0; e < p.size(); ++e) {
    bool is_max = true, is_min = true;
    for (ObjectId f = 0; f < p.size(); ++f) {
      if (f != e && p.leq(e, f)) is_max = false;
      if (f != e && p.leq(f, e)) is_min = false;
    }
    maximal += is_max;
    minimal += is_min;
  }
  CHECK(maximal == 2);
  CHECK(minimal == 1);
}

TEST_CASE("presheaf quotients are presheaves of quotient groups") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    RandomInstance inst = random_with_normal(seed);
    QuotientGroupoid q = quotient(inst.g, *inst.normal_sub);

    // fibers of the quotient match the group quotients fiber by fiber
    const auto& G = *inst.g;
    std::set<ArrowId> sub(inst.normal_sub->begin(), inst.normal_sub->end());
    for (ObjectId e = 0; e < G.n_objects(); ++e) {
      std::size_t fiber = 0, normal_fiber = 0;
      for (ArrowId a : G.star(e)) {
        ++fiber;
        if (sub.count(a)) ++normal_fiber;
      }
      ObjectId qe = q.varpi.obj(e);
      CHECK(q.g->star(qe).size() == fiber / normal_fiber);
    }
    // objects never merge in a presheaf quotient
    CHECK(q.g->n_objects() == G.n_objects());
  }
}

TEST_CASE("quotients validate, fiber and match the oracle") {
  int done = 0;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    RandomInstance inst = random_with_normal(seed);
    if (inst.g->n_arrows() > 30) continue;
    ++done;
    QuotientGroupoid q = quotient(inst.g, *inst.normal_sub);
    CHECK(validate_ogpd(q.g->data()).passed);
    CHECK(star_class(q.varpi).surjective);

    OracleQuotient oracle = oracle_quotient(*inst.g, *inst.normal_sub);
    REQUIRE(oracle.classes.size() == q.g->n_arrows());
    // identical partitions
    for (ArrowId x = 0; x < inst.g->n_arrows(); ++x)
      for (ArrowId y = 0; y < inst.g->n_arrows(); ++y)
        CHECK((oracle.class_of[x] == oracle.class_of[y]) == (q.class_of[x] == q.class_of[y]));
    // identical order and composition through the class map
    std::vector<ArrowId> to_q(oracle.classes.size());
    for (ArrowId c = 0; c < oracle.classes.size(); ++c) to_q[c] = q.class_of[oracle.classes[c][0]];
    for (ArrowId c = 0; c < oracle.classes.size(); ++c)
      for (ArrowId d = 0; d < oracle.classes.size(); ++d) {
        CHECK(oracle.order.count({c, d}) == (q.g->arrow_leq(to_q[c], to_q[d]) ? 1u : 0u));
        auto it = oracle.mul.find({c, d});
        auto composed = q.g->compose(to_q[c], to_q[d]);
        CHECK((it != oracle.mul.end() ? (composed && *composed == to_q[it->second])
                                      : !composed.has_value()));
      }
  }
  CHECK(done >= 10);
}

TEST_CASE("class composition is independent of the nexus") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    RandomInstance inst = random_with_normal(seed);
    if (inst.g->n_arrows() > 30) continue;
    const auto& G = *inst.g;
    QuotientGroupoid q = quotient(inst.g, *inst.normal_sub);
    for (ArrowId c1 = 0; c1 < q.g->n_arrows(); ++c1)
      for (ArrowId c2 = 0; c2 < q.g->n_arrows(); ++c2) {
        auto composed = q.g->compose(c1, c2);
        if (!composed) continue;
        ArrowId g = q.rep[c1], h = q.rep[c2];
        // try every nexus, not just the first
        for (ArrowId a : *inst.normal_sub) {
          if (G.cod(a) != G.dom(h) || !G.object_poset().leq(G.dom(a), G.cod(g))) continue;
          for (ArrowId p : *inst.normal_sub) {
            if (G.cod(p) != G.cod(g) || !G.object_poset().leq(G.dom(p), G.dom(h))) continue;
            ArrowId gp = corestriction(G, g, G.dom(a));
            ArrowId prod = G.compose_req(G.compose_req(gp, a), h);
            CHECK(q.class_of[prod] == *composed);
          }
        }
      }
  }
}

TEST_CASE("class invariants under inverse and endpoints") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RandomInstance inst = random_with_normal(seed);
    QuotientGroupoid q = quotient(inst.g, *inst.normal_sub);
    const auto& G = *inst.g;
    for (ArrowId x = 0; x < G.n_arrows(); ++x)
      for (ArrowId y = 0; y < G.n_arrows(); ++y) {
        if (q.class_of[x] != q.class_of[y]) continue;
        CHECK(q.class_of[G.inverse(x)] == q.class_of[G.inverse(y)]);
        CHECK(q.class_of[G.identity(G.dom(x))] == q.class_of[G.identity(G.dom(y))]);
      }
  }
}

TEST_CASE("factorization through the kernel") {
  KleinFixture fx = klein_fixture();

  SUBCASE("the Klein p factors with a covering") {
    Factorization fact = factorize(fx.p);
    CHECK(star_class(fact.psi).bijective());
    CHECK(compose_functors(fact.varpi, fact.psi) == fx.p);
  }
  SUBCASE("star-injective theta leaves psi star-injective") {
    OrderedFunctor inc = random_functor(1, FunctorKind::star_injective);
    Factorization fact = factorize(inc);
    CHECK(star_class(fact.psi).injective);
    CHECK(compose_functors(fact.varpi, fact.psi) == inc);
  }
  SUBCASE("random suite") {
    int fibrations = 0;
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      OrderedFunctor theta = random_functor(seed, FunctorKind::any);
      Factorization fact = factorize(theta);
      CHECK(star_class(fact.psi).injective);
      CHECK(compose_functors(fact.varpi, fact.psi) == theta);
      if (star_class(theta).surjective) {
        ++fibrations;
        CHECK(star_class(fact.psi).bijective());
      }
    }
    CHECK(fibrations >= 5);
  }
}

TEST_CASE("the Klein-derived quotient map is a fibration but not strong") {
  // G // ker p recovers H fiberwise; the obstructed square transfers
  KleinFixture fx = klein_fixture();
  Factorization fact = factorize(fx.p);
  CHECK(star_class(fact.varpi).surjective);

  ArrowId qa = fact.varpi(presheaf_arrow(fx.g_spec, 0, 1));  // [a] over e
  ArrowId qb = fact.varpi(presheaf_arrow(fx.g_spec, 1, 1));  // [b] over f
  ArrowId qz = fact.varpi(presheaf_arrow(fx.g_spec, 2, 1));  // [a] over z
  HomotopySquare sq = make_square(fx.e, fact.varpi, fx.i, {qa, qb, qz});
  SearchBudget budget;
  CHECK_FALSE(find_lift(sq, budget).has_value());
}

TEST_CASE("G // G is the component poset quotient") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    GroupoidPtr g = random_instance(seed).g;
    if (g->n_arrows() > 30) continue;
    QuotientGroupoid q = quotient(g, all_arrows(*g));
    Pi0 pi = pi0_quotient(*g);
    REQUIRE(q.g->n_objects() == pi.q.size());
    // identity classes correspond to Q(G) classes, preserving order
    std::vector<ObjectId> to_q(pi.q.size(), kNoObject);
    for (ObjectId e = 0; e < g->n_objects(); ++e) {
      std::uint32_t cls = pi.q_class_of_component[pi.component_of_object[e]];
      ObjectId qe = q.varpi.obj(e);
      if (to_q[cls] == kNoObject) to_q[cls] = qe;
      CHECK(to_q[cls] == qe);
    }
    for (std::uint32_t c = 0; c < pi.q.size(); ++c)
      for (std::uint32_t d = 0; d < pi.q.size(); ++d)
        CHECK(pi.q.leq(c, d) == q.g->object_poset().leq(to_q[c], to_q[d]));
  }
}
