#include "ogpd/fixtures.hpp"

namespace ogpd {

namespace {

PresheafSpec trivial_spec(const Poset& base) {
  PresheafSpec spec;
  spec.base = base;
  const std::size_t n = base.size();
  spec.groups.assign(n, cyclic_group(1));
  spec.linking.assign(n, std::vector<std::vector<std::uint32_t>>(n));
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (base.leq(y, x)) spec.linking[x][y] = {0};
  return spec;
}

}  // namespace

KleinFixture klein_fixture() {
  KleinFixture fx;

  Poset ebase = Poset::create({"e", "f", "z"},
                              {{0, 0}, {1, 1}, {2, 2}, {2, 0}, {2, 1}});
  fx.e_spec = trivial_spec(ebase);
  fx.e = presheaf_groupoid(fx.e_spec);

  // G: C2 at e and f, Klein four-group at z, links are the inclusions
  fx.g_spec.base = ebase;
  fx.g_spec.groups = {cyclic_group(2), cyclic_group(2), klein_four()};
  fx.g_spec.groups[0].element_names = {"1", "a"};
  fx.g_spec.groups[1].element_names = {"1", "b"};
  fx.g_spec.linking.assign(3, std::vector<std::vector<std::uint32_t>>(3));
  fx.g_spec.linking[0][0] = {0, 1};
  fx.g_spec.linking[1][1] = {0, 1};
  fx.g_spec.linking[2][2] = {0, 1, 2, 3};
  fx.g_spec.linking[0][2] = {0, 1};  // a |-> a
  fx.g_spec.linking[1][2] = {0, 2};  // b |-> b
  fx.g = presheaf_groupoid(fx.g_spec);

  // H: C2 over the chain 0 < 1 with x |-> y
  Poset hbase = Poset::create({"1", "0"}, {{0, 0}, {1, 1}, {1, 0}});
  fx.h_spec.base = hbase;
  fx.h_spec.groups = {cyclic_group(2), cyclic_group(2)};
  fx.h_spec.groups[0].element_names = {"1", "x"};
  fx.h_spec.groups[1].element_names = {"1", "y"};
  fx.h_spec.linking.assign(2, std::vector<std::vector<std::uint32_t>>(2));
  fx.h_spec.linking[0][0] = {0, 1};
  fx.h_spec.linking[1][1] = {0, 1};
  fx.h_spec.linking[0][1] = {0, 1};  // x |-> y
  fx.h = presheaf_groupoid(fx.h_spec);

  // inclusion E -> G
  fx.i = presheaf_morphism(fx.e_spec, fx.e, fx.g_spec, fx.g, {0, 1, 2}, {{0}, {0}, {0}});

  // p: fiberwise surjections p_e : a -> x, p_f : b -> x, p_z : a,b -> y
  fx.p = presheaf_morphism(fx.g_spec, fx.g, fx.h_spec, fx.h, {0, 0, 1},
                           {{0, 1}, {0, 1}, {0, 1, 1, 0}});

  fx.hx = presheaf_arrow(fx.h_spec, 0, 1);
  fx.hy = presheaf_arrow(fx.h_spec, 1, 1);
  fx.square = make_square(fx.e, fx.p, fx.i, {fx.hx, fx.hx, fx.hy});
  return fx;
}

PStarFixture pstar_fixture() {
  PStarFixture fx;
  fx.base = klein_fixture();
  fx.tau = {fx.base.hx, fx.base.hx, fx.base.hy};
  return fx;
}

ExampleViFixture example_vi_fixture() {
  ExampleViFixture fx;
  GroupoidData d;
  d.objects = {"x", "y", "k", "l", "m", "n", "z"};
  // z below everything; k, m below x; l, n below y
  OrderPairs oleq = {{2, 0}, {4, 0}, {3, 1}, {5, 1}, {6, 2}, {6, 3}, {6, 4}, {6, 5}};
  d.object_leq = reflexive_transitive_closure(7, oleq);

  for (ObjectId e = 0; e < 7; ++e) d.arrows.push_back({"id:" + d.objects[e], e, e});
  d.arrows.push_back({"iota", 2, 3});      // 7: k -> l
  d.arrows.push_back({"iota^-1", 3, 2});   // 8
  d.arrows.push_back({"eta", 4, 5});       // 9: m -> n
  d.arrows.push_back({"eta^-1", 5, 4});    // 10
  fx.iota = 7;
  fx.eta = 9;

  d.identity = {0, 1, 2, 3, 4, 5, 6};
  d.inverse = {0, 1, 2, 3, 4, 5, 6, 8, 7, 10, 9};
  for (ObjectId e = 0; e < 7; ++e) d.compose.push_back({e, e, e});
  d.compose.push_back({2, 7, 7});   // id:k iota
  d.compose.push_back({7, 3, 7});   // iota id:l
  d.compose.push_back({7, 8, 2});   // iota iota^-1
  d.compose.push_back({8, 7, 3});
  d.compose.push_back({8, 2, 8});
  d.compose.push_back({3, 8, 8});
  d.compose.push_back({4, 9, 9});
  d.compose.push_back({9, 5, 9});
  d.compose.push_back({9, 10, 4});
  d.compose.push_back({10, 9, 5});
  d.compose.push_back({10, 4, 10});
  d.compose.push_back({5, 10, 10});

  // arrow order: identities follow the object order; id:z sits below the
  // four non-identity arrows (their restrictions to z)
  OrderPairs aleq;
  for (auto [lo, hi] : d.object_leq) aleq.emplace_back(lo, hi);
  aleq.emplace_back(6, 7);
  aleq.emplace_back(6, 8);
  aleq.emplace_back(6, 9);
  aleq.emplace_back(6, 10);
  for (ArrowId a = 7; a <= 10; ++a) aleq.emplace_back(a, a);
  d.arrow_leq = reflexive_transitive_closure(d.arrows.size(), aleq);

  fx.s = OrderedGroupoid::create(std::move(d));

  // [x], [y] maximal; [k]=[l], [m]=[n] in the middle; [z] minimum
  fx.expected_quotient = Poset::create(
      {"X", "Y", "KL", "MN", "Z"},
      reflexive_transitive_closure(5, {{2, 0}, {2, 1}, {3, 0}, {3, 1}, {4, 2}, {4, 3}}));
  return fx;
}

}  // namespace ogpd
