#include "ogpd/groupoid.hpp"

#include <algorithm>
#include <numeric>

namespace ogpd {

GroupoidPtr OrderedGroupoid::create(GroupoidData data) {
  ValidationReport rep = validate_ogpd(data);
  if (!rep.passed)
    throw invariant_error("ordered groupoid validation failed: " + rep.summary());

  auto g = std::make_shared<OrderedGroupoid>();
  g->data_ = std::move(data);
  const GroupoidData& d = g->data_;
  const std::size_t n = d.n_objects(), m = d.n_arrows();

  std::vector<std::string> onames = d.objects;
  g->object_poset_ = Poset::create(std::move(onames), d.object_leq);

  g->order_ = BitRel(m);
  g->down_.resize(m);
  g->up_.resize(m);
  for (auto [lo, hi] : d.arrow_leq) {
    g->order_.set(lo, hi);
    g->down_[hi].push_back(lo);
    g->up_[lo].push_back(hi);
  }
  for (auto& v : g->down_) std::sort(v.begin(), v.end());
  for (auto& v : g->up_) std::sort(v.begin(), v.end());

  for (const auto& t : d.compose) g->compose_[key64(t[0], t[1])] = t[2];

  g->star_.resize(n);
  g->costar_.resize(n);
  for (ArrowId a = 0; a < m; ++a) {
    g->star_[d.arrows[a].dom].push_back(a);
    g->costar_[d.arrows[a].cod].push_back(a);
  }

  for (ArrowId a = 0; a < m; ++a) g->arrow_names_[d.arrows[a].name] = a;
  for (ObjectId e = 0; e < n; ++e) g->object_names_[d.objects[e]] = e;
  return g;
}

std::optional<ArrowId> OrderedGroupoid::compose(ArrowId a, ArrowId b) const {
  auto it = compose_.find(key64(a, b));
  if (it == compose_.end()) return std::nullopt;
  return it->second;
}

ArrowId OrderedGroupoid::compose_req(ArrowId a, ArrowId b) const {
  auto c = compose(a, b);
  if (!c)
    throw invariant_error("expected composable arrows '" + arrow_name(a) + "' and '" +
                          arrow_name(b) + "'");
  return *c;
}

std::span<const ArrowId> OrderedGroupoid::star(ObjectId e) const {
  if (e >= n_objects()) throw domain_error("unknown object id");
  return star_[e];
}

std::span<const ArrowId> OrderedGroupoid::costar(ObjectId e) const {
  if (e >= n_objects()) throw domain_error("unknown object id");
  return costar_[e];
}

std::optional<ArrowId> OrderedGroupoid::arrow_by_name(const std::string& name) const {
  auto it = arrow_names_.find(name);
  if (it == arrow_names_.end()) return std::nullopt;
  return it->second;
}

std::optional<ObjectId> OrderedGroupoid::object_by_name(const std::string& name) const {
  auto it = object_names_.find(name);
  if (it == object_names_.end()) return std::nullopt;
  return it->second;
}

ArrowId restriction(const OrderedGroupoid& g, ObjectId f, ArrowId arrow) {
  if (!g.object_poset().leq(f, g.dom(arrow)))
    throw domain_error("restriction: '" + g.object_name(f) + "' is not below dom of '" +
                       g.arrow_name(arrow) + "'");
  ArrowId found = kNoArrow;
  for (ArrowId h : g.down(arrow)) {
    if (g.dom(h) != f) continue;
    if (found != kNoArrow)
      throw invariant_error("restriction of '" + g.arrow_name(arrow) + "' is not unique");
    found = h;
  }
  if (found == kNoArrow)
    throw invariant_error("restriction of '" + g.arrow_name(arrow) + "' to '" +
                          g.object_name(f) + "' does not exist");
  return found;
}

ArrowId corestriction(const OrderedGroupoid& g, ArrowId arrow, ObjectId f) {
  return g.inverse(restriction(g, f, g.inverse(arrow)));
}

std::optional<ArrowId> pseudoproduct(const OrderedGroupoid& g, ArrowId a, ArrowId b) {
  auto m = g.object_poset().meet(g.cod(a), g.dom(b));
  if (!m) return std::nullopt;
  return g.compose_req(corestriction(g, a, *m), restriction(g, *m, b));
}

std::vector<ArrowId> local_group(const OrderedGroupoid& g, ObjectId e) {
  std::vector<ArrowId> out;
  for (ArrowId a : g.star(e))
    if (g.cod(a) == e) out.push_back(a);
  return out;
}

bool is_inductive(const OrderedGroupoid& g) {
  return g.object_poset().is_meet_semilattice();
}

ArrowId Product::pair(ArrowId a, ArrowId b) const {
  return static_cast<ArrowId>(a * right->n_arrows() + b);
}

std::pair<ArrowId, ArrowId> Product::unpair(ArrowId m) const {
  auto k = right->n_arrows();
  return {static_cast<ArrowId>(m / k), static_cast<ArrowId>(m % k)};
}

ObjectId Product::pair_obj(ObjectId x, ObjectId y) const {
  return static_cast<ObjectId>(x * right->n_objects() + y);
}

std::pair<ObjectId, ObjectId> Product::unpair_obj(ObjectId z) const {
  auto k = right->n_objects();
  return {static_cast<ObjectId>(z / k), static_cast<ObjectId>(z % k)};
}

Product product(GroupoidPtr a, GroupoidPtr b) {
  const auto &A = *a, &B = *b;
  GroupoidData d;
  const std::size_t nA = A.n_objects(), nB = B.n_objects();
  const std::size_t mA = A.n_arrows(), mB = B.n_arrows();

  for (ObjectId x = 0; x < nA; ++x)
    for (ObjectId y = 0; y < nB; ++y)
      d.objects.push_back("(" + A.object_name(x) + "," + B.object_name(y) + ")");
  for (ObjectId x = 0; x < nA; ++x)
    for (ObjectId x2 = 0; x2 < nA; ++x2) {
      if (!A.object_poset().leq(x, x2)) continue;
      for (ObjectId y = 0; y < nB; ++y)
        for (ObjectId y2 = 0; y2 < nB; ++y2)
          if (B.object_poset().leq(y, y2))
            d.object_leq.emplace_back(x * nB + y, x2 * nB + y2);
    }

  auto obj = [&](ObjectId x, ObjectId y) { return static_cast<ObjectId>(x * nB + y); };
  auto arr = [&](ArrowId p, ArrowId q) { return static_cast<ArrowId>(p * mB + q); };

  for (ArrowId p = 0; p < mA; ++p)
    for (ArrowId q = 0; q < mB; ++q)
      d.arrows.push_back({"(" + A.arrow_name(p) + "," + B.arrow_name(q) + ")",
                          obj(A.dom(p), B.dom(q)), obj(A.cod(p), B.cod(q))});

  d.identity.resize(nA * nB);
  for (ObjectId x = 0; x < nA; ++x)
    for (ObjectId y = 0; y < nB; ++y)
      d.identity[obj(x, y)] = arr(A.identity(x), B.identity(y));

  d.inverse.resize(mA * mB);
  for (ArrowId p = 0; p < mA; ++p)
    for (ArrowId q = 0; q < mB; ++q)
      d.inverse[arr(p, q)] = arr(A.inverse(p), B.inverse(q));

  for (const auto& ta : A.data().compose)
    for (const auto& tb : B.data().compose)
      d.compose.push_back({arr(ta[0], tb[0]), arr(ta[1], tb[1]), arr(ta[2], tb[2])});

  for (auto [p, p2] : A.data().arrow_leq)
    for (auto [q, q2] : B.data().arrow_leq)
      d.arrow_leq.emplace_back(arr(p, q), arr(p2, q2));

  Product out;
  out.left = std::move(a);
  out.right = std::move(b);
  out.g = OrderedGroupoid::create(std::move(d));
  return out;
}

Pi0 pi0_quotient(const OrderedGroupoid& g) {
  const std::size_t n = g.n_objects(), m = g.n_arrows();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ArrowId a = 0; a < m; ++a) {
    auto x = find(g.dom(a)), y = find(g.cod(a));
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }

  Pi0 out;
  out.component_of_object.resize(n);
  std::vector<std::uint32_t> index(n, kNoObject);
  for (ObjectId e = 0; e < n; ++e) {
    auto root = find(e);
    if (index[root] == kNoObject) index[root] = static_cast<std::uint32_t>(out.n_components++);
    out.component_of_object[e] = index[root];
  }
  out.component_of_arrow.resize(m);
  for (ArrowId a = 0; a < m; ++a) out.component_of_arrow[a] = out.component_of_object[g.dom(a)];

  const std::size_t k = out.n_components;
  std::vector<std::vector<ArrowId>> arrows_in(k);
  for (ArrowId a = 0; a < m; ++a) arrows_in[out.component_of_arrow[a]].push_back(a);

  // component i <= component j iff every arrow of j dominates one of i
  BitRel pre(k);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) {
      bool le = true;
      for (ArrowId h : arrows_in[j]) {
        bool some = false;
        for (ArrowId lo : g.down(h))
          if (out.component_of_arrow[lo] == i) {
            some = true;
            break;
          }
        if (!some) {
          le = false;
          break;
        }
      }
      if (le) {
        pre.set(i, j);
        out.component_preorder.emplace_back(i, j);
      }
    }

  // collapse mutually comparable components
  out.q_class_of_component.assign(k, kNoObject);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (out.q_class_of_component[i] != kNoObject) continue;
    auto cls = static_cast<std::uint32_t>(reps.size());
    reps.push_back(i);
    out.q_class_of_component[i] = cls;
    for (std::uint32_t j = i + 1; j < k; ++j)
      if (pre.get(i, j) && pre.get(j, i)) out.q_class_of_component[j] = cls;
  }

  std::vector<std::string> names;
  for (std::uint32_t cls = 0; cls < reps.size(); ++cls) {
    ObjectId first = kNoObject;
    for (ObjectId e = 0; e < n && first == kNoObject; ++e)
      if (out.q_class_of_component[out.component_of_object[e]] == cls) first = e;
    names.push_back("|" + g.object_name(first) + "|");
  }
  OrderPairs qleq;
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j)
      if (pre.get(i, j))
        qleq.emplace_back(out.q_class_of_component[i], out.q_class_of_component[j]);
  std::sort(qleq.begin(), qleq.end());
  qleq.erase(std::unique(qleq.begin(), qleq.end()), qleq.end());
  out.q = Poset::create(std::move(names), qleq);
  return out;
}

}  // namespace ogpd
