#include "ogpd/enlargement.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace ogpd {

EnlargementWitness is_enlargement(const OrderedGroupoid& b, const std::vector<ArrowId>& sub) {
  EnlargementWitness out;
  ValidationReport& rep = out.report;
  if (!is_subgroupoid(b, sub)) {
    rep.add(Axiom::structure, "arrow set is not a subgroupoid");
    return out;
  }
  std::unordered_set<ArrowId> set(sub.begin(), sub.end());
  std::vector<char> sub_obj(b.n_objects(), 0);
  for (ArrowId a : sub) {
    sub_obj[b.dom(a)] = 1;
    sub_obj[b.cod(a)] = 1;
  }

  for (ObjectId x = 0; x < b.n_objects(); ++x) {
    if (rep.has(Axiom::enl_ideal)) break;
    for (ObjectId e = 0; e < b.n_objects(); ++e)
      if (sub_obj[e] && b.object_poset().leq(x, e) && !sub_obj[x]) {
        rep.add(Axiom::enl_ideal, "object '" + b.object_name(x) + "' below '" + b.object_name(e) +
                                      "' is outside the subgroupoid");
        break;
      }
  }
  for (ArrowId m = 0; m < b.n_arrows(); ++m)
    if (sub_obj[b.dom(m)] && sub_obj[b.cod(m)] && !set.count(m)) {
      rep.add(Axiom::enl_full,
              "arrow '" + b.arrow_name(m) + "' between subgroupoid objects is missing", {m});
      break;
    }
  out.connecting.assign(b.n_objects(), kNoArrow);
  for (ObjectId e = 0; e < b.n_objects(); ++e) {
    for (ArrowId m : b.star(e))
      if (sub_obj[b.cod(m)]) {
        out.connecting[e] = m;
        break;
      }
    if (out.connecting[e] == kNoArrow) {
      rep.add(Axiom::enl_connected,
              "object '" + b.object_name(e) + "' has no arrow into the subgroupoid");
      break;
    }
  }
  return out;
}

namespace detail {

TensorRelation tensor_relation(const OrderedFunctor& phi) {
  const auto& U = *phi.source();
  const auto& H = *phi.target();
  TensorRelation out;

  std::unordered_map<std::uint64_t, std::uint32_t> index;
  for (ObjectId e = 0; e < U.n_objects(); ++e)
    for (ArrowId h = 0; h < H.n_arrows(); ++h)
      if (phi.obj(e) == H.dom(h)) {
        index[key64(e, h)] = static_cast<std::uint32_t>(out.pairs.size());
        out.pairs.emplace_back(e, h);
      }

  // union-find over the one-step relation (e, (u phi) k) ~ (cod u, k)
  std::vector<std::uint32_t> parent(out.pairs.size());
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ArrowId u = 0; u < U.n_arrows(); ++u)
    for (ArrowId k : H.star(phi.obj(U.cod(u)))) {
      auto a = find(index.at(key64(U.dom(u), H.compose_req(phi(u), k))));
      auto b = find(index.at(key64(U.cod(u), k)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  out.class_of.resize(out.pairs.size());
  std::vector<std::uint32_t> cls_index(out.pairs.size(), kNoObject);
  for (std::uint32_t i = 0; i < out.pairs.size(); ++i) {
    auto root = find(i);
    if (cls_index[root] == kNoObject) {
      cls_index[root] = static_cast<std::uint32_t>(out.members.size());
      out.members.push_back({});
    }
    out.class_of[i] = cls_index[root];
    out.members[out.class_of[i]].push_back(i);
  }

  // class order: some member pair below some member pair, componentwise
  const std::size_t k = out.members.size();
  for (std::uint32_t c = 0; c < k; ++c)
    for (std::uint32_t d = 0; d < k; ++d) {
      bool le = false;
      for (std::uint32_t i : out.members[c]) {
        for (std::uint32_t j : out.members[d])
          if (U.object_poset().leq(out.pairs[i].first, out.pairs[j].first) &&
              H.arrow_leq(out.pairs[i].second, out.pairs[j].second)) {
            le = true;
            break;
          }
        if (le) break;
      }
      if (le) out.relation.emplace_back(c, d);
    }
  for (auto [c, d] : out.relation)
    if (c != d &&
        std::find(out.relation.begin(), out.relation.end(), std::make_pair(d, c)) !=
            out.relation.end())
      out.antisymmetric = false;
  return out;
}

}  // namespace detail

std::uint32_t TensorPoset::pair_index(ObjectId e, ArrowId h) const {
  for (std::uint32_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].first == e && pairs[i].second == h) return i;
  throw invariant_error("tensor poset: unknown pullback pair");
}

ObjectId TensorPoset::moment(std::uint32_t c) const {
  return phi.target()->cod(pairs[rep[c]].second);
}

std::optional<std::uint32_t> TensorPoset::act(std::uint32_t c, ArrowId m) const {
  const auto& H = *phi.target();
  auto [e, h] = pairs[rep[c]];
  if (H.cod(h) != H.dom(m)) return std::nullopt;
  return class_of[pair_index(e, H.compose_req(h, m))];
}

TensorPoset tensor_poset(const OrderedFunctor& phi) {
  if (!star_class(phi).injective)
    throw domain_error("tensor poset requires a star-injective functor");
  detail::TensorRelation rel = detail::tensor_relation(phi);

  TensorPoset out;
  out.phi = phi;
  out.pairs = std::move(rel.pairs);
  out.class_of = std::move(rel.class_of);
  out.members = std::move(rel.members);
  out.rep.resize(out.members.size());
  for (std::uint32_t c = 0; c < out.members.size(); ++c) out.rep[c] = out.members[c].front();

  const auto& U = *phi.source();
  const auto& H = *phi.target();
  std::vector<std::string> names;
  for (std::uint32_t c = 0; c < out.rep.size(); ++c)
    names.push_back(U.object_name(out.pairs[out.rep[c]].first) + "(x)" +
                    H.arrow_name(out.pairs[out.rep[c]].second));
  try {
    out.poset = Poset::create(std::move(names), rel.relation);
  } catch (const domain_error& e) {
    throw invariant_error(std::string("tensor order is not a poset: ") + e.what());
  }

  // the action must not depend on the member used to compute it
  for (std::uint32_t c = 0; c < out.rep.size(); ++c)
    for (ArrowId m = 0; m < H.n_arrows(); ++m) {
      if (H.cod(out.pairs[out.rep[c]].second) != H.dom(m)) continue;
      auto first = out.act(c, m);
      for (std::uint32_t i : out.members[c]) {
        auto [e, h] = out.pairs[i];
        if (out.class_of[out.pair_index(e, H.compose_req(h, m))] != *first)
          throw invariant_error("tensor action is not well-defined on classes");
      }
    }
  return out;
}

MaximumEnlargement maximum_enlargement(const OrderedFunctor& phi) {
  MaximumEnlargement out;
  out.phi = phi;
  out.tensor = tensor_poset(phi);
  const auto& U = *phi.source();
  const auto& H = *phi.target();

  GroupoidPtr carrier = trivial_groupoid(out.tensor.poset);
  std::vector<ObjectId> moment(out.tensor.rep.size());
  for (std::uint32_t c = 0; c < out.tensor.rep.size(); ++c) moment[c] = out.tensor.moment(c);
  std::unordered_map<std::uint64_t, ArrowId> act;
  for (std::uint32_t c = 0; c < out.tensor.rep.size(); ++c)
    for (ArrowId m = 0; m < H.n_arrows(); ++m)
      if (auto r = out.tensor.act(c, m)) act[key64(c, m)] = *r;

  out.sdp = semidirect_product(
      make_action(phi.target(), std::move(carrier), std::move(moment), std::move(act)));

  std::vector<ArrowId> imap(U.n_arrows());
  for (ArrowId u = 0; u < U.n_arrows(); ++u)
    imap[u] = out.sdp.pair_of(phi(u), out.tensor.cls(U.dom(u), phi(u)));
  out.i = make_functor(phi.source(), out.sdp.g, std::move(imap));
  out.pi = out.sdp.projection;

  if (!is_ordered_embedding(out.i))
    throw invariant_error("maximum enlargement: i is not an ordered embedding");
  if (!star_class(out.pi).bijective())
    throw invariant_error("maximum enlargement: projection is not a covering");
  if (!(compose_functors(out.i, out.pi) == phi))
    throw invariant_error("maximum enlargement: phi does not factor as i ; pi");

  out.image.resize(U.n_arrows());
  for (ArrowId u = 0; u < U.n_arrows(); ++u) out.image[u] = out.i(u);
  std::sort(out.image.begin(), out.image.end());
  out.image.erase(std::unique(out.image.begin(), out.image.end()), out.image.end());
  out.witness = is_enlargement(*out.sdp.g, out.image);
  if (!out.witness.ok())
    throw invariant_error("maximum enlargement: Ui is not an enlargement: " +
                          out.witness.report.summary());
  return out;
}

UniversalMap universal_map(const MaximumEnlargement& me, const OrderedFunctor& j,
                           const OrderedFunctor& xi, SearchBudget& budget) {
  if (j.source() != me.phi.source() || xi.target() != me.phi.target() ||
      j.target() != xi.source())
    throw domain_error("universal_map: factorization shape mismatch");
  if (!is_ordered_embedding(j)) throw domain_error("universal_map: j is not an ordered embedding");
  if (!star_class(xi).bijective()) throw domain_error("universal_map: xi is not a covering");
  if (!(compose_functors(j, xi) == me.phi))
    throw domain_error("universal_map: j ; xi does not equal phi");

  const auto& C = *xi.source();
  const auto& H = *me.phi.target();
  const auto& Ht = *me.sdp.g;

  auto star_lift = [&](ObjectId x, ArrowId k) {
    ArrowId found = kNoArrow;
    for (ArrowId c : C.star(x))
      if (xi(c) == k) {
        if (found != kNoArrow) throw invariant_error("covering star lift not unique");
        found = c;
      }
    if (found == kNoArrow) throw invariant_error("covering star lift missing");
    return found;
  };

  std::vector<ArrowId> nu(Ht.n_arrows());
  for (ArrowId m = 0; m < Ht.n_arrows(); ++m) {
    auto [h, cls] = me.sdp.pairs[m];
    auto [e, k] = me.tensor.pairs[me.tensor.rep[cls]];
    ArrowId c = star_lift(j.obj(e), k);
    ObjectId y = C.cod(c);
    ArrowId q = C.inverse(star_lift(y, H.inverse(h)));
    nu[m] = q;
  }
  UniversalMap out;
  out.nu = make_functor(me.sdp.g, xi.source(), std::move(nu));
  if (!(compose_functors(me.i, out.nu) == j))
    throw invariant_error("universal map does not extend j");
  if (!(compose_functors(out.nu, xi) == me.pi))
    throw invariant_error("universal map does not cover pi");

  // bounded-exhaustive uniqueness: search all ordered functors that
  // satisfy both equations
  std::unordered_map<ArrowId, ArrowId> pinned;  // image arrow of i -> required image
  for (ArrowId u = 0; u < me.phi.source()->n_arrows(); ++u) pinned[me.i(u)] = j(u);
  auto candidates = [&](ArrowId m) {
    auto it = pinned.find(m);
    if (it != pinned.end()) return std::vector<ArrowId>{it->second};
    std::vector<ArrowId> cs;
    for (ArrowId c = 0; c < C.n_arrows(); ++c)
      if (xi(c) == me.pi(m)) cs.push_back(c);
    return cs;
  };
  auto all = enumerate_functors_constrained(me.sdp.g, xi.source(), candidates, budget, 2);
  std::size_t count = 0;
  for (const auto& f : all)
    if (compose_functors(me.i, f) == j && compose_functors(f, xi) == me.pi) ++count;
  out.unique = count == 1;
  if (count == 0) throw invariant_error("universal map search lost its own solution");
  return out;
}

TripleFactorization triple_factorization(const OrderedFunctor& phi) {
  TripleFactorization out;
  out.fact = factorize(phi);
  out.enl = maximum_enlargement(out.fact.psi);
  if (!star_class(out.fact.varpi).surjective)
    throw invariant_error("triple factorization: quotient map is not a fibration");
  OrderedFunctor composite =
      compose_functors(out.fact.varpi, compose_functors(out.enl.i, out.enl.pi));
  if (!(composite == phi))
    throw invariant_error("triple factorization does not compose to phi");
  return out;
}

}  // namespace ogpd
