#include "ogpd/enumerate.hpp"

#include <algorithm>

namespace ogpd {

namespace {

// Backtracking functor search.  Identities are assigned first (that
// fixes the object map), then remaining arrows in id order; inverses and
// composites of assigned arrows are forced immediately.
class FunctorSearch {
 public:
  FunctorSearch(const OrderedGroupoid& a, const OrderedGroupoid& b,
                const std::function<std::vector<ArrowId>(ArrowId)>* candidates,
                SearchBudget& budget)
      : a_(a), b_(b), candidates_(candidates), budget_(budget), img_(a.n_arrows(), kNoArrow) {
    for (ObjectId e = 0; e < a_.n_objects(); ++e) slots_.push_back(a_.identity(e));
    for (ArrowId x = 0; x < a_.n_arrows(); ++x)
      if (!a_.is_identity(x)) slots_.push_back(x);
    hom_.resize(b_.n_objects());
    for (auto& row : hom_) row.resize(b_.n_objects());
    for (ArrowId y = 0; y < b_.n_arrows(); ++y) hom_[b_.dom(y)][b_.cod(y)].push_back(y);
  }

  void run(std::size_t max_results, std::vector<std::vector<ArrowId>>& out) {
    max_results_ = max_results;
    out_ = &out;
    rec(0);
  }

 private:
  bool assign(ArrowId x, ArrowId y, std::vector<ArrowId>& trail) {
    if (img_[x] != kNoArrow) return img_[x] == y;
    if (a_.is_identity(x) && !b_.is_identity(y)) return false;
    img_[x] = y;
    trail.push_back(x);
    // endpoint identities are forced, which also pins the typing
    if (!assign(a_.identity(a_.dom(x)), b_.identity(b_.dom(y)), trail)) return false;
    if (!assign(a_.identity(a_.cod(x)), b_.identity(b_.cod(y)), trail)) return false;
    // order constraints against everything already assigned
    for (ArrowId lo : a_.down(x))
      if (img_[lo] != kNoArrow && !b_.arrow_leq(img_[lo], y)) return false;
    for (ArrowId hi : a_.up(x))
      if (img_[hi] != kNoArrow && !b_.arrow_leq(y, img_[hi])) return false;
    if (!assign(a_.inverse(x), b_.inverse(y), trail)) return false;
    // compositions with assigned partners force further images
    for (ArrowId z = 0; z < a_.n_arrows(); ++z) {
      if (img_[z] == kNoArrow) continue;
      if (auto c = a_.compose(x, z)) {
        auto cy = b_.compose(img_[x], img_[z]);
        if (!cy || !assign(*c, *cy, trail)) return false;
      }
      if (z == x) continue;
      if (auto c = a_.compose(z, x)) {
        auto cy = b_.compose(img_[z], img_[x]);
        if (!cy || !assign(*c, *cy, trail)) return false;
      }
    }
    return true;
  }

  ObjectId obj_img(ObjectId e) const {
    ArrowId i = img_[a_.identity(e)];
    return i == kNoArrow ? kNoObject : b_.dom(i);
  }

  void rec(std::size_t k) {
    if (out_->size() >= max_results_) return;
    while (k < slots_.size() && img_[slots_[k]] != kNoArrow) ++k;
    if (k == slots_.size()) {
      out_->push_back(img_);
      return;
    }
    ArrowId x = slots_[k];
    std::vector<ArrowId> cands;
    if (a_.is_identity(x)) {
      for (ObjectId e = 0; e < b_.n_objects(); ++e) cands.push_back(b_.identity(e));
    } else {
      ObjectId dx = obj_img(a_.dom(x)), cx = obj_img(a_.cod(x));
      cands = hom_[dx][cx];
    }
    if (candidates_ && *candidates_) {
      std::vector<ArrowId> allowed = (*candidates_)(x);
      std::sort(allowed.begin(), allowed.end());
      std::vector<ArrowId> merged;
      for (ArrowId y : cands)
        if (std::binary_search(allowed.begin(), allowed.end(), y)) merged.push_back(y);
      cands = std::move(merged);
    }
    for (ArrowId y : cands) {
      budget_.charge("functor enumeration");
      std::vector<ArrowId> trail;
      bool ok = assign(x, y, trail);
      if (ok) rec(k + 1);
      for (ArrowId t : trail) img_[t] = kNoArrow;
      if (out_->size() >= max_results_) return;
    }
  }

  const OrderedGroupoid& a_;
  const OrderedGroupoid& b_;
  const std::function<std::vector<ArrowId>(ArrowId)>* candidates_;
  SearchBudget& budget_;
  std::vector<ArrowId> img_;
  std::vector<ArrowId> slots_;
  std::vector<std::vector<std::vector<ArrowId>>> hom_;
  std::size_t max_results_ = static_cast<std::size_t>(-1);
  std::vector<std::vector<ArrowId>>* out_ = nullptr;
};

}  // namespace

std::vector<OrderedFunctor> enumerate_functors(GroupoidPtr a, GroupoidPtr b,
                                               SearchBudget& budget) {
  return enumerate_functors_constrained(std::move(a), std::move(b), nullptr, budget);
}

std::vector<OrderedFunctor> enumerate_functors_constrained(
    GroupoidPtr a, GroupoidPtr b,
    const std::function<std::vector<ArrowId>(ArrowId)>& candidates, SearchBudget& budget,
    std::size_t max_results) {
  std::vector<std::vector<ArrowId>> maps;
  FunctorSearch search(*a, *b, candidates ? &candidates : nullptr, budget);
  search.run(max_results, maps);
  std::sort(maps.begin(), maps.end());
  std::vector<OrderedFunctor> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.emplace_back(a, b, std::move(m));
  return out;
}

namespace {

// All ordered natural transformations from `from` to `to`, as component
// tables, in lexicographic order of components along a linear extension.
std::vector<std::vector<ArrowId>> enumerate_transformations(const OrderedFunctor& from,
                                                            const OrderedFunctor& to,
                                                            SearchBudget& budget) {
  const auto& A = *from.source();
  const auto& B = *from.target();
  std::vector<std::uint32_t> order = A.object_poset().linear_extension();
  std::vector<ArrowId> comp(A.n_objects(), kNoArrow);
  std::vector<std::vector<ArrowId>> out;

  // candidate components at x: hom_B(x.from, x.to)
  auto cands = [&](ObjectId x) {
    std::vector<ArrowId> cs;
    for (ArrowId c : B.star(from.obj(x)))
      if (B.cod(c) == to.obj(x)) cs.push_back(c);
    return cs;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      // full naturality check
      for (ArrowId a = 0; a < A.n_arrows(); ++a)
        if (B.compose_req(comp[A.dom(a)], to(a)) != B.compose_req(from(a), comp[A.cod(a)]))
          return;
      out.push_back(comp);
      return;
    }
    ObjectId x = order[k];
    for (ArrowId c : cands(x)) {
      budget.charge("transformation enumeration");
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        ObjectId y = order[j];
        if (A.object_poset().leq(y, x) && !B.arrow_leq(comp[y], c)) ok = false;
        if (A.object_poset().leq(x, y) && !B.arrow_leq(c, comp[y])) ok = false;
      }
      if (!ok) continue;
      comp[x] = c;
      rec(k + 1);
      comp[x] = kNoArrow;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<ObjectId> MappingGroupoid::object_of(const OrderedFunctor& f) const {
  auto it = object_index.find(f.map());
  if (it == object_index.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> MappingGroupoid::arrow_of(ObjectId from, ObjectId to,
                                                 const std::vector<ArrowId>& components) const {
  auto it = arrow_index.find({from, to, components});
  if (it == arrow_index.end()) return std::nullopt;
  return it->second;
}

MappingGroupoid mapping_groupoid(GroupoidPtr a, GroupoidPtr b, SearchBudget& budget) {
  MappingGroupoid out;
  out.source = a;
  out.target = b;
  out.objects = enumerate_functors(a, b, budget);
  const auto& A = *a;
  const auto& B = *b;
  const std::size_t n = out.objects.size();
  for (ObjectId i = 0; i < n; ++i) out.object_index[out.objects[i].map()] = i;

  // pointwise (arrowwise) order on functors
  auto functor_leq = [&](ObjectId i, ObjectId j) {
    for (ArrowId x = 0; x < A.n_arrows(); ++x)
      if (!B.arrow_leq(out.objects[i](x), out.objects[j](x))) return false;
    return true;
  };

  GroupoidData d;
  for (ObjectId i = 0; i < n; ++i) d.objects.push_back("F" + std::to_string(i));
  for (ObjectId i = 0; i < n; ++i)
    for (ObjectId j = 0; j < n; ++j)
      if (functor_leq(i, j)) d.object_leq.emplace_back(i, j);

  struct Tr {
    ObjectId from, to;
    std::vector<ArrowId> comp;
  };
  std::vector<Tr> trs;
  for (ObjectId i = 0; i < n; ++i)
    for (ObjectId j = 0; j < n; ++j)
      for (auto& comp : enumerate_transformations(out.objects[i], out.objects[j], budget))
        trs.push_back({i, j, std::move(comp)});

  d.identity.assign(n, kNoArrow);
  for (ArrowId t = 0; t < trs.size(); ++t) {
    d.arrows.push_back({"t" + std::to_string(t), trs[t].from, trs[t].to});
    out.arrow_index[{trs[t].from, trs[t].to, trs[t].comp}] = t;
    out.arrows.push_back({out.objects[trs[t].from], out.objects[trs[t].to], trs[t].comp});
  }
  for (ObjectId i = 0; i < n; ++i) {
    std::vector<ArrowId> idc(A.n_objects());
    for (ObjectId x = 0; x < A.n_objects(); ++x) idc[x] = B.identity(out.objects[i].obj(x));
    auto it = out.arrow_index.find({i, i, idc});
    if (it == out.arrow_index.end())
      throw invariant_error("mapping groupoid: identity transformation not enumerated");
    d.identity[i] = it->second;
  }
  d.inverse.resize(trs.size());
  for (ArrowId t = 0; t < trs.size(); ++t) {
    std::vector<ArrowId> inv(A.n_objects());
    for (ObjectId x = 0; x < A.n_objects(); ++x) inv[x] = B.inverse(trs[t].comp[x]);
    auto it = out.arrow_index.find({trs[t].to, trs[t].from, inv});
    if (it == out.arrow_index.end())
      throw invariant_error("mapping groupoid: inverse transformation not enumerated");
    d.inverse[t] = it->second;
  }
  for (ArrowId s = 0; s < trs.size(); ++s)
    for (ArrowId t = 0; t < trs.size(); ++t) {
      if (trs[s].to != trs[t].from) continue;
      std::vector<ArrowId> comp(A.n_objects());
      for (ObjectId x = 0; x < A.n_objects(); ++x)
        comp[x] = B.compose_req(trs[s].comp[x], trs[t].comp[x]);
      auto it = out.arrow_index.find({trs[s].from, trs[t].to, comp});
      if (it == out.arrow_index.end())
        throw invariant_error("mapping groupoid: composite transformation not enumerated");
      d.compose.push_back({s, t, it->second});
    }
  for (ArrowId s = 0; s < trs.size(); ++s)
    for (ArrowId t = 0; t < trs.size(); ++t) {
      if (!functor_leq(trs[s].from, trs[t].from) || !functor_leq(trs[s].to, trs[t].to)) continue;
      bool le = true;
      for (ObjectId x = 0; x < A.n_objects() && le; ++x)
        le = B.arrow_leq(trs[s].comp[x], trs[t].comp[x]);
      if (le) d.arrow_leq.emplace_back(s, t);
    }

  out.g = OrderedGroupoid::create(std::move(d));
  return out;
}

PostComposition post_compose(const OrderedFunctor& p, GroupoidPtr t, SearchBudget& budget) {
  PostComposition out;
  out.tg = mapping_groupoid(t, p.source(), budget);
  out.th = mapping_groupoid(t, p.target(), budget);
  std::vector<ArrowId> map(out.tg.g->n_arrows());
  for (ArrowId s = 0; s < out.tg.g->n_arrows(); ++s) {
    const NatTrans& tr = out.tg.arrows[s];
    OrderedFunctor from = compose_functors(tr.from, p);
    OrderedFunctor to = compose_functors(tr.to, p);
    auto fi = out.th.object_of(from), ti = out.th.object_of(to);
    if (!fi || !ti) throw invariant_error("post_compose: image functor not enumerated");
    std::vector<ArrowId> comp(tr.component.size());
    for (ObjectId x = 0; x < comp.size(); ++x) comp[x] = p(tr.component[x]);
    auto ai = out.th.arrow_of(*fi, *ti, comp);
    if (!ai) throw invariant_error("post_compose: image transformation not enumerated");
    map[s] = *ai;
  }
  out.pstar = make_functor(out.tg.g, out.th.g, std::move(map));
  return out;
}

Curried curry(const Product& ab, const OrderedFunctor& f, SearchBudget& budget) {
  if (f.source() != ab.g) throw domain_error("curry: functor does not live on the product");
  GroupoidPtr a = ab.left, b = ab.right;
  Curried out;
  out.ac = mapping_groupoid(a, f.target(), budget);
  const auto& B = *b;
  const auto& A = *a;

  auto slice = [&](ObjectId y) {
    std::vector<ArrowId> map(A.n_arrows());
    for (ArrowId x = 0; x < A.n_arrows(); ++x) map[x] = f(ab.pair(x, B.identity(y)));
    return map;
  };

  std::vector<ArrowId> map(B.n_arrows());
  for (ArrowId bb = 0; bb < B.n_arrows(); ++bb) {
    auto fi = out.ac.object_index.find(slice(B.dom(bb)));
    auto ti = out.ac.object_index.find(slice(B.cod(bb)));
    if (fi == out.ac.object_index.end() || ti == out.ac.object_index.end())
      throw invariant_error("curry: slice functor not enumerated");
    std::vector<ArrowId> comp(A.n_objects());
    for (ObjectId x = 0; x < A.n_objects(); ++x) comp[x] = f(ab.pair(A.identity(x), bb));
    auto ai = out.ac.arrow_of(fi->second, ti->second, comp);
    if (!ai) throw invariant_error("curry: slice transformation not enumerated");
    map[bb] = *ai;
  }
  out.functor = make_functor(b, out.ac.g, std::move(map));
  return out;
}

OrderedFunctor uncurry(const Product& ab, const MappingGroupoid& ac, const OrderedFunctor& g) {
  if (g.source() != ab.right || g.target() != ac.g)
    throw domain_error("uncurry: functor shape mismatch");
  const auto& A = *ab.left;
  const auto& B = *ab.right;
  const auto& C = *ac.target;
  std::vector<ArrowId> map(ab.g->n_arrows());
  for (ArrowId x = 0; x < A.n_arrows(); ++x)
    for (ArrowId y = 0; y < B.n_arrows(); ++y) {
      const NatTrans& tr = ac.arrows[g(y)];
      map[ab.pair(x, y)] = C.compose_req(tr.from(x), tr.component[A.cod(x)]);
    }
  return make_functor(ab.g, ac.target, std::move(map));
}

}  // namespace ogpd
