#include "ogpd/homotopy.hpp"

namespace ogpd {

namespace {

void lift_search(const HomotopySquare& sq, SearchBudget& budget, std::size_t max_count,
                 std::vector<OrderedFunctor>& out) {
  if (!square_commutes(sq)) throw domain_error("find_lift: square does not commute");
  const auto& A = *sq.cyl.base();
  const auto& G = *sq.p.source();
  std::vector<std::uint32_t> order = A.object_poset().linear_extension();
  std::vector<ArrowId> pick(A.n_objects(), kNoArrow);

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (out.size() >= max_count) return;
    if (k == order.size()) {
      OrderedFunctor lift = cylinder_functor(sq.cyl, sq.f, pick);
      if (!verify_lift(sq, lift))
        throw invariant_error("monotone selection did not verify as a lift");
      out.push_back(std::move(lift));
      return;
    }
    ObjectId x = order[k];
    ArrowId wanted = sq.F(sq.cyl.iota(x));
    for (ArrowId g : G.star(sq.f.obj(x))) {
      budget.charge("lift search");
      if (sq.p(g) != wanted) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        ObjectId y = order[j];
        if (A.object_poset().leq(y, x) && !G.arrow_leq(pick[y], g)) ok = false;
        if (A.object_poset().leq(x, y) && !G.arrow_leq(g, pick[y])) ok = false;
      }
      if (!ok) continue;
      pick[x] = g;
      rec(k + 1);
      pick[x] = kNoArrow;
      if (out.size() >= max_count) return;
    }
  };
  rec(0);
}

}  // namespace

std::optional<OrderedFunctor> find_lift(const HomotopySquare& sq, SearchBudget& budget) {
  std::vector<OrderedFunctor> out;
  lift_search(sq, budget, 1, out);
  if (out.empty()) return std::nullopt;
  return std::move(out.front());
}

std::vector<OrderedFunctor> find_all_lifts(const HomotopySquare& sq, SearchBudget& budget,
                                           std::size_t max_count) {
  std::vector<OrderedFunctor> out;
  lift_search(sq, budget, max_count, out);
  return out;
}

std::optional<ArrowId> path_lift(const OrderedFunctor& p, ObjectId e, ArrowId h) {
  const auto& G = *p.source();
  const auto& H = *p.target();
  if (H.dom(h) != p.obj(e)) throw domain_error("path_lift: arrow does not start under e");
  for (ArrowId g : G.star(e))
    if (p(g) == h) return g;
  return std::nullopt;
}

OrderedFunctor lift_covering(const HomotopySquare& sq) {
  if (!star_class(sq.p).bijective()) throw domain_error("lift_covering: p is not a covering");
  const auto& A = *sq.cyl.base();
  const auto& G = *sq.p.source();
  std::vector<ArrowId> gs(A.n_objects(), kNoArrow);
  for (ObjectId x = 0; x < A.n_objects(); ++x) {
    ArrowId wanted = sq.F(sq.cyl.iota(x));
    for (ArrowId g : G.star(sq.f.obj(x)))
      if (sq.p(g) == wanted) {
        if (gs[x] != kNoArrow) throw invariant_error("covering star lift not unique");
        gs[x] = g;
      }
    if (gs[x] == kNoArrow) throw invariant_error("covering star lift missing");
  }
  OrderedFunctor lift = cylinder_functor(sq.cyl, sq.f, gs);
  if (!verify_lift(sq, lift)) throw invariant_error("covering lift failed verification");
  return lift;
}

OrderedFunctor lift_through_immersion(
    const HomotopySquare& sq_pi, const OrderedFunctor& psi,
    const std::function<OrderedFunctor(const HomotopySquare&)>& certified_lifter) {
  if (!star_class(psi).injective)
    throw domain_error("lift_through_immersion: psi is not an immersion");
  if (sq_pi.p.target() != psi.source())
    throw domain_error("lift_through_immersion: psi does not extend p");
  HomotopySquare total{sq_pi.cyl, compose_functors(sq_pi.p, psi), sq_pi.f,
                       compose_functors(sq_pi.F, psi)};
  OrderedFunctor lift = certified_lifter(total);
  if (!verify_lift(sq_pi, lift))
    throw invariant_error("lift through immersion failed verification against pi");
  return lift;
}

}  // namespace ogpd
