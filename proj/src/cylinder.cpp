#include "ogpd/cylinder.hpp"

namespace ogpd {

Cylinder make_cylinder(GroupoidPtr a) {
  return {product(std::move(a), interval_groupoid())};
}

OrderedFunctor inclusion0(const Cylinder& cyl) {
  std::vector<ArrowId> map(cyl.base()->n_arrows());
  for (ArrowId a = 0; a < map.size(); ++a) map[a] = cyl.at0(a);
  return make_functor(cyl.base(), cyl.g(), std::move(map));
}

std::vector<ArrowId> iota_images(const Cylinder& cyl, const OrderedFunctor& f) {
  std::vector<ArrowId> out(cyl.base()->n_objects());
  for (ObjectId x = 0; x < out.size(); ++x) out[x] = f(cyl.iota(x));
  return out;
}

OrderedFunctor cylinder_functor(const Cylinder& cyl, const OrderedFunctor& f0,
                                const std::vector<ArrowId>& gs) {
  const auto& A = *cyl.base();
  const auto& T = *f0.target();
  if (f0.source() != cyl.base()) throw domain_error("cylinder functor: wrong base");
  if (gs.size() != A.n_objects()) throw domain_error("cylinder functor: one iota image per object");
  for (ObjectId x = 0; x < A.n_objects(); ++x)
    if (T.dom(gs[x]) != f0.obj(x))
      throw domain_error("cylinder functor: iota image at '" + A.object_name(x) +
                         "' has wrong domain");

  std::vector<ArrowId> map(cyl.g()->n_arrows());
  for (ArrowId a = 0; a < A.n_arrows(); ++a) {
    ArrowId base = f0(a);
    ArrowId gd = gs[A.dom(a)], gr = gs[A.cod(a)];
    map[cyl.prod.pair(a, kIntervalId0)] = base;
    map[cyl.prod.pair(a, kIntervalIota)] = T.compose_req(base, gr);
    map[cyl.prod.pair(a, kIntervalIotaInv)] = T.compose_req(T.inverse(gd), base);
    map[cyl.prod.pair(a, kIntervalId1)] =
        T.compose_req(T.inverse(gd), T.compose_req(base, gr));
  }
  return make_functor(cyl.g(), f0.target(), std::move(map));
}

HomotopySquare make_square(GroupoidPtr a, OrderedFunctor p, OrderedFunctor f,
                           const std::vector<ArrowId>& iota_imgs) {
  if (f.target() != p.source()) throw domain_error("square: f and p do not compose");
  if (f.source() != a) throw domain_error("square: f does not start at the base");
  HomotopySquare sq{make_cylinder(std::move(a)), std::move(p), std::move(f), {}};
  sq.F = cylinder_functor(sq.cyl, compose_functors(sq.f, sq.p), iota_imgs);
  if (!square_commutes(sq)) throw invariant_error("square does not commute");
  return sq;
}

bool square_commutes(const HomotopySquare& sq) {
  const auto& A = *sq.cyl.base();
  for (ArrowId a = 0; a < A.n_arrows(); ++a)
    if (sq.F(sq.cyl.at0(a)) != sq.p(sq.f(a))) return false;
  return true;
}

bool verify_lift(const HomotopySquare& sq, const OrderedFunctor& lift) {
  if (lift.source() != sq.cyl.g() || lift.target() != sq.p.source()) return false;
  if (!validate_functor(lift).passed) return false;
  const auto& A = *sq.cyl.base();
  for (ArrowId a = 0; a < A.n_arrows(); ++a)
    if (lift(sq.cyl.at0(a)) != sq.f(a)) return false;
  for (ArrowId m = 0; m < sq.cyl.g()->n_arrows(); ++m)
    if (sq.p(lift(m)) != sq.F(m)) return false;
  return true;
}

}  // namespace ogpd
