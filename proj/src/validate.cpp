#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "ogpd/groupoid.hpp"

namespace ogpd {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::structure: return "structure";
    case Axiom::object_poset: return "object-poset";
    case Axiom::arrow_order: return "arrow-order";
    case Axiom::category: return "category";
    case Axiom::inverses: return "inverses";
    case Axiom::order_agreement: return "order-agreement";
    case Axiom::og1: return "OG1";
    case Axiom::og2: return "OG2";
    case Axiom::og3_existence: return "OG3-existence";
    case Axiom::og3_uniqueness: return "OG3-uniqueness";
    case Axiom::sub_wide: return "wide";
    case Axiom::sub_closed: return "closed";
    case Axiom::sub_restriction: return "restriction-closed";
    case Axiom::sub_conjugation: return "conjugation";
    case Axiom::act_typing: return "action-typing";
    case Axiom::act_chain: return "action-chain";
    case Axiom::act_product: return "action-product";
    case Axiom::act_unit: return "action-unit";
    case Axiom::act_monotone: return "action-monotone";
    case Axiom::enl_ideal: return "order-ideal";
    case Axiom::enl_full: return "fullness";
    case Axiom::enl_connected: return "connectivity";
  }
  return "?";
}

void ValidationReport::add(Axiom a, std::string detail, std::vector<ArrowId> witnesses) {
  if (has(a)) return;  // first witness per axiom only
  passed = false;
  violations.push_back({a, std::move(detail), std::move(witnesses)});
}

bool ValidationReport::has(Axiom a) const {
  for (const auto& v : violations)
    if (v.axiom == a) return true;
  return false;
}

std::string ValidationReport::summary() const {
  if (passed) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += axiom_name(v.axiom);
    out += ": ";
    out += v.detail;
  }
  return out;
}

namespace {

bool structural_scan(const GroupoidData& d, ValidationReport& rep) {
  const std::size_t n = d.n_objects(), m = d.n_arrows();
  std::unordered_set<std::string> seen;
  for (const auto& name : d.objects)
    if (!seen.insert(name).second) {
      rep.add(Axiom::structure, "duplicate object name '" + name + "'");
      return false;
    }
  seen.clear();
  for (const auto& a : d.arrows)
    if (!seen.insert(a.name).second) {
      rep.add(Axiom::structure, "duplicate arrow name '" + a.name + "'");
      return false;
    }
  for (ArrowId a = 0; a < m; ++a)
    if (d.arrows[a].dom >= n || d.arrows[a].cod >= n) {
      rep.add(Axiom::structure, "arrow '" + d.arrows[a].name + "' references unknown object", {a});
      return false;
    }
  if (d.identity.size() != n) {
    rep.add(Axiom::structure, "identity table size mismatch");
    return false;
  }
  for (ObjectId e = 0; e < n; ++e) {
    ArrowId i = d.identity[e];
    if (i >= m || d.arrows[i].dom != e || d.arrows[i].cod != e) {
      rep.add(Axiom::structure, "identity of object '" + d.objects[e] + "' is ill-typed");
      return false;
    }
  }
  if (d.inverse.size() != m) {
    rep.add(Axiom::structure, "inverse table size mismatch");
    return false;
  }
  for (ArrowId a = 0; a < m; ++a) {
    ArrowId b = d.inverse[a];
    if (b >= m || d.arrows[b].dom != d.arrows[a].cod || d.arrows[b].cod != d.arrows[a].dom) {
      rep.add(Axiom::structure, "inverse of arrow '" + d.arrows[a].name + "' is ill-typed", {a});
      return false;
    }
  }
  std::unordered_set<std::uint64_t> keys;
  for (const auto& t : d.compose) {
    if (t[0] >= m || t[1] >= m || t[2] >= m) {
      rep.add(Axiom::structure, "composition entry references unknown arrow");
      return false;
    }
    if (!keys.insert(key64(t[0], t[1])).second) {
      rep.add(Axiom::structure, "composition table is not single-valued at ('" +
                                    d.arrows[t[0]].name + "','" + d.arrows[t[1]].name + "')",
              {t[0], t[1]});
      return false;
    }
  }
  for (auto [lo, hi] : d.object_leq)
    if (lo >= n || hi >= n) {
      rep.add(Axiom::structure, "object order pair references unknown object");
      return false;
    }
  for (auto [lo, hi] : d.arrow_leq)
    if (lo >= m || hi >= m) {
      rep.add(Axiom::structure, "arrow order pair references unknown arrow");
      return false;
    }
  return true;
}

}  // namespace

ValidationReport validate_ogpd(const GroupoidData& d) {
  ValidationReport rep;
  if (!structural_scan(d, rep)) return rep;

  const std::size_t n = d.n_objects(), m = d.n_arrows();
  auto name = [&](ArrowId a) { return d.arrows[a].name; };

  if (PosetCheck chk = check_poset(n, d.object_leq); !chk.ok)
    rep.add(Axiom::object_poset, chk.what);
  if (PosetCheck chk = check_poset(m, d.arrow_leq); !chk.ok)
    rep.add(Axiom::arrow_order, chk.what);

  BitRel oleq(n), leq(m);
  for (auto [lo, hi] : d.object_leq) oleq.set(lo, hi);
  for (auto [lo, hi] : d.arrow_leq) leq.set(lo, hi);

  // Object order must agree with the arrow order on identities.
  for (ObjectId e = 0; e < n && !rep.has(Axiom::order_agreement); ++e)
    for (ObjectId f = 0; f < n; ++f)
      if (oleq.get(e, f) != leq.get(d.identity[e], d.identity[f])) {
        rep.add(Axiom::order_agreement,
                "objects '" + d.objects[e] + "','" + d.objects[f] +
                    "' disagree with their identity arrows",
                {d.identity[e], d.identity[f]});
        break;
      }

  std::unordered_map<std::uint64_t, ArrowId> comp;
  for (const auto& t : d.compose) comp[key64(t[0], t[1])] = t[2];
  auto get = [&](ArrowId a, ArrowId b) -> ArrowId {
    auto it = comp.find(key64(a, b));
    return it == comp.end() ? kNoArrow : it->second;
  };

  // Composition defined exactly on cod/dom matches, with correct typing.
  for (ArrowId a = 0; a < m && !rep.has(Axiom::category); ++a)
    for (ArrowId b = 0; b < m; ++b) {
      ArrowId c = get(a, b);
      bool matches = d.arrows[a].cod == d.arrows[b].dom;
      if (matches && c == kNoArrow) {
        rep.add(Axiom::category,
                "composition of '" + name(a) + "' and '" + name(b) + "' is missing", {a, b});
        break;
      }
      if (!matches && c != kNoArrow) {
        rep.add(Axiom::category,
                "composition of '" + name(a) + "' and '" + name(b) + "' should be undefined",
                {a, b});
        break;
      }
      if (c != kNoArrow &&
          (d.arrows[c].dom != d.arrows[a].dom || d.arrows[c].cod != d.arrows[b].cod)) {
        rep.add(Axiom::category, "composite '" + name(c) + "' is ill-typed", {a, b, c});
        break;
      }
    }

  if (!rep.has(Axiom::category)) {
    for (ArrowId a = 0; a < m; ++a) {
      ArrowId l = get(d.identity[d.arrows[a].dom], a);
      ArrowId r = get(a, d.identity[d.arrows[a].cod]);
      if (l != a || r != a) {
        rep.add(Axiom::category, "identity is not neutral at '" + name(a) + "'", {a});
        break;
      }
    }
  }
  if (!rep.has(Axiom::category)) {
    // Associativity over every defined triple.
    for (const auto& t : d.compose) {
      ArrowId a = t[0], b = t[1], ab = t[2];
      bool bad = false;
      for (ArrowId c = 0; c < m; ++c) {
        if (d.arrows[c].dom != d.arrows[b].cod) continue;
        ArrowId bc = get(b, c);
        if (bc == kNoArrow || get(ab, c) != get(a, bc)) {
          rep.add(Axiom::category,
                  "associativity fails on ('" + name(a) + "','" + name(b) + "','" + name(c) + "')",
                  {a, b, c});
          bad = true;
          break;
        }
      }
      if (bad) break;
    }
  }

  for (ArrowId a = 0; a < m; ++a) {
    ArrowId inv = d.inverse[a];
    if (get(a, inv) != d.identity[d.arrows[a].dom] || get(inv, a) != d.identity[d.arrows[a].cod]) {
      rep.add(Axiom::inverses, "'" + name(a) + "' fails the inverse laws", {a});
      break;
    }
  }

  // OG1: inversion is monotone.
  for (auto [lo, hi] : d.arrow_leq)
    if (!leq.get(d.inverse[lo], d.inverse[hi])) {
      rep.add(Axiom::og1, "'" + name(lo) + "' <= '" + name(hi) + "' but inverses are not",
              {lo, hi});
      break;
    }

  // OG2: bucket order pairs by cod endpoints, then match dom endpoints.
  {
    std::unordered_map<std::uint64_t, std::vector<std::pair<ArrowId, ArrowId>>> by_cod;
    for (auto [lo, hi] : d.arrow_leq)
      by_cod[key64(d.arrows[lo].cod, d.arrows[hi].cod)].emplace_back(lo, hi);
    bool done = false;
    for (auto [lo2, hi2] : d.arrow_leq) {
      if (done) break;
      auto it = by_cod.find(key64(d.arrows[lo2].dom, d.arrows[hi2].dom));
      if (it == by_cod.end()) continue;
      for (auto [lo1, hi1] : it->second) {
        ArrowId c1 = get(lo1, lo2), c2 = get(hi1, hi2);
        if (c1 == kNoArrow || c2 == kNoArrow) continue;  // category axiom reports this
        if (!leq.get(c1, c2)) {
          rep.add(Axiom::og2,
                  "products of ('" + name(lo1) + "'<='" + name(hi1) + "') and ('" + name(lo2) +
                      "'<='" + name(hi2) + "') are not ordered",
                  {lo1, hi1, lo2, hi2});
          done = true;
          break;
        }
      }
    }
  }

  // OG3: each identity below dom(g) admits exactly one restriction.
  {
    std::vector<std::vector<ArrowId>> down(m);
    for (auto [lo, hi] : d.arrow_leq) down[hi].push_back(lo);
    bool done = false;
    for (ArrowId g = 0; g < m && !done; ++g) {
      for (ObjectId f = 0; f < n; ++f) {
        if (!oleq.get(f, d.arrows[g].dom)) continue;
        int count = 0;
        for (ArrowId h : down[g])
          if (d.arrows[h].dom == f) ++count;
        if (count == 0) {
          rep.add(Axiom::og3_existence,
                  "no restriction of '" + name(g) + "' to '" + d.objects[f] + "'", {g});
          done = true;
          break;
        }
        if (count > 1) {
          rep.add(Axiom::og3_uniqueness,
                  "several restrictions of '" + name(g) + "' to '" + d.objects[f] + "'", {g});
          done = true;
          break;
        }
      }
    }
  }

  return rep;
}

}  // namespace ogpd
