#include "ogpd/io.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "ogpd/action.hpp"

namespace ogpd {

using json = nlohmann::ordered_json;

namespace {

GroupoidData groupoid_from_json(const std::string& gname, const json& j) {
  GroupoidData d;
  std::map<std::string, ObjectId> objs;
  std::map<std::string, ArrowId> arrs;

  if (!j.contains("objects") || !j["objects"].is_array())
    throw parse_failure("groupoid '" + gname + "': missing objects array");
  for (const auto& o : j["objects"]) {
    std::string name = o.get<std::string>();
    if (objs.count(name)) throw parse_failure("duplicate object id '" + name + "'");
    objs[name] = static_cast<ObjectId>(d.objects.size());
    d.objects.push_back(name);
  }
  auto obj = [&](const std::string& name) {
    auto it = objs.find(name);
    if (it == objs.end()) throw parse_failure("unknown object id '" + name + "'");
    return it->second;
  };

  // identities come first and are never declared by hand
  for (ObjectId e = 0; e < d.objects.size(); ++e) {
    d.arrows.push_back({"id:" + d.objects[e], e, e});
    d.identity.push_back(e);
    arrs["id:" + d.objects[e]] = e;
  }
  for (const auto& a : j.value("arrows", json::array())) {
    std::string name = a.at("name").get<std::string>();
    if (name.rfind("id:", 0) == 0)
      throw parse_failure("arrow id '" + name + "' is reserved for identities");
    if (arrs.count(name)) throw parse_failure("duplicate arrow id '" + name + "'");
    arrs[name] = static_cast<ArrowId>(d.arrows.size());
    d.arrows.push_back({name, obj(a.at("dom").get<std::string>()),
                        obj(a.at("cod").get<std::string>())});
  }
  auto arr = [&](const std::string& name) {
    auto it = arrs.find(name);
    if (it == arrs.end()) throw parse_failure("unknown arrow id '" + name + "'");
    return it->second;
  };

  OrderPairs oleq;
  for (const auto& p : j.value("object_order", json::array()))
    oleq.emplace_back(obj(p.at(0).get<std::string>()), obj(p.at(1).get<std::string>()));
  d.object_leq = reflexive_transitive_closure(d.objects.size(), oleq);

  d.inverse.assign(d.arrows.size(), kNoArrow);
  for (ObjectId e = 0; e < d.objects.size(); ++e) d.inverse[e] = e;
  for (const auto& p : j.value("inverses", json::array())) {
    ArrowId a = arr(p.at(0).get<std::string>()), b = arr(p.at(1).get<std::string>());
    d.inverse[a] = b;
    d.inverse[b] = a;
  }
  for (ArrowId a = 0; a < d.arrows.size(); ++a)
    if (d.inverse[a] == kNoArrow)
      throw parse_failure("no inverse declared for arrow '" + d.arrows[a].name + "'");

  std::set<std::pair<ArrowId, ArrowId>> seen;
  auto add_comp = [&](ArrowId a, ArrowId b, ArrowId c) {
    if (seen.insert({a, b}).second) d.compose.push_back({a, b, c});
  };
  for (const auto& t : j.value("compose", json::array()))
    add_comp(arr(t.at(0).get<std::string>()), arr(t.at(1).get<std::string>()),
             arr(t.at(2).get<std::string>()));
  for (ArrowId a = 0; a < d.arrows.size(); ++a) {
    add_comp(d.identity[d.arrows[a].dom], a, a);
    add_comp(a, d.identity[d.arrows[a].cod], a);
  }

  OrderPairs aleq;
  for (const auto& p : j.value("arrow_order", json::array()))
    aleq.emplace_back(arr(p.at(0).get<std::string>()), arr(p.at(1).get<std::string>()));
  for (auto [lo, hi] : d.object_leq) aleq.emplace_back(d.identity[lo], d.identity[hi]);
  d.arrow_leq = reflexive_transitive_closure(d.arrows.size(), aleq);
  return d;
}

json groupoid_to_json(const GroupoidData& d) {
  json j;
  j["objects"] = json::array();
  for (const auto& name : d.objects) j["objects"].push_back(name);

  json oorder = json::array();
  for (auto [lo, hi] : d.object_leq)
    if (lo != hi) oorder.push_back({d.objects[lo], d.objects[hi]});
  j["object_order"] = oorder;

  std::vector<char> is_id(d.arrows.size(), 0);
  for (ObjectId e = 0; e < d.objects.size(); ++e) is_id[d.identity[e]] = 1;

  json arrows = json::array();
  for (ArrowId a = 0; a < d.arrows.size(); ++a) {
    if (is_id[a]) continue;
    arrows.push_back({{"name", d.arrows[a].name},
                      {"dom", d.objects[d.arrows[a].dom]},
                      {"cod", d.objects[d.arrows[a].cod]}});
  }
  j["arrows"] = arrows;

  json invs = json::array();
  for (ArrowId a = 0; a < d.arrows.size(); ++a)
    if (!is_id[a] && d.inverse[a] >= a)
      invs.push_back({d.arrows[a].name, d.arrows[d.inverse[a]].name});
  j["inverses"] = invs;

  json comp = json::array();
  for (const auto& t : d.compose) {
    if (is_id[t[0]] || is_id[t[1]]) continue;  // identity compositions are implied
    comp.push_back({d.arrows[t[0]].name, d.arrows[t[1]].name, d.arrows[t[2]].name});
  }
  j["compose"] = comp;

  json aorder = json::array();
  for (auto [lo, hi] : d.arrow_leq)
    if (lo != hi && !(is_id[lo] && is_id[hi]))
      aorder.push_back({d.arrows[lo].name, d.arrows[hi].name});
  j["arrow_order"] = aorder;
  return j;
}

}  // namespace

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_failure(std::string("syntax error: ") + e.what());
  }
  Document doc;
  const json empty = json::object();
  auto section = [&](const char* key) -> const json& {
    return j.contains(key) ? j[key] : empty;
  };
  try {
    for (const auto& [name, g] : section("groupoids").items())
      doc.groupoids.emplace_back(name, groupoid_from_json(name, g));
    for (const auto& [name, f] : section("functors").items()) {
      ParsedFunctor pf;
      pf.source = f.at("source").get<std::string>();
      pf.target = f.at("target").get<std::string>();
      for (const auto& [k, v] : f.at("map").items()) pf.map.emplace_back(k, v.get<std::string>());
      doc.functors[name] = std::move(pf);
    }
    for (const auto& [name, s] : section("subgroupoids").items()) {
      ParsedSubgroupoid ps;
      ps.parent = s.at("parent").get<std::string>();
      for (const auto& a : s.at("arrows")) ps.arrows.push_back(a.get<std::string>());
      doc.subgroupoids[name] = std::move(ps);
    }
    for (const auto& [name, a] : section("actions").items()) {
      ParsedAction pa;
      pa.actor = a.at("actor").get<std::string>();
      pa.carrier = a.at("carrier").get<std::string>();
      for (const auto& [k, v] : a.at("moment").items()) pa.moment.emplace_back(k, v.get<std::string>());
      for (const auto& t : a.at("act"))
        pa.act.push_back({t.at(0).get<std::string>(), t.at(1).get<std::string>(),
                          t.at(2).get<std::string>()});
      doc.actions[name] = std::move(pa);
    }
    for (const auto& [name, s] : section("squares").items()) {
      ParsedSquare ps;
      ps.base = s.at("base").get<std::string>();
      ps.p = s.at("p").get<std::string>();
      ps.f = s.at("f").get<std::string>();
      for (const auto& [k, v] : s.at("iota").items()) ps.iota.emplace_back(k, v.get<std::string>());
      doc.squares[name] = std::move(ps);
    }
  } catch (const nlohmann::json::exception& e) {
    throw parse_failure(std::string("malformed document: ") + e.what());
  }
  return doc;
}

std::string serialize_document(const Document& doc) {
  json j;
  json gs = json::object();
  for (const auto& [name, g] : doc.groupoids) gs[name] = groupoid_to_json(g);
  j["groupoids"] = gs;
  if (!doc.functors.empty()) {
    json fs = json::object();
    for (const auto& [name, f] : doc.functors) {
      json map = json::object();
      for (const auto& [k, v] : f.map) map[k] = v;
      fs[name] = {{"source", f.source}, {"target", f.target}, {"map", map}};
    }
    j["functors"] = fs;
  }
  if (!doc.subgroupoids.empty()) {
    json ss = json::object();
    for (const auto& [name, s] : doc.subgroupoids)
      ss[name] = {{"parent", s.parent}, {"arrows", s.arrows}};
    j["subgroupoids"] = ss;
  }
  if (!doc.actions.empty()) {
    json as = json::object();
    for (const auto& [name, a] : doc.actions) {
      json moment = json::object();
      for (const auto& [k, v] : a.moment) moment[k] = v;
      json act = json::array();
      for (const auto& t : a.act) act.push_back({t[0], t[1], t[2]});
      as[name] = {{"actor", a.actor}, {"carrier", a.carrier}, {"moment", moment}, {"act", act}};
    }
    j["actions"] = as;
  }
  if (!doc.squares.empty()) {
    json sq = json::object();
    for (const auto& [name, s] : doc.squares) {
      json iota = json::object();
      for (const auto& [k, v] : s.iota) iota[k] = v;
      sq[name] = {{"base", s.base}, {"p", s.p}, {"f", s.f}, {"iota", iota}};
    }
    j["squares"] = sq;
  }
  return j.dump(2) + "\n";
}

ResolvedGroupoids resolve_groupoids(const Document& doc) {
  ResolvedGroupoids out;
  for (const auto& [name, data] : doc.groupoids) {
    ValidationReport rep = validate_ogpd(data);
    out.reports.emplace_back(name, rep);
    if (rep.passed) out.by_name[name] = OrderedGroupoid::create(data);
  }
  return out;
}

GroupoidPtr require_groupoid(const ResolvedGroupoids& rg, const std::string& name) {
  auto it = rg.by_name.find(name);
  if (it == rg.by_name.end())
    throw parse_failure("groupoid '" + name + "' is missing or failed validation");
  return it->second;
}

OrderedFunctor resolve_functor(const Document& doc, const ResolvedGroupoids& rg,
                               const std::string& name) {
  auto it = doc.functors.find(name);
  if (it == doc.functors.end()) throw parse_failure("unknown functor '" + name + "'");
  GroupoidPtr src = require_groupoid(rg, it->second.source);
  GroupoidPtr tgt = require_groupoid(rg, it->second.target);
  std::vector<ArrowId> map(src->n_arrows(), kNoArrow);
  for (const auto& [from, to] : it->second.map) {
    auto a = src->arrow_by_name(from);
    auto b = tgt->arrow_by_name(to);
    if (!a) throw parse_failure("functor '" + name + "': unknown source arrow '" + from + "'");
    if (!b) throw parse_failure("functor '" + name + "': unknown target arrow '" + to + "'");
    map[*a] = *b;
  }
  for (ArrowId a = 0; a < map.size(); ++a)
    if (map[a] == kNoArrow)
      throw parse_failure("functor '" + name + "': no image for arrow '" + src->arrow_name(a) +
                          "'");
  return make_functor(std::move(src), std::move(tgt), std::move(map));
}

std::vector<ArrowId> resolve_subgroupoid(const Document& doc, const ResolvedGroupoids& rg,
                                         const std::string& name, GroupoidPtr* parent) {
  auto it = doc.subgroupoids.find(name);
  if (it == doc.subgroupoids.end()) throw parse_failure("unknown subgroupoid '" + name + "'");
  GroupoidPtr g = require_groupoid(rg, it->second.parent);
  std::vector<ArrowId> arrows;
  for (const auto& an : it->second.arrows) {
    auto a = g->arrow_by_name(an);
    if (!a) throw parse_failure("subgroupoid '" + name + "': unknown arrow '" + an + "'");
    arrows.push_back(*a);
  }
  if (parent) *parent = g;
  return arrows;
}

GroupoidAction resolve_action(const Document& doc, const ResolvedGroupoids& rg,
                              const std::string& name) {
  auto it = doc.actions.find(name);
  if (it == doc.actions.end()) throw parse_failure("unknown action '" + name + "'");
  GroupoidPtr actor = require_groupoid(rg, it->second.actor);
  GroupoidPtr carrier = require_groupoid(rg, it->second.carrier);

  std::vector<ObjectId> moment(carrier->n_arrows(), kNoObject);
  for (const auto& [an, on] : it->second.moment) {
    auto a = carrier->arrow_by_name(an);
    auto e = actor->object_by_name(on);
    if (!a) throw parse_failure("action '" + name + "': unknown carrier arrow '" + an + "'");
    if (!e) throw parse_failure("action '" + name + "': unknown actor object '" + on + "'");
    moment[*a] = *e;
  }
  for (ArrowId a = 0; a < moment.size(); ++a)
    if (moment[a] == kNoObject)
      throw parse_failure("action '" + name + "': no moment for arrow '" +
                          carrier->arrow_name(a) + "'");

  std::unordered_map<std::uint64_t, ArrowId> act;
  for (const auto& t : it->second.act) {
    auto a = carrier->arrow_by_name(t[0]);
    auto g = actor->arrow_by_name(t[1]);
    auto r = carrier->arrow_by_name(t[2]);
    if (!a || !g || !r)
      throw parse_failure("action '" + name + "': unknown arrow in entry ('" + t[0] + "','" +
                          t[1] + "','" + t[2] + "')");
    act[key64(*a, *g)] = *r;
  }
  try {
    return make_action(std::move(actor), std::move(carrier), std::move(moment), std::move(act));
  } catch (const domain_error& e) {
    throw parse_failure("action '" + name + "': " + e.what());
  }
}

HomotopySquare resolve_square(const Document& doc, const ResolvedGroupoids& rg,
                              const std::string& name) {
  auto it = doc.squares.find(name);
  if (it == doc.squares.end()) throw parse_failure("unknown square '" + name + "'");
  GroupoidPtr base = require_groupoid(rg, it->second.base);
  OrderedFunctor p = resolve_functor(doc, rg, it->second.p);
  OrderedFunctor f = resolve_functor(doc, rg, it->second.f);
  if (f.source() != base) throw parse_failure("square '" + name + "': f does not start at base");
  std::vector<ArrowId> iota(base->n_objects(), kNoArrow);
  for (const auto& [on, an] : it->second.iota) {
    auto x = base->object_by_name(on);
    auto h = p.target()->arrow_by_name(an);
    if (!x) throw parse_failure("square '" + name + "': unknown base object '" + on + "'");
    if (!h) throw parse_failure("square '" + name + "': unknown target arrow '" + an + "'");
    iota[*x] = *h;
  }
  for (ObjectId x = 0; x < iota.size(); ++x)
    if (iota[x] == kNoArrow)
      throw parse_failure("square '" + name + "': no iota image for object '" +
                          base->object_name(x) + "'");
  try {
    return make_square(base, std::move(p), std::move(f), iota);
  } catch (const error& e) {
    throw parse_failure("square '" + name + "': " + e.what());
  }
}

}  // namespace ogpd
