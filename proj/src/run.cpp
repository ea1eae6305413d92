#include "ogpd/run.hpp"

#include <fstream>
#include <sstream>

#include "ogpd/cocylinder.hpp"
#include "ogpd/dot.hpp"
#include "ogpd/enlargement.hpp"
#include "ogpd/fixtures.hpp"
#include "ogpd/homotopy.hpp"
#include "ogpd/io.hpp"
#include "ogpd/random_gen.hpp"

namespace ogpd {

using json = nlohmann::ordered_json;

std::string digest_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_failure("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json star_class_json(const StarClass& sc) {
  return {{"surjective", sc.surjective},
          {"injective", sc.injective},
          {"fibration", sc.surjective},
          {"immersion", sc.injective},
          {"covering", sc.surjective && sc.injective}};
}

json report_json(const ValidationReport& rep) {
  json v = json::array();
  for (const auto& viol : rep.violations)
    v.push_back({{"axiom", axiom_name(viol.axiom)}, {"detail", viol.detail}});
  return {{"passed", rep.passed}, {"violations", v}};
}

void maybe_write_dot(const RunOptions& opts, const std::string& dot) {
  if (opts.dot_path.empty()) return;
  std::ofstream out(opts.dot_path, std::ios::binary);
  if (!out) throw parse_failure("cannot write '" + opts.dot_path + "'");
  out << dot;
}

struct LoadedFile {
  Document doc;
  ResolvedGroupoids rg;
  std::string digest;
};

LoadedFile load(const std::string& path) {
  LoadedFile lf;
  std::string bytes = slurp(path);
  lf.digest = digest_hex(bytes);
  lf.doc = parse_document(bytes);
  lf.rg = resolve_groupoids(lf.doc);
  return lf;
}

RunReport cmd_validate(const std::vector<std::string>& args, const RunOptions& opts) {
  RunReport out;
  out.command = "validate";
  LoadedFile lf = load(args.at(0));
  json gs = json::object();
  bool all = true;
  std::string only = args.size() > 1 ? args[1] : "";
  std::ostringstream human;
  for (const auto& [name, rep] : lf.rg.reports) {
    if (!only.empty() && name != only) continue;
    gs[name] = report_json(rep);
    all = all && rep.passed;
    human << name << ": " << (rep.passed ? "valid ordered groupoid" : rep.summary()) << "\n";
  }
  if (!only.empty() && !gs.contains(only)) throw parse_failure("unknown groupoid '" + only + "'");
  out.verdict = {{"command", "validate"}, {"input", lf.digest}, {"groupoids", gs}};

  // with no name filter, the other declared structures are checked too
  if (only.empty()) {
    auto check_items = [&](const char* section, auto names, auto resolver) {
      json items = json::object();
      for (const auto& name : names) {
        try {
          resolver(name);
          items[name] = {{"ok", true}};
          human << section << " " << name << ": ok\n";
        } catch (const error& e) {
          items[name] = {{"ok", false}, {"error", e.what()}};
          human << section << " " << name << ": " << e.what() << "\n";
          all = false;
        }
      }
      if (!items.empty()) out.verdict[section] = items;
    };
    std::vector<std::string> fnames, anames, sqnames;
    for (const auto& [n, _] : lf.doc.functors) fnames.push_back(n);
    for (const auto& [n, _] : lf.doc.actions) anames.push_back(n);
    for (const auto& [n, _] : lf.doc.squares) sqnames.push_back(n);
    check_items("functors", fnames,
                [&](const std::string& n) { resolve_functor(lf.doc, lf.rg, n); });
    check_items("actions", anames,
                [&](const std::string& n) { resolve_action(lf.doc, lf.rg, n); });
    check_items("squares", sqnames,
                [&](const std::string& n) { resolve_square(lf.doc, lf.rg, n); });
  }

  out.verdict["ok"] = all;
  out.status = all ? 0 : 1;
  out.human = human.str();
  if (!opts.dot_path.empty() && !lf.rg.by_name.empty())
    maybe_write_dot(opts, to_dot(*lf.rg.by_name.begin()->second, lf.rg.by_name.begin()->first));
  return out;
}

RunReport cmd_classify(const std::vector<std::string>& args, const RunOptions& opts) {
  RunReport out;
  out.command = "classify";
  LoadedFile lf = load(args.at(0));
  OrderedFunctor f = resolve_functor(lf.doc, lf.rg, args.at(1));
  StarClass sc = star_class(f);
  out.verdict = {{"command", "classify"},
                 {"input", lf.digest},
                 {"functor", args.at(1)},
                 {"star_class", star_class_json(sc)}};
  std::ostringstream human;
  human << args.at(1) << ": " << (sc.surjective ? "fibration" : "not star-surjective") << ", "
        << (sc.injective ? "immersion" : "not star-injective");
  if (sc.bijective()) human << " (covering)";
  human << "\n";
  out.human = human.str();
  maybe_write_dot(opts, to_dot(f));
  return out;
}

RunReport cmd_quotient(const std::vector<std::string>& args, const RunOptions& opts) {
  RunReport out;
  out.command = "quotient";
  LoadedFile lf = load(args.at(0));
  GroupoidPtr parent;
  std::vector<ArrowId> sub = resolve_subgroupoid(lf.doc, lf.rg, args.at(1), &parent);
  ValidationReport rep = is_normal(*parent, sub);
  if (!rep.passed) {
    out.verdict = {{"command", "quotient"},
                   {"input", lf.digest},
                   {"subgroupoid", args.at(1)},
                   {"normal", report_json(rep)}};
    out.status = 1;
    out.human = "not a normal ordered subgroupoid: " + rep.summary() + "\n";
    return out;
  }
  QuotientGroupoid q = quotient(parent, sub);
  out.verdict = {{"command", "quotient"},
                 {"input", lf.digest},
                 {"subgroupoid", args.at(1)},
                 {"normal", report_json(rep)},
                 {"objects", q.g->n_objects()},
                 {"arrows", q.g->n_arrows()},
                 {"inductive", is_inductive(*q.g)},
                 {"varpi_star_surjective", star_class(q.varpi).surjective}};
  std::ostringstream human;
  human << "quotient has " << q.g->n_objects() << " objects and " << q.g->n_arrows()
        << " arrows; inductive: " << (is_inductive(*q.g) ? "true" : "false") << "\n";
  out.human = human.str();
  maybe_write_dot(opts, to_dot(*q.g, "quotient"));
  return out;
}

RunReport cmd_factorize(const std::vector<std::string>& args, const RunOptions& opts) {
  RunReport out;
  out.command = "factorize";
  LoadedFile lf = load(args.at(0));
  OrderedFunctor theta = resolve_functor(lf.doc, lf.rg, args.at(1));
  Factorization fact = factorize(theta);
  StarClass sc = star_class(fact.psi);
  out.verdict = {{"command", "factorize"},
                 {"input", lf.digest},
                 {"functor", args.at(1)},
                 {"quotient_arrows", fact.q.g->n_arrows()},
                 {"psi_star_class", star_class_json(sc)}};
  std::ostringstream human;
  human << args.at(1) << " = varpi ; psi with psi star-injective; psi is "
        << (sc.bijective() ? "a covering" : sc.surjective ? "a fibration" : "an immersion")
        << "\n";
  out.human = human.str();
  maybe_write_dot(opts, to_dot(fact));
  return out;
}

RunReport cmd_enlarge(const std::vector<std::string>& args, const RunOptions& opts) {
  RunReport out;
  out.command = "enlarge";
  LoadedFile lf = load(args.at(0));
  OrderedFunctor phi = resolve_functor(lf.doc, lf.rg, args.at(1));
  if (!star_class(phi).injective) {
    out.verdict = {{"command", "enlarge"},
                   {"input", lf.digest},
                   {"functor", args.at(1)},
                   {"star_injective", false}};
    out.status = 1;
    out.human = args.at(1) + " is not star-injective; no maximum enlargement\n";
    return out;
  }
  MaximumEnlargement me = maximum_enlargement(phi);
  out.verdict = {{"command", "enlarge"},
                 {"input", lf.digest},
                 {"functor", args.at(1)},
                 {"star_injective", true},
                 {"tensor_classes", me.tensor.rep.size()},
                 {"enlargement_objects", me.sdp.g->n_objects()},
                 {"enlargement_arrows", me.sdp.g->n_arrows()},
                 {"witness_ok", me.witness.ok()},
                 {"projection_covering", star_class(me.pi).bijective()}};
  std::ostringstream human;
  human << "maximum enlargement has " << me.sdp.g->n_objects() << " objects and "
        << me.sdp.g->n_arrows() << " arrows; projection is a covering\n";
  out.human = human.str();
  maybe_write_dot(opts, to_dot(*me.sdp.g, "enlargement"));
  return out;
}

RunReport cmd_cocylinder(const std::vector<std::string>& args, const RunOptions& opts) {
  RunReport out;
  out.command = "cocylinder";
  LoadedFile lf = load(args.at(0));
  OrderedFunctor phi = resolve_functor(lf.doc, lf.rg, args.at(1));
  FibrationPipeline pipe = fibration_theorem_pipeline(phi);
  out.verdict = {{"command", "cocylinder"},
                 {"input", lf.digest},
                 {"functor", args.at(1)},
                 {"cocylinder_objects", pipe.cocyl.m->n_objects()},
                 {"cocylinder_arrows", pipe.cocyl.m->n_arrows()},
                 {"enlargement_ok", pipe.enlargement.ok()},
                 {"p_phi_fibration", star_class(pipe.cocyl.p_phi).surjective},
                 {"psi_covering", star_class(pipe.fact.psi).bijective()},
                 {"derived_arrows", pipe.der.g->n_arrows()},
                 {"q_on_derived_covering", star_class(pipe.q_restricted).bijective()}};
  std::ostringstream human;
  human << "M^phi has " << pipe.cocyl.m->n_objects() << " objects and "
        << pipe.cocyl.m->n_arrows()
        << " arrows; enlargement, fibration and covering stages all verified\n";
  out.human = human.str();
  maybe_write_dot(opts, to_dot(*pipe.cocyl.m, "cocylinder"));
  return out;
}

RunReport cmd_lift(const std::vector<std::string>& args, const RunOptions& opts) {
  RunReport out;
  out.command = "lift";
  LoadedFile lf = load(args.at(0));
  HomotopySquare sq = resolve_square(lf.doc, lf.rg, args.at(1));
  SearchBudget budget{opts.budget};
  auto lift = find_lift(sq, budget);
  json verdict = {{"command", "lift"},
                  {"input", lf.digest},
                  {"square", args.at(1)},
                  {"lift_exists", lift.has_value()}};
  if (lift) {
    json imgs = json::object();
    const auto& A = *sq.cyl.base();
    for (ObjectId x = 0; x < A.n_objects(); ++x)
      imgs[A.object_name(x)] = sq.p.source()->arrow_name((*lift)(sq.cyl.iota(x)));
    verdict["iota_images"] = imgs;
    out.human = "lift found\n";
    out.status = 0;
  } else {
    out.human = "no lift exists\n";
    out.status = 1;
  }
  out.verdict = verdict;
  return out;
}

RunReport cmd_fixture(const std::vector<std::string>& args, const RunOptions& opts) {
  RunReport out;
  out.command = "fixture";
  const std::string& name = args.at(0);
  if (name == "klein_hlp") {
    KleinFixture fx = klein_fixture();
    SearchBudget budget{opts.budget};
    auto lift = find_lift(fx.square, budget);
    out.verdict = {{"command", "fixture"},
                   {"name", name},
                   {"p_star_surjective", star_class(fx.p).surjective},
                   {"lift_exists", lift.has_value()}};
    out.human = std::string("p is star-surjective; the chosen square has ") +
                (lift ? "a lift (unexpected)\n" : "no lift\n");
    maybe_write_dot(opts, to_dot(*fx.g, "klein_G"));
  } else if (name == "pstar") {
    PStarFixture fx = pstar_fixture();
    SearchBudget budget{opts.budget};
    PostComposition pc = post_compose(fx.base.p, fx.base.e, budget);
    ObjectId i_obj = pc.tg.object_of(fx.base.i).value();
    StarClass at_i = star_class_at(pc.pstar, i_obj);
    out.verdict = {{"command", "fixture"},
                   {"name", name},
                   {"p_star_surjective", star_class(fx.base.p).surjective},
                   {"pstar_surjective_at_inclusion", at_i.surjective}};
    out.human = std::string("p_* is ") + (at_i.surjective ? "" : "not ") +
                "star-surjective at the inclusion\n";
  } else if (name == "example_vi") {
    ExampleViFixture fx = example_vi_fixture();
    std::vector<ArrowId> all(fx.s->n_arrows());
    for (ArrowId a = 0; a < all.size(); ++a) all[a] = a;
    QuotientGroupoid q = quotient(fx.s, all);
    out.verdict = {{"command", "fixture"},
                   {"name", name},
                   {"objects", q.g->n_objects()},
                   {"arrows", q.g->n_arrows()},
                   {"inductive", is_inductive(*q.g)}};
    std::ostringstream human;
    human << "S//S has " << q.g->n_objects() << " objects; inductive: "
          << (is_inductive(*q.g) ? "true" : "false") << "\n";
    out.human = human.str();
    maybe_write_dot(opts, to_dot(*q.g, "quotient"));
  } else {
    throw parse_failure("unknown fixture '" + name + "'");
  }
  return out;
}

RunReport cmd_random(const std::vector<std::string>& args, const RunOptions& opts) {
  RunReport out;
  out.command = "random";
  std::uint64_t seed = opts.seed;
  if (!args.empty()) seed = std::stoull(args.at(0));
  RandomInstance inst = random_instance(seed);
  out.verdict = {{"command", "random"},
                 {"seed", seed},
                 {"objects", inst.g->n_objects()},
                 {"arrows", inst.g->n_arrows()},
                 {"inductive", is_inductive(*inst.g)},
                 {"valid", true}};
  std::ostringstream human;
  human << "seed " << seed << ": " << inst.g->n_objects() << " objects, " << inst.g->n_arrows()
        << " arrows\n";
  out.human = human.str();
  maybe_write_dot(opts, to_dot(*inst.g, "random"));
  return out;
}

}  // namespace

RunReport run_command(const std::string& command, const std::vector<std::string>& args,
                      const RunOptions& opts) {
  try {
    if (command == "validate") return cmd_validate(args, opts);
    if (command == "classify") return cmd_classify(args, opts);
    if (command == "quotient") return cmd_quotient(args, opts);
    if (command == "factorize") return cmd_factorize(args, opts);
    if (command == "enlarge") return cmd_enlarge(args, opts);
    if (command == "cocylinder") return cmd_cocylinder(args, opts);
    if (command == "lift") return cmd_lift(args, opts);
    if (command == "fixture") return cmd_fixture(args, opts);
    if (command == "random") return cmd_random(args, opts);
    RunReport out;
    out.command = command;
    out.status = 2;
    out.human = "unknown command '" + command + "'\n";
    out.verdict = {{"command", command}, {"error", out.human}};
    return out;
  } catch (const budget_error& e) {
    RunReport out;
    out.command = command;
    out.status = 3;
    out.human = std::string(e.what()) + "\n";
    out.verdict = {{"command", command}, {"error", e.what()}};
    return out;
  } catch (const std::out_of_range&) {
    RunReport out;
    out.command = command;
    out.status = 2;
    out.human = "missing argument\n";
    out.verdict = {{"command", command}, {"error", "missing argument"}};
    return out;
  } catch (const error& e) {
    RunReport out;
    out.command = command;
    out.status = 2;
    out.human = std::string(e.what()) + "\n";
    out.verdict = {{"command", command}, {"error", e.what()}};
    return out;
  }
}

}  // namespace ogpd
