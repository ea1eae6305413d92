#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "ogpd/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ogpd: a calculator for finite ordered groupoids"};
  app.require_subcommand(1);
  app.fallthrough();

  ogpd::RunOptions opts;
  app.add_option("--budget", opts.budget, "search budget (visited states)");
  app.add_option("--seed", opts.seed, "seed for random generation");
  app.add_option("--dot", opts.dot_path, "write a DOT rendering to this path");
  app.add_flag("--json", opts.json_only, "print only the machine-readable verdict");

  struct Sub {
    const char* name;
    const char* desc;
    std::vector<const char*> positional;
  };
  const std::vector<Sub> subs = {
      {"validate", "check the ordered-groupoid axioms", {"file", "?groupoid"}},
      {"classify", "star classification of a functor", {"file", "functor"}},
      {"quotient", "quotient by a normal ordered subgroupoid", {"file", "subgroupoid"}},
      {"factorize", "fibration ; star-injective factorization", {"file", "functor"}},
      {"enlarge", "maximum enlargement of a star-injective functor", {"file", "functor"}},
      {"cocylinder", "mapping cocylinder pipeline", {"file", "functor"}},
      {"lift", "search for a homotopy lift of a square", {"file", "square"}},
      {"fixture", "run a named built-in instance", {"name"}},
      {"random", "generate and validate a random instance", {"?seed"}},
  };

  std::map<std::string, std::vector<std::string>> arg_store;
  for (const auto& sub : subs) {
    CLI::App* s = app.add_subcommand(sub.name, sub.desc);
    for (const char* pos : sub.positional) {
      std::string p = pos;
      bool optional = p[0] == '?';
      if (optional) p = p.substr(1);
      auto* opt = s->add_option(p, "");
      if (!optional) opt->required();
    }
    s->callback([s, &arg_store, name = std::string(sub.name)] {
      std::vector<std::string> args;
      for (const auto* opt : s->get_options())
        if (opt->get_positional() && !opt->results().empty())
          args.push_back(opt->results().front());
      arg_store[name] = args;
    });
  }

  CLI11_PARSE(app, argc, argv);

  for (const auto& [name, args] : arg_store) {
    ogpd::RunReport report = ogpd::run_command(name, args, opts);
    if (opts.json_only) {
      std::cout << report.verdict.dump(2) << "\n";
    } else {
      std::cout << report.human;
      std::cout << "verdict: " << report.verdict.dump(2) << "\n";
    }
    return report.status;
  }
  return 2;
}
