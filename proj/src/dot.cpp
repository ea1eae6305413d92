#include "ogpd/dot.hpp"

#include <sstream>

namespace ogpd {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void emit_nodes_edges(std::ostream& os, const OrderedGroupoid& g, const std::string& prefix,
                      const std::string& indent) {
  for (ObjectId e = 0; e < g.n_objects(); ++e)
    os << indent << quoted(prefix + g.object_name(e)) << " [label=" << quoted(g.object_name(e))
       << "];\n";
  for (ArrowId a = 0; a < g.n_arrows(); ++a) {
    if (g.is_identity(a)) continue;
    os << indent << quoted(prefix + g.object_name(g.dom(a))) << " -> "
       << quoted(prefix + g.object_name(g.cod(a))) << " [label=" << quoted(g.arrow_name(a))
       << "];\n";
  }
  for (auto [lo, hi] : g.object_poset().covers())
    os << indent << quoted(prefix + g.object_name(lo)) << " -> "
       << quoted(prefix + g.object_name(hi)) << " [style=dashed, dir=none];\n";
}

}  // namespace

std::string to_dot(const OrderedGroupoid& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n  node [shape=circle];\n";
  emit_nodes_edges(os, g, "", "  ");
  os << "}\n";
  return os.str();
}

std::string to_dot(const OrderedFunctor& f) {
  std::ostringstream os;
  os << "digraph functor {\n  node [shape=circle];\n";
  os << "  subgraph cluster_source {\n    label=\"source\";\n";
  emit_nodes_edges(os, *f.source(), "s:", "    ");
  os << "  }\n  subgraph cluster_target {\n    label=\"target\";\n";
  emit_nodes_edges(os, *f.target(), "t:", "    ");
  os << "  }\n";
  for (ObjectId e = 0; e < f.source()->n_objects(); ++e)
    os << "  " << quoted("s:" + f.source()->object_name(e)) << " -> "
       << quoted("t:" + f.target()->object_name(f.obj(e)))
       << " [style=dotted, constraint=false];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const Factorization& fact) {
  std::ostringstream os;
  os << "digraph factorization {\n  node [shape=circle];\n";
  os << "  subgraph cluster_source {\n    label=\"G\";\n";
  emit_nodes_edges(os, *fact.varpi.source(), "g:", "    ");
  os << "  }\n  subgraph cluster_quotient {\n    label=\"G//ker\";\n";
  emit_nodes_edges(os, *fact.q.g, "q:", "    ");
  os << "  }\n  subgraph cluster_target {\n    label=\"H\";\n";
  emit_nodes_edges(os, *fact.psi.target(), "h:", "    ");
  os << "  }\n";
  for (ObjectId e = 0; e < fact.varpi.source()->n_objects(); ++e)
    os << "  " << quoted("g:" + fact.varpi.source()->object_name(e)) << " -> "
       << quoted("q:" + fact.q.g->object_name(fact.varpi.obj(e)))
       << " [style=dotted, constraint=false];\n";
  for (ObjectId e = 0; e < fact.q.g->n_objects(); ++e)
    os << "  " << quoted("q:" + fact.q.g->object_name(e)) << " -> "
       << quoted("h:" + fact.psi.target()->object_name(fact.psi.obj(e)))
       << " [style=dotted, constraint=false];\n";
  os << "}\n";
  return os.str();
}

}  // namespace ogpd
