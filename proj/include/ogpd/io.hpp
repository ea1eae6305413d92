// The .ogq document format: a JSON tree describing groupoids, functors,
// subgroupoids, actions and homotopy squares.  Identities are
// auto-generated as "id:<object>" and may not be declared; order
// sections list generating pairs (lower, upper) and are closed
// reflexively and transitively; compositions with identities are filled
// in automatically.

#pragma once

#include <map>
#include <string>

#include "ogpd/cylinder.hpp"
#include "ogpd/groupoid.hpp"

namespace ogpd {

struct parse_failure : error {
  using error::error;
};

struct ParsedFunctor {
  std::string source, target;
  std::vector<std::pair<std::string, std::string>> map;  // arrow name -> arrow name
};

struct ParsedSubgroupoid {
  std::string parent;
  std::vector<std::string> arrows;
};

struct ParsedAction {
  std::string actor, carrier;
  std::vector<std::pair<std::string, std::string>> moment;  // carrier arrow -> actor object
  std::vector<std::array<std::string, 3>> act;              // (carrier, actor, result)
};

struct ParsedSquare {
  std::string base, p, f;
  std::vector<std::pair<std::string, std::string>> iota;  // base object -> target arrow
};

struct Document {
  std::vector<std::pair<std::string, GroupoidData>> groupoids;
  std::map<std::string, ParsedFunctor> functors;
  std::map<std::string, ParsedSubgroupoid> subgroupoids;
  std::map<std::string, ParsedAction> actions;
  std::map<std::string, ParsedSquare> squares;
};

// Throws parse_failure with position information on syntax errors and
// with the offending id on semantic ones.
Document parse_document(const std::string& text);

// Canonical serialization; parse . serialize is the identity on
// documents already in canonical form.
std::string serialize_document(const Document& doc);

// Resolution helpers used by the command layer.
struct ResolvedGroupoids {
  std::vector<std::pair<std::string, ValidationReport>> reports;
  std::map<std::string, GroupoidPtr> by_name;  // the ones that validated
};

ResolvedGroupoids resolve_groupoids(const Document& doc);
GroupoidPtr require_groupoid(const ResolvedGroupoids& rg, const std::string& name);
OrderedFunctor resolve_functor(const Document& doc, const ResolvedGroupoids& rg,
                               const std::string& name);
std::vector<ArrowId> resolve_subgroupoid(const Document& doc, const ResolvedGroupoids& rg,
                                         const std::string& name, GroupoidPtr* parent);
HomotopySquare resolve_square(const Document& doc, const ResolvedGroupoids& rg,
                              const std::string& name);

class GroupoidAction;  // action.hpp
GroupoidAction resolve_action(const Document& doc, const ResolvedGroupoids& rg,
                              const std::string& name);

}  // namespace ogpd
