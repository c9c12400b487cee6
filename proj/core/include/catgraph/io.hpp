#pragma once

#include <catgraph/axioms.hpp>
#include <catgraph/build.hpp>
#include <catgraph/graph.hpp>
#include <catgraph/infer.hpp>
#include <catgraph/ntable.hpp>

#include <string>
#include <variant>

namespace catgraph {

// Graph schema:
//   {"form": "expanded"|"condensed",
//    "nodes": [{"id": 0, "label": 0, "mult": "1"}, ...],
//    "edges": [[parent, child], ...],
//    "root": 0}
// Multipliers are decimal strings so they survive any magnitude.
std::string to_json(const ExpandedGraph& g, int indent = -1);
std::string to_json(const CondensedGraph& g, int indent = -1);
std::variant<ExpandedGraph, CondensedGraph> graph_from_json(const std::string& text);

// Family envelope: {"kind": ..., "params": {...}, "graphs": [...]}.
std::string to_json(const GraphFamily& fam, bool expanded = false,
                    const Nat& size_limit = default_size_limit(), int indent = -1);
GraphFamily family_from_json(const std::string& text);

// Graphviz output; condensed edges carry "×m" labels like the figures.
std::string to_dot(const ExpandedGraph& g, const std::string& name = "G");
std::string to_dot(const CondensedGraph& g, const std::string& name = "G");

std::string to_json(const GateReport& report, int indent = -1);
std::string to_json(const InferenceReport& report, int indent = -1);
std::string to_json(const VerifyReport& report, int indent = -1);
std::string to_json(const Axiom1Report& report, int indent = -1);
std::string to_json(const Axiom2Report& report, int indent = -1);
std::string to_json(const Axiom3Report& report, int indent = -1);

}  // namespace catgraph
