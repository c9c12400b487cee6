#include <catgraph/io.hpp>

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace catgraph {

namespace {

using nlohmann::json;

std::string dump(const json& j, int indent) { return j.dump(indent); }

json graph_to_json(const ExpandedGraph& g) {
  json nodes = json::array();
  json edges = json::array();
  for (int v = 0; v < g.size(); ++v) {
    nodes.push_back({{"id", v}, {"label", g.vertices[v].label}, {"mult", "1"}});
    if (g.vertices[v].parent >= 0) edges.push_back({g.vertices[v].parent, v});
  }
  std::sort(edges.begin(), edges.end());
  json j;
  j["form"] = "expanded";
  j["root"] = g.root;
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  return j;
}

json graph_to_json(const CondensedGraph& g) {
  json nodes = json::array();
  json edges = json::array();
  for (int v = 0; v < g.size(); ++v) {
    nodes.push_back(
        {{"id", v}, {"label", g.nodes[v].label}, {"mult", g.nodes[v].in_mult.str()}});
    if (g.nodes[v].parent >= 0) edges.push_back({g.nodes[v].parent, v});
  }
  std::sort(edges.begin(), edges.end());
  json j;
  j["form"] = "condensed";
  j["root"] = g.root;
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  return j;
}

struct RawGraph {
  bool condensed = false;
  int root = 0;
  std::vector<int> ids;
  std::vector<int> labels;
  std::vector<Nat> mults;
  std::vector<std::pair<int, int>> edges;
};

RawGraph raw_graph_from_json(const json& j) {
  RawGraph raw;
  const std::string form = j.at("form").get<std::string>();
  if (form == "condensed") raw.condensed = true;
  else if (form != "expanded") throw std::invalid_argument("unknown graph form '" + form + "'");
  raw.root = j.at("root").get<int>();
  for (const auto& node : j.at("nodes")) {
    raw.ids.push_back(node.at("id").get<int>());
    raw.labels.push_back(node.at("label").get<int>());
    const auto& mult = node.at("mult");
    raw.mults.emplace_back(mult.is_string() ? mult.get<std::string>()
                                            : std::to_string(mult.get<long long>()));
  }
  for (const auto& edge : j.at("edges"))
    raw.edges.emplace_back(edge.at(0).get<int>(), edge.at(1).get<int>());
  return raw;
}

// Rebuilds with parents preceding children, preserving child order.
template <typename G>
G build_graph(const RawGraph& raw) {
  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < raw.ids.size(); ++i) {
    if (!index.emplace(raw.ids[i], i).second)
      throw std::invalid_argument("duplicate node id in graph JSON");
  }
  if (!index.count(raw.root)) throw std::invalid_argument("root id not among nodes");

  std::map<int, std::vector<int>> children;
  for (const auto& [parent, child] : raw.edges) {
    if (!index.count(parent) || !index.count(child))
      throw std::invalid_argument("edge references unknown node id");
    children[parent].push_back(child);
  }

  G out;
  std::size_t emitted = 0;
  const std::function<void(int, int)> emit = [&](int id, int parent) {
    const std::size_t i = index.at(id);
    int node;
    if constexpr (std::is_same_v<G, ExpandedGraph>) {
      if (raw.mults[i] != 1)
        throw std::invalid_argument("expanded graphs must have mult 1 everywhere");
      node = out.add_vertex(raw.labels[i], parent);
    } else {
      node = out.add_node(raw.labels[i], raw.mults[i], parent);
    }
    ++emitted;
    if (emitted > raw.ids.size()) throw std::invalid_argument("graph JSON contains a cycle");
    if (const auto it = children.find(id); it != children.end())
      for (int c : it->second) emit(c, node);
  };
  emit(raw.root, -1);
  if (emitted != raw.ids.size())
    throw std::invalid_argument("graph JSON has nodes unreachable from the root");
  validate(out);
  return out;
}

json gate_to_json(const GateReport& report) {
  return {{"sequence", report.sequence_name},
          {"verdict", report.feasible ? "feasible-so-far" : "infeasible"},
          {"violated", violated_name(report.violated)},
          {"s0", report.s0.str()},
          {"s1", report.s1.str()},
          {"s2", report.s2.str()}};
}

const char* outcome_name(InferenceReport::Outcome outcome) {
  switch (outcome) {
    case InferenceReport::Outcome::Consistent: return "consistent";
    case InferenceReport::Outcome::Contradiction: return "contradiction";
    case InferenceReport::Outcome::NonIntegral: return "non-integral";
    case InferenceReport::Outcome::InfeasibleS0: return "infeasible-s0";
  }
  return "?";
}

}  // namespace

std::string to_json(const ExpandedGraph& g, int indent) {
  return dump(graph_to_json(g), indent);
}

std::string to_json(const CondensedGraph& g, int indent) {
  return dump(graph_to_json(g), indent);
}

std::variant<ExpandedGraph, CondensedGraph> graph_from_json(const std::string& text) {
  const RawGraph raw = raw_graph_from_json(json::parse(text));
  if (raw.condensed) return build_graph<CondensedGraph>(raw);
  return build_graph<ExpandedGraph>(raw);
}

std::string to_json(const GraphFamily& fam, bool expanded, const Nat& size_limit,
                    int indent) {
  json params = json::object();
  if (fam.kind == GraphFamily::Kind::Fuss) params["k"] = fam.fuss_k.str();
  if (fam.kind == GraphFamily::Kind::ByRules) {
    json rules = json::array();
    for (const Rational& r : fam.rules.rules) rules.push_back(to_string(r));
    params["rules"] = std::move(rules);
  }
  json graphs = json::array();
  for (const CondensedGraph& g : fam.graphs) {
    if (expanded) graphs.push_back(graph_to_json(expand(g, size_limit)));
    else graphs.push_back(graph_to_json(g));
  }
  json j;
  j["kind"] = fam.kind_name();
  j["params"] = std::move(params);
  j["graphs"] = std::move(graphs);
  return dump(j, indent);
}

GraphFamily family_from_json(const std::string& text) {
  const json j = json::parse(text);
  GraphFamily fam;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "classic") fam.kind = GraphFamily::Kind::Classic;
  else if (kind == "fuss") fam.kind = GraphFamily::Kind::Fuss;
  else if (kind == "super") fam.kind = GraphFamily::Kind::Super;
  else if (kind == "by-rules") fam.kind = GraphFamily::Kind::ByRules;
  else throw std::invalid_argument("unknown family kind '" + kind + "'");

  const auto& params = j.at("params");
  if (fam.kind == GraphFamily::Kind::Fuss)
    fam.fuss_k = Nat(params.at("k").get<std::string>());
  if (fam.kind == GraphFamily::Kind::ByRules) {
    std::vector<Rational> rules;
    for (const auto& r : params.at("rules"))
      rules.push_back(parse_rational(r.get<std::string>()));
    fam.rules = PathRules(std::move(rules));
  }

  for (const auto& graph_json : j.at("graphs")) {
    const RawGraph raw = raw_graph_from_json(graph_json);
    if (raw.condensed) {
      fam.graphs.push_back(build_graph<CondensedGraph>(raw));
    } else {
      fam.graphs.push_back(condense(build_graph<ExpandedGraph>(raw)));
    }
  }
  if (fam.graphs.empty()) throw std::invalid_argument("family has no graphs");

  fam.new_counts.reserve(fam.graphs.size());
  for (std::size_t n = 0; n < fam.graphs.size(); ++n) {
    const auto counts = census(fam.graphs[n]);
    const auto it = counts.find(static_cast<int>(n));
    fam.new_counts.push_back(it == counts.end() ? Nat(0) : it->second);
  }
  return fam;
}

std::string to_dot(const ExpandedGraph& g, const std::string& name) {
  std::string out = "digraph " + name + " {\n";
  for (int v = 0; v < g.size(); ++v)
    out += "  n" + std::to_string(v) + " [label=\"" +
           std::to_string(g.vertices[v].label) + "\"];\n";
  for (int v = 0; v < g.size(); ++v)
    for (int c : g.vertices[v].children)
      out += "  n" + std::to_string(v) + " -> n" + std::to_string(c) + ";\n";
  out += "}\n";
  return out;
}

std::string to_dot(const CondensedGraph& g, const std::string& name) {
  std::string out = "digraph " + name + " {\n";
  for (int v = 0; v < g.size(); ++v)
    out += "  n" + std::to_string(v) + " [label=\"" +
           std::to_string(g.nodes[v].label) + "\"];\n";
  for (int v = 0; v < g.size(); ++v)
    for (int c : g.nodes[v].children)
      out += "  n" + std::to_string(v) + " -> n" + std::to_string(c) +
             " [label=\"×" + g.nodes[c].in_mult.str() + "\"];\n";
  out += "}\n";
  return out;
}

std::string to_json(const GateReport& report, int indent) {
  return dump(gate_to_json(report), indent);
}

std::string to_json(const InferenceReport& report, int indent) {
  json rules = json::array();
  for (const Rational& r : report.inferred.rules) rules.push_back(to_string(r));

  json trace = json::array();
  for (const auto& step : report.trace) {
    json contributions = json::array();
    for (const auto& c : step.contributions)
      contributions.push_back({{"length", c.length},
                               {"from_label", c.from_label},
                               {"paths", c.paths.str()},
                               {"rule", to_string(c.rule)},
                               {"amount", to_string(c.amount)}});
    json js = {{"step", step.n},
               {"available", step.available.str()},
               {"forced", to_string(step.forced)},
               {"frontier_paths", step.frontier_paths.str()},
               {"contributions", std::move(contributions)}};
    js["new_rule"] = step.new_rule ? json(to_string(*step.new_rule)) : json();
    trace.push_back(std::move(js));
  }

  json j = {{"sequence", report.sequence_name},
            {"integral_rules", report.integral_rules},
            {"outcome", outcome_name(report.outcome)},
            {"last_step", report.last_step},
            {"rules", std::move(rules)},
            {"trace", std::move(trace)}};
  if (report.outcome == InferenceReport::Outcome::Contradiction) {
    j["forced"] = to_string(report.fail_forced);
    j["available"] = report.fail_available.str();
  }
  if (report.outcome == InferenceReport::Outcome::NonIntegral)
    j["value"] = to_string(report.fail_value);
  if (!report.fail_detail.empty()) j["detail"] = report.fail_detail;
  return dump(j, indent);
}

std::string to_json(const VerifyReport& report, int indent) {
  json steps = json::array();
  for (const auto& entry : report.entries) {
    json je = {{"n", entry.n},
               {"recurrence_ok", entry.recurrence_ok},
               {"sum_ok", entry.sum_ok},
               {"predicted_next", to_string(entry.predicted_next)}};
    je["mismatch"] = json();
    if (entry.first_mismatch) {
      const auto& [table, length, label] = *entry.first_mismatch;
      je["mismatch"] = {{"table", table}, {"length", length}, {"label", label}};
    }
    je["non_integral"] = json();
    if (entry.non_integral)
      je["non_integral"] = {{"length", entry.non_integral->first},
                            {"label", entry.non_integral->second}};
    steps.push_back(std::move(je));
  }
  const json j = {{"n_max", report.n_max},
                  {"ok", report.ok},
                  {"note", report.note},
                  {"steps", std::move(steps)}};
  return dump(j, indent);
}

std::string to_json(const Axiom1Report& report, int indent) {
  json steps = json::array();
  for (const auto& step : report.steps)
    steps.push_back({{"step", step.n},
                     {"expected", step.expected.str()},
                     {"actual", step.actual.str()},
                     {"ok", step.ok}});
  return dump(json{{"pass", report.pass}, {"steps", std::move(steps)}}, indent);
}

std::string to_json(const Axiom2Report& report, int indent) {
  const char* status = report.status == Axiom2Report::Status::Pass ? "pass"
                       : report.status == Axiom2Report::Status::Fail
                           ? "fail"
                           : "skipped-size";
  json classes = json::array();
  for (const auto& match : report.classes)
    classes.push_back({{"label", match.label},
                       {"vertices", match.vertex_count.str()},
                       {"matched_step", match.matched_step},
                       {"shift", match.label},
                       {"expected", match.expected}});
  return dump(json{{"n", report.n}, {"status", status}, {"classes", std::move(classes)}},
              indent);
}

std::string to_json(const Axiom3Report& report, int indent) {
  json offending = json::array();
  for (const auto& [node, label] : report.offending)
    offending.push_back({{"node", node}, {"label", label}});
  return dump(
      json{{"n", report.n}, {"pass", report.pass}, {"offending", std::move(offending)}},
      indent);
}

}  // namespace catgraph
