#include <catgraph/axioms.hpp>

#include <catgraph/errors.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace catgraph {

Axiom1Report check_axiom1(const GraphFamily& fam, const std::vector<Nat>& s) {
  if (static_cast<int>(s.size()) < fam.steps() + 1)
    throw std::invalid_argument("sequence provides fewer terms than the family has steps");

  Axiom1Report report;
  for (int n = 0; n <= fam.steps(); ++n) {
    const auto counts = census(fam.at(n));
    const auto it = counts.find(n);
    // Vertices labeled n exist only from step n on, so this census entry is
    // exactly the step-n delta.
    Axiom1Report::Step step;
    step.n = n;
    step.expected = s[static_cast<std::size_t>(n)];
    step.actual = it == counts.end() ? Nat(0) : it->second;
    step.ok = step.expected == step.actual;
    report.pass = report.pass && step.ok;
    report.steps.push_back(std::move(step));
  }
  return report;
}

Axiom2Report check_axiom2(const GraphFamily& fam, int n, const Nat& size_limit) {
  Axiom2Report report;
  report.n = n;

  if (represented_total(fam.at(n)) > size_limit) {
    report.status = Axiom2Report::Status::SkippedSize;
    return report;
  }

  // Shape codes of the family graphs; graph k is the expected match for a
  // subtree rooted at a label-(n-k) vertex.
  std::vector<std::string> family_codes;
  for (int k = 0; k <= n; ++k)
    family_codes.push_back(shape_code(expand(fam.at(k), size_limit)));

  const ExpandedGraph exp = expand(fam.at(n), size_limit);
  const auto codes = subtree_shape_codes(exp);

  std::map<std::pair<int, std::string>, Nat> classes;  // (label, shape) -> count
  for (int v = 0; v < exp.size(); ++v)
    classes[{exp.vertices[v].label, codes[v]}] += 1;

  for (const auto& [key, count] : classes) {
    const auto& [label, code] = key;
    Axiom2Report::ClassMatch match;
    match.label = label;
    match.vertex_count = count;
    const int preferred = n - label;
    if (preferred >= 0 && family_codes[preferred] == code) {
      match.matched_step = preferred;
    } else {
      for (int k = 0; k <= n; ++k)
        if (family_codes[k] == code) {
          match.matched_step = k;
          break;
        }
    }
    match.expected = match.matched_step == preferred;
    if (match.matched_step < 0) {
      report.status = Axiom2Report::Status::Fail;
      if (!report.counterexample) report.counterexample = match;
    }
    report.classes.push_back(std::move(match));
  }
  return report;
}

Axiom3Report check_axiom3(const GraphFamily& fam, int n) {
  Axiom3Report report;
  report.n = n;
  const CondensedGraph& g = fam.at(n);
  for (int v = 0; v < g.size(); ++v)
    if (g.nodes[v].children.empty() && g.nodes[v].label != n)
      report.offending.emplace_back(v, g.nodes[v].label);
  report.pass = report.offending.empty();
  return report;
}

GateReport gate(const SequenceSpec& s, std::size_t terms) {
  if (terms < 3) throw std::invalid_argument("gate needs at least 3 terms");
  const auto values = sequence_values(s, terms);

  GateReport report;
  report.sequence_name = s.name();
  report.s0 = values[0];
  report.s1 = values[1];
  report.s2 = values[2];
  if (report.s0 != 1) {
    report.feasible = false;
    report.violated = GateReport::Violated::S0;
  } else if (report.s2 < report.s1 * report.s1) {
    report.feasible = false;
    report.violated = GateReport::Violated::Square;
  }
  return report;
}

const char* violated_name(GateReport::Violated v) {
  switch (v) {
    case GateReport::Violated::None: return "none";
    case GateReport::Violated::S0: return "lemma_s0";
    case GateReport::Violated::Square: return "lemma_square";
  }
  return "?";
}

}  // namespace catgraph
