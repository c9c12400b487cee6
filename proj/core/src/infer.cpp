#include <catgraph/infer.hpp>

#include <catgraph/errors.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace catgraph {

InferenceReport infer_rules(const SequenceSpec& s, int n_max,
                            bool integral_rules) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (const auto cap = s.max_terms())
    n_max = std::min<int>(n_max, static_cast<int>(*cap) - 1);

  InferenceReport report;
  report.sequence_name = s.name();
  report.integral_rules = integral_rules;

  const auto values = sequence_values(s, static_cast<std::size_t>(n_max) + 1);
  if (values[0] != 1) {
    report.outcome = InferenceReport::Outcome::InfeasibleS0;
    report.fail_detail = "s_0 = " + values[0].str() + ", must be 1";
    return report;
  }

  CondensedGraph g = single_node(0);
  for (int n = 1; n <= n_max; ++n) {
    report.last_step = n;
    const int target = n - 1;
    const auto pv = per_vertex_path_counts(g, target, n - 1);
    const auto rep = represented_counts(g);

    // Aggregate path counts per (length, start label).
    std::vector<std::map<int, Nat>> by_label(static_cast<std::size_t>(n));
    std::vector<Nat> total(static_cast<std::size_t>(n));
    for (int v = 0; v < g.size(); ++v)
      for (int l = 0; l <= n - 1; ++l)
        if (pv[v][l] != 0) {
          const Nat paths = rep[v] * pv[v][l];
          by_label[l][g.nodes[v].label] += paths;
          total[l] += paths;
        }

    // Labels strictly increase along edges, so a path of length n-1 ending
    // at label n-1 must visit 0,1,...,n-1; anything else is a broken
    // invariant, not a sequence property.
    for (const auto& [label, paths] : by_label[n - 1])
      if (label != 0 && paths != 0)
        throw std::logic_error("length-" + std::to_string(n - 1) +
                               " paths found starting at label " +
                               std::to_string(label));

    InferenceReport::Step step;
    step.n = n;
    step.available = values[static_cast<std::size_t>(n)];
    step.frontier_paths = total[n - 1];

    Rational forced = 0;
    for (int l = 0; l <= n - 2; ++l) {
      const Rational rule = report.inferred.rules[static_cast<std::size_t>(l)];
      // deeper start labels first, matching the order the graph grew in
      for (auto it = by_label[l].rbegin(); it != by_label[l].rend(); ++it) {
        InferenceReport::Contribution c;
        c.length = l;
        c.from_label = it->first;
        c.paths = it->second;
        c.rule = rule;
        c.amount = Rational(c.paths) * rule;
        forced += c.amount;
        step.contributions.push_back(std::move(c));
      }
    }
    step.forced = forced;

    const Rational remainder = Rational(step.available) - forced;
    if (remainder < 0) {
      report.outcome = InferenceReport::Outcome::Contradiction;
      report.fail_forced = forced;
      report.fail_available = step.available;
      report.fail_detail = "forced " + to_string(forced) + " exceeds available " +
                           step.available.str();
      report.trace.push_back(std::move(step));
      return report;
    }

    Rational new_rule;
    if (step.frontier_paths == 0) {
      if (remainder != 0) {
        report.outcome = InferenceReport::Outcome::Contradiction;
        report.fail_forced = forced;
        report.fail_available = step.available;
        report.fail_detail = "no length-" + std::to_string(n - 1) +
                             " paths left to absorb the remaining " +
                             to_string(remainder) + " vertices";
        report.trace.push_back(std::move(step));
        return report;
      }
      new_rule = 0;  // unconstrained; only reachable when some earlier term is 0
    } else {
      new_rule = remainder / Rational(step.frontier_paths);
    }

    if (integral_rules && denominator(new_rule) != 1) {
      report.outcome = InferenceReport::Outcome::NonIntegral;
      report.fail_value = new_rule;
      report.fail_detail = "r(" + std::to_string(n - 1) + ") would be " +
                           to_string(new_rule) + ", integral rules required";
      report.trace.push_back(std::move(step));
      return report;
    }

    step.new_rule = new_rule;
    report.inferred.rules.push_back(new_rule);
    report.trace.push_back(std::move(step));

    try {
      g = grow_step(g, n, [&report](int l) { return report.inferred.rule(l); });
    } catch (const NonIntegralGrowthError& e) {
      report.outcome = InferenceReport::Outcome::NonIntegral;
      report.fail_value = e.value;
      report.fail_detail = "class at node " + std::to_string(e.node) +
                           " would gain " + to_string(e.value) +
                           " children per vertex";
      return report;
    }
  }
  return report;
}

Certificate certify_infeasible(const SequenceSpec& s, int n_max) {
  Certificate cert;
  const auto cap = s.max_terms();
  if (!cap || *cap >= 3) {
    const GateReport g = gate(s);
    if (!g.feasible) {
      cert.gate = g;
      return cert;
    }
  }
  cert.inference = infer_rules(s, n_max);
  return cert;
}

}  // namespace catgraph
