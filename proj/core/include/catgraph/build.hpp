#pragma once

#include <catgraph/graph.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace catgraph {

// Per-path growth rules: rule(l) children are added for each path of length
// l from a vertex to a newest-label vertex. Values may be fractional per
// path; the total per vertex must come out a whole number.
struct PathRules {
  std::vector<Rational> rules;  // index = path length

  PathRules() = default;
  explicit PathRules(std::vector<Rational> r);

  std::optional<Rational> rule(int length) const;
  int max_length() const { return static_cast<int>(rules.size()) - 1; }
};

// Rule generators for the three built-in families.
Rational classic_rule(int length);                 // 1
Rational fuss_rule(int length, const Nat& k);      // binom(l + k - 1, l)
Rational super_rule(int length);                   // 2 / 2^l

using RuleFn = std::function<std::optional<Rational>(int length)>;

// One growth step: constructs the step-n graph from the step-(n-1) graph by
// giving every vertex rule(l) new children labeled `step` for each of its
// length-l paths to a vertex labeled step-1 (trivial paths included).
// Children are accounted per condensed class; a fractional per-class total
// raises NonIntegralGrowthError, an uncovered length RuleMissingError.
CondensedGraph grow_step(const CondensedGraph& g, int step, const RuleFn& rule,
                         Nat* new_count = nullptr);

// An inductively grown family of graphs. graphs[0] is the single 0-labeled
// vertex and every graphs[n] extends graphs[n-1] in place: old nodes keep
// their index, label and multiplier.
struct GraphFamily {
  enum class Kind { Classic, Fuss, Super, ByRules };

  Kind kind = Kind::Classic;
  Nat fuss_k = 0;                      // Kind::Fuss
  PathRules rules;                     // Kind::ByRules
  std::vector<CondensedGraph> graphs;  // index = step
  std::vector<Nat> new_counts;         // vertices added per step; [0] = 1

  int steps() const { return static_cast<int>(graphs.size()) - 1; }
  const CondensedGraph& at(int n) const;
  std::string kind_name() const;
};

GraphFamily build_classic(int n_max);
GraphFamily build_fuss(int n_max, const Nat& k);
GraphFamily build_super(int n_max);
GraphFamily build_by_rules(const PathRules& rules, int n_max);

}  // namespace catgraph
