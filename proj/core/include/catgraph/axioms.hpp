#pragma once

#include <catgraph/build.hpp>
#include <catgraph/sequences.hpp>

#include <optional>
#include <string>
#include <vector>

namespace catgraph {

// Step-count check: the number of vertices added at step n (all labeled n)
// must equal s_n.
struct Axiom1Report {
  struct Step {
    int n = 0;
    Nat expected;
    Nat actual;
    bool ok = true;
  };
  bool pass = true;
  std::vector<Step> steps;
};

// Subtree check: in the step-n graph, the subtree rooted at any label-j
// vertex must be a label-shifted copy of some earlier family graph. The
// matched step is recorded per class of identically shaped subtrees; a
// match with step != n - j is flagged (expected = false) but not failed.
struct Axiom2Report {
  enum class Status { Pass, Fail, SkippedSize };

  struct ClassMatch {
    int label = 0;        // j; shift of the matched graph
    Nat vertex_count;     // vertices sharing this subtree shape
    int matched_step = -1;  // k with subtree iso_shifted to family graph k
    bool expected = true;   // matched_step == n - label
  };

  Status status = Status::Pass;
  int n = 0;
  std::vector<ClassMatch> classes;
  std::optional<ClassMatch> counterexample;  // first class with no match
};

// Leaf check: all leaves of the step-n graph carry label n.
struct Axiom3Report {
  bool pass = true;
  int n = 0;
  std::vector<std::pair<int, int>> offending;  // (node, label) of bad leaves
};

// Requires s.size() >= fam.steps() + 1.
Axiom1Report check_axiom1(const GraphFamily& fam, const std::vector<Nat>& s);

// Runs on the expanded form of the step-n graph; reports SkippedSize instead
// of deciding when that expansion would exceed size_limit.
Axiom2Report check_axiom2(const GraphFamily& fam, int n,
                          const Nat& size_limit = default_size_limit());

Axiom3Report check_axiom3(const GraphFamily& fam, int n);

// Necessary conditions on the first three terms: s_0 = 1 and s_2 >= s_1^2.
// Passing the gate is not sufficient for a family of graphs to exist.
struct GateReport {
  enum class Violated { None, S0, Square };

  bool feasible = true;  // "feasible so far"
  Violated violated = Violated::None;
  Nat s0, s1, s2;
  std::string sequence_name;
};

GateReport gate(const SequenceSpec& s, std::size_t terms = 3);

const char* violated_name(GateReport::Violated v);  // "none"/"lemma_s0"/"lemma_square"

}  // namespace catgraph
