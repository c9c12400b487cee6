#pragma once

#include <catgraph/axioms.hpp>

#include <optional>
#include <string>
#include <vector>

namespace catgraph {

// Derives the path-length rules a sequence forces, one per step. At step n
// the rules already fixed determine how many label-n vertices must be added
// (the forced count); the only paths without a rule yet have length n-1 and
// all start at the root, so the remaining budget fixes r(n-1). A negative
// remainder is a contradiction: the sequence admits no family of graphs
// governed by uniform path-length rules.
struct InferenceReport {
  enum class Outcome {
    Consistent,     // no obstruction up to last_step
    Contradiction,  // forced > available at fail step
    NonIntegral,    // a rule or a per-class total came out fractional
    InfeasibleS0,   // s_0 != 1; nothing to infer
  };

  struct Contribution {
    int length = 0;
    int from_label = 0;
    Nat paths;        // paths of this length from this label
    Rational rule;    // the known rule applied to them
    Rational amount;  // paths * rule
  };

  struct Step {
    int n = 0;
    Nat available;       // s_n
    Rational forced;     // sum of known-rule contributions
    std::vector<Contribution> contributions;  // (length asc, from_label desc)
    Nat frontier_paths;  // length-(n-1) paths, all from the root
    std::optional<Rational> new_rule;         // r(n-1) when determined
  };

  std::string sequence_name;
  bool integral_rules = false;
  PathRules inferred;
  std::vector<Step> trace;
  Outcome outcome = Outcome::Consistent;
  int last_step = 0;  // last n processed; the fail step for failures

  // failure payload
  Rational fail_forced;
  Nat fail_available;
  Rational fail_value;      // NonIntegral: the offending exact value
  std::string fail_detail;

  bool consistent() const { return outcome == Outcome::Consistent; }
};

// Processes steps 1..n_max (clamped to the sequence length when finite).
// All failure modes are report outcomes, never exceptions.
InferenceReport infer_rules(const SequenceSpec& s, int n_max,
                            bool integral_rules = false);

// Gate first, inference second; whichever decides first is the certificate.
struct Certificate {
  std::optional<GateReport> gate;
  std::optional<InferenceReport> inference;

  bool infeasible() const {
    if (gate) return !gate->feasible;
    return inference && !inference->consistent();
  }
};

Certificate certify_infeasible(const SequenceSpec& s, int n_max);

}  // namespace catgraph
