#pragma once

#include <catgraph/numbers.hpp>

#include <stdexcept>
#include <string>

namespace catgraph {

// strict_cat on inputs with gcd(a,b) != 1.
class NotCoprimeError : public std::invalid_argument {
 public:
  NotCoprimeError(Nat a_in, Nat b_in)
      : std::invalid_argument("strict_cat requires coprime arguments, got (" +
                              a_in.str() + ", " + b_in.str() + ")"),
        a(std::move(a_in)),
        b(std::move(b_in)) {}
  Nat a;
  Nat b;
};

// Expanding a condensed graph would materialize more vertices than allowed.
class SizeLimitError : public std::runtime_error {
 public:
  SizeLimitError(Nat requested_in, Nat limit_in)
      : std::runtime_error("expansion needs " + requested_in.str() +
                           " vertices, limit is " + limit_in.str()),
        requested(std::move(requested_in)),
        limit(std::move(limit_in)) {}
  Nat requested;
  Nat limit;
};

// A growth step met paths of a length the rule set does not cover.
class RuleMissingError : public std::runtime_error {
 public:
  explicit RuleMissingError(int length_in)
      : std::runtime_error("no rule for path length " +
                           std::to_string(length_in)),
        length(length_in) {}
  int length;
};

// A growth step asked a vertex class for a fractional number of children.
// This is refutation evidence: the construction is ill-defined at that point.
class NonIntegralGrowthError : public std::runtime_error {
 public:
  NonIntegralGrowthError(int step_in, int node_in, Rational value_in)
      : std::runtime_error("step " + std::to_string(step_in) + ": node " +
                           std::to_string(node_in) + " would gain " +
                           to_string(value_in) + " children"),
        step(step_in),
        node(node_in),
        value(std::move(value_in)) {}
  int step;
  int node;
  Rational value;
};

// A predicted path-table entry came out fractional (refutation evidence).
class NonIntegralEntryError : public std::runtime_error {
 public:
  NonIntegralEntryError(int length_in, int label_in, Rational value_in)
      : std::runtime_error("predicted entry at length " +
                           std::to_string(length_in) + ", label " +
                           std::to_string(label_in) + " is " +
                           to_string(value_in)),
        length(length_in),
        label(label_in),
        value(std::move(value_in)) {}
  int length;
  int label;
  Rational value;
};

}  // namespace catgraph
