#pragma once

#include <catgraph/build.hpp>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace catgraph {

// Path table of the step-n super-family graph: entry(l, v) counts the paths
// of length l that start at a label-v vertex and end at a label-n vertex.
// Entries vanish whenever l + v > n, and the l = 0 row is zero except for
// entry(0, n), which counts the label-n vertices themselves.
struct NTable {
  int n = 0;
  std::vector<std::vector<Nat>> k;  // k[l][v], both indices 0..n

  const Nat& at(int length, int label) const;
  Nat row_sum(int length) const;  // sum over labels
};

NTable compute_ntable(const CondensedGraph& g, int n);
NTable compute_ntable(const GraphFamily& fam, int n);

// Per-length contributions (2 / 2^l) * row_sum(l); their total conjecturally
// equals the next value of the sequence the family realizes.
std::vector<Rational> next_value_summands(const NTable& t);

// Sum of the summands, exact. A fractional result is returned as-is: it is
// evidence against the conjecture, not an error.
Rational predict_next_value(const NTable& t);

// Builds the table for step n+1 from the step-n table alone, using the
// conjectured recurrence for every l >= 1 row. The l = 0 row is not covered
// by the recurrence; it is filled from the trivial-path rule, with
// entry(0, n+1) = predict_next_value(prev). Fractional entries raise
// NonIntegralEntryError (refutation evidence).
NTable predict_ntable(const NTable& prev);

// Compares predicted against computed tables for every step up to n_max,
// and the predicted next value against the closed form S(0, n+1).
struct VerifyReport {
  struct Entry {
    int n = 0;               // the step whose table feeds the prediction
    bool recurrence_ok = true;  // predicted table n+1 == computed table n+1
    bool sum_ok = true;         // predicted next value == S(0, n+1)
    Rational predicted_next;
    // (table, length, label) of the first predicted/computed mismatch
    std::optional<std::tuple<int, int, int>> first_mismatch;
    // (length, label) of a fractional predicted entry, if any
    std::optional<std::pair<int, int>> non_integral;
  };

  int n_max = 0;
  std::vector<Entry> entries;
  bool ok = true;
  // Derivation note for the l = 0 row of predicted tables.
  std::string note;
};

VerifyReport verify_conjectures(int n_max);

// Rows are lengths, columns are labels, with a header row and column.
std::string to_csv(const NTable& t);

}  // namespace catgraph
