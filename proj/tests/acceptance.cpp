// Acceptance suite: one criterion per entry, exact expected values, wall-time
// budgets enforced. Run directly or through ctest; any failure is fatal.

#include <catgraph/axioms.hpp>
#include <catgraph/build.hpp>
#include <catgraph/infer.hpp>
#include <catgraph/io.hpp>
#include <catgraph/ntable.hpp>
#include <catgraph/numbers.hpp>
#include <catgraph/sequences.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "helpers.hpp"

namespace {

using namespace catgraph;

struct Failure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure{message};
}

template <typename T, typename U>
void require_eq(const T& actual, const U& expected, const std::string& what) {
  std::ostringstream os;
  os << what << ": got " << actual << ", expected " << expected;
  require(actual == T(expected), os.str());
}

const std::vector<std::vector<long long>> kTriangle = {
    {1},
    {1, 1},
    {1, 2, 2},
    {1, 3, 5, 5},
    {1, 4, 9, 14, 14},
    {1, 5, 14, 28, 42, 42},
    {1, 6, 20, 48, 90, 132, 132},
    {1, 7, 27, 75, 165, 297, 429, 429},
    {1, 8, 35, 110, 275, 572, 1001, 1430, 1430},
};

// ------------------------------------------------------------ criterion 1

void sequence_golden_values() {
  const std::vector<long long> catalan_head = {1, 1, 2, 5, 14};
  for (int n = 0; n < 5; ++n) require_eq(catalan(n), catalan_head[n], "catalan");

  const std::vector<long long> fuss2 = {1, 1, 3, 12, 55};
  for (int n = 0; n < 5; ++n) require_eq(fuss_catalan(n, 2), fuss2[n], "fuss k=2");

  require_eq(internal_triangles(4), 2, "t(4)");
  require_eq(internal_triangles(5), 14, "t(5)");
  require_eq(internal_triangles(6), 72, "t(6)");

  const std::vector<long long> super0 = {1, 2, 6, 20, 70};
  const std::vector<long long> super1 = {2, 2, 4, 10, 28};
  for (int n = 0; n < 5; ++n) {
    require_eq(super_catalan(0, n), super0[n], "S(0,n)");
    require_eq(super_catalan(1, n), super1[n], "S(1,n)");
  }
}

// ------------------------------------------------------------ criterion 2

void triangle_tables() {
  int entries = 0;
  for (std::size_t n = 0; n < kTriangle.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      require_eq(catalan_triangle(n, k), kTriangle[n][k],
                 "triangle(" + std::to_string(n) + "," + std::to_string(k) + ")");
      ++entries;
    }
  require_eq(entries, 45, "triangle entry count");

  // fraction table rows a = 1..9: numerator C(a-1,b), denominator a-b,
  // and the fraction equals the weak (a,b) value
  for (int a = 1; a <= 9; ++a)
    for (int b = 0; b < a; ++b) {
      const Nat numerator_value = catalan_triangle(a - 1, b);
      const Nat denominator_value = a - b;
      require(Rational(numerator_value, denominator_value) == weak_cat(a, b),
              "fraction table entry (" + std::to_string(a) + "," +
                  std::to_string(b) + ") disagrees with weak cat");
    }
  require(weak_cat(4, 2) == Rational(5, 2), "weak cat (4,2)");

  // the fraction table rows, frozen
  const std::string fraction_rows =
      "1/1\n"
      "1/2 1/1\n"
      "1/3 2/2 2/1\n"
      "1/4 3/3 5/2 5/1\n"
      "1/5 4/4 9/3 14/2 14/1\n"
      "1/6 5/5 14/4 28/3 42/2 42/1\n"
      "1/7 6/6 20/5 48/4 90/3 132/2 132/1\n"
      "1/8 7/7 27/6 75/5 165/4 297/3 429/2 429/1\n"
      "1/9 8/8 35/7 110/6 275/5 572/4 1001/3 1430/2 1430/1\n";
  const auto cli = testutil::run_cli("triangle --rows 9 --ab");
  require(cli.exit_code == 0, "triangle CLI exit code");
  require(cli.out == fraction_rows, "fraction table does not reproduce the reference rows");

  std::string plain_rows;
  for (std::size_t n = 0; n < kTriangle.size(); ++n) {
    for (std::size_t k = 0; k <= n; ++k)
      plain_rows += (k ? " " : "") + std::to_string(kTriangle[n][k]);
    plain_rows += "\n";
  }
  const auto plain = testutil::run_cli("triangle --rows 8");
  require(plain.out == plain_rows, "triangle rows do not reproduce the reference table");
}

// ------------------------------------------------------------ criterion 3

void graph_golden_structure() {
  const GraphFamily classic = build_classic(3);
  require(classic.new_counts == std::vector<Nat>{1, 1, 2, 5}, "classic step counts");
  require(census(classic.at(3)) == LabelCensus{{0, 1}, {1, 1}, {2, 2}, {3, 5}},
          "classic census at step 3");

  const GraphFamily fuss = build_fuss(3, 2);
  require(fuss.new_counts == std::vector<Nat>{1, 1, 3, 12}, "fuss step counts");
  require(census(fuss.at(3)) == LabelCensus{{0, 1}, {1, 1}, {2, 3}, {3, 12}},
          "fuss census at step 3");

  const GraphFamily super = build_super(3);
  require(canonical_code(super.at(3)) ==
              canonical_code(testutil::super_step3_condensed()),
          "super step-3 condensed structure");
  require(canonical_code(classic.at(3)) ==
              canonical_code(condense(testutil::classic_step3_expanded())),
          "classic step-3 structure");
}

// ------------------------------------------------------------ criterion 4

void axiom_suite() {
  std::vector<std::pair<GraphFamily, SequenceSpec>> families;
  families.emplace_back(build_classic(6), SequenceSpec::catalan());
  families.emplace_back(build_fuss(6, 1), SequenceSpec::fuss(1));
  families.emplace_back(build_fuss(6, 2), SequenceSpec::fuss(2));
  families.emplace_back(build_fuss(6, 3), SequenceSpec::fuss(3));
  families.emplace_back(build_super(6), SequenceSpec::super_catalan_row(0));

  for (const auto& [fam, spec] : families) {
    const std::string name = fam.kind_name() +
                             (fam.kind == GraphFamily::Kind::Fuss
                                  ? ":" + fam.fuss_k.str()
                                  : "");
    require(check_axiom1(fam, sequence_values(spec, 7)).pass,
            name + ": step counts diverge from " + spec.name());
    for (int n = 0; n <= 6; ++n) {
      const auto a2 = check_axiom2(fam, n);
      require(a2.status == Axiom2Report::Status::Pass,
              name + ": subtree check did not pass at step " + std::to_string(n));
      for (const auto& match : a2.classes)
        require(match.expected && match.matched_step == n - match.label,
                name + ": a label-" + std::to_string(match.label) +
                    " subtree matched step " + std::to_string(match.matched_step) +
                    " instead of " + std::to_string(n - match.label));
      require(check_axiom3(fam, n).pass,
              name + ": leaf labels wrong at step " + std::to_string(n));
    }
  }
}

// ------------------------------------------------------------ criterion 5

void step_counts_at_scale() {
  const GraphFamily classic = build_classic(12);
  for (int n = 0; n <= 12; ++n)
    require_eq(classic.new_counts[n], catalan(n), "classic step " + std::to_string(n));

  for (int k = 1; k <= 3; ++k) {
    const GraphFamily fuss = build_fuss(10, k);
    for (int n = 0; n <= 10; ++n)
      require_eq(fuss.new_counts[n], fuss_catalan(n, k),
                 "fuss k=" + std::to_string(k) + " step " + std::to_string(n));
  }

  const GraphFamily super = build_super(12);
  for (int n = 0; n <= 12; ++n)
    require_eq(super.new_counts[n], super_catalan(0, n),
               "super step " + std::to_string(n));
}

// ------------------------------------------------------------ criterion 6

void gate_verdicts() {
  for (int n = 2; n <= 8; ++n) {
    const auto report = gate(SequenceSpec::triangle_row(n));
    require(!report.feasible && report.violated == GateReport::Violated::Square,
            "row " + std::to_string(n) + " should fail the square condition");
  }
  for (int k = 2; k <= 8; ++k) {
    const auto report = gate(SequenceSpec::triangle_column(k));
    require(!report.feasible && report.violated == GateReport::Violated::S0,
            "column " + std::to_string(k) + " should fail the first-term condition");
  }
  {
    const auto report = gate(SequenceSpec::triangle_column(1));
    require(!report.feasible && report.violated == GateReport::Violated::Square,
            "column 1 should fail the square condition");
  }
  for (int i = 3; i <= 8; ++i) {
    const auto report = gate(SequenceSpec::triangle_diagonal(i));
    require(!report.feasible && report.violated == GateReport::Violated::Square,
            "diagonal " + std::to_string(i) + " should fail the square condition");
  }
  require(gate(SequenceSpec::triangle_diagonal(0)).feasible, "diagonal 0 should pass");
  require(gate(SequenceSpec::triangle_diagonal(2)).feasible, "diagonal 2 should pass");
}

// ------------------------------------------------------------ criterion 7

void inference_contradiction() {
  const auto report = infer_rules(SequenceSpec::internal_triangles(), 10);
  require(report.outcome == InferenceReport::Outcome::Contradiction,
          "internal triangles should contradict");
  require(report.last_step == 3, "contradiction should land on step 3");
  require(report.inferred.rules.size() == 2, "two rules should be inferred");
  require(report.inferred.rules[0] == 2, "r(0) should be 2");
  require(report.inferred.rules[1] == 5, "r(1) should be 5");
  require(report.fail_forced == 98, "forced count should be 98");
  require(report.fail_available == 72, "available count should be 72");

  const auto& step = report.trace.back();
  require(step.contributions.size() == 3, "forced count should have 3 parts");
  require(step.contributions[0].amount == 28, "trivial-path part should be 28");
  require(step.contributions[1].amount == 20, "label-1 part should be 20");
  require(step.contributions[2].amount == 50, "root part should be 50");

  const auto cli = testutil::run_cli("infer --seq internal-triangles");
  require(cli.exit_code == 1, "CLI should exit 1 on the contradiction");
  require(cli.out.find("forced=98") != std::string::npos, "CLI should print forced=98");
  require(cli.out.find("available=72") != std::string::npos,
          "CLI should print available=72");
  require(cli.out.find("28+20+50") != std::string::npos,
          "CLI should print the 28+20+50 decomposition");
}

// ------------------------------------------------------------ criterion 8

void path_tables() {
  const GraphFamily fam = build_super(4);

  const std::vector<std::vector<long long>> table3 = {
      {0, 0, 0, 20}, {4, 4, 12, 0}, {8, 8, 0, 0}, {8, 0, 0, 0}};
  const NTable t3 = compute_ntable(fam, 3);
  for (int l = 0; l <= 3; ++l)
    for (int v = 0; v <= 3; ++v)
      require_eq(t3.at(l, v), table3[l][v],
                 "3-table (" + std::to_string(l) + "," + std::to_string(v) + ")");
  require_eq(t3.at(1, 2), 12, "3-table entry at length 1, label 2");

  const std::vector<std::vector<long long>> table4 = {{0, 0, 0, 0, 70},
                                                      {10, 8, 12, 40, 0},
                                                      {20, 16, 24, 0, 0},
                                                      {24, 16, 0, 0, 0},
                                                      {16, 0, 0, 0, 0}};
  const NTable t4 = compute_ntable(fam, 4);
  for (int l = 0; l <= 4; ++l)
    for (int v = 0; v <= 4; ++v)
      require_eq(t4.at(l, v), table4[l][v],
                 "4-table (" + std::to_string(l) + "," + std::to_string(v) + ")");
  require_eq(t4.at(1, 0), 10, "4-table entry at length 1, label 0");

  const auto summands = next_value_summands(t3);
  require(summands.size() == 4, "summand count");
  require(summands[0] == 40 && summands[1] == 20 && summands[2] == 8 &&
              summands[3] == 2,
          "successor sum should decompose as 40+20+8+2");
  require(predict_next_value(t3) == 70, "successor sum on the 3-table");
}

// ------------------------------------------------------------ criterion 9

void conjecture_verification() {
  const VerifyReport report = verify_conjectures(12);
  for (const auto& entry : report.entries) {
    std::string witness;
    if (entry.first_mismatch) {
      const auto& [table, length, label] = *entry.first_mismatch;
      witness = " (table " + std::to_string(table) + ", length " +
                std::to_string(length) + ", label " + std::to_string(label) + ")";
    }
    if (entry.non_integral)
      witness = " (fractional at length " + std::to_string(entry.non_integral->first) +
                ", label " + std::to_string(entry.non_integral->second) + ")";
    require(entry.recurrence_ok,
            "recurrence refuted at step " + std::to_string(entry.n) + witness);
    require(entry.sum_ok, "successor sum refuted at step " + std::to_string(entry.n) +
                              ": got " + to_string(entry.predicted_next));
  }
  require(report.ok, "verification did not pass overall");
  require(report.entries.size() == 12, "verification should cover 12 transitions");
}

// ------------------------------------------------------------ criterion 10

void property_suites() {
  // identity battery
  for (int a = 0; a <= 30; ++a)
    for (int b = 0; b <= 30; ++b) {
      if (a == 0 && b == 0) continue;
      require(weak_cat(a, b) == weak_cat(b, a), "symmetry");
    }
  for (int n = 0; n <= 12; ++n)
    for (int k = 1; k <= 4; ++k)
      require(weak_cat(n, k * n + 1) == Rational(fuss_catalan(n, k)),
              "weak cat vs fuss");
  for (int a = 1; a <= 20; ++a) require(weak_cat(a, 1) == 1, "unit column");
  for (int a = 1; a <= 30; ++a)
    for (int b = 0; b < a; ++b)
      require(Rational(catalan_triangle(a - 1, b)) == Rational(a - b) * weak_cat(a, b),
              "triangle factorization");
  for (int a = 2; a <= 30; ++a)
    for (int b = 2; b <= 30; ++b)
      require(weak_cat(a, b) ==
                  weak_cat(a, b - 1) + Rational(a - 1, a) * weak_cat(a - 1, b),
              "two-term recurrence");
  for (int n = 2; n <= 30; ++n)
    require(weak_cat(3, n) == weak_cat(3, n - 1) + Rational(n + 1, 3),
            "a=3 recurrence");
  for (int n = 4; n <= 30; ++n)
    require(Rational(n) * n * weak_cat(n + 1, 1) * weak_cat(n + 1, 1) >
                Rational(n) * weak_cat(n + 2, 2),
            "diagonal inequality");
  for (int n = 1; n <= 12; ++n) {
    for (int k = 2; k < n + 1; ++k)
      require(catalan_triangle(n + 1, k) ==
                  catalan_triangle(n + 1, k - 1) + catalan_triangle(n, k),
              "triangle recurrence");
    require(catalan_triangle(n + 1, n + 1) == catalan_triangle(n + 1, n),
            "triangle edge recurrence");
  }
  for (int n = 0; n <= 12; ++n)
    require(catalan_triangle(n, n) == catalan(n), "main diagonal");

  // expanded/condensed path-count equivalence on every built graph that
  // stays within 10^4 represented vertices
  std::vector<GraphFamily> families;
  families.push_back(build_classic(9));
  families.push_back(build_fuss(7, 2));
  families.push_back(build_fuss(6, 3));
  families.push_back(build_super(7));
  const Nat budget(10000);
  int graphs_checked = 0;
  for (const GraphFamily& fam : families) {
    for (int n = 0; n <= fam.steps(); ++n) {
      const CondensedGraph& g = fam.at(n);
      if (represented_total(g) > budget) continue;
      ++graphs_checked;
      const ExpandedGraph e = expand(g, budget);
      const auto brute = testutil::brute_force_paths(e);
      const auto rep = represented_counts(g);
      for (int to = 0; to <= n; ++to) {
        const auto pv = per_vertex_path_counts(g, to, n + 1);
        for (int from = 0; from <= n; ++from)
          for (int len = 0; len <= n + 1; ++len) {
            Nat fast = 0;
            for (int v = 0; v < g.size(); ++v)
              if (g.nodes[v].label == from && pv[v][len] != 0)
                fast += rep[v] * pv[v][len];
            const auto it = brute.find({from, to, len});
            const Nat expected = it == brute.end() ? Nat(0) : it->second;
            require(fast == expected,
                    fam.kind_name() + " step " + std::to_string(n) +
                        ": path counts diverge at from=" + std::to_string(from) +
                        " to=" + std::to_string(to) + " len=" + std::to_string(len));
          }
      }
    }
  }
  require(graphs_checked >= 30, "too few graphs fed to the path-count oracle");

  // condense/expand round trips on seeded random trees
  std::mt19937 rng(20250810);
  for (int trial = 0; trial < 100; ++trial) {
    const ExpandedGraph t = testutil::random_tree(rng, 50);
    require(iso_shifted(expand(condense(t)), t, 0), "round trip broke a tree");
    require(census(condense(t)) == census(t), "condense changed a census");
    const CondensedGraph g = testutil::random_condensed(rng, 12);
    require(canonical_code(condense(expand(g))) == canonical_code(canonicalize(g)),
            "expand/condense canonical mismatch");
  }
}

// ----------------------------------------------------------------- driver

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "sequence golden values", 1.0, sequence_golden_values},
      {2, "triangle and fraction tables", 1.0, triangle_tables},
      {3, "family graph structure", 1.0, graph_golden_structure},
      {4, "axioms on expanded graphs to step 6", 30.0, axiom_suite},
      {5, "step counts at depth", 60.0, step_counts_at_scale},
      {6, "feasibility gate verdicts", 1.0, gate_verdicts},
      {7, "rule-inference contradiction", 1.0, inference_contradiction},
      {8, "path tables and successor sums", 5.0, path_tables},
      {9, "recurrence verification to step 12", 300.0, conjecture_verification},
      {10, "property suites", 60.0, property_suites},
  };

  const std::string only = argc > 1 ? argv[1] : "";
  int failures = 0;
  for (const auto& criterion : criteria) {
    if (!only.empty() && only != std::to_string(criterion.number)) continue;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criterion.run();
    } catch (const Failure& failure) {
      error = failure.message;
    } catch (const std::exception& e) {
      error = std::string("unexpected exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (error.empty() && elapsed > criterion.budget_seconds)
      error = "exceeded the " + std::to_string(criterion.budget_seconds) +
              "s budget";
    std::printf("%s  %2d  %-40s %7.2fs (budget %.0fs)\n",
                error.empty() ? "PASS" : "FAIL", criterion.number,
                criterion.name.c_str(), elapsed, criterion.budget_seconds);
    if (!error.empty()) {
      std::printf("      -> %s\n", error.c_str());
      ++failures;
    }
  }
  if (failures) {
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("acceptance: all criteria passed\n");
  return 0;
}
