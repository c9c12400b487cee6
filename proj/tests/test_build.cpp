#include <catgraph/build.hpp>
#include <catgraph/errors.hpp>
#include <catgraph/io.hpp>
#include <catgraph/numbers.hpp>

#include <doctest.h>

#include "helpers.hpp"

using namespace catgraph;

TEST_SUITE("build") {

TEST_CASE("classic family first steps") {
  const GraphFamily fam = build_classic(3);
  CHECK(fam.new_counts == std::vector<Nat>{1, 1, 2, 5});
  CHECK(census(fam.at(3)) == LabelCensus{{0, 1}, {1, 1}, {2, 2}, {3, 5}});
  CHECK(canonical_code(fam.at(2)) ==
        canonical_code(condense(testutil::classic_step2_expanded())));
  CHECK(canonical_code(fam.at(3)) ==
        canonical_code(condense(testutil::classic_step3_expanded())));
}

TEST_CASE("classic family with no steps") {
  const GraphFamily fam = build_classic(0);
  CHECK(fam.at(0).size() == 1);
  CHECK(fam.new_counts == std::vector<Nat>{1});
}

TEST_CASE("classic step counts are catalan numbers") {
  const GraphFamily fam = build_classic(12);
  for (int n = 0; n <= 12; ++n) CHECK(fam.new_counts[n] == catalan(n));
}

TEST_CASE("fuss family first steps") {
  const GraphFamily fam = build_fuss(3, 2);
  CHECK(fam.new_counts == std::vector<Nat>{1, 1, 3, 12});
  CHECK(census(fam.at(2)) == LabelCensus{{0, 1}, {1, 1}, {2, 3}});
  CHECK(census(fam.at(3)) == LabelCensus{{0, 1}, {1, 1}, {2, 3}, {3, 12}});
}

TEST_CASE("fuss step counts") {
  for (int k = 1; k <= 3; ++k) {
    const GraphFamily fam = build_fuss(10, k);
    for (int n = 0; n <= 10; ++n) CHECK(fam.new_counts[n] == fuss_catalan(n, k));
  }
  const GraphFamily fam = build_fuss(4, 2);
  CHECK(fam.new_counts[4] == 55);
  CHECK_THROWS_AS(build_fuss(3, 0), std::invalid_argument);
}

TEST_CASE("fuss with k=1 coincides with classic") {
  const GraphFamily classic = build_classic(6);
  const GraphFamily fuss = build_fuss(6, 1);
  for (int n = 0; n <= 6; ++n)
    CHECK(canonical_code(classic.at(n)) == canonical_code(fuss.at(n)));
}

TEST_CASE("super family first steps") {
  const GraphFamily fam = build_super(4);
  CHECK(census(fam.at(1)) == LabelCensus{{0, 1}, {1, 2}});
  CHECK(fam.at(1).size() == 2);
  CHECK(fam.at(1).nodes[1].in_mult == 2);
  CHECK(canonical_code(fam.at(2)) ==
        canonical_code(testutil::super_step2_condensed()));
  CHECK(canonical_code(fam.at(3)) ==
        canonical_code(testutil::super_step3_condensed()));
  CHECK(fam.new_counts[4] == 70);
}

TEST_CASE("super step counts") {
  const GraphFamily fam = build_super(12);
  for (int n = 0; n <= 12; ++n) CHECK(fam.new_counts[n] == super_catalan(0, n));
}

TEST_CASE("per-class growth of the super family stays whole") {
  // the per-path rule is fractional from length 2 on, yet every class total
  // divides out
  CHECK(super_rule(2) == Rational(1, 2));
  CHECK_NOTHROW(build_super(10));
}

TEST_CASE("rule-driven builds reproduce the named families") {
  const PathRules ones{std::vector<Rational>(7, Rational(1))};
  const GraphFamily by_rules = build_by_rules(ones, 6);
  const GraphFamily classic = build_classic(6);
  for (int n = 0; n <= 6; ++n)
    CHECK(canonical_code(by_rules.at(n)) == canonical_code(classic.at(n)));

  std::vector<Rational> fuss2;
  for (int l = 0; l < 7; ++l) fuss2.push_back(Rational(binomial(l + 1, l)));
  const GraphFamily by_fuss_rules = build_by_rules(PathRules{fuss2}, 6);
  const GraphFamily fuss = build_fuss(6, 2);
  for (int n = 0; n <= 6; ++n)
    CHECK(canonical_code(by_fuss_rules.at(n)) == canonical_code(fuss.at(n)));
}

TEST_CASE("rule-driven build reports missing rules") {
  // two rules cover two steps; the third step has length-2 paths
  const PathRules rules{{Rational(2), Rational(5)}};
  const GraphFamily fam = build_by_rules(rules, 2);
  CHECK(fam.new_counts == std::vector<Nat>{1, 2, 14});
  CHECK_THROWS_AS(build_by_rules(rules, 3), RuleMissingError);
}

TEST_CASE("rule-driven build rejects fractional class growth") {
  const PathRules rules{{Rational(1, 2)}};
  try {
    build_by_rules(rules, 1);
    FAIL("expected NonIntegralGrowthError");
  } catch (const NonIntegralGrowthError& e) {
    CHECK(e.step == 1);
    CHECK(e.value == Rational(1, 2));
  }
  CHECK_THROWS_AS(PathRules{{Rational(-1)}}, std::invalid_argument);
}

TEST_CASE("families grow monotonically") {
  const GraphFamily fam = build_super(8);
  for (int n = 1; n <= 8; ++n) {
    const CondensedGraph& prev = fam.at(n - 1);
    const CondensedGraph& cur = fam.at(n);
    REQUIRE(prev.size() <= cur.size());
    for (int v = 0; v < prev.size(); ++v) {
      CHECK(cur.nodes[v].label == prev.nodes[v].label);
      CHECK(cur.nodes[v].in_mult == prev.nodes[v].in_mult);
      CHECK(cur.nodes[v].parent == prev.nodes[v].parent);
    }
    // everything new is a leaf labeled n
    for (int v = prev.size(); v < cur.size(); ++v) {
      CHECK(cur.nodes[v].label == n);
      CHECK(cur.nodes[v].children.empty());
    }
  }
}

TEST_CASE("expanded and condensed censuses agree") {
  const GraphFamily classic = build_classic(8);
  for (int n = 0; n <= 8; ++n)
    CHECK(census(expand(classic.at(n))) == census(classic.at(n)));
  const GraphFamily super = build_super(6);
  for (int n = 0; n <= 6; ++n)
    CHECK(census(expand(super.at(n))) == census(super.at(n)));
}

TEST_CASE("building twice is deterministic") {
  CHECK(to_json(build_super(7)) == to_json(build_super(7)));
  CHECK(to_json(build_classic(7)) == to_json(build_classic(7)));
}

}  // TEST_SUITE
