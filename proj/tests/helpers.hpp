#pragma once

#include <catgraph/build.hpp>
#include <catgraph/graph.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <tuple>
#include <vector>

namespace testutil {

using catgraph::CondensedGraph;
using catgraph::ExpandedGraph;
using catgraph::Nat;

// Independent Catalan oracle: the convolution recurrence, no binomials.
inline Nat catalan_convolution(int n) {
  std::vector<Nat> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int i = 0; i < m; ++i)
      c[m] += c[i] * c[m - 1 - i];
  return c[static_cast<std::size_t>(n)];
}

inline Nat factorial_loop(int n) {
  Nat f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Brute-force path counting on an expanded graph: a downward path is the
// unique ancestor chain between its endpoints, so walk every vertex's
// ancestry once.
inline std::map<std::tuple<int, int, int>, Nat> brute_force_paths(
    const ExpandedGraph& g) {
  std::map<std::tuple<int, int, int>, Nat> counts;
  for (int w = 0; w < g.size(); ++w) {
    int u = w;
    int dist = 0;
    while (u >= 0) {
      counts[{g.vertices[u].label, g.vertices[w].label, dist}] += 1;
      u = g.vertices[u].parent;
      ++dist;
    }
  }
  return counts;
}

// Brute-force shifted isomorphism by recursive child matching; only for
// small trees.
inline bool brute_force_iso(const ExpandedGraph& a, const ExpandedGraph& b,
                            int ra, int rb, int shift) {
  if (a.vertices[ra].label != b.vertices[rb].label + shift) return false;
  const auto& ca = a.vertices[ra].children;
  auto cb = b.vertices[rb].children;
  if (ca.size() != cb.size()) return false;
  std::sort(cb.begin(), cb.end());
  do {
    bool all = true;
    for (std::size_t i = 0; i < ca.size() && all; ++i)
      all = brute_force_iso(a, b, ca[i], cb[i], shift);
    if (all) return true;
  } while (std::next_permutation(cb.begin(), cb.end()));
  return false;
}

inline bool brute_force_iso(const ExpandedGraph& a, const ExpandedGraph& b,
                            int shift) {
  if (a.vertices.size() != b.vertices.size()) return false;
  return brute_force_iso(a, b, a.root, b.root, shift);
}

// Random labeled tree with labels strictly increasing along edges. Small
// label jumps keep duplicate subtree shapes likely, which exercises the
// condenser.
inline ExpandedGraph random_tree(std::mt19937& rng, int max_vertices) {
  ExpandedGraph g = catgraph::single_vertex(0);
  std::uniform_int_distribution<int> jump(1, 2);
  const int target = std::uniform_int_distribution<int>(1, max_vertices)(rng);
  while (g.size() < target) {
    const int parent = std::uniform_int_distribution<int>(0, g.size() - 1)(rng);
    g.add_vertex(g.vertices[parent].label + jump(rng), parent);
  }
  return g;
}

// Random condensed graph via a random tree with random multipliers stacked
// on top (root stays at 1).
inline CondensedGraph random_condensed(std::mt19937& rng, int max_nodes) {
  const ExpandedGraph shape = random_tree(rng, max_nodes);
  CondensedGraph g;
  std::uniform_int_distribution<int> mult(1, 3);
  for (int v = 0; v < shape.size(); ++v)
    g.add_node(shape.vertices[v].label, v == 0 ? 1 : mult(rng),
               shape.vertices[v].parent);
  return g;
}

// Hand-built graphs used across suites.

// The third classic graph: 0 -> 1 -> 2 and 0 -> 2.
inline ExpandedGraph classic_step2_expanded() {
  ExpandedGraph g = catgraph::single_vertex(0);
  const int one = g.add_vertex(1, 0);
  g.add_vertex(2, one);
  g.add_vertex(2, 0);
  return g;
}

// The fourth classic graph: the step-2 graph plus one 3 under each 2, one
// under the 1, and two under the root.
inline ExpandedGraph classic_step3_expanded() {
  ExpandedGraph g = classic_step2_expanded();
  g.add_vertex(3, 2);  // under the 2 that hangs off the 1
  g.add_vertex(3, 3);  // under the 2 that hangs off the root
  g.add_vertex(3, 1);
  g.add_vertex(3, 0);
  g.add_vertex(3, 0);
  return g;
}

// Step-2 super graph in both forms: two 1s with two 2s each, two 2s at root.
inline ExpandedGraph super_step2_expanded() {
  ExpandedGraph g = catgraph::single_vertex(0);
  const int one_a = g.add_vertex(1, 0);
  const int one_b = g.add_vertex(1, 0);
  g.add_vertex(2, one_a);
  g.add_vertex(2, one_a);
  g.add_vertex(2, one_b);
  g.add_vertex(2, one_b);
  g.add_vertex(2, 0);
  g.add_vertex(2, 0);
  return g;
}

inline CondensedGraph super_step2_condensed() {
  CondensedGraph g = catgraph::single_node(0);
  const int one = g.add_node(1, 2, 0);
  g.add_node(2, 2, one);
  g.add_node(2, 2, 0);
  return g;
}

// Step-3 super graph in condensed form: root children (1 x2), (2 x2),
// (3 x4); under the 1: (2 x2) and (3 x2); every 2 chains to (3 x2).
inline CondensedGraph super_step3_condensed() {
  CondensedGraph g = catgraph::single_node(0);
  const int one = g.add_node(1, 2, 0);
  const int two_under_one = g.add_node(2, 2, one);
  g.add_node(3, 2, two_under_one);
  g.add_node(3, 2, one);
  const int two = g.add_node(2, 2, 0);
  g.add_node(3, 2, two);
  g.add_node(3, 4, 0);
  return g;
}

}  // namespace testutil
