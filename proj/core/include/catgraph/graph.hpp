#pragma once

#include <catgraph/numbers.hpp>

#include <map>
#include <string>
#include <vector>

namespace catgraph {

// Labeled directed rooted tree with one node per vertex. Every edge goes
// from a lower label to a strictly higher label. The root of a full family
// graph carries label 0; subtrees keep their original labels, so their root
// label may be anything.
struct ExpandedGraph {
  struct Vertex {
    int label = 0;
    int parent = -1;  // -1 at the root
    std::vector<int> children;
  };

  std::vector<Vertex> vertices;
  int root = 0;

  int size() const { return static_cast<int>(vertices.size()); }
  int add_vertex(int label, int parent);
};

// Multiplicity-weighted rooted tree. A node with in_mult m stands for m
// sibling copies of its subtree under each represented instance of its
// parent, so the number of vertices a node represents is the product of the
// in_mult values along its root path. Parents always precede children in
// the node array.
struct CondensedGraph {
  struct Node {
    int label = 0;
    Nat in_mult = 1;  // >= 1; exactly 1 at the root
    int parent = -1;
    std::vector<int> children;
  };

  std::vector<Node> nodes;
  int root = 0;

  int size() const { return static_cast<int>(nodes.size()); }
  int add_node(int label, Nat in_mult, int parent);
};

// Represented vertex count per label.
using LabelCensus = std::map<int, Nat>;

ExpandedGraph single_vertex(int label = 0);
CondensedGraph single_node(int label = 0);

// Structural checks; throw std::invalid_argument on violation.
void validate(const ExpandedGraph& g);
void validate(const CondensedGraph& g);

inline Nat default_size_limit() { return Nat(1000000); }

// Represented vertices per node (product of in_mult along the root path).
std::vector<Nat> represented_counts(const CondensedGraph& g);
Nat represented_total(const CondensedGraph& g);

// Materializes every represented vertex. Throws SizeLimitError when the
// represented total exceeds the limit.
ExpandedGraph expand(const CondensedGraph& g, const Nat& size_limit = default_size_limit());

// Groups identically labeled, identically shaped sibling subtrees into one
// node per class. The result is canonical: condensing equal trees yields
// byte-identical serializations.
CondensedGraph condense(const ExpandedGraph& g);

// Canonical form of an arbitrary condensed graph: identical sibling
// subtrees merged (multipliers added), children ordered by (label, shape).
CondensedGraph canonicalize(const CondensedGraph& g);

// Number of directed paths of exactly `length` edges that start at any
// vertex labeled from_label and end at a vertex labeled to_label. Length 0
// counts each matching vertex once (so from_label == to_label is required
// for a nonzero answer). Each path is weighted by the represented count of
// its start vertex times the multipliers of the traversed edges.
Nat count_paths(const CondensedGraph& g, int from_label, int to_label, int length);

// pv[i][l]: number of length-l paths from one represented vertex of node i
// to vertices labeled to_label, for l = 0..max_length.
std::vector<std::vector<Nat>> per_vertex_path_counts(const CondensedGraph& g,
                                                     int to_label,
                                                     int max_length);

// The induced subgraph of `vertex` and its descendants, labels unchanged,
// reindexed with the subtree root at index 0.
ExpandedGraph subtree_at(const ExpandedGraph& g, int vertex);

// True when some edge-preserving bijection maps a onto b with
// label_a(v) = label_b(image) + shift for every vertex.
bool iso_shifted(const ExpandedGraph& a, const ExpandedGraph& b, int shift);

LabelCensus census(const CondensedGraph& g);
LabelCensus census(const ExpandedGraph& g);

bool leaves_all_labeled(const CondensedGraph& g, int n);
bool leaves_all_labeled(const ExpandedGraph& g, int n);

// Canonical code of the labeled tree, ignoring the absolute label of the
// root: two trees have equal shape codes exactly when they are iso_shifted
// by some (unique) shift. Encodes parent-to-child label deltas bottom-up.
std::string shape_code(const ExpandedGraph& g);

// shape_code of the subtree rooted at every vertex, in one pass.
std::vector<std::string> subtree_shape_codes(const ExpandedGraph& g);

// Shape code plus the root label: equal codes <=> label-preserving isomorphy.
std::string canonical_code(const ExpandedGraph& g);

// Canonical code of a condensed graph (multipliers included); computed on
// the canonicalized form, so equal represented trees give equal codes.
std::string canonical_code(const CondensedGraph& g);

}  // namespace catgraph
