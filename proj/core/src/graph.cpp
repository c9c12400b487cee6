#include <catgraph/graph.hpp>

#include <catgraph/errors.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace catgraph {

int ExpandedGraph::add_vertex(int label, int parent) {
  const int id = size();
  vertices.push_back({label, parent, {}});
  if (parent >= 0) vertices[parent].children.push_back(id);
  return id;
}

int CondensedGraph::add_node(int label, Nat in_mult, int parent) {
  const int id = size();
  nodes.push_back({label, std::move(in_mult), parent, {}});
  if (parent >= 0) nodes[parent].children.push_back(id);
  return id;
}

ExpandedGraph single_vertex(int label) {
  ExpandedGraph g;
  g.add_vertex(label, -1);
  return g;
}

CondensedGraph single_node(int label) {
  CondensedGraph g;
  g.add_node(label, 1, -1);
  return g;
}

namespace {

const std::vector<ExpandedGraph::Vertex>& nodes_of(const ExpandedGraph& g) {
  return g.vertices;
}
const std::vector<CondensedGraph::Node>& nodes_of(const CondensedGraph& g) {
  return g.nodes;
}

template <typename G>
void validate_tree(const G& g, int root, int size) {
  if (size == 0) throw std::invalid_argument("graph has no vertices");
  if (root < 0 || root >= size) throw std::invalid_argument("root out of range");
  int roots = 0;
  long long child_links = 0;
  for (int v = 0; v < size; ++v) {
    const auto& node = nodes_of(g)[v];
    if (node.parent == -1) {
      ++roots;
      if (v != root) throw std::invalid_argument("parentless vertex is not the root");
    } else {
      if (node.parent < 0 || node.parent >= size)
        throw std::invalid_argument("parent out of range");
      if (node.parent >= v)
        throw std::invalid_argument("parents must precede children");
      if (nodes_of(g)[node.parent].label >= node.label)
        throw std::invalid_argument("labels must strictly increase along edges");
      const auto& siblings = nodes_of(g)[node.parent].children;
      if (std::count(siblings.begin(), siblings.end(), v) != 1)
        throw std::invalid_argument("parent/child links inconsistent");
    }
    for (int c : node.children) {
      if (c < 0 || c >= size || nodes_of(g)[c].parent != v)
        throw std::invalid_argument("parent/child links inconsistent");
    }
    child_links += static_cast<long long>(node.children.size());
  }
  if (roots != 1 || child_links != size - 1)
    throw std::invalid_argument("edges do not form a tree");
}

}  // namespace

void validate(const ExpandedGraph& g) { validate_tree(g, g.root, g.size()); }

void validate(const CondensedGraph& g) {
  validate_tree(g, g.root, g.size());
  if (g.nodes[g.root].in_mult != 1)
    throw std::invalid_argument("root multiplier must be 1");
  for (const auto& node : g.nodes)
    if (node.in_mult < 1)
      throw std::invalid_argument("multipliers must be >= 1");
}

std::vector<Nat> represented_counts(const CondensedGraph& g) {
  std::vector<Nat> rep(g.size());
  for (int v = 0; v < g.size(); ++v) {
    const auto& node = g.nodes[v];
    rep[v] = node.parent < 0 ? node.in_mult : rep[node.parent] * node.in_mult;
  }
  return rep;
}

Nat represented_total(const CondensedGraph& g) {
  Nat total = 0;
  for (const Nat& r : represented_counts(g)) total += r;
  return total;
}

ExpandedGraph expand(const CondensedGraph& g, const Nat& size_limit) {
  const Nat total = represented_total(g);
  if (total > size_limit) throw SizeLimitError(total, size_limit);

  ExpandedGraph out;
  const std::function<void(int, int)> emit = [&](int cnode, int parent_vid) {
    const int vid = out.add_vertex(g.nodes[cnode].label, parent_vid);
    for (int c : g.nodes[cnode].children)
      for (Nat j = 0; j < g.nodes[c].in_mult; ++j) emit(c, vid);
  };
  emit(g.root, -1);
  return out;
}

std::vector<std::string> subtree_shape_codes(const ExpandedGraph& g) {
  std::vector<std::string> code(g.vertices.size());
  for (int v = g.size() - 1; v >= 0; --v) {
    const auto& vertex = g.vertices[v];
    std::vector<int> kids = vertex.children;
    std::sort(kids.begin(), kids.end(), [&](int x, int y) {
      const int dx = g.vertices[x].label, dy = g.vertices[y].label;
      return dx != dy ? dx < dy : code[x] < code[y];
    });
    std::string& c = code[v];
    c = "(";
    for (int k : kids) {
      c += std::to_string(g.vertices[k].label - vertex.label);
      c += ":";
      c += code[k];
    }
    c += ")";
  }
  return code;
}

std::string shape_code(const ExpandedGraph& g) {
  return subtree_shape_codes(g)[g.root];
}

std::string canonical_code(const ExpandedGraph& g) {
  return std::to_string(g.vertices[g.root].label) + "|" + shape_code(g);
}

bool iso_shifted(const ExpandedGraph& a, const ExpandedGraph& b, int shift) {
  if (a.vertices.size() != b.vertices.size()) return false;
  if (a.vertices[a.root].label != b.vertices[b.root].label + shift) return false;
  return shape_code(a) == shape_code(b);
}

CondensedGraph condense(const ExpandedGraph& g) {
  const auto codes = subtree_shape_codes(g);

  CondensedGraph out;
  const std::function<void(int, int, Nat)> build = [&](int vexp, int parent,
                                                       Nat mult) {
    const int id = out.add_node(g.vertices[vexp].label, std::move(mult), parent);
    // group this vertex's children into classes of equal (label, shape)
    std::vector<int> kids = g.vertices[vexp].children;
    std::sort(kids.begin(), kids.end(), [&](int x, int y) {
      const int lx = g.vertices[x].label, ly = g.vertices[y].label;
      return lx != ly ? lx < ly : codes[x] < codes[y];
    });
    for (std::size_t i = 0; i < kids.size();) {
      std::size_t j = i;
      while (j < kids.size() && g.vertices[kids[j]].label == g.vertices[kids[i]].label &&
             codes[kids[j]] == codes[kids[i]])
        ++j;
      build(kids[i], id, Nat(j - i));
      i = j;
    }
  };
  build(g.root, -1, 1);
  return out;
}

namespace {

// Bottom-up canonical codes of a condensed graph, with identical sibling
// subtrees merged at the code level (their multipliers added).
std::vector<std::string> condensed_codes(const CondensedGraph& g) {
  std::vector<std::string> code(g.nodes.size());
  for (int v = g.size() - 1; v >= 0; --v) {
    const auto& node = g.nodes[v];
    std::vector<std::pair<int, Nat>> entries;  // (child, merged mult), per distinct code
    for (int c : node.children) {
      bool merged = false;
      for (auto& [rep, mult] : entries) {
        if (code[rep] == code[c]) {
          mult += g.nodes[c].in_mult;
          merged = true;
          break;
        }
      }
      if (!merged) entries.emplace_back(c, g.nodes[c].in_mult);
    }
    std::sort(entries.begin(), entries.end(), [&](const auto& x, const auto& y) {
      const int lx = g.nodes[x.first].label, ly = g.nodes[y.first].label;
      return lx != ly ? lx < ly : code[x.first] < code[y.first];
    });
    std::string& c = code[v];
    c = "[" + std::to_string(node.label) + ";";
    for (const auto& [rep, mult] : entries) {
      c += mult.str();
      c += "*";
      c += code[rep];
    }
    c += "]";
  }
  return code;
}

}  // namespace

std::string canonical_code(const CondensedGraph& g) {
  return condensed_codes(g)[g.root];
}

CondensedGraph canonicalize(const CondensedGraph& g) {
  const auto codes = condensed_codes(g);

  CondensedGraph out;
  const std::function<void(int, int, Nat)> build = [&](int v, int parent,
                                                       Nat mult) {
    const int id = out.add_node(g.nodes[v].label, std::move(mult), parent);
    std::vector<std::pair<int, Nat>> entries;
    for (int c : g.nodes[v].children) {
      bool merged = false;
      for (auto& [rep, m] : entries) {
        if (codes[rep] == codes[c]) {
          m += g.nodes[c].in_mult;
          merged = true;
          break;
        }
      }
      if (!merged) entries.emplace_back(c, g.nodes[c].in_mult);
    }
    std::sort(entries.begin(), entries.end(), [&](const auto& x, const auto& y) {
      const int lx = g.nodes[x.first].label, ly = g.nodes[y.first].label;
      return lx != ly ? lx < ly : codes[x.first] < codes[y.first];
    });
    for (auto& [rep, m] : entries) build(rep, id, std::move(m));
  };
  build(g.root, -1, 1);
  return out;
}

std::vector<std::vector<Nat>> per_vertex_path_counts(const CondensedGraph& g,
                                                     int to_label,
                                                     int max_length) {
  if (max_length < 0) throw std::invalid_argument("max_length must be >= 0");
  std::vector<std::vector<Nat>> pv(g.size(), std::vector<Nat>(max_length + 1));
  for (int v = g.size() - 1; v >= 0; --v) {
    if (g.nodes[v].label == to_label) pv[v][0] = 1;
    for (int c : g.nodes[v].children)
      for (int l = 1; l <= max_length; ++l)
        if (pv[c][l - 1] != 0) pv[v][l] += g.nodes[c].in_mult * pv[c][l - 1];
  }
  return pv;
}

Nat count_paths(const CondensedGraph& g, int from_label, int to_label,
                int length) {
  if (length < 0) return 0;
  const auto pv = per_vertex_path_counts(g, to_label, length);
  const auto rep = represented_counts(g);
  Nat total = 0;
  for (int v = 0; v < g.size(); ++v)
    if (g.nodes[v].label == from_label && pv[v][length] != 0)
      total += rep[v] * pv[v][length];
  return total;
}

ExpandedGraph subtree_at(const ExpandedGraph& g, int vertex) {
  if (vertex < 0 || vertex >= g.size())
    throw std::invalid_argument("unknown vertex id " + std::to_string(vertex));
  ExpandedGraph out;
  const std::function<void(int, int)> copy = [&](int v, int parent_vid) {
    const int vid = out.add_vertex(g.vertices[v].label, parent_vid);
    for (int c : g.vertices[v].children) copy(c, vid);
  };
  copy(vertex, -1);
  return out;
}

LabelCensus census(const CondensedGraph& g) {
  const auto rep = represented_counts(g);
  LabelCensus result;
  for (int v = 0; v < g.size(); ++v) result[g.nodes[v].label] += rep[v];
  return result;
}

LabelCensus census(const ExpandedGraph& g) {
  LabelCensus result;
  for (const auto& vertex : g.vertices) result[vertex.label] += 1;
  return result;
}

bool leaves_all_labeled(const CondensedGraph& g, int n) {
  for (const auto& node : g.nodes)
    if (node.children.empty() && node.label != n) return false;
  return true;
}

bool leaves_all_labeled(const ExpandedGraph& g, int n) {
  for (const auto& vertex : g.vertices)
    if (vertex.children.empty() && vertex.label != n) return false;
  return true;
}

}  // namespace catgraph
