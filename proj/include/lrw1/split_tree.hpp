#pragma once

#include <optional>
#include <vector>

#include "lrw1/graph.hpp"

namespace lrw1 {

enum class SplitNodeKind { Leaf, Prime, Clique, Star };

/// One node of a graph-labelled tree. Internal nodes carry a label graph on
/// marker vertices 0..d-1, and marker i corresponds to the tree edge leading to
/// `adjacent[i]`. Leaves carry a host vertex and a single entry in `adjacent`.
struct SplitNode {
  SplitNodeKind kind = SplitNodeKind::Leaf;
  int vertex = -1;
  Graph label;
  std::vector<int> adjacent;
  int center = -1;  // star nodes: the centre marker

  bool is_leaf() const noexcept { return kind == SplitNodeKind::Leaf; }
  bool is_degenerate() const noexcept { return kind == SplitNodeKind::Clique || kind == SplitNodeKind::Star; }
};

struct GraphLabelledTree {
  int host_order = 0;
  std::vector<SplitNode> nodes;
  std::vector<int> leaf_of;  // host vertex -> leaf node, or -1 outside this tree

  // Marker of `node` whose tree edge leads to `neighbour`.
  int marker_towards(int node, int neighbour) const;
  std::vector<int> internal_nodes() const;
};

/// True when `h` is a clique (any order) or a star with at least 3 vertices.
/// For stars, `center` receives the centre vertex; for K2 it stays -1.
bool is_degenerate_graph(const Graph& h, int* center = nullptr);

/// A split (A, V - A) of `h` with both sides of size >= 2, if one exists.
std::optional<VertexSet> find_split(const Graph& h);

/// Cunningham's reduced split tree of a connected graph with at least 2 vertices.
/// Throws NotConnected or InputError.
GraphLabelledTree build_reduced_split_tree(const Graph& g);

/// The graph on the host vertices in which two leaves are adjacent exactly
/// when the marker pairs along their tree path are all adjacent.
Graph accessibility_graph(const GraphLabelledTree& t);

/// Every node prime or degenerate, node degrees match label orders, and no two
/// adjacent degenerate nodes join into a degenerate node.
bool is_reduced(const GraphLabelledTree& t);

/// Componentwise: every split tree has only degenerate internal nodes, and those
/// nodes form a path. Graphs on at most one vertex count as thread graphs.
bool is_thread_graph(const Graph& g);

}  // namespace lrw1
