#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lrw1/vertex_set.hpp"

namespace lrw1 {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Optional vertex names ride along for I/O round-trips; they play no role in
/// equality, which compares order and edge sets only.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  int size() const noexcept;  // number of edges

  bool adjacent(int u, int v) const noexcept { return adj_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbors(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const noexcept { return neighbors(v).size(); }
  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  // Self-loops are rejected with InputError; repeated edges are idempotent.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  void set_names(std::vector<std::string> names);
  // The stored name, or the 1-based index when the graph carries no names.
  std::string name(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
  std::vector<std::string> names_;
};

/// A graph carved out of a host graph, with the index maps back and forth.
struct Subgraph {
  Graph graph;
  std::vector<int> to_original;    // new index -> host index
  std::vector<int> from_original;  // host index -> new index, or -1 when dropped

  VertexSet lift(const VertexSet& s) const;  // subgraph set -> host set
};

struct BlockCutStructure {
  VertexSet cut_vertices;
  // Maximal 2-connected pieces, bridge edges and isolated vertices.
  std::vector<VertexSet> blocks;
  // Block-cut tree: node b < blocks.size() is a block, node blocks.size() + i is
  // the i-th entry of cut_list.
  std::vector<int> cut_list;
  std::vector<std::vector<int>> tree;
};

/// GF(2) rank of the adjacency submatrix between `s` and its complement.
int cut_rank(const Graph& g, const VertexSet& s);

BlockCutStructure blocks_and_cut_vertices(const Graph& g);

// Relabels densely in increasing host order; names are carried over.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Subgraph induced_subgraph_mapped(const Graph& g, const VertexSet& s);
Subgraph delete_vertices(const Graph& g, const VertexSet& s);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Graph with vertex v moved to position perm[v].
Graph permute(const Graph& g, std::span<const int> perm);

Graph disjoint_union(const Graph& a, const Graph& b);

// Breadth-first distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

// Named families used across tests and the catalog annotations.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // center is vertex 0

/// Canonical labelling of a graph on at most 10 vertices.
///
/// `order[i]` is the vertex placed at position i. `form` is a byte string that
/// is equal for two graphs exactly when they are isomorphic: the vertex count
/// followed by the upper triangle of the permuted adjacency matrix, column by
/// column, packed MSB-first. The permutation minimises that bit string among
/// all orderings that list vertices by decreasing degree signature.
struct CanonicalLabelling {
  std::string form;
  std::vector<int> order;
};

inline constexpr int kCanonicalMaxOrder = 10;

CanonicalLabelling canonical_labelling_small(const Graph& g);
std::string canonical_form_small(const Graph& g);
std::string to_hex(const std::string& bytes);

}  // namespace lrw1
