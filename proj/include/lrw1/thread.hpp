#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrw1/graph.hpp"

namespace lrw1 {

// Side labels of a thread block vertex, as a bit set: L = 1, R = 2.
enum class Side : std::uint8_t { L = 1, R = 2, LR = 3 };

inline bool has_left(Side s) noexcept { return static_cast<std::uint8_t>(s) & 1U; }
inline bool has_right(Side s) noexcept { return static_cast<std::uint8_t>(s) & 2U; }
std::string to_string(Side s);
Side side_from_string(const std::string& text);  // "L", "R" or "LR"; InputError otherwise

/// A thread block over host vertex ids: `order` is the ordering, `labels[i]`
/// belongs to `order[i]`. For i < j, order[i] ~ order[j] exactly when
/// labels[i] has R and labels[j] has L.
struct ThreadBlock {
  std::vector<int> order;
  std::vector<Side> labels;

  int first() const { return order.front(); }
  int last() const { return order.back(); }
  int size() const noexcept { return static_cast<int>(order.size()); }
  Side label_of(int v) const;  // InputError if v is not in the block
  std::vector<Edge> edges() const;  // endpoints sorted, list sorted
  friend bool operator==(const ThreadBlock&, const ThreadBlock&) = default;
};

/// Anchors v1..vk of a directed path; block i runs from anchors[i] to anchors[i+1].
struct ThreadDecomposition {
  std::vector<int> anchors;
  std::vector<ThreadBlock> blocks;
  friend bool operator==(const ThreadDecomposition&, const ThreadDecomposition&) = default;
};

/// Anchors of a directed cycle; block i runs from anchors[i] to anchors[(i+1) % h].
struct NecklaceDecomposition {
  std::vector<int> anchors;
  std::vector<ThreadBlock> blocks;
  friend bool operator==(const NecklaceDecomposition&, const NecklaceDecomposition&) = default;
};

/// Conditions (1) and (2) on labels and distinct vertices, plus (3) when
/// `canonical`: the second vertex is not labelled L unless the block has 2 vertices.
bool validate_thread_block(const ThreadBlock& b, bool canonical);

/// The block's edges are exactly the edges of g induced on its vertices.
bool block_matches_graph(const Graph& g, const ThreadBlock& b);

/// Orders g[s] as a thread block from `first` to `last`, if that is possible.
/// Labels are read off adjacency to `first` and `last`; ties go to smaller ids.
std::optional<ThreadBlock> order_thread_block(const Graph& g, const VertexSet& s, int first, int last);

/// D merged with its blocks, on host vertices 0..n-1. Checks mergeability
/// (block endpoints, validity, and pairwise overlaps) and throws NotMergeable.
Graph merge(int n, std::span<const int> anchors, std::span<const ThreadBlock> blocks, bool cyclic);
Graph merge(int n, const ThreadDecomposition& d);
Graph merge(int n, const NecklaceDecomposition& d);

/// Canonical thread decomposition of a connected thread graph with at least
/// 2 vertices, read off its reduced split tree. Throws NotConnected or NotThreadGraph.
ThreadDecomposition canonical_thread_decomposition(const Graph& g);

/// One decomposition per component, components ordered by smallest vertex;
/// a single-vertex component yields one anchor and no blocks.
std::vector<ThreadDecomposition> thread_decompositions(const Graph& g);

}  // namespace lrw1
