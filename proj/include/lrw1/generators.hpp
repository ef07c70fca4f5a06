#pragma once

#include <cstdint>
#include <optional>

#include "lrw1/graph.hpp"
#include "lrw1/thread.hpp"

namespace lrw1 {

struct SizeRange {
  int min = 2;
  int max = 4;
};

struct GeneratedThread {
  Graph graph;
  ThreadDecomposition decomposition;  // the planted canonical decomposition
};

struct GeneratedNecklace {
  Graph graph;
  NecklaceDecomposition decomposition;
};

struct PlantedInstance {
  Graph graph;
  int budget = 0;     // upper bound on the optimum: the extras, plus one for a necklace base
  VertexSet planted;  // the extra vertices; deleting them restores the base
};

enum class PlantedBase { Thread, Necklace };

/// Random labels from {L, R, LR}, repaired so the block is canonical.
/// Vertex ids are scrambled by a seeded permutation. Throws InputError if
/// blocks < 1 or sizes < 2.
GeneratedThread gen_thread_graph(int blocks, SizeRange sizes, std::uint64_t seed);

/// Cyclic analogue; cycle_len < 3 is rejected with InputError.
GeneratedNecklace gen_necklace(int cycle_len, SizeRange sizes, std::uint64_t seed);

/// Base graph plus `extra` vertices, each joined to every other vertex with
/// probability `edge_prob`. For a Thread base `base_size` counts blocks; for a
/// Necklace base it is the cycle length.
PlantedInstance gen_planted(PlantedBase base, int base_size, SizeRange sizes, int extra, double edge_prob,
                            std::uint64_t seed);

/// Adds a pendant to every vertex and replaces each edge uv by two internally
/// disjoint paths of length 2. Original vertices keep ids 0..n-1, pendants are
/// n..2n-1, and the midpoints of the i-th edge of g.edges() are 2n+2i, 2n+2i+1.
Graph vc_reduction(const Graph& g);

/// A minimum vertex cover of size <= k (lexicographically first among the
/// smallest), or nothing. Throws ResourceLimit for n > 20.
std::optional<VertexSet> vertex_cover_bruteforce(const Graph& g, int k);

}  // namespace lrw1
