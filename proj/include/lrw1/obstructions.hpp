#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lrw1/graph.hpp"
#include "lrw1/oracle.hpp"

namespace lrw1 {

/// The 21 minimal obstructions on at most 8 vertices, shipped as generated
/// data. Identical to derive_obstruction_catalog(); a test keeps them in sync.
const std::vector<CatalogEntry>& obstruction_catalog();

struct ObstructionHit {
  int catalog_id = -1;
  VertexSet vertices;
  std::vector<int> mapping;  // catalog vertex i sits at host vertex mapping[i]
};

inline constexpr std::int64_t kDefaultOccurrenceCap = 1'000'000;

/// Calls `visit` with every injective map of `pattern` onto an induced copy in
/// `host`, in lexicographic order of candidates. `pattern` must be connected.
/// Returning false from `visit` stops the search.
void for_each_induced_copy(const Graph& host, const Graph& pattern,
                           const std::function<bool(const std::vector<int>&)>& visit);

std::optional<std::vector<int>> find_induced_copy(const Graph& host, const Graph& pattern);

/// First catalog occurrence, scanning members by ID and candidates ascending.
std::optional<ObstructionHit> find_small_obstruction(const Graph& g);

/// Every distinct vertex set inducing a catalog member, sorted by vertex set.
/// Throws CapExceeded once more than `cap` distinct sets have been seen.
std::vector<ObstructionHit> enumerate_obstruction_occurrences(const Graph& g,
                                                              std::int64_t cap = kDefaultOccurrenceCap);

/// Vertex sequence of an induced cycle with at least `min_len` vertices.
/// Throws InputError when min_len < 4.
std::optional<std::vector<int>> find_long_induced_cycle(const Graph& g, int min_len = 9);

}  // namespace lrw1
