#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrw1/graph.hpp"

namespace lrw1 {

// Exhaustive reference routines. Slow, exponential, and deliberately
// independent of the split-tree machinery so they can referee it.

inline constexpr int kExactWidthMaxOrder = 20;
inline constexpr int kBruteDeletionMaxOrder = 18;
inline constexpr int kEnumerationMaxOrder = 8;

/// Exact linear rankwidth by the subset recurrence
/// f(S) = max(cut_rank(S), min_{v in S} f(S - v)).
/// Graphs with at most one vertex have width 0. Throws ResourceLimit for n > 20.
int linear_rankwidth_exact(const Graph& g);

/// Decides linear rankwidth <= 1 by searching for a chain of prefixes that all
/// have cut rank <= 1, one component at a time. Throws ResourceLimit for n > 20.
bool linear_rankwidth_at_most_one(const Graph& g);

/// Smallest S with |S| <= k and lrw(g - S) <= 1, ties broken towards the
/// lexicographically smallest sorted vertex list. Throws ResourceLimit for n > 18.
std::optional<VertexSet> min_deletion_set_bruteforce(const Graph& g, int k);

/// One representative per isomorphism class of connected graphs on n vertices,
/// sorted by canonical form. Results are computed once and cached.
/// Throws InputError for n < 1 and ResourceLimit for n > 8.
const std::vector<Graph>& enumerate_connected_graphs(int n);

struct CatalogEntry {
  int id = 0;
  Graph graph;
  std::string form;  // canonical_form_small(graph)
  std::string name;  // house, gem, domino, C5..C8, or empty
  // Family memberships recovered by construction, e.g. "bridged-path(ends=1;hub-edge=0)".
  std::vector<std::string> annotations;
};

/// Every connected graph on at most 8 vertices with linear rankwidth >= 2 all
/// of whose one-vertex deletions have linear rankwidth <= 1, sorted by
/// (vertex count, canonical form) and numbered from 0.
std::vector<CatalogEntry> derive_obstruction_catalog();

/// Graphs used to name catalog members; exposed for tests.
Graph house_graph();
Graph gem_graph();
Graph domino_graph();
// P5 v1..v5 minus v3, plus two hubs adjacent to v2 and v4. `left_end` and
// `right_end` make v1 / v5 adjacent to both hubs; `hub_edge` joins the hubs.
Graph bridged_path_graph(bool left_end, bool right_end, bool hub_edge);
// A centre with three pendant paths p_i q_i, adjacent to every p_i and to the
// first `tips` of the q_i.
Graph spider_graph(int tips);

}  // namespace lrw1
