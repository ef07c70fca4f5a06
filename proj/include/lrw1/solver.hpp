#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrw1/graph.hpp"

namespace lrw1 {

struct Instance {
  Graph graph;
  int budget = 0;
};

/// One branching decision: the obstruction copy found and the vertex deleted.
struct BranchStep {
  int catalog_id = -1;
  std::vector<int> hit;  // host vertices of the copy, ascending
  int chosen = -1;
};

struct Solution {
  VertexSet deletion_set;
  std::vector<BranchStep> trace;  // root-to-leaf path that produced the set
};

struct SolveStats {
  std::int64_t nodes_expanded = 0;
  std::int64_t memo_prunes = 0;
};

/// A minimum deletion set of size at most k, or nothing when none exists.
/// Branches on the vertices of a catalog copy; obstruction-free leaves finish
/// with one break vertex per non-thread component. Throws InputError for k < 0.
std::optional<Solution> solve_branching(const Graph& g, int k, SolveStats* stats = nullptr);
inline std::optional<Solution> solve_branching(const Instance& inst, SolveStats* stats = nullptr) {
  return solve_branching(inst.graph, inst.budget, stats);
}

struct Decision {
  bool yes = false;
  std::optional<Solution> solution;
};

Decision decide(const Instance& inst);

}  // namespace lrw1
