#pragma once

#include <optional>

#include "lrw1/graph.hpp"
#include "lrw1/thread.hpp"

namespace lrw1 {

enum class ComponentKind { Thread, Necklace, Other };

const char* to_string(ComponentKind kind);

struct Classification {
  ComponentKind kind = ComponentKind::Other;
  std::optional<ThreadDecomposition> thread;      // set exactly for Thread
  std::optional<NecklaceDecomposition> necklace;  // set exactly for Necklace
};

/// Thread, Necklace (with a decomposition whose merge is g), or Other.
/// The anchor cycle is the set of vertices whose removal leaves a thread graph,
/// oriented from its smallest vertex towards that vertex's smaller cycle neighbour.
/// Throws NotConnected for disconnected or empty input.
Classification classify_component(const Graph& g);

/// Smallest v with g - v a thread graph, if any.
std::optional<int> smallest_break_vertex(const Graph& g);

/// Minimum deletion set of a graph with no member of the obstruction catalog:
/// the smallest break vertex of every non-thread component. Throws NotObnFree
/// when `verify` finds a catalog member, InternalError if a component has no
/// break vertex.
VertexSet min_deletion_obn_free(const Graph& g, bool verify = true);

}  // namespace lrw1
