#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "lrw1/graph.hpp"

namespace lrw1::testing {

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Random spanning tree plus G(n, p) noise, so the result is connected.
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  Graph g = random_graph(n, p, rng);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    g.add_edge(v, pick(rng));
  }
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Graph graph_from(int n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Graph(n, list);
}

}  // namespace lrw1::testing
