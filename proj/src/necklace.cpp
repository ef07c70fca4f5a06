#include "lrw1/necklace.hpp"

#include <algorithm>

#include "lrw1/errors.hpp"
#include "lrw1/obstructions.hpp"
#include "lrw1/split_tree.hpp"

namespace lrw1 {

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Thread: return "thread";
    case ComponentKind::Necklace: return "necklace";
    case ComponentKind::Other: return "other";
  }
  return "?";
}

std::optional<int> smallest_break_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (is_thread_graph(delete_vertices(g, VertexSet(g.order(), {v})).graph)) return v;
  return std::nullopt;
}

namespace {

// The break vertices in cyclic order, if they induce a cycle.
std::optional<std::vector<int>> anchor_cycle(const Graph& g) {
  const int n = g.order();
  VertexSet breaks(n);
  for (int v = 0; v < n; ++v)
    if (is_thread_graph(delete_vertices(g, VertexSet(n, {v})).graph)) breaks.insert(v);
  if (breaks.size() < 3) return std::nullopt;
  for (int v : breaks)
    if ((g.neighbors(v) & breaks).size() != 2) return std::nullopt;
  const int start = breaks.first();
  std::vector<int> cycle{start};
  int prev = start;
  int cur = (g.neighbors(start) & breaks).first();
  while (cur != start) {
    cycle.push_back(cur);
    const VertexSet next = (g.neighbors(cur) & breaks) - VertexSet(n, {prev});
    prev = cur;
    cur = next.first();
  }
  if (static_cast<int>(cycle.size()) != breaks.size()) return std::nullopt;  // several cycles
  return cycle;
}

std::optional<NecklaceDecomposition> necklace_certificate(const Graph& g) {
  const auto cycle = anchor_cycle(g);
  if (!cycle) return std::nullopt;
  const int n = g.order();
  const int h = static_cast<int>(cycle->size());
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < h; ++i) position[static_cast<std::size_t>((*cycle)[static_cast<std::size_t>(i)])] = i;
  const VertexSet anchors(n, *cycle);

  std::vector<VertexSet> members(static_cast<std::size_t>(h), VertexSet(n));
  const Subgraph rest = delete_vertices(g, anchors);
  for (const VertexSet& local : connected_components(rest.graph)) {
    VertexSet comp(n);
    VertexSet touched(n);
    for (int x : local) {
      const int v = rest.to_original[static_cast<std::size_t>(x)];
      comp.insert(v);
      touched |= g.neighbors(v) & anchors;
    }
    int block = -1;
    if (touched.size() == 1 && comp.size() == 1) {
      // A pendant of anchor i closes block i - 1.
      block = (position[static_cast<std::size_t>(touched.first())] + h - 1) % h;
    } else if (touched.size() == 2) {
      const int p = position[static_cast<std::size_t>(touched.first())];
      const int q = position[static_cast<std::size_t>(touched.next(touched.first()))];
      if ((p + 1) % h == q) block = p;
      else if ((q + 1) % h == p) block = q;
    }
    if (block == -1) return std::nullopt;
    members[static_cast<std::size_t>(block)] |= comp;
  }

  NecklaceDecomposition d;
  d.anchors = *cycle;
  for (int i = 0; i < h; ++i) {
    const int first = (*cycle)[static_cast<std::size_t>(i)];
    const int last = (*cycle)[static_cast<std::size_t>((i + 1) % h)];
    VertexSet s = members[static_cast<std::size_t>(i)];
    s.insert(first);
    s.insert(last);
    auto b = order_thread_block(g, s, first, last);
    if (!b || !validate_thread_block(*b, false)) return std::nullopt;
    d.blocks.push_back(std::move(*b));
  }
  if (merge(n, d) != g) return std::nullopt;
  return d;
}

}  // namespace

Classification classify_component(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw NotConnected("classification needs a connected graph");
  Classification out;
  if (is_thread_graph(g)) {
    out.kind = ComponentKind::Thread;
    out.thread = g.order() == 1 ? ThreadDecomposition{{0}, {}} : canonical_thread_decomposition(g);
    return out;
  }
  if (auto d = necklace_certificate(g)) {
    out.kind = ComponentKind::Necklace;
    out.necklace = std::move(d);
  }
  return out;
}

VertexSet min_deletion_obn_free(const Graph& g, bool verify) {
  if (verify) {
    if (auto hit = find_small_obstruction(g))
      throw NotObnFree("graph contains obstruction " + std::to_string(hit->catalog_id));
  }
  VertexSet out(g.order());
  for (const VertexSet& comp : connected_components(g)) {
    const Subgraph sub = induced_subgraph_mapped(g, comp);
    if (is_thread_graph(sub.graph)) continue;
    const auto v = smallest_break_vertex(sub.graph);
    if (!v) throw InternalError("non-thread component without a break vertex");
    out.insert(sub.to_original[static_cast<std::size_t>(*v)]);
  }
  return out;
}

}  // namespace lrw1
