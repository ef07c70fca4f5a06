#include "lrw1/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>

#include "lrw1/errors.hpp"

namespace lrw1 {

namespace {

using Mask = std::uint32_t;

// Adjacency of one connected component as bitmasks over its own indices.
std::vector<std::vector<Mask>> component_masks(const Graph& g) {
  std::vector<std::vector<Mask>> out;
  for (const VertexSet& comp : connected_components(g)) {
    const Subgraph sub = induced_subgraph_mapped(g, comp);
    std::vector<Mask> rows(static_cast<std::size_t>(sub.graph.order()), 0);
    for (int v = 0; v < sub.graph.order(); ++v)
      for (int w : sub.graph.neighbors(v)) rows[static_cast<std::size_t>(v)] |= Mask{1} << w;
    out.push_back(std::move(rows));
  }
  return out;
}

int mask_cut_rank(const std::vector<Mask>& adj, Mask s, Mask full) {
  std::array<Mask, 32> basis{};
  int rank = 0;
  const Mask rest = full & ~s;
  for (Mask m = s; m; m &= m - 1) {
    Mask row = adj[static_cast<std::size_t>(std::countr_zero(m))] & rest;
    while (row) {
      const int top = 31 - std::countl_zero(row);
      if (!basis[static_cast<std::size_t>(top)]) {
        basis[static_cast<std::size_t>(top)] = row;
        ++rank;
        break;
      }
      row ^= basis[static_cast<std::size_t>(top)];
    }
  }
  return rank;
}

// Rank <= 1 iff all non-zero rows of the cut matrix coincide.
bool mask_cut_rank_at_most_one(const std::vector<Mask>& adj, Mask s, Mask full) {
  const Mask rest = full & ~s;
  Mask seen = 0;
  for (Mask m = s; m; m &= m - 1) {
    const Mask row = adj[static_cast<std::size_t>(std::countr_zero(m))] & rest;
    if (!row) continue;
    if (!seen)
      seen = row;
    else if (row != seen)
      return false;
  }
  return true;
}

void guard_order(const Graph& g, int limit, const char* what) {
  if (g.order() > limit)
    throw ResourceLimit(std::string(what) + " is limited to graphs on at most " + std::to_string(limit) +
                        " vertices");
}

bool component_at_most_one(const std::vector<Mask>& adj) {
  const int m = static_cast<int>(adj.size());
  if (m <= 2) return true;
  const Mask full = (m == 32) ? ~Mask{0} : (Mask{1} << m) - 1;
  std::vector<std::uint64_t> visited((std::size_t{1} << m) / 64 + 1, 0);
  std::vector<Mask> stack{0};
  visited[0] |= 1;
  while (!stack.empty()) {
    const Mask s = stack.back();
    stack.pop_back();
    for (Mask rest = full & ~s; rest; rest &= rest - 1) {
      const Mask t = s | (rest & -rest);
      if (t == full) return true;
      auto& word = visited[t >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (t & 63);
      if (word & bit) continue;
      word |= bit;
      if (mask_cut_rank_at_most_one(adj, t, full)) stack.push_back(t);
    }
  }
  return false;
}

}  // namespace

int linear_rankwidth_exact(const Graph& g) {
  guard_order(g, kExactWidthMaxOrder, "exact linear rankwidth");
  int best = 0;
  for (const auto& adj : component_masks(g)) {
    const int m = static_cast<int>(adj.size());
    if (m <= 1) continue;
    const Mask full = (Mask{1} << m) - 1;
    std::vector<std::uint8_t> f(std::size_t{1} << m, 0);
    for (Mask s = 1; s <= full; ++s) {
      int low = 255;
      for (Mask r = s; r; r &= r - 1) low = std::min<int>(low, f[s & ~(r & -r)]);
      f[s] = static_cast<std::uint8_t>(std::max(low, mask_cut_rank(adj, s, full)));
    }
    best = std::max<int>(best, f[full]);
  }
  return best;
}

bool linear_rankwidth_at_most_one(const Graph& g) {
  guard_order(g, kExactWidthMaxOrder, "linear rankwidth decision");
  for (const auto& adj : component_masks(g))
    if (!component_at_most_one(adj)) return false;
  return true;
}

std::optional<VertexSet> min_deletion_set_bruteforce(const Graph& g, int k) {
  guard_order(g, kBruteDeletionMaxOrder, "brute-force deletion");
  const int n = g.order();
  if (k < 0) return std::nullopt;
  for (int size = 0; size <= std::min(k, n); ++size) {
    // Combinations in lexicographic order of their sorted member lists.
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      const VertexSet s(n, std::span<const int>(pick));
      if (linear_rankwidth_at_most_one(delete_vertices(g, s).graph)) return s;
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

const std::vector<Graph>& enumerate_connected_graphs(int n) {
  if (n < 1) throw InputError("graph enumeration needs at least one vertex");
  if (n > kEnumerationMaxOrder) throw ResourceLimit("graph enumeration is limited to at most 8 vertices");
  static std::mutex mutex;
  static std::array<std::vector<Graph>, kEnumerationMaxOrder + 1> cache;
  static std::array<bool, kEnumerationMaxOrder + 1> ready{};
  {
    std::lock_guard lock(mutex);
    if (ready[static_cast<std::size_t>(n)]) return cache[static_cast<std::size_t>(n)];
  }
  std::vector<Graph> result;
  if (n == 1) {
    result.emplace_back(1);
  } else {
    // Every connected graph has a vertex whose removal keeps it connected, so
    // extending each smaller class by every non-empty neighbourhood is complete.
    std::map<std::string, Graph> classes;
    for (const Graph& base : enumerate_connected_graphs(n - 1)) {
      for (Mask nb = 1; nb < (Mask{1} << (n - 1)); ++nb) {
        Graph g(n);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (Mask r = nb; r; r &= r - 1) g.add_edge(n - 1, std::countr_zero(r));
        CanonicalLabelling lab = canonical_labelling_small(g);
        if (classes.count(lab.form)) continue;
        std::vector<int> to_position(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) to_position[static_cast<std::size_t>(lab.order[static_cast<std::size_t>(i)])] = i;
        classes.emplace(std::move(lab.form), permute(g, to_position));
      }
    }
    for (auto& [form, g] : classes) result.push_back(std::move(g));
  }
  std::lock_guard lock(mutex);
  if (!ready[static_cast<std::size_t>(n)]) {
    cache[static_cast<std::size_t>(n)] = std::move(result);
    ready[static_cast<std::size_t>(n)] = true;
  }
  return cache[static_cast<std::size_t>(n)];
}

Graph house_graph() {
  // Square 0-1-2-3 with roof vertex 4 over the edge 0-1.
  Graph g = cycle_graph(4);
  Graph h(5);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  h.add_edge(4, 0);
  h.add_edge(4, 1);
  return h;
}

Graph gem_graph() {
  Graph g(5);
  for (int i = 0; i + 1 < 4; ++i) g.add_edge(i, i + 1);
  for (int i = 0; i < 4; ++i) g.add_edge(4, i);
  return g;
}

Graph domino_graph() {
  // 2x3 grid: rows 0-1-2 and 3-4-5.
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 5);
  return g;
}

Graph bridged_path_graph(bool left_end, bool right_end, bool hub_edge) {
  // 0=v1, 1=v2, 2=v4, 3=v5, 4 and 5 are the hubs.
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  for (int hub : {4, 5}) {
    g.add_edge(hub, 1);
    g.add_edge(hub, 2);
    if (left_end) g.add_edge(hub, 0);
    if (right_end) g.add_edge(hub, 3);
  }
  if (hub_edge) g.add_edge(4, 5);
  return g;
}

Graph spider_graph(int tips) {
  // 0 is the centre; legs are (1,2), (3,4), (5,6).
  Graph g(7);
  for (int i = 0; i < 3; ++i) {
    const int p = 1 + 2 * i;
    g.add_edge(0, p);
    g.add_edge(p, p + 1);
    if (i < tips) g.add_edge(0, p + 1);
  }
  return g;
}

std::vector<CatalogEntry> derive_obstruction_catalog() {
  std::map<std::string, std::string> names;
  names[canonical_form_small(house_graph())] = "house";
  names[canonical_form_small(gem_graph())] = "gem";
  names[canonical_form_small(domino_graph())] = "domino";
  for (int h = 5; h <= 8; ++h) names[canonical_form_small(cycle_graph(h))] = "C" + std::to_string(h);

  std::multimap<std::string, std::string> notes;
  for (int left = 0; left < 2; ++left)
    for (int right = left; right < 2; ++right)
      for (int hub = 0; hub < 2; ++hub)
        notes.emplace(canonical_form_small(bridged_path_graph(left, right, hub)),
                      "bridged-path(ends=" + std::to_string(left + right) + ";hub-edge=" + std::to_string(hub) + ")");
  for (int tips = 0; tips <= 3; ++tips)
    notes.emplace(canonical_form_small(spider_graph(tips)), "spider(tips=" + std::to_string(tips) + ")");

  std::vector<CatalogEntry> out;
  for (int n = 1; n <= kEnumerationMaxOrder; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      if (linear_rankwidth_at_most_one(g)) continue;
      bool minimal = true;
      for (int v = 0; v < n && minimal; ++v)
        minimal = linear_rankwidth_at_most_one(delete_vertices(g, VertexSet(n, {v})).graph);
      if (!minimal) continue;
      CatalogEntry e;
      e.id = static_cast<int>(out.size());
      e.graph = g;
      e.form = canonical_form_small(g);
      if (auto it = names.find(e.form); it != names.end()) e.name = it->second;
      for (auto [it, end] = notes.equal_range(e.form); it != end; ++it) e.annotations.push_back(it->second);
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace lrw1
