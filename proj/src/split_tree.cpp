#include "lrw1/split_tree.hpp"

#include <algorithm>

#include "lrw1/errors.hpp"

namespace lrw1 {

int GraphLabelledTree::marker_towards(int node, int neighbour) const {
  const auto& adj = nodes[static_cast<std::size_t>(node)].adjacent;
  const auto it = std::find(adj.begin(), adj.end(), neighbour);
  if (it == adj.end()) throw InternalError("split tree nodes are not adjacent");
  return static_cast<int>(it - adj.begin());
}

std::vector<int> GraphLabelledTree::internal_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    if (!nodes[static_cast<std::size_t>(i)].is_leaf()) out.push_back(i);
  return out;
}

bool is_degenerate_graph(const Graph& h, int* center) {
  const int d = h.order();
  if (center) *center = -1;
  if (h.size() == d * (d - 1) / 2) return true;
  if (d < 3 || h.size() != d - 1) return false;
  int hub = -1;
  for (int v = 0; v < d; ++v) {
    if (h.degree(v) == d - 1) {
      hub = v;
    } else if (h.degree(v) != 1) {
      return false;
    }
  }
  if (hub == -1) return false;
  if (center) *center = hub;
  return true;
}

namespace {

// Smallest side A containing a and c, with a on the frontier of A and b on the
// frontier of the other side. Empty when b's side would shrink below 2.
std::optional<VertexSet> close_split(const Graph& h, int a, int b, int c) {
  const int d = h.order();
  VertexSet s(d, {a, c});
  const VertexSet& nb = h.neighbors(b);
  bool grew = true;
  while (grew) {
    grew = false;
    const VertexSet nb_in_s = nb & s;
    for (int z = 0; z < d; ++z) {
      if (s.contains(z) || z == b) continue;
      const VertexSet nz_in_s = h.neighbors(z) & s;
      const bool forced = h.adjacent(a, z) ? !(nz_in_s == nb_in_s) : !nz_in_s.empty();
      if (forced) {
        s.insert(z);
        grew = true;
      }
    }
    if (d - s.size() < 2) return std::nullopt;
  }
  return s;
}

}  // namespace

std::optional<VertexSet> find_split(const Graph& h) {
  const int d = h.order();
  if (d < 4) return std::nullopt;
  // Twins and pendant pairs are splits whenever at least two vertices remain.
  for (int u = 0; u < d; ++u)
    for (int v = u + 1; v < d; ++v) {
      VertexSet nu = h.neighbors(u);
      VertexSet nv = h.neighbors(v);
      nu.erase(v);
      nv.erase(u);
      if (nu == nv) return VertexSet(d, {u, v});
    }
  for (int p = 0; p < d; ++p)
    if (h.degree(p) == 1) return VertexSet(d, {p, h.neighbors(p).first()});

  // Any split can be written with vertex 0 on side A. Either 0 is on A's
  // frontier (seed a = 0), or some frontier vertex a is joined by c = 0.
  const int x0 = 0;
  for (int b : h.neighbors(x0))
    for (int c = 1; c < d; ++c) {
      if (c == b) continue;
      if (auto s = close_split(h, x0, b, c)) return s;
    }
  for (int a = 1; a < d; ++a)
    for (int b : h.neighbors(a)) {
      if (b == x0) continue;
      if (auto s = close_split(h, a, b, x0)) return s;
    }
  return std::nullopt;
}

namespace {

// Node-join of u and its neighbour v along their shared tree edge.
Graph joined_label(const SplitNode& u, int a, const SplitNode& v, int b) {
  const int du = u.label.order();
  const int dv = v.label.order();
  Graph out(du + dv - 2);
  auto iu = [&](int x) { return x < a ? x : x - 1; };
  auto iv = [&](int y) { return du - 1 + (y < b ? y : y - 1); };
  for (auto [x, y] : u.label.edges())
    if (x != a && y != a) out.add_edge(iu(x), iu(y));
  for (auto [x, y] : v.label.edges())
    if (x != b && y != b) out.add_edge(iv(x), iv(y));
  for (int x : u.label.neighbors(a))
    for (int y : v.label.neighbors(b)) out.add_edge(iu(x), iv(y));
  return out;
}

class SplitTreeBuilder {
 public:
  explicit SplitTreeBuilder(const Graph& g) : g_(g) {}

  GraphLabelledTree run() {
    const int n = g_.order();
    nodes_.resize(static_cast<std::size_t>(n) + 1);
    alive_.assign(static_cast<std::size_t>(n) + 1, true);
    for (int v = 0; v < n; ++v) {
      nodes_[static_cast<std::size_t>(v)].vertex = v;
      nodes_[static_cast<std::size_t>(v)].adjacent = {n};
    }
    SplitNode& root = nodes_[static_cast<std::size_t>(n)];
    root.kind = SplitNodeKind::Prime;
    root.label = g_;
    root.label.set_names({});
    for (int v = 0; v < n; ++v) root.adjacent.push_back(v);

    std::vector<int> work{n};
    while (!work.empty()) {
      const int u = work.back();
      work.pop_back();
      if (is_degenerate_graph(nodes_[static_cast<std::size_t>(u)].label)) continue;
      auto side = find_split(nodes_[static_cast<std::size_t>(u)].label);
      if (!side) continue;
      const int w = split_node(u, *side);
      work.push_back(u);
      work.push_back(w);
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (!nodes_[i].is_leaf()) classify(nodes_[i]);
    join_degenerate_pairs();
    return compact();
  }

 private:
  static void classify(SplitNode& node) {
    int center = -1;
    if (!is_degenerate_graph(node.label, &center)) {
      node.kind = SplitNodeKind::Prime;
      node.center = -1;
    } else if (node.label.size() == node.label.order() * (node.label.order() - 1) / 2) {
      node.kind = SplitNodeKind::Clique;
      node.center = -1;
    } else {
      node.kind = SplitNodeKind::Star;
      node.center = center;
    }
  }

  void retarget(int neighbour, int from, int to) {
    for (int& x : nodes_[static_cast<std::size_t>(neighbour)].adjacent)
      if (x == from) x = to;
  }

  // Replaces node u by u (markers in `side` plus a new marker) and a fresh
  // node w (the remaining markers plus a new marker), joined by a tree edge.
  int split_node(int u, const VertexSet& side) {
    const SplitNode old = nodes_[static_cast<std::size_t>(u)];
    const int d = old.label.order();
    const VertexSet rest = side.complement();
    const int w = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    alive_.push_back(true);

    auto build = [&](const VertexSet& keep, const VertexSet& other, int partner) {
      SplitNode node;
      node.kind = SplitNodeKind::Prime;
      std::vector<int> index(static_cast<std::size_t>(d), -1);
      for (int x : keep) {
        index[static_cast<std::size_t>(x)] = static_cast<int>(node.adjacent.size());
        node.adjacent.push_back(old.adjacent[static_cast<std::size_t>(x)]);
      }
      const int marker = static_cast<int>(node.adjacent.size());
      node.adjacent.push_back(partner);
      node.label = Graph(marker + 1);
      for (int x : keep) {
        for (int y : old.label.neighbors(x))
          if (keep.contains(y) && x < y) node.label.add_edge(index[static_cast<std::size_t>(x)], index[static_cast<std::size_t>(y)]);
        if (old.label.neighbors(x).intersects(other)) node.label.add_edge(index[static_cast<std::size_t>(x)], marker);
      }
      return node;
    };
    SplitNode a = build(side, rest, w);
    SplitNode b = build(rest, side, u);
    for (int x : rest) retarget(old.adjacent[static_cast<std::size_t>(x)], u, w);
    nodes_[static_cast<std::size_t>(u)] = std::move(a);
    nodes_[static_cast<std::size_t>(w)] = std::move(b);
    return w;
  }

  void join_degenerate_pairs() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int u = 0; u < static_cast<int>(nodes_.size()) && !changed; ++u) {
        if (!alive_[static_cast<std::size_t>(u)] || !nodes_[static_cast<std::size_t>(u)].is_degenerate()) continue;
        const auto adj = nodes_[static_cast<std::size_t>(u)].adjacent;
        for (int a = 0; a < static_cast<int>(adj.size()) && !changed; ++a) {
          const int v = adj[static_cast<std::size_t>(a)];
          if (!nodes_[static_cast<std::size_t>(v)].is_degenerate()) continue;
          const int b = marker_of(v, u);
          Graph label = joined_label(nodes_[static_cast<std::size_t>(u)], a, nodes_[static_cast<std::size_t>(v)], b);
          if (!is_degenerate_graph(label)) continue;
          SplitNode merged;
          merged.label = std::move(label);
          for (int x = 0; x < static_cast<int>(adj.size()); ++x)
            if (x != a) merged.adjacent.push_back(adj[static_cast<std::size_t>(x)]);
          const auto& vadj = nodes_[static_cast<std::size_t>(v)].adjacent;
          for (int y = 0; y < static_cast<int>(vadj.size()); ++y)
            if (y != b) {
              merged.adjacent.push_back(vadj[static_cast<std::size_t>(y)]);
              retarget(vadj[static_cast<std::size_t>(y)], v, u);
            }
          classify(merged);
          nodes_[static_cast<std::size_t>(u)] = std::move(merged);
          alive_[static_cast<std::size_t>(v)] = false;
          changed = true;
        }
      }
    }
  }

  int marker_of(int node, int neighbour) const {
    const auto& adj = nodes_[static_cast<std::size_t>(node)].adjacent;
    return static_cast<int>(std::find(adj.begin(), adj.end(), neighbour) - adj.begin());
  }

  GraphLabelledTree compact() {
    GraphLabelledTree t;
    t.host_order = g_.order();
    std::vector<int> renumber(nodes_.size(), -1);
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (alive_[i]) renumber[i] = static_cast<int>(t.nodes.size()), t.nodes.push_back(std::move(nodes_[i]));
    for (auto& node : t.nodes)
      for (int& x : node.adjacent) x = renumber[static_cast<std::size_t>(x)];
    t.leaf_of.assign(static_cast<std::size_t>(g_.order()), -1);
    for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i)
      if (t.nodes[static_cast<std::size_t>(i)].is_leaf()) t.leaf_of[static_cast<std::size_t>(t.nodes[static_cast<std::size_t>(i)].vertex)] = i;
    return t;
  }

  const Graph& g_;
  std::vector<SplitNode> nodes_;
  std::vector<bool> alive_;
};

}  // namespace

GraphLabelledTree build_reduced_split_tree(const Graph& g) {
  if (g.order() < 2) throw InputError("split tree needs at least two vertices");
  if (!is_connected(g)) throw NotConnected("split tree needs a connected graph");
  return SplitTreeBuilder(g).run();
}

Graph accessibility_graph(const GraphLabelledTree& t) {
  Graph out(t.host_order);
  struct Step {
    int node;
    int entry;  // marker through which the walk entered `node`
  };
  for (int v = 0; v < t.host_order; ++v) {
    const int leaf = t.leaf_of[static_cast<std::size_t>(v)];
    if (leaf < 0) continue;
    const int first = t.nodes[static_cast<std::size_t>(leaf)].adjacent.front();
    std::vector<Step> stack{{first, t.marker_towards(first, leaf)}};
    while (!stack.empty()) {
      const Step s = stack.back();
      stack.pop_back();
      const SplitNode& node = t.nodes[static_cast<std::size_t>(s.node)];
      for (int m : node.label.neighbors(s.entry)) {
        const int next = node.adjacent[static_cast<std::size_t>(m)];
        const SplitNode& nn = t.nodes[static_cast<std::size_t>(next)];
        if (nn.is_leaf()) {
          if (nn.vertex > v) out.add_edge(v, nn.vertex);
        } else {
          stack.push_back({next, t.marker_towards(next, s.node)});
        }
      }
    }
  }
  return out;
}

bool is_reduced(const GraphLabelledTree& t) {
  for (int u = 0; u < static_cast<int>(t.nodes.size()); ++u) {
    const SplitNode& node = t.nodes[static_cast<std::size_t>(u)];
    if (node.is_leaf()) {
      if (node.adjacent.size() != 1) return false;
      continue;
    }
    if (node.label.order() != static_cast<int>(node.adjacent.size())) return false;
    int center = -1;
    const bool degenerate = is_degenerate_graph(node.label, &center);
    if (degenerate != node.is_degenerate()) return false;
    if (!degenerate && find_split(node.label)) return false;
    if (node.kind == SplitNodeKind::Star && center != node.center) return false;
    for (int a = 0; a < static_cast<int>(node.adjacent.size()); ++a) {
      const int v = node.adjacent[static_cast<std::size_t>(a)];
      const SplitNode& other = t.nodes[static_cast<std::size_t>(v)];
      if (v < u || !node.is_degenerate() || !other.is_degenerate()) continue;
      const int b = t.marker_towards(v, u);
      const Graph joined = joined_label(node, a, other, b);
      if (is_degenerate_graph(joined)) return false;
    }
  }
  return true;
}

namespace {

bool connected_is_thread(const Graph& g) {
  // Every minimal obstruction has at least five vertices.
  if (g.order() <= 4) return true;
  const GraphLabelledTree t = build_reduced_split_tree(g);
  const auto internal = t.internal_nodes();
  for (int u : internal) {
    const SplitNode& node = t.nodes[static_cast<std::size_t>(u)];
    if (!node.is_degenerate()) return false;
    int inner_degree = 0;
    for (int v : node.adjacent)
      if (!t.nodes[static_cast<std::size_t>(v)].is_leaf()) ++inner_degree;
    if (inner_degree > 2) return false;
  }
  return true;
}

}  // namespace

bool is_thread_graph(const Graph& g) {
  for (const VertexSet& comp : connected_components(g))
    if (!connected_is_thread(induced_subgraph(g, comp))) return false;
  return true;
}

}  // namespace lrw1
