#include "lrw1/thread.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "lrw1/errors.hpp"
#include "lrw1/split_tree.hpp"

namespace lrw1 {

std::string to_string(Side s) {
  switch (s) {
    case Side::L: return "L";
    case Side::R: return "R";
    case Side::LR: return "LR";
  }
  return "?";
}

Side side_from_string(const std::string& text) {
  if (text == "L") return Side::L;
  if (text == "R") return Side::R;
  if (text == "LR" || text == "RL") return Side::LR;
  throw InputError("unknown block label '" + text + "'");
}

Side ThreadBlock::label_of(int v) const {
  const auto it = std::find(order.begin(), order.end(), v);
  if (it == order.end()) throw InputError("vertex " + std::to_string(v) + " is not in the block");
  return labels[static_cast<std::size_t>(it - order.begin())];
}

std::vector<Edge> ThreadBlock::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!has_right(labels[i])) continue;
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (has_left(labels[j])) out.emplace_back(std::min(order[i], order[j]), std::max(order[i], order[j]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool validate_thread_block(const ThreadBlock& b, bool canonical) {
  const std::size_t k = b.order.size();
  if (k < 2 || b.labels.size() != k) return false;
  std::vector<int> sorted = b.order;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 0) return false;
  if (b.labels.front() != Side::R || b.labels.back() != Side::L) return false;
  if (canonical && k != 2 && b.labels[1] == Side::L) return false;
  return true;
}

bool block_matches_graph(const Graph& g, const ThreadBlock& b) {
  for (int v : b.order)
    if (v < 0 || v >= g.order()) return false;
  for (std::size_t i = 0; i < b.order.size(); ++i)
    for (std::size_t j = i + 1; j < b.order.size(); ++j) {
      const bool expect = has_right(b.labels[i]) && has_left(b.labels[j]);
      if (g.adjacent(b.order[i], b.order[j]) != expect) return false;
    }
  return true;
}

std::optional<ThreadBlock> order_thread_block(const Graph& g, const VertexSet& s, int first, int last) {
  if (first == last || !s.contains(first) || !s.contains(last) || !g.adjacent(first, last)) return std::nullopt;
  std::vector<int> middle;
  std::vector<Side> side(static_cast<std::size_t>(g.order()), Side::LR);
  for (int v : s) {
    if (v == first || v == last) continue;
    const bool left = g.adjacent(first, v);
    const bool right = g.adjacent(v, last);
    if (!left && !right) return std::nullopt;
    side[static_cast<std::size_t>(v)] = left && right ? Side::LR : (left ? Side::L : Side::R);
    middle.push_back(v);
  }
  // Pairwise precedence: u may precede v iff adjacency matches the labels.
  const std::size_t k = middle.size();
  std::vector<std::vector<std::size_t>> after(k);
  std::vector<int> indegree(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const int u = middle[i];
      const int v = middle[j];
      const bool adj = g.adjacent(u, v);
      const bool u_first = adj == (has_right(side[static_cast<std::size_t>(u)]) && has_left(side[static_cast<std::size_t>(v)]));
      const bool v_first = adj == (has_right(side[static_cast<std::size_t>(v)]) && has_left(side[static_cast<std::size_t>(u)]));
      if (!u_first && !v_first) return std::nullopt;
      if (u_first && !v_first) {
        after[i].push_back(j);
        ++indegree[j];
      } else if (v_first && !u_first) {
        after[j].push_back(i);
        ++indegree[i];
      }
    }
  ThreadBlock b;
  b.order.push_back(first);
  b.labels.push_back(Side::R);
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < k; ++i)
    if (indegree[i] == 0) ready.push(i);
  while (!ready.empty()) {
    const std::size_t i = ready.top();
    ready.pop();
    b.order.push_back(middle[i]);
    b.labels.push_back(side[static_cast<std::size_t>(middle[i])]);
    for (std::size_t j : after[i])
      if (--indegree[j] == 0) ready.push(j);
  }
  if (b.order.size() != k + 1) return std::nullopt;
  b.order.push_back(last);
  b.labels.push_back(Side::L);
  if (!block_matches_graph(g, b)) return std::nullopt;
  return b;
}

Graph merge(int n, std::span<const int> anchors, std::span<const ThreadBlock> blocks, bool cyclic) {
  const std::size_t h = anchors.size();
  if (cyclic ? h < 3 : h < 1) throw NotMergeable("too few anchors");
  if (blocks.size() != (cyclic ? h : h - 1)) throw NotMergeable("block count does not match the anchors");
  std::vector<int> anchor_index(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < h; ++i) {
    const int a = anchors[i];
    if (a < 0 || a >= n) throw NotMergeable("anchor out of range");
    if (anchor_index[static_cast<std::size_t>(a)] != -1) throw NotMergeable("repeated anchor");
    anchor_index[static_cast<std::size_t>(a)] = static_cast<int>(i);
  }
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  Graph g(n);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const ThreadBlock& b = blocks[i];
    if (!validate_thread_block(b, false)) throw NotMergeable("block " + std::to_string(i) + " is not a thread block");
    if (b.first() != anchors[i] || b.last() != anchors[(i + 1) % h])
      throw NotMergeable("block " + std::to_string(i) + " does not span its anchors");
    for (std::size_t p = 0; p < b.order.size(); ++p) {
      const int v = b.order[p];
      if (v >= n) throw NotMergeable("block vertex out of range");
      const bool endpoint = p == 0 || p + 1 == b.order.size();
      if (anchor_index[static_cast<std::size_t>(v)] != -1) {
        if (!endpoint) throw NotMergeable("anchor inside another block");
        continue;
      }
      if (owner[static_cast<std::size_t>(v)] != -1) throw NotMergeable("blocks overlap outside the anchors");
      owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    for (auto [u, v] : b.edges()) g.add_edge(u, v);
  }
  return g;
}

Graph merge(int n, const ThreadDecomposition& d) { return merge(n, d.anchors, d.blocks, false); }
Graph merge(int n, const NecklaceDecomposition& d) { return merge(n, d.anchors, d.blocks, true); }

namespace {

enum class SpineRole { Clique, StarBack, StarForward, LeafCentred };

struct SpineNode {
  SpineRole role = SpineRole::Clique;
  std::vector<int> leaves;  // host vertices, ascending
  int centre_leaf = -1;
};

std::vector<SpineNode> read_spine(const GraphLabelledTree& t) {
  const auto internal = t.internal_nodes();
  auto inner_neighbours = [&](int u) {
    std::vector<int> out;
    for (int v : t.nodes[static_cast<std::size_t>(u)].adjacent)
      if (!t.nodes[static_cast<std::size_t>(v)].is_leaf()) out.push_back(v);
    return out;
  };
  for (int u : internal)
    if (!t.nodes[static_cast<std::size_t>(u)].is_degenerate() || inner_neighbours(u).size() > 2)
      throw NotThreadGraph("graph is not a thread graph");

  auto min_leaf = [&](int u) {
    int best = t.host_order;
    for (int v : t.nodes[static_cast<std::size_t>(u)].adjacent)
      if (t.nodes[static_cast<std::size_t>(v)].is_leaf()) best = std::min(best, t.nodes[static_cast<std::size_t>(v)].vertex);
    return best;
  };
  std::vector<int> ends;
  for (int u : internal)
    if (inner_neighbours(u).size() <= 1) ends.push_back(u);
  int start = ends.front();
  for (int u : ends)
    if (min_leaf(u) < min_leaf(start)) start = u;

  std::vector<int> path{start};
  for (int prev = -1, cur = start;;) {
    int next = -1;
    for (int v : inner_neighbours(cur))
      if (v != prev) next = v;
    if (next == -1) break;
    path.push_back(next);
    prev = cur;
    cur = next;
  }

  std::vector<SpineNode> spine(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    const SplitNode& node = t.nodes[static_cast<std::size_t>(path[i])];
    SpineNode& s = spine[i];
    for (int v : node.adjacent)
      if (t.nodes[static_cast<std::size_t>(v)].is_leaf()) s.leaves.push_back(t.nodes[static_cast<std::size_t>(v)].vertex);
    std::sort(s.leaves.begin(), s.leaves.end());
    if (node.kind == SplitNodeKind::Clique) continue;
    const int towards = node.adjacent[static_cast<std::size_t>(node.center)];
    if (t.nodes[static_cast<std::size_t>(towards)].is_leaf()) {
      s.role = SpineRole::LeafCentred;
      s.centre_leaf = t.nodes[static_cast<std::size_t>(towards)].vertex;
    } else {
      s.role = (i > 0 && towards == path[i - 1]) ? SpineRole::StarBack : SpineRole::StarForward;
    }
  }
  return spine;
}

}  // namespace

ThreadDecomposition canonical_thread_decomposition(const Graph& g) {
  if (g.order() < 2) throw InputError("thread decomposition needs at least two vertices");
  const GraphLabelledTree t = build_reduced_split_tree(g);
  const std::vector<SpineNode> spine = read_spine(t);
  const int m = static_cast<int>(spine.size());

  // Stars whose centre marker points at a leaf give the interior anchors.
  std::vector<int> centred;
  for (int i = 0; i < m; ++i)
    if (spine[static_cast<std::size_t>(i)].role == SpineRole::LeafCentred) centred.push_back(i);
  const int t_count = static_cast<int>(centred.size());

  ThreadDecomposition d;
  const SpineNode& head = spine.front();
  int w0 = -1;
  for (int v : head.leaves)
    if (v != head.centre_leaf) {
      w0 = v;
      break;
    }
  d.anchors.push_back(w0);
  for (int i : centred) d.anchors.push_back(spine[static_cast<std::size_t>(i)].centre_leaf);
  const SpineNode& tail = spine.back();
  int w_end = -1;
  for (auto it = tail.leaves.rbegin(); it != tail.leaves.rend(); ++it)
    if (*it != d.anchors.back() && *it != w0) {
      w_end = *it;
      break;
    }
  d.anchors.push_back(w_end);

  std::vector<bool> is_anchor(static_cast<std::size_t>(g.order()), false);
  for (int a : d.anchors) is_anchor[static_cast<std::size_t>(a)] = true;

  for (int j = 0; j <= t_count; ++j) {
    const int lo = j == 0 ? 0 : centred[static_cast<std::size_t>(j - 1)] + 1;
    const int hi = j == t_count ? m - 1 : centred[static_cast<std::size_t>(j)];
    ThreadBlock b;
    b.order.push_back(d.anchors[static_cast<std::size_t>(j)]);
    b.labels.push_back(Side::R);
    for (int i = lo; i <= hi; ++i) {
      const SpineNode& s = spine[static_cast<std::size_t>(i)];
      Side side = Side::LR;
      switch (s.role) {
        case SpineRole::Clique: side = Side::LR; break;
        case SpineRole::StarBack: side = Side::L; break;
        case SpineRole::StarForward: side = Side::R; break;
        case SpineRole::LeafCentred: side = Side::R; break;  // pendants of the next anchor
      }
      for (int v : s.leaves) {
        if (is_anchor[static_cast<std::size_t>(v)]) continue;
        b.order.push_back(v);
        b.labels.push_back(side);
      }
    }
    b.order.push_back(d.anchors[static_cast<std::size_t>(j + 1)]);
    b.labels.push_back(Side::L);
    d.blocks.push_back(std::move(b));
  }

  for (const auto& b : d.blocks)
    if (!validate_thread_block(b, true) || !block_matches_graph(g, b))
      throw InternalError("split tree produced an invalid thread block");
  return d;
}

std::vector<ThreadDecomposition> thread_decompositions(const Graph& g) {
  std::vector<ThreadDecomposition> out;
  for (const VertexSet& comp : connected_components(g)) {
    if (comp.size() == 1) {
      out.push_back({{comp.first()}, {}});
      continue;
    }
    const Subgraph sub = induced_subgraph_mapped(g, comp);
    ThreadDecomposition d = canonical_thread_decomposition(sub.graph);
    for (int& a : d.anchors) a = sub.to_original[static_cast<std::size_t>(a)];
    for (auto& b : d.blocks)
      for (int& v : b.order) v = sub.to_original[static_cast<std::size_t>(v)];
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace lrw1
