#include "lrw1/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>

#include "lrw1/errors.hpp"

namespace lrw1 {

Graph::Graph(int n) : adj_(static_cast<std::size_t>(n), VertexSet(n)) {}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const noexcept {
  int twice = 0;
  for (const auto& row : adj_) twice += row.size();
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw InputError("edge endpoint out of range");
  adj_[static_cast<std::size_t>(u)].insert(v);
  adj_[static_cast<std::size_t>(v)].insert(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[static_cast<std::size_t>(u)].erase(v);
  adj_[static_cast<std::size_t>(v)].erase(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u)
    for (int v = neighbors(u).next(u); v != -1; v = neighbors(u).next(v)) out.emplace_back(u, v);
  return out;
}

void Graph::set_names(std::vector<std::string> names) {
  if (!names.empty() && static_cast<int>(names.size()) != order())
    throw InputError("name list does not match vertex count");
  names_ = std::move(names);
}

std::string Graph::name(int v) const {
  if (has_names()) return names_[static_cast<std::size_t>(v)];
  return std::to_string(v + 1);
}

VertexSet Subgraph::lift(const VertexSet& s) const {
  VertexSet out(static_cast<int>(from_original.size()));
  for (int v : s) out.insert(to_original[static_cast<std::size_t>(v)]);
  return out;
}

int cut_rank(const Graph& g, const VertexSet& s) {
  const VertexSet rest = s.complement();
  std::vector<VertexSet> basis;
  std::vector<int> pivots;
  for (int v : s) {
    VertexSet row = g.neighbors(v) & rest;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (row.contains(pivots[i])) {
        // XOR: (row - b) | (b - row)
        VertexSet x = row - basis[i];
        x |= basis[i] - row;
        row = std::move(x);
      }
    int p = row.first();
    if (p == -1) continue;
    // Keep the basis reduced on the new pivot so later rows see a clean echelon.
    for (auto& b : basis)
      if (b.contains(p)) {
        VertexSet x = b - row;
        x |= row - b;
        b = std::move(x);
      }
    basis.push_back(std::move(row));
    pivots.push_back(p);
  }
  return static_cast<int>(basis.size());
}

BlockCutStructure blocks_and_cut_vertices(const Graph& g) {
  const int n = g.order();
  BlockCutStructure out;
  out.cut_vertices = VertexSet(n);
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;
  int time = 0;

  struct Frame {
    int v;
    int parent;
    int cursor;
  };

  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    if (g.degree(root) == 0) {
      out.blocks.emplace_back(n, std::initializer_list<int>{root});
      disc[root] = time++;
      continue;
    }
    int root_children = 0;
    std::vector<Frame> stack{{root, -1, -1}};
    disc[root] = low[root] = time++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const int w = g.neighbors(f.v).next(f.cursor);
      if (w != -1) {
        f.cursor = w;
        if (disc[w] == -1) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = time++;
          if (f.v == root) ++root_children;
          stack.push_back({w, f.v, -1});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const int v = f.v;
      stack.pop_back();
      if (stack.empty()) break;
      const int u = stack.back().v;
      low[u] = std::min(low[u], low[v]);
      if (low[v] >= disc[u]) {
        if (u != root) out.cut_vertices.insert(u);
        VertexSet block(n);
        while (true) {
          auto [a, b] = edge_stack.back();
          edge_stack.pop_back();
          block.insert(a);
          block.insert(b);
          if (a == u && b == v) break;
        }
        out.blocks.push_back(std::move(block));
      }
    }
    if (root_children >= 2) out.cut_vertices.insert(root);
  }

  out.cut_list = out.cut_vertices.to_vector();
  const std::size_t nb = out.blocks.size();
  out.tree.assign(nb + out.cut_list.size(), {});
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t i = 0; i < out.cut_list.size(); ++i)
      if (out.blocks[b].contains(out.cut_list[i])) {
        out.tree[b].push_back(static_cast<int>(nb + i));
        out.tree[nb + i].push_back(static_cast<int>(b));
      }
  return out;
}

Subgraph induced_subgraph_mapped(const Graph& g, const VertexSet& s) {
  Subgraph out;
  out.from_original.assign(static_cast<std::size_t>(g.order()), -1);
  for (int v : s) {
    out.from_original[static_cast<std::size_t>(v)] = static_cast<int>(out.to_original.size());
    out.to_original.push_back(v);
  }
  const int m = static_cast<int>(out.to_original.size());
  out.graph = Graph(m);
  for (int i = 0; i < m; ++i) {
    const int v = out.to_original[static_cast<std::size_t>(i)];
    for (int w : g.neighbors(v)) {
      const int j = out.from_original[static_cast<std::size_t>(w)];
      if (j > i) out.graph.add_edge(i, j);
    }
  }
  if (g.has_names()) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(m));
    for (int v : out.to_original) names.push_back(g.name(v));
    out.graph.set_names(std::move(names));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) { return induced_subgraph_mapped(g, s).graph; }

Subgraph delete_vertices(const Graph& g, const VertexSet& s) {
  return induced_subgraph_mapped(g, s.complement());
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> out;
  VertexSet seen(n);
  for (int s = 0; s < n; ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(n);
    VertexSet frontier(n, {s});
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(n);
      for (int v : frontier) next |= g.neighbors(v);
      next -= comp;
      frontier = std::move(next);
    }
    seen |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

Graph permute(const Graph& g, std::span<const int> perm) {
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  if (g.has_names()) {
    std::vector<std::string> names(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) names[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = g.name(v);
    out.set_names(std::move(names));
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (dist[static_cast<std::size_t>(w)] == -1) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        q.push(w);
      }
  }
  return dist;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

namespace {

// Branch-and-bound over degree-signature-respecting orderings. Columns of the
// upper triangle are compared as integers, first row in the high bit.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) {
      std::uint16_t row = 0;
      for (int w : g.neighbors(v)) row |= static_cast<std::uint16_t>(1U << w);
      adj_[static_cast<std::size_t>(v)] = row;
    }
    // Signature: degree, then the sorted degrees of the neighbours.
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(g.degree(v));
      std::vector<int> nd;
      for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
      std::sort(nd.rbegin(), nd.rend());
      s.insert(s.end(), nd.begin(), nd.end());
    }
    std::map<std::vector<int>, std::vector<int>, std::greater<>> classes;
    for (int v = 0; v < n_; ++v) classes[sig[static_cast<std::size_t>(v)]].push_back(v);
    for (auto& [key, members] : classes) {
      const int id = static_cast<int>(class_members_.size());
      class_members_.push_back(members);
      for (std::size_t i = 0; i < members.size(); ++i) class_at_.push_back(id);
    }
  }

  CanonicalLabelling run() {
    dfs(0);
    CanonicalLabelling out;
    out.order.assign(best_perm_.begin(), best_perm_.begin() + n_);
    out.form.push_back(static_cast<char>(n_));
    unsigned char byte = 0;
    int filled = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i) {
        const int bit = (best_cols_[static_cast<std::size_t>(j)] >> (j - 1 - i)) & 1;
        byte = static_cast<unsigned char>((byte << 1) | bit);
        if (++filled == 8) {
          out.form.push_back(static_cast<char>(byte));
          byte = 0;
          filled = 0;
        }
      }
    if (filled) out.form.push_back(static_cast<char>(byte << (8 - filled)));
    return out;
  }

 private:
  void dfs(int j) {
    if (j == n_) {
      if (!have_best_ || compare_prefix(n_ - 1) < 0) {
        best_cols_ = cur_cols_;
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    for (int v : class_members_[static_cast<std::size_t>(class_at_[static_cast<std::size_t>(j)])]) {
      if (used_ & (1U << v)) continue;
      std::uint16_t col = 0;
      for (int i = 0; i < j; ++i)
        col = static_cast<std::uint16_t>((col << 1) | ((adj_[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])] >> v) & 1U));
      cur_cols_[static_cast<std::size_t>(j)] = col;
      if (have_best_ && compare_prefix(j) > 0) continue;
      perm_[static_cast<std::size_t>(j)] = v;
      used_ |= 1U << v;
      dfs(j + 1);
      used_ &= ~(1U << v);
    }
  }

  int compare_prefix(int upto) const {
    for (int i = 0; i <= upto; ++i) {
      const auto a = cur_cols_[static_cast<std::size_t>(i)];
      const auto b = best_cols_[static_cast<std::size_t>(i)];
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  }

  int n_;
  std::array<std::uint16_t, kCanonicalMaxOrder> adj_{};
  std::vector<std::vector<int>> class_members_;
  std::vector<int> class_at_;
  std::array<std::uint16_t, kCanonicalMaxOrder> cur_cols_{};
  std::array<std::uint16_t, kCanonicalMaxOrder> best_cols_{};
  std::array<int, kCanonicalMaxOrder> perm_{};
  std::array<int, kCanonicalMaxOrder> best_perm_{};
  unsigned used_ = 0;
  bool have_best_ = false;
};

}  // namespace

CanonicalLabelling canonical_labelling_small(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder)
    throw ResourceLimit("canonical form is limited to graphs on at most 10 vertices");
  return CanonicalSearch(g).run();
}

std::string canonical_form_small(const Graph& g) { return canonical_labelling_small(g).form; }

std::string to_hex(const std::string& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

}  // namespace lrw1
