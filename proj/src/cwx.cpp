#include "lrw1/cwx.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>
#include <set>
#include <unordered_map>

#include "lrw1/errors.hpp"
#include "lrw1/necklace.hpp"
#include "lrw1/obstructions.hpp"
#include "lrw1/split_tree.hpp"

namespace lrw1 {

int KExpression::max_label() const {
  int best = 0;
  for (const auto& node : nodes) best = std::max({best, node.first, node.second});
  return best;
}

int KExpression::vertex_count() const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const ExprNode& x) { return x.kind == ExprKind::Intro; }));
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(const std::string& text, int max_labels) : text_(text), max_labels_(max_labels) {}

  KExpression run() {
    skip();
    if (pos_ == text_.size()) fail("empty expression");
    expr_.root = parse_expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return std::move(expr_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string word() {
    skip();
    std::string out;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      out.push_back(text_[pos_]);
      advance();
    }
    return out;
  }

  int label() {
    skip();
    const int line = line_;
    const int column = column_;
    const std::string digits = word();
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("expected a label", line, column);
    if (digits.size() > 6) throw ParseError("label too large", line, column);
    const int value = std::stoi(digits);
    if (value < 1 || (max_labels_ > 0 && value > max_labels_)) throw ParseError("label out of range", line, column);
    return value;
  }

  int push(ExprNode node) {
    expr_.nodes.push_back(std::move(node));
    return static_cast<int>(expr_.nodes.size()) - 1;
  }

  int parse_expr() {
    skip();
    const int line = line_;
    const int column = column_;
    const std::string op = word();
    ExprNode node;
    if (op == "add") {
      expect('(');
      node.kind = ExprKind::Intro;
      node.first = label();
      expect(',');
      skip();
      const int name_line = line_;
      const int name_column = column_;
      node.name = word();
      if (node.name.empty()) fail("expected a vertex name");
      if (!names_.insert(node.name).second) throw ParseError("duplicate vertex name '" + node.name + "'", name_line, name_column);
      expect(')');
    } else if (op == "un") {
      expect('(');
      node.kind = ExprKind::Union;
      node.left = parse_expr();
      expect(',');
      node.right = parse_expr();
      expect(')');
    } else if (op == "join" || op == "ren") {
      expect('(');
      node.kind = op == "join" ? ExprKind::Join : ExprKind::Rename;
      node.first = label();
      expect(',');
      node.second = label();
      if (node.kind == ExprKind::Join && node.first == node.second) throw ParseError("join needs two distinct labels", line, column);
      expect(',');
      node.left = parse_expr();
      expect(')');
    } else {
      throw ParseError(op.empty() ? "expected an operator" : "unknown operator '" + op + "'", line, column);
    }
    return push(std::move(node));
  }

  const std::string& text_;
  int max_labels_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  KExpression expr_;
  std::set<std::string> names_;
};

void print(const KExpression& e, int id, std::string& out) {
  const ExprNode& x = e.nodes[static_cast<std::size_t>(id)];
  switch (x.kind) {
    case ExprKind::Intro: out += "add(" + std::to_string(x.first) + "," + x.name + ")"; return;
    case ExprKind::Union:
      out += "un(";
      print(e, x.left, out);
      out += ",";
      print(e, x.right, out);
      out += ")";
      return;
    case ExprKind::Join:
    case ExprKind::Rename:
      out += (x.kind == ExprKind::Join ? "join(" : "ren(") + std::to_string(x.first) + "," + std::to_string(x.second) + ",";
      print(e, x.left, out);
      out += ")";
      return;
  }
}

// Nodes reachable from the root in post-order, and each Intro leaf's vertex id.
struct Traversal {
  std::vector<int> post_order;
  std::vector<int> leaf_vertex;  // node -> vertex id, -1 for non-leaves
  std::vector<std::string> names;
};

Traversal traverse(const KExpression& e) {
  Traversal t;
  t.leaf_vertex.assign(e.nodes.size(), -1);
  if (e.empty()) return t;
  // Iterative DFS: children are visited left before right.
  std::vector<std::pair<int, bool>> stack{{e.root, false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const ExprNode& x = e.nodes[static_cast<std::size_t>(id)];
    if (expanded || x.kind == ExprKind::Intro) {
      if (x.kind == ExprKind::Intro) {
        t.leaf_vertex[static_cast<std::size_t>(id)] = static_cast<int>(t.names.size());
        t.names.push_back(x.name);
      }
      t.post_order.push_back(id);
      continue;
    }
    stack.push_back({id, true});
    if (x.right >= 0) stack.push_back({x.right, false});
    stack.push_back({x.left, false});
  }
  return t;
}

}  // namespace

KExpression parse_kexpression(const std::string& text, int max_labels) { return Parser(text, max_labels).run(); }

std::string to_string(const KExpression& e) {
  std::string out;
  if (!e.empty()) print(e, e.root, out);
  return out;
}

// ---------------------------------------------------------------- evaluation

EvaluatedExpression eval_kexpression(const KExpression& e) {
  const Traversal t = traverse(e);
  const int n = static_cast<int>(t.names.size());
  EvaluatedExpression out;
  out.graph = Graph(n);
  out.labels.assign(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> members(e.nodes.size());
  for (int id : t.post_order) {
    const ExprNode& x = e.nodes[static_cast<std::size_t>(id)];
    auto& mine = members[static_cast<std::size_t>(id)];
    switch (x.kind) {
      case ExprKind::Intro: {
        const int v = t.leaf_vertex[static_cast<std::size_t>(id)];
        out.labels[static_cast<std::size_t>(v)] = x.first;
        mine = {v};
        break;
      }
      case ExprKind::Union:
        mine = std::move(members[static_cast<std::size_t>(x.left)]);
        for (int v : members[static_cast<std::size_t>(x.right)]) mine.push_back(v);
        members[static_cast<std::size_t>(x.right)].clear();
        break;
      case ExprKind::Join:
        mine = std::move(members[static_cast<std::size_t>(x.left)]);
        for (int u : mine)
          for (int v : mine)
            if (out.labels[static_cast<std::size_t>(u)] == x.first && out.labels[static_cast<std::size_t>(v)] == x.second)
              out.graph.add_edge(u, v);
        break;
      case ExprKind::Rename:
        mine = std::move(members[static_cast<std::size_t>(x.left)]);
        for (int v : mine)
          if (out.labels[static_cast<std::size_t>(v)] == x.first) out.labels[static_cast<std::size_t>(v)] = x.second;
        break;
    }
  }
  out.graph.set_names(t.names);
  return out;
}

// ---------------------------------------------------------------- induced subgraph DP

namespace {

// State layout: 4 bits of label per pattern vertex (0 = not placed), then one
// bit per pattern edge telling whether the edge already exists in the image.
constexpr int kLabelBits = 4;
constexpr int kEdgeShift = 32;
constexpr int kMaxPatternOrder = 8;
constexpr int kMaxDpLabel = 15;

struct Provenance {
  std::uint64_t left = 0;
  std::uint64_t right = 0;
  int placed = -1;  // Intro: the pattern vertex placed on this leaf
};

using Table = std::unordered_map<std::uint64_t, Provenance>;

class InducedSearch {
 public:
  InducedSearch(const KExpression& e, const Graph& h) : e_(e), p_(h.order()) {
    edge_id_.assign(static_cast<std::size_t>(p_ * p_), -1);
    const auto edges = h.edges();
    for (std::size_t y = 0; y < edges.size(); ++y) {
      edge_id_[static_cast<std::size_t>(edges[y].first * p_ + edges[y].second)] = static_cast<int>(y);
      edge_id_[static_cast<std::size_t>(edges[y].second * p_ + edges[y].first)] = static_cast<int>(y);
    }
    edge_count_ = static_cast<int>(edges.size());
  }

  std::optional<std::vector<int>> run() {
    if (p_ == 0) return std::vector<int>{};
    if (e_.empty()) return std::nullopt;
    const Traversal t = traverse(e_);
    tables_.assign(e_.nodes.size(), Table{});
    for (int id : t.post_order) compute(id);
    const std::uint64_t all_edges = edge_count_ == 0 ? 0 : ((std::uint64_t{1} << edge_count_) - 1) << kEdgeShift;
    for (const auto& [state, prov] : tables_[static_cast<std::size_t>(e_.root)]) {
      if ((state >> kEdgeShift) << kEdgeShift != all_edges) continue;
      if (support(state) != (1U << p_) - 1) continue;
      std::vector<int> mapping(static_cast<std::size_t>(p_), -1);
      recover(e_.root, state, t, mapping);
      return mapping;
    }
    return std::nullopt;
  }

 private:
  int label(std::uint64_t s, int v) const { return static_cast<int>((s >> (kLabelBits * v)) & 0xFU); }
  bool edge_bit(std::uint64_t s, int y) const { return (s >> (kEdgeShift + y)) & 1U; }
  std::uint32_t support(std::uint64_t s) const {
    std::uint32_t mask = 0;
    for (int v = 0; v < p_; ++v)
      if (label(s, v) != 0) mask |= 1U << v;
    return mask;
  }

  // A missing pattern edge between equally labelled vertices can never be added.
  bool alive(std::uint64_t s) const {
    for (int u = 0; u < p_; ++u) {
      const int lu = label(s, u);
      if (lu == 0) continue;
      for (int v = u + 1; v < p_; ++v) {
        const int y = edge_id_[static_cast<std::size_t>(u * p_ + v)];
        if (y >= 0 && lu == label(s, v) && !edge_bit(s, y)) return false;
      }
    }
    return true;
  }

  void compute(int id) {
    const ExprNode& x = e_.nodes[static_cast<std::size_t>(id)];
    Table& out = tables_[static_cast<std::size_t>(id)];
    switch (x.kind) {
      case ExprKind::Intro:
        out.emplace(0, Provenance{});
        for (int v = 0; v < p_; ++v) {
          Provenance prov;
          prov.placed = v;
          out.emplace(static_cast<std::uint64_t>(x.first) << (kLabelBits * v), prov);
        }
        break;
      case ExprKind::Union: {
        const Table& left = tables_[static_cast<std::size_t>(x.left)];
        const Table& right = tables_[static_cast<std::size_t>(x.right)];
        std::vector<std::vector<std::uint64_t>> by_support(std::size_t{1} << p_);
        for (const auto& entry : right) by_support[support(entry.first)].push_back(entry.first);
        const std::uint32_t full = (1U << p_) - 1;
        for (const auto& entry : left) {
          const std::uint64_t ls = entry.first;
          const std::uint32_t free = full & ~support(ls);
          // Every submask of the free pattern vertices, including the empty one.
          for (std::uint32_t sub = free;; sub = (sub - 1) & free) {
            for (std::uint64_t rs : by_support[sub]) {
              const std::uint64_t s = ls | rs;
              if (out.count(s) || !alive(s)) continue;
              out.emplace(s, Provenance{ls, rs, -1});
            }
            if (sub == 0) break;
          }
        }
        break;
      }
      case ExprKind::Join:
        for (const auto& entry : tables_[static_cast<std::size_t>(x.left)]) {
          std::uint64_t s = entry.first;
          bool ok = true;
          for (int u = 0; u < p_ && ok; ++u)
            for (int v = 0; v < p_ && ok; ++v) {
              if (label(s, u) != x.first || label(s, v) != x.second) continue;
              const int y = edge_id_[static_cast<std::size_t>(u * p_ + v)];
              if (y < 0) ok = false;
              else s |= std::uint64_t{1} << (kEdgeShift + y);
            }
          if (ok) out.emplace(s, Provenance{entry.first, 0, -1});
        }
        break;
      case ExprKind::Rename:
        for (const auto& entry : tables_[static_cast<std::size_t>(x.left)]) {
          std::uint64_t s = entry.first;
          for (int v = 0; v < p_; ++v)
            if (label(s, v) == x.first) {
              s &= ~(std::uint64_t{0xF} << (kLabelBits * v));
              s |= static_cast<std::uint64_t>(x.second) << (kLabelBits * v);
            }
          if (alive(s)) out.emplace(s, Provenance{entry.first, 0, -1});
        }
        break;
    }
  }

  void recover(int id, std::uint64_t state, const Traversal& t, std::vector<int>& mapping) const {
    // Walk down iteratively along unary chains, recursing only at unions.
    while (true) {
      const ExprNode& x = e_.nodes[static_cast<std::size_t>(id)];
      const Provenance& prov = tables_[static_cast<std::size_t>(id)].at(state);
      switch (x.kind) {
        case ExprKind::Intro:
          if (prov.placed >= 0) mapping[static_cast<std::size_t>(prov.placed)] = t.leaf_vertex[static_cast<std::size_t>(id)];
          return;
        case ExprKind::Union:
          recover(x.left, prov.left, t, mapping);
          id = x.right;
          state = prov.right;
          break;
        case ExprKind::Join:
        case ExprKind::Rename:
          id = x.left;
          state = prov.left;
          break;
      }
    }
  }

  const KExpression& e_;
  int p_;
  int edge_count_ = 0;
  std::vector<int> edge_id_;
  std::vector<Table> tables_;
};

}  // namespace

std::optional<std::vector<int>> find_induced_subgraph_cwx(const KExpression& e, const Graph& h) {
  if (h.order() > kMaxPatternOrder) throw InputError("pattern graphs are limited to 8 vertices");
  if (e.max_label() > kMaxDpLabel) throw InputError("expressions are limited to 15 labels");
  return InducedSearch(e, h).run();
}

// ---------------------------------------------------------------- editing

KExpression delete_vertex_in_expression(const KExpression& e, const std::string& name) {
  const Traversal t = traverse(e);
  if (std::find(t.names.begin(), t.names.end(), name) == t.names.end())
    throw UnknownVertex("no vertex named '" + name + "' in the expression");
  KExpression out;
  std::vector<int> rebuilt(e.nodes.size(), -1);
  for (int id : t.post_order) {
    ExprNode x = e.nodes[static_cast<std::size_t>(id)];
    int result = -1;
    switch (x.kind) {
      case ExprKind::Intro:
        if (x.name != name) {
          out.nodes.push_back(x);
          result = static_cast<int>(out.nodes.size()) - 1;
        }
        break;
      case ExprKind::Union: {
        const int l = rebuilt[static_cast<std::size_t>(x.left)];
        const int r = rebuilt[static_cast<std::size_t>(x.right)];
        if (l >= 0 && r >= 0) {
          x.left = l;
          x.right = r;
          out.nodes.push_back(x);
          result = static_cast<int>(out.nodes.size()) - 1;
        } else {
          result = l >= 0 ? l : r;
        }
        break;
      }
      case ExprKind::Join:
      case ExprKind::Rename:
        if (rebuilt[static_cast<std::size_t>(x.left)] >= 0) {
          x.left = rebuilt[static_cast<std::size_t>(x.left)];
          out.nodes.push_back(x);
          result = static_cast<int>(out.nodes.size()) - 1;
        }
        break;
    }
    rebuilt[static_cast<std::size_t>(id)] = result;
  }
  out.root = rebuilt[static_cast<std::size_t>(e.root)];
  if (out.root < 0) out.nodes.clear();
  return out;
}

// ---------------------------------------------------------------- branching

namespace {

struct CwxPartial {
  std::vector<int> deleted;
  std::vector<BranchStep> steps;
};

class CwxSolver {
 public:
  CwxSolver(const std::unordered_map<std::string, int>& ids, SolveStats& stats) : ids_(ids), stats_(stats) {}

  std::optional<CwxPartial> search(KExpression e, int limit) {
    ++stats_.nodes_expanded;
    EvaluatedExpression ev = eval_kexpression(e);
    // Thread components need no deletions.
    for (const VertexSet& comp : connected_components(ev.graph))
      if (is_thread_graph(induced_subgraph(ev.graph, comp)))
        for (int v : comp) e = delete_vertex_in_expression(e, ev.graph.name(v));
    if (e.empty()) return CwxPartial{};
    if (limit <= 0) return std::nullopt;
    ev = eval_kexpression(e);
    const Graph& g = ev.graph;

    std::optional<std::vector<int>> hit;
    int catalog_id = -1;
    for (const CatalogEntry& entry : obstruction_catalog()) {
      hit = find_induced_subgraph_cwx(e, entry.graph);
      if (hit) {
        catalog_id = entry.id;
        break;
      }
    }
    if (!hit) {
      const VertexSet s = min_deletion_obn_free(g, false);
      if (s.size() > limit) return std::nullopt;
      CwxPartial p;
      for (int v : s) p.deleted.push_back(host(g, v));
      return p;
    }
    std::vector<int> vertices = *hit;
    std::sort(vertices.begin(), vertices.end());
    BranchStep step;
    step.catalog_id = catalog_id;
    for (int v : vertices) step.hit.push_back(host(g, v));
    std::sort(step.hit.begin(), step.hit.end());
    std::optional<CwxPartial> best;
    for (int v : vertices) {
      const int cap = best ? static_cast<int>(best->deleted.size()) - 1 : limit;
      if (cap < 1) break;
      auto sub = search(delete_vertex_in_expression(e, g.name(v)), cap - 1);
      if (!sub) continue;
      sub->deleted.push_back(host(g, v));
      step.chosen = host(g, v);
      sub->steps.push_back(step);
      best = std::move(sub);
    }
    return best;
  }

 private:
  int host(const Graph& g, int v) const { return ids_.at(g.name(v)); }

  const std::unordered_map<std::string, int>& ids_;
  SolveStats& stats_;
};

}  // namespace

std::optional<Solution> solve_branching_cwx(const KExpression& e, int k, SolveStats* stats) {
  if (k < 0) throw InputError("budget must be non-negative");
  const EvaluatedExpression ev = eval_kexpression(e);
  std::unordered_map<std::string, int> ids;
  for (int v = 0; v < ev.graph.order(); ++v) ids.emplace(ev.graph.name(v), v);
  SolveStats local;
  CwxSolver solver(ids, stats ? *stats : local);
  auto found = solver.search(e, std::min(k, ev.graph.order()));
  if (!found) return std::nullopt;
  Solution out;
  out.deletion_set = VertexSet(ev.graph.order(), found->deleted);
  out.trace.assign(found->steps.rbegin(), found->steps.rend());
  if (!is_thread_graph(delete_vertices(ev.graph, out.deletion_set).graph))
    throw InternalError("expression solver produced an uncertified set");
  return out;
}

// ---------------------------------------------------------------- generators

KExpression random_kexpression(int n, int labels, std::uint64_t seed) {
  if (n < 1 || labels < 1) throw InputError("random expressions need n >= 1 and at least one label");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_label(1, labels);
  std::bernoulli_distribution coin(0.5);
  KExpression e;
  int next_name = 1;
  auto push = [&](ExprNode node) {
    e.nodes.push_back(std::move(node));
    return static_cast<int>(e.nodes.size()) - 1;
  };
  auto two_labels = [&](int& a, int& b) {
    a = pick_label(rng);
    do b = pick_label(rng);
    while (b == a);
  };
  std::function<int(int)> build = [&](int count) -> int {
    if (count == 1) {
      ExprNode leaf;
      leaf.kind = ExprKind::Intro;
      leaf.first = pick_label(rng);
      leaf.name = "v" + std::to_string(next_name++);
      return push(std::move(leaf));
    }
    // Half the unions add a single vertex, which gives path-like shapes.
    std::uniform_int_distribution<int> split(1, count - 1);
    const int left_count = coin(rng) ? count - 1 : split(rng);
    ExprNode un;
    un.kind = ExprKind::Union;
    un.left = build(left_count);
    un.right = build(count - left_count);
    int top = push(std::move(un));
    if (labels < 2) return top;
    for (int round = 0; round < 3; ++round) {
      if (!std::bernoulli_distribution(0.6)(rng)) continue;
      ExprNode join;
      join.kind = ExprKind::Join;
      two_labels(join.first, join.second);
      join.left = top;
      top = push(std::move(join));
    }
    if (std::bernoulli_distribution(0.5)(rng)) {
      ExprNode ren;
      ren.kind = ExprKind::Rename;
      two_labels(ren.first, ren.second);
      ren.left = top;
      top = push(std::move(ren));
    }
    return top;
  };
  e.root = build(n);
  return e;
}

KExpression path_kexpression(int n) {
  if (n < 1) throw InputError("a path needs at least one vertex");
  std::string text = "add(2,v1)";
  for (int i = 2; i <= n; ++i)
    text = "ren(3,2,ren(2,1,join(2,3,un(" + text + ",add(3,v" + std::to_string(i) + ")))))";
  return parse_kexpression(text);
}

}  // namespace lrw1
