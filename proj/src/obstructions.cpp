#include "lrw1/obstructions.hpp"

#include <algorithm>
#include <unordered_set>

#include "catalog_data.hpp"
#include "lrw1/errors.hpp"

namespace lrw1 {

const std::vector<CatalogEntry>& obstruction_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> out;
    for (const auto& raw : detail::embedded_catalog()) {
      CatalogEntry e;
      e.id = static_cast<int>(out.size());
      e.graph = Graph(raw.order, raw.edges);
      e.form = canonical_form_small(e.graph);
      e.name = raw.name;
      e.annotations.assign(raw.annotations.begin(), raw.annotations.end());
      out.push_back(std::move(e));
    }
    return out;
  }();
  return catalog;
}

namespace {

// Pattern vertices in BFS order so every vertex after the first has an
// earlier neighbour; that neighbour's host image seeds the candidate set.
struct PatternPlan {
  std::vector<int> order;
  std::vector<int> anchor;              // earlier neighbour position, -1 for the root
  std::vector<std::vector<int>> adj_before;     // earlier positions adjacent
  std::vector<std::vector<int>> non_adj_before;  // earlier positions not adjacent
  std::vector<int> degree;
};

PatternPlan plan_for(const Graph& p) {
  PatternPlan plan;
  const int k = p.order();
  int root = 0;
  for (int v = 1; v < k; ++v)
    if (p.degree(v) > p.degree(root)) root = v;
  std::vector<int> pos(static_cast<std::size_t>(k), -1);
  plan.order.push_back(root);
  pos[static_cast<std::size_t>(root)] = 0;
  for (std::size_t head = 0; head < plan.order.size(); ++head)
    for (int w : p.neighbors(plan.order[head]))
      if (pos[static_cast<std::size_t>(w)] == -1) {
        pos[static_cast<std::size_t>(w)] = static_cast<int>(plan.order.size());
        plan.order.push_back(w);
      }
  if (static_cast<int>(plan.order.size()) != k) throw InputError("pattern graph must be connected");
  for (int i = 0; i < k; ++i) {
    const int v = plan.order[static_cast<std::size_t>(i)];
    std::vector<int> adj, non;
    for (int j = 0; j < i; ++j) (p.adjacent(v, plan.order[static_cast<std::size_t>(j)]) ? adj : non).push_back(j);
    plan.anchor.push_back(adj.empty() ? -1 : adj.front());
    plan.adj_before.push_back(std::move(adj));
    plan.non_adj_before.push_back(std::move(non));
    plan.degree.push_back(p.degree(v));
  }
  return plan;
}

class InducedMatcher {
 public:
  InducedMatcher(const Graph& host, const Graph& pattern,
                 const std::function<bool(const std::vector<int>&)>& visit)
      : host_(host), pattern_(pattern), plan_(plan_for(pattern)), visit_(visit),
        image_(static_cast<std::size_t>(pattern.order()), -1), used_(host.order()) {}

  void run() {
    if (pattern_.order() == 0 || pattern_.order() > host_.order()) return;
    extend(0);
  }

 private:
  bool extend(int i) {
    const int k = pattern_.order();
    if (i == k) {
      std::vector<int> mapping(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j)
        mapping[static_cast<std::size_t>(plan_.order[static_cast<std::size_t>(j)])] = image_[static_cast<std::size_t>(j)];
      return visit_(mapping);
    }
    VertexSet cand = i == 0 ? host_.vertices() : host_.neighbors(image_[static_cast<std::size_t>(plan_.anchor[static_cast<std::size_t>(i)])]);
    for (int j : plan_.adj_before[static_cast<std::size_t>(i)]) cand &= host_.neighbors(image_[static_cast<std::size_t>(j)]);
    for (int j : plan_.non_adj_before[static_cast<std::size_t>(i)]) cand -= host_.neighbors(image_[static_cast<std::size_t>(j)]);
    cand -= used_;
    const int need = plan_.degree[static_cast<std::size_t>(i)];
    for (int x : cand) {
      if (host_.degree(x) < need) continue;
      image_[static_cast<std::size_t>(i)] = x;
      used_.insert(x);
      const bool go_on = extend(i + 1);
      used_.erase(x);
      if (!go_on) return false;
    }
    return true;
  }

  const Graph& host_;
  const Graph& pattern_;
  PatternPlan plan_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  std::vector<int> image_;
  VertexSet used_;
};

}  // namespace

void for_each_induced_copy(const Graph& host, const Graph& pattern,
                           const std::function<bool(const std::vector<int>&)>& visit) {
  InducedMatcher(host, pattern, visit).run();
}

std::optional<std::vector<int>> find_induced_copy(const Graph& host, const Graph& pattern) {
  std::optional<std::vector<int>> found;
  for_each_induced_copy(host, pattern, [&](const std::vector<int>& m) {
    found = m;
    return false;
  });
  return found;
}

std::optional<ObstructionHit> find_small_obstruction(const Graph& g) {
  for (const auto& member : obstruction_catalog()) {
    if (auto m = find_induced_copy(g, member.graph)) {
      ObstructionHit hit;
      hit.catalog_id = member.id;
      hit.vertices = VertexSet(g.order(), std::span<const int>(*m));
      hit.mapping = std::move(*m);
      return hit;
    }
  }
  return std::nullopt;
}

std::vector<ObstructionHit> enumerate_obstruction_occurrences(const Graph& g, std::int64_t cap) {
  std::vector<ObstructionHit> out;
  std::unordered_set<VertexSet, VertexSetHash> seen;
  for (const auto& member : obstruction_catalog()) {
    for_each_induced_copy(g, member.graph, [&](const std::vector<int>& m) {
      VertexSet s(g.order(), std::span<const int>(m));
      if (!seen.insert(s).second) return true;
      if (static_cast<std::int64_t>(seen.size()) > cap)
        throw CapExceeded("more than " + std::to_string(cap) + " obstruction occurrences");
      out.push_back({member.id, std::move(s), m});
      return true;
    });
  }
  std::sort(out.begin(), out.end(), [](const ObstructionHit& a, const ObstructionHit& b) { return a.vertices < b.vertices; });
  return out;
}

namespace {

class LongCycleSearch {
 public:
  LongCycleSearch(const Graph& g, int min_len) : g_(g), min_len_(min_len), on_path_(g.order()) {}

  std::optional<std::vector<int>> run() {
    for (int s = 0; s < g_.order(); ++s) {
      path_ = {s};
      on_path_ = VertexSet(g_.order(), {s});
      if (grow()) return path_;
    }
    return std::nullopt;
  }

 private:
  // path_ is an induced path starting at its smallest vertex.
  bool grow() {
    const int s = path_.front();
    const int last = path_.back();
    const int len = static_cast<int>(path_.size());
    // Vertices adjacent to an interior path vertex cannot extend an induced path.
    VertexSet interior_nbrs(g_.order());
    for (int i = 1; i + 1 < len; ++i) interior_nbrs |= g_.neighbors(path_[static_cast<std::size_t>(i)]);
    for (int x : g_.neighbors(last)) {
      if (x <= s || on_path_.contains(x) || interior_nbrs.contains(x)) continue;
      if (len >= 2 && g_.adjacent(x, s)) {
        if (len + 1 >= min_len_) {
          path_.push_back(x);
          return true;
        }
        continue;
      }
      path_.push_back(x);
      on_path_.insert(x);
      if (grow()) return true;
      on_path_.erase(x);
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int min_len_;
  std::vector<int> path_;
  VertexSet on_path_;
};

}  // namespace

std::optional<std::vector<int>> find_long_induced_cycle(const Graph& g, int min_len) {
  if (min_len < 4) throw InputError("minimum cycle length must be at least 4");
  return LongCycleSearch(g, min_len).run();
}

}  // namespace lrw1
