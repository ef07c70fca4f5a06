#include "lrw1/solver.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "lrw1/errors.hpp"
#include "lrw1/necklace.hpp"
#include "lrw1/obstructions.hpp"
#include "lrw1/split_tree.hpp"

namespace lrw1 {
namespace {

// Partial answers are in host ids; the trace is built leaf to root and reversed once.
struct Partial {
  std::vector<int> deleted;
  std::vector<BranchStep> steps;
};

class BranchingSolver {
 public:
  explicit BranchingSolver(SolveStats& stats) : stats_(stats) {}

  // Minimum deletion set of g with at most `limit` vertices; ids maps g to host ids.
  std::optional<Partial> search(const Graph& g, const std::vector<int>& ids, int limit) {
    ++stats_.nodes_expanded;
    // Thread components never need deletions.
    VertexSet keep(g.order());
    for (const VertexSet& comp : connected_components(g))
      if (!is_thread_graph(induced_subgraph(g, comp))) keep |= comp;
    if (keep.empty()) return Partial{};
    if (limit <= 0) return std::nullopt;
    const Subgraph core = induced_subgraph_mapped(g, keep);
    std::vector<int> core_ids;
    for (int v : core.to_original) core_ids.push_back(ids[static_cast<std::size_t>(v)]);
    const Graph& h = core.graph;

    std::string form;
    if (h.order() <= kCanonicalMaxOrder) {
      form = canonical_form_small(h);
      const auto it = lower_bound_.find(form);
      if (it != lower_bound_.end() && it->second > limit) {
        ++stats_.memo_prunes;
        return std::nullopt;
      }
    }
    std::optional<Partial> best = solve_core(h, core_ids, limit);
    if (!form.empty()) {
      // Exact when found; otherwise the optimum exceeds the limit.
      const int bound = best ? static_cast<int>(best->deleted.size()) : limit + 1;
      int& slot = lower_bound_[form];
      slot = std::max(slot, bound);
    }
    return best;
  }

 private:
  std::optional<Partial> solve_core(const Graph& h, const std::vector<int>& ids, int limit) {
    const auto hit = find_small_obstruction(h);
    if (!hit) {
      const VertexSet s = min_deletion_obn_free(h, false);
      if (s.size() > limit) return std::nullopt;
      Partial p;
      for (int v : s) p.deleted.push_back(ids[static_cast<std::size_t>(v)]);
      return p;
    }
    BranchStep step;
    step.catalog_id = hit->catalog_id;
    for (int v : hit->vertices) step.hit.push_back(ids[static_cast<std::size_t>(v)]);
    std::optional<Partial> best;
    for (int v : hit->vertices) {
      const int cap = best ? static_cast<int>(best->deleted.size()) - 1 : limit;
      if (cap < 1) break;
      const Subgraph child = delete_vertices(h, VertexSet(h.order(), {v}));
      std::vector<int> child_ids;
      for (int u : child.to_original) child_ids.push_back(ids[static_cast<std::size_t>(u)]);
      auto sub = search(child.graph, child_ids, cap - 1);
      if (!sub) continue;
      sub->deleted.push_back(ids[static_cast<std::size_t>(v)]);
      step.chosen = ids[static_cast<std::size_t>(v)];
      sub->steps.push_back(step);
      best = std::move(sub);
    }
    return best;
  }

  SolveStats& stats_;
  std::unordered_map<std::string, int> lower_bound_;
};

}  // namespace

std::optional<Solution> solve_branching(const Graph& g, int k, SolveStats* stats) {
  if (k < 0) throw InputError("budget must be non-negative");
  SolveStats local;
  SolveStats& s = stats ? *stats : local;
  BranchingSolver solver(s);
  std::vector<int> ids(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) ids[static_cast<std::size_t>(v)] = v;
  auto found = solver.search(g, ids, std::min(k, g.order()));
  if (!found) return std::nullopt;
  Solution out;
  out.deletion_set = VertexSet(g.order(), found->deleted);
  out.trace.assign(found->steps.rbegin(), found->steps.rend());
  if (!is_thread_graph(delete_vertices(g, out.deletion_set).graph))
    throw InternalError("branching solver produced an uncertified set");
  return out;
}

Decision decide(const Instance& inst) {
  Decision d;
  d.solution = solve_branching(inst);
  d.yes = d.solution.has_value();
  return d;
}

}  // namespace lrw1
