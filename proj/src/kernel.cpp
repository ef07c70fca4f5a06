#include "lrw1/kernel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lrw1/errors.hpp"
#include "lrw1/necklace.hpp"
#include "lrw1/split_tree.hpp"
#include "lrw1/thread.hpp"

namespace lrw1 {

BigInt mu(int k) {
  if (k < 0) throw InputError("budget must be non-negative");
  return BigInt(8) * 40320 * boost::multiprecision::pow(BigInt(k + 1), 8) + k;
}

BigInt sunflower_bound(int d, int k) {
  if (d < 0 || k < 0) throw InputError("sunflower bound needs d, k >= 0");
  BigInt factorial = 1;
  for (int i = 2; i <= d; ++i) factorial *= i;
  return factorial * boost::multiprecision::pow(BigInt(k + 1), static_cast<unsigned>(d));
}

// ---------------------------------------------------------------- sunflowers

namespace {

std::optional<Sunflower> sunflower_in(const std::vector<std::vector<int>>& residual, const std::vector<int>& members,
                                      int petals, int universe) {
  if (static_cast<int>(members.size()) < petals) return std::nullopt;
  std::vector<int> chosen;
  std::vector<char> used(static_cast<std::size_t>(universe), 0);
  for (int i : members) {
    const auto& s = residual[static_cast<std::size_t>(i)];
    if (std::any_of(s.begin(), s.end(), [&](int x) { return used[static_cast<std::size_t>(x)]; })) continue;
    chosen.push_back(i);
    for (int x : s) used[static_cast<std::size_t>(x)] = 1;
    if (static_cast<int>(chosen.size()) == petals) {
      Sunflower out;
      out.core = VertexSet(universe);
      out.petals = chosen;
      std::sort(out.petals.begin(), out.petals.end());
      return out;
    }
  }
  // Every member meets the union of the chosen sets; recurse on its most frequent element.
  std::vector<int> frequency(static_cast<std::size_t>(universe), 0);
  for (int i : members)
    for (int x : residual[static_cast<std::size_t>(i)])
      if (used[static_cast<std::size_t>(x)]) ++frequency[static_cast<std::size_t>(x)];
  const auto best = std::max_element(frequency.begin(), frequency.end());
  if (best == frequency.end() || *best < petals) return std::nullopt;
  const int pivot = static_cast<int>(best - frequency.begin());
  std::vector<std::vector<int>> reduced = residual;
  std::vector<int> sub;
  for (int i : members) {
    auto& s = reduced[static_cast<std::size_t>(i)];
    const auto it = std::find(s.begin(), s.end(), pivot);
    if (it == s.end()) continue;
    s.erase(it);
    sub.push_back(i);
  }
  auto found = sunflower_in(reduced, sub, petals, universe);
  if (found) found->core.insert(pivot);
  return found;
}

}  // namespace

std::optional<Sunflower> find_sunflower(const SetFamily& f, int petals) {
  if (petals < 1) throw InputError("a sunflower needs at least one petal");
  std::vector<std::vector<int>> residual;
  std::vector<int> members;
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    residual.push_back(f.sets[i].to_vector());
    members.push_back(static_cast<int>(i));
  }
  return sunflower_in(residual, members, petals, f.universe);
}

SetFamily sunflower_compress(const SetFamily& f, int k, int d) {
  if (k < 0) throw InputError("budget must be non-negative");
  SetFamily out;
  out.universe = f.universe;
  std::set<VertexSet> seen;
  for (const VertexSet& s : f.sets) {
    if (s.size() > d) throw InputError("family member larger than the set size bound");
    if (seen.insert(s).second) out.sets.push_back(s);
  }
  while (auto flower = find_sunflower(out, k + 2))
    out.sets.erase(out.sets.begin() + flower->petals.back());
  return out;
}

// ---------------------------------------------------------------- thresholds and state

Thresholds Thresholds::proven(int k) {
  const BigInt m = mu(k);
  Thresholds t;
  t.block_size = BigInt(k + 2) * (m + 2) * (m + 2) + 1;
  t.component_blocks = 19 * (6 * m + 1);
  t.isolated = m * m * (k + 2) + 1;
  t.components = 2 * m;
  return t;
}

Thresholds Thresholds::test() {
  Thresholds t;
  t.block_size = 6;
  t.component_blocks = 12;
  t.isolated = 3;
  t.components = 2 * mu(0);
  return t;
}

Thresholds Thresholds::for_mode(ThresholdMode mode, int k) { return mode == ThresholdMode::Proven ? proven(k) : test(); }

KernelState::KernelState(Graph g, int budget, ThresholdMode m) : graph(std::move(g)), k(budget), mode(m) {
  if (budget < 0) throw InputError("budget must be non-negative");
  modulator = VertexSet(graph.order());
  origin.resize(static_cast<std::size_t>(graph.order()));
  for (int v = 0; v < graph.order(); ++v) origin[static_cast<std::size_t>(v)] = v;
}

const char* to_string(KernelOutcome outcome) {
  switch (outcome) {
    case KernelOutcome::Reduced: return "reduced";
    case KernelOutcome::No: return "no";
    case KernelOutcome::Unchanged: return "unchanged";
  }
  return "?";
}

namespace {

// Keeps the vertices of `keep`, remapping T and origin; returns the old ids kept.
void restrict_to(KernelState& s, const VertexSet& keep) {
  const Subgraph sub = induced_subgraph_mapped(s.graph, keep);
  VertexSet t(sub.graph.order());
  std::vector<int> origin;
  for (int i = 0; i < sub.graph.order(); ++i) {
    const int old = sub.to_original[static_cast<std::size_t>(i)];
    if (s.modulator.universe() > old && s.modulator.contains(old)) t.insert(i);
    origin.push_back(s.origin[static_cast<std::size_t>(old)]);
  }
  Graph g = sub.graph;
  if (s.graph.has_names()) {
    std::vector<std::string> names;
    for (int old : sub.to_original) names.push_back(s.graph.name(old));
    g.set_names(std::move(names));
  }
  s.graph = std::move(g);
  s.modulator = std::move(t);
  s.origin = std::move(origin);
}

void record(KernelState& s, const std::string& rule, std::vector<int> vertices) {
  s.trace.push_back({rule, std::move(vertices), s.k, s.graph.order()});
}

std::vector<VertexSet> occurrence_sets(const KernelState& s) {
  std::vector<VertexSet> out;
  for (const ObstructionHit& hit : enumerate_obstruction_occurrences(s.graph, s.occurrence_cap)) out.push_back(hit.vertices);
  return out;
}

// Components of g - T as host vertex sets, each with its thread decomposition.
struct RestComponent {
  VertexSet vertices;
  ThreadDecomposition decomposition;  // in host ids; no blocks for a single vertex
};

std::vector<RestComponent> rest_components(const KernelState& s) {
  const Subgraph rest = delete_vertices(s.graph, s.modulator);
  std::vector<RestComponent> out;
  for (const VertexSet& local : connected_components(rest.graph)) {
    const Subgraph comp = induced_subgraph_mapped(rest.graph, local);
    RestComponent rc;
    rc.vertices = VertexSet(s.graph.order());
    auto host = [&](int v) { return rest.to_original[static_cast<std::size_t>(comp.to_original[static_cast<std::size_t>(v)])]; };
    for (int v = 0; v < comp.graph.order(); ++v) rc.vertices.insert(host(v));
    if (comp.graph.order() == 1) {
      rc.decomposition.anchors = {host(0)};
    } else {
      if (!is_thread_graph(comp.graph)) throw InternalError("g - T is not a thread graph");
      rc.decomposition = canonical_thread_decomposition(comp.graph);
      for (int& a : rc.decomposition.anchors) a = host(a);
      for (auto& b : rc.decomposition.blocks)
        for (int& v : b.order) v = host(v);
    }
    out.push_back(std::move(rc));
  }
  return out;
}

// The first `count` members of `candidates` (in the given order) passing `pred`.
template <class Pred>
void mark_first(const std::vector<int>& candidates, int count, Pred pred, VertexSet& marked) {
  int taken = 0;
  for (int v : candidates) {
    if (taken == count) return;
    if (pred(v)) {
      marked.insert(v);
      ++taken;
    }
  }
}

}  // namespace

void delete_vertex(KernelState& s, int v, const std::string& rule) {
  VertexSet keep = VertexSet::full(s.graph.order());
  keep.erase(v);
  restrict_to(s, keep);
  record(s, rule, {v});
}

// ---------------------------------------------------------------- rules

KernelOutcome rule_remove_thread_components(KernelState& s) {
  VertexSet keep(s.graph.order());
  std::vector<int> removed;
  for (const VertexSet& comp : connected_components(s.graph)) {
    if (is_thread_graph(induced_subgraph(s.graph, comp))) {
      for (int v : comp) removed.push_back(v);
    } else {
      keep |= comp;
    }
  }
  if (removed.empty()) return KernelOutcome::Unchanged;
  restrict_to(s, keep);
  record(s, "thread-components", std::move(removed));
  return KernelOutcome::Reduced;
}

KernelOutcome compute_T(KernelState& s) {
  const int n = s.graph.order();
  const SetFamily compressed = sunflower_compress({n, occurrence_sets(s)}, s.k, 8);
  VertexSet t(n);
  for (const VertexSet& set : compressed.sets) t |= set;
  const Subgraph rest = delete_vertices(s.graph, t);
  if (find_small_obstruction(rest.graph)) {
    record(s, "modulator:no", {});
    return KernelOutcome::No;
  }
  const VertexSet y = min_deletion_obn_free(rest.graph, false);
  if (y.size() >= s.k + 1) {
    record(s, "modulator:no", {});
    return KernelOutcome::No;
  }
  for (int v : y) t.insert(rest.to_original[static_cast<std::size_t>(v)]);
  s.modulator = t;
  record(s, "modulator", t.to_vector());
  return KernelOutcome::Unchanged;
}

KernelOutcome rule_one_vertex(KernelState& s) {
  VertexSet u(s.graph.order());
  for (const VertexSet& occ : occurrence_sets(s)) {
    const VertexSet meet = occ & s.modulator;
    if (meet.size() == 1) u |= meet;
  }
  if (u.empty()) return KernelOutcome::Unchanged;
  if (u.size() > s.k) {
    record(s, "one-vertex:no", u.to_vector());
    return KernelOutcome::No;
  }
  s.k -= u.size();
  restrict_to(s, VertexSet::full(s.graph.order()) - u);
  record(s, "one-vertex", u.to_vector());
  return KernelOutcome::Reduced;
}

std::optional<int> find_irrelevant_in_big_block(const KernelState& s) {
  const Thresholds th = s.thresholds();
  const int quota = s.k + 2;
  const std::vector<int> t = s.modulator.to_vector();
  for (const RestComponent& rc : rest_components(s)) {
    for (const ThreadBlock& b : rc.decomposition.blocks) {
      if (BigInt(b.size()) < th.block_size) continue;
      // Interior of the ordering, with labels.
      std::vector<int> inner(b.order.begin() + 1, b.order.end() - 1);
      std::vector<int> inner_reversed(inner.rbegin(), inner.rend());
      auto right = [&](int v) { return has_right(b.label_of(v)); };
      auto left = [&](int v) { return has_left(b.label_of(v)); };
      VertexSet z(s.graph.order());
      for (int v : t) {
        mark_first(inner, quota, [&](int x) { return right(x) && s.graph.adjacent(v, x); }, z);
        mark_first(inner_reversed, quota, [&](int x) { return left(x) && s.graph.adjacent(v, x); }, z);
      }
      for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
          mark_first(b.order, quota, [&](int x) { return s.graph.adjacent(t[i], x) && s.graph.adjacent(t[j], x); }, z);
      mark_first(inner, quota, right, z);
      mark_first(inner_reversed, quota, left, z);
      for (int w : inner)
        if (!z.contains(w)) return w;
    }
  }
  return std::nullopt;
}

KernelOutcome contract_long_component(KernelState& s) {
  constexpr int kMinRun = 9;
  constexpr int kContractOffset = 4;  // the fifth block of the run
  constexpr int kMaxTouchedBlocks = 6;
  const Thresholds th = s.thresholds();
  for (const RestComponent& rc : rest_components(s)) {
    const auto& blocks = rc.decomposition.blocks;
    if (BigInt(blocks.size()) < th.component_blocks) continue;
    std::vector<bool> marked(blocks.size(), false);
    for (int v : s.modulator) {
      int touched = 0;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        const bool hit = std::any_of(blocks[i].order.begin(), blocks[i].order.end(),
                                     [&](int x) { return s.graph.adjacent(v, x); });
        if (!hit) continue;
        marked[i] = true;
        ++touched;
      }
      if (touched > kMaxTouchedBlocks)
        throw InternalError("a modulator vertex has neighbours in " + std::to_string(touched) + " thread blocks");
    }
    int run_start = -1;
    for (int i = 0, run = 0; i < static_cast<int>(blocks.size()); ++i) {
      run = marked[static_cast<std::size_t>(i)] ? 0 : run + 1;
      if (run == kMinRun) {
        run_start = i - kMinRun + 1;
        break;
      }
    }
    if (run_start < 0) continue;
    const ThreadBlock& target = blocks[static_cast<std::size_t>(run_start + kContractOffset)];
    const int x = target.first();
    const int y = target.last();
    const int n = s.graph.order();
    const VertexSet removed(n, target.order);
    const VertexSet attach = (s.graph.neighbors(x) | s.graph.neighbors(y)) - removed;

    const VertexSet keep = VertexSet::full(n) - removed;
    restrict_to(s, keep);
    // Append the contracted vertex.
    const int m = s.graph.order();
    Graph g(m + 1);
    for (auto [a, b] : s.graph.edges()) g.add_edge(a, b);
    std::vector<int> new_id(static_cast<std::size_t>(n), -1);
    for (int old = 0, i = 0; old < n; ++old)
      if (keep.contains(old)) new_id[static_cast<std::size_t>(old)] = i++;
    for (int v : attach) g.add_edge(new_id[static_cast<std::size_t>(v)], m);
    if (s.graph.has_names()) {
      std::vector<std::string> names = s.graph.names();
      names.push_back("z" + std::to_string(s.trace.size()));
      g.set_names(std::move(names));
    }
    s.graph = std::move(g);
    VertexSet t(m + 1);
    for (int v : s.modulator) t.insert(v);
    s.modulator = std::move(t);
    s.origin.push_back(-1);
    record(s, "contract-component", target.order);
    return KernelOutcome::Reduced;
  }
  return KernelOutcome::Unchanged;
}

std::optional<int> rule_component_counts(const KernelState& s) {
  const Thresholds th = s.thresholds();
  std::vector<int> isolated;
  int nontrivial = 0;
  for (const RestComponent& rc : rest_components(s)) {
    if (rc.vertices.size() == 1) isolated.push_back(rc.vertices.first());
    else ++nontrivial;
  }
  if (nontrivial > 2 * s.modulator.size() && s.modulator.size() > 0)
    throw InternalError("more than 2|T| components of g - T with two or more vertices");
  if (BigInt(isolated.size()) < th.isolated) return std::nullopt;
  const std::vector<int> t = s.modulator.to_vector();
  VertexSet z(s.graph.order());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      mark_first(isolated, s.k + 2, [&](int x) { return s.graph.adjacent(t[i], x) && s.graph.adjacent(t[j], x); }, z);
  for (int w : isolated)
    if (!z.contains(w)) return w;
  return std::nullopt;
}

// ---------------------------------------------------------------- driver

KernelResult kernelize(const Graph& g, int k, ThresholdMode mode, std::int64_t occurrence_cap) {
  KernelResult result;
  result.state = KernelState(g, k, mode);
  KernelState& s = result.state;
  s.occurrence_cap = occurrence_cap;
  bool changed = false;
  while (true) {
    if (rule_remove_thread_components(s) == KernelOutcome::Reduced) changed = true;
    if (s.graph.order() == 0) break;
    if (compute_T(s) == KernelOutcome::No) {
      result.outcome = KernelOutcome::No;
      return result;
    }
    const KernelOutcome r2 = rule_one_vertex(s);
    if (r2 == KernelOutcome::No) {
      result.outcome = KernelOutcome::No;
      return result;
    }
    if (r2 == KernelOutcome::Reduced) {
      changed = true;
      continue;
    }
    if (auto w = find_irrelevant_in_big_block(s)) {
      delete_vertex(s, *w, "irrelevant-block-vertex");
      changed = true;
      continue;
    }
    if (contract_long_component(s) == KernelOutcome::Reduced) {
      changed = true;
      continue;
    }
    if (auto w = rule_component_counts(s)) {
      delete_vertex(s, *w, "irrelevant-isolated-vertex");
      changed = true;
      continue;
    }
    break;
  }
  result.outcome = changed ? KernelOutcome::Reduced : KernelOutcome::Unchanged;
  return result;
}

}  // namespace lrw1
