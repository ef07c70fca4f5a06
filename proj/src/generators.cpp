#include "lrw1/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "lrw1/errors.hpp"

namespace lrw1 {
namespace {

void check_sizes(SizeRange sizes) {
  if (sizes.min < 2 || sizes.max < sizes.min) throw InputError("block sizes must satisfy 2 <= min <= max");
}

// Labels for a block of `size` vertices satisfying conditions (1) to (3).
std::vector<Side> random_labels(int size, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  constexpr Side choices[] = {Side::L, Side::R, Side::LR};
  std::vector<Side> labels(static_cast<std::size_t>(size));
  for (auto& s : labels) s = choices[pick(rng)];
  labels.front() = Side::R;
  labels.back() = Side::L;
  if (size > 2 && labels[1] == Side::L) labels[1] = pick(rng) == 0 ? Side::R : Side::LR;
  return labels;
}

// Anchors get ids 0..h-1, middle vertices follow in block order.
struct RawBlocks {
  int order = 0;
  std::vector<int> anchors;
  std::vector<ThreadBlock> blocks;
};

RawBlocks raw_blocks(int anchors, int block_count, SizeRange sizes, std::mt19937_64& rng) {
  RawBlocks raw;
  raw.anchors.resize(static_cast<std::size_t>(anchors));
  std::iota(raw.anchors.begin(), raw.anchors.end(), 0);
  raw.order = anchors;
  std::uniform_int_distribution<int> size_dist(sizes.min, sizes.max);
  for (int i = 0; i < block_count; ++i) {
    const int size = size_dist(rng);
    ThreadBlock b;
    b.labels = random_labels(size, rng);
    b.order.push_back(i);
    for (int j = 1; j + 1 < size; ++j) b.order.push_back(raw.order++);
    b.order.push_back((i + 1) % anchors);
    raw.blocks.push_back(std::move(b));
  }
  return raw;
}

void relabel(std::vector<int>& ids, const std::vector<int>& perm) {
  for (int& v : ids) v = perm[static_cast<std::size_t>(v)];
}

std::vector<int> shuffled_identity(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

GeneratedThread gen_thread_graph(int blocks, SizeRange sizes, std::uint64_t seed) {
  if (blocks < 1) throw InputError("a thread graph needs at least one block");
  check_sizes(sizes);
  std::mt19937_64 rng(seed);
  const RawBlocks raw = raw_blocks(blocks + 1, blocks, sizes, rng);
  const std::vector<int> perm = shuffled_identity(raw.order, rng);
  GeneratedThread out;
  out.decomposition.anchors = raw.anchors;
  out.decomposition.blocks = raw.blocks;
  relabel(out.decomposition.anchors, perm);
  for (auto& b : out.decomposition.blocks) relabel(b.order, perm);
  out.graph = merge(raw.order, out.decomposition);
  return out;
}

GeneratedNecklace gen_necklace(int cycle_len, SizeRange sizes, std::uint64_t seed) {
  if (cycle_len < 3) throw InputError("a necklace needs a cycle of length at least 3");
  check_sizes(sizes);
  std::mt19937_64 rng(seed);
  const RawBlocks raw = raw_blocks(cycle_len, cycle_len, sizes, rng);
  const std::vector<int> perm = shuffled_identity(raw.order, rng);
  GeneratedNecklace out;
  out.decomposition.anchors = raw.anchors;
  out.decomposition.blocks = raw.blocks;
  relabel(out.decomposition.anchors, perm);
  for (auto& b : out.decomposition.blocks) relabel(b.order, perm);
  out.graph = merge(raw.order, out.decomposition);
  return out;
}

PlantedInstance gen_planted(PlantedBase base, int base_size, SizeRange sizes, int extra, double edge_prob,
                            std::uint64_t seed) {
  if (extra < 0) throw InputError("number of extra vertices must be non-negative");
  if (edge_prob < 0.0 || edge_prob > 1.0) throw InputError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  const std::uint64_t base_seed = rng();
  const Graph core = base == PlantedBase::Thread ? gen_thread_graph(base_size, sizes, base_seed).graph
                                                 : gen_necklace(base_size, sizes, base_seed).graph;
  const int n0 = core.order();
  const int n = n0 + extra;
  Graph g(n);
  for (auto [u, v] : core.edges()) g.add_edge(u, v);
  std::bernoulli_distribution coin(edge_prob);
  for (int x = n0; x < n; ++x)
    for (int v = 0; v < x; ++v)
      if (coin(rng)) g.add_edge(v, x);
  const std::vector<int> perm = shuffled_identity(n, rng);
  PlantedInstance out;
  out.graph = permute(g, perm);
  out.budget = extra + (base == PlantedBase::Necklace ? 1 : 0);  // a necklace needs one more deletion
  out.planted = VertexSet(n);
  for (int x = n0; x < n; ++x) out.planted.insert(perm[static_cast<std::size_t>(x)]);
  return out;
}

Graph vc_reduction(const Graph& g) {
  const int n = g.order();
  const std::vector<Edge> edges = g.edges();
  Graph out(2 * n + 2 * static_cast<int>(edges.size()));
  for (int v = 0; v < n; ++v) out.add_edge(v, n + v);
  int mid = 2 * n;
  for (auto [u, v] : edges)
    for (int rep = 0; rep < 2; ++rep, ++mid) {
      out.add_edge(u, mid);
      out.add_edge(mid, v);
    }
  return out;
}

std::optional<VertexSet> vertex_cover_bruteforce(const Graph& g, int k) {
  constexpr int kMaxOrder = 20;
  const int n = g.order();
  if (n > kMaxOrder) throw ResourceLimit("vertex cover brute force is limited to 20 vertices");
  const std::vector<Edge> edges = g.edges();
  std::vector<std::uint32_t> edge_masks;
  for (auto [u, v] : edges) edge_masks.push_back((1U << u) | (1U << v));
  auto covers = [&](std::uint32_t mask) {
    return std::all_of(edge_masks.begin(), edge_masks.end(), [&](std::uint32_t e) { return (e & mask) != 0; });
  };
  for (int size = 0; size <= std::min(k, n); ++size) {
    // Combinations in lexicographic order of their sorted members.
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint32_t mask = 0;
      for (int v : pick) mask |= 1U << v;
      if (covers(mask)) {
        VertexSet s(n);
        for (int v : pick) s.insert(v);
        return s;
      }
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace lrw1
