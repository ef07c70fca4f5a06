#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "lrw1/errors.hpp"
#include "lrw1/generators.hpp"
#include "lrw1/oracle.hpp"
#include "lrw1/split_tree.hpp"
#include "lrw1/thread.hpp"
#include "support.hpp"

using namespace lrw1;
using lrw1::testing::graph_from;
using lrw1::testing::random_connected_graph;

namespace {

// A split straight from the definition: every bipartition with both sides >= 2.
bool has_split_bruteforce(const Graph& h) {
  const int d = h.order();
  if (d < 4) return false;
  for (std::uint32_t mask = 1; mask + 1 < (1U << d); ++mask) {
    if (!(mask & 1U)) continue;  // side containing vertex 0
    const int size = __builtin_popcount(mask);
    if (size < 2 || d - size < 2) continue;
    std::vector<int> left_frontier, right_frontier;
    for (int u = 0; u < d; ++u)
      for (int v = 0; v < d; ++v)
        if (((mask >> u) & 1U) && !((mask >> v) & 1U) && h.adjacent(u, v)) {
          left_frontier.push_back(u);
          right_frontier.push_back(v);
        }
    bool complete = true;
    for (int u : left_frontier)
      for (int v : right_frontier) complete = complete && h.adjacent(u, v);
    if (complete) return true;
  }
  return false;
}

bool is_split_of(const Graph& h, const VertexSet& a) {
  const VertexSet b = a.complement();
  if (a.size() < 2 || b.size() < 2) return false;
  VertexSet fa(h.order()), fb(h.order());
  for (int u : a)
    if (h.neighbors(u).intersects(b)) fa.insert(u);
  for (int v : b)
    if (h.neighbors(v).intersects(a)) fb.insert(v);
  for (int u : fa)
    if (!fb.is_subset_of(h.neighbors(u))) return false;
  return true;
}

int internal_count(const GraphLabelledTree& t) { return static_cast<int>(t.internal_nodes().size()); }

void check_tree(const Graph& g) {
  const GraphLabelledTree t = build_reduced_split_tree(g);
  REQUIRE(accessibility_graph(t) == g);
  CHECK(is_reduced(t));
}

std::set<int> cut_vertex_set(const Graph& g) {
  const auto bc = blocks_and_cut_vertices(g);
  return {bc.cut_list.begin(), bc.cut_list.end()};
}

// Anchor structure of a decomposition of the connected graph g: every vertex
// sees an anchor, anchors are the cut vertices plus both ends, and each block
// is the graph blocks through its anchors plus pendants at its last anchor.
void check_anchor_structure(const Graph& g, const ThreadDecomposition& d) {
  const int n = g.order();
  VertexSet anchors(n, d.anchors);
  for (int v = 0; v < n; ++v)
    if (!anchors.contains(v)) CHECK(g.neighbors(v).intersects(anchors));

  std::set<int> expected = cut_vertex_set(g);
  for (int c : expected) CHECK(anchors.contains(c));
  CHECK(!expected.count(d.anchors.front()));
  CHECK(!expected.count(d.anchors.back()));
  expected.insert(d.anchors.front());
  expected.insert(d.anchors.back());
  CHECK(std::set<int>(d.anchors.begin(), d.anchors.end()) == expected);

  const auto bc = blocks_and_cut_vertices(g);
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const int a = d.anchors[i];
    const int b = d.anchors[i + 1];
    VertexSet want(n);
    for (const VertexSet& blk : bc.blocks)
      if (blk.contains(a) && blk.contains(b)) want |= blk;
    // Pendants hanging off the block's last anchor, except the final anchor itself.
    for (int x : g.neighbors(b))
      if (g.degree(x) == 1 && !anchors.contains(x)) want.insert(x);
    CHECK(VertexSet(n, d.blocks[i].order) == want);
  }
}

ThreadBlock block(std::vector<int> order, std::vector<Side> labels) { return {std::move(order), std::move(labels)}; }

}  // namespace

TEST_CASE("degenerate label graphs") {
  int c = -2;
  CHECK(is_degenerate_graph(complete_graph(4), &c));
  CHECK(c == -1);
  CHECK(is_degenerate_graph(star_graph(4), &c));
  CHECK(c == 0);
  CHECK(is_degenerate_graph(path_graph(3), &c));
  CHECK(c == 1);
  CHECK(!is_degenerate_graph(path_graph(4)));
  CHECK(!is_degenerate_graph(cycle_graph(5)));
}

TEST_CASE("split finding agrees with the definition") {
  CHECK(!find_split(cycle_graph(5)).has_value());
  CHECK(!has_split_bruteforce(cycle_graph(5)));
  for (int n = 4; n <= 7; ++n)
    for (const Graph& h : enumerate_connected_graphs(n)) {
      const auto s = find_split(h);
      REQUIRE(s.has_value() == has_split_bruteforce(h));
      if (s) CHECK(is_split_of(h, *s));
    }
}

TEST_CASE("split tree examples") {
  SUBCASE("star is one star node") {
    const GraphLabelledTree t = build_reduced_split_tree(star_graph(4));
    const auto internal = t.internal_nodes();
    REQUIRE(internal.size() == 1);
    const SplitNode& node = t.nodes[static_cast<std::size_t>(internal[0])];
    CHECK(node.kind == SplitNodeKind::Star);
    CHECK(node.adjacent.size() == 5);
    CHECK(t.nodes[static_cast<std::size_t>(node.adjacent[static_cast<std::size_t>(node.center)])].vertex == 0);
    CHECK(accessibility_graph(t) == star_graph(4));
  }
  SUBCASE("clique is one clique node") {
    const GraphLabelledTree t = build_reduced_split_tree(complete_graph(4));
    REQUIRE(internal_count(t) == 1);
    CHECK(t.nodes[static_cast<std::size_t>(t.internal_nodes()[0])].kind == SplitNodeKind::Clique);
  }
  SUBCASE("five-cycle is one prime node") {
    const GraphLabelledTree t = build_reduced_split_tree(cycle_graph(5));
    REQUIRE(internal_count(t) == 1);
    CHECK(t.nodes[static_cast<std::size_t>(t.internal_nodes()[0])].kind == SplitNodeKind::Prime);
    CHECK(accessibility_graph(t) == cycle_graph(5));
  }
  SUBCASE("path on four vertices is two stars") {
    const GraphLabelledTree t = build_reduced_split_tree(path_graph(4));
    CHECK(internal_count(t) == 2);
    CHECK(is_reduced(t));
  }
  SUBCASE("K2 is one clique node") {
    const GraphLabelledTree t = build_reduced_split_tree(complete_graph(2));
    REQUIRE(internal_count(t) == 1);
    CHECK(accessibility_graph(t) == complete_graph(2));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(build_reduced_split_tree(Graph(2)), NotConnected);
    CHECK_THROWS_AS(build_reduced_split_tree(Graph(1)), InputError);
  }
}

TEST_CASE("split tree round trip on every connected graph up to 8 vertices") {
  for (int n = 2; n <= 8; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) check_tree(g);
}

TEST_CASE("split tree round trip on random graphs") {
  std::mt19937_64 rng(20260101);
  for (int iter = 0; iter < 500; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 13);
    const double p = 0.05 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    check_tree(random_connected_graph(n, p, rng));
  }
}

TEST_CASE("thread recognition matches the width oracle") {
  CHECK(is_thread_graph(complete_graph(5)));
  CHECK(!is_thread_graph(cycle_graph(9)));
  CHECK(is_thread_graph(Graph(1)));
  CHECK(is_thread_graph(Graph(0)));
  CHECK(is_thread_graph(disjoint_union(path_graph(6), complete_graph(3))));
  CHECK(!is_thread_graph(disjoint_union(path_graph(2), cycle_graph(5))));
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : enumerate_connected_graphs(n))
      REQUIRE(is_thread_graph(g) == (linear_rankwidth_exact(g) <= 1));
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 9 + static_cast<int>(rng() % 6);
    const Graph g = random_connected_graph(n, 0.08 + 0.04 * static_cast<double>(iter % 5), rng);
    REQUIRE(is_thread_graph(g) == (linear_rankwidth_exact(g) <= 1));
  }
}

TEST_CASE("thread block validation") {
  CHECK(validate_thread_block(block({0, 1}, {Side::R, Side::L}), true));
  CHECK(!validate_thread_block(block({0, 1, 2}, {Side::R, Side::L, Side::L}), true));
  CHECK(validate_thread_block(block({0, 1, 2}, {Side::R, Side::L, Side::L}), false));
  CHECK(!validate_thread_block(block({0, 1}, {Side::L, Side::L}), false));
  CHECK(!validate_thread_block(block({0, 0}, {Side::R, Side::L}), false));
  CHECK(!validate_thread_block(block({0}, {Side::R}), false));
  CHECK(!validate_thread_block(block({0, 1, 2}, {Side::R, Side::LR}), false));

  // Condition (2): edges from earlier R to later L, nothing else.
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const auto gen = gen_thread_graph(1, {2, 9}, rng());
    const ThreadBlock& b = gen.decomposition.blocks[0];
    for (std::size_t i = 0; i < b.order.size(); ++i)
      for (std::size_t j = i + 1; j < b.order.size(); ++j)
        CHECK(gen.graph.adjacent(b.order[i], b.order[j]) == (has_right(b.labels[i]) && has_left(b.labels[j])));
  }
}

TEST_CASE("merge") {
  SUBCASE("one block is itself") {
    const ThreadBlock b = block({0, 2, 1}, {Side::R, Side::LR, Side::L});
    CHECK(merge(3, ThreadDecomposition{{0, 1}, {b}}) == complete_graph(3));
  }
  SUBCASE("cycle of single edges") {
    for (int h = 3; h <= 12; ++h) {
      NecklaceDecomposition d;
      for (int i = 0; i < h; ++i) {
        d.anchors.push_back(i);
        d.blocks.push_back(block({i, (i + 1) % h}, {Side::R, Side::L}));
      }
      CHECK(merge(h, d) == cycle_graph(h));
    }
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(merge(4, ThreadDecomposition{{0, 1, 2}, {block({0, 3, 1}, {Side::R, Side::LR, Side::L}),
                                                             block({1, 3, 2}, {Side::R, Side::LR, Side::L})}}),
                    NotMergeable);
    CHECK_THROWS_AS(merge(3, ThreadDecomposition{{0, 1}, {block({0, 2}, {Side::R, Side::L})}}), NotMergeable);
    CHECK_THROWS_AS(merge(3, NecklaceDecomposition{{0, 1}, {block({0, 1}, {Side::R, Side::L}), block({1, 0}, {Side::R, Side::L})}}),
                    NotMergeable);
    CHECK_THROWS_AS(merge(3, ThreadDecomposition{{0, 1, 2}, {block({0, 2, 1}, {Side::R, Side::LR, Side::L}),
                                                             block({1, 2}, {Side::R, Side::L})}}),
                    NotMergeable);
  }
}

TEST_CASE("canonical decomposition examples") {
  SUBCASE("path on four vertices") {
    const ThreadDecomposition d = canonical_thread_decomposition(path_graph(4));
    CHECK(d.anchors == std::vector<int>{0, 1, 2, 3});
    CHECK(d.blocks.size() == 3);
    for (const auto& b : d.blocks) CHECK(b.size() == 2);
  }
  SUBCASE("path on three vertices") {
    const Graph p3 = graph_from(3, {{0, 2}, {2, 1}});
    const ThreadDecomposition d = canonical_thread_decomposition(p3);
    CHECK(d.anchors == std::vector<int>{0, 2, 1});
    CHECK(merge(3, d) == p3);
  }
  SUBCASE("claw") {
    const ThreadDecomposition d = canonical_thread_decomposition(star_graph(3));
    REQUIRE(d.blocks.size() == 2);
    CHECK(d.anchors == std::vector<int>{1, 0, 3});
    CHECK(d.blocks[0].order == std::vector<int>{1, 2, 0});
    CHECK(d.blocks[1].order == std::vector<int>{0, 3});
    CHECK(merge(4, d) == star_graph(3));
    for (const auto& b : d.blocks) CHECK(validate_thread_block(b, true));
  }
  SUBCASE("clique") {
    const ThreadDecomposition d = canonical_thread_decomposition(complete_graph(5));
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].labels == std::vector<Side>{Side::R, Side::LR, Side::LR, Side::LR, Side::L});
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(canonical_thread_decomposition(cycle_graph(5)), NotThreadGraph);
    CHECK_THROWS_AS(canonical_thread_decomposition(Graph(3)), NotConnected);
  }
  SUBCASE("per component") {
    const auto ds = thread_decompositions(disjoint_union(Graph(1), path_graph(3)));
    REQUIRE(ds.size() == 2);
    CHECK(ds[0].anchors == std::vector<int>{0});
    CHECK(ds[1].anchors.size() == 3);
  }
}

TEST_CASE("decomposition round trip on every thread graph up to 8 vertices") {
  for (int n = 2; n <= 8; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      if (!is_thread_graph(g)) continue;
      const ThreadDecomposition d = canonical_thread_decomposition(g);
      REQUIRE(merge(n, d) == g);
      for (const auto& b : d.blocks) CHECK(validate_thread_block(b, true));
      check_anchor_structure(g, d);
    }
}

TEST_CASE("generated thread graphs") {
  CHECK(gen_thread_graph(1, {2, 2}, 9).graph == complete_graph(2));
  CHECK(gen_thread_graph(3, {2, 6}, 11).graph == gen_thread_graph(3, {2, 6}, 11).graph);
  CHECK_THROWS_AS(gen_thread_graph(0, {2, 3}, 1), InputError);
  CHECK_THROWS_AS(gen_thread_graph(2, {1, 3}, 1), InputError);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int blocks = 1 + static_cast<int>(seed % 6);
    const auto gen = gen_thread_graph(blocks, {2, 5}, seed);
    const Graph& g = gen.graph;
    CHECK(gen.decomposition.anchors.size() == static_cast<std::size_t>(blocks + 1));
    CHECK(merge(g.order(), gen.decomposition) == g);
    for (const auto& b : gen.decomposition.blocks) CHECK(validate_thread_block(b, true));
    REQUIRE(is_thread_graph(g));
    const ThreadDecomposition d = canonical_thread_decomposition(g);
    REQUIRE(merge(g.order(), d) == g);
    for (const auto& b : d.blocks) CHECK(validate_thread_block(b, true));
    check_anchor_structure(g, d);
    check_tree(g);
  }
}

TEST_CASE("generated necklaces") {
  CHECK(gen_necklace(9, {2, 2}, 3).graph == permute(cycle_graph(9), gen_necklace(9, {2, 2}, 3).decomposition.anchors));
  CHECK_THROWS_AS(gen_necklace(2, {2, 3}, 1), InputError);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto gen = gen_necklace(3 + static_cast<int>(seed % 10), {2, 4}, seed);
    CHECK(merge(gen.graph.order(), gen.decomposition) == gen.graph);
    CHECK(is_connected(gen.graph));
    for (int a : gen.decomposition.anchors) CHECK(is_thread_graph(delete_vertices(gen.graph, VertexSet(gen.graph.order(), {a})).graph));
  }
}

TEST_CASE("vertex cover and its reduction") {
  CHECK(vertex_cover_bruteforce(complete_graph(3), 3)->size() == 2);
  CHECK(vertex_cover_bruteforce(cycle_graph(5), 5)->size() == 3);
  CHECK(!vertex_cover_bruteforce(cycle_graph(5), 2).has_value());
  CHECK(vertex_cover_bruteforce(Graph(4), 0)->empty());
  CHECK_THROWS_AS(vertex_cover_bruteforce(Graph(21), 1), ResourceLimit);

  const Graph k2 = vc_reduction(complete_graph(2));
  CHECK(k2.order() == 6);
  CHECK(min_deletion_set_bruteforce(k2, 6)->size() == 1);
  const Graph k3 = vc_reduction(complete_graph(3));
  CHECK(k3.order() == 12);
  CHECK(min_deletion_set_bruteforce(k3, 12)->size() == 2);
  const Graph flat = vc_reduction(Graph(3));
  CHECK(flat.size() == 3);
  CHECK(min_deletion_set_bruteforce(flat, 0)->empty());
}

TEST_CASE("planted instances") {
  const auto zero = gen_planted(PlantedBase::Thread, 3, {2, 4}, 0, 0.5, 4);
  CHECK(is_thread_graph(zero.graph));
  CHECK(zero.planted.empty());
  CHECK(gen_planted(PlantedBase::Necklace, 9, {2, 3}, 2, 0.3, 8).graph ==
        gen_planted(PlantedBase::Necklace, 9, {2, 3}, 2, 0.3, 8).graph);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = gen_planted(PlantedBase::Thread, 3, {2, 3}, 2, 0.4, seed);
    CHECK(inst.budget == 2);
    CHECK(is_thread_graph(delete_vertices(inst.graph, inst.planted).graph));
    if (inst.graph.order() <= 14) CHECK(min_deletion_set_bruteforce(inst.graph, 2).has_value());
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = gen_planted(PlantedBase::Necklace, 9, {2, 2}, 2, 0.4, seed);
    CHECK(inst.budget == 3);
    CHECK(min_deletion_set_bruteforce(inst.graph, inst.budget).has_value());
  }
}
