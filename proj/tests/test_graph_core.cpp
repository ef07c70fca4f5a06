#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "lrw1/errors.hpp"
#include "lrw1/graph.hpp"
#include "support.hpp"

using namespace lrw1;
using lrw1::testing::graph_from;

namespace {

// Independent reference: smallest adjacency string over all n! orderings.
std::string brute_canonical(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int i = 0; i < g.order(); ++i)
      for (int j = i + 1; j < g.order(); ++j) s.push_back(g.adjacent(perm[i], perm[j]) ? '1' : '0');
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Rank over GF(2) by dense elimination on a bool matrix.
int brute_cut_rank(const Graph& g, const VertexSet& s) {
  std::vector<std::vector<int>> rows;
  for (int u : s) {
    std::vector<int> row;
    for (int v = 0; v < g.order(); ++v)
      if (!s.contains(v)) row.push_back(g.adjacent(u, v) ? 1 : 0);
    rows.push_back(row);
  }
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c]) piv = r;
    if (piv == -1) continue;
    std::swap(rows[piv], rows[rank]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (r != rank && rows[r][c])
        for (int k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(g.size() == 1);
  CHECK(g.adjacent(1, 0));
  CHECK_THROWS_AS(g.add_edge(2, 2), InputError);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}});
  CHECK(g.name(2) == "3");
  g.remove_edge(0, 1);
  CHECK(g.size() == 0);
}

TEST_CASE("cut rank examples") {
  const Graph k5 = complete_graph(5);
  const Graph c5 = cycle_graph(5);
  CHECK(cut_rank(k5, VertexSet(5)) == 0);
  CHECK(cut_rank(k5, VertexSet(5, {0, 1})) == 1);
  CHECK(cut_rank(c5, VertexSet(5, {0, 1})) == brute_cut_rank(c5, VertexSet(5, {0, 1})));
  CHECK(cut_rank(c5, VertexSet(5, {0, 1})) == 2);
  CHECK(cut_rank(c5, VertexSet::full(5)) == 0);
}

TEST_CASE("cut rank is symmetric, bounded, and matches dense elimination") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = lrw1::testing::random_graph(n, 0.45, rng);
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
      if (rng() & 1) s.insert(v);
    const int r = cut_rank(g, s);
    CHECK(r == cut_rank(g, s.complement()));
    CHECK(r <= std::min(s.size(), n - s.size()));
    CHECK(r == brute_cut_rank(g, s));
  }
}

TEST_CASE("blocks and cut vertices examples") {
  {
    const auto bc = blocks_and_cut_vertices(path_graph(4));
    CHECK(bc.cut_vertices == VertexSet(4, {1, 2}));
    CHECK(bc.blocks.size() == 3);
  }
  {
    const auto bc = blocks_and_cut_vertices(cycle_graph(5));
    CHECK(bc.cut_vertices.empty());
    CHECK(bc.blocks.size() == 1);
  }
  {
    const Graph bowtie = graph_from(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    const auto bc = blocks_and_cut_vertices(bowtie);
    CHECK(bc.cut_vertices == VertexSet(5, {2}));
    CHECK(bc.blocks.size() == 2);
    CHECK(bc.tree.size() == 3);
  }
}

TEST_CASE("block structure invariants on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const Graph g = lrw1::testing::random_graph(n, 0.2, rng);
    const auto bc = blocks_and_cut_vertices(g);
    for (auto [u, v] : g.edges()) {
      int holders = 0;
      for (const auto& b : bc.blocks)
        if (b.contains(u) && b.contains(v)) ++holders;
      CHECK(holders == 1);
    }
    const auto base = connected_components(g).size();
    for (int v = 0; v < n; ++v) {
      int in_blocks = 0;
      for (const auto& b : bc.blocks)
        if (b.contains(v)) ++in_blocks;
      const bool cut = bc.cut_vertices.contains(v);
      CHECK(cut == (in_blocks >= 2));
      const auto after = connected_components(delete_vertices(g, VertexSet(n, {v})).graph).size();
      // Removing a cut vertex splits its component; removing any other vertex
      // never increases the count.
      if (cut)
        CHECK(after > base);
      else
        CHECK(after <= base);
    }
  }
}

TEST_CASE("induced subgraphs, deletion, components") {
  const Graph c5 = cycle_graph(5);
  CHECK(induced_subgraph(c5, VertexSet(5, {0, 1, 2})) == path_graph(3));
  CHECK(induced_subgraph(complete_graph(4), VertexSet(4, {1, 3})) == complete_graph(2));
  const Graph u = disjoint_union(cycle_graph(9), complete_graph(2));
  CHECK(connected_components(u).size() == 2);
  CHECK_FALSE(is_connected(u));

  const Subgraph sub = delete_vertices(c5, VertexSet(5, {2}));
  CHECK(sub.graph.order() == 4);
  CHECK(sub.to_original == std::vector<int>{0, 1, 3, 4});
  CHECK(sub.from_original[2] == -1);
  CHECK(sub.from_original[3] == 2);
  CHECK(sub.lift(VertexSet(4, {2})) == VertexSet(5, {3}));
}

TEST_CASE("canonical form examples") {
  const Graph p3 = path_graph(3);
  const std::vector<int> perm{1, 0, 2};
  CHECK(canonical_form_small(p3) == canonical_form_small(permute(p3, perm)));
  CHECK(canonical_form_small(cycle_graph(4)) != canonical_form_small(disjoint_union(complete_graph(3), Graph(1))));
  CHECK_THROWS_AS(canonical_form_small(Graph(11)), ResourceLimit);
}

TEST_CASE("the 64 labelled graphs on 4 vertices fall into 11 classes") {
  std::set<std::string> forms;
  std::map<std::string, std::string> brute_to_form;
  const std::vector<Edge> all{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int mask = 0; mask < 64; ++mask) {
    Graph g(4);
    for (int i = 0; i < 6; ++i)
      if (mask >> i & 1) g.add_edge(all[i].first, all[i].second);
    const std::string form = canonical_form_small(g);
    forms.insert(form);
    auto [it, fresh] = brute_to_form.emplace(brute_canonical(g), form);
    CHECK(it->second == form);
  }
  CHECK(forms.size() == 11);
  CHECK(brute_to_form.size() == 11);
}

TEST_CASE("canonical form is permutation invariant and agrees with brute force") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = lrw1::testing::random_graph(n, 0.5, rng);
    const auto perm = lrw1::testing::random_permutation(n, rng);
    const Graph h = permute(g, perm);
    CHECK(canonical_form_small(g) == canonical_form_small(h));
    // The labelling order reproduces the form.
    const auto lab = canonical_labelling_small(g);
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(lab.order[static_cast<std::size_t>(i)])] = i;
    CHECK(canonical_form_small(permute(g, inv)) == lab.form);
  }
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = lrw1::testing::random_graph(n, 0.5, rng);
    const Graph h = lrw1::testing::random_graph(n, 0.5, rng);
    CHECK((brute_canonical(g) == brute_canonical(h)) == (canonical_form_small(g) == canonical_form_small(h)));
  }
}

TEST_CASE("hex encoding") { CHECK(to_hex(std::string("\x01\xab", 2)) == "01ab"); }
