#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "lrw1/errors.hpp"
#include "lrw1/oracle.hpp"
#include "support.hpp"

using namespace lrw1;

namespace {

// Linear rankwidth straight from the definition: every ordering, every prefix.
int width_by_orderings(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int best = n;
  do {
    int worst = 0;
    VertexSet prefix(n);
    for (int i = 0; i + 1 < n; ++i) {
      prefix.insert(perm[static_cast<std::size_t>(i)]);
      worst = std::max(worst, cut_rank(g, prefix));
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("exact width examples") {
  CHECK(linear_rankwidth_exact(complete_graph(5)) == 1);
  CHECK(linear_rankwidth_exact(Graph(1)) == 0);
  CHECK(linear_rankwidth_exact(Graph(0)) == 0);
  CHECK(linear_rankwidth_exact(cycle_graph(5)) == 2);
  CHECK(width_by_orderings(cycle_graph(5)) == 2);
  CHECK_THROWS_AS(linear_rankwidth_exact(Graph(21)), ResourceLimit);
}

TEST_CASE("subset recurrence agrees with ordering enumeration") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = lrw1::testing::random_graph(n, 0.5, rng);
    const int w = linear_rankwidth_exact(g);
    CHECK(w == width_by_orderings(g));
    CHECK((w <= 1) == linear_rankwidth_at_most_one(g));
  }
}

TEST_CASE("connected graph counts") {
  // Known counts of connected unlabelled graphs.
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    const auto& graphs = enumerate_connected_graphs(n);
    CHECK(graphs.size() == expected[static_cast<std::size_t>(n - 1)]);
    std::set<std::string> forms;
    for (const Graph& g : graphs) {
      CHECK(is_connected(g));
      forms.insert(canonical_form_small(g));
    }
    CHECK(forms.size() == graphs.size());
  }
  CHECK_THROWS_AS(enumerate_connected_graphs(9), ResourceLimit);
}

TEST_CASE("enumeration at 5 vertices matches labelled brute force") {
  // Orbit classes among all 1024 labelled graphs on 5 vertices, filtered to connected.
  std::set<std::string> forms;
  std::vector<Edge> all;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) all.emplace_back(u, v);
  for (int mask = 0; mask < 1024; ++mask) {
    Graph g(5);
    for (int i = 0; i < 10; ++i)
      if (mask >> i & 1) g.add_edge(all[static_cast<std::size_t>(i)].first, all[static_cast<std::size_t>(i)].second);
    if (is_connected(g)) forms.insert(canonical_form_small(g));
  }
  CHECK(forms.size() == 21);
}

TEST_CASE("width never grows under vertex deletion") {
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const int w = linear_rankwidth_exact(g);
      for (int v = 0; v < n; ++v) CHECK(linear_rankwidth_exact(delete_vertices(g, VertexSet(n, {v})).graph) <= w);
    }
}

TEST_CASE("brute-force deletion examples") {
  const Graph thread = complete_graph(4);
  auto s = min_deletion_set_bruteforce(thread, 0);
  REQUIRE(s.has_value());
  CHECK(s->empty());

  s = min_deletion_set_bruteforce(cycle_graph(9), 1);
  REQUIRE(s.has_value());
  CHECK(s->size() == 1);

  const Graph two = disjoint_union(cycle_graph(9), cycle_graph(9));
  CHECK_FALSE(min_deletion_set_bruteforce(two, 1).has_value());
  s = min_deletion_set_bruteforce(two, 2);
  REQUIRE(s.has_value());
  CHECK(*s == VertexSet(18, {0, 9}));  // lexicographically first pair
  CHECK_THROWS_AS(min_deletion_set_bruteforce(Graph(19), 1), ResourceLimit);
}

TEST_CASE("brute-force deletion is minimum") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const Graph g = lrw1::testing::random_graph(n, 0.4, rng);
    const auto s = min_deletion_set_bruteforce(g, n);
    REQUIRE(s.has_value());
    CHECK(linear_rankwidth_exact(delete_vertices(g, *s).graph) <= 1);
    if (s->size() > 0) CHECK_FALSE(min_deletion_set_bruteforce(g, s->size() - 1).has_value());
  }
}

TEST_CASE("obstruction catalog") {
  const auto catalog = derive_obstruction_catalog();
  CHECK(catalog.size() == 21);
  std::set<std::string> names;
  std::set<std::string> notes;
  for (const auto& e : catalog) {
    CHECK(is_connected(e.graph));
    CHECK(e.graph.order() <= 8);
    CHECK(linear_rankwidth_exact(e.graph) == 2);
    for (int v = 0; v < e.graph.order(); ++v)
      CHECK(linear_rankwidth_exact(delete_vertices(e.graph, VertexSet(e.graph.order(), {v})).graph) <= 1);
    if (!e.name.empty()) names.insert(e.name);
    for (const auto& a : e.annotations) notes.insert(a);
  }
  CHECK(names == std::set<std::string>{"house", "gem", "domino", "C5", "C6", "C7", "C8"});
  // The six bridged-path shapes and the four spiders are all minimal obstructions.
  CHECK(notes.size() == 10);
  for (int h = 3; h <= 4; ++h) {
    const std::string form = canonical_form_small(cycle_graph(h));
    for (const auto& e : catalog) CHECK(e.form != form);
  }
  for (std::size_t i = 1; i < catalog.size(); ++i) {
    const auto& a = catalog[i - 1];
    const auto& b = catalog[i];
    CHECK(std::make_pair(a.graph.order(), a.form) < std::make_pair(b.graph.order(), b.form));
    CHECK(b.id == static_cast<int>(i));
  }
}
