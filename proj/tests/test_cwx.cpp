#include <random>
#include <set>

#include "doctest.h"
#include "lrw1/cwx.hpp"
#include "lrw1/errors.hpp"
#include "lrw1/obstructions.hpp"
#include "lrw1/oracle.hpp"
#include "lrw1/solver.hpp"
#include "lrw1/split_tree.hpp"
#include "support.hpp"

using namespace lrw1;
using lrw1::testing::graph_from;

namespace {

const char* kFiveCycle =
    "join(1,3, un( ren(3,2, join(2,3, un( join(1,2, un(add(1,a),add(2,b))),"
    " join(1,3, un(add(3,c),add(1,d))) ))), add(3,e)))";

bool is_induced_copy(const Graph& host, const Graph& pattern, const std::vector<int>& mapping) {
  if (static_cast<int>(mapping.size()) != pattern.order()) return false;
  for (int i = 0; i < pattern.order(); ++i)
    for (int j = i + 1; j < pattern.order(); ++j) {
      const int u = mapping[static_cast<std::size_t>(i)];
      const int v = mapping[static_cast<std::size_t>(j)];
      if (u == v || u < 0 || v < 0) return false;
      if (host.adjacent(u, v) != pattern.adjacent(i, j)) return false;
    }
  return true;
}

std::set<std::pair<std::string, std::string>> named_edges(const Graph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.edges()) out.insert(std::minmax(g.name(u), g.name(v)));
  return out;
}

}  // namespace

TEST_CASE("parsing") {
  const KExpression one = parse_kexpression("add(1,a)");
  REQUIRE(one.nodes.size() == 1);
  CHECK(one.nodes[0].kind == ExprKind::Intro);
  CHECK(one.nodes[0].name == "a");

  const KExpression c5 = parse_kexpression(kFiveCycle);
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.max_label() == 3);
  CHECK(to_string(parse_kexpression(to_string(c5))) == to_string(c5));
  CHECK(parse_kexpression("  # comment\n un( add(1, x) ,\n add(2,y)) # tail").vertex_count() == 2);

  CHECK_THROWS_AS(parse_kexpression("join(2,2,add(1,a))"), ParseError);
  CHECK_THROWS_AS(parse_kexpression("un(add(1,a),add(2,a))"), ParseError);
  CHECK_THROWS_AS(parse_kexpression("add(4,a)", 3), ParseError);
  CHECK_THROWS_AS(parse_kexpression("add(0,a)"), ParseError);
  CHECK_THROWS_AS(parse_kexpression("add(1,a) extra"), ParseError);
  CHECK_THROWS_AS(parse_kexpression(""), ParseError);
  try {
    parse_kexpression("un(add(1,a),\n  mul(1,b))");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.line() == 2);
    CHECK(err.column() == 3);
  }
}

TEST_CASE("evaluation") {
  const EvaluatedExpression c5 = eval_kexpression(parse_kexpression(kFiveCycle));
  CHECK(c5.graph.order() == 5);
  const std::set<std::pair<std::string, std::string>> want{{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"a", "e"}};
  CHECK(named_edges(c5.graph) == want);

  CHECK(eval_kexpression(parse_kexpression("un(add(1,x),add(1,y))")).graph == Graph(2));
  CHECK(eval_kexpression(parse_kexpression("join(1,2,un(add(1,x),add(2,y)))")).graph == complete_graph(2));
  CHECK(eval_kexpression(path_kexpression(7)).graph == path_graph(7));
  CHECK(eval_kexpression(KExpression{}).graph.order() == 0);
}

TEST_CASE("induced subgraph search by dynamic programming") {
  const KExpression c5 = parse_kexpression(kFiveCycle);
  const Graph host = eval_kexpression(c5).graph;
  const auto p4 = find_induced_subgraph_cwx(c5, path_graph(4));
  REQUIRE(p4.has_value());
  CHECK(is_induced_copy(host, path_graph(4), *p4));
  CHECK(!find_induced_subgraph_cwx(c5, complete_graph(3)).has_value());
  CHECK(find_induced_subgraph_cwx(c5, cycle_graph(5)).has_value());
  CHECK(!find_induced_subgraph_cwx(c5, house_graph()).has_value());
  CHECK_THROWS_AS(find_induced_subgraph_cwx(c5, path_graph(9)), InputError);

  // The pattern's two edges sit on either side of a union; the join above adds
  // the edge that breaks inducedness.
  const KExpression straddle =
      parse_kexpression("join(2,3, un(join(1,2,un(add(1,a),add(2,b))), join(3,4,un(add(3,c),add(4,d)))))");
  const Graph two_edges = graph_from(4, {{0, 1}, {2, 3}});
  CHECK(!find_induced_subgraph_cwx(straddle, two_edges).has_value());
  CHECK(find_induced_subgraph_cwx(straddle, path_graph(4)).has_value());
  CHECK(find_induced_subgraph_cwx(parse_kexpression("un(join(1,2,un(add(1,a),add(2,b))), join(3,4,un(add(3,c),add(4,d))))"),
                                  two_edges)
            .has_value());
}

TEST_CASE("dynamic programming agrees with backtracking on random expressions") {
  std::mt19937_64 rng(99);
  int found = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 5 + static_cast<int>(rng() % 8);
    const int labels = 2 + static_cast<int>(rng() % 3);
    const KExpression e = random_kexpression(n, labels, rng());
    const Graph g = eval_kexpression(e).graph;
    for (const CatalogEntry& entry : obstruction_catalog()) {
      const auto dp = find_induced_subgraph_cwx(e, entry.graph);
      REQUIRE(dp.has_value() == find_induced_copy(g, entry.graph).has_value());
      if (dp) {
        ++found;
        CHECK(is_induced_copy(g, entry.graph, *dp));
      }
    }
  }
  CHECK(found > 0);
}

TEST_CASE("vertex deletion inside expressions") {
  const KExpression c5 = parse_kexpression(kFiveCycle);
  const Graph p4 = eval_kexpression(delete_vertex_in_expression(c5, "e")).graph;
  const std::set<std::pair<std::string, std::string>> want{{"a", "b"}, {"b", "c"}, {"c", "d"}};
  CHECK(named_edges(p4) == want);
  CHECK(delete_vertex_in_expression(parse_kexpression("ren(1,2,add(1,a))"), "a").empty());
  CHECK_THROWS_AS(delete_vertex_in_expression(c5, "z"), UnknownVertex);

  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const KExpression e = random_kexpression(2 + static_cast<int>(rng() % 10), 3, rng());
    const Graph g = eval_kexpression(e).graph;
    const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(g.order()));
    const Graph after = eval_kexpression(delete_vertex_in_expression(e, g.name(v))).graph;
    const Graph want_graph = delete_vertices(g, VertexSet(g.order(), {v})).graph;
    CHECK(after == want_graph);
  }
}

TEST_CASE("expression-driven branching") {
  const auto c5 = solve_branching_cwx(parse_kexpression(kFiveCycle), 1);
  REQUIRE(c5.has_value());
  CHECK(c5->deletion_set.size() == 1);
  CHECK(!solve_branching_cwx(parse_kexpression(kFiveCycle), 0).has_value());
  const auto path = solve_branching_cwx(path_kexpression(8), 0);
  REQUIRE(path.has_value());
  CHECK(path->deletion_set.empty());

  std::mt19937_64 rng(123);
  for (int iter = 0; iter < 100; ++iter) {
    const KExpression e = random_kexpression(5 + static_cast<int>(rng() % 7), 2 + static_cast<int>(rng() % 3), rng());
    const Graph g = eval_kexpression(e).graph;
    const int k = static_cast<int>(rng() % 4);
    const auto a = solve_branching_cwx(e, k);
    const auto b = solve_branching(g, k);
    REQUIRE(a.has_value() == b.has_value());
    if (a) {
      CHECK(a->deletion_set.size() == b->deletion_set.size());
      CHECK(is_thread_graph(delete_vertices(g, a->deletion_set).graph));
    }
  }
}
