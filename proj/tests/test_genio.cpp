#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include <unistd.h>

#include "lrw1/errors.hpp"
#include "lrw1/generators.hpp"
#include "lrw1/io.hpp"
#include "lrw1/oracle.hpp"
#include "lrw1/solver.hpp"
#include "lrw1/split_tree.hpp"
#include "support.hpp"

using namespace lrw1;

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_dimacs(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lrw1_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("reading the text format") {
  const Graph p3 = parse_dimacs("c a path\np lrw1 3 2\ne 1 2\ne 2 3\n");
  CHECK(p3 == path_graph(3));
  CHECK_FALSE(p3.has_names());

  const Graph flat = parse_dimacs("p lrw1 4 0\n");
  CHECK(flat == Graph(4));

  std::vector<std::string> warnings;
  const Graph dup = parse_dimacs("p lrw1 3 3\ne 1 2\ne 2 1\ne 2 3\n", &warnings);
  CHECK(dup == path_graph(3));
  REQUIRE(warnings.size() == 2);  // the repeat and the edge count
  CHECK(warnings[0].find("line 3") != std::string::npos);

  const Graph named = parse_dimacs("p lrw1 2 1\nc name 1 alpha\nc name 2 beta\ne 1 2\n");
  CHECK(named.name(0) == "alpha");
  CHECK(named.name(1) == "beta");

  const Graph crlf = parse_dimacs("p lrw1 2 1\r\ne 1 2\r\n");
  CHECK(crlf == path_graph(2));
}

TEST_CASE("text format errors carry line numbers") {
  CHECK(parse_error_line("p lrw1 3 1\ne 1 4\n") == 2);
  CHECK(parse_error_line("p lrw1 3 1\n\ne 0 1\n") == 3);
  CHECK(parse_error_line("e 1 2\np lrw1 3 1\n") == 1);
  CHECK(parse_error_line("p lrw1 3 1\ne 1 x\n") == 2);
  CHECK(parse_error_line("p lrw1 3 1\ne 2 2\n") == 2);
  CHECK(parse_error_line("p lrw1 3 1\nq\n") == 2);
  CHECK(parse_error_line("p lrw1 3 1\np lrw1 3 1\n") == 2);
  CHECK(parse_error_line("c nothing\n") > 0);
  try {
    parse_dimacs("p lrw1 3 1\ne 1   9\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 7);
  }
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(4242);
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + static_cast<int>(rng() % 20);
    Graph g = lrw1::testing::random_graph(n, 0.3, rng);
    if (round % 3 == 0) {
      std::vector<std::string> names;
      for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(rng() % 1000) + "_" + std::to_string(v));
      g.set_names(names);
    }
    for (GraphFormat f : {GraphFormat::Dimacs, GraphFormat::Json}) {
      const Graph back = parse_graph(format_graph(g, f), f);
      CHECK(back == g);
      CHECK(back.names() == g.names());
    }
  }
  const auto path = temp_file("cycle.json");
  write_graph(cycle_graph(6), path.string());
  CHECK(read_graph(path.string()) == cycle_graph(6));
  std::filesystem::remove(path);
  const auto text = temp_file("cycle.txt");
  write_graph(cycle_graph(6), text.string());
  CHECK(read_graph(text.string()) == cycle_graph(6));
  std::filesystem::remove(text);
  CHECK_THROWS_AS(read_graph("/nonexistent/graph.txt"), InputError);
}

TEST_CASE("JSON errors and decompositions") {
  CHECK_THROWS_AS(parse_graph("{\"n\": 2, \"edges\": [[0, 2]]}", GraphFormat::Json), InputError);
  CHECK_THROWS_AS(parse_graph("{\"edges\": []}", GraphFormat::Json), InputError);
  CHECK_THROWS_AS(parse_graph("[1,", GraphFormat::Json), InputError);
  CHECK_THROWS_AS(format_from_string("xml"), InputError);

  std::mt19937_64 rng(99);
  for (int round = 0; round < 50; ++round) {
    const auto t = gen_thread_graph(1 + round % 5, {2, 4}, rng());
    const nlohmann::json j = decomposition_to_json(t.decomposition);
    const ThreadDecomposition back = thread_decomposition_from_json(j);
    CHECK(back == t.decomposition);
    CHECK(merge(t.graph.order(), back) == t.graph);
  }
  const auto neck = gen_necklace(9, {2, 2}, 3);
  CHECK(decomposition_to_json(neck.decomposition)["cyclic"] == true);
}

TEST_CASE("vertex cover reduction equivalence on small connected graphs") {
  int brute = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const Graph r = vc_reduction(g);
      CHECK(r.order() <= 2 * g.order() + 2 * g.size());
      const int tau = vertex_cover_bruteforce(g, n)->size();
      const auto sol = solve_branching(r, n);
      REQUIRE(sol);
      CHECK(static_cast<int>(sol->deletion_set.size()) == tau);
      if (r.order() <= 18) {
        CHECK(min_deletion_set_bruteforce(r, n)->size() == tau);
        ++brute;
      }
    }
  }
  CHECK(brute > 5);
}
