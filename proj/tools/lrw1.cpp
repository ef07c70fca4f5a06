// Command-line front end. Exit codes: 0 solved or recognized, 1 NO-instance,
// 2 input error, 3 resource guard tripped.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lrw1/cwx.hpp"
#include "lrw1/errors.hpp"
#include "lrw1/generators.hpp"
#include "lrw1/io.hpp"
#include "lrw1/kernel.hpp"
#include "lrw1/necklace.hpp"
#include "lrw1/obstructions.hpp"
#include "lrw1/oracle.hpp"
#include "lrw1/solver.hpp"
#include "lrw1/split_tree.hpp"

namespace {

using lrw1::Graph;
using lrw1::GraphFormat;
using nlohmann::json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;
constexpr int kResourceError = 3;

struct Options {
  std::uint64_t seed = 1;
  std::string format;  // empty: by file extension, DIMACS on stdin
  std::string out;
  bool json = false;
  std::string input = "-";
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lrw1::InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GraphFormat input_format(const Options& o) {
  if (!o.format.empty()) return lrw1::format_from_string(o.format);
  return o.input == "-" ? GraphFormat::Dimacs : lrw1::format_for_path(o.input);
}

GraphFormat output_format(const Options& o) {
  if (!o.format.empty()) return lrw1::format_from_string(o.format);
  return o.out.empty() ? GraphFormat::Dimacs : lrw1::format_for_path(o.out);
}

Graph load(const Options& o) {
  std::vector<std::string> warnings;
  Graph g = lrw1::parse_graph(slurp(o.input), input_format(o), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  return g;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw lrw1::InputError("cannot write '" + o.out + "'");
  out << text;
}

void emit_json(const Options& o, const json& j) { emit(o, j.dump(2) + "\n"); }

std::vector<std::string> names_of(const Graph& g, const std::vector<int>& vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(g.name(v));
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
  return s;
}

// ---------------------------------------------------------------- commands

int cmd_recognize(const Options& o) {
  const Graph g = load(o);
  json comps = json::array();
  bool all_thread = true;
  std::string text;
  for (const lrw1::VertexSet& comp : lrw1::connected_components(g)) {
    const auto kind = lrw1::classify_component(lrw1::induced_subgraph(g, comp)).kind;
    all_thread = all_thread && kind == lrw1::ComponentKind::Thread;
    const auto names = names_of(g, comp.to_vector());
    comps.push_back({{"vertices", names}, {"kind", lrw1::to_string(kind)}});
    text += std::string(lrw1::to_string(kind)) + ": " + join(names) + "\n";
  }
  if (o.json)
    emit_json(o, {{"thread", all_thread}, {"components", comps}});
  else
    emit(o, (all_thread ? "thread graph\n" : "not a thread graph\n") + text);
  return all_thread ? kYes : kNo;
}

json named_decomposition(const Graph& g, json j) {
  for (auto& a : j["anchors"]) a = g.name(a.get<int>());
  for (auto& b : j["blocks"])
    for (auto& v : b["order"]) v = g.name(v.get<int>());
  return j;
}

int cmd_decompose(const Options& o) {
  const Graph g = load(o);
  const lrw1::Classification c = lrw1::classify_component(g);
  json j;
  if (c.kind == lrw1::ComponentKind::Thread) {
    j = named_decomposition(g, lrw1::decomposition_to_json(*c.thread));
  } else if (c.kind == lrw1::ComponentKind::Necklace) {
    j = named_decomposition(g, lrw1::decomposition_to_json(*c.necklace));
  } else {
    throw lrw1::NotThreadGraph("the graph is neither a thread graph nor a necklace");
  }
  j["kind"] = lrw1::to_string(c.kind);
  emit_json(o, j);
  return kYes;
}

json trace_json(const Graph& g, const std::vector<lrw1::BranchStep>& trace) {
  json out = json::array();
  for (const auto& st : trace)
    out.push_back({{"catalog_id", st.catalog_id}, {"hit", names_of(g, st.hit)}, {"chosen", g.name(st.chosen)}});
  return out;
}

int report_solution(const Options& o, const Graph& g, int k, const std::optional<lrw1::Solution>& sol,
                    const lrw1::SolveStats& stats) {
  if (o.json) {
    json j{{"k", k}, {"answer", sol ? "yes" : "no"}, {"nodes_expanded", stats.nodes_expanded}};
    if (sol) {
      j["deletion_set"] = names_of(g, sol->deletion_set.to_vector());
      j["size"] = sol->deletion_set.size();
      j["trace"] = trace_json(g, sol->trace);
    }
    emit_json(o, j);
  } else if (sol) {
    emit(o, "YES " + std::to_string(sol->deletion_set.size()) + ": " + join(names_of(g, sol->deletion_set.to_vector())) + "\n");
  } else {
    emit(o, "NO\n");
  }
  return sol ? kYes : kNo;
}

int cmd_solve(const Options& o, int k, const std::string& engine, const std::string& expr_path) {
  lrw1::SolveStats stats;
  if (engine == "cwx") {
    const std::string path = expr_path.empty() ? o.input : expr_path;
    const lrw1::KExpression e = lrw1::parse_kexpression(slurp(path));
    const Graph g = lrw1::eval_kexpression(e).graph;
    return report_solution(o, g, k, lrw1::solve_branching_cwx(e, k, &stats), stats);
  }
  const Graph g = load(o);
  return report_solution(o, g, k, lrw1::solve_branching(g, k, &stats), stats);
}

int cmd_kernelize(const Options& o, int k, const std::string& thresholds, std::int64_t cap) {
  const Graph g = load(o);
  const auto mode = thresholds == "test" ? lrw1::ThresholdMode::Test : lrw1::ThresholdMode::Proven;
  const lrw1::KernelResult r = lrw1::kernelize(g, k, mode, cap);
  const lrw1::KernelState& s = r.state;
  json trace = json::array();
  for (const auto& st : s.trace)
    trace.push_back({{"rule", st.rule}, {"vertices", st.vertices}, {"k", st.k_after}, {"order", st.order_after}});
  json j{{"outcome", lrw1::to_string(r.outcome)}, {"trace", trace}};
  if (r.outcome != lrw1::KernelOutcome::No) {
    j["graph"] = lrw1::graph_to_json(s.graph);
    j["k"] = s.k;
    j["origin"] = s.origin;
  }
  if (o.json || r.outcome == lrw1::KernelOutcome::No) {
    emit_json(o, j);
  } else {
    std::cerr << "outcome " << lrw1::to_string(r.outcome) << ", k' = " << s.k << ", n' = " << s.graph.order() << '\n';
    emit(o, lrw1::format_graph(s.graph, output_format(o)));
  }
  return r.outcome == lrw1::KernelOutcome::No ? kNo : kYes;
}

int cmd_oracle_lrw(const Options& o) {
  const Graph g = load(o);
  const int w = lrw1::linear_rankwidth_exact(g);
  if (o.json)
    emit_json(o, {{"linear_rankwidth", w}});
  else
    emit(o, std::to_string(w) + "\n");
  return kYes;
}

int cmd_oracle_solve(const Options& o, int k) {
  const Graph g = load(o);
  const auto s = lrw1::min_deletion_set_bruteforce(g, k);
  std::optional<lrw1::Solution> sol;
  if (s) sol = lrw1::Solution{*s, {}};
  return report_solution(o, g, k, sol, {});
}

int cmd_oracle_catalog(const Options& o) {
  json out = json::array();
  std::string text;
  for (const auto& e : lrw1::obstruction_catalog()) {
    json edges = json::array();
    for (auto [u, v] : e.graph.edges()) edges.push_back({u, v});
    out.push_back({{"id", e.id}, {"name", e.name}, {"n", e.graph.order()}, {"edges", edges}, {"annotations", e.annotations}});
    text += std::to_string(e.id) + "\t" + (e.name.empty() ? "-" : e.name) + "\tn=" + std::to_string(e.graph.order()) +
            "\tm=" + std::to_string(e.graph.size()) + "\t" + join(e.annotations) + "\n";
  }
  if (o.json)
    emit_json(o, out);
  else
    emit(o, text);
  return kYes;
}

int cmd_find_obstruction(const Options& o) {
  const Graph g = load(o);
  if (auto hit = lrw1::find_small_obstruction(g)) {
    const auto& entry = lrw1::obstruction_catalog()[static_cast<std::size_t>(hit->catalog_id)];
    const auto names = names_of(g, hit->mapping);
    if (o.json)
      emit_json(o, {{"found", true}, {"kind", "catalog"}, {"catalog_id", hit->catalog_id}, {"name", entry.name}, {"mapping", names}});
    else
      emit(o, "catalog " + std::to_string(hit->catalog_id) + (entry.name.empty() ? "" : " (" + entry.name + ")") + ": " +
                  join(names) + "\n");
    return kYes;
  }
  if (auto cycle = lrw1::find_long_induced_cycle(g)) {
    const auto names = names_of(g, *cycle);
    if (o.json)
      emit_json(o, {{"found", true}, {"kind", "cycle"}, {"length", cycle->size()}, {"cycle", names}});
    else
      emit(o, "induced cycle of length " + std::to_string(cycle->size()) + ": " + join(names) + "\n");
    return kYes;
  }
  if (o.json)
    emit_json(o, {{"found", false}});
  else
    emit(o, "none\n");
  return kNo;
}

int emit_graph(const Options& o, const Graph& g, const json& extra) {
  if (o.json) {
    json j = extra;
    j["graph"] = lrw1::graph_to_json(g);
    emit_json(o, j);
  } else {
    emit(o, lrw1::format_graph(g, output_format(o)));
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear rankwidth-1 vertex deletion: recognition, solvers, kernel and oracles"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Seed for the generators");
  app.add_option("--format", o.format, "Graph format for input and output")->check(CLI::IsMember({"dimacs", "json"}));
  app.add_option("--out", o.out, "Write the result to this file");
  app.add_flag("--json", o.json, "Emit results as JSON");

  int k = 0;
  std::string engine = "branch";
  std::string expr;
  std::string thresholds = "proven";
  std::int64_t cap = lrw1::kDefaultOccurrenceCap;
  int blocks = 3;
  int length = 9;
  int min_size = 2;
  int max_size = 4;
  std::string base = "thread";
  int base_size = 3;
  int extra = 2;
  double prob = 0.3;

  auto add_input = [&](CLI::App* cmd) { cmd->add_option("input", o.input, "Graph file, '-' for stdin"); };

  auto* recognize = app.add_subcommand("recognize", "Classify each component as thread, necklace or other");
  add_input(recognize);
  auto* decompose = app.add_subcommand("decompose", "Thread or necklace decomposition of a connected graph");
  add_input(decompose);
  auto* solve = app.add_subcommand("solve", "Minimum deletion set of size at most k");
  add_input(solve);
  solve->add_option("--k", k, "Budget")->required()->check(CLI::NonNegativeNumber);
  solve->add_option("--engine", engine, "Solver engine")->check(CLI::IsMember({"branch", "cwx"}));
  solve->add_option("--expr", expr, "k-expression file for the cwx engine");
  auto* kernel = app.add_subcommand("kernelize", "Run the kernelization rules to a fixpoint");
  add_input(kernel);
  kernel->add_option("--k", k, "Budget")->required()->check(CLI::NonNegativeNumber);
  kernel->add_option("--thresholds", thresholds, "Rule thresholds: proven constants, or small ones for testing")
      ->check(CLI::IsMember({"proven", "paper", "test"}));
  kernel->add_option("--cap", cap, "Occurrence enumeration cap")->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "Brute-force oracles");
  oracle->require_subcommand(1);
  oracle->fallthrough();
  auto* oracle_lrw = oracle->add_subcommand("lrw", "Exact linear rankwidth");
  add_input(oracle_lrw);
  auto* oracle_solve = oracle->add_subcommand("solve", "Exhaustive minimum deletion set");
  add_input(oracle_solve);
  oracle_solve->add_option("--k", k, "Budget")->required()->check(CLI::NonNegativeNumber);
  auto* oracle_catalog = oracle->add_subcommand("catalog", "The obstruction catalog");

  auto* gen = app.add_subcommand("gen", "Instance generators");
  gen->require_subcommand(1);
  gen->fallthrough();
  auto add_sizes = [&](CLI::App* cmd) {
    cmd->add_option("--min-size", min_size, "Smallest block")->check(CLI::Range(2, 64));
    cmd->add_option("--max-size", max_size, "Largest block")->check(CLI::Range(2, 64));
  };
  auto* gen_thread = gen->add_subcommand("thread", "Random thread graph");
  gen_thread->add_option("--blocks", blocks, "Number of blocks")->check(CLI::PositiveNumber);
  add_sizes(gen_thread);
  auto* gen_neck = gen->add_subcommand("necklace", "Random necklace");
  gen_neck->add_option("--length", length, "Anchor cycle length")->check(CLI::Range(3, 1000));
  add_sizes(gen_neck);
  auto* gen_planted = gen->add_subcommand("planted", "Thread or necklace base plus extra vertices");
  gen_planted->add_option("--base", base, "Base family")->check(CLI::IsMember({"thread", "necklace"}));
  gen_planted->add_option("--base-size", base_size, "Blocks of the base (cycle length for necklaces)");
  gen_planted->add_option("--extra", extra, "Extra vertices")->check(CLI::NonNegativeNumber);
  gen_planted->add_option("--p", prob, "Edge probability for extra vertices")->check(CLI::Range(0.0, 1.0));
  add_sizes(gen_planted);
  auto* gen_vc = gen->add_subcommand("vc", "Vertex cover reduction of the input graph");
  add_input(gen_vc);

  auto* find = app.add_subcommand("find-obstruction", "A catalog copy or a long induced cycle");
  add_input(find);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    const lrw1::SizeRange sizes{min_size, max_size};
    if (recognize->parsed()) return cmd_recognize(o);
    if (decompose->parsed()) return cmd_decompose(o);
    if (solve->parsed()) return cmd_solve(o, k, engine, expr);
    if (kernel->parsed()) return cmd_kernelize(o, k, thresholds, cap);
    if (oracle_lrw->parsed()) return cmd_oracle_lrw(o);
    if (oracle_solve->parsed()) return cmd_oracle_solve(o, k);
    if (oracle_catalog->parsed()) return cmd_oracle_catalog(o);
    if (gen_thread->parsed()) {
      const auto t = lrw1::gen_thread_graph(blocks, sizes, o.seed);
      return emit_graph(o, t.graph, {{"decomposition", lrw1::decomposition_to_json(t.decomposition)}});
    }
    if (gen_neck->parsed()) {
      const auto t = lrw1::gen_necklace(length, sizes, o.seed);
      return emit_graph(o, t.graph, {{"decomposition", lrw1::decomposition_to_json(t.decomposition)}});
    }
    if (gen_planted->parsed()) {
      const auto b = base == "thread" ? lrw1::PlantedBase::Thread : lrw1::PlantedBase::Necklace;
      const auto inst = lrw1::gen_planted(b, base_size, sizes, extra, prob, o.seed);
      return emit_graph(o, inst.graph, {{"budget", inst.budget}, {"planted", inst.planted.to_vector()}});
    }
    if (gen_vc->parsed()) return emit_graph(o, lrw1::vc_reduction(load(o)), json::object());
    if (find->parsed()) return cmd_find_obstruction(o);
  } catch (const lrw1::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const lrw1::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResourceError;
  }
  return kInputError;
}
