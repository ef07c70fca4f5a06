#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace lrw1;

namespace {

py::dict blocks_dict(const std::vector<int>& anchors, const std::vector<ThreadBlock>& blocks, bool cyclic) {
  py::list bl;
  for (const ThreadBlock& b : blocks) {
    py::list labels;
    for (Side s : b.labels) labels.append(to_string(s));
    py::dict d;
    d["order"] = b.order;
    d["labels"] = labels;
    bl.append(d);
  }
  py::dict out;
  out["anchors"] = anchors;
  out["blocks"] = bl;
  out["cyclic"] = cyclic;
  return out;
}

std::optional<std::vector<int>> as_list(const std::optional<VertexSet>& s) {
  if (!s) return std::nullopt;
  return s->to_vector();
}

ThresholdMode mode_from(const std::string& name) {
  if (name == "proven" || name == "paper") return ThresholdMode::Proven;
  if (name == "test") return ThresholdMode::Test;
  throw InputError("thresholds must be 'proven' or 'test'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Linear rankwidth-1 vertex deletion: recognition, solvers, kernel and oracles";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"), py::arg("edges"))
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
      .def("degree", &Graph::degree)
      .def("edges", &Graph::edges)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property("names", &Graph::names, &Graph::set_names)
      .def("name", &Graph::name)
      .def(py::self == py::self)
      .def("__len__", &Graph::order)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);
  m.def("star_graph", &star_graph);
  m.def("house_graph", &house_graph);
  m.def("gem_graph", &gem_graph);
  m.def("domino_graph", &domino_graph);
  m.def("disjoint_union", &disjoint_union);
  m.def("delete_vertices", [](const Graph& g, const std::vector<int>& vs) {
    return delete_vertices(g, VertexSet(g.order(), vs)).graph;
  });

  m.def("is_thread_graph", &is_thread_graph, "Linear rankwidth at most 1, by split-tree recognition");
  m.def("linear_rankwidth", &linear_rankwidth_exact, "Exact linear rankwidth by subset dynamic programming");
  m.def("classify_component", [](const Graph& g) { return std::string(to_string(classify_component(g).kind)); });
  m.def("thread_decomposition", [](const Graph& g) {
    const ThreadDecomposition d = canonical_thread_decomposition(g);
    return blocks_dict(d.anchors, d.blocks, false);
  });
  m.def("necklace_decomposition", [](const Graph& g) -> std::optional<py::dict> {
    const Classification c = classify_component(g);
    if (!c.necklace) return std::nullopt;
    return blocks_dict(c.necklace->anchors, c.necklace->blocks, true);
  });

  m.def("obstruction_catalog", [] {
    py::list out;
    for (const CatalogEntry& e : obstruction_catalog()) {
      py::dict d;
      d["id"] = e.id;
      d["name"] = e.name;
      d["graph"] = e.graph;
      d["annotations"] = e.annotations;
      out.append(d);
    }
    return out;
  });
  m.def("find_obstruction", [](const Graph& g) -> std::optional<py::dict> {
    const auto hit = find_small_obstruction(g);
    if (!hit) return std::nullopt;
    py::dict d;
    d["catalog_id"] = hit->catalog_id;
    d["mapping"] = hit->mapping;
    return d;
  });

  m.def("solve", [](const Graph& g, int k) -> std::optional<std::vector<int>> {
    const auto sol = solve_branching(g, k);
    if (!sol) return std::nullopt;
    return sol->deletion_set.to_vector();
  },
        py::arg("g"), py::arg("k"), "Minimum deletion set of size at most k, or None");
  m.def("solve_bruteforce", [](const Graph& g, int k) { return as_list(min_deletion_set_bruteforce(g, k)); }, py::arg("g"),
        py::arg("k"));

  m.def("parse_kexpression", [](const std::string& text) { return to_string(parse_kexpression(text)); },
        "Parses and re-prints a k-expression");
  m.def("eval_kexpression", [](const std::string& text) { return eval_kexpression(parse_kexpression(text)).graph; });
  m.def("solve_kexpression", [](const std::string& text, int k) -> std::optional<std::vector<std::string>> {
    const KExpression e = parse_kexpression(text);
    const auto sol = solve_branching_cwx(e, k);
    if (!sol) return std::nullopt;
    const Graph g = eval_kexpression(e).graph;
    std::vector<std::string> names;
    for (int v : sol->deletion_set) names.push_back(g.name(v));
    return names;
  });

  m.def("kernelize", [](const Graph& g, int k, const std::string& thresholds) {
    const KernelResult r = kernelize(g, k, mode_from(thresholds));
    py::dict d;
    d["outcome"] = to_string(r.outcome);
    py::list trace;
    for (const KernelStep& st : r.state.trace) trace.append(py::make_tuple(st.rule, st.vertices));
    d["trace"] = trace;
    if (r.outcome != KernelOutcome::No) {
      d["graph"] = r.state.graph;
      d["k"] = r.state.k;
    }
    return d;
  }, py::arg("g"), py::arg("k"), py::arg("thresholds") = "proven");
  m.def("sunflower_compress", [](int universe, const std::vector<std::vector<int>>& sets, int k, int d) {
    SetFamily f{universe, {}};
    for (const auto& s : sets) f.sets.emplace_back(universe, s);
    std::vector<std::vector<int>> out;
    for (const VertexSet& s : sunflower_compress(f, k, d).sets) out.push_back(s.to_vector());
    return out;
  }, py::arg("universe"), py::arg("sets"), py::arg("k"), py::arg("d") = 8);
  m.def("mu", [](int k) { return mu(k).str(); }, "The kernel constant as a decimal string");

  m.def("gen_thread_graph", [](int blocks, int min_size, int max_size, std::uint64_t seed) {
    return gen_thread_graph(blocks, {min_size, max_size}, seed).graph;
  }, py::arg("blocks"), py::arg("min_size") = 2, py::arg("max_size") = 4, py::arg("seed") = 1);
  m.def("gen_necklace", [](int length, int min_size, int max_size, std::uint64_t seed) {
    return gen_necklace(length, {min_size, max_size}, seed).graph;
  }, py::arg("length"), py::arg("min_size") = 2, py::arg("max_size") = 4, py::arg("seed") = 1);
  m.def("vc_reduction", &vc_reduction);
  m.def("vertex_cover_bruteforce", [](const Graph& g, int k) { return as_list(vertex_cover_bruteforce(g, k)); });

  m.def("parse_dimacs", [](const std::string& text) { return parse_dimacs(text); });
  m.def("to_dimacs", &to_dimacs);
  m.def("read_graph", [](const std::string& path) { return read_graph(path); });
  m.def("write_graph", &write_graph);
}
