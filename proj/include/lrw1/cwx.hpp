#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrw1/graph.hpp"
#include "lrw1/solver.hpp"

namespace lrw1 {

enum class ExprKind { Intro, Union, Join, Rename };

/// Intro: `first` is the label, `name` the vertex. Join: labels `first` and
/// `second`, child `left`. Rename: `first` becomes `second`, child `left`.
/// Union: children `left` and `right`.
struct ExprNode {
  ExprKind kind = ExprKind::Intro;
  int first = 0;
  int second = 0;
  std::string name;
  int left = -1;
  int right = -1;
};

/// A k-expression stored as an arena; children precede their parents.
/// An expression with no root is the empty sentinel.
struct KExpression {
  std::vector<ExprNode> nodes;
  int root = -1;

  bool empty() const noexcept { return root < 0; }
  int max_label() const;
  int vertex_count() const;
};

/// Parses `add(i,NAME)`, `un(E,E)`, `join(i,j,E)` and `ren(i,j,E)`. Whitespace is
/// ignored and `#` starts a comment. Labels must lie in 1..max_labels (0 means
/// unbounded). Throws ParseError with a line and column.
KExpression parse_kexpression(const std::string& text, int max_labels = 0);
std::string to_string(const KExpression& e);

struct EvaluatedExpression {
  Graph graph;              // vertex ids follow the left-to-right order of Intro leaves
  std::vector<int> labels;  // final label of each vertex
};

EvaluatedExpression eval_kexpression(const KExpression& e);

/// Induced copy of h in eval(e) found by dynamic programming over the
/// expression: mapping[i] is the evaluated vertex hosting pattern vertex i.
/// Throws InputError if h has more than 8 vertices or labels exceed 15.
std::optional<std::vector<int>> find_induced_subgraph_cwx(const KExpression& e, const Graph& h);

/// eval(e) minus the named vertex. Unary operators left without a vertex are
/// dropped and a Union with one remaining side is replaced by that side.
/// Throws UnknownVertex.
KExpression delete_vertex_in_expression(const KExpression& e, const std::string& name);

/// The branching solver with obstruction search routed through the expression.
/// Vertex ids are those of eval(e).
std::optional<Solution> solve_branching_cwx(const KExpression& e, int k, SolveStats* stats = nullptr);

/// Random expression with n vertices over labels 1..labels, named v1..vn.
/// Unions of random splits (half of them add a single vertex), each followed
/// by random joins and renames.
KExpression random_kexpression(int n, int labels, std::uint64_t seed);

/// A 3-expression of the path v1 - v2 - ... - vn.
KExpression path_kexpression(int n);

}  // namespace lrw1
