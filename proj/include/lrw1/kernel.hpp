#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lrw1/graph.hpp"
#include "lrw1/obstructions.hpp"

namespace lrw1 {

using BigInt = boost::multiprecision::cpp_int;

/// 8 * 8! * (k+1)^8 + k.
BigInt mu(int k);

/// d! (k+1)^d, the size bound for a compressed family.
BigInt sunflower_bound(int d, int k);

struct SetFamily {
  int universe = 0;
  std::vector<VertexSet> sets;
};

struct Sunflower {
  VertexSet core;
  std::vector<int> petals;  // indices into the family, ascending
};

/// A sunflower with exactly `petals` members, found by the greedy disjoint
/// subfamily and recursion on a most frequent element (ties to the smallest).
std::optional<Sunflower> find_sunflower(const SetFamily& f, int petals);

/// Removes duplicates, then repeatedly drops the last petal of a (k+2)-petal
/// sunflower until none is found. Afterwards |F'| <= d!(k+1)^d, and the minimal
/// hitting sets of size <= k are unchanged. Throws InputError if a set exceeds d.
SetFamily sunflower_compress(const SetFamily& f, int k, int d = 8);

enum class ThresholdMode { Proven, Test };

/// Rule thresholds for the current budget. Proven mode uses the formulas in mu(k);
/// test mode uses small constants so the structural rules fire on small graphs.
struct Thresholds {
  BigInt block_size;        // a thread block with at least this many vertices has an irrelevant vertex
  BigInt component_blocks;  // a component with at least this many blocks is contracted
  BigInt isolated;          // at least this many isolated vertices give an irrelevant one
  BigInt components;        // bound on components with two or more vertices (diagnostic)

  static Thresholds proven(int k);
  static Thresholds test();
  static Thresholds for_mode(ThresholdMode mode, int k);
};

struct KernelStep {
  std::string rule;
  std::vector<int> vertices;  // current ids before the step
  int k_after = 0;
  int order_after = 0;
};

struct KernelState {
  Graph graph;
  int k = 0;
  VertexSet modulator;      // the set T; empty until computed
  std::vector<int> origin;  // current vertex -> input vertex, -1 for contracted vertices
  ThresholdMode mode = ThresholdMode::Proven;
  std::int64_t occurrence_cap = kDefaultOccurrenceCap;
  std::vector<KernelStep> trace;

  KernelState() = default;
  KernelState(Graph g, int budget, ThresholdMode m = ThresholdMode::Proven);
  Thresholds thresholds() const { return Thresholds::for_mode(mode, k); }
};

enum class KernelOutcome { Reduced, No, Unchanged };
const char* to_string(KernelOutcome outcome);

/// Drops every component of linear rankwidth at most 1.
KernelOutcome rule_remove_thread_components(KernelState& s);

/// Sets s.modulator and returns Unchanged, or returns No. Occurrences come from
/// the catalog and are compressed as sunflowers. Also No when the uncovered part
/// still holds an obstruction, because then no hitting set of size <= k exists.
KernelOutcome compute_T(KernelState& s);

/// Deletes every vertex that is the only modulator vertex of some occurrence;
/// No when there are more than k of them.
KernelOutcome rule_one_vertex(KernelState& s);

/// An unmarked interior vertex of a large thread block of g - T.
std::optional<int> find_irrelevant_in_big_block(const KernelState& s);

/// Replaces a block inside a run of at least 9 blocks without T-neighbours by a
/// single vertex. Throws InternalError if a vertex of T touches 7 or more blocks.
KernelOutcome contract_long_component(KernelState& s);

/// An unmarked isolated vertex of g - T when there are many. Throws InternalError
/// if g - T has more than 2|T| components with two or more vertices.
std::optional<int> rule_component_counts(const KernelState& s);

/// Deletes vertex v from the state, keeping T and origin aligned.
void delete_vertex(KernelState& s, int v, const std::string& rule);

struct KernelResult {
  KernelOutcome outcome = KernelOutcome::Unchanged;
  KernelState state;  // the reduced instance when outcome is Reduced or Unchanged
};

/// Thread components, the modulator, the one-vertex rule, then the structural
/// rules in that order, restarting after
/// every change until nothing applies.
KernelResult kernelize(const Graph& g, int k, ThresholdMode mode = ThresholdMode::Proven,
                       std::int64_t occurrence_cap = kDefaultOccurrenceCap);

}  // namespace lrw1
