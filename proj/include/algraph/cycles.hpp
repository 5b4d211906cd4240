#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "algraph/graph.hpp"
#include "algraph/options.hpp"

namespace algraph {

enum class CycleStatus { Found, NoCycle, NegativeCycle };

struct CycleResult {
  CycleStatus status = CycleStatus::NoCycle;
  /// Shortest cycle weight when status is Found.
  std::int64_t weight = 0;
  /// Vertex sequence of a shortest cycle (1-based, first vertex not
  /// repeated); filled by the extracting variants only.
  std::vector<int> cycle;
  /// Edge whose gradient selected the cycle.
  std::optional<Edge> certificate;
  /// Union bound on the probability that a random evaluation hid a nonzero
  /// polynomial somewhere in this computation.
  double error_bound = 0.0;
  int reseeds = 0;
};

/// Lowest degree of det((A + I) y^W) - y^(nW), un-shifted.
CycleResult directed_cycle_weight(const Graph& g, const Options& opts);
/// Also returns a shortest cycle: an edge with a nonzero coefficient
/// gradient, closed by a Bellman-Ford path.
CycleResult directed_cycle(const Graph& g, const Options& opts);

/// Nonnegative weights: binary search for the smallest c at which some edge
/// has a nonzero antisymmetric derivative of the prefix-summed determinant.
/// Graphs with negative edges are routed to the split-graph variant.
CycleResult undirected_cycle_weight(const Graph& g, const Options& opts);
/// Also returns a shortest cycle, closed by Dijkstra in G - uv.
CycleResult undirected_cycle(const Graph& g, const Options& opts);

/// Any integral weights, through the split graph and its Tutte matrix.
CycleResult undirected_negative_cycle_weight(const Graph& g, const Options& opts);
/// Also returns a shortest cycle, closed by a minimum perfect matching of the
/// split graph with the selected edge's endpoints removed.
CycleResult undirected_negative_cycle(const Graph& g, const Options& opts);

/// Dispatch on the graph kind.
CycleResult shortest_cycle_weight(const Graph& g, const Options& opts);
CycleResult shortest_cycle(const Graph& g, const Options& opts);

bool has_negative_cycle(const Graph& g, const Options& opts);

/// Vertices lying on some cycle of weight <= t, sorted. Throws NegativeCycle.
std::vector<int> vertices_on_short_cycles(const Graph& g, std::int64_t t, const Options& opts);

/// Checks that `cycle` is a simple cycle of g with the given weight.
bool verify_cycle(const Graph& g, const std::vector<int>& cycle, std::int64_t weight);

}  // namespace algraph
