#pragma once

// Combinatorial shortest paths used to close cycles found algebraically.

#include <cstdint>
#include <optional>
#include <vector>

#include "algraph/graph.hpp"

namespace algraph::detail {

struct Path {
  std::int64_t weight = 0;
  std::vector<int> vertices;  // from source to target, 1-based
};

/// Shortest s -> t path by Bellman-Ford (directed, or bidirected when the
/// graph is undirected). The caller guarantees there is no negative cycle;
/// with strict-improvement relaxation the predecessor graph is then a tree,
/// so the path is simple.
std::optional<Path> bellman_ford_path(const Graph& g, int s, int t);

/// Dijkstra on an undirected graph with nonnegative weights, ignoring the
/// edge {skip_u, skip_v}.
std::optional<Path> dijkstra_path(const Graph& g, int s, int t, int skip_u, int skip_v);

}  // namespace algraph::detail
