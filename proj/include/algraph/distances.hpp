#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "algraph/graph.hpp"
#include "algraph/options.hpp"

namespace algraph {

using Distance = std::optional<std::int64_t>;  // nullopt = unreachable / unbounded

struct DistanceMatrix {
  int n = 0;
  std::vector<Distance> d;  // row-major, 0-based

  Distance at(int i, int j) const {  // 1-based
    return d[static_cast<std::size_t>((i - 1) * n + (j - 1))];
  }
};

/// dist(i, j) = lowest degree of adj((A + I) y^W)_{i,j} minus (n - 1) W.
/// Throws NegativeCycle.
DistanceMatrix directed_distances(const Graph& g, const Options& opts);

/// dist(u, v) = lowest degree of adj(Tutte(split graph))_{u2, v1} minus
/// (n'' - 1) W, n'' the split graph's order. Throws NegativeCycle.
DistanceMatrix undirected_negative_distances(const Graph& g, const Options& opts);

/// One entry of the split-graph route.
Distance undirected_negative_distance(const Graph& g, int u, int v, const Options& opts);

/// Directed graphs directly, undirected nonnegative through their
/// bidirection, undirected with negative edges through the split graph.
DistanceMatrix distances(const Graph& g, const Options& opts);

/// ecc(i) = max_j dist(i, j) over all j including i; unbounded if some
/// vertex is unreachable from i.
std::vector<Distance> eccentricities(const DistanceMatrix& m);
Distance diameter(const DistanceMatrix& m);
/// Smallest bounded eccentricity; unbounded only if every one is.
Distance radius(const DistanceMatrix& m);

std::vector<Distance> eccentricities(const Graph& g, const Options& opts);
Distance diameter(const Graph& g, const Options& opts);
Distance radius(const Graph& g, const Options& opts);

/// Gradient route: the prefix-summed determinant of M + Z, with probe
/// variables z_{j,i} substituted by zero, has a nonzero derivative in every
/// z_{j,i} exactly when every dist(i, j) <= c.
bool check_diameter_at_most(const Graph& g, std::int64_t c, const Options& opts);
/// Same probes; true when some row i has every dist(i, j) <= c.
bool check_radius_at_most(const Graph& g, std::int64_t c, const Options& opts);

}  // namespace algraph
