#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "algraph/encode.hpp"
#include "algraph/graph.hpp"
#include "algraph/options.hpp"

namespace algraph {

struct Matching {
  std::vector<Edge> edges;
  std::int64_t weight = 0;
  /// Number of fresh substitutions drawn after a failed attempt.
  int reseeds = 0;
};

/// Weight of a minimum perfect matching, and for each vertex v the weight of
/// the lightest matching that covers every vertex except v and one partner j.
struct DefectValues {
  std::int64_t matching_weight = 0;
  std::vector<std::int64_t> near_weights;  // index v - 1
};

/// Laminar family of odd vertex sets (1-based vertices), each of size >= 3
/// and smaller than the whole graph. parent[i] is the smallest stored set
/// strictly containing sets[i], or -1.
struct BlossomForest {
  std::vector<std::vector<int>> sets;
  std::vector<int> parent;
  /// How many distinct values w(uv) + near_weights[u] + near_weights[v] occur.
  std::size_t distinct_thresholds = 0;
};

/// Edges lying in at least one minimum-weight perfect matching.
/// Throws NoPerfectMatching if the determinant vanishes at the sample.
std::vector<Edge> allowed_edges(const Graph& g, const Options& opts);

/// Defect values of a graph that has a perfect matching. Meant for a
/// connected graph whose edges are all allowed.
DefectValues defect_values(const Graph& g, const Options& opts);

/// Nontrivial connected components of the threshold graphs
/// {uv : w'(uv) <= alpha}, for every distinct alpha.
BlossomForest blossom_family(const Graph& allowed, const DefectValues& defect);

/// Deterministic maximum-cardinality matching (Edmonds' blossom algorithm).
std::vector<Edge> maximum_matching(const Graph& g);
/// Perfect matching or nullopt.
std::optional<std::vector<Edge>> unweighted_perfect_matching(const Graph& g);

/// Builds a perfect matching of `allowed` guided by the blossom family:
/// contract maximal blossoms, match the contracted graph, then complete every
/// blossom from the vertex its outside edge lands on. Edge weights are never
/// consulted. Throws InternalInfeasible if some contracted graph has no
/// perfect matching.
Matching extract_matching(const Graph& allowed, const BlossomForest& forest);

/// Everything the pipeline computed, for inspection and testing.
struct MwpmReport {
  Matching matching;
  std::vector<Edge> allowed;
  /// Per connected component of the allowed graph: its vertices (1-based,
  /// global ids), defect values and blossom family in global ids.
  std::vector<std::vector<int>> components;
  std::vector<DefectValues> defects;
  std::vector<BlossomForest> forests;
};

/// Allowed edges, per-component defect values, blossoms, extraction. The
/// result is checked to be perfect with weight matching_weight; otherwise the whole
/// pipeline reruns with a derived seed. Throws NoPerfectMatching.
MwpmReport mwpm_report(const Graph& g, const Options& opts);
Matching mwpm(const Graph& g, const Options& opts);

/// Weight of the second element of the multiset of perfect matching weights;
/// equals the minimum when two minimum matchings exist. nullopt if the graph
/// has exactly one perfect matching. Throws NoPerfectMatching.
std::optional<std::int64_t> second_smallest_pm_weight(const Graph& g, const Options& opts);

/// Solves a matching variant through its perfect-matching reduction.
/// Throws InvalidK or NoPerfectMatching.
Matching solve_matching_variant(const Graph& g, MatchingVariant variant, int k,
                                const Options& opts);

}  // namespace algraph
