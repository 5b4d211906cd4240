#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algraph/graph.hpp"

// Brute-force references. They use plain 64-bit integers and share no code
// with the algebraic algorithms they check.
namespace algraph::oracle {

using Dist = std::optional<std::int64_t>;  // nullopt = unreachable

/// Single-source distances on a directed graph (an undirected graph is read
/// as its bidirection). nullopt if a negative cycle is reachable from s.
std::optional<std::vector<Dist>> bellman_ford(const Graph& g, int s);

struct AllPairs {
  bool negative_cycle = false;
  std::vector<std::vector<Dist>> dist;  // [i-1][j-1]
};
/// All-pairs distances; directed semantics as in bellman_ford.
AllPairs floyd_warshall(const Graph& g);

/// Shortest simple-path distances of an undirected graph by exhaustive
/// search; valid with negative edges. Throws TooLarge for n > 10.
std::vector<std::vector<Dist>> simple_path_distances(const Graph& g);

struct Cycle {
  std::int64_t weight;
  std::vector<int> vertices;
};
/// Every simple cycle (directed: oriented, length >= 2; undirected: length
/// >= 3, each cycle once) with at most max_len vertices, sorted by weight.
/// Throws TooLarge for n > 12.
std::vector<Cycle> enumerate_cycles(const Graph& g, std::optional<int> max_len = std::nullopt);

/// Minimum cycle weight through each vertex (nullopt if on no cycle).
std::vector<Dist> min_cycle_through_vertex(const Graph& g);

struct MatchingFacts {
  std::optional<std::int64_t> min_weight;  // nullopt = no perfect matching
  std::set<std::pair<int, int>> allowed;   // union of all minimum matchings
  /// Per vertex v: min over j of the minimum perfect matching of G - {v, j}.
  std::vector<std::optional<std::int64_t>> near;
  /// Second element of the multiset of perfect-matching weights.
  std::optional<std::int64_t> second;
  std::uint64_t perfect_matchings = 0;
};
/// Bitmask dynamic program over vertex subsets; n <= 16.
MatchingFacts matching_dp(const Graph& g);
/// Explicit enumeration of all perfect matchings; n <= 8.
MatchingFacts matching_enumerate(const Graph& g);

/// One comparison between a reference value and a computed one.
struct Report {
  std::string instance;
  std::string quantity;
  std::string oracle_value;
  std::string subject_value;
  bool match() const { return oracle_value == subject_value; }
  std::string to_json() const;
};

}  // namespace algraph::oracle
