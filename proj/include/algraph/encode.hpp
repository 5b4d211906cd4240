#pragma once

#include <cstdint>
#include <vector>

#include "algraph/field.hpp"
#include "algraph/graph.hpp"
#include "algraph/polymatrix.hpp"

namespace algraph {

/// Variable id of the (0-based) ordered pair (u, v) in an n-vertex encoding.
inline VarId pair_var(std::size_t n, std::size_t u, std::size_t v) { return u * n + v; }

/// Entry (u, v) = sigma(x_uv) * y^(w(uv) + W) for every edge of a directed
/// graph. Callers add the identity term and any further shifts themselves.
PolyMatrix encode_directed(const PrimeField& f, const Graph& g, u64 seed);

/// Directed encoding of the bidirection of an undirected graph with
/// nonnegative weights; entries carry y^w with no shift and the two
/// orientations of an edge get independent variables.
PolyMatrix encode_undirected_bidirected(const PrimeField& f, const Graph& g, u64 seed);

/// Exponent offset that makes every edge weight of `g` nonnegative in a
/// Tutte encoding: W when some weight is negative, otherwise 0.
std::int64_t tutte_shift(const Graph& g);

/// Skew-symmetric Tutte matrix: (u, v) = x y^(w + shift), (v, u) = -x y^(w + shift)
/// for u < v, sharing one variable per edge. A perfect matching of weight w
/// shows up at degree 2 w + n * shift of the determinant.
PolyMatrix encode_tutte(const PrimeField& f, const Graph& g, u64 seed, std::int64_t shift);
inline PolyMatrix encode_tutte(const PrimeField& f, const Graph& g, u64 seed) {
  return encode_tutte(f, g, seed, tutte_shift(g));
}

/// Gadget graph whose almost-perfect matchings model paths of an undirected
/// graph with negative edges. Every base vertex v becomes v1, v2 joined by a
/// zero edge. A nonnegative edge uv becomes u1v2, u2v1, u1v1, u2v2 at weight
/// w(uv). A negative edge e = uv (u < v) becomes two vertices e1, e2 with
/// edges u1e1, u2e1 at weight w(e) and e1e2, v1e2, v2e2 at weight 0.
struct SplitGraph {
  Graph base;
  Graph graph;
  std::vector<Edge> negative_edges;

  /// 1-based id of copy `which` (1 or 2) of base vertex v (1-based).
  int copy(int v, int which) const { return 2 * (v - 1) + which; }
  /// 1-based id of copy `which` of negative edge k (0-based index).
  int edge_copy(std::size_t k, int which) const {
    return 2 * base.n() + 2 * static_cast<int>(k) + which;
  }

  bool is_vertex_copy(int x) const { return x <= 2 * base.n(); }
  /// Base vertex of a vertex copy.
  int base_vertex(int x) const { return (x + 1) / 2; }
  /// The other copy of the same base vertex or negative edge.
  int twin(int x) const {
    if (is_vertex_copy(x)) return x % 2 == 1 ? x + 1 : x - 1;
    int off = x - 2 * base.n();
    return off % 2 == 1 ? x + 1 : x - 1;
  }
  /// Index of the negative edge an edge copy belongs to.
  std::size_t negative_index(int x) const {
    return static_cast<std::size_t>((x - 2 * base.n() - 1) / 2);
  }
};

/// Throws NegativeCycleInNegativeEdges if the negative edges contain a cycle.
SplitGraph build_split_graph(const Graph& g);

enum class MatchingVariant { MinWeightPerfect, MaxWeightPerfect, MinWeightCardinalityK, MaxWeight };

/// A matching problem recast as a minimum-weight perfect matching instance.
struct ReducedMatching {
  Graph original;
  Graph graph;
  MatchingVariant variant;
  int k = 0;

  /// Maps a perfect matching of `graph` back to a matching of `original`:
  /// drops artificial vertices and completion edges, restores weights.
  std::vector<Edge> recover(const std::vector<Edge>& reduced_matching) const;
};

/// Throws InvalidK unless 0 <= k <= n/2 for the cardinality variant.
ReducedMatching reduce_matching_variant(const Graph& g, MatchingVariant variant, int k = 0);

}  // namespace algraph
