#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace algraph {

/// Edge with 1-based endpoints. Undirected edges are stored once with u < v.
struct Edge {
  int u;
  int v;
  std::int64_t w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple weighted graph on vertices 1..n with integral weights in [-W, W].
class Graph {
 public:
  Graph() = default;

  /// Normalizes the edge list: rejects self-loops and out-of-range vertices,
  /// orients undirected edges as u < v, and keeps only the minimum-weight
  /// edge per (ordered or unordered) vertex pair. W defaults to max |w|; a
  /// declared bound smaller than that is rejected.
  Graph(bool directed, int n, std::vector<Edge> edges, std::int64_t declared_w = -1);

  bool directed() const { return directed_; }
  int n() const { return n_; }
  std::int64_t W() const { return w_bound_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_negative_edge() const;
  std::int64_t min_weight() const;

  /// Same vertices, edges filtered by `keep`.
  template <typename Pred>
  Graph filtered(Pred keep) const {
    std::vector<Edge> kept;
    for (const Edge& e : edges_) {
      if (keep(e)) kept.push_back(e);
    }
    return Graph(directed_, n_, std::move(kept), w_bound_);
  }

  /// Directed graph with both orientations of every undirected edge.
  Graph bidirected() const;

 private:
  bool directed_ = false;
  int n_ = 0;
  std::int64_t w_bound_ = 0;
  std::vector<Edge> edges_;
};

/// JSON: {"directed": bool, "n": int, "edges": [[u, v, w], ...]}.
Graph parse_graph_json(const std::string& text);
/// Text: header "n m directed|undirected", then m lines "u v w".
Graph parse_graph_text(const std::string& text);
/// Chooses the format from the first non-space character ('{' means JSON).
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);

std::string to_json(const Graph& g);
std::string to_text(const Graph& g);

}  // namespace algraph
