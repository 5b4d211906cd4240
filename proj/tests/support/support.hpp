#pragma once

// Test-only helpers: independent modular arithmetic for matrix oracles and
// random instance generators. Nothing here calls into the library's
// algebra; only the Graph container is shared.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "algraph/graph.hpp"
#include "algraph/oracles.hpp"

namespace support {

using u64 = std::uint64_t;
using Rng = std::mt19937_64;

inline u64 addm(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 subm(u64 a, u64 b, u64 p) { return (a + p - b) % p; }
inline u64 mulm(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

/// Laplace expansion along the first row; fine for n <= 7.
inline u64 cofactor_det(const std::vector<u64>& a, std::size_t n, u64 p) {
  if (n == 0) return 1 % p;
  if (n == 1) return a[0] % p;
  u64 total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (a[col] == 0) continue;
    std::vector<u64> minor;
    minor.reserve((n - 1) * (n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) minor.push_back(a[r * n + c]);
      }
    }
    u64 term = mulm(a[col], cofactor_det(minor, n - 1, p), p);
    total = col % 2 == 0 ? addm(total, term, p) : subm(total, term, p);
  }
  return total;
}

/// adj(A)_{i,j} = (-1)^(i+j) det(A without row j and column i).
inline std::vector<u64> cofactor_adjugate(const std::vector<u64>& a, std::size_t n, u64 p) {
  std::vector<u64> adj(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<u64> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != i) minor.push_back(a[r * n + c]);
        }
      }
      u64 d = cofactor_det(minor, n - 1, p);
      adj[i * n + j] = (i + j) % 2 == 0 ? d : subm(0, d, p);
    }
  }
  return adj;
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Directed graph without negative cycles: weights are b + pi(u) - pi(v)
/// with b >= 0, so every cycle weighs the sum of its b values.
inline algraph::Graph digraph_no_negative_cycle(Rng& rng, int n, int W, double density) {
  std::vector<int> pi(static_cast<std::size_t>(n) + 1);
  for (int& x : pi) x = uniform(rng, 0, W / 2);
  std::vector<algraph::Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      if (u == v || !coin(rng, density)) continue;
      int shift = pi[static_cast<std::size_t>(u)] - pi[static_cast<std::size_t>(v)];
      int lo = std::max(0, -W - shift), hi = W - shift;
      if (lo > hi) continue;
      edges.push_back({u, v, uniform(rng, lo, hi) + shift});
    }
  }
  return algraph::Graph(true, n, std::move(edges), W);
}

/// Random digraph with a planted cycle of negative total weight.
inline algraph::Graph digraph_with_negative_cycle(Rng& rng, int n, int W, double density) {
  std::vector<algraph::Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      if (u != v && coin(rng, density)) edges.push_back({u, v, uniform(rng, -W, W)});
    }
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  int len = uniform(rng, 2, n);
  // Weights -1 on every planted arc except possibly some zeros keep the
  // total at most -1.
  std::vector<algraph::Edge> planted;
  for (int i = 0; i < len; ++i) {
    int u = order[static_cast<std::size_t>(i)], v = order[static_cast<std::size_t>((i + 1) % len)];
    planted.push_back({u, v, i == 0 ? -std::max(1, W) : uniform(rng, -W, 0)});
  }
  std::vector<algraph::Edge> all = planted;
  for (const auto& e : edges) {
    bool clash = std::any_of(planted.begin(), planted.end(),
                             [&](const algraph::Edge& p) { return p.u == e.u && p.v == e.v; });
    if (!clash) all.push_back(e);
  }
  return algraph::Graph(true, n, std::move(all), W);
}

inline algraph::Graph undirected_nonnegative(Rng& rng, int n, int W, double density) {
  std::vector<algraph::Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (coin(rng, density)) edges.push_back({u, v, uniform(rng, 0, W)});
    }
  }
  return algraph::Graph(false, n, std::move(edges), W);
}

/// Undirected graph with a few negative edges and no negative cycle
/// (rejection against cycle enumeration; the negative edges form a forest).
inline algraph::Graph undirected_negative(Rng& rng, int n, int W, double density,
                                          int max_negative) {
  for (;;) {
    std::vector<algraph::Edge> edges;
    int negatives = 0;
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        if (!coin(rng, density)) continue;
        bool neg = negatives < max_negative && coin(rng, 0.3);
        negatives += neg;
        edges.push_back({u, v, neg ? uniform(rng, -W, -1) : uniform(rng, 0, W)});
      }
    }
    if (W == 0 || negatives == 0) continue;
    algraph::Graph g(false, n, std::move(edges), W);
    auto cycles = algraph::oracle::enumerate_cycles(g);
    if (!cycles.empty() && cycles.front().weight < 0) continue;
    return g;
  }
}

/// Graph with a planted perfect matching plus random extra edges.
inline algraph::Graph matching_instance(Rng& rng, int n, int W, bool negative, double density) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  int lo = negative ? -W : 0;
  std::vector<algraph::Edge> edges;
  for (int i = 0; i + 1 < n; i += 2) {
    edges.push_back({order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i + 1)],
                     uniform(rng, lo, W)});
  }
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (coin(rng, density)) edges.push_back({u, v, uniform(rng, lo, W)});
    }
  }
  return algraph::Graph(false, n, std::move(edges), W);
}

}  // namespace support
