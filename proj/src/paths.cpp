#include "paths.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

namespace algraph::detail {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

std::optional<Path> unwind(const std::vector<std::int64_t>& dist, const std::vector<int>& pred,
                           int s, int t) {
  if (dist[static_cast<std::size_t>(t)] == kInf) return std::nullopt;
  Path p;
  p.weight = dist[static_cast<std::size_t>(t)];
  for (int v = t; v != s; v = pred[static_cast<std::size_t>(v)]) {
    p.vertices.push_back(v);
    if (p.vertices.size() > dist.size()) return std::nullopt;  // predecessor loop
  }
  p.vertices.push_back(s);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

}  // namespace

std::optional<Path> bellman_ford_path(const Graph& g, int s, int t) {
  const std::size_t n = static_cast<std::size_t>(g.n()) + 1;
  std::vector<std::int64_t> dist(n, kInf);
  std::vector<int> pred(n, 0);
  dist[static_cast<std::size_t>(s)] = 0;
  for (std::size_t round = 1; round < n; ++round) {
    bool changed = false;
    auto relax = [&](int a, int b, std::int64_t w) {
      if (dist[static_cast<std::size_t>(a)] == kInf) return;
      if (dist[static_cast<std::size_t>(a)] + w < dist[static_cast<std::size_t>(b)]) {
        dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + w;
        pred[static_cast<std::size_t>(b)] = a;
        changed = true;
      }
    };
    for (const Edge& e : g.edges()) {
      relax(e.u, e.v, e.w);
      if (!g.directed()) relax(e.v, e.u, e.w);
    }
    if (!changed) break;
  }
  return unwind(dist, pred, s, t);
}

std::optional<Path> dijkstra_path(const Graph& g, int s, int t, int skip_u, int skip_v) {
  const std::size_t n = static_cast<std::size_t>(g.n()) + 1;
  std::vector<std::vector<std::pair<int, std::int64_t>>> adj(n);
  for (const Edge& e : g.edges()) {
    if ((e.u == skip_u && e.v == skip_v) || (e.u == skip_v && e.v == skip_u)) continue;
    adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.w});
    adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.w});
  }
  std::vector<std::int64_t> dist(n, kInf);
  std::vector<int> pred(n, 0);
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[static_cast<std::size_t>(s)] = 0;
  heap.push({0, s});
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d != dist[static_cast<std::size_t>(v)]) continue;
    for (auto [to, w] : adj[static_cast<std::size_t>(v)]) {
      if (d + w < dist[static_cast<std::size_t>(to)]) {
        dist[static_cast<std::size_t>(to)] = d + w;
        pred[static_cast<std::size_t>(to)] = v;
        heap.push({d + w, to});
      }
    }
  }
  return unwind(dist, pred, s, t);
}

}  // namespace algraph::detail
