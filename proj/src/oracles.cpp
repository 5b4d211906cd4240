#include "algraph/oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include <json.hpp>

#include "algraph/errors.hpp"

namespace algraph::oracle {

namespace {

struct Arc {
  int from, to;
  std::int64_t w;
};

std::vector<Arc> arcs_of(const Graph& g) {
  std::vector<Arc> arcs;
  for (const Edge& e : g.edges()) {
    arcs.push_back({e.u - 1, e.v - 1, e.w});
    if (!g.directed()) arcs.push_back({e.v - 1, e.u - 1, e.w});
  }
  return arcs;
}

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

}  // namespace

std::optional<std::vector<Dist>> bellman_ford(const Graph& g, int s) {
  const int n = g.n();
  std::vector<std::int64_t> d(static_cast<std::size_t>(n), kInf);
  d[static_cast<std::size_t>(s - 1)] = 0;
  auto arcs = arcs_of(g);
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (const Arc& a : arcs) {
      std::int64_t from = d[static_cast<std::size_t>(a.from)];
      if (from == kInf) continue;
      if (from + a.w < d[static_cast<std::size_t>(a.to)]) {
        d[static_cast<std::size_t>(a.to)] = from + a.w;
        changed = true;
      }
    }
    if (!changed) break;
    if (round == n - 1) return std::nullopt;  // still relaxing after n rounds
  }
  std::vector<Dist> out;
  for (std::int64_t x : d) out.push_back(x == kInf ? Dist{} : Dist{x});
  return out;
}

AllPairs floyd_warshall(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.n());
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Arc& a : arcs_of(g)) {
    auto& cell = d[static_cast<std::size_t>(a.from)][static_cast<std::size_t>(a.to)];
    cell = std::min(cell, a.w);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d[k][j] == kInf) continue;
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  AllPairs out;
  out.dist.assign(n, std::vector<Dist>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i][i] < 0) out.negative_cycle = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] != kInf) out.dist[i][j] = d[i][j];
    }
  }
  return out;
}

std::vector<std::vector<Dist>> simple_path_distances(const Graph& g) {
  if (g.n() > 10) throw TooLarge("simple_path_distances supports n <= 10");
  const int n = g.n();
  auto arcs = arcs_of(g);
  std::vector<std::vector<std::pair<int, std::int64_t>>> out_arcs(static_cast<std::size_t>(n));
  for (const Arc& a : arcs) out_arcs[static_cast<std::size_t>(a.from)].push_back({a.to, a.w});
  std::vector<std::vector<Dist>> dist(static_cast<std::size_t>(n),
                                      std::vector<Dist>(static_cast<std::size_t>(n)));
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    auto& row = dist[static_cast<std::size_t>(s)];
    std::function<void(int, std::int64_t)> dfs = [&](int v, std::int64_t len) {
      auto& cell = row[static_cast<std::size_t>(v)];
      if (!cell || len < *cell) cell = len;
      on_path[static_cast<std::size_t>(v)] = 1;
      for (auto [t, w] : out_arcs[static_cast<std::size_t>(v)]) {
        if (!on_path[static_cast<std::size_t>(t)]) dfs(t, len + w);
      }
      on_path[static_cast<std::size_t>(v)] = 0;
    };
    dfs(s, 0);
    row[static_cast<std::size_t>(s)] = 0;
  }
  return dist;
}

std::vector<Cycle> enumerate_cycles(const Graph& g, std::optional<int> max_len) {
  if (g.n() > 12) throw TooLarge("enumerate_cycles supports n <= 12");
  const int n = g.n();
  const int limit = max_len.value_or(n);
  auto arcs = arcs_of(g);
  std::vector<std::vector<std::pair<int, std::int64_t>>> out_arcs(static_cast<std::size_t>(n));
  for (const Arc& a : arcs) out_arcs[static_cast<std::size_t>(a.from)].push_back({a.to, a.w});

  std::vector<Cycle> cycles;
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  const int min_len = g.directed() ? 2 : 3;
  // The cycle's smallest vertex is its start; undirected cycles are kept in
  // the orientation whose second vertex is smaller than its last.
  for (int s = 0; s < n; ++s) {
    std::function<void(int, std::int64_t)> dfs = [&](int v, std::int64_t len) {
      for (auto [t, w] : out_arcs[static_cast<std::size_t>(v)]) {
        if (t == s) {
          int k = static_cast<int>(path.size());
          if (k >= min_len && (g.directed() || path[1] < path.back())) {
            Cycle c{len + w, {}};
            for (int x : path) c.vertices.push_back(x + 1);
            cycles.push_back(std::move(c));
          }
          continue;
        }
        if (t < s || on_path[static_cast<std::size_t>(t)]) continue;
        if (static_cast<int>(path.size()) >= limit) continue;
        on_path[static_cast<std::size_t>(t)] = 1;
        path.push_back(t);
        dfs(t, len + w);
        path.pop_back();
        on_path[static_cast<std::size_t>(t)] = 0;
      }
    };
    path.assign(1, s);
    on_path[static_cast<std::size_t>(s)] = 1;
    dfs(s, 0);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const Cycle& a, const Cycle& b) { return a.weight < b.weight; });
  return cycles;
}

std::vector<Dist> min_cycle_through_vertex(const Graph& g) {
  std::vector<Dist> best(static_cast<std::size_t>(g.n()));
  for (const Cycle& c : enumerate_cycles(g)) {
    for (int v : c.vertices) {
      auto& cell = best[static_cast<std::size_t>(v - 1)];
      if (!cell || c.weight < *cell) cell = c.weight;
    }
  }
  return best;
}

namespace {

std::vector<std::vector<std::optional<std::int64_t>>> weight_table(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.n());
  std::vector<std::vector<std::optional<std::int64_t>>> w(
      n, std::vector<std::optional<std::int64_t>>(n));
  for (const Edge& e : g.edges()) {
    w[static_cast<std::size_t>(e.u - 1)][static_cast<std::size_t>(e.v - 1)] = e.w;
    w[static_cast<std::size_t>(e.v - 1)][static_cast<std::size_t>(e.u - 1)] = e.w;
  }
  return w;
}

}  // namespace

MatchingFacts matching_dp(const Graph& g) {
  if (g.n() > 16) throw TooLarge("matching_dp supports n <= 16");
  const int n = g.n();
  auto w = weight_table(g);
  const std::size_t full = (std::size_t{1} << n) - 1;
  // best[mask], second[mask]: two smallest elements of the multiset of
  // perfect-matching weights on the vertex set `mask`.
  std::vector<std::int64_t> best(full + 1, kInf), second(full + 1, kInf);
  std::vector<std::uint64_t> count(full + 1, 0);
  best[0] = 0;
  count[0] = 1;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if (__builtin_popcountll(mask) % 2) continue;
    int i = __builtin_ctzll(mask);
    std::int64_t b1 = kInf, b2 = kInf;
    auto offer = [&](std::int64_t x) {
      if (x < b1) {
        b2 = b1;
        b1 = x;
      } else if (x < b2) {
        b2 = x;
      }
    };
    for (int j = i + 1; j < n; ++j) {
      if (!(mask >> j & 1) || !w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
      std::size_t rest = mask & ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
      if (best[rest] == kInf) continue;
      std::int64_t wij = *w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      offer(wij + best[rest]);
      if (second[rest] != kInf) offer(wij + second[rest]);
      count[mask] += count[rest];
    }
    best[mask] = b1;
    second[mask] = b2;
  }

  MatchingFacts out;
  out.near.assign(static_cast<std::size_t>(n), std::nullopt);
  if (n % 2 == 0 && best[full] != kInf) {
    out.min_weight = best[full];
    if (second[full] != kInf) out.second = second[full];
    out.perfect_matchings = count[full];
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        auto wij = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (!wij) continue;
        std::size_t rest = full & ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
        if (best[rest] != kInf && *wij + best[rest] == best[full]) out.allowed.insert({i + 1, j + 1});
      }
    }
  }
  if (n % 2 == 0) {
    for (int v = 0; v < n; ++v) {
      for (int j = 0; j < n; ++j) {
        if (j == v) continue;
        std::size_t rest = full & ~(std::size_t{1} << v) & ~(std::size_t{1} << j);
        if (best[rest] == kInf) continue;
        auto& cell = out.near[static_cast<std::size_t>(v)];
        if (!cell || best[rest] < *cell) cell = best[rest];
      }
    }
  }
  return out;
}

MatchingFacts matching_enumerate(const Graph& g) {
  if (g.n() > 8) throw TooLarge("matching_enumerate supports n <= 8");
  const int n = g.n();
  auto w = weight_table(g);

  // All perfect matchings of `vertices`, as (weight, edges).
  using Found = std::pair<std::int64_t, std::vector<std::pair<int, int>>>;
  std::function<void(std::vector<int>, std::int64_t, std::vector<std::pair<int, int>>&,
                     std::vector<Found>&)>
      rec = [&](std::vector<int> vs, std::int64_t acc, std::vector<std::pair<int, int>>& cur,
                std::vector<Found>& sink) {
        if (vs.empty()) {
          sink.push_back({acc, cur});
          return;
        }
        int a = vs[0];
        for (std::size_t k = 1; k < vs.size(); ++k) {
          int b = vs[k];
          auto wab = w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
          if (!wab) continue;
          std::vector<int> rest;
          for (std::size_t t = 1; t < vs.size(); ++t) {
            if (t != k) rest.push_back(vs[t]);
          }
          cur.push_back({a + 1, b + 1});
          rec(rest, acc + *wab, cur, sink);
          cur.pop_back();
        }
      };

  MatchingFacts out;
  out.near.assign(static_cast<std::size_t>(n), std::nullopt);
  if (n % 2 == 1) return out;
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  std::vector<Found> found;
  std::vector<std::pair<int, int>> cur;
  rec(all, 0, cur, found);
  out.perfect_matchings = found.size();
  if (!found.empty()) {
    std::vector<std::int64_t> weights;
    for (auto& f : found) weights.push_back(f.first);
    std::sort(weights.begin(), weights.end());
    out.min_weight = weights[0];
    if (weights.size() > 1) out.second = weights[1];
    for (auto& f : found) {
      if (f.first == weights[0]) out.allowed.insert(f.second.begin(), f.second.end());
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int j = 0; j < n; ++j) {
      if (j == v) continue;
      std::vector<int> rest;
      for (int t = 0; t < n; ++t) {
        if (t != v && t != j) rest.push_back(t);
      }
      std::vector<Found> sub;
      rec(rest, 0, cur, sub);
      for (auto& f : sub) {
        auto& cell = out.near[static_cast<std::size_t>(v)];
        if (!cell || f.first < *cell) cell = f.first;
      }
    }
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["instance"] = instance;
  j["quantity"] = quantity;
  j["oracle"] = oracle_value;
  j["subject"] = subject_value;
  j["match"] = match();
  return j.dump();
}

}  // namespace algraph::oracle
