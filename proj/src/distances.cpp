#include "algraph/distances.hpp"

#include <algorithm>
#include <stdexcept>

#include "algraph/cycles.hpp"
#include "algraph/encode.hpp"
#include "algraph/errors.hpp"
#include "algraph/polymatrix.hpp"
#include "algraph/rng.hpp"

namespace algraph {

namespace {

void require_no_directed_negative_cycle(const Graph& g, const Options& opts) {
  if (directed_cycle_weight(g, opts).status == CycleStatus::NegativeCycle) throw NegativeCycle();
}

/// Split graph plus the check that its minimum perfect matching is not
/// negative (which would mean a negative cycle in g).
SplitGraph checked_split(const PrimeField& f, const Graph& g, u64 seed) {
  SplitGraph s;
  try {
    s = build_split_graph(g);
  } catch (const NegativeCycleInNegativeEdges&) {
    throw NegativeCycle();
  }
  if (s.negative_edges.empty()) return s;
  PolyMatrix m = encode_tutte(f, s.graph, seed, g.W());
  DegreeReport det = det_poly(f, m);
  const std::int64_t nn = s.graph.n();
  if (det.lowest_degree && *det.lowest_degree < nn * g.W()) throw NegativeCycle();
  return s;
}

template <typename Body>
auto with_reseed(const Options& opts, const char* tag, Body body) {
  const u64 base = derive_seed(opts.seed, tag);
  for (int attempt = 0;; ++attempt) {
    try {
      return body(derive_seed(base, static_cast<u64>(attempt)));
    } catch (const SingularEverywhere&) {
      if (attempt + 1 >= opts.max_attempts) throw;
    }
  }
}

/// within[i * n + j]: is dist(i, j) <= c, read from probe gradients.
std::vector<char> probe_within(const Graph& g, std::int64_t c, const Options& opts) {
  const int n = g.n();
  std::vector<char> within(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) within[static_cast<std::size_t>(i * n + i)] = c >= 0;
  if (n <= 1) return within;
  PrimeField f(opts.prime);
  const std::size_t N = static_cast<std::size_t>(n);

  if (g.directed() || !g.has_negative_edge()) {
    Graph d = g.directed() ? g : g.bidirected();
    require_no_directed_negative_cycle(d, opts);
    return with_reseed(opts, "check_distance", [&](u64 seed) {
      PolyMatrix m = encode_directed(f, d, seed);
      m.add_identity(f, static_cast<int>(d.W()));
      // Probe z_{j,i} sits at entry (j, i); its derivative is adj_{i,j} y^W.
      for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
          if (i != j) m.add_probe(N * N + i * N + j, j, i, static_cast<int>(d.W()));
        }
      }
      CoefficientGradients cg(f, m, opts.backend);
      const std::int64_t level = c + n * d.W();
      for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
          if (i == j || level < 0) continue;
          within[i * N + j] =
              !cg.partial(N * N + i * N + j, static_cast<int>(level), true).is_zero();
        }
      }
      return within;
    });
  }

  return with_reseed(opts, "check_distance_split", [&](u64 seed) {
    SplitGraph s = checked_split(f, g, derive_seed(seed, "mpm"));
    const std::size_t nn = static_cast<std::size_t>(s.graph.n());
    PolyMatrix m = encode_tutte(f, s.graph, seed, g.W());
    for (int u = 1; u <= n; ++u) {
      for (int v = 1; v <= n; ++v) {
        if (u == v) continue;
        std::size_t r = static_cast<std::size_t>(s.copy(v, 1) - 1);
        std::size_t col = static_cast<std::size_t>(s.copy(u, 2) - 1);
        m.add_probe(nn * nn + static_cast<std::size_t>((u - 1) * n + (v - 1)), r, col,
                    static_cast<int>(g.W()));
      }
    }
    CoefficientGradients cg(f, m, opts.backend);
    const std::int64_t level = c + static_cast<std::int64_t>(nn) * g.W();
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        if (i == j || level < 0) continue;
        within[i * N + j] =
            !cg.partial(nn * nn + i * N + j, static_cast<int>(level), true).is_zero();
      }
    }
    return within;
  });
}

}  // namespace

DistanceMatrix directed_distances(const Graph& g, const Options& opts) {
  if (!g.directed()) throw std::invalid_argument("directed_distances needs a directed graph");
  const int n = g.n();
  DistanceMatrix out{n, std::vector<Distance>(static_cast<std::size_t>(n * n))};
  if (n == 0) return out;
  require_no_directed_negative_cycle(g, opts);
  PrimeField f(opts.prime);
  return with_reseed(opts, "directed_distances", [&](u64 seed) {
    PolyMatrix m = encode_directed(f, g, seed);
    m.add_identity(f, static_cast<int>(g.W()));
    auto adj = adjugate_degree_matrix(f, m);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::size_t k = static_cast<std::size_t>(i * n + j);
        if (i == j) {
          out.d[k] = 0;
        } else if (adj[k]) {
          out.d[k] = *adj[k] - (n - 1) * g.W();
        }
      }
    }
    return out;
  });
}

DistanceMatrix undirected_negative_distances(const Graph& g, const Options& opts) {
  if (g.directed()) throw std::invalid_argument("undirected_negative_distances needs an undirected graph");
  const int n = g.n();
  DistanceMatrix out{n, std::vector<Distance>(static_cast<std::size_t>(n * n))};
  if (n == 0) return out;
  PrimeField f(opts.prime);
  return with_reseed(opts, "split_distances", [&](u64 seed) {
    SplitGraph s = checked_split(f, g, derive_seed(seed, "mpm"));
    const std::int64_t nn = s.graph.n();
    PolyMatrix m = encode_tutte(f, s.graph, seed, g.W());
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        entries.emplace_back(static_cast<std::size_t>(s.copy(u, 2) - 1),
                             static_cast<std::size_t>(s.copy(v, 1) - 1));
      }
    }
    auto adj = adjugate_degrees(f, m, entries);
    std::size_t k = 0;
    for (int u = 1; u <= n; ++u) {
      out.d[static_cast<std::size_t>((u - 1) * n + (u - 1))] = 0;
      for (int v = u + 1; v <= n; ++v, ++k) {
        if (!adj[k]) continue;
        std::int64_t dist = *adj[k] - (nn - 1) * g.W();
        out.d[static_cast<std::size_t>((u - 1) * n + (v - 1))] = dist;
        out.d[static_cast<std::size_t>((v - 1) * n + (u - 1))] = dist;
      }
    }
    return out;
  });
}

Distance undirected_negative_distance(const Graph& g, int u, int v, const Options& opts) {
  if (g.directed()) throw std::invalid_argument("undirected_negative_distance needs an undirected graph");
  if (u == v) return 0;
  PrimeField f(opts.prime);
  return with_reseed(opts, "split_distance", [&](u64 seed) -> Distance {
    SplitGraph s = checked_split(f, g, derive_seed(seed, "mpm"));
    const std::int64_t nn = s.graph.n();
    PolyMatrix m = encode_tutte(f, s.graph, seed, g.W());
    auto adj = adjugate_degrees(f, m,
                                {{static_cast<std::size_t>(s.copy(u, 2) - 1),
                                  static_cast<std::size_t>(s.copy(v, 1) - 1)}});
    if (!adj[0]) return std::nullopt;
    return *adj[0] - (nn - 1) * g.W();
  });
}

DistanceMatrix distances(const Graph& g, const Options& opts) {
  if (g.directed()) return directed_distances(g, opts);
  if (!g.has_negative_edge()) return directed_distances(g.bidirected(), opts);
  return undirected_negative_distances(g, opts);
}

std::vector<Distance> eccentricities(const DistanceMatrix& m) {
  std::vector<Distance> ecc(static_cast<std::size_t>(m.n));
  for (int i = 1; i <= m.n; ++i) {
    Distance best = 0;
    for (int j = 1; j <= m.n && best; ++j) {
      Distance d = m.at(i, j);
      best = d ? Distance{std::max(*best, *d)} : Distance{};
    }
    ecc[static_cast<std::size_t>(i - 1)] = best;
  }
  return ecc;
}

Distance diameter(const DistanceMatrix& m) {
  Distance out = 0;
  for (Distance e : eccentricities(m)) {
    if (!e) return std::nullopt;
    out = std::max(*out, *e);
  }
  return out;
}

Distance radius(const DistanceMatrix& m) {
  Distance out;
  for (Distance e : eccentricities(m)) {
    if (e && (!out || *e < *out)) out = e;
  }
  if (m.n == 0) return 0;
  return out;
}

std::vector<Distance> eccentricities(const Graph& g, const Options& opts) {
  return eccentricities(distances(g, opts));
}
Distance diameter(const Graph& g, const Options& opts) { return diameter(distances(g, opts)); }
Distance radius(const Graph& g, const Options& opts) { return radius(distances(g, opts)); }

bool check_diameter_at_most(const Graph& g, std::int64_t c, const Options& opts) {
  if (c < 0) {
    // Still surfaces NegativeCycle consistently with the other entry points.
    probe_within(g, 0, opts);
    return false;
  }
  auto within = probe_within(g, c, opts);
  return std::all_of(within.begin(), within.end(), [](char x) { return x != 0; });
}

bool check_radius_at_most(const Graph& g, std::int64_t c, const Options& opts) {
  if (c < 0) {
    probe_within(g, 0, opts);
    return false;
  }
  auto within = probe_within(g, c, opts);
  const std::size_t n = static_cast<std::size_t>(g.n());
  if (n == 0) return true;
  for (std::size_t i = 0; i < n; ++i) {
    bool all = true;
    for (std::size_t j = 0; j < n; ++j) all = all && within[i * n + j];
    if (all) return true;
  }
  return false;
}

}  // namespace algraph
