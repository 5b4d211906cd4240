#include "algraph/cycles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "algraph/distances.hpp"
#include "algraph/encode.hpp"
#include "algraph/errors.hpp"
#include "algraph/matching.hpp"
#include "algraph/polymatrix.hpp"
#include "algraph/rng.hpp"
#include "paths.hpp"

namespace algraph {

namespace {

double error_bound(std::size_t tests, std::size_t degree, const PrimeField& f) {
  return static_cast<double>(tests) * static_cast<double>(degree) /
         static_cast<double>(f.modulus());
}

std::size_t index(std::size_t x) { return x; }
std::size_t index(int x) { return static_cast<std::size_t>(x); }

/// Directed matrix (A + I) y^W at one substitution.
PolyMatrix directed_matrix(const PrimeField& f, const Graph& g, u64 seed) {
  PolyMatrix m = encode_directed(f, g, seed);
  m.add_identity(f, static_cast<int>(g.W()));
  return m;
}

/// Lowest degree of det - y^(nW), un-shifted; nullopt when it vanishes.
std::optional<std::int64_t> cycle_packing_degree(const PrimeField& f, const Graph& g,
                                                 FieldPoly det) {
  const std::int64_t base = g.n() * g.W();
  if (det.coeffs.size() <= index(static_cast<std::size_t>(base))) {
    det.coeffs.resize(static_cast<std::size_t>(base) + 1);
  }
  det.coeffs[static_cast<std::size_t>(base)] =
      f.sub(det.coeffs[static_cast<std::size_t>(base)], f.one());
  auto low = det.lowest_degree();
  if (!low) return std::nullopt;
  return *low - base;
}

/// Antisymmetric derivative x_a d/dx_a - x_b d/dx_b of the prefix-summed
/// coefficient at `level`.
FieldElement antisymmetric(const PrimeField& f, const PolyMatrix& m,
                           const CoefficientGradients& cg, VarId a, VarId b, std::int64_t level) {
  if (level < 0) return FieldElement{};
  int d = static_cast<int>(std::min<std::int64_t>(level, cg.max_degree()));
  FieldElement ga = f.mul(m.variable(a).value, cg.partial(a, d, true));
  FieldElement gb = f.mul(m.variable(b).value, cg.partial(b, d, true));
  return f.sub(ga, gb);
}

/// Smallest c in [lo, hi] with pred(c), assuming pred is monotone; nullopt
/// if pred(hi) fails.
template <typename Pred>
std::optional<std::int64_t> smallest_true(std::int64_t lo, std::int64_t hi, Pred pred,
                                          std::size_t& tests) {
  ++tests;
  if (lo > hi || !pred(hi)) return std::nullopt;
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    ++tests;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

void check_certificate(const Graph& g, const CycleResult& r) {
  if (!verify_cycle(g, r.cycle, r.weight)) {
    throw ConsistencyFailure("extracted cycle failed verification");
  }
}

// ---- undirected, nonnegative ---------------------------------------------

struct UndirectedSample {
  PolyMatrix m;
  std::optional<CoefficientGradients> cg;
};

FieldElement undirected_delta(const PrimeField& f, const Graph& g, const UndirectedSample& s,
                              const Edge& e, std::int64_t c) {
  const std::size_t n = index(g.n());
  VarId a = pair_var(n, index(e.u - 1), index(e.v - 1));
  VarId b = pair_var(n, index(e.v - 1), index(e.u - 1));
  return antisymmetric(f, s.m, *s.cg, a, b, c);
}

// ---- split graph -----------------------------------------------------------

struct SplitSample {
  SplitGraph split;
  PolyMatrix m;
  std::optional<CoefficientGradients> cg;
  std::int64_t min_pm = 0;
  std::int64_t offset = 0;  // n'' W
};

/// nullopt status means the graph has a negative cycle.
std::optional<SplitSample> split_sample(const PrimeField& f, const Graph& g, u64 seed,
                                        GradientBackend backend) {
  SplitSample s;
  try {
    s.split = build_split_graph(g);
  } catch (const NegativeCycleInNegativeEdges&) {
    return std::nullopt;
  }
  s.m = encode_tutte(f, s.split.graph, seed, g.W());
  s.cg.emplace(f, s.m, backend);
  auto low = s.cg->determinant().lowest_degree();
  if (!low) throw SingularEverywhere();
  s.offset = s.split.graph.n() * g.W();
  s.min_pm = (*low - s.offset) / 2;
  if (s.min_pm < 0) return std::nullopt;
  return s;
}

FieldElement split_delta(const PrimeField& f, const SplitSample& s, const Edge& e,
                         std::int64_t c) {
  const std::size_t nn = index(s.split.graph.n());
  auto var = [&](int a, int b) {
    return pair_var(nn, index(std::min(a, b) - 1), index(std::max(a, b) - 1));
  };
  VarId a = var(s.split.copy(e.u, 1), s.split.copy(e.v, 2));
  VarId b = var(s.split.copy(e.u, 2), s.split.copy(e.v, 1));
  return antisymmetric(f, s.m, *s.cg, a, b, c + s.offset);
}

/// Shortest u-v path of g avoiding edge uv, decoded from a minimum perfect
/// matching of the split graph without u1, v2 and the edge u2v1.
std::vector<int> split_path(const SplitSample& s, int u, int v, const Options& opts) {
  const SplitGraph& sp = s.split;
  const int drop1 = sp.copy(u, 1), drop2 = sp.copy(v, 2);
  const int keep_u = sp.copy(u, 2), keep_v = sp.copy(v, 1);
  std::vector<int> local(index(sp.graph.n()) + 1, 0), global;
  for (int x = 1; x <= sp.graph.n(); ++x) {
    if (x == drop1 || x == drop2) continue;
    global.push_back(x);
    local[index(x)] = static_cast<int>(global.size());
  }
  std::vector<Edge> edges;
  for (const Edge& e : sp.graph.edges()) {
    int a = local[index(e.u)], b = local[index(e.v)];
    if (!a || !b) continue;
    if ((e.u == keep_u && e.v == keep_v) || (e.u == keep_v && e.v == keep_u)) continue;
    edges.push_back({a, b, e.w});
  }
  Graph reduced(false, static_cast<int>(global.size()), std::move(edges), sp.graph.W());
  Matching mm = mwpm(reduced, opts);

  std::map<int, int> mate;
  for (const Edge& e : mm.edges) {
    int a = global[index(e.u - 1)], b = global[index(e.v - 1)];
    mate[a] = b;
    mate[b] = a;
  }
  std::vector<int> walk{u};
  int cur = keep_u;
  for (int steps = 0; steps <= sp.graph.n(); ++steps) {
    int x = mate.at(cur);
    if (!sp.is_vertex_copy(x)) x = mate.at(sp.twin(x));  // pass through e1 e2
    int b = sp.base_vertex(x);
    walk.push_back(b);
    if (b == v) return walk;
    cur = sp.twin(x);
  }
  throw ConsistencyFailure("split-graph matching does not decode to a path");
}

}  // namespace

bool verify_cycle(const Graph& g, const std::vector<int>& cycle, std::int64_t weight) {
  const std::size_t k = cycle.size();
  if (k < (g.directed() ? 2u : 3u)) return false;
  std::set<int> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != k) return false;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    int a = cycle[i], b = cycle[(i + 1) % k];
    bool found = false;
    for (const Edge& e : g.edges()) {
      if ((e.u == a && e.v == b) || (!g.directed() && e.u == b && e.v == a)) {
        total += e.w;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return total == weight;
}

CycleResult directed_cycle_weight(const Graph& g, const Options& opts) {
  if (!g.directed()) throw std::invalid_argument("directed_cycle_weight needs a directed graph");
  CycleResult r;
  if (g.n() == 0) return r;
  PrimeField f(opts.prime);
  PolyMatrix m = directed_matrix(f, g, derive_seed(opts.seed, "directed_cycle_weight"));
  auto d = cycle_packing_degree(f, g, det_poly(f, m).coeffs);
  r.error_bound = error_bound(1, index(g.n()), f);
  if (!d) return r;
  r.weight = *d;
  r.status = *d < 0 ? CycleStatus::NegativeCycle : CycleStatus::Found;
  return r;
}

CycleResult directed_cycle(const Graph& g, const Options& opts) {
  if (!g.directed()) throw std::invalid_argument("directed_cycle needs a directed graph");
  CycleResult r;
  if (g.n() == 0) return r;
  PrimeField f(opts.prime);
  const std::size_t n = index(g.n());
  const u64 base = derive_seed(opts.seed, "directed_cycle");
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    PolyMatrix m = directed_matrix(f, g, derive_seed(base, static_cast<u64>(attempt)));
    std::optional<CoefficientGradients> cg;
    try {
      cg.emplace(f, m, opts.backend);
    } catch (const SingularEverywhere&) {
      continue;
    }
    auto d = cycle_packing_degree(f, g, cg->determinant());
    r.error_bound = error_bound(2, n, f);
    r.reseeds = attempt;
    if (!d) {
      r.status = CycleStatus::NoCycle;
      return r;
    }
    r.weight = *d;
    if (*d < 0) {
      r.status = CycleStatus::NegativeCycle;
      return r;
    }
    const int level = static_cast<int>(*d + g.n() * g.W());
    for (const Edge& e : g.edges()) {
      VarId id = pair_var(n, index(e.u - 1), index(e.v - 1));
      if (cg->partial(id, level, false).is_zero()) continue;
      auto back = detail::bellman_ford_path(g, e.v, e.u);
      if (!back) throw ConsistencyFailure("allowed edge has no closing path");
      r.status = CycleStatus::Found;
      r.certificate = e;
      r.cycle.push_back(e.u);
      r.cycle.insert(r.cycle.end(), back->vertices.begin(), back->vertices.end() - 1);
      check_certificate(g, r);
      return r;
    }
  }
  throw NoAllowedEdge();
}

CycleResult undirected_cycle_weight(const Graph& g, const Options& opts) {
  if (g.directed()) throw std::invalid_argument("undirected_cycle_weight needs an undirected graph");
  if (g.has_negative_edge()) return undirected_negative_cycle_weight(g, opts);
  CycleResult r = undirected_cycle(g, opts);
  r.cycle.clear();
  r.certificate.reset();
  return r;
}

CycleResult undirected_cycle(const Graph& g, const Options& opts) {
  if (g.directed()) throw std::invalid_argument("undirected_cycle needs an undirected graph");
  if (g.has_negative_edge()) return undirected_negative_cycle(g, opts);
  CycleResult r;
  if (g.n() == 0 || g.edges().empty()) return r;
  PrimeField f(opts.prime);
  const u64 base = derive_seed(opts.seed, "undirected_cycle");
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    UndirectedSample s{encode_undirected_bidirected(f, g, derive_seed(base, static_cast<u64>(attempt))), {}};
    s.m.add_identity(f, 0);
    try {
      s.cg.emplace(f, s.m, opts.backend);
    } catch (const SingularEverywhere&) {
      continue;
    }
    auto pred = [&](std::int64_t c) {
      return std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return !undirected_delta(f, g, s, e, c).is_zero();
      });
    };
    std::size_t tests = 0;
    auto c = smallest_true(0, g.n() * g.W(), pred, tests);
    r.error_bound = error_bound(tests * g.edges().size(), index(g.n()), f);
    r.reseeds = attempt;
    if (!c) {
      r.status = CycleStatus::NoCycle;
      return r;
    }
    r.status = CycleStatus::Found;
    r.weight = *c;
    for (const Edge& e : g.edges()) {
      if (undirected_delta(f, g, s, e, *c).is_zero()) continue;
      auto back = detail::dijkstra_path(g, e.v, e.u, e.u, e.v);
      if (!back) throw ConsistencyFailure("allowed edge has no closing path");
      r.certificate = e;
      r.cycle.push_back(e.u);
      r.cycle.insert(r.cycle.end(), back->vertices.begin(), back->vertices.end() - 1);
      check_certificate(g, r);
      return r;
    }
    throw ConsistencyFailure("binary search threshold has no witnessing edge");
  }
  throw NoAllowedEdge();
}

CycleResult undirected_negative_cycle_weight(const Graph& g, const Options& opts) {
  CycleResult r = undirected_negative_cycle(g, opts);
  r.cycle.clear();
  r.certificate.reset();
  return r;
}

CycleResult undirected_negative_cycle(const Graph& g, const Options& opts) {
  if (g.directed()) throw std::invalid_argument("undirected_negative_cycle needs an undirected graph");
  CycleResult r;
  if (g.n() == 0 || g.edges().empty()) return r;
  PrimeField f(opts.prime);
  const u64 base = derive_seed(opts.seed, "undirected_negative_cycle");
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    const u64 seed = derive_seed(base, static_cast<u64>(attempt));
    std::optional<SplitSample> s;
    try {
      s = split_sample(f, g, seed, opts.backend);
    } catch (const SingularEverywhere&) {
      continue;
    }
    r.reseeds = attempt;
    if (!s) {
      r.status = CycleStatus::NegativeCycle;
      r.error_bound = error_bound(1, index(g.n()) * 4, f);
      return r;
    }
    std::vector<Edge> nonneg;
    for (const Edge& e : g.edges()) {
      if (e.w >= 0) nonneg.push_back(e);
    }
    auto pred = [&](std::int64_t c) {
      return std::any_of(nonneg.begin(), nonneg.end(),
                         [&](const Edge& e) { return !split_delta(f, *s, e, c).is_zero(); });
    };
    std::size_t tests = 0;
    auto c = smallest_true(0, g.n() * g.W(), pred, tests);
    r.error_bound = error_bound(tests * nonneg.size() + 1, index(s->split.graph.n()), f);
    if (!c) {
      r.status = CycleStatus::NoCycle;
      return r;
    }
    r.status = CycleStatus::Found;
    r.weight = *c;
    for (const Edge& e : nonneg) {
      if (split_delta(f, *s, e, *c).is_zero()) continue;
      Options sub = opts;
      sub.seed = derive_seed(seed, "closing_matching");
      std::vector<int> walk = split_path(*s, e.u, e.v, sub);
      r.certificate = e;
      r.cycle = walk;
      check_certificate(g, r);
      return r;
    }
    throw ConsistencyFailure("binary search threshold has no witnessing edge");
  }
  throw NoAllowedEdge();
}

CycleResult shortest_cycle_weight(const Graph& g, const Options& opts) {
  return g.directed() ? directed_cycle_weight(g, opts) : undirected_cycle_weight(g, opts);
}

CycleResult shortest_cycle(const Graph& g, const Options& opts) {
  if (g.directed()) {
    CycleResult w = directed_cycle_weight(g, opts);
    if (w.status != CycleStatus::Found) return w;
    return directed_cycle(g, opts);
  }
  return undirected_cycle(g, opts);
}

bool has_negative_cycle(const Graph& g, const Options& opts) {
  if (g.directed()) return directed_cycle_weight(g, opts).status == CycleStatus::NegativeCycle;
  if (!g.has_negative_edge()) return false;
  PrimeField f(opts.prime);
  const u64 base = derive_seed(opts.seed, "negative_cycle");
  for (int attempt = 0;; ++attempt) {
    try {
      return !split_sample(f, g, derive_seed(base, static_cast<u64>(attempt)), opts.backend)
                  .has_value();
    } catch (const SingularEverywhere&) {
      if (attempt + 1 >= opts.max_attempts) throw;
    }
  }
}

std::vector<int> vertices_on_short_cycles(const Graph& g, std::int64_t t, const Options& opts) {
  std::set<int> out;
  if (g.n() == 0) return {};
  PrimeField f(opts.prime);
  const std::size_t n = index(g.n());
  const u64 base = derive_seed(opts.seed, "vertices_on_short_cycles");

  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    const u64 seed = derive_seed(base, static_cast<u64>(attempt));
    try {
      if (g.directed()) {
        PolyMatrix m = directed_matrix(f, g, seed);
        CoefficientGradients cg(f, m, opts.backend);
        auto d = cycle_packing_degree(f, g, cg.determinant());
        if (d && *d < 0) throw NegativeCycle();
        const std::int64_t level = t + g.n() * g.W();
        if (!d || level < 0) return {};
        int lv = static_cast<int>(std::min<std::int64_t>(level, cg.max_degree()));
        for (const Edge& e : g.edges()) {
          if (!cg.partial(pair_var(n, index(e.u - 1), index(e.v - 1)), lv, true).is_zero()) {
            out.insert(e.u);
            out.insert(e.v);
          }
        }
      } else if (!g.has_negative_edge()) {
        UndirectedSample s{encode_undirected_bidirected(f, g, seed), {}};
        s.m.add_identity(f, 0);
        s.cg.emplace(f, s.m, opts.backend);
        for (const Edge& e : g.edges()) {
          if (!undirected_delta(f, g, s, e, t).is_zero()) {
            out.insert(e.u);
            out.insert(e.v);
          }
        }
      } else {
        auto s = split_sample(f, g, seed, opts.backend);
        if (!s) throw NegativeCycle();
        for (const Edge& e : g.edges()) {
          if (e.w >= 0) {
            if (!split_delta(f, *s, e, t).is_zero()) {
              out.insert(e.u);
              out.insert(e.v);
            }
            continue;
          }
          // A negative edge lies on a cycle of weight w(e) + dist_{G-e}(u, v);
          // its endpoints may have no nonnegative edge on that cycle.
          if (out.count(e.u) && out.count(e.v)) continue;
          Graph rest = g.filtered([&](const Edge& x) { return !(x.u == e.u && x.v == e.v); });
          Options sub = opts;
          sub.seed = derive_seed(seed, static_cast<u64>(e.u) * n + static_cast<u64>(e.v));
          Distance d = undirected_negative_distance(rest, e.u, e.v, sub);
          if (d && e.w + *d <= t) {
            out.insert(e.u);
            out.insert(e.v);
          }
        }
      }
      return {out.begin(), out.end()};
    } catch (const SingularEverywhere&) {
      out.clear();
    }
  }
  throw NoAllowedEdge();
}

}  // namespace algraph
