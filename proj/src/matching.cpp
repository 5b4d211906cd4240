#include "algraph/matching.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "algraph/errors.hpp"
#include "algraph/polymatrix.hpp"
#include "algraph/rng.hpp"

namespace algraph {

namespace {

using Adjacency = std::vector<std::vector<int>>;

/// Edmonds' blossom algorithm on 0-based adjacency lists; returns mate[] with
/// -1 for exposed vertices.
std::vector<int> edmonds(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> mate(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n)),
      base(static_cast<std::size_t>(n)), queue;
  std::vector<char> used(static_cast<std::size_t>(n)), in_blossom(static_cast<std::size_t>(n)),
      seen(static_cast<std::size_t>(n));
  auto at = [](auto& vec, int i) -> auto& { return vec[static_cast<std::size_t>(i)]; };

  auto lca = [&](int a, int b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (;;) {
      a = at(base, a);
      at(seen, a) = 1;
      if (at(mate, a) == -1) break;
      a = at(parent, at(mate, a));
    }
    for (;;) {
      b = at(base, b);
      if (at(seen, b)) return b;
      b = at(parent, at(mate, b));
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (at(base, v) != b) {
      at(in_blossom, at(base, v)) = 1;
      at(in_blossom, at(base, at(mate, v))) = 1;
      at(parent, v) = child;
      child = at(mate, v);
      v = at(parent, at(mate, v));
    }
  };
  auto find_path = [&](int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    queue.assign(1, root);
    at(used, root) = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int to : at(adj, v)) {
        if (at(base, v) == at(base, to) || at(mate, v) == to) continue;
        if (to == root || (at(mate, to) != -1 && at(parent, at(mate, to)) != -1)) {
          int b = lca(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n; ++i) {
            if (at(in_blossom, at(base, i))) {
              at(base, i) = b;
              if (!at(used, i)) {
                at(used, i) = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (at(parent, to) == -1) {
          at(parent, to) = v;
          if (at(mate, to) == -1) return to;
          at(used, at(mate, to)) = 1;
          queue.push_back(at(mate, to));
        }
      }
    }
    return -1;
  };

  for (int v = 0; v < n; ++v) {
    if (at(mate, v) != -1) continue;
    for (int u = find_path(v); u != -1;) {
      int pv = at(parent, u), next = at(mate, pv);
      at(mate, u) = pv;
      at(mate, pv) = u;
      u = next;
    }
  }
  return mate;
}

Adjacency adjacency_of(const Graph& g) {
  Adjacency adj(static_cast<std::size_t>(g.n()));
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u - 1)].push_back(e.v - 1);
    adj[static_cast<std::size_t>(e.v - 1)].push_back(e.u - 1);
  }
  return adj;
}

std::int64_t weight_of(const std::vector<Edge>& edges) {
  std::int64_t s = 0;
  for (const Edge& e : edges) s += e.w;
  return s;
}

bool has_perfect_matching(const Graph& g) {
  return g.n() % 2 == 0 && unweighted_perfect_matching(g).has_value();
}

/// Tutte determinant and its coefficient gradients at one substitution.
struct TutteSample {
  std::int64_t shift = 0;
  int lowest_degree = 0;
  FieldPoly det;
  std::vector<Edge> allowed;
};

std::optional<TutteSample> sample_tutte(const PrimeField& f, const Graph& g, u64 seed,
                                        GradientBackend backend) {
  TutteSample s;
  s.shift = tutte_shift(g);
  PolyMatrix m = encode_tutte(f, g, seed, s.shift);
  std::optional<CoefficientGradients> cg;
  try {
    cg.emplace(f, m, backend);
  } catch (const SingularEverywhere&) {
    return std::nullopt;
  }
  s.det = cg->determinant();
  auto low = s.det.lowest_degree();
  if (!low) return std::nullopt;
  s.lowest_degree = *low;
  const std::size_t n = static_cast<std::size_t>(g.n());
  for (const Edge& e : g.edges()) {
    VarId id = pair_var(n, static_cast<std::size_t>(e.u - 1), static_cast<std::size_t>(e.v - 1));
    if (!cg->partial(id, s.lowest_degree, false).is_zero()) s.allowed.push_back(e);
  }
  return s;
}

/// Relabels a vertex subset to 1..k and keeps the edges inside it.
struct Subgraph {
  Graph graph;
  std::vector<int> global;  // local id - 1 -> global id
};

Subgraph induced(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.n()) + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i) + 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int a = local[static_cast<std::size_t>(e.u)], b = local[static_cast<std::size_t>(e.v)];
    if (a && b) edges.push_back({a, b, e.w});
  }
  return {Graph(false, static_cast<int>(vertices.size()), std::move(edges), g.W()), vertices};
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.n()) + 1, -1);
  Adjacency adj = adjacency_of(g);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= g.n(); ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<int> members{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int t : adj[static_cast<std::size_t>(members[i] - 1)]) {
        if (comp[static_cast<std::size_t>(t + 1)] == -1) {
          comp[static_cast<std::size_t>(t + 1)] = static_cast<int>(out.size());
          members.push_back(t + 1);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<int> outermost(const BlossomForest& forest, const std::vector<int>& candidates) {
  std::vector<int> out;
  for (int i : candidates) {
    int p = forest.parent[static_cast<std::size_t>(i)];
    bool inner = std::find(candidates.begin(), candidates.end(), p) != candidates.end();
    if (!inner) out.push_back(i);
  }
  return out;
}

/// Recursive construction of a matching of `vertices` minus `exposed`
/// (0 for none), contracting the maximal blossoms among `blossoms`.
void complete(const Graph& g, const Adjacency& adj, const BlossomForest& forest,
              const std::vector<int>& vertices, const std::vector<int>& blossoms, int exposed,
              std::vector<Edge>& out) {
  std::vector<int> top = outermost(forest, blossoms);
  // Node per maximal blossom, then one per remaining vertex.
  std::map<int, int> node_of;
  std::vector<std::vector<int>> members;
  for (int b : top) {
    for (int v : forest.sets[static_cast<std::size_t>(b)]) node_of[v] = static_cast<int>(members.size());
    members.push_back(forest.sets[static_cast<std::size_t>(b)]);
  }
  for (int v : vertices) {
    if (!node_of.count(v)) {
      node_of[v] = static_cast<int>(members.size());
      members.push_back({v});
    }
  }
  const int skip = exposed ? node_of.at(exposed) : -1;

  // Contracted graph with one representative edge per node pair.
  const std::size_t k = members.size();
  Adjacency cadj(k);
  std::map<std::pair<int, int>, std::pair<int, int>> rep;
  for (int v : vertices) {
    for (int t : adj[static_cast<std::size_t>(v - 1)]) {
      auto it = node_of.find(t + 1);
      if (it == node_of.end()) continue;
      int a = node_of.at(v), b = it->second;
      if (a == b || a == skip || b == skip) continue;
      if (rep.emplace(std::make_pair(a, b), std::make_pair(v, t + 1)).second) {
        cadj[static_cast<std::size_t>(a)].push_back(b);
      }
    }
  }
  std::vector<int> mate = edmonds(cadj);
  std::vector<int> entry(k, 0);
  if (skip >= 0) entry[static_cast<std::size_t>(skip)] = exposed;
  for (std::size_t a = 0; a < k; ++a) {
    if (static_cast<int>(a) == skip) continue;
    int b = mate[a];
    if (b == -1) throw InternalInfeasible("contracted graph has no perfect matching");
    auto [x, y] = rep.at({static_cast<int>(a), b});
    entry[a] = x;
    if (static_cast<int>(a) < b) {
      std::int64_t w = 0;
      for (const Edge& e : g.edges()) {
        if ((e.u == x && e.v == y) || (e.u == y && e.v == x)) w = e.w;
      }
      out.push_back({std::min(x, y), std::max(x, y), w});
    }
  }

  for (std::size_t t = 0; t < top.size(); ++t) {
    int b = top[t];
    std::vector<int> inner;
    for (int c : blossoms) {
      if (c == b) continue;
      int p = forest.parent[static_cast<std::size_t>(c)];
      while (p != -1 && p != b) p = forest.parent[static_cast<std::size_t>(p)];
      if (p == b) inner.push_back(c);
    }
    complete(g, adj, forest, forest.sets[static_cast<std::size_t>(b)], inner, entry[t], out);
  }
}

}  // namespace

std::vector<Edge> maximum_matching(const Graph& g) {
  if (g.directed()) throw std::invalid_argument("matching needs an undirected graph");
  std::vector<int> mate = edmonds(adjacency_of(g));
  std::map<std::pair<int, int>, std::int64_t> weight;
  for (const Edge& e : g.edges()) weight[{e.u, e.v}] = e.w;
  std::vector<Edge> out;
  for (int v = 0; v < g.n(); ++v) {
    int u = mate[static_cast<std::size_t>(v)];
    if (u > v) out.push_back({v + 1, u + 1, weight.at({v + 1, u + 1})});
  }
  return out;
}

std::optional<std::vector<Edge>> unweighted_perfect_matching(const Graph& g) {
  std::vector<Edge> m = maximum_matching(g);
  if (2 * m.size() != static_cast<std::size_t>(g.n())) return std::nullopt;
  return m;
}

std::vector<Edge> allowed_edges(const Graph& g, const Options& opts) {
  if (g.directed()) throw std::invalid_argument("matching needs an undirected graph");
  if (g.n() == 0) return {};
  if (g.n() % 2 == 1) throw NoPerfectMatching();
  PrimeField f(opts.prime);
  const u64 base = derive_seed(opts.seed, "allowed_edges");
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    auto s = sample_tutte(f, g, derive_seed(base, static_cast<u64>(attempt)), opts.backend);
    if (s && !s->allowed.empty()) return s->allowed;
    if (!has_perfect_matching(g)) throw NoPerfectMatching();
  }
  throw NoAllowedEdge();
}

DefectValues defect_values(const Graph& g, const Options& opts) {
  if (g.directed()) throw std::invalid_argument("matching needs an undirected graph");
  const int n = g.n();
  DefectValues dv;
  if (n == 0) return dv;
  if (n % 2 == 1) throw NoPerfectMatching();
  PrimeField f(opts.prime);
  const u64 base = derive_seed(opts.seed, "defect_values");
  const std::int64_t shift = tutte_shift(g);
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
      if (i != j) entries.emplace_back(i, j);
    }
  }
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    PolyMatrix m = encode_tutte(f, g, derive_seed(base, static_cast<u64>(attempt)), shift);
    DegreeReport det = det_poly(f, m);
    if (!det.lowest_degree) {
      if (!has_perfect_matching(g)) throw NoPerfectMatching();
      continue;
    }
    std::vector<std::optional<int>> adj;
    try {
      adj = adjugate_degrees(f, m, entries);
    } catch (const SingularEverywhere&) {
      continue;
    }
    dv.matching_weight = (*det.lowest_degree - n * shift) / 2;
    dv.near_weights.assign(static_cast<std::size_t>(n), 0);
    bool complete_rows = true;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n) && complete_rows; ++i) {
      std::optional<std::int64_t> best;
      for (std::size_t k = 0; k < entries.size(); ++k) {
        if (entries[k].first != i || !adj[k]) continue;
        std::int64_t d = *adj[k];
        if (!best || d < *best) best = d;
      }
      if (!best) {
        complete_rows = false;
        break;
      }
      dv.near_weights[i] = *best - (n - 1) * shift - dv.matching_weight;
    }
    if (complete_rows) return dv;
  }
  throw InternalInfeasible("defect values: adjugate rows vanished at every sample");
}

BlossomForest blossom_family(const Graph& allowed, const DefectValues& defect) {
  const int n = allowed.n();
  BlossomForest forest;
  std::vector<std::int64_t> wprime;
  for (const Edge& e : allowed.edges()) {
    wprime.push_back(e.w + defect.near_weights[static_cast<std::size_t>(e.u - 1)] +
                     defect.near_weights[static_cast<std::size_t>(e.v - 1)]);
  }
  std::vector<std::int64_t> thresholds = wprime;
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  forest.distinct_thresholds = thresholds.size();

  std::set<std::vector<int>> seen;
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  for (std::int64_t alpha : thresholds) {
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t k = 0; k < wprime.size(); ++k) {
      if (wprime[k] > alpha) continue;
      const Edge& e = allowed.edges()[k];
      parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
    }
    std::map<int, std::vector<int>> groups;
    for (int v = 1; v <= n; ++v) groups[find(v)].push_back(v);
    for (auto& [root, members] : groups) {
      if (members.size() <= 1 || static_cast<int>(members.size()) >= n) continue;
      if (seen.insert(members).second) forest.sets.push_back(members);
    }
  }

  // Parent = smallest strict superset.
  forest.parent.assign(forest.sets.size(), -1);
  for (std::size_t i = 0; i < forest.sets.size(); ++i) {
    std::size_t best_size = 0;
    for (std::size_t j = 0; j < forest.sets.size(); ++j) {
      const auto& a = forest.sets[i];
      const auto& b = forest.sets[j];
      if (i == j || b.size() <= a.size()) continue;
      if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) continue;
      if (forest.parent[i] == -1 || b.size() < best_size) {
        forest.parent[i] = static_cast<int>(j);
        best_size = b.size();
      }
    }
  }
  return forest;
}

Matching extract_matching(const Graph& allowed, const BlossomForest& forest) {
  for (const auto& s : forest.sets) {
    if (s.size() % 2 == 0) throw InternalInfeasible("even vertex set in blossom family");
  }
  std::vector<int> vertices(static_cast<std::size_t>(allowed.n()));
  std::iota(vertices.begin(), vertices.end(), 1);
  std::vector<int> all(forest.sets.size());
  std::iota(all.begin(), all.end(), 0);
  Matching m;
  complete(allowed, adjacency_of(allowed), forest, vertices, all, 0, m.edges);
  std::sort(m.edges.begin(), m.edges.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  m.weight = weight_of(m.edges);
  return m;
}

MwpmReport mwpm_report(const Graph& g, const Options& opts) {
  if (g.directed()) throw std::invalid_argument("matching needs an undirected graph");
  MwpmReport report;
  if (g.n() == 0) return report;
  if (!has_perfect_matching(g)) throw NoPerfectMatching();
  PrimeField f(opts.prime);
  const u64 base = derive_seed(opts.seed, "mwpm");
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    Options sub = opts;
    sub.seed = derive_seed(base, static_cast<u64>(attempt));
    report = MwpmReport{};
    try {
      auto s = sample_tutte(f, g, derive_seed(sub.seed, "allowed"), opts.backend);
      if (!s || s->allowed.empty()) continue;
      const std::int64_t matching_weight = (s->lowest_degree - g.n() * s->shift) / 2;
      report.allowed = s->allowed;
      Graph allowed(false, g.n(), s->allowed, g.W());
      Matching total;
      for (const auto& comp : components(allowed)) {
        Subgraph sg = induced(allowed, comp);
        DefectValues dv = defect_values(sg.graph, sub);
        BlossomForest forest = blossom_family(sg.graph, dv);
        Matching part = extract_matching(sg.graph, forest);
        for (Edge e : part.edges) {
          int a = sg.global[static_cast<std::size_t>(e.u - 1)];
          int b = sg.global[static_cast<std::size_t>(e.v - 1)];
          total.edges.push_back({std::min(a, b), std::max(a, b), e.w});
        }
        for (auto& set : forest.sets) {
          for (int& v : set) v = sg.global[static_cast<std::size_t>(v - 1)];
        }
        report.components.push_back(comp);
        report.defects.push_back(dv);
        report.forests.push_back(std::move(forest));
      }
      std::sort(total.edges.begin(), total.edges.end(),
                [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
      total.weight = weight_of(total.edges);
      std::vector<char> covered(static_cast<std::size_t>(g.n()) + 1, 0);
      bool perfect = 2 * total.edges.size() == static_cast<std::size_t>(g.n());
      for (const Edge& e : total.edges) {
        for (int v : {e.u, e.v}) {
          if (covered[static_cast<std::size_t>(v)]) perfect = false;
          covered[static_cast<std::size_t>(v)] = 1;
        }
      }
      if (!perfect || total.weight != matching_weight) continue;
      total.reseeds = attempt;
      report.matching = std::move(total);
      return report;
    } catch (const InternalInfeasible&) {
      continue;
    } catch (const NoPerfectMatching&) {
      continue;  // a component's determinant vanished at its sample
    }
  }
  throw InternalInfeasible("minimum weight perfect matching failed after " +
                           std::to_string(opts.max_attempts) + " attempts");
}

Matching mwpm(const Graph& g, const Options& opts) { return mwpm_report(g, opts).matching; }

std::optional<std::int64_t> second_smallest_pm_weight(const Graph& g, const Options& opts) {
  if (g.directed()) throw std::invalid_argument("matching needs an undirected graph");
  if (g.n() == 0) return std::nullopt;
  if (!has_perfect_matching(g)) throw NoPerfectMatching();
  PrimeField f(opts.prime);
  const u64 base = derive_seed(opts.seed, "second_smallest");
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    auto s = sample_tutte(f, g, derive_seed(base, static_cast<u64>(attempt)), opts.backend);
    if (!s || s->allowed.empty()) continue;
    const int n = g.n();
    const std::int64_t matching_weight = (s->lowest_degree - n * s->shift) / 2;
    // Two distinct minimum matchings exist exactly when their union has
    // more than n/2 edges.
    if (2 * s->allowed.size() > static_cast<std::size_t>(n)) return matching_weight;
    auto top = s->det.degree();
    for (int d = s->lowest_degree + 1; top && d <= *top; ++d) {
      if (!s->det.coeff(d).is_zero()) return d - n * s->shift - matching_weight;
    }
    return std::nullopt;
  }
  throw NoAllowedEdge();
}

Matching solve_matching_variant(const Graph& g, MatchingVariant variant, int k,
                                const Options& opts) {
  ReducedMatching r = reduce_matching_variant(g, variant, k);
  Matching inner = mwpm(r.graph, opts);
  Matching out;
  out.edges = r.recover(inner.edges);
  out.weight = weight_of(out.edges);
  out.reseeds = inner.reseeds;
  return out;
}

}  // namespace algraph
