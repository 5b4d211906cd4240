#include "algraph/encode.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "algraph/errors.hpp"
#include "algraph/rng.hpp"

namespace algraph {

namespace {

int as_exponent(std::int64_t e) {
  if (e < 0 || e > (1 << 24)) throw std::invalid_argument("exponent out of range");
  return static_cast<int>(e);
}

}  // namespace

PolyMatrix encode_directed(const PrimeField& f, const Graph& g, u64 seed) {
  if (!g.directed()) throw std::invalid_argument("encode_directed needs a directed graph");
  const std::size_t n = static_cast<std::size_t>(g.n());
  Substitution sigma(f, seed);
  PolyMatrix m(n);
  for (const Edge& e : g.edges()) {
    std::size_t u = static_cast<std::size_t>(e.u - 1), v = static_cast<std::size_t>(e.v - 1);
    VarId id = pair_var(n, u, v);
    m.add_variable_term(f, id, sigma(id), u, v, +1, as_exponent(e.w + g.W()));
  }
  return m;
}

PolyMatrix encode_undirected_bidirected(const PrimeField& f, const Graph& g, u64 seed) {
  if (g.directed()) throw std::invalid_argument("encode_undirected_bidirected needs an undirected graph");
  if (g.has_negative_edge()) {
    throw std::invalid_argument("encode_undirected_bidirected needs nonnegative weights");
  }
  const std::size_t n = static_cast<std::size_t>(g.n());
  Substitution sigma(f, seed);
  PolyMatrix m(n);
  for (const Edge& e : g.edges()) {
    std::size_t u = static_cast<std::size_t>(e.u - 1), v = static_cast<std::size_t>(e.v - 1);
    VarId forward = pair_var(n, u, v), backward = pair_var(n, v, u);
    m.add_variable_term(f, forward, sigma(forward), u, v, +1, as_exponent(e.w));
    m.add_variable_term(f, backward, sigma(backward), v, u, +1, as_exponent(e.w));
  }
  return m;
}

std::int64_t tutte_shift(const Graph& g) { return g.has_negative_edge() ? g.W() : 0; }

PolyMatrix encode_tutte(const PrimeField& f, const Graph& g, u64 seed, std::int64_t shift) {
  if (g.directed()) throw std::invalid_argument("encode_tutte needs an undirected graph");
  const std::size_t n = static_cast<std::size_t>(g.n());
  Substitution sigma(f, seed);
  PolyMatrix m(n);
  for (const Edge& e : g.edges()) {
    std::size_t u = static_cast<std::size_t>(e.u - 1), v = static_cast<std::size_t>(e.v - 1);
    VarId id = pair_var(n, u, v);
    FieldElement x = sigma(id);
    int exp = as_exponent(e.w + shift);
    m.add_variable_term(f, id, x, u, v, +1, exp);
    m.add_variable_term(f, id, x, v, u, -1, exp);
  }
  return m;
}

SplitGraph build_split_graph(const Graph& g) {
  if (g.directed()) throw std::invalid_argument("build_split_graph needs an undirected graph");
  const int n = g.n();

  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };

  SplitGraph s;
  s.base = g;
  for (const Edge& e : g.edges()) {
    if (e.w >= 0) continue;
    int a = find(e.u), b = find(e.v);
    if (a == b) throw NegativeCycleInNegativeEdges();
    parent[static_cast<std::size_t>(a)] = b;
    s.negative_edges.push_back(e);
  }

  std::vector<Edge> edges;
  for (int v = 1; v <= n; ++v) edges.push_back({s.copy(v, 1), s.copy(v, 2), 0});
  for (const Edge& e : g.edges()) {
    if (e.w < 0) continue;
    for (int a = 1; a <= 2; ++a) {
      for (int b = 1; b <= 2; ++b) edges.push_back({s.copy(e.u, a), s.copy(e.v, b), e.w});
    }
  }
  for (std::size_t k = 0; k < s.negative_edges.size(); ++k) {
    const Edge& e = s.negative_edges[k];
    int e1 = s.edge_copy(k, 1), e2 = s.edge_copy(k, 2);
    edges.push_back({s.copy(e.u, 1), e1, e.w});
    edges.push_back({s.copy(e.u, 2), e1, e.w});
    edges.push_back({e1, e2, 0});
    edges.push_back({s.copy(e.v, 1), e2, 0});
    edges.push_back({s.copy(e.v, 2), e2, 0});
  }
  int total = 2 * n + 2 * static_cast<int>(s.negative_edges.size());
  s.graph = Graph(false, total, std::move(edges), g.W());
  return s;
}

ReducedMatching reduce_matching_variant(const Graph& g, MatchingVariant variant, int k) {
  if (g.directed()) throw std::invalid_argument("matching needs an undirected graph");
  ReducedMatching r;
  r.original = g;
  r.variant = variant;
  r.k = k;
  const int n = g.n();
  switch (variant) {
    case MatchingVariant::MinWeightPerfect:
      r.graph = g;
      break;
    case MatchingVariant::MaxWeightPerfect: {
      std::vector<Edge> neg;
      for (const Edge& e : g.edges()) neg.push_back({e.u, e.v, -e.w});
      r.graph = Graph(false, n, std::move(neg), g.W());
      break;
    }
    case MatchingVariant::MinWeightCardinalityK: {
      if (k < 0 || 2 * k > n) {
        throw InvalidK("cardinality k = " + std::to_string(k) + " must lie in [0, n/2] for n = " +
                       std::to_string(n));
      }
      std::vector<Edge> edges = g.edges();
      int extra = n - 2 * k;
      for (int a = n + 1; a <= n + extra; ++a) {
        for (int v = 1; v <= n; ++v) edges.push_back({v, a, 0});
      }
      r.graph = Graph(false, n + extra, std::move(edges), g.W());
      break;
    }
    case MatchingVariant::MaxWeight: {
      // Negative edges never help a maximum matching, so only the rest is
      // negated; the zero completion lets any vertex stay unmatched.
      std::map<std::pair<int, int>, std::int64_t> w;
      for (const Edge& e : g.edges()) {
        if (e.w > 0) w[{e.u, e.v}] = -e.w;
      }
      int total = n + (n % 2);
      std::vector<Edge> edges;
      for (int u = 1; u <= total; ++u) {
        for (int v = u + 1; v <= total; ++v) {
          auto it = w.find({u, v});
          edges.push_back({u, v, it == w.end() ? 0 : it->second});
        }
      }
      r.graph = Graph(false, total, std::move(edges), g.W());
      break;
    }
  }
  return r;
}

std::vector<Edge> ReducedMatching::recover(const std::vector<Edge>& reduced_matching) const {
  std::map<std::pair<int, int>, std::int64_t> weight;
  for (const Edge& e : original.edges()) weight[{e.u, e.v}] = e.w;
  std::vector<Edge> out;
  for (Edge e : reduced_matching) {
    if (e.u > e.v) std::swap(e.u, e.v);
    auto it = weight.find({e.u, e.v});
    if (it == weight.end()) continue;  // artificial vertex or completion edge
    if (variant == MatchingVariant::MaxWeight && it->second <= 0) continue;
    out.push_back({e.u, e.v, it->second});
  }
  return out;
}

}  // namespace algraph
