#include <doctest.h>

#include <algorithm>
#include <vector>

#include "algraph/distances.hpp"
#include "algraph/errors.hpp"
#include "algraph/oracles.hpp"
#include "support.hpp"

using namespace algraph;

namespace {

Options opts(u64 seed = 1) {
  Options o;
  o.seed = seed;
  return o;
}

/// Smallest c in [0, (n-1)W] accepted by check_diameter_at_most, else none.
Distance diameter_by_search(const Graph& g, const Options& o) {
  std::int64_t hi = std::max<std::int64_t>(0, (g.n() - 1) * g.W());
  if (!check_diameter_at_most(g, hi, o)) return std::nullopt;
  std::int64_t lo = -(g.n() - 1) * g.W();
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (mid < lo) mid = lo;
    if (check_diameter_at_most(g, mid, o)) hi = mid; else lo = mid + 1;
  }
  return lo;
}

}  // namespace

TEST_CASE("directed distance examples") {
  Graph path(true, 3, {{1, 2, 2}, {2, 3, -1}});
  DistanceMatrix d = directed_distances(path, opts());
  CHECK(d.at(1, 3) == 1);
  CHECK_FALSE(d.at(3, 1).has_value());
  CHECK(d.at(2, 2) == 0);
  CHECK_FALSE(diameter(d).has_value());
  CHECK(eccentricities(d)[0] == 2);

  std::vector<Edge> all;
  for (int u = 1; u <= 4; ++u)
    for (int v = 1; v <= 4; ++v)
      if (u != v) all.push_back({u, v, 1});
  DistanceMatrix k = directed_distances(Graph(true, 4, all), opts());
  for (int u = 1; u <= 4; ++u)
    for (int v = 1; v <= 4; ++v) CHECK(k.at(u, v) == (u == v ? 0 : 1));

  CHECK_THROWS_AS(directed_distances(Graph(true, 2, {{1, 2, -3}, {2, 1, 1}}), opts()), NegativeCycle);
}

TEST_CASE("undirected negative distance examples") {
  Graph g(false, 3, {{1, 2, 1}, {2, 3, -1}});
  DistanceMatrix d = undirected_negative_distances(g, opts());
  CHECK(d.at(1, 3) == 0);
  CHECK(d.at(3, 1) == 0);
  CHECK(d.at(1, 2) == 1);
  CHECK(undirected_negative_distance(g, 1, 3, opts()) == 0);

  // Scaled variant of the 3-path: a-b (-2), b-c (0); the matching avoiding
  // a2 and c1 weighs -2, the a-c distance.
  Graph scaled(false, 3, {{1, 2, -2}, {2, 3, 0}});
  CHECK(undirected_negative_distance(scaled, 1, 3, opts()) == -2);

  Graph single(false, 2, {{1, 2, 4}});
  DistanceMatrix s = undirected_negative_distances(single, opts());
  CHECK(s.at(1, 2) == 4);
  CHECK(s.at(2, 1) == 4);

  CHECK_THROWS_AS(undirected_negative_distances(Graph(false, 3, {{1, 2, -2}, {2, 3, 1}, {1, 3, 0}}), opts()),
                  NegativeCycle);
}

TEST_CASE("undirected path diameter and radius") {
  Graph p(false, 3, {{1, 2, 1}, {2, 3, 1}});
  CHECK(diameter(p, opts()) == 2);
  CHECK(radius(p, opts()) == 1);
  CHECK(check_diameter_at_most(p, 2, opts()));
  CHECK_FALSE(check_diameter_at_most(p, 1, opts()));
  CHECK(check_radius_at_most(p, 1, opts()));
  CHECK_FALSE(check_radius_at_most(p, 0, opts()));
}

TEST_CASE("directed path has unbounded diameter") {
  Graph p(true, 3, {{1, 2, 1}, {2, 3, 1}});
  CHECK_FALSE(diameter(p, opts()).has_value());
  CHECK_FALSE(check_diameter_at_most(p, 2, opts()));
  CHECK(radius(p, opts()) == 2);
}

TEST_CASE("strongly connected graphs accept c = nW") {
  Graph cyc(true, 4, {{1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {4, 1, 3}});
  CHECK(check_diameter_at_most(cyc, 4 * 3, opts()));
  CHECK(diameter(cyc, opts()) == 9);
}

TEST_CASE("random directed distances match Floyd-Warshall") {
  support::Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    int n = support::uniform(rng, 2, 8);
    Graph g = support::digraph_no_negative_cycle(rng, n, 4, 0.4);
    auto fw = oracle::floyd_warshall(g);
    REQUIRE_FALSE(fw.negative_cycle);
    DistanceMatrix d = directed_distances(g, opts(static_cast<u64>(trial)));
    for (int u = 1; u <= n; ++u) {
      for (int v = 1; v <= n; ++v) {
        CHECK(d.at(u, v) == fw.dist[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)]);
      }
    }
    // Triangle inequality.
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          if (d.at(i, j) && d.at(j, k)) CHECK(d.at(i, k) <= *d.at(i, j) + *d.at(j, k));
    CHECK(diameter_by_search(g, opts(static_cast<u64>(trial))) == diameter(d));
  }
}

TEST_CASE("split distances equal bidirected distances on nonnegative graphs") {
  support::Rng rng(10);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = support::undirected_nonnegative(rng, 6, 3, 0.5);
    DistanceMatrix a = undirected_negative_distances(g, opts());
    DistanceMatrix b = directed_distances(g.bidirected(), opts());
    CHECK(a.d == b.d);
  }
}

TEST_CASE("check_diameter_at_most is monotone in c") {
  support::Rng rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = support::undirected_negative(rng, 5, 2, 0.6, 1);
    bool seen = false;
    for (std::int64_t c = -10; c <= 10; ++c) {
      bool ok = check_diameter_at_most(g, c, opts());
      if (seen) CHECK(ok);
      seen = seen || ok;
    }
  }
}
