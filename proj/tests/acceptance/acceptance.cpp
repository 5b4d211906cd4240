// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Usage: acceptance <cli-binary> <fixture-dir> [criterion...]

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "algraph/cycles.hpp"
#include "algraph/distances.hpp"
#include "algraph/encode.hpp"
#include "algraph/matching.hpp"
#include "algraph/oracles.hpp"
#include "algraph/polymatrix.hpp"
#include "algraph/rng.hpp"
#include "algraph/tape.hpp"
#include "support.hpp"

using namespace algraph;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

Options opts_for(u64 seed) {
  Options o;
  o.seed = seed;
  return o;
}

std::size_t idx(int v) { return static_cast<std::size_t>(v - 1); }

// 1. Reverse sweep costs at most five forward operations.
Verdict tape_op_bound() {
  PrimeField f;
  support::Rng rng(1001);
  std::size_t worst_num = 0, worst_den = 1, violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 1 + rng() % 8;
    Tape t(f);
    std::vector<Tape::NodeId> ids;
    for (std::size_t k = 0; k < n * n; ++k) ids.push_back(t.input(f.from_u64(rng())));
    auto det = record_determinant(t, ids, n);
    auto g = reverse_sweep(t, det);
    if (g.sweep_ops > 5 * t.arithmetic_ops()) ++violations;
    if (g.sweep_ops * worst_den > worst_num * std::max<std::size_t>(1, t.arithmetic_ops())) {
      worst_num = g.sweep_ops;
      worst_den = std::max<std::size_t>(1, t.arithmetic_ops());
    }
  }
  std::ostringstream s;
  s << "1000 tapes, violations " << violations << ", worst ratio "
    << static_cast<double>(worst_num) / static_cast<double>(worst_den);
  return {violations == 0, s.str()};
}

// 2. Gradient of det equals the cofactor adjugate transpose.
Verdict gradient_adjugate() {
  PrimeField f;
  const u64 p = f.modulus();
  support::Rng rng(2002);
  int bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 6;
    std::vector<u64> a(n * n);
    for (auto& v : a) v = rng() % p;
    Tape t(f);
    std::vector<Tape::NodeId> ids;
    for (u64 v : a) ids.push_back(t.input(FieldElement{v}));
    auto grad = reverse_sweep(t, record_determinant(t, ids, n));
    auto adj = support::cofactor_adjugate(a, n, p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) bad += grad[i * n + j].value != adj[j * n + i];
  }
  return {bad == 0, "200 matrices, mismatched entries " + std::to_string(bad)};
}

// 3. Directed shortest cycles and negative-cycle verdicts.
Verdict directed_cycles() {
  support::Rng rng(3003);
  int bad = 0, negative_bad = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int n = support::uniform(rng, 2, 10);
    int W = support::uniform(rng, 1, 4);
    Graph g = support::digraph_no_negative_cycle(rng, n, W, n <= 6 ? 0.4 : 0.25);
    auto cycles = oracle::enumerate_cycles(g);
    auto r = directed_cycle(g, opts_for(static_cast<u64>(trial)));
    if (cycles.empty()) {
      bad += r.status != CycleStatus::NoCycle;
    } else {
      bad += r.status != CycleStatus::Found || r.weight != cycles.front().weight ||
             !verify_cycle(g, r.cycle, r.weight);
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    int n = support::uniform(rng, 2, 10);
    Graph g = support::digraph_with_negative_cycle(rng, n, support::uniform(rng, 1, 4), 0.25);
    bool oracle_negative = false;
    for (int s = 1; s <= n && !oracle_negative; ++s) oracle_negative = !oracle::bellman_ford(g, s);
    bool subject = directed_cycle_weight(g, opts_for(static_cast<u64>(trial))).status ==
                   CycleStatus::NegativeCycle;
    negative_bad += subject != oracle_negative;
  }
  return {bad == 0 && negative_bad == 0,
          "500 digraphs mismatches " + std::to_string(bad) + ", 200 planted negative cycles mismatches " +
              std::to_string(negative_bad)};
}

// 4. Undirected shortest cycles, nonnegative and via the split graph.
Verdict undirected_cycles() {
  support::Rng rng(4004);
  int bad_pos = 0, bad_neg = 0;
  auto check = [](const Graph& g, u64 seed) {
    auto cycles = oracle::enumerate_cycles(g);
    auto r = shortest_cycle(g, opts_for(seed));
    if (cycles.empty()) return r.status == CycleStatus::NoCycle;
    return r.status == CycleStatus::Found && r.weight == cycles.front().weight &&
           verify_cycle(g, r.cycle, r.weight);
  };
  for (int trial = 0; trial < 300; ++trial) {
    int n = support::uniform(rng, 2, 9);
    Graph g = support::undirected_nonnegative(rng, n, support::uniform(rng, 1, 4), 0.4);
    bad_pos += !check(g, static_cast<u64>(trial));
  }
  for (int trial = 0; trial < 200; ++trial) {
    int n = support::uniform(rng, 3, 9);
    Graph g = support::undirected_negative(rng, n, support::uniform(rng, 1, 4), 0.4, 3);
    bad_neg += !check(g, static_cast<u64>(trial));
  }
  return {bad_pos == 0 && bad_neg == 0, "300 nonnegative mismatches " + std::to_string(bad_pos) +
                                            ", 200 negative mismatches " + std::to_string(bad_neg)};
}

// 5. Distances, diameter threshold and split-graph distances.
Verdict distances_diameter() {
  support::Rng rng(5005);
  int bad_dist = 0, bad_diam = 0, bad_split = 0, bad_lawler = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = support::uniform(rng, 2, 10);
    Graph g = support::digraph_no_negative_cycle(rng, n, support::uniform(rng, 1, 4),
                                                  trial % 2 ? 0.5 : 0.3);
    Options o = opts_for(static_cast<u64>(trial));
    auto fw = oracle::floyd_warshall(g);
    DistanceMatrix d = directed_distances(g, o);
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v) bad_dist += d.at(u, v) != fw.dist[idx(u)][idx(v)];
    // Threshold of the gradient predicate, searched over [-(n-1)W, (n-1)W].
    Distance expect = diameter(d);
    std::int64_t span = (n - 1) * g.W();
    Distance threshold;
    if (check_diameter_at_most(g, span, o)) {
      std::int64_t lo = -span, hi = span;
      while (lo < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (check_diameter_at_most(g, mid, o)) hi = mid; else lo = mid + 1;
      }
      threshold = lo;
    }
    bad_diam += threshold != expect;
  }
  for (int trial = 0; trial < 150; ++trial) {
    int n = support::uniform(rng, 3, 8);
    Graph g = support::undirected_negative(rng, n, support::uniform(rng, 1, 4), 0.45, 3);
    auto oracle_d = oracle::simple_path_distances(g);
    DistanceMatrix d = undirected_negative_distances(g, opts_for(static_cast<u64>(trial)));
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v) bad_split += d.at(u, v) != oracle_d[idx(u)][idx(v)];
    SplitGraph s = build_split_graph(g);
    if (s.graph.n() <= 16) bad_lawler += oracle::matching_dp(s.graph).min_weight != 0;
  }
  std::ostringstream out;
  out << "300 directed distance mismatches " << bad_dist << ", diameter threshold mismatches "
      << bad_diam << ", 150 split distance mismatches " << bad_split
      << ", nonzero split matching weights " << bad_lawler;
  return {bad_dist + bad_diam + bad_split + bad_lawler == 0, out.str()};
}

bool connected_in(const std::vector<Edge>& edges, const std::vector<int>& set) {
  std::set<int> members(set.begin(), set.end());
  std::map<int, std::vector<int>> adj;
  for (const Edge& e : edges) {
    if (members.count(e.u) && members.count(e.v)) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  }
  std::set<int> reached{set.front()};
  std::queue<int> q;
  q.push(set.front());
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[x])
      if (reached.insert(y).second) q.push(y);
  }
  return reached.size() == members.size();
}

bool perfect_in(const Graph& g, const std::vector<Edge>& m) {
  std::set<std::pair<int, int>> present;
  for (const Edge& e : g.edges()) present.insert({e.u, e.v});
  std::vector<int> used(static_cast<std::size_t>(g.n()) + 1, 0);
  for (const Edge& e : m) {
    if (!present.count({std::min(e.u, e.v), std::max(e.u, e.v)})) return false;
    if (used[static_cast<std::size_t>(e.u)]++ || used[static_cast<std::size_t>(e.v)]++) return false;
  }
  return 2 * m.size() == static_cast<std::size_t>(g.n());
}

// 6. Minimum weight perfect matching pipeline.
Verdict matching_pipeline() {
  support::Rng rng(6006);
  int bad_weight = 0, bad_allowed = 0, bad_family = 0, bad_thresholds = 0, bad_slack = 0;
  int reseeds = 0, blossoms = 0;
  auto inspect = [&](const Graph& g, u64 seed, bool check_allowed) {
    auto facts = oracle::matching_dp(g);
    MwpmReport rep = mwpm_report(g, opts_for(seed));
    reseeds += rep.matching.reseeds;
    bad_weight += !facts.min_weight || rep.matching.weight != *facts.min_weight ||
                  !perfect_in(g, rep.matching.edges);
    if (check_allowed) {
      std::set<std::pair<int, int>> got;
      for (const Edge& e : rep.allowed) got.insert({e.u, e.v});
      bad_allowed += got != facts.allowed;
    }
    for (std::size_t c = 0; c < rep.forests.size(); ++c) {
      const auto& forest = rep.forests[c];
      blossoms += static_cast<int>(forest.sets.size());
      bad_thresholds += forest.distinct_thresholds > static_cast<std::size_t>(g.n());
      for (std::size_t i = 0; i < forest.sets.size(); ++i) {
        std::set<int> a(forest.sets[i].begin(), forest.sets[i].end());
        bad_family += a.size() % 2 == 0 || a.size() < 3 || !connected_in(rep.allowed, forest.sets[i]);
        for (std::size_t j = i + 1; j < forest.sets.size(); ++j) {
          std::set<int> b(forest.sets[j].begin(), forest.sets[j].end());
          std::size_t common = 0;
          for (int x : a) common += b.count(x);
          bad_family += common != 0 && common != a.size() && common != b.size();
        }
        int crossing = 0;
        for (const Edge& e : rep.matching.edges) crossing += a.count(e.u) != a.count(e.v);
        bad_slack += crossing != 1;
      }
    }
  };
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 * support::uniform(rng, 1, 8);
    Graph g = support::matching_instance(rng, n, support::uniform(rng, 1, 5), trial % 2 == 0,
                                         support::uniform(rng, 1, 5) / 10.0);
    inspect(g, static_cast<u64>(trial), false);
  }
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 * support::uniform(rng, 1, 6);
    Graph g = support::matching_instance(rng, n, support::uniform(rng, 1, 3), trial % 2 == 0, 0.35);
    inspect(g, static_cast<u64>(1000 + trial), true);
  }
  std::ostringstream out;
  out << "weight/feasibility mismatches " << bad_weight << ", allowed mismatches " << bad_allowed
      << ", blossoms " << blossoms << " (bad " << bad_family << ")" << ", threshold overflows " << bad_thresholds
      << ", slackness violations " << bad_slack << ", reseeds " << reseeds;
  return {bad_weight + bad_allowed + bad_family + bad_thresholds + bad_slack == 0, out.str()};
}

// 7. Second-smallest perfect matching weight.
Verdict second_smallest() {
  support::Rng rng(7007);
  int bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 * support::uniform(rng, 1, 6);
    Graph g = support::matching_instance(rng, n, support::uniform(rng, 1, 4), trial % 2 == 0,
                                         support::uniform(rng, 0, 4) / 10.0);
    bad += second_smallest_pm_weight(g, opts_for(static_cast<u64>(trial))) !=
           oracle::matching_dp(g).second;
  }
  return {bad == 0, "200 instances, mismatches " + std::to_string(bad)};
}

// 8. Schwartz-Zippel false-zero rate with p = 101 and a degree-20 product.
Verdict schwartz_zippel() {
  const u64 p = 101, trials = 100000, degree = 20;
  PrimeField f(p);
  Substitution sigma(f, 8008);
  u64 false_zero = 0;
  for (u64 t = 0; t < trials; ++t) {
    FieldElement x = sigma(t);
    FieldElement value = f.one();
    for (u64 k = 0; k < degree; ++k) value = f.mul(value, f.sub(x, f.from_u64(k)));
    if (!symbolic_nonzero(f, value, degree).nonzero) ++false_zero;
  }
  double q = static_cast<double>(degree) / static_cast<double>(p);
  double sigma_q = std::sqrt(q * (1 - q) / static_cast<double>(trials));
  double rate = static_cast<double>(false_zero) / static_cast<double>(trials);
  std::ostringstream out;
  out << "rate " << rate << " vs bound " << q + 3 * sigma_q;
  return {rate <= q + 3 * sigma_q, out.str()};
}

// 9. Vertices on cycles of weight at most t.
Verdict short_cycle_vertices() {
  support::Rng rng(9009);
  int bad = 0, checks = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int n = support::uniform(rng, 3, 7);
    int W = support::uniform(rng, 1, 3);
    Graph g = trial % 3 == 0   ? support::digraph_no_negative_cycle(rng, n, W, 0.35)
              : trial % 3 == 1 ? support::undirected_nonnegative(rng, n, W, 0.45)
                               : support::undirected_negative(rng, n, W, 0.45, 2);
    auto best = oracle::min_cycle_through_vertex(g);
    for (std::int64_t t = 1; t <= n * g.W(); ++t) {
      std::vector<int> expect;
      for (int v = 1; v <= n; ++v)
        if (best[idx(v)] && *best[idx(v)] <= t) expect.push_back(v);
      bad += vertices_on_short_cycles(g, t, opts_for(static_cast<u64>(trial))) != expect;
      ++checks;
    }
  }
  return {bad == 0, std::to_string(checks) + " (instance, t) pairs, mismatches " + std::to_string(bad)};
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return out + "\n<exit " + std::to_string(status) + ">";
}

// 10. Two CLI runs with identical configuration are byte-identical.
Verdict cli_determinism(const std::string& cli, const std::string& fixtures) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(fixtures)) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  const std::vector<std::string> commands{
      "shortest-cycle", "negative-cycle", "diameter", "radius", "eccentricities", "distances",
      "mwpm", "second-matching", "cycle-vertices --t 4", "check-diameter --c 3"};
  int runs = 0, differ = 0;
  for (const auto& file : files) {
    for (const auto& cmd : commands) {
      std::string line = "'" + cli + "' " + cmd + " '" + file.string() + "' --seed 12345 --repeats 2 2>&1";
      differ += capture(line) != capture(line);
      ++runs;
    }
  }
  return {runs > 0 && differ == 0, std::to_string(runs) + " command/fixture pairs, differing " +
                                       std::to_string(differ)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli-binary> <fixture-dir> [criterion...]\n";
    return 2;
  }
  const std::string cli = argv[1], fixtures = argv[2];
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> all{
      {1, "reverse sweep op bound", 10, tape_op_bound},
      {2, "gradient equals adjugate transpose", 10, gradient_adjugate},
      {3, "directed shortest cycle and negative cycles", 60, directed_cycles},
      {4, "undirected shortest cycle", 120, undirected_cycles},
      {5, "distances, diameter threshold, split distances", 120, distances_diameter},
      {6, "minimum weight perfect matching pipeline", 300, matching_pipeline},
      {7, "second smallest matching weight", 30, second_smallest},
      {8, "Schwartz-Zippel calibration", 30, schwartz_zippel},
      {9, "vertices on short cycles", 60, short_cycle_vertices},
      {10, "CLI determinism", 120, [&] { return cli_determinism(cli, fixtures); }},
  };
  std::set<int> selected;
  for (int i = 3; i < argc; ++i) selected.insert(std::stoi(argv[i]));

  bool all_ok = true;
  for (const auto& c : all) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = v.ok && secs < c.limit_seconds;
    all_ok = all_ok && ok;
    std::printf("%s criterion %d: %s (%s; %.2fs of %.0fs)\n", ok ? "PASS" : "FAIL", c.id, c.name,
                v.detail.c_str(), secs, c.limit_seconds);
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
