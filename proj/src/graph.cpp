#include "algraph/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "algraph/errors.hpp"

namespace algraph {

Graph::Graph(bool directed, int n, std::vector<Edge> edges, std::int64_t declared_w)
    : directed_(directed), n_(n) {
  if (n < 0) throw ParseError("negative vertex count");
  std::map<std::pair<int, int>, std::int64_t> best;
  std::int64_t max_abs = 0;
  for (Edge e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw ParseError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                       std::to_string(e.v));
    }
    if (e.u == e.v) throw ParseError("self-loop at vertex " + std::to_string(e.u));
    if (!directed && e.u > e.v) std::swap(e.u, e.v);
    auto key = std::make_pair(e.u, e.v);
    auto it = best.find(key);
    if (it == best.end() || e.w < it->second) best[key] = e.w;
  }
  for (const auto& [key, w] : best) {
    edges_.push_back({key.first, key.second, w});
    max_abs = std::max(max_abs, w < 0 ? -w : w);
  }
  if (declared_w >= 0 && declared_w < max_abs) {
    throw ParseError("declared weight bound W=" + std::to_string(declared_w) +
                     " is below max |w| = " + std::to_string(max_abs));
  }
  w_bound_ = declared_w >= 0 ? declared_w : max_abs;
}

bool Graph::has_negative_edge() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w < 0; });
}

std::int64_t Graph::min_weight() const {
  std::int64_t m = 0;
  bool first = true;
  for (const Edge& e : edges_) {
    if (first || e.w < m) m = e.w;
    first = false;
  }
  return m;
}

Graph Graph::bidirected() const {
  if (directed_) return *this;
  std::vector<Edge> both;
  for (const Edge& e : edges_) {
    both.push_back(e);
    both.push_back({e.v, e.u, e.w});
  }
  return Graph(true, n_, std::move(both), w_bound_);
}

Graph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    bool directed = doc.at("directed").get<bool>();
    int n = doc.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& item : doc.at("edges")) {
      if (!item.is_array() || item.size() != 3) throw ParseError("edge must be [u, v, w]");
      edges.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<std::int64_t>()});
    }
    std::int64_t declared = doc.contains("W") ? doc["W"].get<std::int64_t>() : -1;
    return Graph(directed, n, std::move(edges), declared);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph document: ") + e.what());
  }
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  long m = 0;
  std::string kind;
  if (!(in >> n >> m >> kind)) throw ParseError("expected header 'n m directed|undirected'");
  bool directed;
  if (kind == "directed") {
    directed = true;
  } else if (kind == "undirected") {
    directed = false;
  } else {
    throw ParseError("unknown graph kind '" + kind + "'");
  }
  if (m < 0) throw ParseError("negative edge count");
  std::vector<Edge> edges;
  for (long i = 0; i < m; ++i) {
    Edge e{};
    if (!(in >> e.u >> e.v >> e.w)) {
      throw ParseError("expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
    }
    edges.push_back(e);
  }
  std::string extra;
  if (in >> extra) throw ParseError("trailing content after edge list: '" + extra + "'");
  return Graph(directed, n, std::move(edges));
}

Graph parse_graph(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string to_json(const Graph& g) {
  nlohmann::json doc;
  doc["directed"] = g.directed();
  doc["n"] = g.n();
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({e.u, e.v, e.w});
  return doc.dump();
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.edges().size() << ' ' << (g.directed() ? "directed" : "undirected")
      << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
  return out.str();
}

}  // namespace algraph
