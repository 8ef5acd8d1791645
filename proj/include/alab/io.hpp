#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "alab/graph.hpp"
#include "alab/hypergraph.hpp"

namespace alab {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<long long> parse_line(const std::string& line, int lineno) {
  std::istringstream is(line);
  std::vector<long long> out;
  long long x;
  while (is >> x) out.push_back(x);
  if (!is.eof())
    throw FormatError("line " + std::to_string(lineno) + ": expected integers");
  return out;
}

inline bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace detail

// Text format: header "n m" (graph) or "n m r" (hypergraph), then m lines of
// vertices. Blank lines and '#' comments are ignored on input.

inline void write_text(std::ostream& os, const Graph& g) {
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

inline void write_text(std::ostream& os, const UniformHypergraph& h) {
  os << h.vertex_count() << ' ' << h.edge_count() << ' ' << h.uniformity() << '\n';
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) os << (j ? " " : "") << e[j];
    os << '\n';
  }
}

template <class G>
std::string to_text(const G& g) {
  std::ostringstream os;
  write_text(os, g);
  return os.str();
}

using AnyGraph = std::variant<Graph, UniformHypergraph>;

inline AnyGraph read_text_any(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!detail::next_content_line(in, line, lineno)) throw FormatError("empty input");
  auto header = detail::parse_line(line, lineno);
  if (header.size() != 2 && header.size() != 3)
    throw FormatError("line " + std::to_string(lineno) + ": header must be 'n m' or 'n m r'");
  const long long n = header[0], m = header[1];
  const long long r = header.size() == 3 ? header[2] : 2;
  if (n < 0 || m < 0 || r < 2) throw FormatError("invalid header values");
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!detail::next_content_line(in, line, lineno))
      throw FormatError("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    auto vs = detail::parse_line(line, lineno);
    if (static_cast<long long>(vs.size()) != r)
      throw FormatError("line " + std::to_string(lineno) + ": expected " + std::to_string(r) +
                        " vertices");
    edges.emplace_back(vs.begin(), vs.end());
  }
  if (detail::next_content_line(in, line, lineno))
    throw FormatError("line " + std::to_string(lineno) + ": trailing content");
  try {
    if (header.size() == 2) {
      std::vector<Edge> es;
      for (auto& e : edges) es.push_back({e[0], e[1]});
      return Graph(static_cast<int>(n), std::move(es));
    }
    return UniformHypergraph(static_cast<int>(n), static_cast<int>(r), std::move(edges));
  } catch (const std::logic_error& e) {
    throw FormatError(e.what());
  }
}

inline Graph read_graph_text(std::istream& in) {
  auto g = read_text_any(in);
  if (auto* p = std::get_if<Graph>(&g)) return std::move(*p);
  auto& h = std::get<UniformHypergraph>(g);
  if (h.uniformity() != 2) throw FormatError("expected a graph, got a hypergraph");
  return h.to_graph();
}

inline UniformHypergraph read_hypergraph_text(std::istream& in) {
  auto g = read_text_any(in);
  if (auto* p = std::get_if<Graph>(&g)) return UniformHypergraph::from_graph(*p);
  return std::get<UniformHypergraph>(std::move(g));
}

inline Graph graph_from_text(const std::string& s) {
  std::istringstream is(s);
  return read_graph_text(is);
}

inline UniformHypergraph hypergraph_from_text(const std::string& s) {
  std::istringstream is(s);
  return read_hypergraph_text(is);
}

// JSON mirrors the text fields: {"n", "m", "edges"} plus "r" for hypergraphs.

inline nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", std::move(edges)}};
}

inline nlohmann::json to_json(const UniformHypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    edges.push_back(std::vector<Vertex>(e.begin(), e.end()));
  }
  return {{"n", h.vertex_count()},
          {"m", h.edge_count()},
          {"r", h.uniformity()},
          {"edges", std::move(edges)}};
}

inline AnyGraph any_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int r = j.contains("r") ? j.at("r").get<int>() : 2;
    auto edges = j.at("edges").get<std::vector<std::vector<Vertex>>>();
    if (j.contains("m") && j.at("m").get<std::size_t>() != edges.size())
      throw FormatError("field m does not match edge list length");
    if (!j.contains("r")) {
      std::vector<Edge> es;
      for (auto& e : edges) {
        if (e.size() != 2) throw FormatError("graph edge must have two endpoints");
        es.push_back({e[0], e[1]});
      }
      return Graph(n, std::move(es));
    }
    return UniformHypergraph(n, r, std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(e.what());
  } catch (const std::logic_error& e) {
    throw FormatError(e.what());
  }
}

inline Graph graph_from_json(const nlohmann::json& j) {
  auto g = any_from_json(j);
  if (auto* p = std::get_if<Graph>(&g)) return std::move(*p);
  auto& h = std::get<UniformHypergraph>(g);
  if (h.uniformity() != 2) throw FormatError("expected a graph, got a hypergraph");
  return h.to_graph();
}

inline UniformHypergraph hypergraph_from_json(const nlohmann::json& j) {
  auto g = any_from_json(j);
  if (auto* p = std::get_if<Graph>(&g)) return UniformHypergraph::from_graph(*p);
  return std::get<UniformHypergraph>(std::move(g));
}

}  // namespace alab
