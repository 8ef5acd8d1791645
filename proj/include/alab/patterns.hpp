#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alab/graph.hpp"
#include "alab/hypergraph.hpp"
#include "alab/io.hpp"

namespace alab::patterns {

inline Graph clique(int s) { return Graph::complete(s); }

inline Graph cycle(int l) {
  if (l < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i < l; ++i) es.push_back(make_edge(i, (i + 1) % l));
  return Graph(l, std::move(es));
}

/// Path on `v` vertices (v-1 edges).
inline Graph path(int v) {
  if (v < 2) throw std::invalid_argument("path needs at least 2 vertices");
  std::vector<Edge> es;
  for (int i = 0; i + 1 < v; ++i) es.push_back({i, i + 1});
  return Graph(v, std::move(es));
}

inline Graph complete_multipartite(const std::vector<int>& parts) {
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) part_of.push_back(static_cast<int>(i));
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> es;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (part_of[a] != part_of[b]) es.push_back({a, b});
  return Graph(n, std::move(es));
}

/// r-uniform loose cycle with l edges: consecutive edges share one vertex.
inline UniformHypergraph loose_cycle(int l, int r) {
  if (l < 3 || r < 2) throw std::invalid_argument("loose cycle needs l >= 3, r >= 2");
  const int n = l * (r - 1);
  std::vector<std::vector<Vertex>> es;
  for (int i = 0; i < l; ++i) {
    std::vector<Vertex> e;
    for (int j = 0; j < r; ++j) e.push_back((i * (r - 1) + j) % n);
    es.push_back(std::move(e));
  }
  return UniformHypergraph(n, r, std::move(es));
}

namespace detail {

inline int parse_int(std::string_view s, std::string_view whole) {
  int x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("unknown pattern '" + std::string(whole) + "'");
  return x;
}

}  // namespace detail

/// Named patterns: K<s>, C<l>, P<v>, K<a>,<b>[,...], K<s>^<r> (complete
/// r-uniform), C<l>^<r> (loose cycle), E^<r> (single r-edge).
inline AnyGraph named(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty pattern name");
  std::string_view body = name;
  int r = 2;
  if (auto caret = name.find('^'); caret != std::string_view::npos) {
    r = detail::parse_int(name.substr(caret + 1), name);
    body = name.substr(0, caret);
  }
  if (body == "E") {
    std::vector<Vertex> e;
    for (int i = 0; i < r; ++i) e.push_back(i);
    return UniformHypergraph(r, r, {e});
  }
  const char kind = body[0];
  const std::string_view rest = body.substr(1);
  if (kind == 'K') {
    if (rest.find(',') != std::string_view::npos) {
      if (r != 2) throw std::invalid_argument("multipartite patterns are 2-uniform");
      std::vector<int> parts;
      std::size_t start = 0;
      while (start <= rest.size()) {
        auto comma = rest.find(',', start);
        if (comma == std::string_view::npos) comma = rest.size();
        parts.push_back(detail::parse_int(rest.substr(start, comma - start), name));
        start = comma + 1;
      }
      return complete_multipartite(parts);
    }
    const int s = detail::parse_int(rest, name);
    if (r == 2) return clique(s);
    return UniformHypergraph::complete(s, r);
  }
  if (kind == 'C') {
    const int l = detail::parse_int(rest, name);
    if (r == 2) return cycle(l);
    return loose_cycle(l, r);
  }
  if (kind == 'P' && r == 2) return path(detail::parse_int(rest, name));
  throw std::invalid_argument("unknown pattern '" + std::string(name) + "'");
}

inline Graph named_graph(std::string_view name) {
  auto g = named(name);
  if (auto* p = std::get_if<Graph>(&g)) return std::move(*p);
  throw std::invalid_argument("pattern '" + std::string(name) + "' is not a graph");
}

}  // namespace alab::patterns
