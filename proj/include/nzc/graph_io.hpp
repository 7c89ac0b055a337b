#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nzc/errors.hpp"
#include "nzc/graph.hpp"

namespace nzc {

// Exports are bit-exact: canonical sorted order, LF line endings.

/// One `u v` line per edge, 0-based, sorted.
inline std::string to_edgelist(const Graph& g) {
  std::string out;
  g.for_each_edge([&](Vertex u, Vertex v) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  });
  return out;
}

namespace detail {

inline std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// Undirected DOT; vertex labels become node attributes when present.
inline std::string to_dot(const Graph& g, std::string_view name = "G") {
  std::string out = "graph ";
  out += name;
  out += " {\n";
  const std::vector<std::string>& labels = g.labels();
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    out += "  ";
    out += std::to_string(u);
    if (!labels.empty()) {
      out += " [label=\"";
      out += detail::dot_escape(labels[u]);
      out += "\"]";
    }
    out += ";\n";
  }
  g.for_each_edge([&](Vertex u, Vertex v) {
    out += "  ";
    out += std::to_string(u);
    out += " -- ";
    out += std::to_string(v);
    out += ";\n";
  });
  out += "}\n";
  return out;
}

/// Parses `u v` lines back into a graph. Blank lines and `#` comments are
/// skipped; the vertex count is one past the largest endpoint.
inline Graph graph_from_edgelist(std::string_view text) {
  std::vector<std::uint64_t> packed;
  Vertex max_vertex = 0;
  bool any = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::uint64_t u = 0, v = 0;
    if (!(ls >> u >> v))
      throw ParseError("edge list line " + std::to_string(lineno) + " is not 'u v'");
    std::string rest;
    if (ls >> rest)
      throw ParseError("edge list line " + std::to_string(lineno) + " has trailing content");
    if (u > 0xfffffffeULL || v > 0xfffffffeULL)
      throw ParseError("edge list line " + std::to_string(lineno) + " endpoint too large");
    packed.push_back(pack_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    max_vertex = std::max({max_vertex, static_cast<Vertex>(u), static_cast<Vertex>(v)});
    any = true;
  }
  return Graph::from_edges(any ? max_vertex + 1 : 0, std::move(packed));
}

}  // namespace nzc
