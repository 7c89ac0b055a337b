#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nzc/bigint.hpp"
#include "nzc/errors.hpp"
#include "nzc/graph.hpp"

namespace nzc {

enum class TransformKind { Subdivision, Line, VertexSemitotal, EdgeSemitotal, ParaLine };

inline std::string_view transform_name(TransformKind k) {
  switch (k) {
    case TransformKind::Subdivision: return "subdivision";
    case TransformKind::Line: return "line";
    case TransformKind::VertexSemitotal: return "vertex-semitotal";
    case TransformKind::EdgeSemitotal: return "edge-semitotal";
    case TransformKind::ParaLine: return "para-line";
  }
  return "?";
}

inline TransformKind parse_transform(std::string_view s) {
  if (s == "subdivision" || s == "s") return TransformKind::Subdivision;
  if (s == "line" || s == "l") return TransformKind::Line;
  if (s == "vertex-semitotal" || s == "t1") return TransformKind::VertexSemitotal;
  if (s == "edge-semitotal" || s == "t2") return TransformKind::EdgeSemitotal;
  if (s == "para-line" || s == "pl") return TransformKind::ParaLine;
  throw ParseError("unknown transform '" + std::string(s) + "'");
}

namespace detail {

inline void check_vertex_range(std::uint64_t count, const char* what) {
  if (count > 0xfffffffeULL)
    throw Error(std::string(what) + " would exceed the addressable vertex range");
}

// Incidence lists in CSR form: for each vertex, the ids of its incident
// edges in canonical edge order.
struct Incidence {
  std::vector<std::uint64_t> off;  // size n+1
  std::vector<std::uint32_t> ids;  // size 2m

  explicit Incidence(const Graph& g) {
    const Vertex n = g.vertex_count();
    off.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex u = 0; u < n; ++u) off[u + 1] = off[u] + g.degree(u);
    ids.resize(2 * g.edge_count());
    std::vector<std::uint64_t> cur(off.begin(), off.end() - 1);
    std::uint32_t e = 0;
    g.for_each_edge([&](Vertex u, Vertex v) {
      ids[cur[u]++] = e;
      ids[cur[v]++] = e;
      ++e;
    });
  }
};

// Emits the line-graph edge set of g with edge-vertex ids offset by base.
// Two edges are adjacent iff they share an endpoint; in a simple graph a
// pair of distinct edges shares at most one endpoint, so each pair is
// emitted exactly once.
inline void append_line_edges(const Graph& g, Vertex base, std::vector<std::uint64_t>& out) {
  const Incidence inc(g);
  u128 count = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const u128 d = g.degree(u);
    count += d * (d - 1) / 2;
  }
  out.reserve(out.size() + static_cast<std::size_t>(count));
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const std::uint32_t* row = inc.ids.data() + inc.off[u];
    const std::size_t d = static_cast<std::size_t>(inc.off[u + 1] - inc.off[u]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        out.push_back(pack_edge(base + row[i], base + row[j]));
  }
}

}  // namespace detail

/// Each edge replaced by a new degree-2 vertex. Edge-vertices are appended
/// after the originals in canonical edge order.
inline Graph subdivision(const Graph& g) {
  const Vertex n = g.vertex_count();
  const std::uint64_t m = g.edge_count();
  detail::check_vertex_range(static_cast<std::uint64_t>(n) + m, "subdivision graph");
  std::vector<std::uint64_t> out;
  out.reserve(2 * m);
  Vertex e = n;
  g.for_each_edge([&](Vertex u, Vertex v) {
    out.push_back(pack_edge(u, e));
    out.push_back(pack_edge(v, e));
    ++e;
  });
  return Graph::from_edges(n + static_cast<Vertex>(m), std::move(out));
}

/// One vertex per edge of g (canonical edge order); adjacency iff the
/// edges are incident.
inline Graph line_graph(const Graph& g) {
  const std::uint64_t m = g.edge_count();
  detail::check_vertex_range(m, "line graph");
  std::vector<std::uint64_t> out;
  detail::append_line_edges(g, 0, out);
  return Graph::from_edges(static_cast<Vertex>(m), std::move(out));
}

/// Subdivision edges plus the original edges.
inline Graph vertex_semitotal(const Graph& g) {
  const Vertex n = g.vertex_count();
  const std::uint64_t m = g.edge_count();
  detail::check_vertex_range(static_cast<std::uint64_t>(n) + m, "vertex-semitotal graph");
  std::vector<std::uint64_t> out;
  out.reserve(3 * m);
  Vertex e = n;
  g.for_each_edge([&](Vertex u, Vertex v) {
    out.push_back(pack_edge(u, e));
    out.push_back(pack_edge(v, e));
    out.push_back(pack_edge(u, v));
    ++e;
  });
  return Graph::from_edges(n + static_cast<Vertex>(m), std::move(out));
}

/// Subdivision edges plus the line-graph edges placed on the edge-vertices.
inline Graph edge_semitotal(const Graph& g) {
  const Vertex n = g.vertex_count();
  const std::uint64_t m = g.edge_count();
  detail::check_vertex_range(static_cast<std::uint64_t>(n) + m, "edge-semitotal graph");
  std::vector<std::uint64_t> out;
  out.reserve(2 * m);
  Vertex e = n;
  g.for_each_edge([&](Vertex u, Vertex v) {
    out.push_back(pack_edge(u, e));
    out.push_back(pack_edge(v, e));
    ++e;
  });
  detail::append_line_edges(g, n, out);
  return Graph::from_edges(n + static_cast<Vertex>(m), std::move(out));
}

/// Line graph of the subdivision graph, by composition.
inline Graph para_line(const Graph& g) { return line_graph(subdivision(g)); }

inline Graph apply_transform(TransformKind k, const Graph& g) {
  switch (k) {
    case TransformKind::Subdivision: return subdivision(g);
    case TransformKind::Line: return line_graph(g);
    case TransformKind::VertexSemitotal: return vertex_semitotal(g);
    case TransformKind::EdgeSemitotal: return edge_semitotal(g);
    case TransformKind::ParaLine: return para_line(g);
  }
  throw Error("unreachable transform kind");
}

}  // namespace nzc
