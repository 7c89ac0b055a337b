#pragma once

#include <cstdint>

#include "nzc/bigint.hpp"
#include "nzc/errors.hpp"
#include "nzc/graph.hpp"
#include "nzc/space.hpp"

namespace nzc {

// Explicit-path inner loops accumulate in 128 bits. With vertex counts held
// below 2^31 (enforced here) every per-term product stays under 2^93 and
// every sum under 2^124, so the accumulation is exact; results are widened
// to Bigint at the API boundary. The quotient path is Bigint throughout
// since its degrees are unbounded in (q, n).

struct IndexBundle {
  Bigint vertex_count;
  Bigint edge_count;
  Bigint m1;
  Bigint m2;
  Bigint forgotten;
  Bigint co_m1;
  Bigint co_m2;

  bool operator==(const IndexBundle&) const = default;
};

namespace detail {

inline void check_oracle_size(const Graph& g) {
  if (g.vertex_count() >= (1u << 31))
    throw Error("explicit index computation requires fewer than 2^31 vertices");
}

}  // namespace detail

/// First Zagreb index: sum of squared degrees.
inline Bigint m1(const Graph& g) {
  detail::check_oracle_size(g);
  u128 acc = 0;
  for (std::uint64_t d : g.degrees()) acc += static_cast<u128>(d) * d;
  return bigint_from_u128(acc);
}

/// Second Zagreb index: sum over edges of the endpoint degree products.
inline Bigint m2(const Graph& g) {
  detail::check_oracle_size(g);
  const DegreeSequence& deg = g.degrees();
  u128 acc = 0;
  g.for_each_edge([&](Vertex u, Vertex v) { acc += static_cast<u128>(deg[u]) * deg[v]; });
  return bigint_from_u128(acc);
}

/// Forgotten index: sum of cubed degrees.
inline Bigint forgotten(const Graph& g) {
  detail::check_oracle_size(g);
  u128 acc = 0;
  for (std::uint64_t d : g.degrees()) acc += static_cast<u128>(d * d) * d;
  return bigint_from_u128(acc);
}

/// First Zagreb coindex: degree sums over non-adjacent distinct pairs,
/// by complement-free pair iteration.
inline Bigint m1_coindex(const Graph& g) {
  detail::check_oracle_size(g);
  const DegreeSequence& deg = g.degrees();
  u128 acc = 0;
  g.for_each_non_edge([&](Vertex u, Vertex v) { acc += deg[u] + deg[v]; });
  return bigint_from_u128(acc);
}

/// Second Zagreb coindex: degree products over non-adjacent distinct pairs.
inline Bigint m2_coindex(const Graph& g) {
  detail::check_oracle_size(g);
  const DegreeSequence& deg = g.degrees();
  u128 acc = 0;
  g.for_each_non_edge([&](Vertex u, Vertex v) { acc += static_cast<u128>(deg[u]) * deg[v]; });
  return bigint_from_u128(acc);
}

/// All five indices plus counts in one pass over degrees, edges and
/// non-edges. This is the oracle; the non-edge loop visits every vertex
/// pair.
inline IndexBundle bundle(const Graph& g) {
  detail::check_oracle_size(g);
  const DegreeSequence& deg = g.degrees();
  u128 sq = 0, cube = 0, prod = 0, co_sum = 0, co_prod = 0;
  for (std::uint64_t d : deg) {
    sq += static_cast<u128>(d) * d;
    cube += static_cast<u128>(d * d) * d;
  }
  g.for_each_edge([&](Vertex u, Vertex v) { prod += static_cast<u128>(deg[u]) * deg[v]; });
  g.for_each_non_edge([&](Vertex u, Vertex v) {
    co_sum += deg[u] + deg[v];
    co_prod += static_cast<u128>(deg[u]) * deg[v];
  });
  IndexBundle b;
  b.vertex_count = g.vertex_count();
  b.edge_count = g.edge_count();
  b.m1 = bigint_from_u128(sq);
  b.m2 = bigint_from_u128(prod);
  b.forgotten = bigint_from_u128(cube);
  b.co_m1 = bigint_from_u128(co_sum);
  b.co_m2 = bigint_from_u128(co_prod);
  return b;
}

/// Same values as bundle(build_explicit(params)) but computed over the
/// 2^n - 1 support classes; never materializes the graph.
inline IndexBundle bundle_from_quotient(const SupportQuotient& sq) {
  Bigint nv = 0, two_m = 0, m1 = 0, f = 0, m2 = 0, co_m2 = 0;
  for (const QuotientClass& c : sq.classes) {
    const Bigint& s = c.size;
    const Bigint& d = c.degree;
    nv += s;
    two_m += s * d;
    m1 += s * d * d;
    f += s * d * d * d;
    m2 += s * (s - 1) / 2 * d * d;  // intra-class clique pairs
  }
  const std::size_t k = sq.classes.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const QuotientClass& a = sq.classes[i];
      const QuotientClass& b = sq.classes[j];
      const Bigint t = a.size * b.size * a.degree * b.degree;
      if ((a.support_mask & b.support_mask) != 0)
        m2 += t;
      else
        co_m2 += t;
    }
  }
  IndexBundle out;
  out.vertex_count = nv;
  out.edge_count = two_m / 2;
  out.m1 = m1;
  out.m2 = m2;
  out.forgotten = f;
  out.co_m1 = 2 * out.edge_count * (nv - 1) - m1;
  out.co_m2 = co_m2;
  return out;
}

}  // namespace nzc
