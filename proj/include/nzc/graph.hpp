#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nzc/errors.hpp"

namespace nzc {

using Vertex = std::uint32_t;

// Canonical packed edge: smaller endpoint in the high word. Sorting a vector
// of packed edges therefore sorts lexicographically by (min, max).
inline std::uint64_t pack_edge(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}
inline Vertex edge_lo(std::uint64_t e) { return static_cast<Vertex>(e >> 32); }
inline Vertex edge_hi(std::uint64_t e) { return static_cast<Vertex>(e & 0xffffffffULL); }

/// Index-aligned vertex degrees; sum equals twice the edge count.
using DegreeSequence = std::vector<std::uint64_t>;

// Immutable undirected simple graph. Vertices are dense 0-based indices;
// labels are side metadata and never take part in equality.
//
// Two internal representations behind one value type:
//   dense:  symmetric adjacency bit matrix, n rows of ceil(n/64) words;
//   sparse: sorted vector of packed edges plus per-row offsets on the
//           smaller endpoint.
// Construction picks whichever is smaller; near-complete graphs (the
// nonzero-component family) stay dense, edge-blowup transforms of large
// inputs stay sparse. All observable behavior (canonical edge order,
// equality, degrees) is representation-independent.
class Graph {
 public:
  enum class Repr { Auto, Dense, Sparse };

  Graph() = default;

  /// Builds from packed edges; canonicalizes and deduplicates.
  /// Throws InvalidEdge / SelfLoopRejected on malformed input.
  static Graph from_edges(Vertex vertex_count, std::vector<std::uint64_t> packed,
                          std::vector<std::string> labels = {}, Repr repr = Repr::Auto) {
    for (std::uint64_t e : packed) {
      Vertex u = edge_lo(e), v = edge_hi(e);
      if (u == v)
        throw SelfLoopRejected("self-loop at vertex " + std::to_string(u));
      if (v >= vertex_count)
        throw InvalidEdge("edge endpoint " + std::to_string(v) + " out of range (vertex count " +
                          std::to_string(vertex_count) + ")");
    }
    Graph g;
    g.n_ = vertex_count;
    g.labels_ = std::move(labels);
    bool dense = false;
    bool canonical = false;
    switch (repr) {
      case Repr::Dense:
        dense = true;
        break;
      case Repr::Sparse:
        dense = false;
        break;
      case Repr::Auto: {
        if (vertex_count <= kDenseDirectVertices) {
          dense = true;
        } else {
          // Need the deduplicated edge count to compare footprints.
          std::sort(packed.begin(), packed.end());
          packed.erase(std::unique(packed.begin(), packed.end()), packed.end());
          canonical = true;
          dense = dense_bytes(vertex_count) <= 8 * packed.size();
        }
        break;
      }
    }
    if (dense) {
      g.init_dense();
      for (std::uint64_t e : packed) g.set_bit_pair(edge_lo(e), edge_hi(e));
      g.finish_dense();
    } else {
      if (!canonical) {
        std::sort(packed.begin(), packed.end());
        packed.erase(std::unique(packed.begin(), packed.end()), packed.end());
      }
      g.edges_ = std::move(packed);
      g.finish_sparse();
    }
    return g;
  }

  /// Builds directly from symmetric adjacency rows (diagonal must be clear).
  /// This is the path for dense constructions that never materialize an
  /// edge vector.
  static Graph from_bits(Vertex vertex_count, std::vector<std::uint64_t> rows,
                         std::vector<std::string> labels = {}) {
    Graph g;
    g.n_ = vertex_count;
    g.labels_ = std::move(labels);
    g.words_ = words_per_row(vertex_count);
    g.bits_ = std::move(rows);
    if (g.bits_.size() != static_cast<std::size_t>(vertex_count) * g.words_)
      throw Error("adjacency row storage has wrong size");
    g.finish_dense();
    return g;
  }

  Vertex vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return m_; }
  bool is_dense() const { return !bits_.empty(); }
  std::uint64_t degree(Vertex u) const { return deg_[u]; }
  const DegreeSequence& degrees() const { return deg_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool adjacent(Vertex u, Vertex v) const {
    if (u == v) return false;
    if (!bits_.empty()) return test_bit(u, v);
    std::uint64_t e = pack_edge(u, v);
    Vertex lo = edge_lo(e);
    auto first = edges_.begin() + static_cast<std::ptrdiff_t>(row_[lo]);
    auto last = edges_.begin() + static_cast<std::ptrdiff_t>(row_[lo + 1]);
    return std::binary_search(first, last, e);
  }

  /// Visits edges as (u, v) with u < v, sorted lexicographically.
  template <class F>
  void for_each_edge(F&& f) const {
    if (!bits_.empty()) {
      for (Vertex u = 0; u < n_; ++u) {
        const std::uint64_t* row = &bits_[static_cast<std::size_t>(u) * words_];
        std::size_t w = (static_cast<std::size_t>(u) + 1) >> 6;
        for (; w < words_; ++w) {
          std::uint64_t word = row[w];
          if (w == ((static_cast<std::size_t>(u) + 1) >> 6))
            word &= ~0ULL << ((u + 1) & 63);
          while (word != 0) {
            Vertex v = static_cast<Vertex>((w << 6) + std::countr_zero(word));
            f(u, v);
            word &= word - 1;
          }
        }
      }
    } else {
      for (std::uint64_t e : edges_) f(edge_lo(e), edge_hi(e));
    }
  }

  /// Visits non-adjacent distinct pairs (u, v), u < v, in canonical order.
  /// Quadratic in the vertex count; this is the oracle's pair loop.
  template <class F>
  void for_each_non_edge(F&& f) const {
    if (!bits_.empty()) {
      for (Vertex u = 0; u < n_; ++u) {
        const std::uint64_t* row = &bits_[static_cast<std::size_t>(u) * words_];
        std::size_t w = (static_cast<std::size_t>(u) + 1) >> 6;
        for (; w < words_; ++w) {
          std::uint64_t word = ~row[w];
          if (w == ((static_cast<std::size_t>(u) + 1) >> 6))
            word &= ~0ULL << ((u + 1) & 63);
          if (w == words_ - 1 && (n_ & 63) != 0)
            word &= (1ULL << (n_ & 63)) - 1;
          while (word != 0) {
            Vertex v = static_cast<Vertex>((w << 6) + std::countr_zero(word));
            f(u, v);
            word &= word - 1;
          }
        }
      }
    } else {
      for (Vertex u = 0; u < n_; ++u) {
        std::uint64_t i = row_[u];
        const std::uint64_t end = row_[u + 1];
        for (Vertex v = u + 1; v < n_; ++v) {
          if (i < end && edge_hi(edges_[i]) == v) {
            ++i;
          } else {
            f(u, v);
          }
        }
      }
    }
  }

  /// Materializes the canonical sorted edge vector.
  std::vector<std::uint64_t> packed_edges() const {
    if (bits_.empty()) return edges_;
    std::vector<std::uint64_t> out;
    out.reserve(m_);
    for_each_edge([&](Vertex u, Vertex v) { out.push_back(pack_edge(u, v)); });
    return out;
  }

  /// Structural equality: same vertex count and edge set. Labels ignored.
  bool operator==(const Graph& o) const {
    if (n_ != o.n_ || m_ != o.m_) return false;
    if (!bits_.empty() && !o.bits_.empty()) return bits_ == o.bits_;
    if (bits_.empty() && o.bits_.empty()) return edges_ == o.edges_;
    return packed_edges() == o.packed_edges();
  }

  // Dense footprint of n vertices, in bytes.
  static std::uint64_t dense_bytes(Vertex n) {
    return static_cast<std::uint64_t>(n) * words_per_row(n) * 8;
  }

 private:
  // Below this, dense is built directly with no sort (bit matrix <= 64 MiB).
  static constexpr Vertex kDenseDirectVertices = 23170;

  static std::size_t words_per_row(Vertex n) { return (static_cast<std::size_t>(n) + 63) / 64; }

  void init_dense() {
    words_ = words_per_row(n_);
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  }

  void set_bit_pair(Vertex u, Vertex v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
  }

  bool test_bit(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
  }

  void finish_dense() {
    deg_.assign(n_, 0);
    std::uint64_t total = 0;
    for (Vertex u = 0; u < n_; ++u) {
      std::uint64_t d = 0;
      const std::uint64_t* row = &bits_[static_cast<std::size_t>(u) * words_];
      for (std::size_t w = 0; w < words_; ++w) d += std::popcount(row[w]);
      deg_[u] = d;
      total += d;
    }
    m_ = total / 2;
  }

  void finish_sparse() {
    deg_.assign(n_, 0);
    for (std::uint64_t e : edges_) {
      ++deg_[edge_lo(e)];
      ++deg_[edge_hi(e)];
    }
    m_ = edges_.size();
    row_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (std::uint64_t e : edges_) ++row_[edge_lo(e) + 1];
    for (std::size_t i = 1; i < row_.size(); ++i) row_[i] += row_[i - 1];
  }

  Vertex n_ = 0;
  std::uint64_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> edges_;
  std::vector<std::uint64_t> row_;
  DegreeSequence deg_;
  std::vector<std::string> labels_;
};

/// Builds a graph from an explicit (vertex_count, edge list) pair.
inline Graph build_graph(Vertex vertex_count,
                         const std::vector<std::pair<Vertex, Vertex>>& edge_list,
                         std::vector<std::string> labels = {}) {
  std::vector<std::uint64_t> packed;
  packed.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    if (u == v)
      throw SelfLoopRejected("self-loop at vertex " + std::to_string(u));
    if (u >= vertex_count || v >= vertex_count)
      throw InvalidEdge("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") out of range (vertex count " + std::to_string(vertex_count) + ")");
    packed.push_back(pack_edge(u, v));
  }
  return Graph::from_edges(vertex_count, std::move(packed), std::move(labels));
}

inline DegreeSequence degrees(const Graph& g) { return g.degrees(); }

inline std::uint64_t edge_count(const Graph& g) { return g.edge_count(); }

/// Complement on the same vertex set: (u,v) is an edge iff it was not one.
/// Labels carry over.
inline Graph complement(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<std::uint64_t> out;
  const std::uint64_t pairs =
      n == 0 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  out.reserve(pairs - g.edge_count());
  g.for_each_non_edge([&](Vertex u, Vertex v) { out.push_back(pack_edge(u, v)); });
  return Graph::from_edges(n, std::move(out), g.labels());
}

}  // namespace nzc
