#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nzc/bigint.hpp"
#include "nzc/errors.hpp"
#include "nzc/graph.hpp"

namespace nzc {

inline constexpr std::uint64_t kDefaultExplicitCap = 100000;

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (x % p == 0) return x == p;
  }
  std::uint64_t d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t v = powmod_u64(a, d, x);
    if (v == 1 || v == x - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      v = mulmod_u64(v, v, x);
      if (v == x - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline std::uint64_t iroot_u64(std::uint64_t x, unsigned e) {
  if (e == 1) return x;
  std::uint64_t r = static_cast<std::uint64_t>(std::pow(static_cast<double>(x), 1.0 / e));
  // float estimate can be off by one either way
  while (r > 1 && bigpow(r, e) > x) --r;
  while (bigpow(r + 1, e) <= x) ++r;
  return r;
}

}  // namespace detail

/// True iff q = p^k for a prime p and k >= 1.
inline bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  for (unsigned e = 1; e < 64; ++e) {
    if ((Bigint(1) << e) > q && e > 1) break;
    std::uint64_t r = detail::iroot_u64(q, e);
    if (r < 2) break;
    if (bigpow(r, e) == q && detail::is_prime_u64(r)) return true;
  }
  return false;
}

/// Parameters of the coordinate space: field size q and dimension n.
/// Adjacency depends only on zero/nonzero coordinate patterns, so q is
/// validated as >= 2 only; prime-power status is recorded as an advisory
/// flag.
struct SpaceParams {
  std::uint64_t q = 2;
  std::uint32_t n = 1;
  bool prime_power = true;
};

inline SpaceParams make_space_params(std::uint64_t q, std::uint32_t n) {
  if (q < 2) throw Error("q must be >= 2 (got " + std::to_string(q) + ")");
  if (n < 1 || n > 63) throw Error("n must be in [1, 63] (got " + std::to_string(n) + ")");
  return SpaceParams{q, n, is_prime_power(q)};
}

/// Positions (0-based bit i = coordinate i) where coords is nonzero.
inline std::uint64_t support_of(std::span<const std::uint64_t> coords) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) mask |= 1ULL << i;
  return mask;
}

/// One nonzero coordinate tuple together with its support mask.
struct VectorLabel {
  std::vector<std::uint64_t> coords;
  std::uint64_t support = 0;
};

inline VectorLabel make_vector_label(std::vector<std::uint64_t> coords, std::uint64_t q) {
  for (std::uint64_t c : coords)
    if (c >= q) throw Error("coordinate " + std::to_string(c) + " out of range for q = " + std::to_string(q));
  std::uint64_t mask = support_of(coords);
  if (mask == 0) throw Error("the null vector is not a vertex");
  return VectorLabel{std::move(coords), mask};
}

struct QuotientClass {
  std::uint64_t support_mask = 0;
  Bigint size;    // (q-1)^|S|
  Bigint degree;  // (q^|S| - 1) q^(n-|S|) - 1
};

/// Compressed form of the nonzero-component graph: one class per nonempty
/// support mask, classes sorted by (popcount, mask value). Classes are
/// internal cliques, completely joined iff their masks intersect.
struct SupportQuotient {
  SpaceParams params;
  std::vector<QuotientClass> classes;
};

inline SupportQuotient build_quotient(const SpaceParams& p) {
  SupportQuotient sq;
  sq.params = p;
  sq.classes.reserve((std::size_t{1} << p.n) - 1);
  const Bigint q = p.q;
  for (std::uint32_t k = 1; k <= p.n; ++k) {
    const Bigint size = bigpow(q - 1, k);
    const Bigint degree = (bigpow(q, k) - 1) * bigpow(q, p.n - k) - 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p.n); ++mask) {
      if (std::popcount(mask) == static_cast<int>(k))
        sq.classes.push_back(QuotientClass{mask, size, degree});
    }
  }
  return sq;
}

namespace detail {

// Radix-q enumeration, coordinate 0 least significant. Vertex index i
// corresponds to value i+1; the null vector (value 0) is skipped.
inline void radix_digits(std::uint64_t value, std::uint64_t q, std::uint32_t n,
                         std::uint64_t* out) {
  for (std::uint32_t i = 0; i < n; ++i) {
    out[i] = value % q;
    value /= q;
  }
}

inline std::string coord_label(const std::uint64_t* digits, std::uint32_t n) {
  std::string s;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (i != 0) s += ',';
    s += std::to_string(digits[i]);
  }
  return s;
}

// Checks the cap and returns q^n - 1 as a machine integer.
inline std::uint64_t checked_order(const SpaceParams& p, std::uint64_t cap) {
  const Bigint nv = bigpow(Bigint(p.q), p.n) - 1;
  if (nv > cap)
    throw ExplicitTooLarge("explicit graph would have " + nv.str() + " vertices (cap " +
                           std::to_string(cap) + "); use the quotient path");
  if (nv > 0xfffffffeULL)
    throw ExplicitTooLarge("explicit graph would exceed the addressable vertex range");
  return nv.convert_to<std::uint64_t>();
}

// Shared explicit construction: vertices in radix order, adjacency by
// support-mask intersection over precomputed masks.
inline Graph build_from_masks(Vertex nv, const std::vector<std::uint64_t>& masks,
                              std::vector<std::string> labels) {
  const std::size_t words = (static_cast<std::size_t>(nv) + 63) / 64;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(nv) * words, 0);
  for (Vertex i = 0; i < nv; ++i) {
    std::uint64_t* row = &rows[static_cast<std::size_t>(i) * words];
    const std::uint64_t mi = masks[i];
    for (Vertex j = i + 1; j < nv; ++j) {
      if ((mi & masks[j]) != 0) {
        row[j >> 6] |= 1ULL << (j & 63);
        rows[static_cast<std::size_t>(j) * words + (i >> 6)] |= 1ULL << (i & 63);
      }
    }
  }
  return Graph::from_bits(nv, std::move(rows), std::move(labels));
}

}  // namespace detail

/// Explicit nonzero-component graph: one vertex per nonzero tuple, ordered
/// by the tuple read as a radix-q integer; edges where supports intersect.
/// Labels record the coordinate tuples.
inline Graph build_explicit(const SpaceParams& p, std::uint64_t cap = kDefaultExplicitCap) {
  const Vertex nv = static_cast<Vertex>(detail::checked_order(p, cap));
  std::vector<std::uint64_t> masks(nv);
  std::vector<std::string> labels(nv);
  std::vector<std::uint64_t> digits(p.n);
  for (Vertex i = 0; i < nv; ++i) {
    detail::radix_digits(static_cast<std::uint64_t>(i) + 1, p.q, p.n, digits.data());
    masks[i] = support_of(digits);
    labels[i] = detail::coord_label(digits.data(), p.n);
  }
  return detail::build_from_masks(nv, masks, std::move(labels));
}

/// Blow-up of a quotient back to the explicit graph. Each class becomes
/// class_size vertices (an internal clique); classes join completely iff
/// their masks intersect. Vertex order and labels follow the same radix
/// enumeration as build_explicit, so the results compare equal.
inline Graph expand_quotient(const SupportQuotient& sq, std::uint64_t cap = kDefaultExplicitCap) {
  const SpaceParams& p = sq.params;
  const Vertex nv = static_cast<Vertex>(detail::checked_order(p, cap));
  if (sq.classes.size() != (std::size_t{1} << p.n) - 1)
    throw Error("quotient must have exactly 2^n - 1 classes");

  std::vector<const QuotientClass*> by_mask(std::size_t{1} << p.n, nullptr);
  Bigint total = 0;
  for (const QuotientClass& c : sq.classes) {
    if (c.support_mask == 0 || c.support_mask >= (std::uint64_t{1} << p.n))
      throw Error("quotient class mask out of range");
    if (by_mask[c.support_mask] != nullptr) throw Error("duplicate quotient class mask");
    by_mask[c.support_mask] = &c;
    total += c.size;
  }
  if (total != Bigint(nv)) throw Error("quotient class sizes do not sum to q^n - 1");

  std::vector<std::uint64_t> masks(nv);
  std::vector<std::string> labels(nv);
  std::vector<std::uint64_t> digits(p.n);
  std::vector<Bigint> seen(std::size_t{1} << p.n, 0);
  for (Vertex i = 0; i < nv; ++i) {
    detail::radix_digits(static_cast<std::uint64_t>(i) + 1, p.q, p.n, digits.data());
    masks[i] = support_of(digits);
    labels[i] = detail::coord_label(digits.data(), p.n);
    seen[masks[i]] += 1;
  }
  for (const QuotientClass& c : sq.classes) {
    if (seen[c.support_mask] != c.size)
      throw Error("quotient class size mismatch for one support mask");
  }
  return detail::build_from_masks(nv, masks, std::move(labels));
}

}  // namespace nzc
