#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "nzc/indices.hpp"
#include "nzc/space.hpp"
#include "oracle_support.hpp"

using nzc::Bigint;
using nzc::Graph;

namespace {

std::vector<std::uint64_t> sorted_degrees(const Graph& g) {
  std::vector<std::uint64_t> d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("space params validation and prime-power flag") {
  CHECK_THROWS_AS(nzc::make_space_params(1, 2), nzc::Error);
  CHECK_THROWS_AS(nzc::make_space_params(2, 0), nzc::Error);
  CHECK_THROWS_AS(nzc::make_space_params(2, 64), nzc::Error);

  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 121, 128, 1024})
    CHECK(nzc::is_prime_power(q));
  for (std::uint64_t q : {6, 10, 12, 15, 18, 20, 24, 36, 100, 1000000})
    CHECK_FALSE(nzc::is_prime_power(q));

  CHECK(nzc::make_space_params(9, 2).prime_power);
  CHECK_FALSE(nzc::make_space_params(6, 2).prime_power);  // allowed, flagged
}

TEST_CASE("support_of extracts nonzero positions") {
  const std::vector<std::uint64_t> a{1, 0, 1};
  CHECK(nzc::support_of(a) == 0b101u);
  const std::vector<std::uint64_t> b{0, 2, 0};
  CHECK(nzc::support_of(b) == 0b010u);
  const std::vector<std::uint64_t> c{1, 1};
  CHECK(nzc::support_of(c) == 0b11u);

  CHECK_THROWS_AS(nzc::make_vector_label({0, 0}, 2), nzc::Error);  // null vector
  CHECK_THROWS_AS(nzc::make_vector_label({2, 0}, 2), nzc::Error);  // out of range
  CHECK(nzc::make_vector_label({0, 2, 0}, 3).support == 0b010u);
}

TEST_CASE("explicit construction at q=2, n=2 is the path") {
  const Graph g = nzc::build_explicit(nzc::make_space_params(2, 2));
  REQUIRE(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  // canonical order: (1,0) -> 0, (0,1) -> 1, (1,1) -> 2
  CHECK(g.labels() == std::vector<std::string>{"1,0", "0,1", "1,1"});
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 1));
}

TEST_CASE("explicit construction at q=2, n=3") {
  const Graph g = nzc::build_explicit(nzc::make_space_params(2, 3));
  CHECK(g.vertex_count() == 7);
  CHECK(g.edge_count() == 15);
  CHECK(sorted_degrees(g) == std::vector<std::uint64_t>{3, 3, 3, 5, 5, 5, 6});

  const Graph comp = nzc::complement(g);
  CHECK(comp.edge_count() == 6);
  CHECK(sorted_degrees(comp) == std::vector<std::uint64_t>{0, 1, 1, 1, 3, 3, 3});
}

TEST_CASE("explicit construction at n=1 is complete on q-1 vertices") {
  const Graph g = nzc::build_explicit(nzc::make_space_params(3, 1));
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);

  const Graph g7 = nzc::build_explicit(nzc::make_space_params(7, 1));
  CHECK(g7.vertex_count() == 6);
  CHECK(g7.edge_count() == 15);  // K6
}

TEST_CASE("explicit construction matches the coordinate-level oracle") {
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
    const oracle::NaiveGraph ng = oracle::gamma(q, n);
    const Graph g = nzc::build_explicit(nzc::make_space_params(q, n));
    REQUIRE(g.vertex_count() == ng.n);
    REQUIRE(g.edge_count() == ng.edges.size());
    for (const oracle::Edge& e : ng.edges) CHECK(g.adjacent(e.first, e.second));
  }
}

TEST_CASE("explicit cap is enforced") {
  CHECK_THROWS_AS(nzc::build_explicit(nzc::make_space_params(2, 10), 100),
                  nzc::ExplicitTooLarge);
  CHECK_THROWS_AS(nzc::build_explicit(nzc::make_space_params(7, 40)), nzc::ExplicitTooLarge);
  // boundary: exactly at the cap is allowed
  CHECK(nzc::build_explicit(nzc::make_space_params(2, 3), 7).vertex_count() == 7);
}

TEST_CASE("quotient classes at small parameters") {
  const nzc::SupportQuotient sq22 = nzc::build_quotient(nzc::make_space_params(2, 2));
  REQUIRE(sq22.classes.size() == 3);
  CHECK(sq22.classes[0].support_mask == 0b01u);
  CHECK(sq22.classes[0].size == 1);
  CHECK(sq22.classes[0].degree == 1);
  CHECK(sq22.classes[1].support_mask == 0b10u);
  CHECK(sq22.classes[1].degree == 1);
  CHECK(sq22.classes[2].support_mask == 0b11u);
  CHECK(sq22.classes[2].degree == 2);

  const nzc::SupportQuotient sq32 = nzc::build_quotient(nzc::make_space_params(3, 2));
  REQUIRE(sq32.classes.size() == 3);
  CHECK(sq32.classes[0].size == 2);
  CHECK(sq32.classes[0].degree == 5);
  CHECK(sq32.classes[1].size == 2);
  CHECK(sq32.classes[1].degree == 5);
  CHECK(sq32.classes[2].size == 4);
  CHECK(sq32.classes[2].degree == 7);

  const nzc::SupportQuotient sq23 = nzc::build_quotient(nzc::make_space_params(2, 3));
  REQUIRE(sq23.classes.size() == 7);
  std::vector<std::uint64_t> degs;
  for (const auto& c : sq23.classes) {
    CHECK(c.size == 1);
    degs.push_back(c.degree.convert_to<std::uint64_t>());
  }
  CHECK(degs == std::vector<std::uint64_t>{3, 3, 3, 5, 5, 5, 6});
}

TEST_CASE("quotient class sizes sum to the order") {
  for (std::uint64_t q : {2, 3, 4, 5, 6, 9}) {
    for (std::uint32_t n : {1u, 2u, 3u, 4u, 5u}) {
      const nzc::SupportQuotient sq = nzc::build_quotient(nzc::make_space_params(q, n));
      REQUIRE(sq.classes.size() == (std::size_t{1} << n) - 1);
      Bigint total = 0;
      bool sorted = true;
      for (std::size_t i = 0; i < sq.classes.size(); ++i) {
        total += sq.classes[i].size;
        if (i > 0) {
          const auto& a = sq.classes[i - 1];
          const auto& b = sq.classes[i];
          const int pa = std::popcount(a.support_mask), pb = std::popcount(b.support_mask);
          sorted &= (pa < pb) || (pa == pb && a.support_mask < b.support_mask);
        }
      }
      CHECK(total == nzc::bigpow(Bigint(q), n) - 1);
      CHECK(sorted);
    }
  }
}

TEST_CASE("class degrees match the explicit graph vertex by vertex") {
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {2, 3}, {3, 2}, {3, 3}, {4, 2}, {5, 3}}) {
    const nzc::SpaceParams p = nzc::make_space_params(q, n);
    const Graph g = nzc::build_explicit(p);
    const nzc::SupportQuotient sq = nzc::build_quotient(p);
    std::vector<Bigint> degree_by_mask(std::size_t{1} << n);
    for (const auto& c : sq.classes) degree_by_mask[c.support_mask] = c.degree;
    for (nzc::Vertex i = 0; i < g.vertex_count(); ++i) {
      std::uint64_t val = i + 1, mask = 0;
      for (std::uint32_t k = 0; k < n; ++k) {
        if (val % q != 0) mask |= 1ULL << k;
        val /= q;
      }
      CHECK(Bigint(g.degree(i)) == degree_by_mask[mask]);
    }
  }
}

TEST_CASE("expand_quotient reproduces the explicit graph with labels") {
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 2}}) {
    const nzc::SpaceParams p = nzc::make_space_params(q, n);
    const Graph expanded = nzc::expand_quotient(nzc::build_quotient(p));
    const Graph explicit_g = nzc::build_explicit(p);
    CHECK(expanded == explicit_g);
    CHECK(expanded.labels() == explicit_g.labels());
  }
  // K2 from a single self-intersecting class
  const Graph k2 = nzc::expand_quotient(nzc::build_quotient(nzc::make_space_params(3, 1)));
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);
}

TEST_CASE("expand_quotient validates its input") {
  nzc::SupportQuotient sq = nzc::build_quotient(nzc::make_space_params(2, 2));
  sq.classes.pop_back();
  CHECK_THROWS_AS(nzc::expand_quotient(sq), nzc::Error);

  nzc::SupportQuotient bad = nzc::build_quotient(nzc::make_space_params(2, 2));
  bad.classes[0].size = 5;
  CHECK_THROWS_AS(nzc::expand_quotient(bad), nzc::Error);

  CHECK_THROWS_AS(
      nzc::expand_quotient(nzc::build_quotient(nzc::make_space_params(2, 10)), 100),
      nzc::ExplicitTooLarge);
}

TEST_CASE("adjacency is monotone in support") {
  // if support(a) is contained in support(b) and a ~ c then b ~ c or b = c
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 3}, {3, 2}}) {
    const Graph g = nzc::build_explicit(nzc::make_space_params(q, n));
    const nzc::Vertex nv = g.vertex_count();
    std::vector<std::uint64_t> masks(nv);
    for (nzc::Vertex i = 0; i < nv; ++i) {
      std::uint64_t val = i + 1;
      for (std::uint32_t k = 0; k < n; ++k) {
        if (val % q != 0) masks[i] |= 1ULL << k;
        val /= q;
      }
    }
    for (nzc::Vertex a = 0; a < nv; ++a)
      for (nzc::Vertex b = 0; b < nv; ++b)
        for (nzc::Vertex c = 0; c < nv; ++c) {
          if ((masks[a] & ~masks[b]) != 0) continue;  // support(a) not within support(b)
          if (a != c && g.adjacent(a, c) && b != c) CHECK(g.adjacent(b, c));
        }
  }
}
