#include "doctest.h"

#include <set>

#include "pancyclic/graph.hpp"

using namespace pancyclic;

namespace {

// Neighbour count by scanning every vertex with the raw definition.
std::uint64_t brute_degree(const GraphSpec& spec, const Arrangement& u) {
  std::uint64_t d = 0;
  for_each_vertex(spec, [&](const Arrangement& v) { d += is_adjacent(spec, u, v); });
  return d;
}

}  // namespace

TEST_CASE("spec strings round-trip") {
  for (const char* text : {"gamma:5", "gammak:6:2", "arr:5:4", "compl:4", "gtilde:5:4"}) {
    CHECK(GraphSpec::parse(text).to_string() == text);
  }
  CHECK_THROWS_AS(GraphSpec::parse("gamma"), InvalidArgument);
  CHECK_THROWS_AS(GraphSpec::parse("arr:4:5"), InvalidArgument);
  CHECK_THROWS_AS(GraphSpec::parse("gammak:5:6"), InvalidArgument);
  CHECK_THROWS_AS(GraphSpec::parse("nope:3"), InvalidArgument);
}

TEST_CASE("orders") {
  CHECK(order(GraphSpec::derangement(5)) == 120);
  CHECK(order(GraphSpec::fixed_k(6, 2)) == 720);
  CHECK(order(GraphSpec::arrangement(5, 4)) == 120);
  CHECK(order(GraphSpec::arrangement(6, 2)) == 30);
  CHECK(order(GraphSpec::gtilde1(5, 4)) == 24);
}

TEST_CASE("frozen neighbour counts match brute force") {
  struct Row {
    GraphSpec spec;
    std::uint64_t expected;
  };
  const Row rows[] = {
      {GraphSpec::derangement(4), 9},     {GraphSpec::derangement(5), 44},
      {GraphSpec::fixed_k(5, 1), 45},     {GraphSpec::fixed_k(5, 2), 20},
      {GraphSpec::arrangement(5, 4), 53}, {GraphSpec::arrangement(4, 2), 7},
      {GraphSpec::complement_nontrivial(4), 14},
      {GraphSpec::gtilde1(5, 4), 21},
  };
  for (const auto& row : rows) {
    CAPTURE(row.spec.to_string());
    CHECK(degree(row.spec) == row.expected);
    std::set<std::uint64_t> seen;
    for_each_vertex(row.spec, [&](const Arrangement& u) {
      if (rank(u) % 7 != 0) return;
      seen.insert(brute_degree(row.spec, u));
      CHECK(neighbors(row.spec, u).size() == row.expected);
    });
    CHECK(seen == std::set<std::uint64_t>{row.expected});
  }
  CHECK(degree(GraphSpec::derangement(6)) == 265);
}

TEST_CASE("neighbour enumeration agrees with the adjacency predicate") {
  for (const char* text : {"gamma:4", "gammak:5:2", "arr:5:3", "gtilde:5:3", "compl:4"}) {
    const GraphSpec spec = GraphSpec::parse(text);
    CAPTURE(text);
    for_each_vertex(spec, [&](const Arrangement& u) {
      for (const auto& v : neighbors(spec, u)) CHECK(is_adjacent(spec, u, v));
    });
  }
}

TEST_CASE("rank and unrank are inverse and lexicographic") {
  const GraphSpec spec = GraphSpec::arrangement(5, 3);
  std::uint64_t expected = 0;
  Arrangement prev;
  for_each_vertex(spec, [&](const Arrangement& v) {
    CHECK(rank(v) == expected);
    CHECK(unrank(expected, 3, 5) == v);
    if (expected > 0) CHECK(prev < v);
    prev = v;
    ++expected;
  });
  CHECK(expected == 60);
}

TEST_CASE("adjacency rejects mismatched shapes") {
  const GraphSpec spec = GraphSpec::derangement(4);
  CHECK_THROWS_AS(is_adjacent(spec, Arrangement({0, 1, 2, 3}, 4), Arrangement({0, 1, 2}, 3)), InvalidArgument);
  CHECK_FALSE(is_vertex(spec, Arrangement({0, 1}, 4)));
}

TEST_CASE("edge lists") {
  CHECK(all_edges(GraphSpec::derangement(4)).size() == 24 * 9 / 2);
  CHECK(all_edges(GraphSpec::derangement(5)).size() == 2640);
  for (const auto& [u, v] : all_edges(GraphSpec::arrangement(4, 2))) CHECK(rank(u) < rank(v));
}
