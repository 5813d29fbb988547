#include "doctest.h"

#include "pancyclic/construct.hpp"
#include "pancyclic/io.hpp"

using namespace pancyclic;

TEST_CASE("tuples round trip in 1-based notation") {
  const Arrangement x = io::parse_tuple("2 1 4 3", 4);
  CHECK(x == Arrangement({1, 0, 3, 2}, 4));
  CHECK(io::format_tuple(x) == "2 1 4 3");
  CHECK(io::parse_tuple("  3\t5 1 ", 6) == Arrangement({2, 4, 0}, 6));
  CHECK_THROWS_AS(io::parse_tuple("0 1 2", 3), InvalidArgument);
  CHECK_THROWS_AS(io::parse_tuple("1 2 5", 4), InvalidArgument);
  CHECK_THROWS_AS(io::parse_tuple("1 1 2", 4), InvalidArgument);
  CHECK_THROWS_AS(io::parse_tuple("1 x 2", 4), InvalidArgument);
  CHECK_THROWS_AS(io::parse_tuple("", 4), InvalidArgument);
}

TEST_CASE("edges") {
  const GraphSpec spec = GraphSpec::derangement(4);
  const auto e = io::parse_edge("1 2 3 4|2 1 4 3", spec);
  CHECK(io::format_edge(e) == "1 2 3 4|2 1 4 3");
  CHECK_THROWS_AS(io::parse_edge("1 2 3 4", spec), InvalidArgument);
  CHECK_THROWS_AS(io::parse_edge("1 2 3|2 1 3", spec), InvalidArgument);
  CHECK_THROWS_AS(io::parse_edge("1 2 3 4|2 1 4 3|1 2 3 4", spec), InvalidArgument);
  CHECK(io::parse_edge("1 2 3 4|2 3 4 1", GraphSpec::arrangement(5, 4)).second == Arrangement({1, 2, 3, 0}, 5));
}

TEST_CASE("witness JSON round trip") {
  const GraphSpec spec = GraphSpec::fixed_k(5, 1);
  const auto e = io::parse_edge("1 2 3 4 5|1 3 4 5 2", spec);
  const auto w = construct_cycle(spec, e.first, e.second, 17);
  const auto text = io::witness_to_json(w, e);
  const auto back = io::witness_from_json(text);
  CHECK(back.witness.spec == spec);
  CHECK(back.witness.vertices == w.vertices);
  REQUIRE(back.target_edge);
  CHECK(*back.target_edge == e);
  CHECK(io::witness_to_json(back.witness, back.target_edge) == text);
}

TEST_CASE("malformed witness documents") {
  CHECK_THROWS_AS(io::witness_from_json("{"), InvalidArgument);
  CHECK_THROWS_AS(io::witness_from_json(R"({"vertices": []})"), InvalidArgument);
  CHECK_THROWS_AS(io::witness_from_json(R"({"spec": "gamma:4", "vertices": ["1 2 3 4"], "length": 2})"),
                  InvalidArgument);
  CHECK_THROWS_AS(io::witness_from_json(R"({"spec": "gamma:4", "vertices": [7]})"), InvalidArgument);
}

TEST_CASE("construct_cycle dispatches on the family") {
  const auto a = Arrangement({0, 1, 2, 3}, 4);
  const auto b = Arrangement({1, 0, 3, 2}, 4);
  CHECK(construct_cycle(GraphSpec::derangement(4), a, b, 11).length() == 11);
  CHECK(construct_cycle(GraphSpec::arrangement(4, 4), a, b, 11).length() == 11);
  const auto c = Arrangement({0, 1, 2, 3}, 4);
  const auto d = Arrangement({0, 2, 1, 3}, 4);
  CHECK(construct_cycle(GraphSpec::complement_nontrivial(4), c, d, 20).length() == 20);
  CHECK(construct_cycle(GraphSpec::arrangement(6, 4), Arrangement({0, 1, 2, 3}, 6), Arrangement({4, 5, 0, 1}, 6), 300)
            .length() == 300);
  CHECK_THROWS_AS(construct_cycle(GraphSpec::derangement(4), a, Arrangement({0, 1, 2}, 4), 5), InvalidArgument);
}
