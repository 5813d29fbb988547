#include "doctest.h"

#include "pancyclic/oracle.hpp"

using namespace pancyclic;
using oracle::Verdict;

namespace {

Arrangement P(std::initializer_list<int> one_based) {
  std::vector<int> w;
  for (int x : one_based) w.push_back(x - 1);
  return Arrangement(w, static_cast<int>(w.size()));
}

// A 4-cycle in the derangement graph on S_4: rows of the cyclic Latin square.
std::vector<Arrangement> square() { return {P({1, 2, 3, 4}), P({2, 3, 4, 1}), P({3, 4, 1, 2}), P({4, 1, 2, 3})}; }

}  // namespace

TEST_CASE("a valid witness passes") {
  const GraphSpec spec = GraphSpec::derangement(4);
  const auto c = square();
  CHECK(oracle::validate_cycle(spec, c, {c[0], c[1]}, 4).ok());
  CHECK(oracle::validate_cycle(spec, c, {c[0], c[3]}, 4).ok());  // closing edge counts
  CHECK(oracle::validate_cycle(spec, c, {c[1], c[0]}, 4).ok());
}

TEST_CASE("mutations are caught with the right verdict") {
  const GraphSpec spec = GraphSpec::derangement(4);
  const auto good = square();
  const oracle::Edge target{good[0], good[1]};

  auto dropped = good;
  dropped.pop_back();
  CHECK(oracle::validate_cycle(spec, dropped, target, 4).verdict == Verdict::WrongLength);

  auto repeated = good;
  repeated[3] = repeated[1];
  CHECK(oracle::validate_cycle(spec, repeated, target, 4).verdict == Verdict::RepeatedVertex);

  auto swapped = good;
  swapped[2] = P({2, 1, 4, 3});
  const auto r = oracle::validate_cycle(spec, swapped, target, 4);
  CHECK(r.verdict == Verdict::NonEdge);
  CHECK(r.position == 1);

  CHECK(oracle::validate_cycle(spec, good, {good[0], good[2]}, 4).verdict == Verdict::MissingTargetEdge);

  auto malformed = good;
  malformed[1] = Arrangement({0, 1, 2}, 4);
  CHECK(oracle::validate_cycle(spec, malformed, target, 4).verdict == Verdict::MalformedVertex);

  CHECK(oracle::validate_cycle(spec, good, target, 5).verdict == Verdict::WrongLength);
}

TEST_CASE("witness overload") {
  const CycleWitness w{GraphSpec::derangement(4), square()};
  CHECK(oracle::validate_cycle(w, {w.vertices[2], w.vertices[3]}, 4).ok());
  CHECK(oracle::to_string(Verdict::NonEdge) == "NonEdge");
}

TEST_CASE("brute force finds exactly the feasible lengths") {
  const GraphSpec spec = GraphSpec::derangement(4);
  const auto c = square();
  for (int len = 3; len <= 24; ++len) {
    const auto r = oracle::brute_force_cycle(spec, c[0], c[1], len);
    CAPTURE(len);
    REQUIRE(r.status == oracle::SearchStatus::Found);
    CHECK(oracle::validate_cycle(spec, r.cycle, {c[0], c[1]}, len).ok());
  }
  CHECK(oracle::brute_force_cycle(spec, c[0], c[1], 25).status == oracle::SearchStatus::NotFound);
}

TEST_CASE("brute force reports an exhausted budget") {
  const GraphSpec spec = GraphSpec::derangement(5);
  const auto r = oracle::brute_force_cycle(spec, P({1, 2, 3, 4, 5}), P({2, 3, 4, 5, 1}), 120, 3);
  CHECK(r.status == oracle::SearchStatus::BudgetExhausted);
}

TEST_CASE("brute force proves absence of a 4-cycle") {
  // Gamma_3 is two disjoint triangles.
  const GraphSpec spec = GraphSpec::derangement(3);
  const auto r = oracle::brute_force_cycle(spec, P({1, 2, 3}), P({2, 3, 1}), 4);
  CHECK(r.status == oracle::SearchStatus::NotFound);
  CHECK(oracle::brute_force_cycle(spec, P({1, 2, 3}), P({2, 3, 1}), 3).status == oracle::SearchStatus::Found);
}
