#include "doctest.h"

#include <set>

#include "pancyclic/gammak.hpp"
#include "pancyclic/oracle.hpp"

using namespace pancyclic;

namespace {

Permutation P(std::initializer_list<int> one_based) {
  std::vector<int> w;
  for (int x : one_based) w.push_back(x - 1);
  return Permutation(w);
}

int sweep_failures(int n, int k, int stride, gammak::ConstructStats* stats = nullptr) {
  const GraphSpec spec = GraphSpec::fixed_k(n, k);
  int failures = 0;
  int index = 0;
  for (const auto& [u, v] : all_edges(spec)) {
    if (index++ % stride != 0) continue;
    const int top = static_cast<int>(n - k == 3 ? factorial(n) / 2 : factorial(n));
    for (int len = 3; len <= top; ++len) {
      try {
        const auto w = gammak::construct(Permutation(u), Permutation(v), k, len, stats);
        failures += !oracle::validate_cycle(w, {u, v}, len).ok();
      } catch (const Error& e) {
        if (failures == 0) MESSAGE("first failure at length ", len, ": ", e.what());
        ++failures;
      }
    }
  }
  return failures;
}

}  // namespace

TEST_CASE("revolving-door subset order") {
  const auto small = gammak::subset_gray_order(4, 2);
  CHECK(small == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 2}, {2, 3}});
  for (auto [n, k] : {std::pair{5, 2}, {6, 3}, {7, 3}, {5, 4}, {8, 1}, {7, 5}}) {
    const auto order = gammak::subset_gray_order(n, k);
    CAPTURE(n);
    CAPTURE(k);
    CHECK(order.size() == binomial(n, k));
    CHECK(std::set<std::vector<int>>(order.begin(), order.end()).size() == order.size());
    std::vector<int> first(static_cast<std::size_t>(k));
    std::vector<int> last(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      first[static_cast<std::size_t>(i)] = i;
      last[static_cast<std::size_t>(i)] = n - k + i;
    }
    CHECK(order.front() == first);
    CHECK(order.back() == last);
    for (std::size_t i = 1; i < order.size(); ++i) {
      std::vector<int> both;
      std::set_intersection(order[i - 1].begin(), order[i - 1].end(), order[i].begin(), order[i].end(),
                            std::back_inserter(both));
      CHECK(both.size() == static_cast<std::size_t>(k - 1));
    }
  }
}

TEST_CASE("eta orders satisfy the checker") {
  for (auto [n, k] : {std::pair{4, 1}, {5, 1}, {5, 2}, {7, 3}, {6, 2}, {9, 4}, {6, 3}}) {
    CAPTURE(n);
    CAPTURE(k);
    std::vector<int> s;
    for (int i = 0; i < k; ++i) s.push_back((2 * i + 1) % n);
    const Arrangement start(s, n);
    const auto order = gammak::eta_order(n, k, start);
    CHECK(order.front() == start);
    const auto violation = gammak::check_eta_order(n, k, order);
    CHECK_MESSAGE(!violation, violation.value_or(""));
  }
  CHECK(gammak::eta_order(5, 2, Arrangement({0, 1}, 5)).size() == 20);
  CHECK(gammak::eta_order(4, 1, Arrangement({2}, 4)).size() == 4);
  CHECK_THROWS_AS(gammak::eta_order(5, 2, Arrangement({0, 1, 2}, 5)), InvalidArgument);
}

TEST_CASE("the checker rejects broken orders") {
  auto order = gammak::eta_order(5, 2, Arrangement({0, 1}, 5));
  auto dup = order;
  dup[3] = dup[2];
  CHECK(gammak::check_eta_order(5, 2, dup));
  auto swapped = order;
  std::swap(swapped[1], swapped[7]);
  CHECK(gammak::check_eta_order(5, 2, swapped));
  order.pop_back();
  CHECK(gammak::check_eta_order(5, 2, order));
}

TEST_CASE("blocks are copies of the derangement graph on the prefix") {
  // At (5,2) each block has 6 vertices; inside it adjacency is prefix derangement.
  const GraphSpec spec = GraphSpec::fixed_k(5, 2);
  std::vector<Permutation> block;
  for_each_vertex(spec, [&](const Arrangement& v) {
    if (v[3] == 0 && v[4] == 1) block.emplace_back(v);
  });
  REQUIRE(block.size() == 6);
  int edges = 0;
  for (const auto& a : block)
    for (const auto& b : block) {
      if (a == b) continue;
      int prefix_agree = 0;
      for (int i = 0; i < 3; ++i) prefix_agree += a[i] == b[i];
      CHECK(is_adjacent(spec, a.arrangement(), b.arrangement()) == (prefix_agree == 0));
      edges += prefix_agree == 0;
    }
  CHECK(edges == 12);  // two triangles, counted in both directions
}

TEST_CASE("bridges between consecutive blocks") {
  // k = 1: consecutive blocks always swap one value.
  const Permutation x = P({1, 2, 3, 4, 5});
  const Permutation y = P({2, 3, 4, 1, 5});
  const auto any = [](const Permutation&, const Permutation&) { return true; };
  const auto same = gammak::bridge_blocks(x, y, 1, Arrangement({3}, 5), any);
  REQUIRE(same);
  CHECK(same->constructed);
  CHECK(delta(same->entry_first, x) == 1);
  CHECK(delta(same->entry_second, y) == 1);
  CHECK(delta(same->entry_first, same->entry_second) == 1);

  // n = 2k+1 with the same value set: no entry pair exists at all.
  const Permutation a = P({1, 2, 3, 4, 5});
  const Permutation b = P({2, 3, 1, 4, 5});
  CHECK_FALSE(gammak::bridge_blocks(a, b, 2, Arrangement({4, 3}, 5), any));

  // Shifted value set at n = 2k+1 works by construction.
  const auto shifted = gammak::bridge_blocks(a, b, 2, Arrangement({4, 0}, 5), any);
  REQUIRE(shifted);
  CHECK(shifted->constructed);
}

TEST_CASE("the scan finds whatever the relabelling family finds") {
  const GraphSpec spec = GraphSpec::fixed_k(6, 1);
  const auto any = [](const Permutation&, const Permutation&) { return true; };
  int constructed = 0;
  int scanned_only = 0;
  int index = 0;
  for (const auto& [u, v] : all_edges(spec)) {
    if (index++ % 997 != 0) continue;
    const Permutation x(u);
    const Permutation y(v);
    int pos = 0;
    while (x[pos] != y[pos]) ++pos;
    // Put the agreement last so x and y share a block.
    const Permutation rho = Permutation::transposition(6, pos, 5);
    const Permutation xs = compose(x, rho);
    const Permutation ys = compose(y, rho);
    for (int t = 0; t < 6; ++t) {
      if (t == xs[5]) continue;
      const Arrangement target({t}, 6);
      const auto quick = gammak::bridge_blocks(xs, ys, 1, target, any, false);
      const auto full = gammak::bridge_blocks(xs, ys, 1, target, any);
      REQUIRE(full);
      CHECK(delta(full->entry_first, xs) == 1);
      CHECK(delta(full->entry_second, ys) == 1);
      CHECK(delta(full->entry_first, full->entry_second) == 1);
      constructed += quick.has_value();
      scanned_only += !quick.has_value();
    }
  }
  CHECK(constructed > 0);
  CHECK(scanned_only == 0);
}

TEST_CASE("n - k = 3 leaves two components") {
  // Edges multiply by 3-cycles; brute force confirms nothing longer than n!/2.
  const GraphSpec spec = GraphSpec::fixed_k(4, 1);
  const Arrangement u = P({1, 2, 3, 4}).arrangement();
  const Arrangement v = P({1, 3, 4, 2}).arrangement();
  CHECK(oracle::brute_force_cycle(spec, u, v, 12).status == oracle::SearchStatus::Found);
  CHECK(oracle::brute_force_cycle(spec, u, v, 13).status == oracle::SearchStatus::NotFound);
  CHECK_THROWS_AS(gammak::cycle(Permutation(u), Permutation(v), 1, 13), LengthOutOfRange);
}

TEST_CASE("every edge of gammak:4:1, every feasible length") { CHECK(sweep_failures(4, 1, 1) == 0); }

TEST_CASE("every edge of gammak:5:1, every length") { CHECK(sweep_failures(5, 1, 1) == 0); }

TEST_CASE("sampled edges of gammak:5:2") {
  gammak::ConstructStats stats;
  CHECK(sweep_failures(5, 2, 6, &stats) == 0);
  MESSAGE("bridges: ", stats.constructed_bridges, " constructed, ", stats.fallback_bridges, " by scan");
}

TEST_CASE("larger instances") {
  const Permutation a = P({1, 2, 3, 4, 5, 6, 7});
  const Permutation b = P({1, 3, 2, 5, 4, 7, 6});
  for (int len : {3, 24, 25, 26, 100, 719, 720, 721, 5039, 5040}) {
    CAPTURE(len);
    CHECK_NOTHROW(gammak::construct(a, b, 1, len));
  }
  const Permutation c = P({1, 2, 3, 5, 4, 7, 6});
  for (int len : {3, 23, 24, 25, 47, 48, 49, 1000, 5040}) {
    CAPTURE(len);
    CHECK_NOTHROW(gammak::construct(a, c, 3, len));
  }
}

TEST_CASE("k = 0 is the derangement graph") {
  const auto w = gammak::construct(P({1, 2, 3, 4}), P({2, 1, 4, 3}), 0, 24);
  CHECK(w.length() == 24);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(gammak::cycle(P({1, 2, 3, 4}), P({1, 3, 4, 2}), 2, 5), PreconditionViolated);
  CHECK_THROWS_AS(gammak::cycle(P({1, 2, 3, 4}), P({2, 1, 4, 3}), 1, 5), InvalidArgument);
  CHECK_THROWS_AS(gammak::cycle(P({1, 2, 3, 4}), P({1, 3, 4, 2}), 1, 25), LengthOutOfRange);
}
