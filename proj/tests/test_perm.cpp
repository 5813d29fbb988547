#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "pancyclic/perm.hpp"

using namespace pancyclic;

namespace {

// Plain enumeration, independent of the library's counting code.
std::vector<std::vector<int>> all_words(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Permutation one_based(std::initializer_list<int> v) {
  std::vector<int> w;
  for (int x : v) w.push_back(x - 1);
  return Permutation(w);
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
  CHECK(compose(one_based({2, 1, 3}), one_based({1, 3, 2})) == one_based({2, 3, 1}));
  CHECK(compose(one_based({1, 3, 2}), one_based({2, 1, 3})) == one_based({3, 1, 2}));
}

TEST_CASE("powers of a cyclic permutation") {
  const CyclicPermutation s(one_based({2, 3, 4, 1}));
  CHECK(s.power(2) == one_based({3, 4, 1, 2}));
  CHECK(s.power(4) == Permutation::identity(4));
  CHECK(s.power(-1) == s.permutation().inverse());
  for (int i = 1; i < 4; ++i) CHECK(s.power(i).is_derangement());
  CHECK_THROWS_AS(CyclicPermutation(one_based({2, 1, 4, 3})), InvalidArgument);
}

TEST_CASE("derangement numbers match enumeration") {
  const std::uint64_t frozen[] = {1, 0, 1, 2, 9, 44, 265};
  for (int n = 0; n <= 6; ++n) {
    std::uint64_t counted = 0;
    for (const auto& w : all_words(n)) {
      bool ok = true;
      for (int i = 0; i < n; ++i) ok = ok && w[static_cast<std::size_t>(i)] != i;
      counted += ok;
    }
    CHECK(counted == frozen[n]);
    CHECK(derangement_count(n) == frozen[n]);
  }
  CHECK(derangement_count(10) == 1334961);
}

TEST_CASE("counting helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(falling_factorial(5, 4) == 120);
  CHECK(falling_factorial(6, 2) == 30);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(4, 5) == 0);
}

TEST_CASE("construction rejects malformed input") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), InvalidArgument);
  CHECK_THROWS_AS(Arrangement({0, 5}, 4), InvalidArgument);
  CHECK_THROWS_AS(Arrangement({1, 1}, 4), InvalidArgument);
  CHECK_NOTHROW(Arrangement({3, 0}, 4));
}

TEST_CASE("delta counts agreeing positions") {
  CHECK(delta(one_based({1, 2, 3, 4}), one_based({2, 1, 3, 4})) == 2);
  CHECK(delta(one_based({1, 2, 3, 4}), one_based({2, 1, 4, 3})) == 0);
  CHECK(delta(Arrangement({0, 1}, 4), Arrangement({0, 2}, 4)) == 1);
  CHECK(common_values(Arrangement({0, 1}, 4), Arrangement({1, 2}, 4)) == 1);
}

TEST_CASE("cosets of a cyclic permutation partition S_n into cliques") {
  for (int n = 3; n <= 5; ++n) {
    for_each_cyclic(n, [&](const CyclicPermutation& s) {
      std::set<Permutation> covered;
      for (const auto& w : all_words(n)) {
        const Permutation tau(w);
        const auto c = coset(tau, s);
        REQUIRE(c.size() == static_cast<std::size_t>(n));
        CHECK(c.front() == tau);
        for (std::size_t a = 0; a < c.size(); ++a)
          for (std::size_t b = a + 1; b < c.size(); ++b) CHECK(delta(c[a], c[b]) == 0);
        covered.insert(*std::min_element(c.begin(), c.end()));
      }
      CHECK(covered.size() * static_cast<std::size_t>(n) == factorial(n));
      return n == 5;  // one sigma is enough for n = 5
    });
  }
}

TEST_CASE("summing agreements over a full coset gives n") {
  const auto words = all_words(5);
  const CyclicPermutation s = CyclicPermutation::canonical(5);
  for (std::size_t i = 0; i < words.size(); i += 7) {
    for (std::size_t j = 0; j < words.size(); j += 11) {
      const Permutation a(words[i]);
      const Permutation b(words[j]);
      int total = 0;
      for (int t = 0; t < 5; ++t) total += delta(a, compose(s.power(t), b));
      CHECK(total == 5);
    }
  }
}

TEST_CASE("position cosets of arrangements") {
  // Summing over all position shifts counts the shared values.
  const CyclicPermutation s = CyclicPermutation::canonical(3);
  const Arrangement a({0, 1, 2}, 5);
  const Arrangement b({2, 4, 1}, 5);
  int total = 0;
  for (const auto& x : coset(b, s)) total += delta(a, x);
  CHECK(total == common_values(a, b));
  const auto c = coset(a, s);
  CHECK(c[1] == permute_positions(a, s.permutation()));
}

TEST_CASE("relabelling values preserves agreement counts") {
  const auto words = all_words(4);
  const Permutation g = one_based({3, 1, 4, 2});
  for (const auto& x : words)
    for (const auto& y : words) {
      const Permutation a(x);
      const Permutation b(y);
      CHECK(delta(relabel(g, a), relabel(g, b)) == delta(a, b));
      CHECK(delta(permute_positions(a, g), permute_positions(b, g)) == delta(a, b));
    }
}

TEST_CASE("inverse, fixed points and single cycles") {
  const Permutation p = one_based({3, 1, 2, 4});
  CHECK(compose(p, p.inverse()) == Permutation::identity(4));
  CHECK(p.fixed_point_count() == 1);
  CHECK_FALSE(p.is_single_cycle());
  CHECK(one_based({2, 3, 4, 1}).is_single_cycle());
  CHECK(Permutation::transposition(4, 0, 3) == one_based({4, 2, 3, 1}));
  int cyclic = 0;
  for_each_cyclic(5, [&](const CyclicPermutation&) {
    ++cyclic;
    return false;
  });
  CHECK(cyclic == 24);
}
