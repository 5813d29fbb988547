#include "doctest.h"

#include "pancyclic/gamma.hpp"
#include "pancyclic/oracle.hpp"

using namespace pancyclic;

namespace {

Permutation P(std::initializer_list<int> one_based) {
  std::vector<int> w;
  for (int x : one_based) w.push_back(x - 1);
  return Permutation(w);
}

void check_all_lengths(const Permutation& a, const Permutation& b) {
  const int n = a.size();
  const GraphSpec spec = GraphSpec::derangement(n);
  for (int len = 3; len <= static_cast<int>(factorial(n)); ++len) {
    CAPTURE(len);
    const auto c = gamma::cycle(a, b, len);
    REQUIRE(c.size() == static_cast<std::size_t>(len));
    CHECK(c[0] == a);
    CHECK(c[1] == b);
    std::vector<Arrangement> words;
    for (const auto& p : c) words.push_back(p.arrangement());
    const auto verdict = oracle::validate_cycle(spec, words, {a.arrangement(), b.arrangement()}, len);
    CHECK_MESSAGE(verdict.ok(), verdict.message);
  }
}

}  // namespace

TEST_CASE("length plans are sound") {
  for (int n = 5; n <= 7; ++n) {
    for (int len = 6; len <= static_cast<int>(factorial(n)); ++len) {
      const auto plan = gamma::plan_length(len, n);
      CHECK(plan.total() == len);
      CHECK(plan.quotient_length >= 3);
      CHECK(static_cast<std::uint64_t>(plan.quotient_length) <= factorial(n - 1));
      for (int j : plan.path_lengths) {
        CHECK(j >= 1);
        CHECK(j <= n - 1);
      }
    }
  }
  CHECK_THROWS_AS(gamma::plan_length(121, 5), LengthOutOfRange);
  CHECK_THROWS_AS(gamma::plan_length(5, 5), LengthOutOfRange);
  const auto even = gamma::plan_lengths(9, 4, 6, [](int q) { return q % 2 == 0; });
  CHECK(even.quotient_length == 4);
  CHECK(even.total() == 9);
}

TEST_CASE("sigma selection avoids the ratio and gives two agreements") {
  const Permutation a = P({1, 2, 3, 4, 5});
  const Permutation b = P({2, 3, 4, 5, 1});
  const auto choice = gamma::select_sigma_and_shift(a, b);
  const Permutation ratio = compose(a, b.inverse());
  for (int i = 0; i < 5; ++i) CHECK_FALSE(choice.sigma.power(i) == ratio);
  CHECK(delta(a, compose(choice.sigma.power(choice.shift), b)) >= 2);

  const auto norm = gamma::normalize(a, b, choice);
  CHECK(norm.alpha[4] == 4);
  CHECK(norm.beta0[4] == 4);
  CHECK(norm.restore(norm.alpha) == a);
  CHECK(norm.restore(norm.beta) == b);
}

TEST_CASE("every length through one edge of Gamma_4") { check_all_lengths(P({1, 2, 3, 4}), P({2, 1, 4, 3})); }

TEST_CASE("every edge of Gamma_4, every length") {
  const GraphSpec spec = GraphSpec::derangement(4);
  int failures = 0;
  for (const auto& [u, v] : all_edges(spec)) {
    for (const auto& [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
      for (int len = 3; len <= 24; ++len) {
        try {
          const auto w = gamma::construct(Permutation(x), Permutation(y), len);
          failures += !oracle::validate_cycle(w, {x, y}, len).ok();
        } catch (const Error&) {
          ++failures;
        }
      }
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("every length through sampled edges of Gamma_5") {
  check_all_lengths(P({1, 2, 3, 4, 5}), P({2, 3, 4, 5, 1}));
  check_all_lengths(P({3, 1, 5, 2, 4}), P({1, 5, 4, 3, 2}));
}

TEST_CASE("sampled lengths in Gamma_6") {
  const Permutation a = P({1, 2, 3, 4, 5, 6});
  const Permutation b = P({2, 1, 4, 3, 6, 5});
  for (int len : {3, 4, 5, 6, 7, 11, 36, 100, 359, 360, 361, 719, 720}) {
    CAPTURE(len);
    CHECK_NOTHROW(gamma::construct(a, b, len));
  }
}

TEST_CASE("bad input is rejected") {
  const Permutation a = P({1, 2, 3, 4});
  CHECK_THROWS_AS(gamma::cycle(a, P({2, 1, 3, 4}), 5), InvalidArgument);
  CHECK_THROWS_AS(gamma::cycle(a, P({2, 1, 4, 3}), 25), LengthOutOfRange);
  CHECK_THROWS_AS(gamma::cycle(a, P({2, 1, 4, 3}), 2), LengthOutOfRange);
  CHECK_THROWS_AS(gamma::cycle(P({1, 2, 3}), P({2, 3, 1}), 3), PreconditionViolated);
}
