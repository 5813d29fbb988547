#include "pancyclic/gamma.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "pancyclic/dense.hpp"
#include "pancyclic/detail/latin.hpp"
#include "pancyclic/detail/stitch.hpp"
#include "pancyclic/oracle.hpp"

namespace pancyclic::gamma {

int LengthPlan::total() const {
  return quotient_length + std::accumulate(path_lengths.begin(), path_lengths.end(), 0);
}

LengthPlan plan_lengths(int length, int clique_size, long long max_quotient, const std::function<bool(int)>& allowed) {
  const int lowest = std::max(3, (length + clique_size - 1) / clique_size);
  const long long highest = std::min<long long>(max_quotient, length / 2);
  for (int q = lowest; q <= highest; ++q) {
    if (allowed && !allowed(q)) continue;
    LengthPlan plan;
    plan.quotient_length = q;
    plan.path_lengths.assign(static_cast<std::size_t>(q), 1);
    int extra = length - 2 * q;
    for (int& j : plan.path_lengths) {
      const int add = std::min(extra, clique_size - 2);
      j += add;
      extra -= add;
    }
    if (extra == 0) return plan;
  }
  throw LengthOutOfRange("length " + std::to_string(length) + " cannot be split into clique paths of size " +
                         std::to_string(clique_size));
}

LengthPlan plan_length(int length, int n) {
  if (n < 2 || length < 6 || static_cast<std::uint64_t>(length) > factorial(n)) {
    throw LengthOutOfRange("plan_length: length " + std::to_string(length) + " outside [6, n!]");
  }
  return plan_lengths(length, n, static_cast<long long>(factorial(n - 1)));
}

SigmaShift select_sigma_and_shift(const Permutation& alpha, const Permutation& beta) {
  const int n = alpha.size();
  const Permutation ratio = compose(alpha, beta.inverse());
  std::optional<SigmaShift> found;
  for_each_cyclic(n, [&](const CyclicPermutation& sigma) {
    Permutation p = sigma.permutation();
    for (int i = 1; i < n; ++i) {
      if (p == ratio) return false;
      p = compose(sigma.permutation(), p);
    }
    Permutation shifted = beta;
    for (int i = 1; i < n; ++i) {
      shifted = compose(sigma.permutation(), shifted);
      if (delta(alpha, shifted) >= 2) {
        found = SigmaShift{sigma, i};
        return true;
      }
    }
    return false;
  });
  if (!found) throw ConstructionFailed("no cyclic permutation avoids alpha * beta^-1");
  return *found;
}

Permutation NormalizedEdge::restore(const Permutation& x) const {
  return compose(compose(value_relabel, x), position_relabel);
}

NormalizedEdge normalize(const Permutation& alpha, const Permutation& beta, const SigmaShift& choice) {
  const int n = alpha.size();
  const Permutation beta0 = compose(choice.sigma.power(choice.shift), beta);
  int c = -1;
  for (int i = n - 1; i >= 0; --i) {
    if (alpha[i] == beta0[i]) {
      c = i;
      break;
    }
  }
  if (c < 0) throw PreconditionViolated("normalize: alpha and beta0 share no position");
  const int d = alpha[c];
  const Permutation gamma = Permutation::transposition(n, d, n - 1);
  const Permutation rho = Permutation::transposition(n, c, n - 1);
  auto frame = [&](const Permutation& x) { return compose(compose(gamma, x), rho); };
  CyclicPermutation sigma(compose(compose(gamma, choice.sigma.permutation()), gamma));
  return NormalizedEdge{frame(alpha), frame(beta), frame(beta0), sigma, choice.shift, gamma, rho};
}

namespace {

Permutation drop_last(const Permutation& p) {
  std::vector<int> v = p.to_vector();
  v.pop_back();
  return Permutation(v);
}

Permutation append_fixed(const Permutation& p) {
  std::vector<int> v = p.to_vector();
  v.push_back(p.size());
  return Permutation(v);
}

void require_edge(const Permutation& alpha, const Permutation& beta) {
  if (alpha.size() != beta.size()) throw InvalidArgument("endpoints have different sizes");
  if (alpha.size() < 4) throw PreconditionViolated("the derangement graph is edge-pancyclic only for n >= 4");
  if (alpha == beta || delta(alpha, beta) != 0) throw InvalidArgument("endpoints are not adjacent");
}

}  // namespace

std::vector<Permutation> quotient_cycle(const Permutation& alpha_hat, const Permutation& beta0_hat, int q) {
  const int m = alpha_hat.size();
  const auto graph = DenseGraph::cached_snapshot(GraphSpec::complement_nontrivial(m));
  const auto u = static_cast<int>(rank(alpha_hat.arrangement()));
  const auto v = static_cast<int>(rank(beta0_hat.arrangement()));
  const IndexCycle indices = cycle_through_edge(*graph, u, v, q);
  std::vector<Permutation> out;
  out.reserve(indices.size());
  for (int x : indices) out.emplace_back(unrank(static_cast<std::uint64_t>(x), m, m));
  return out;
}

std::vector<Permutation> lift_and_stitch(const std::vector<Permutation>& quotient, const LengthPlan& plan,
                                         const NormalizedEdge& edge) {
  if (static_cast<int>(quotient.size()) != plan.quotient_length) {
    throw ConstructionFailed("lift_and_stitch: quotient length does not match the plan");
  }
  std::vector<Permutation> reps;
  reps.reserve(quotient.size());
  for (const Permutation& t : quotient) reps.push_back(append_fixed(t));
  if (!(reps[0] == edge.alpha) || !(reps[1] == edge.beta0)) {
    throw ConstructionFailed("lift_and_stitch: quotient cycle does not start at (alpha, beta0)");
  }
  const CyclicPermutation sigma = edge.sigma;
  return detail::stitch_cliques<Permutation>(
      reps, edge.beta, [&](const Permutation& tau) { return coset(tau, sigma); },
      [](const Permutation& a, const Permutation& b) { return delta(a, b) == 0; }, plan.path_lengths);
}

std::vector<Permutation> two_clique_cycle(const Permutation& alpha, const Permutation& beta, int length) {
  require_edge(alpha, beta);
  const int n = alpha.size();
  if (length < 4 || length > 2 * n) throw LengthOutOfRange("two-clique route covers lengths 4..2n");
  const SigmaShift choice = select_sigma_and_shift(alpha, beta);
  const Permutation step = choice.sigma.power(choice.shift);
  const Permutation alpha0 = compose(step, alpha);
  const Permutation beta0 = compose(step, beta);

  auto fill = [&](const Permutation& base, const Permutation& from, const Permutation& to, int count) {
    std::vector<Permutation> members = coset(base, choice.sigma);
    std::vector<Permutation> rest;
    for (auto& m : members)
      if (!(m == from) && !(m == to)) rest.push_back(m);
    std::sort(rest.begin(), rest.end());
    rest.resize(static_cast<std::size_t>(count));
    return rest;
  };

  const int through_beta = std::min(n, length - 2);
  const int through_alpha = length - through_beta;
  std::vector<Permutation> out{alpha, beta};
  for (auto& m : fill(beta, beta, beta0, through_beta - 2)) out.push_back(m);
  out.push_back(beta0);
  out.push_back(alpha0);
  for (auto& m : fill(alpha, alpha0, alpha, through_alpha - 2)) out.push_back(m);
  return out;
}

std::vector<Permutation> short_cycle(const Permutation& alpha, const Permutation& beta, int length) {
  require_edge(alpha, beta);
  const int n = alpha.size();
  if (length < 3 || length > 5) throw LengthOutOfRange("short_cycle covers lengths 3..5");
  if (length > n) return two_clique_cycle(alpha, beta, length);
  std::vector<Arrangement> rows{alpha.arrangement(), beta.arrangement()};
  while (static_cast<int>(rows.size()) < length) {
    auto next = detail::disjoint_row(rows, n, n);
    if (!next) throw ConstructionFailed("Latin rectangle could not be extended");
    rows.push_back(*next);
  }
  std::vector<Permutation> out;
  for (const auto& r : rows) out.emplace_back(r);
  return out;
}

std::vector<Permutation> cycle(const Permutation& alpha, const Permutation& beta, int length) {
  require_edge(alpha, beta);
  const int n = alpha.size();
  if (length < 3 || static_cast<std::uint64_t>(length) > factorial(n)) {
    throw LengthOutOfRange("length " + std::to_string(length) + " outside [3, " + std::to_string(factorial(n)) + "]");
  }
  if (length <= 4 || (length == 5 && n >= 5)) return short_cycle(alpha, beta, length);
  if (n == 4 && length <= 7) return two_clique_cycle(alpha, beta, length);

  const NormalizedEdge edge = normalize(alpha, beta, select_sigma_and_shift(alpha, beta));
  // The quotient for n = 4 is K_{3,3}, which only has 4- and 6-cycles.
  const LengthPlan plan =
      n == 4 ? plan_lengths(length, 4, 6, [](int q) { return q == 4 || q == 6; }) : plan_length(length, n);
  const auto quotient = quotient_cycle(drop_last(edge.alpha), drop_last(edge.beta0), plan.quotient_length);
  std::vector<Permutation> out = lift_and_stitch(quotient, plan, edge);
  for (auto& x : out) x = edge.restore(x);
  return out;
}

CycleWitness construct(const Permutation& alpha, const Permutation& beta, int length) {
  const GraphSpec spec = GraphSpec::derangement(alpha.size());
  CycleWitness witness{spec, {}};
  for (const auto& p : cycle(alpha, beta, length)) witness.vertices.push_back(p.arrangement());
  const auto check = oracle::validate_cycle(witness, {alpha.arrangement(), beta.arrangement()}, length);
  if (!check.ok()) throw ConstructionFailed("gamma construction produced an invalid witness: " + check.message);
  return witness;
}

}  // namespace pancyclic::gamma
