#include "pancyclic/arrangement.hpp"

#include <algorithm>

#include "pancyclic/dense.hpp"
#include "pancyclic/detail/stitch.hpp"
#include "pancyclic/gamma.hpp"
#include "pancyclic/oracle.hpp"

namespace pancyclic::arrangement {

std::uint64_t SplitView::h1_order() const { return static_cast<std::uint64_t>(k) * falling_factorial(n - 1, k - 1); }

std::uint64_t SplitView::h2_order() const { return falling_factorial(n - 1, k); }

Arrangement SplitView::to_h2(const Arrangement& x) const {
  std::vector<int> v = x.to_vector();
  for (int& a : v) {
    if (a == pivot) throw InvalidArgument("tuple contains the pivot, so it is not in H2");
    if (a > pivot) --a;
  }
  return Arrangement(v, n - 1);
}

Arrangement SplitView::from_h2(const Arrangement& x) const {
  std::vector<int> v = x.to_vector();
  for (int& a : v)
    if (a >= pivot) ++a;
  return Arrangement(v, n);
}

Arrangement quotient_vertex(const Arrangement& tau, int pivot, int anchor) {
  if (tau[anchor] != pivot) throw InvalidArgument("quotient_vertex: pivot is not at the anchor");
  std::vector<int> v;
  for (int i = 0; i < tau.size(); ++i) {
    if (i == anchor) continue;
    v.push_back(tau[i] > pivot ? tau[i] - 1 : tau[i]);
  }
  return Arrangement(v, tau.ambient() - 1);
}

Arrangement lift_vertex(const Arrangement& hat, int pivot, int anchor) {
  std::vector<int> v;
  for (int i = 0; i < hat.size(); ++i) v.push_back(hat[i] >= pivot ? hat[i] + 1 : hat[i]);
  v.insert(v.begin() + anchor, pivot);
  return Arrangement(v, hat.ambient() + 1);
}

namespace {

bool adjacent(const Arrangement& a, const Arrangement& b) { return delta(a, b) == 0; }

Arrangement rotate(const Arrangement& x, int j) {
  return permute_positions(x, CyclicPermutation::canonical(x.size()).power(j));
}

Arrangement replace_value(const Arrangement& x, int from, int to) {
  std::vector<int> v = x.to_vector();
  for (int& a : v)
    if (a == from) a = to;
  return Arrangement(v, x.ambient());
}

void require_edge(const Arrangement& alpha, const Arrangement& beta) {
  if (alpha.size() != beta.size() || alpha.ambient() != beta.ambient()) {
    throw InvalidArgument("endpoints have different shapes");
  }
  if (alpha.size() < 4) throw PreconditionViolated("the arrangement graph needs k >= 4");
  if (!adjacent(alpha, beta)) throw InvalidArgument("endpoints agree in some coordinate");
}

// First vertex (lexicographic) adjacent to both endpoints that passes `keep`.
template <typename Keep>
std::optional<Arrangement> common_neighbour(const Arrangement& alpha, const Arrangement& beta, Keep keep) {
  std::optional<Arrangement> found;
  const GraphSpec spec = GraphSpec::arrangement(alpha.ambient(), alpha.size());
  for_each_neighbor(spec, alpha, [&](const Arrangement& w) {
    if (!found && !(w == beta) && adjacent(w, beta) && keep(w)) found = w;
  });
  return found;
}

// alpha, beta, beta's rotations, beta o sigma, alpha o sigma, alpha's rotations.
std::vector<Arrangement> two_clique(const Arrangement& alpha, const Arrangement& beta, int length) {
  const int k = alpha.size();
  std::optional<CyclicPermutation> chosen;
  for_each_cyclic(k, [&](const CyclicPermutation& s) {
    const auto members = coset(beta, s);
    if (std::find(members.begin(), members.end(), alpha) != members.end()) return false;
    chosen = s;
    return true;
  });
  if (!chosen) throw ConstructionFailed("no rotation group separates the endpoints");
  const Arrangement beta0 = permute_positions(beta, chosen->permutation());
  const Arrangement alpha0 = permute_positions(alpha, chosen->permutation());
  auto fill = [&](const Arrangement& base, const Arrangement& skip1, const Arrangement& skip2, int count) {
    std::vector<Arrangement> rest;
    for (const auto& m : coset(base, *chosen))
      if (!(m == skip1) && !(m == skip2)) rest.push_back(m);
    std::sort(rest.begin(), rest.end());
    rest.resize(static_cast<std::size_t>(count));
    return rest;
  };
  const int through_beta = std::min(k, length - 2);
  const int through_alpha = length - through_beta;
  std::vector<Arrangement> out{alpha, beta};
  for (auto& m : fill(beta, beta, beta0, through_beta - 2)) out.push_back(m);
  out.push_back(beta0);
  out.push_back(alpha0);
  for (auto& m : fill(alpha, alpha0, alpha, through_alpha - 2)) out.push_back(m);
  return out;
}

std::vector<Arrangement> lifted(const Arrangement& alpha, const Arrangement& beta, int length, int pivot) {
  const int n = alpha.ambient();
  const int k = alpha.size();
  const auto choice = select_lift(alpha, beta, pivot);
  if (!choice) throw ConstructionFailed("no rotation gives a quotient neighbour for this pivot");
  const int anchor = alpha.position_of(pivot);
  const Arrangement beta0 = permute_positions(beta, choice->sigma.power(choice->shift));

  const auto graph = DenseGraph::cached_snapshot(GraphSpec::gtilde1(n, k));
  const auto plan = gamma::plan_lengths(length, k, graph->order());
  const auto u = static_cast<int>(rank(quotient_vertex(alpha, pivot, anchor)));
  const auto v = static_cast<int>(rank(quotient_vertex(beta0, pivot, anchor)));
  std::vector<Arrangement> reps;
  for (int x : cycle_through_edge(*graph, u, v, plan.quotient_length)) {
    reps.push_back(lift_vertex(unrank(static_cast<std::uint64_t>(x), k - 1, n - 1), pivot, anchor));
  }
  const CyclicPermutation sigma = choice->sigma;
  return detail::stitch_cliques<Arrangement>(
      reps, beta, [&](const Arrangement& tau) { return coset(tau, sigma); }, adjacent, plan.path_lengths);
}

// Path u ... v of `count` vertices in H2, read off a recursive H2 cycle through (u, v).
std::vector<Arrangement> h2_path(const Arrangement& u, const Arrangement& v, int count, const SplitView& split) {
  if (count == 2) return {u, v};
  const auto c = cycle(split.to_h2(u), split.to_h2(v), count);
  std::vector<Arrangement> path{u};
  for (std::size_t i = c.size() - 1; i >= 2; --i) path.push_back(split.from_h2(c[i]));
  path.push_back(v);
  return path;
}

}  // namespace

std::optional<LiftChoice> select_lift(const Arrangement& alpha, const Arrangement& beta, int pivot) {
  const int k = alpha.size();
  const int anchor = alpha.position_of(pivot);
  const int target = beta.position_of(pivot);
  if (anchor < 0 || target < 0) throw InvalidArgument("select_lift: both tuples must contain the pivot");
  const bool same_set = alpha.value_mask() == beta.value_mask();
  std::optional<LiftChoice> found;
  for_each_cyclic(k, [&](const CyclicPermutation& s) {
    for (int i = 1; i < k; ++i) {
      const Permutation step = s.power(i);
      if (step[anchor] != target) continue;
      const Arrangement beta0 = permute_positions(beta, step);
      if (beta0 == alpha || (same_set && delta(alpha, beta0) < 2)) return false;
      found = LiftChoice{s, i};
      return true;
    }
    return false;
  });
  return found;
}

std::vector<Arrangement> h1_cycle(const Arrangement& alpha, const Arrangement& beta, int length, int pivot) {
  require_edge(alpha, beta);
  const SplitView split{alpha.ambient(), alpha.size(), pivot};
  if (split.n <= split.k) throw PreconditionViolated("h1_cycle needs n > k");
  if (!alpha.contains(pivot) || !beta.contains(pivot)) throw InvalidArgument("h1_cycle: endpoints must contain the pivot");
  if (length < 3 || static_cast<std::uint64_t>(length) > split.h1_order()) {
    throw LengthOutOfRange("length " + std::to_string(length) + " outside [3, " + std::to_string(split.h1_order()) + "]");
  }
  if (length == 3) {
    auto w = common_neighbour(alpha, beta, [&](const Arrangement& x) { return x.contains(pivot); });
    if (!w) throw ConstructionFailed("no triangle through the edge inside H1");
    return {alpha, beta, *w};
  }
  if (length <= 5) return two_clique(alpha, beta, length);
  return lifted(alpha, beta, length, pivot);
}

std::vector<Arrangement> merge_same_set(const Arrangement& alpha, const Arrangement& beta, int length,
                                        const SplitView& split) {
  const int n = split.n;
  const int k = split.k;
  const int p = split.pivot;
  const auto h1 = static_cast<int>(split.h1_order());
  if (length <= h1) return h1_cycle(alpha, beta, length, p);
  int first = h1;
  int second = length - h1;
  if (second == 1) {
    first -= 1;
    second = 2;
  }
  const auto c1 = h1_cycle(alpha, beta, first, p);
  // Swap the pivot for a value r outside an H1 edge and rotate: the copies land in H2
  // and are adjacent to the originals and to each other.
  for (std::size_t i = 1; i < c1.size(); ++i) {
    const Arrangement& s1 = c1[i];
    const Arrangement& s2 = c1[(i + 1) % c1.size()];
    for (int r = 0; r < n; ++r) {
      if (s1.contains(r) || s2.contains(r)) continue;
      for (int j = 1; j < k; ++j) {
        const Arrangement u = rotate(replace_value(s1, p, r), j);
        const Arrangement v = rotate(replace_value(s2, p, r), j);
        if (!adjacent(s1, u) || !adjacent(s2, v) || !adjacent(u, v)) continue;
        std::vector<Arrangement> out(c1.begin(), c1.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        for (auto& x : h2_path(u, v, second, split)) out.push_back(std::move(x));
        out.insert(out.end(), c1.begin() + static_cast<std::ptrdiff_t>(i) + 1, c1.end());
        return out;
      }
    }
  }
  throw ConstructionFailed("no H1 edge admits a substitution into H2");
}

std::vector<Arrangement> merge_diff_set(const Arrangement& alpha, const Arrangement& beta, int length,
                                        const SplitView& split) {
  const int k = split.k;
  const int p = split.pivot;
  if (!alpha.contains(p) || beta.contains(p)) throw InvalidArgument("merge_diff_set: pivot must separate the endpoints");
  if (length == 3) {
    auto w = common_neighbour(alpha, beta, [](const Arrangement&) { return true; });
    if (!w) throw ConstructionFailed("no common neighbour of the endpoints");
    return {alpha, beta, *w};
  }
  const int first = static_cast<int>(std::min<std::uint64_t>(split.h1_order(), static_cast<std::uint64_t>(length - 2)));
  const int second = length - first;
  for (int j = 1; j < k; ++j) {
    const Arrangement a1 = rotate(alpha, j);
    const Arrangement b1 = rotate(beta, j);
    if (!adjacent(a1, b1)) continue;
    std::vector<Arrangement> c1{alpha, a1};
    if (first > 2) {
      try {
        c1 = h1_cycle(alpha, a1, first, p);
      } catch (const ConstructionFailed&) {
        continue;
      }
    }
    std::vector<Arrangement> out{alpha};
    for (auto& x : h2_path(beta, b1, second, split)) out.push_back(std::move(x));
    out.push_back(a1);
    out.insert(out.end(), c1.begin() + 2, c1.end());
    return out;
  }
  throw ConstructionFailed("no rotation joins the two halves");
}

std::vector<Arrangement> cycle(const Arrangement& alpha, const Arrangement& beta, int length) {
  require_edge(alpha, beta);
  const int n = alpha.ambient();
  const int k = alpha.size();
  const std::uint64_t total = falling_factorial(n, k);
  if (length < 3 || static_cast<std::uint64_t>(length) > total) {
    throw LengthOutOfRange("length " + std::to_string(length) + " outside [3, " + std::to_string(total) + "]");
  }
  if (n == k) {
    std::vector<Arrangement> out;
    for (const auto& p : gamma::cycle(Permutation(alpha), Permutation(beta), length)) out.push_back(p.arrangement());
    return out;
  }
  std::vector<int> values = alpha.to_vector();
  std::sort(values.begin(), values.end());
  const bool same_set = alpha.value_mask() == beta.value_mask();
  for (int p : values) {
    if (!same_set && beta.contains(p)) continue;
    const SplitView split{n, k, p};
    try {
      return same_set ? merge_same_set(alpha, beta, length, split) : merge_diff_set(alpha, beta, length, split);
    } catch (const ConstructionFailed&) {
      // try the next pivot
    }
  }
  throw ConstructionFailed("no pivot yields a cycle of length " + std::to_string(length));
}

CycleWitness construct(const Arrangement& alpha, const Arrangement& beta, int length) {
  CycleWitness witness{GraphSpec::arrangement(alpha.ambient(), alpha.size()), cycle(alpha, beta, length)};
  const auto check = oracle::validate_cycle(witness, {alpha, beta}, length);
  if (!check.ok()) throw ConstructionFailed("arrangement construction produced an invalid witness: " + check.message);
  return witness;
}

}  // namespace pancyclic::arrangement
