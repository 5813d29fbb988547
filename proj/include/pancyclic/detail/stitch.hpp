#pragma once

// Threads one path through each clique of a lifted quotient cycle.
//
// reps[0..q-1] are the lifted quotient vertices (reps[0] is the protected
// edge's first endpoint); clique_of(rep) lists the rep's clique with the rep
// itself first. entry[s] is a clique member adjacent to reps[s-1]; the path
// inside clique s runs entry[s] -> ... -> reps[s] using path_lengths[s] edges.
// Output reads reps[0], entry[1], ..., reps[1], entry[2], ..., reps[q-1], entry[0], ...

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "pancyclic/perm.hpp"

namespace pancyclic::detail {

template <typename V>
std::vector<V> stitch_cliques(const std::vector<V>& reps, const V& second,
                              const std::function<std::vector<V>(const V&)>& clique_of,
                              const std::function<bool(const V&, const V&)>& adjacent,
                              const std::vector<int>& path_lengths) {
  const std::size_t q = reps.size();
  if (q < 3 || path_lengths.size() != q) throw ConstructionFailed("stitch: plan does not match quotient cycle");

  std::vector<std::vector<V>> cliques;
  cliques.reserve(q);
  for (const V& r : reps) cliques.push_back(clique_of(r));

  std::vector<V> entry(q);
  if (std::find(cliques[1].begin() + 1, cliques[1].end(), second) == cliques[1].end()) {
    throw ConstructionFailed("stitch: second vertex is not in the second clique");
  }
  entry[1] = second;
  for (std::size_t i = 1; i < q; ++i) {
    const std::size_t target = (i + 1) % q;
    auto it = std::find_if(cliques[target].begin() + 1, cliques[target].end(),
                           [&](const V& m) { return adjacent(reps[i], m); });
    if (it == cliques[target].end()) {
      throw ConstructionFailed("stitch: no clique member adjacent to quotient vertex " + std::to_string(i));
    }
    entry[target] = *it;
  }

  auto interior = [&](std::size_t s) {
    std::vector<V> rest;
    for (const V& m : cliques[s]) {
      if (!(m == entry[s]) && !(m == reps[s])) rest.push_back(m);
    }
    std::sort(rest.begin(), rest.end());
    const auto take = static_cast<std::size_t>(path_lengths[s] - 1);
    if (path_lengths[s] < 1 || take > rest.size()) throw ConstructionFailed("stitch: clique path too long");
    rest.resize(take);
    return rest;
  };

  std::vector<V> out;
  out.push_back(reps[0]);
  for (std::size_t s = 1; s < q; ++s) {
    out.push_back(entry[s]);
    for (V& m : interior(s)) out.push_back(std::move(m));
    out.push_back(reps[s]);
  }
  out.push_back(entry[0]);
  for (V& m : interior(0)) out.push_back(std::move(m));
  return out;
}

}  // namespace pancyclic::detail
