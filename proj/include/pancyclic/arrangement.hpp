#pragma once

// Cycles through every edge of the arrangement graph G(n, k): k-tuples of
// distinct values from [n], adjacent when they differ in every coordinate
// (n >= k >= 4).
//
// Fixing a pivot value p splits the tuples into H1 (containing p) and H2
// (avoiding p, a copy of G(n-1, k)). Inside H1 the position rotations of a
// tuple form k-cliques, one per placement of p at a fixed anchor position, so
// the derangement-graph recipe (dense quotient cycle, lift, stitch) applies.
// Longer cycles splice an H2 cycle, built recursively, into an H1 cycle.

#include <cstdint>
#include <optional>
#include <vector>

#include "pancyclic/graph.hpp"
#include "pancyclic/perm.hpp"

namespace pancyclic::arrangement {

/// Split of G(n, k) by a pivot value.
struct SplitView {
  int n;
  int k;
  int pivot;

  bool in_h1(const Arrangement& x) const { return x.contains(pivot); }
  std::uint64_t h1_order() const;
  std::uint64_t h2_order() const;
  /// H2 vertex as a vertex of G(n-1, k): values above the pivot shift down.
  Arrangement to_h2(const Arrangement& x) const;
  Arrangement from_h2(const Arrangement& x) const;
};

/// Vertex of the quotient graph on (k-1)-tuples for an H1 tuple with the pivot at `anchor`.
Arrangement quotient_vertex(const Arrangement& tau, int pivot, int anchor);
Arrangement lift_vertex(const Arrangement& hat, int pivot, int anchor);

struct LiftChoice {
  CyclicPermutation sigma;  // acts on positions
  int shift;                // beta o sigma^shift carries the pivot at the anchor
};

/// First cyclic sigma on positions (lexicographic) for which beta's clique
/// representative beta0 = beta o sigma^shift is a quotient neighbour of alpha.
std::optional<LiftChoice> select_lift(const Arrangement& alpha, const Arrangement& beta, int pivot);

/// Cycle [alpha, beta, ...] of `length` vertices inside H1 for the pivot.
/// Both endpoints must contain the pivot; 3 <= length <= |H1|.
std::vector<Arrangement> h1_cycle(const Arrangement& alpha, const Arrangement& beta, int length, int pivot);

/// alpha and beta with the same value set: an H1 cycle with an H2 cycle spliced in.
std::vector<Arrangement> merge_same_set(const Arrangement& alpha, const Arrangement& beta, int length,
                                        const SplitView& split);

/// alpha contains the pivot and beta does not: cycles through (alpha, alpha o s)
/// in H1 and (beta, beta o s) in H2 joined along alpha-beta and their shifts.
std::vector<Arrangement> merge_diff_set(const Arrangement& alpha, const Arrangement& beta, int length,
                                        const SplitView& split);

/// Cycle [alpha, beta, ...] of exactly `length` vertices in G(n, k).
std::vector<Arrangement> cycle(const Arrangement& alpha, const Arrangement& beta, int length);

/// Validated witness for arr:n:k.
CycleWitness construct(const Arrangement& alpha, const Arrangement& beta, int length);

}  // namespace pancyclic::arrangement
