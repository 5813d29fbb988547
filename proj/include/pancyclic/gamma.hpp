#pragma once

// Cycles of every length through every edge of the derangement graph.
//
// For an edge (alpha, beta) the construction picks a cyclic sigma whose
// left cosets {tau, sigma tau, ...} are n-cliques, relabels so that alpha and
// a shifted copy of beta both fix the last point, finds a cycle in the dense
// quotient graph on S_{n-1}, and threads paths through one clique per
// quotient vertex. Lengths 3..5 come from mutually disjoint permutations
// (rows of a Latin rectangle); n = 4 uses the K_{3,3} quotient and a
// two-clique route for lengths 5..7.

#include <functional>
#include <vector>

#include "pancyclic/graph.hpp"
#include "pancyclic/perm.hpp"

namespace pancyclic::gamma {

/// total = quotient_length + sum(path_lengths); one path per quotient vertex.
struct LengthPlan {
  int quotient_length = 0;
  std::vector<int> path_lengths;

  int total() const;
};

/// Splits `length` into a quotient cycle of q vertices and q clique paths of
/// 1..clique_size-1 edges each. Only quotient lengths accepted by `allowed`
/// and within [3, max_quotient] are considered; the smallest feasible q wins.
LengthPlan plan_lengths(int length, int clique_size, long long max_quotient,
                        const std::function<bool(int)>& allowed = {});

/// Plan for the derangement graph on n points: cliques of size n, quotient of order (n-1)!.
LengthPlan plan_length(int length, int n);

struct SigmaShift {
  CyclicPermutation sigma;
  int shift;  // alpha and sigma^shift * beta agree in at least two positions
};

/// First cyclic sigma (lexicographic) none of whose powers equals alpha * beta^-1,
/// with the first shift giving at least two agreements.
SigmaShift select_sigma_and_shift(const Permutation& alpha, const Permutation& beta);

/// The edge after relabelling values (left by a transposition) and positions
/// (right by a transposition) so that alpha and beta0 both send n-1 to n-1.
struct NormalizedEdge {
  Permutation alpha;
  Permutation beta;
  Permutation beta0;  // sigma^shift * beta
  CyclicPermutation sigma;
  int shift;
  Permutation value_relabel;     // gamma, applied on the left
  Permutation position_relabel;  // rho, applied on the right

  /// Maps a vertex of the normalized frame back to the caller's frame.
  Permutation restore(const Permutation& x) const;
};

NormalizedEdge normalize(const Permutation& alpha, const Permutation& beta, const SigmaShift& choice);

/// Cycle [alpha_hat, beta0_hat, ...] of q vertices in the complement of the
/// derangement graph on S_{n-1} (any agreement adjacency).
std::vector<Permutation> quotient_cycle(const Permutation& alpha_hat, const Permutation& beta0_hat, int q);

/// Lifts a quotient cycle into cliques and joins them; result starts [alpha, beta, ...]
/// in the normalized frame.
std::vector<Permutation> lift_and_stitch(const std::vector<Permutation>& quotient, const LengthPlan& plan,
                                         const NormalizedEdge& edge);

/// Cycles of length 3, 4, 5 from pairwise disjoint permutations; n = 4 with
/// length 5 goes through the two-clique route.
std::vector<Permutation> short_cycle(const Permutation& alpha, const Permutation& beta, int length);

/// alpha, beta, then beta's clique up to sigma^shift beta, across to
/// sigma^shift alpha and alpha's clique back. Lengths 4..2n.
std::vector<Permutation> two_clique_cycle(const Permutation& alpha, const Permutation& beta, int length);

/// Cycle [alpha, beta, ...] of exactly `length` vertices in the derangement graph.
std::vector<Permutation> cycle(const Permutation& alpha, const Permutation& beta, int length);

/// Validated witness for gamma:n.
CycleWitness construct(const Permutation& alpha, const Permutation& beta, int length);

}  // namespace pancyclic::gamma
