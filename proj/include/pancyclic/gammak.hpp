#pragma once

// Cycles through every edge of the graph on S_n where two permutations are
// adjacent iff they agree in exactly k positions (n >= 2k+1, n >= 4).
//
// After moving the k agreement positions of the edge to the suffix, S_n splits
// into blocks A_eta = {x : x ends with eta}. Inside a block the graph is the
// derangement graph on the n-k prefix positions. A cycle is grown by splicing
// paths through fresh units (whole blocks when n-k >= 4, otherwise the two
// triangles of each block) into edges of the current cycle.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pancyclic/graph.hpp"
#include "pancyclic/perm.hpp"

namespace pancyclic::gammak {

/// All k-subsets of {0..n-1} (sorted) so that consecutive subsets share k-1
/// elements, from {0..k-1} to {n-k..n-1}.
std::vector<std::vector<int>> subset_gray_order(int n, int k);

/// Every k-arrangement over [n] once, starting at `start`, with consecutive
/// entries disagreeing in every position and sharing at least k-1 values.
std::vector<Arrangement> eta_order(int n, int k, const Arrangement& start);

/// Empty when `order` satisfies the eta_order contract, else a description
/// of the first violation.
std::optional<std::string> check_eta_order(int n, int k, const std::vector<Arrangement>& order);

/// Four vertices x -> entry_first ... entry_second -> y closing a 4-cycle with
/// the exit edge (x, y).
struct BlockBridge {
  Permutation exit_first;
  Permutation exit_second;
  Permutation entry_first;
  Permutation entry_second;
  bool constructed = true;  // false when only the exhaustive scan found it
};

/// Bridge from the edge (x, y) of one block into the block with suffix
/// `target`. `accept(u, v)` filters candidate entry pairs (freshness etc).
/// Tries the relabelling family x o pi first, then scans the whole block.
std::optional<BlockBridge> bridge_blocks(const Permutation& x, const Permutation& y, int k,
                                         const Arrangement& target,
                                         const std::function<bool(const Permutation&, const Permutation&)>& accept,
                                         bool allow_scan = true);

struct ConstructStats {
  int units = 0;               // units spliced into the start cycle
  int constructed_bridges = 0;
  int fallback_bridges = 0;    // bridges that needed the exhaustive scan
};

/// Cycle [alpha, beta, ...] of exactly `length` vertices.
std::vector<Permutation> cycle(const Permutation& alpha, const Permutation& beta, int k, int length,
                               ConstructStats* stats = nullptr);

/// Validated witness for gammak:n:k.
CycleWitness construct(const Permutation& alpha, const Permutation& beta, int k, int length,
                       ConstructStats* stats = nullptr);

}  // namespace pancyclic::gammak
