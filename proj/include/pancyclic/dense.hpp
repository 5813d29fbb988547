#pragma once

// Edge-pancyclic cycle construction in dense graphs.
//
// Any graph of order N >= 3 with minimum degree at least (N + 2) / 2 has a
// cycle of every length 3..N through every edge. The engine here produces
// those cycles: a triangle seed followed by single-vertex insertions, with
// rotations of the protected path when no vertex can be inserted directly,
// and a bounded depth-first search as the last resort.
//
// K_{3,3} (the complement of the derangement graph on S_3) is below the
// degree bound but is edge even-pancyclic; it is handled by a lookup table.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pancyclic/graph.hpp"

namespace pancyclic {

/// Plain undirected graph on {0, ..., order-1}.
struct ExplicitGraph {
  int order = 0;
  std::vector<std::pair<int, int>> edges;

  /// {"n": N, "edges": [[u, v], ...]} with 0-based endpoints.
  static ExplicitGraph from_json(const std::string& text);
  std::string to_json() const;
};

/// Vertex indices in cycle order; the closing edge back to front() is implied.
using IndexCycle = std::vector<int>;

class BipartiteNoOddCycle : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DenseGraph {
 public:
  /// Throws PreconditionViolated unless min degree >= (N+2)/2 or the graph is K_{3,3}.
  static DenseGraph from_explicit(const ExplicitGraph& graph);
  /// Materializes a small implicit graph; vertex index = rank().
  static DenseGraph snapshot(const GraphSpec& spec);
  /// Shared, lazily built snapshot. Safe to call from several threads.
  static std::shared_ptr<const DenseGraph> cached_snapshot(const GraphSpec& spec);

  int order() const { return order_; }
  int min_degree() const { return min_degree_; }
  bool is_k33() const { return k33_; }
  bool adjacent(int u, int v) const { return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U; }
  ExplicitGraph to_explicit() const;

  const std::uint64_t* row(int u) const { return rows_.data() + static_cast<std::size_t>(u) * words_; }
  int words() const { return words_; }

  /// Precomputed even cycles for the K_{3,3} case, keyed by directed edge.
  const IndexCycle& k33_cycle(int u, int v, int length) const;

 private:
  DenseGraph(int order, const std::vector<std::pair<int, int>>& edges);
  void build_k33_table();

  int order_ = 0;
  int words_ = 0;
  int min_degree_ = 0;
  bool k33_ = false;
  std::vector<std::uint64_t> rows_;
  std::map<std::pair<int, int>, std::pair<IndexCycle, IndexCycle>> k33_table_;
};

/// Returns a cycle of exactly `length` vertices starting [u, v, ...].
IndexCycle cycle_through_edge(const DenseGraph& g, int u, int v, int length);

/// Calls fn(cycle) for lengths 3, 4, ..., max_length in turn; each cycle equals
/// what cycle_through_edge would return for that length.
void for_each_cycle_length(const DenseGraph& g, int u, int v, int max_length,
                           const std::function<void(const IndexCycle&)>& fn);

/// Smallest common neighbour w of u and v gives [u, v, w].
IndexCycle triangle_through_edge(const DenseGraph& g, int u, int v);

/// One vertex longer, keeping the edge (cycle[0], cycle[1]). Throws
/// ConstructionFailed when neither insertion nor rotation finds a vertex.
IndexCycle extend_by_one(const DenseGraph& g, const IndexCycle& cycle);

/// Even cycles (length 4 or 6) through the edge (u, v) of a K_{3,3}.
IndexCycle even_cycle_k33(const DenseGraph& g, int u, int v, int length);

}  // namespace pancyclic
