#include "pancyclic/dense.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "json.hpp"

namespace pancyclic {

namespace {

using Bits = std::vector<std::uint64_t>;

int first_bit(const std::uint64_t* a, const std::uint64_t* b, const Bits& outside, int words) {
  for (int w = 0; w < words; ++w) {
    const std::uint64_t m = a[w] & b[w] & outside[static_cast<std::size_t>(w)];
    if (m != 0) return w * 64 + std::countr_zero(m);
  }
  return -1;
}

Bits outside_mask(const DenseGraph& g, const IndexCycle& cycle) {
  Bits out(static_cast<std::size_t>(g.words()), ~std::uint64_t{0});
  const int tail = g.order() % 64;
  if (tail != 0) out.back() = (std::uint64_t{1} << tail) - 1;
  for (int x : cycle) out[static_cast<std::size_t>(x) >> 6] &= ~(std::uint64_t{1} << (x & 63));
  return out;
}

// Rotates/reflects so that the cycle reads [u, v, ...].
IndexCycle orient(IndexCycle cycle, int u, int v) {
  const auto m = cycle.size();
  auto it = std::find(cycle.begin(), cycle.end(), u);
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle[1] != v) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
  if (cycle[1] != v || m < 3) throw ConstructionFailed("protected edge lost during rotation");
  return cycle;
}

// Depth-first search for a cycle [u, v, ...] of exactly `length` vertices.
class CycleSearch {
 public:
  CycleSearch(const DenseGraph& g, int u, int v, int length, long budget)
      : g_(g), u_(u), length_(length), budget_(budget), visited_(static_cast<std::size_t>(g.order()), false) {
    path_ = {u, v};
    visited_[static_cast<std::size_t>(u)] = true;
    visited_[static_cast<std::size_t>(v)] = true;
  }

  bool run() { return extend(); }
  const IndexCycle& cycle() const { return path_; }

 private:
  bool extend() {
    if (static_cast<int>(path_.size()) == length_) return g_.adjacent(path_.back(), u_);
    if (--budget_ < 0) return false;
    const int last = path_.back();
    const bool closing = static_cast<int>(path_.size()) + 1 == length_;
    for (int x = 0; x < g_.order(); ++x) {
      if (visited_[static_cast<std::size_t>(x)] || !g_.adjacent(last, x)) continue;
      if (closing && !g_.adjacent(x, u_)) continue;
      visited_[static_cast<std::size_t>(x)] = true;
      path_.push_back(x);
      if (extend()) return true;
      path_.pop_back();
      visited_[static_cast<std::size_t>(x)] = false;
      if (budget_ < 0) return false;
    }
    return false;
  }

  const DenseGraph& g_;
  int u_;
  int length_;
  long budget_;
  std::vector<bool> visited_;
  IndexCycle path_;
};

IndexCycle search_cycle(const DenseGraph& g, int u, int v, int length) {
  CycleSearch search(g, u, v, length, 2'000'000);
  if (!search.run()) {
    throw ConstructionFailed("no cycle of length " + std::to_string(length) + " found through edge (" +
                             std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  return search.cycle();
}

void check_edge(const DenseGraph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
    throw InvalidArgument("(" + std::to_string(u) + ", " + std::to_string(v) + ") is not an edge");
  }
}

void check_degree_bound(const DenseGraph& g) {
  if (!g.is_k33() && 2 * g.min_degree() < g.order() + 2) {
    throw PreconditionViolated("minimum degree " + std::to_string(g.min_degree()) + " is below (N+2)/2 for N = " +
                               std::to_string(g.order()));
  }
}

}  // namespace

ExplicitGraph ExplicitGraph::from_json(const std::string& text) {
  ExplicitGraph g;
  try {
    const auto doc = nlohmann::json::parse(text);
    g.order = doc.at("n").get<int>();
    for (const auto& e : doc.at("edges")) {
      g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("graph JSON: ") + e.what());
  }
  if (g.order < 0) throw InvalidArgument("graph JSON: negative order");
  for (auto [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= g.order || b >= g.order || a == b) {
      throw InvalidArgument("graph JSON: bad edge [" + std::to_string(a) + ", " + std::to_string(b) + "]");
    }
  }
  return g;
}

std::string ExplicitGraph::to_json() const {
  nlohmann::json doc;
  doc["n"] = order;
  doc["edges"] = nlohmann::json::array();
  for (auto [a, b] : edges) doc["edges"].push_back({a, b});
  return doc.dump();
}

DenseGraph::DenseGraph(int order, const std::vector<std::pair<int, int>>& edges)
    : order_(order), words_((order + 63) / 64), rows_(static_cast<std::size_t>(order) * static_cast<std::size_t>((order + 63) / 64), 0) {
  for (auto [a, b] : edges) {
    rows_[static_cast<std::size_t>(a) * static_cast<std::size_t>(words_) + (static_cast<std::size_t>(b) >> 6)] |= std::uint64_t{1} << (b & 63);
    rows_[static_cast<std::size_t>(b) * static_cast<std::size_t>(words_) + (static_cast<std::size_t>(a) >> 6)] |= std::uint64_t{1} << (a & 63);
  }
  min_degree_ = order_ == 0 ? 0 : order_;
  for (int u = 0; u < order_; ++u) {
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row(u)[w]);
    min_degree_ = std::min(min_degree_, d);
  }

  // K_{3,3}: six vertices, 3-regular, every vertex's non-neighbours are
  // adjacent to exactly its neighbours.
  if (order_ == 6 && min_degree_ == 3 && edges.size() >= 9) {
    bool bipartite = true;
    for (int u = 0; u < 6 && bipartite; ++u) {
      for (int x = 0; x < 6; ++x) {
        if (x == u || adjacent(u, x)) continue;
        for (int w = 0; w < 6; ++w) {
          if (adjacent(u, w) != adjacent(x, w)) bipartite = false;
        }
      }
    }
    int degree_sum = 0;
    for (int u = 0; u < 6; ++u)
      for (int w = 0; w < 6; ++w) degree_sum += adjacent(u, w);
    k33_ = bipartite && degree_sum == 18;
    if (k33_) build_k33_table();
  }
}

void DenseGraph::build_k33_table() {
  for (int u = 0; u < order_; ++u) {
    for (int v = 0; v < order_; ++v) {
      if (!adjacent(u, v)) continue;
      k33_table_[{u, v}] = {search_cycle(*this, u, v, 4), search_cycle(*this, u, v, 6)};
    }
  }
}

const IndexCycle& DenseGraph::k33_cycle(int u, int v, int length) const {
  auto it = k33_table_.find({u, v});
  if (it == k33_table_.end()) throw InvalidArgument("not an edge of the K_{3,3}");
  return length == 4 ? it->second.first : it->second.second;
}

DenseGraph DenseGraph::from_explicit(const ExplicitGraph& graph) {
  DenseGraph g(graph.order, graph.edges);
  if (g.order() < 3) throw PreconditionViolated("graph has fewer than three vertices");
  check_degree_bound(g);
  return g;
}

DenseGraph DenseGraph::snapshot(const GraphSpec& spec) {
  std::vector<Arrangement> vertices;
  for_each_vertex(spec, [&](const Arrangement& v) { vertices.push_back(v); });
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(vertices.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (is_adjacent(spec, vertices[static_cast<std::size_t>(a)], vertices[static_cast<std::size_t>(b)])) {
        edges.emplace_back(a, b);
      }
    }
  }
  return DenseGraph(n, edges);
}

std::shared_ptr<const DenseGraph> DenseGraph::cached_snapshot(const GraphSpec& spec) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const DenseGraph>> cache;
  const std::string key = spec.to_string();
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const DenseGraph>(snapshot(spec));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(built)).first->second;
}

ExplicitGraph DenseGraph::to_explicit() const {
  ExplicitGraph g;
  g.order = order_;
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (adjacent(a, b)) g.edges.emplace_back(a, b);
  return g;
}

IndexCycle triangle_through_edge(const DenseGraph& g, int u, int v) {
  check_edge(g, u, v);
  if (g.is_k33()) throw BipartiteNoOddCycle("K_{3,3} has no triangles");
  Bits outside = outside_mask(g, {u, v});
  const int w = first_bit(g.row(u), g.row(v), outside, g.words());
  if (w < 0) throw ConstructionFailed("edge has no common neighbour");
  return {u, v, w};
}

IndexCycle extend_by_one(const DenseGraph& g, const IndexCycle& cycle) {
  const int m = static_cast<int>(cycle.size());
  if (m >= g.order()) throw LengthOutOfRange("cycle already spans the graph");
  const Bits outside = outside_mask(g, cycle);
  const int u = cycle[0];
  const int v = cycle[1];

  // Direct insertion between two consecutive vertices, never splitting (u, v).
  for (int i = 1; i < m; ++i) {
    const int a = cycle[static_cast<std::size_t>(i)];
    const int b = cycle[static_cast<std::size_t>((i + 1) % m)];
    const int x = first_bit(g.row(a), g.row(b), outside, g.words());
    if (x >= 0) {
      IndexCycle out = cycle;
      out.insert(out.begin() + i + 1, x);
      return out;
    }
  }

  // Open the cycle at a non-protected edge and rotate one endpoint; close
  // through an outside vertex adjacent to both new endpoints.
  IndexCycle path(static_cast<std::size_t>(m));
  for (int i = 1; i < m; ++i) {
    for (int t = 0; t < m; ++t) path[static_cast<std::size_t>(t)] = cycle[static_cast<std::size_t>((i + 1 + t) % m)];
    const int guarded = m - 1 - i;  // (path[guarded], path[guarded + 1]) is (u, v)
    const int head = path.front();
    const int tail = path.back();

    for (int j = 0; j + 2 < m; ++j) {
      if (j == guarded || !g.adjacent(tail, path[static_cast<std::size_t>(j)])) continue;
      const int x = first_bit(g.row(head), g.row(path[static_cast<std::size_t>(j + 1)]), outside, g.words());
      if (x < 0) continue;
      IndexCycle out(path.begin(), path.begin() + j + 1);
      out.insert(out.end(), path.rbegin(), path.rend() - j - 1);
      out.push_back(x);
      return orient(std::move(out), u, v);
    }
    for (int j = 2; j < m; ++j) {
      if (j - 1 == guarded || !g.adjacent(head, path[static_cast<std::size_t>(j)])) continue;
      const int x = first_bit(g.row(path[static_cast<std::size_t>(j - 1)]), g.row(tail), outside, g.words());
      if (x < 0) continue;
      IndexCycle out(path.rend() - j, path.rend());
      out.insert(out.end(), path.begin() + j, path.end());
      out.push_back(x);
      return orient(std::move(out), u, v);
    }
  }
  throw ConstructionFailed("no insertable vertex after rotations");
}

IndexCycle even_cycle_k33(const DenseGraph& g, int u, int v, int length) {
  if (!g.is_k33()) throw PreconditionViolated("graph is not K_{3,3}");
  check_edge(g, u, v);
  if (length % 2 != 0) throw BipartiteNoOddCycle("K_{3,3} has no cycle of odd length " + std::to_string(length));
  if (length != 4 && length != 6) throw LengthOutOfRange("K_{3,3} cycles have length 4 or 6");
  return g.k33_cycle(u, v, length);
}

void for_each_cycle_length(const DenseGraph& g, int u, int v, int max_length,
                           const std::function<void(const IndexCycle&)>& fn) {
  check_edge(g, u, v);
  if (max_length > g.order()) throw LengthOutOfRange("cycle longer than the graph");
  if (g.is_k33()) {
    for (int length = 4; length <= max_length; length += 2) fn(even_cycle_k33(g, u, v, length));
    return;
  }
  check_degree_bound(g);
  if (max_length < 3) return;
  IndexCycle cycle = triangle_through_edge(g, u, v);
  fn(cycle);
  while (static_cast<int>(cycle.size()) < max_length) {
    try {
      cycle = extend_by_one(g, cycle);
    } catch (const ConstructionFailed&) {
      cycle = search_cycle(g, u, v, static_cast<int>(cycle.size()) + 1);
    }
    fn(cycle);
  }
}

IndexCycle cycle_through_edge(const DenseGraph& g, int u, int v, int length) {
  check_edge(g, u, v);
  if (length < 3 || length > g.order()) {
    throw LengthOutOfRange("length " + std::to_string(length) + " outside [3, " + std::to_string(g.order()) + "]");
  }
  if (g.is_k33()) return even_cycle_k33(g, u, v, length);
  IndexCycle result;
  for_each_cycle_length(g, u, v, length, [&](const IndexCycle& c) {
    if (static_cast<int>(c.size()) == length) result = c;
  });
  return result;
}

}  // namespace pancyclic
