#include "pancyclic/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace pancyclic::oracle {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Ok: return "Ok";
    case Verdict::WrongLength: return "WrongLength";
    case Verdict::RepeatedVertex: return "RepeatedVertex";
    case Verdict::NonEdge: return "NonEdge";
    case Verdict::MissingTargetEdge: return "MissingTargetEdge";
    case Verdict::MalformedVertex: return "MalformedVertex";
  }
  return "Unknown";
}

namespace {

ValidationResult fail(Verdict v, int position, std::string message) {
  return {v, position, std::move(message)};
}

}  // namespace

ValidationResult validate_cycle(const GraphSpec& spec, std::span<const Arrangement> vertices,
                                const Edge& required_edge, int length) {
  const int m = static_cast<int>(vertices.size());
  for (int i = 0; i < m; ++i) {
    if (!is_vertex(spec, vertices[static_cast<std::size_t>(i)])) {
      return fail(Verdict::MalformedVertex, i, "vertex " + std::to_string(i) + " is not a vertex of " + spec.to_string());
    }
  }
  if (!is_vertex(spec, required_edge.first) || !is_vertex(spec, required_edge.second)) {
    return fail(Verdict::MalformedVertex, -1, "required edge endpoints are not vertices of " + spec.to_string());
  }
  if (m != length || m < 3) {
    return fail(Verdict::WrongLength, -1,
                "witness has " + std::to_string(m) + " vertices, expected " + std::to_string(length));
  }
  std::unordered_set<Arrangement> seen;
  for (int i = 0; i < m; ++i) {
    if (!seen.insert(vertices[static_cast<std::size_t>(i)]).second) {
      return fail(Verdict::RepeatedVertex, i, "vertex " + std::to_string(i) + " repeats an earlier vertex");
    }
  }
  bool has_target = false;
  for (int i = 0; i < m; ++i) {
    const Arrangement& a = vertices[static_cast<std::size_t>(i)];
    const Arrangement& b = vertices[static_cast<std::size_t>((i + 1) % m)];
    if (!is_adjacent(spec, a, b)) {
      return fail(Verdict::NonEdge, i,
                  "vertices " + std::to_string(i) + " and " + std::to_string((i + 1) % m) + " are not adjacent");
    }
    if ((a == required_edge.first && b == required_edge.second) ||
        (a == required_edge.second && b == required_edge.first)) {
      has_target = true;
    }
  }
  if (!has_target) return fail(Verdict::MissingTargetEdge, -1, "required edge is not on the cycle");
  return {};
}

ValidationResult validate_cycle(const CycleWitness& witness, const Edge& required_edge, int length) {
  return validate_cycle(witness.spec, witness.vertices, required_edge, length);
}

ValidationResult validate_cycle(const DenseGraph& graph, std::span<const int> cycle,
                                std::pair<int, int> required_edge, int length) {
  const int m = static_cast<int>(cycle.size());
  for (int i = 0; i < m; ++i) {
    const int x = cycle[static_cast<std::size_t>(i)];
    if (x < 0 || x >= graph.order()) return fail(Verdict::MalformedVertex, i, "vertex index out of range");
  }
  if (m != length || m < 3) {
    return fail(Verdict::WrongLength, -1,
                "witness has " + std::to_string(m) + " vertices, expected " + std::to_string(length));
  }
  std::vector<bool> seen(static_cast<std::size_t>(graph.order()), false);
  for (int i = 0; i < m; ++i) {
    const auto x = static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)]);
    if (seen[x]) return fail(Verdict::RepeatedVertex, i, "vertex repeats");
    seen[x] = true;
  }
  bool has_target = false;
  for (int i = 0; i < m; ++i) {
    const int a = cycle[static_cast<std::size_t>(i)];
    const int b = cycle[static_cast<std::size_t>((i + 1) % m)];
    if (!graph.adjacent(a, b)) return fail(Verdict::NonEdge, i, "consecutive vertices are not adjacent");
    if ((a == required_edge.first && b == required_edge.second) ||
        (a == required_edge.second && b == required_edge.first)) {
      has_target = true;
    }
  }
  if (!has_target) return fail(Verdict::MissingTargetEdge, -1, "required edge is not on the cycle");
  return {};
}

namespace {

class BruteSearch {
 public:
  BruteSearch(const GraphSpec& spec, long budget) : budget_(budget) {
    for_each_vertex(spec, [&](const Arrangement& v) { vertices_.push_back(v); });
    const std::size_t n = vertices_.size();
    adjacency_.assign(n, {});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (is_adjacent(spec, vertices_[a], vertices_[b])) {
          adjacency_[a].push_back(static_cast<int>(b));
          adjacency_[b].push_back(static_cast<int>(a));
        }
      }
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    visited_.assign(n, false);
  }

  SearchResult run(int u, int v, int length) {
    SearchResult result;
    if (std::find(adjacency_[static_cast<std::size_t>(u)].begin(), adjacency_[static_cast<std::size_t>(u)].end(), v) ==
        adjacency_[static_cast<std::size_t>(u)].end()) {
      throw InvalidArgument("brute_force_cycle: endpoints are not adjacent");
    }
    start_ = u;
    length_ = length;
    path_ = {u, v};
    visited_[static_cast<std::size_t>(u)] = visited_[static_cast<std::size_t>(v)] = true;
    const bool found = length >= 3 && length <= static_cast<int>(vertices_.size()) && extend();
    result.expansions = expansions_;
    if (found) {
      result.status = SearchStatus::Found;
      for (int x : path_) result.cycle.push_back(vertices_[static_cast<std::size_t>(x)]);
    } else {
      result.status = exhausted_ ? SearchStatus::BudgetExhausted : SearchStatus::NotFound;
    }
    return result;
  }

 private:
  // Can the start still be reached from `from` using at least `needed` fresh vertices?
  bool feasible(int from, int needed) const {
    std::vector<bool> reached(visited_.size(), false);
    std::deque<int> queue{from};
    reached[static_cast<std::size_t>(from)] = true;
    int fresh = 0;
    bool closes = false;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : adjacency_[static_cast<std::size_t>(x)]) {
        if (y == start_) closes = true;
        if (reached[static_cast<std::size_t>(y)] || visited_[static_cast<std::size_t>(y)]) continue;
        reached[static_cast<std::size_t>(y)] = true;
        ++fresh;
        queue.push_back(y);
      }
    }
    return closes && fresh >= needed;
  }

  bool extend() {
    const int last = path_.back();
    const int remaining = length_ - static_cast<int>(path_.size());
    if (remaining == 0) {
      const auto& adj = adjacency_[static_cast<std::size_t>(last)];
      return std::binary_search(adj.begin(), adj.end(), start_);
    }
    if (++expansions_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (!feasible(last, remaining)) return false;
    for (int y : adjacency_[static_cast<std::size_t>(last)]) {
      if (visited_[static_cast<std::size_t>(y)]) continue;
      visited_[static_cast<std::size_t>(y)] = true;
      path_.push_back(y);
      if (extend()) return true;
      path_.pop_back();
      visited_[static_cast<std::size_t>(y)] = false;
      if (exhausted_) return false;
    }
    return false;
  }

  std::vector<Arrangement> vertices_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<bool> visited_;
  std::vector<int> path_;
  int start_ = 0;
  int length_ = 0;
  long budget_;
  long expansions_ = 0;
  bool exhausted_ = false;
};

}  // namespace

SearchResult brute_force_cycle(const GraphSpec& spec, const Arrangement& u, const Arrangement& v, int length,
                               long budget) {
  if (!is_vertex(spec, u) || !is_vertex(spec, v)) throw InvalidArgument("brute_force_cycle: malformed endpoint");
  BruteSearch search(spec, budget);
  return search.run(static_cast<int>(rank(u)), static_cast<int>(rank(v)), length);
}

}  // namespace pancyclic::oracle
