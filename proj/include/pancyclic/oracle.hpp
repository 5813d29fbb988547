#pragma once

// Independent checks for cycle witnesses.
//
// validate_cycle re-derives everything from the raw adjacency definition.
// brute_force_cycle searches small graphs exhaustively without touching any
// constructor code, so a constructor bug cannot certify itself.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pancyclic/dense.hpp"
#include "pancyclic/graph.hpp"

namespace pancyclic::oracle {

enum class Verdict { Ok, WrongLength, RepeatedVertex, NonEdge, MissingTargetEdge, MalformedVertex };

std::string to_string(Verdict v);

struct ValidationResult {
  Verdict verdict = Verdict::Ok;
  int position = -1;  // offending index into the witness, when there is one
  std::string message;

  bool ok() const { return verdict == Verdict::Ok; }
};

using Edge = std::pair<Arrangement, Arrangement>;

ValidationResult validate_cycle(const GraphSpec& spec, std::span<const Arrangement> vertices,
                                const Edge& required_edge, int length);
ValidationResult validate_cycle(const CycleWitness& witness, const Edge& required_edge, int length);
/// Same contract for explicit graphs with index vertices.
ValidationResult validate_cycle(const DenseGraph& graph, std::span<const int> cycle,
                                std::pair<int, int> required_edge, int length);

enum class SearchStatus { Found, NotFound, BudgetExhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::vector<Arrangement> cycle;  // starts [u, v, ...] when found
  long expansions = 0;
};

/// Depth-first search for a cycle of `length` vertices through (u, v).
/// NotFound is only reported when the search space was exhausted.
SearchResult brute_force_cycle(const GraphSpec& spec, const Arrangement& u, const Arrangement& v, int length,
                               long budget = 10'000'000);

}  // namespace pancyclic::oracle
