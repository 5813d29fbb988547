#pragma once

// Text formats. Tuples are written 1-based, space separated ("2 1 4 3");
// an edge is "u|v". Witnesses are JSON:
//   {"spec": "gamma:4", "length": 6, "vertices": ["1 2 3 4", ...],
//    "target_edge": ["1 2 3 4", "2 1 4 3"]}

#include <optional>
#include <string>
#include <string_view>

#include "pancyclic/graph.hpp"
#include "pancyclic/oracle.hpp"

namespace pancyclic::io {

/// Throws InvalidArgument on anything that is not a tuple of distinct values in [1, ambient].
Arrangement parse_tuple(std::string_view text, int ambient);
std::string format_tuple(const Arrangement& x);

/// Parses "u|v" and checks both endpoints have the spec's vertex shape. Adjacency is not checked.
oracle::Edge parse_edge(std::string_view text, const GraphSpec& spec);
std::string format_edge(const oracle::Edge& e);

struct WitnessFile {
  CycleWitness witness;
  std::optional<oracle::Edge> target_edge;
};

std::string witness_to_json(const CycleWitness& w, const std::optional<oracle::Edge>& target, int indent = 2);
/// Vertices that fail to parse become InvalidArgument; shape errors are left to validate_cycle.
WitnessFile witness_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace pancyclic::io
