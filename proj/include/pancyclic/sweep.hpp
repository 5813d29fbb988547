#pragma once

// Parallel (edge, length) sweeps with JSON reports and replayable failures.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pancyclic/graph.hpp"
#include "pancyclic/oracle.hpp"

namespace pancyclic::sweep {

enum class Engine { Constructor, Brute };

/// Returns a witness or throws; the sweep validates whatever comes back.
using EngineFn = std::function<CycleWitness(const GraphSpec&, const oracle::Edge&, int length, std::uint64_t seed)>;

struct Options {
  GraphSpec spec = GraphSpec::derangement(4);
  std::optional<int> edge_sample;  // K random edges; all edges when empty
  int min_length = 3;
  int max_length = -1;  // -1: order of the graph
  Engine engine = Engine::Constructor;
  EngineFn custom;      // overrides `engine` when set
  int jobs = 0;         // 0: hardware concurrency
  std::uint64_t seed = 0;
  long brute_budget = 10'000'000;
  std::string repro_dir;  // write one JSON file per failure when non-empty
  bool both_directions = false;  // also run (v, u) for every edge
};

struct Failure {
  oracle::Edge edge;
  int length = 0;
  std::string reason;
  std::uint64_t seed = 0;
};

struct Report {
  std::string spec;
  long tasks = 0;
  long ok = 0;
  long failed = 0;
  double wall_ms = 0;
  double p50_us = 0;
  double p90_us = 0;
  double p99_us = 0;
  double max_us = 0;
  long constructed_bridges = 0;
  long fallback_bridges = 0;
  std::vector<Failure> failures;

  std::string to_json(int indent = 2) const;
};

/// PANCYCLIC_SEED when set and numeric, else 0.
std::uint64_t default_seed();
/// Mixes both endpoint ranks, the length and the global seed.
std::uint64_t task_seed(const oracle::Edge& e, int length, std::uint64_t global);
/// All edges, or `sample` of them drawn without replacement (seeded), in lexicographic order.
std::vector<oracle::Edge> select_edges(const GraphSpec& spec, std::optional<int> sample, std::uint64_t seed);

Report run(const Options& options);

/// Standalone repro document for one failure.
std::string repro_json(const GraphSpec& spec, const Failure& f, const std::string& engine);

}  // namespace pancyclic::sweep
