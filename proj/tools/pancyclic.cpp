// pancyclic: construct, verify and sweep cycle certificates.
// Exit codes: 0 ok, 1 verification or sweep failures, 2 bad input, 3 internal error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pancyclic/construct.hpp"
#include "pancyclic/dense.hpp"
#include "pancyclic/gammak.hpp"
#include "pancyclic/io.hpp"
#include "pancyclic/sweep.hpp"

using namespace pancyclic;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text << '\n';
  } else {
    io::write_file(out, text);
  }
}

struct ConstructArgs {
  std::string spec, edge, out;
  int length = 0;
  std::uint64_t seed = 0;
};

int run_construct(const ConstructArgs& a) {
  const GraphSpec spec = GraphSpec::parse(a.spec);
  const auto e = io::parse_edge(a.edge, spec);
  const auto w = construct_cycle(spec, e.first, e.second, a.length);
  emit(io::witness_to_json(w, e), a.out);
  return kOk;
}

struct VerifyArgs {
  std::string spec, witness, edge;
  std::optional<int> length;
};

int run_verify(const VerifyArgs& a) {
  const GraphSpec spec = GraphSpec::parse(a.spec);
  const auto file = io::witness_from_json(io::read_file(a.witness));
  if (!(file.witness.spec == spec)) {
    std::cerr << "witness is for " << file.witness.spec.to_string() << ", not " << spec.to_string() << '\n';
    return kFailed;
  }
  std::optional<oracle::Edge> e;
  if (!a.edge.empty()) {
    e = io::parse_edge(a.edge, spec);
  } else {
    e = file.target_edge;
  }
  if (!e) throw InvalidArgument("no --edge given and the witness names no target edge");
  const auto r = oracle::validate_cycle(file.witness, *e, a.length.value_or(file.witness.length()));
  if (!r.ok()) {
    std::cerr << oracle::to_string(r.verdict) << ": " << r.message << '\n';
    return kFailed;
  }
  std::cout << "ok: " << spec.to_string() << " cycle of length " << file.witness.length() << " through "
            << io::format_edge(*e) << '\n';
  return kOk;
}

struct SweepArgs {
  std::string spec, edges = "all", lengths, engine = "constructor", repro_dir;
  int jobs = 0;
  long budget = 10'000'000;
  std::optional<std::uint64_t> seed;
  bool both = false;
};

int run_sweep(const SweepArgs& a) {
  sweep::Options o;
  o.spec = GraphSpec::parse(a.spec);
  if (a.edges != "all") {
    try {
      o.edge_sample = std::stoi(a.edges);
    } catch (const std::exception&) {
      throw InvalidArgument("--edges takes \"all\" or a count");
    }
  }
  if (!a.lengths.empty()) {
    const auto dots = a.lengths.find("..");
    try {
      if (dots == std::string::npos) {
        o.min_length = o.max_length = std::stoi(a.lengths);
      } else {
        o.min_length = std::stoi(a.lengths.substr(0, dots));
        o.max_length = std::stoi(a.lengths.substr(dots + 2));
      }
    } catch (const std::exception&) {
      throw InvalidArgument("--lengths takes A..B");
    }
  }
  if (a.engine == "brute") {
    o.engine = sweep::Engine::Brute;
  } else if (a.engine != "constructor") {
    throw InvalidArgument("--engine must be constructor or brute");
  }
  o.jobs = a.jobs;
  o.brute_budget = a.budget;
  o.seed = a.seed.value_or(sweep::default_seed());
  o.repro_dir = a.repro_dir;
  o.both_directions = a.both;
  const auto report = sweep::run(o);
  std::cout << report.to_json() << '\n';
  return report.failed == 0 ? kOk : kFailed;
}

int run_order(const std::string& spec_text, const std::string& start_text) {
  const GraphSpec spec = GraphSpec::parse(spec_text);
  if (spec.family() != GraphSpec::Family::FixedK || spec.k() < 1) {
    throw InvalidArgument("order needs a gammak:n:k spec with k >= 1");
  }
  const Arrangement start = io::parse_tuple(start_text, spec.n());
  if (start.size() != spec.k()) throw InvalidArgument("start tuple must have k entries");
  const auto order = gammak::eta_order(spec.n(), spec.k(), start);
  if (const auto bad = gammak::check_eta_order(spec.n(), spec.k(), order)) {
    throw ConstructionFailed("eta order failed its own check: " + *bad);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    json line;
    line["index"] = i;
    line["eta"] = io::format_tuple(order[i]);
    std::cout << line.dump() << '\n';
  }
  return kOk;
}

json dense_margin(const GraphSpec& spec) {
  const auto g = DenseGraph::cached_snapshot(spec);
  const int bound = (g->order() + 2 + 1) / 2;
  return {{"spec", spec.to_string()},
          {"order", g->order()},
          {"min_degree", g->min_degree()},
          {"bound", bound},
          {"k33", g->is_k33()},
          {"holds", g->min_degree() >= bound}};
}

int run_stats(const std::string& spec_text) {
  const GraphSpec spec = GraphSpec::parse(spec_text);
  json j;
  j["spec"] = spec.to_string();
  j["order"] = order(spec);
  j["degree"] = degree(spec);
  if (spec.family() == GraphSpec::Family::Derangement) {
    j["derangement_count"] = derangement_count(spec.n());
    if (spec.n() >= 4 && spec.n() <= 8) j["quotient"] = dense_margin(GraphSpec::complement_nontrivial(spec.n() - 1));
  } else if (spec.family() == GraphSpec::Family::Arrangement && spec.n() > spec.k() && spec.k() >= 2 &&
             falling_factorial(spec.n() - 1, spec.k() - 1) <= 5040) {
    j["quotient"] = dense_margin(GraphSpec::gtilde1(spec.n(), spec.k()));
  } else if (spec.family() == GraphSpec::Family::ComplementNonTrivial ||
             spec.family() == GraphSpec::Family::GTilde1) {
    if (order(spec) <= 5040) j["dense"] = dense_margin(spec);
  }
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int run_dense(const std::string& graph_path, int u, int v, int length, const std::string& out) {
  const auto g = DenseGraph::from_explicit(ExplicitGraph::from_json(io::read_file(graph_path)));
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
    throw InvalidArgument("edge is not an edge of the graph");
  }
  const auto c = cycle_through_edge(g, u, v, length);
  const auto check = oracle::validate_cycle(g, c, {u, v}, length);
  if (!check.ok()) throw ConstructionFailed("dense engine produced an invalid cycle: " + check.message);
  json j;
  j["order"] = g.order();
  j["length"] = length;
  j["cycle"] = c;
  j["target_edge"] = {u, v};
  emit(j.dump(2), out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-pancyclic cycle certificates for derangement, fixed-point and arrangement graphs"};
  app.require_subcommand(1);
  std::function<int()> action;

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a cycle of a given length through an edge");
  construct->add_option("--spec", ca.spec, "gamma:n | gammak:n:k | arr:n:k | compl:n | gtilde:n:k")->required();
  construct->add_option("--edge", ca.edge, "\"u|v\" in 1-based one-line notation")->required();
  construct->add_option("--length", ca.length, "cycle length")->required();
  construct->add_option("--seed", ca.seed, "accepted for reproducibility; constructions are deterministic");
  construct->add_option("--out", ca.out, "write the witness here instead of stdout");
  construct->callback([&] { action = [&] { return run_construct(ca); }; });

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a witness file against the adjacency definition");
  verify->add_option("--spec", va.spec)->required();
  verify->add_option("--witness", va.witness, "witness JSON file")->required();
  verify->add_option("--edge", va.edge, "required edge; defaults to the witness's target_edge");
  verify->add_option("--length", va.length, "expected length; defaults to the vertex count");
  verify->callback([&] { action = [&] { return run_verify(va); }; });

  SweepArgs sa;
  auto* sw = app.add_subcommand("sweep", "Run an engine over many (edge, length) pairs");
  sw->add_option("--spec", sa.spec)->required();
  sw->add_option("--edges", sa.edges, "all, or a number of random edges");
  sw->add_option("--lengths", sa.lengths, "A..B (default 3..order)");
  sw->add_option("--engine", sa.engine, "constructor | brute");
  sw->add_option("--jobs", sa.jobs, "worker threads (default: all cores)");
  sw->add_option("--seed", sa.seed, "global seed (default: PANCYCLIC_SEED or 0)");
  sw->add_option("--budget", sa.budget, "node budget per brute-force task");
  sw->add_option("--repro-dir", sa.repro_dir, "write a JSON repro file per failure");
  sw->add_flag("--both-directions", sa.both, "also run every edge reversed");
  sw->callback([&] { action = [&] { return run_sweep(sa); }; });

  std::string order_spec, order_start;
  auto* ord = app.add_subcommand("order", "Print the block order used for gammak:n:k");
  ord->add_option("--spec", order_spec)->required();
  ord->add_option("--start", order_start, "first k-tuple, 1-based")->required();
  ord->callback([&] { action = [&] { return run_order(order_spec, order_start); }; });

  std::string stats_spec;
  auto* st = app.add_subcommand("stats", "Order, degree and quotient degree margin");
  st->add_option("--spec", stats_spec)->required();
  st->callback([&] { action = [&] { return run_stats(stats_spec); }; });

  std::string dense_graph, dense_out;
  int du = 0, dv = 0, dlen = 0;
  auto* dn = app.add_subcommand("dense", "Cycle through an edge of an explicit graph with min degree >= (N+2)/2");
  dn->add_option("--graph", dense_graph, "{\"n\": N, \"edges\": [[u, v], ...]}")->required();
  dn->add_option("--u", du, "0-based endpoint")->required();
  dn->add_option("--v", dv, "0-based endpoint")->required();
  dn->add_option("--length", dlen)->required();
  dn->add_option("--out", dense_out);
  dn->callback([&] { action = [&] { return run_dense(dense_graph, du, dv, dlen, dense_out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConstructionFailed& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
