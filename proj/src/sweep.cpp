#include "pancyclic/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <thread>

#include "json.hpp"
#include "pancyclic/construct.hpp"
#include "pancyclic/io.hpp"

namespace pancyclic::sweep {

using nlohmann::json;

std::uint64_t default_seed() {
  const char* env = std::getenv("PANCYCLIC_SEED");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const auto v = std::strtoull(env, &end, 10);
  return *end == '\0' ? v : 0;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double percentile(std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0;
  const auto idx = static_cast<std::size_t>(q * static_cast<double>(sorted.size() - 1) + 0.5);
  return sorted[std::min(idx, sorted.size() - 1)];
}

struct Task {
  oracle::Edge edge;
  int length;
};

struct Outcome {
  bool ok = false;
  std::string reason;
  double micros = 0;
  gammak::ConstructStats stats;
};

}  // namespace

std::uint64_t task_seed(const oracle::Edge& e, int length, std::uint64_t global) {
  std::uint64_t h = splitmix(global);
  h = splitmix(h ^ rank(e.first));
  h = splitmix(h ^ rank(e.second));
  return splitmix(h ^ static_cast<std::uint64_t>(length));
}

std::vector<oracle::Edge> select_edges(const GraphSpec& spec, std::optional<int> sample, std::uint64_t seed) {
  auto edges = all_edges(spec);
  if (!sample || *sample >= static_cast<int>(edges.size())) return edges;
  if (*sample < 0) throw InvalidArgument("edge sample must be non-negative");
  std::mt19937_64 rng(seed);
  std::shuffle(edges.begin(), edges.end(), rng);
  edges.resize(static_cast<std::size_t>(*sample));
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::string repro_json(const GraphSpec& spec, const Failure& f, const std::string& engine) {
  json j;
  j["spec"] = spec.to_string();
  j["edge"] = io::format_edge(f.edge);
  j["length"] = f.length;
  j["seed"] = f.seed;
  j["engine"] = engine;
  j["reason"] = f.reason;
  return j.dump(2);
}

Report run(const Options& o) {
  const GraphSpec& spec = o.spec;
  const auto top = static_cast<long long>(order(spec));
  const int hi = o.max_length < 0 ? static_cast<int>(std::min<long long>(top, 1LL << 30)) : o.max_length;
  if (o.min_length > hi) throw InvalidArgument("empty length range");

  std::vector<Task> tasks;
  for (const auto& e : select_edges(spec, o.edge_sample, o.seed)) {
    for (int len = o.min_length; len <= hi; ++len) {
      tasks.push_back({e, len});
      if (o.both_directions) tasks.push_back({{e.second, e.first}, len});
    }
  }

  EngineFn engine = o.custom;
  if (!engine && o.engine == Engine::Brute) {
    engine = [budget = o.brute_budget](const GraphSpec& s, const oracle::Edge& e, int len, std::uint64_t) {
      auto r = oracle::brute_force_cycle(s, e.first, e.second, len, budget);
      if (r.status == oracle::SearchStatus::NotFound) throw Error("brute force: no cycle of this length");
      if (r.status == oracle::SearchStatus::BudgetExhausted) throw Error("brute force: budget exhausted");
      return CycleWitness{s, std::move(r.cycle)};
    };
  }

  std::vector<Outcome> outcomes(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      Outcome& out = outcomes[i];
      const auto start = std::chrono::steady_clock::now();
      try {
        const CycleWitness w = engine ? engine(spec, t.edge, t.length, task_seed(t.edge, t.length, o.seed))
                                      : construct_cycle(spec, t.edge.first, t.edge.second, t.length, &out.stats);
        const auto check = oracle::validate_cycle(spec, w.vertices, t.edge, t.length);
        out.ok = check.ok() && w.spec == spec;
        if (!out.ok) out.reason = check.ok() ? "witness has the wrong spec" : check.message;
      } catch (const std::exception& e) {
        out.reason = e.what();
      }
      out.micros = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
    }
  };

  const auto wall_start = std::chrono::steady_clock::now();
  int jobs = o.jobs > 0 ? o.jobs : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  jobs = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(tasks.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }

  Report r;
  r.spec = spec.to_string();
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - wall_start).count();
  r.tasks = static_cast<long>(tasks.size());
  std::vector<double> times;
  times.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Outcome& out = outcomes[i];
    times.push_back(out.micros);
    r.constructed_bridges += out.stats.constructed_bridges;
    r.fallback_bridges += out.stats.fallback_bridges;
    if (out.ok) {
      ++r.ok;
      continue;
    }
    ++r.failed;
    r.failures.push_back({tasks[i].edge, tasks[i].length, out.reason, task_seed(tasks[i].edge, tasks[i].length, o.seed)});
  }
  std::sort(times.begin(), times.end());
  r.p50_us = percentile(times, 0.5);
  r.p90_us = percentile(times, 0.9);
  r.p99_us = percentile(times, 0.99);
  r.max_us = times.empty() ? 0 : times.back();

  if (!o.repro_dir.empty() && !r.failures.empty()) {
    std::filesystem::create_directories(o.repro_dir);
    const std::string engine_name = o.custom ? "custom" : o.engine == Engine::Brute ? "brute" : "constructor";
    for (std::size_t i = 0; i < r.failures.size(); ++i) {
      io::write_file((std::filesystem::path(o.repro_dir) / ("repro_" + std::to_string(i) + ".json")).string(),
                     repro_json(spec, r.failures[i], engine_name));
    }
  }
  return r;
}

std::string Report::to_json(int indent) const {
  json j;
  j["spec"] = spec;
  j["tasks"] = tasks;
  j["ok"] = ok;
  j["failed"] = failed;
  j["wall_ms"] = wall_ms;
  j["task_us"] = {{"p50", p50_us}, {"p90", p90_us}, {"p99", p99_us}, {"max", max_us}};
  j["bridges"] = {{"constructed", constructed_bridges}, {"fallback", fallback_bridges}};
  json fails = json::array();
  for (const auto& f : failures) {
    fails.push_back({{"edge", io::format_edge(f.edge)}, {"length", f.length}, {"reason", f.reason}, {"seed", f.seed}});
  }
  j["failures"] = std::move(fails);
  return j.dump(indent);
}

}  // namespace pancyclic::sweep
