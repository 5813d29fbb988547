#include "doctest.h"

#include <cstdlib>
#include <filesystem>

#include "json.hpp"
#include "pancyclic/io.hpp"
#include "pancyclic/sweep.hpp"

using namespace pancyclic;

TEST_CASE("full constructor sweep of gamma:4") {
  sweep::Options o;
  o.spec = GraphSpec::derangement(4);
  const auto r = sweep::run(o);
  CHECK(r.tasks == 108 * 22);
  CHECK(r.ok == r.tasks);
  CHECK(r.failed == 0);
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["spec"] == "gamma:4");
  CHECK(j["failures"].empty());
  CHECK(j.contains("wall_ms"));
}

TEST_CASE("brute engine on a small range") {
  sweep::Options o;
  o.spec = GraphSpec::fixed_k(4, 1);
  o.engine = sweep::Engine::Brute;
  o.max_length = 8;
  o.edge_sample = 10;
  const auto r = sweep::run(o);
  CHECK(r.tasks == 60);
  CHECK(r.failed == 0);
}

TEST_CASE("injected mismatches are reported with replayable seeds") {
  const auto dir = std::filesystem::temp_directory_path() / "pancyclic_sweep_repro";
  std::filesystem::remove_all(dir);
  sweep::Options o;
  o.spec = GraphSpec::derangement(4);
  o.edge_sample = 5;
  o.max_length = 6;
  o.seed = 99;
  o.repro_dir = dir.string();
  // Drops the last vertex of every length-5 answer.
  o.custom = [](const GraphSpec& s, const oracle::Edge& e, int len, std::uint64_t) {
    auto w = oracle::brute_force_cycle(s, e.first, e.second, len);
    if (len == 5) w.cycle.pop_back();
    return CycleWitness{s, w.cycle};
  };
  const auto r = sweep::run(o);
  CHECK(r.tasks == 20);
  CHECK(r.failed == 5);
  for (const auto& f : r.failures) {
    CHECK(f.length == 5);
    CHECK(f.seed == sweep::task_seed(f.edge, 5, 99));
  }
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto j = nlohmann::json::parse(io::read_file(entry.path().string()));
    CHECK(j["length"] == 5);
    ++files;
  }
  CHECK(files == 5);
  std::filesystem::remove_all(dir);
}

TEST_CASE("seeding") {
  const auto a = sweep::select_edges(GraphSpec::derangement(5), 50, 7);
  const auto b = sweep::select_edges(GraphSpec::derangement(5), 50, 7);
  const auto c = sweep::select_edges(GraphSpec::derangement(5), 50, 8);
  CHECK(a.size() == 50);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(std::is_sorted(a.begin(), a.end()));
  const auto e = a.front();
  CHECK(sweep::task_seed(e, 5, 1) == sweep::task_seed(e, 5, 1));
  CHECK(sweep::task_seed(e, 5, 1) != sweep::task_seed(e, 6, 1));
  CHECK(sweep::task_seed(e, 5, 1) != sweep::task_seed({e.second, e.first}, 5, 1));
  ::setenv("PANCYCLIC_SEED", "1234", 1);
  CHECK(sweep::default_seed() == 1234);
  ::setenv("PANCYCLIC_SEED", "junk", 1);
  CHECK(sweep::default_seed() == 0);
  ::unsetenv("PANCYCLIC_SEED");
}

TEST_CASE("infeasible lengths fail honestly") {
  sweep::Options o;
  o.spec = GraphSpec::fixed_k(4, 1);
  o.edge_sample = 3;
  o.min_length = 12;
  const auto r = sweep::run(o);
  CHECK(r.tasks == 3 * 13);
  CHECK(r.failed == 3 * 12);
}
