#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pancyclic/construct.hpp"
#include "pancyclic/dense.hpp"
#include "pancyclic/gammak.hpp"
#include "pancyclic/io.hpp"
#include "pancyclic/oracle.hpp"
#include "pancyclic/sweep.hpp"

namespace py = pybind11;
using namespace pancyclic;

namespace {

// Python side uses 1-based tuples, like the command line.
Arrangement tuple_in(const std::vector<int>& one_based, int ambient) {
  std::vector<int> v;
  v.reserve(one_based.size());
  for (int x : one_based) {
    if (x < 1 || x > ambient) throw InvalidArgument("value " + std::to_string(x) + " outside [1, " + std::to_string(ambient) + "]");
    v.push_back(x - 1);
  }
  return Arrangement(v, ambient);
}

std::vector<int> tuple_out(const Arrangement& x) {
  std::vector<int> v;
  for (int i = 0; i < x.size(); ++i) v.push_back(x[i] + 1);
  return v;
}

std::vector<std::vector<int>> tuples_out(const std::vector<Arrangement>& xs) {
  std::vector<std::vector<int>> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(tuple_out(x));
  return out;
}

}  // namespace

PYBIND11_MODULE(_pancyclic, m) {
  m.doc() = "Cycle certificates through edges of derangement, fixed-point and arrangement graphs";

  static py::exception<Error> base(m, "PancyclicError", PyExc_RuntimeError);
  static py::exception<InvalidArgument> invalid(m, "InvalidArgument", PyExc_ValueError);
  static py::exception<LengthOutOfRange> length(m, "LengthOutOfRange", invalid.ptr());
  static py::exception<ConstructionFailed> failed(m, "ConstructionFailed", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const LengthOutOfRange& e) {
      PyErr_SetString(length.ptr(), e.what());
    } catch (const InvalidArgument& e) {
      PyErr_SetString(invalid.ptr(), e.what());
    } catch (const ConstructionFailed& e) {
      PyErr_SetString(failed.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(base.ptr(), e.what());
    }
  });

  m.def("derangement_count", &derangement_count, py::arg("n"));
  m.def("factorial", &factorial, py::arg("n"));

  m.def(
      "graph_order", [](const std::string& spec) { return order(GraphSpec::parse(spec)); }, py::arg("spec"));
  m.def(
      "graph_degree", [](const std::string& spec) { return degree(GraphSpec::parse(spec)); }, py::arg("spec"));
  m.def(
      "is_adjacent",
      [](const std::string& spec_text, const std::vector<int>& u, const std::vector<int>& v) {
        const GraphSpec spec = GraphSpec::parse(spec_text);
        return is_adjacent(spec, tuple_in(u, spec.ambient()), tuple_in(v, spec.ambient()));
      },
      py::arg("spec"), py::arg("u"), py::arg("v"));

  m.def(
      "construct",
      [](const std::string& spec_text, const std::vector<int>& u, const std::vector<int>& v, int length) {
        const GraphSpec spec = GraphSpec::parse(spec_text);
        py::gil_scoped_release release;
        return tuples_out(construct_cycle(spec, tuple_in(u, spec.ambient()), tuple_in(v, spec.ambient()), length).vertices);
      },
      py::arg("spec"), py::arg("u"), py::arg("v"), py::arg("length"),
      "Cycle of `length` tuples starting [u, v, ...]; tuples are 1-based.");

  m.def(
      "construct_json",
      [](const std::string& spec_text, const std::string& edge, int length) {
        const GraphSpec spec = GraphSpec::parse(spec_text);
        const auto e = io::parse_edge(edge, spec);
        return io::witness_to_json(construct_cycle(spec, e.first, e.second, length), e);
      },
      py::arg("spec"), py::arg("edge"), py::arg("length"), "Witness JSON for an edge written \"u|v\".");

  m.def(
      "verify",
      [](const std::string& spec_text, const std::vector<std::vector<int>>& cycle, const std::vector<int>& u,
         const std::vector<int>& v, std::optional<int> length) {
        const GraphSpec spec = GraphSpec::parse(spec_text);
        std::vector<Arrangement> vertices;
        for (const auto& x : cycle) vertices.push_back(tuple_in(x, spec.ambient()));
        const auto r = oracle::validate_cycle(spec, vertices, {tuple_in(u, spec.ambient()), tuple_in(v, spec.ambient())},
                                              length.value_or(static_cast<int>(cycle.size())));
        return py::make_tuple(r.ok(), oracle::to_string(r.verdict), r.message);
      },
      py::arg("spec"), py::arg("cycle"), py::arg("u"), py::arg("v"), py::arg("length") = py::none(),
      "(ok, verdict, message) for a candidate cycle.");

  m.def(
      "brute_force",
      [](const std::string& spec_text, const std::vector<int>& u, const std::vector<int>& v, int length,
         long budget) -> py::object {
        const GraphSpec spec = GraphSpec::parse(spec_text);
        const auto r = oracle::brute_force_cycle(spec, tuple_in(u, spec.ambient()), tuple_in(v, spec.ambient()), length, budget);
        if (r.status == oracle::SearchStatus::Found) return py::cast(tuples_out(r.cycle));
        if (r.status == oracle::SearchStatus::NotFound) return py::none();
        throw Error("brute force budget exhausted");
      },
      py::arg("spec"), py::arg("u"), py::arg("v"), py::arg("length"), py::arg("budget") = 10'000'000L,
      "Exhaustive search; None when no such cycle exists.");

  m.def(
      "eta_order",
      [](int n, int k, const std::vector<int>& start) { return tuples_out(gammak::eta_order(n, k, tuple_in(start, n))); },
      py::arg("n"), py::arg("k"), py::arg("start"));

  m.def(
      "dense_cycle",
      [](int n, const std::vector<std::pair<int, int>>& edges, int u, int v, int length) {
        const auto g = DenseGraph::from_explicit(ExplicitGraph{n, edges});
        return cycle_through_edge(g, u, v, length);
      },
      py::arg("n"), py::arg("edges"), py::arg("u"), py::arg("v"), py::arg("length"),
      "Cycle through (u, v) in an explicit graph with min degree >= (n + 2) / 2; 0-based vertices.");

  m.def(
      "sweep",
      [](const std::string& spec_text, std::optional<int> edges, int min_length, int max_length,
         const std::string& engine, int jobs, std::uint64_t seed) {
        sweep::Options o;
        o.spec = GraphSpec::parse(spec_text);
        o.edge_sample = edges;
        o.min_length = min_length;
        o.max_length = max_length;
        if (engine == "brute") {
          o.engine = sweep::Engine::Brute;
        } else if (engine != "constructor") {
          throw InvalidArgument("engine must be constructor or brute");
        }
        o.jobs = jobs;
        o.seed = seed;
        std::string report;
        {
          py::gil_scoped_release release;
          report = sweep::run(o).to_json();
        }
        return py::module_::import("json").attr("loads")(report);
      },
      py::arg("spec"), py::arg("edges") = py::none(), py::arg("min_length") = 3, py::arg("max_length") = -1,
      py::arg("engine") = "constructor", py::arg("jobs") = 0, py::arg("seed") = 0,
      "Report dict for a sweep over (edge, length) pairs.");
}
