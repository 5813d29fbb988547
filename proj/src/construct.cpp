#include "pancyclic/construct.hpp"

#include "pancyclic/arrangement.hpp"
#include "pancyclic/dense.hpp"
#include "pancyclic/gamma.hpp"

namespace pancyclic {

CycleWitness construct_cycle(const GraphSpec& spec, const Arrangement& u, const Arrangement& v, int length,
                             gammak::ConstructStats* stats) {
  if (!is_vertex(spec, u) || !is_vertex(spec, v)) {
    throw InvalidArgument("edge endpoints are not vertices of " + spec.to_string());
  }
  switch (spec.family()) {
    case GraphSpec::Family::Derangement:
      return gamma::construct(Permutation(u), Permutation(v), length);
    case GraphSpec::Family::FixedK:
      return gammak::construct(Permutation(u), Permutation(v), spec.k(), length, stats);
    case GraphSpec::Family::Arrangement:
      return arrangement::construct(u, v, length);
    case GraphSpec::Family::ComplementNonTrivial:
    case GraphSpec::Family::GTilde1:
      break;
  }
  if (order(spec) > 5040) throw PreconditionViolated("dense snapshot of " + spec.to_string() + " is too large");
  if (!is_adjacent(spec, u, v)) throw InvalidArgument("endpoints are not adjacent");
  const auto g = DenseGraph::cached_snapshot(spec);
  if (length < 3 || length > g->order()) throw LengthOutOfRange("length outside [3, order]");
  CycleWitness w{spec, {}};
  for (int x : cycle_through_edge(*g, static_cast<int>(rank(u)), static_cast<int>(rank(v)), length)) {
    w.vertices.push_back(unrank(static_cast<std::uint64_t>(x), spec.tuple_length(), spec.ambient()));
  }
  const auto check = oracle::validate_cycle(w, {u, v}, length);
  if (!check.ok()) throw ConstructionFailed("dense engine produced an invalid witness: " + check.message);
  return w;
}

}  // namespace pancyclic
