#pragma once

// One entry point for every graph family: picks the constructor from the spec.

#include "pancyclic/gammak.hpp"
#include "pancyclic/graph.hpp"
#include "pancyclic/oracle.hpp"

namespace pancyclic {

/// Validated cycle of `length` vertices starting [u, v, ...]. Dense families
/// (compl, gtilde) go through a snapshot and the degree-bound engine.
/// `stats` is only filled for gammak specs.
CycleWitness construct_cycle(const GraphSpec& spec, const Arrangement& u, const Arrangement& v, int length,
                             gammak::ConstructStats* stats = nullptr);

}  // namespace pancyclic
