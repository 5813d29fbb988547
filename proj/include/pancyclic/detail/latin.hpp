#pragma once

// Extending a Latin rectangle by one row.

#include <optional>
#include <vector>

#include "pancyclic/perm.hpp"

namespace pancyclic::detail {

/// Lexicographically smallest k-arrangement over [n] that differs from every
/// row in every position, or nullopt if none exists. Positions are matched to
/// allowed values with augmenting paths.
std::optional<Arrangement> disjoint_row(const std::vector<Arrangement>& rows, int k, int n);

}  // namespace pancyclic::detail
