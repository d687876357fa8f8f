#pragma once

#include <vector>

#include "usp/graph.hpp"

namespace usp {

/// Canonical form of a small graph: the lexicographically greatest
/// upper-triangle adjacency bit string over all vertex orderings, found by
/// backtracking with twin pruning. Hard-capped at `max_vertices`.
std::vector<bool> canonical_form(const Graph& g, int max_vertices = 12);

bool are_isomorphic(const Graph& a, const Graph& b, int max_vertices = 12);

} // namespace usp
