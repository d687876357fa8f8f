#pragma once

#include <vector>

#include "usp/edge_relation.hpp"
#include "usp/partition.hpp"

namespace usp {

/// Components of the spanning subgraph on the edges of class `cls`.
VertexPartition class_partition(const EdgeRelation& r, int cls);

/// Components of the spanning subgraph on all edges outside class `cls`.
VertexPartition complement_partition(const EdgeRelation& r, int cls);

/// Blockwise intersection of the complement partitions of all classes;
/// the block containing x is the set of vertices reachable from x while
/// avoiding each class in turn.
VertexPartition common_refinement(const EdgeRelation& r);

/// The neighbors of u joined to it by an edge of class `cls`, sorted.
std::vector<int> neighbor_set_in_class(const EdgeRelation& r, int u, int cls);

} // namespace usp
