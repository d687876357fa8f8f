#pragma once

#include <utility>
#include <vector>

#include "usp/graph.hpp"
#include "usp/partition.hpp"

namespace usp {

/// Undirected quotient graph: blocks as vertices, loops allowed.
/// An edge [A,B] (A != B) exists iff some graph edge crosses the blocks;
/// a loop [A,A] exists iff block A is not independent.
struct QuotientGraph {
    int k = 0;
    std::vector<std::pair<int, int>> edges;  // a <= b, sorted; a == b is a loop
    std::vector<std::vector<int>> blocks;    // vertex labels; empty for products

    bool has_edge(int a, int b) const;
    bool has_loop(int a) const { return has_edge(a, a); }
    std::vector<int> neighbors(int a) const;  // includes a itself when looped
    int simple_edge_count() const;            // non-loop edges

    bool operator==(const QuotientGraph& other) const {
        return k == other.k && edges == other.edges;
    }
};

/// Directed weighted quotient: dense weight matrix, weight 0 = no arc.
struct WeightedDigraph {
    int k = 0;
    std::vector<std::vector<int>> weight;
    std::vector<std::vector<int>> blocks;

    bool operator==(const WeightedDigraph& other) const {
        return k == other.k && weight == other.weight;
    }
};

QuotientGraph quotient_graph(const Graph& g, const VertexPartition& p);

/// Quotient with arcs weighted by the partition degree matrix; requires an
/// equitable partition.
WeightedDigraph weighted_quotient(const Graph& g, const VertexPartition& p);

/// Loops, directions and weights dropped. Never errors on disconnection;
/// the result's `connected` flag records it.
Graph underlying_simple(const QuotientGraph& q);
Graph underlying_simple(const WeightedDigraph& q);

QuotientGraph as_quotient(const Graph& g);  // plain graph viewed as loopless quotient
QuotientGraph as_quotient(const WeightedDigraph& w);

/// True iff mapping each vertex of (V, s) to its block is locally bijective
/// onto the quotient of (V, s) by p: the s-neighbors of every vertex map
/// one-to-one onto the quotient neighbors of its block.
bool is_covering_projection(const Graph& g, const EdgeSubset& s, const VertexPartition& p);

} // namespace usp
