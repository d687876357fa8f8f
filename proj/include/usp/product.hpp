#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "usp/edge_relation.hpp"
#include "usp/graph.hpp"
#include "usp/quotient.hpp"

namespace usp {

/// Cartesian product of simple graphs; vertex (u, x) has id u * |V(b)| + x.
Graph cartesian_product(const Graph& a, const Graph& b);

/// Cartesian product with loops allowed: a loop at a coordinate yields a
/// loop at every product vertex through it.
QuotientGraph cartesian_product(const QuotientGraph& a, const QuotientGraph& b);

/// Weighted directed product. Arcs that move one coordinate keep that
/// factor's weight; diagonal loops add the two loop weights.
WeightedDigraph cartesian_product_weighted(const WeightedDigraph& a, const WeightedDigraph& b);

struct ProductRelation {
    GraphPtr graph;
    EdgeRelation relation;  // class j = edges moving in coordinate j
};

/// Builds the n-fold product of at least two factors together with its
/// product relation. Edgeless factors contribute no class.
ProductRelation product_relation_of(const std::vector<Graph>& factors);

struct ProductPairCheck {
    bool is_product = false;
    // On success, the two factor graphs (components through vertex 0).
    std::optional<std::pair<Graph, Graph>> factors;
    struct Counterexample {
        int block_a, block_b, size;
    };
    std::optional<Counterexample> counterexample;
};

/// Criterion for a certified two-class relation to be a product relation:
/// every component of one class meets every component of the other in
/// exactly one vertex.
ProductPairCheck is_product_relation_pair(const EdgeRelation& r, const UspStatus& status);

struct ProductDecomposition {
    QuotientGraph quotient;                     // G / P^R
    std::vector<QuotientGraph> factors;         // G_phi / P^R_phibar per class
    std::vector<std::vector<int>> block_tuple;  // P^R block -> factor block per class
    VertexPartition refinement;                 // P^R itself
};

/// Builds the explicit bijection from blocks of the common refinement to
/// tuples of complement-partition blocks and verifies it is a graph
/// isomorphism onto the product of the class quotients. With a certified
/// relation a failure indicates an implementation bug.
ProductDecomposition verify_quotient_decomposition(const EdgeRelation& r, const UspStatus& status);

/// Same bijection on the weighted quotients.
bool verify_weighted_decomposition(const EdgeRelation& r, const UspStatus& status);

/// Requires every complement subgraph to have induced components; then the
/// quotient is loopless and decomposes over the loop-free class quotients.
bool verify_loopless_decomposition(const EdgeRelation& r, const UspStatus& status);

struct FactorizationResult {
    std::vector<Graph> factors;  // prime factors with multiplicity, ordered by size then form
    // Two-class relations that certified each accepted split.
    std::vector<EdgeRelation> certificates;
};

/// Prime factorization by split-testing the two-class coarsenings of the
/// closed delta relation; intended for desk-scale graphs.
FactorizationResult prime_factorize_small(const Graph& g, int class_bound = 20);

} // namespace usp
