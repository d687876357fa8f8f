#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "usp/partition.hpp"

namespace usp {

using Edge = std::pair<int, int>;  // always stored with first < second

/// Finite simple undirected graph with dense vertex ids 0..n-1.
/// Edges are kept sorted; edge ids index into `edges`.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adj;  // sorted neighbor lists
    bool connected = false;

    /// Validating constructor; rejects loops, duplicates, out-of-range
    /// vertices and disconnected input.
    static Graph build(int n, const std::vector<Edge>& edge_list);

    /// Same validation except connectivity, which is only recorded.
    /// Quotients of proper subgraphs may legitimately be disconnected.
    static Graph build_relaxed(int n, const std::vector<Edge>& edge_list);

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }
    int edge_id(int u, int v) const;  // -1 when absent
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    bool operator==(const Graph& other) const {
        return n == other.n && edges == other.edges;
    }
};

/// Membership flags indexed by edge id.
using EdgeSubset = std::vector<bool>;

EdgeSubset full_edge_subset(const Graph& g);
EdgeSubset complement_subset(const EdgeSubset& s);

/// Chordless square in canonical form: the lexicographically least of the
/// eight rotations/reflections of the 4-cycle (v0,v1,v2,v3). Its opposite
/// edge pairs are {v0v1, v2v3} and {v1v2, v3v0}.
struct Square {
    std::array<int, 4> v{};

    static Square canonical(int a, int b, int c, int d);

    std::array<Edge, 4> cycle_edges() const;
    std::array<std::pair<Edge, Edge>, 2> opposite_pairs() const;
    bool contains_edge(const Edge& e) const;

    bool operator==(const Square& other) const { return v == other.v; }
    bool operator<(const Square& other) const { return v < other.v; }
};

std::string to_string(const Square& s);

/// All chordless squares, deduplicated, in increasing canonical order.
std::vector<Square> enumerate_chordless_squares(const Graph& g);

/// Chordless squares containing both e and f, which must be distinct
/// adjacent edges (sharing exactly one endpoint).
std::vector<Square> squares_spanned_by(const Graph& g, Edge e, Edge f);

/// Connected components of the spanning subgraph (V(g), s); isolated
/// vertices become singleton blocks.
VertexPartition connected_components(const Graph& g, const EdgeSubset& s);

/// True iff every component H of (V, s) contains all shortest g-paths of
/// length <= 2 between vertices of H (vertices and edges of such paths).
bool is_2_convex(const Graph& g, const EdgeSubset& s);

/// True iff every edge of g outside s joins two distinct components of
/// (V, s), i.e. each component is an induced subgraph of g.
bool components_induced(const Graph& g, const EdgeSubset& s);

} // namespace usp
