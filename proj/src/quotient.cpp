#include "usp/quotient.hpp"

#include <algorithm>
#include <set>

#include "usp/error.hpp"

namespace usp {

bool QuotientGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::pair{a, b});
}

std::vector<int> QuotientGraph::neighbors(int a) const {
    std::vector<int> out;
    for (auto [x, y] : edges) {
        if (x == a) out.push_back(y);
        else if (y == a) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int QuotientGraph::simple_edge_count() const {
    int c = 0;
    for (auto [a, b] : edges)
        if (a != b) ++c;
    return c;
}

QuotientGraph quotient_graph(const Graph& g, const VertexPartition& p) {
    if (p.n != g.n)
        fail(ErrorKind::PartitionMismatch, "partition does not cover the graph's vertex set");
    std::set<std::pair<int, int>> es;
    for (auto [u, v] : g.edges) {
        int a = p.block_of[u], b = p.block_of[v];
        es.emplace(std::min(a, b), std::max(a, b));
    }
    QuotientGraph q;
    q.k = p.block_count();
    q.edges.assign(es.begin(), es.end());
    q.blocks = p.blocks;
    return q;
}

WeightedDigraph weighted_quotient(const Graph& g, const VertexPartition& p) {
    EquitabilityResult eq = is_equitable(g, p);
    if (!eq.equitable())
        fail(ErrorKind::NotEquitable, "partition is not equitable");
    WeightedDigraph w;
    w.k = p.block_count();
    w.weight = eq.matrix->m;
    w.blocks = p.blocks;
    return w;
}

Graph underlying_simple(const QuotientGraph& q) {
    std::vector<Edge> es;
    for (auto [a, b] : q.edges)
        if (a != b) es.emplace_back(a, b);
    return Graph::build_relaxed(q.k, es);
}

Graph underlying_simple(const WeightedDigraph& q) {
    return underlying_simple(as_quotient(q));
}

QuotientGraph as_quotient(const Graph& g) {
    QuotientGraph q;
    q.k = g.n;
    q.edges.assign(g.edges.begin(), g.edges.end());
    return q;
}

QuotientGraph as_quotient(const WeightedDigraph& w) {
    QuotientGraph q;
    q.k = w.k;
    for (int a = 0; a < w.k; ++a)
        for (int b = a; b < w.k; ++b)
            if (w.weight[a][b] > 0 || w.weight[b][a] > 0) q.edges.emplace_back(a, b);
    q.blocks = w.blocks;
    return q;
}

bool is_covering_projection(const Graph& g, const EdgeSubset& s, const VertexPartition& p) {
    if (p.n != g.n)
        fail(ErrorKind::PartitionMismatch, "partition does not cover the graph's vertex set");
    if (s.size() != g.edges.size())
        fail(ErrorKind::GraphMismatch, "edge subset size does not match graph");
    std::vector<Edge> sub;
    for (size_t e = 0; e < g.edges.size(); ++e)
        if (s[e]) sub.push_back(g.edges[e]);
    Graph h = Graph::build_relaxed(g.n, sub);
    QuotientGraph q = quotient_graph(h, p);
    for (int x = 0; x < h.n; ++x) {
        std::vector<int> image;
        for (int y : h.adj[x]) image.push_back(p.block_of[y]);
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end())
            return false;  // two neighbors land on one block: not injective
        if (image != q.neighbors(p.block_of[x])) return false;
    }
    return true;
}

} // namespace usp
