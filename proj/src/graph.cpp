#include "usp/graph.hpp"

#include <algorithm>
#include <numeric>

#include "usp/error.hpp"

namespace usp {

namespace {

Graph build_impl(int n, const std::vector<Edge>& edge_list, bool require_connected) {
    if (n < 1)
        fail(ErrorKind::InvalidArgument, "graph needs at least one vertex");
    Graph g;
    g.n = n;
    g.edges.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(ErrorKind::VertexOutOfRange,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            fail(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(u));
        g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
        fail(ErrorKind::DuplicateEdge, "duplicate edge in input");
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());

    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : g.adj[x])
            if (!seen[y]) {
                seen[y] = true;
                ++count;
                stack.push_back(y);
            }
    }
    g.connected = (count == n);
    if (require_connected && !g.connected)
        fail(ErrorKind::Disconnected, "graph is not connected");
    return g;
}

} // namespace

Graph Graph::build(int n, const std::vector<Edge>& edge_list) {
    return build_impl(n, edge_list, true);
}

Graph Graph::build_relaxed(int n, const std::vector<Edge>& edge_list) {
    return build_impl(n, edge_list, false);
}

int Graph::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
    if (it != edges.end() && *it == Edge{u, v})
        return static_cast<int>(it - edges.begin());
    return -1;
}

EdgeSubset full_edge_subset(const Graph& g) {
    return EdgeSubset(g.edges.size(), true);
}

EdgeSubset complement_subset(const EdgeSubset& s) {
    EdgeSubset out(s);
    out.flip();
    return out;
}

Square Square::canonical(int a, int b, int c, int d) {
    const std::array<int, 4> base{a, b, c, d};
    Square best;
    best.v = base;
    for (int r = 0; r < 4; ++r) {
        std::array<int, 4> rot{base[r], base[(r + 1) % 4], base[(r + 2) % 4], base[(r + 3) % 4]};
        std::array<int, 4> ref{rot[0], rot[3], rot[2], rot[1]};
        if (rot < best.v) best.v = rot;
        if (ref < best.v) best.v = ref;
    }
    return best;
}

std::array<Edge, 4> Square::cycle_edges() const {
    auto mk = [](int x, int y) { return Edge{std::min(x, y), std::max(x, y)}; };
    return {mk(v[0], v[1]), mk(v[1], v[2]), mk(v[2], v[3]), mk(v[3], v[0])};
}

std::array<std::pair<Edge, Edge>, 2> Square::opposite_pairs() const {
    auto e = cycle_edges();
    return {std::pair{e[0], e[2]}, std::pair{e[1], e[3]}};
}

bool Square::contains_edge(const Edge& e) const {
    auto es = cycle_edges();
    return std::find(es.begin(), es.end(), e) != es.end();
}

std::string to_string(const Square& s) {
    return "(" + std::to_string(s.v[0]) + "," + std::to_string(s.v[1]) + "," +
           std::to_string(s.v[2]) + "," + std::to_string(s.v[3]) + ")";
}

std::vector<Square> enumerate_chordless_squares(const Graph& g) {
    std::vector<Square> out;
    // For each middle vertex b and non-adjacent neighbor pair a,c, every
    // common neighbor d of a and c not adjacent to b closes a chordless
    // square (a,b,c,d). Requiring b < d leaves one find per diagonal;
    // sort+unique removes the remaining duplicate.
    for (int b = 0; b < g.n; ++b) {
        const auto& nb = g.adj[b];
        for (size_t i = 0; i < nb.size(); ++i) {
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int a = nb[i], c = nb[j];
                if (g.has_edge(a, c)) continue;
                for (int d : g.adj[a]) {
                    if (d <= b || d == c) continue;
                    if (!g.has_edge(c, d) || g.has_edge(b, d)) continue;
                    out.push_back(Square::canonical(a, b, c, d));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Square> squares_spanned_by(const Graph& g, Edge e, Edge f) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (f.first > f.second) std::swap(f.first, f.second);
    if (g.edge_id(e.first, e.second) < 0 || g.edge_id(f.first, f.second) < 0)
        fail(ErrorKind::VertexOutOfRange, "edge not in graph");
    if (e == f)
        fail(ErrorKind::NotAdjacent, "edges must be distinct");
    int shared = -1, a = -1, c = -1;
    for (int x : {e.first, e.second})
        for (int y : {f.first, f.second})
            if (x == y) {
                shared = x;
                a = e.first == x ? e.second : e.first;
                c = f.first == x ? f.second : f.first;
            }
    if (shared < 0 || a == c)
        fail(ErrorKind::NotAdjacent, "edges do not share exactly one endpoint");
    std::vector<Square> out;
    if (!g.has_edge(a, c)) {
        for (int d : g.adj[a]) {
            if (d == shared || d == c) continue;
            if (g.has_edge(c, d) && !g.has_edge(shared, d))
                out.push_back(Square::canonical(a, shared, c, d));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexPartition connected_components(const Graph& g, const EdgeSubset& s) {
    if (s.size() != g.edges.size())
        fail(ErrorKind::GraphMismatch, "edge subset size does not match graph");
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (!s[i]) continue;
        int ru = find(g.edges[i].first), rv = find(g.edges[i].second);
        if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
    }
    std::vector<int> raw(g.n);
    for (int v = 0; v < g.n; ++v) raw[v] = find(v);
    return VertexPartition::from_block_assignment(g.n, raw);
}

bool is_2_convex(const Graph& g, const EdgeSubset& s) {
    VertexPartition comps = connected_components(g, s);
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
            if (comps.block_of[u] != comps.block_of[v]) continue;
            int id = g.edge_id(u, v);
            if (id >= 0) {
                if (!s[id]) return false;  // the unique shortest path is the edge itself
                continue;                  // distance 1: no 2-paths are shortest
            }
            // distance exactly 2 iff a common neighbor exists
            for (int w : g.adj[u]) {
                if (!g.has_edge(w, v)) continue;
                if (comps.block_of[w] != comps.block_of[u]) return false;
                if (!s[g.edge_id(u, w)] || !s[g.edge_id(w, v)]) return false;
            }
        }
    }
    return true;
}

bool components_induced(const Graph& g, const EdgeSubset& s) {
    VertexPartition comps = connected_components(g, s);
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (s[i]) continue;
        auto [u, v] = g.edges[i];
        if (comps.block_of[u] == comps.block_of[v]) return false;
    }
    return true;
}

} // namespace usp
