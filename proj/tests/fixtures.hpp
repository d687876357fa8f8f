#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "usp/edge_relation.hpp"
#include "usp/graph.hpp"
#include "usp/product.hpp"

namespace fixtures {

inline usp::GraphPtr share(usp::Graph g) {
    return std::make_shared<const usp::Graph>(std::move(g));
}

inline usp::GraphPtr cycle(int n) {
    std::vector<usp::Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return share(usp::Graph::build(n, es));
}

inline usp::GraphPtr path(int n) {
    std::vector<usp::Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return share(usp::Graph::build(n, es));
}

inline usp::GraphPtr complete(int n) {
    std::vector<usp::Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return share(usp::Graph::build(n, es));
}

inline usp::GraphPtr c4() { return cycle(4); }
inline usp::GraphPtr k3() { return complete(3); }

/// 3-cube, vertices are 3-bit strings.
inline usp::GraphPtr q3() {
    std::vector<usp::Edge> es;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) es.emplace_back(v, v ^ (1 << b));
    return share(usp::Graph::build(8, es));
}

struct Labeled {
    usp::GraphPtr graph;
    usp::EdgeRelation relation;
};

inline usp::EdgeRelation label_edges(usp::GraphPtr g,
                                     const std::map<usp::Edge, int>& classes, int k) {
    std::vector<int> cls(g->edges.size());
    for (size_t e = 0; e < g->edges.size(); ++e) cls[e] = classes.at(g->edges[e]);
    return usp::EdgeRelation::make(std::move(g), cls, k);
}

/// Moebius ladder: cycle 0..7 plus chords i-(i+4). Class 0 = CYC, 1 = CHD.
inline Labeled m8() {
    std::vector<usp::Edge> es;
    std::map<usp::Edge, int> cls;
    for (int i = 0; i < 8; ++i) {
        usp::Edge e{std::min(i, (i + 1) % 8), std::max(i, (i + 1) % 8)};
        es.push_back(e);
        cls[e] = 0;
    }
    for (int i = 0; i < 4; ++i) {
        es.emplace_back(i, i + 4);
        cls[{i, i + 4}] = 1;
    }
    usp::GraphPtr g = share(usp::Graph::build(8, es));
    return {g, label_edges(g, cls, 2)};
}

/// C6 x K2 with its product relation: class 0 = hexagon edges, 1 = rungs.
inline Labeled prism() {
    usp::ProductRelation pr = usp::product_relation_of({*cycle(6), *complete(2)});
    return {pr.graph, pr.relation};
}

/// K_{3,3} drawn as the two squares sharing edges [1,2] and [1,4]:
/// names 1..6 are ids 0..5, parts {1,3,5} and {2,4,6}. Class 0 holds
/// {[1,2],[4,5],[3,6]}, class 1 the remaining six edges.
inline Labeled fig1() {
    std::vector<usp::Edge> es{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 4},
                              {3, 4}, {0, 5}, {2, 5}, {4, 5}};
    usp::GraphPtr g = share(usp::Graph::build(6, es));
    std::map<usp::Edge, int> cls;
    for (const auto& e : g->edges) cls[e] = 1;
    cls[{0, 1}] = 0;
    cls[{3, 4}] = 0;
    cls[{2, 5}] = 0;
    return {g, label_edges(g, cls, 2)};
}

/// 3-cube plus the four antipodal diagonals; classes 0..2 are the cube
/// directions, class 3 the diagonals. Satisfies S1.
inline Labeled diag_cube() {
    std::vector<usp::Edge> es;
    std::map<usp::Edge, int> cls;
    for (int v = 0; v < 8; ++v) {
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) {
                es.emplace_back(v, v ^ (1 << b));
                cls[{v, v ^ (1 << b)}] = b;
            }
        if (v < (v ^ 7)) {
            es.emplace_back(v, v ^ 7);
            cls[{v, v ^ 7}] = 3;
        }
    }
    usp::GraphPtr g = share(usp::Graph::build(8, es));
    return {g, label_edges(g, cls, 4)};
}

/// The two-class coarsening {0+1, 2+3} of diag_cube; a USP-relation that
/// does not itself satisfy S1.
inline Labeled diag_cube_pairs() {
    Labeled q = diag_cube();
    std::vector<int> cls = q.relation.class_of;
    for (int& c : cls) c = (c <= 1) ? 0 : 1;
    return {q.graph, usp::EdgeRelation::make(q.graph, cls, 2)};
}

/// Two hexagons 0..5 and 6..11 with in-hexagon antipodal chords and rungs
/// between them; classes 0 = hexagons, 1 = chords, 2 = rungs.
inline Labeled m6k2() {
    std::vector<usp::Edge> es;
    std::map<usp::Edge, int> cls;
    for (int layer = 0; layer < 2; ++layer) {
        int base = 6 * layer;
        for (int i = 0; i < 6; ++i) {
            usp::Edge e{std::min(base + i, base + (i + 1) % 6),
                        std::max(base + i, base + (i + 1) % 6)};
            es.push_back(e);
            cls[e] = 0;
        }
        for (int i = 0; i < 3; ++i) {
            es.emplace_back(base + i, base + i + 3);
            cls[{base + i, base + i + 3}] = 1;
        }
    }
    for (int i = 0; i < 6; ++i) {
        es.emplace_back(i, i + 6);
        cls[{i, i + 6}] = 2;
    }
    usp::GraphPtr g = share(usp::Graph::build(12, es));
    return {g, label_edges(g, cls, 3)};
}

} // namespace fixtures
