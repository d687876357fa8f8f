#include "usp/product.hpp"

#include <algorithm>
#include <set>

#include "usp/error.hpp"
#include "usp/isomorphism.hpp"
#include "usp/vertex_partitions.hpp"

namespace usp {

Graph cartesian_product(const Graph& a, const Graph& b) {
    std::vector<Edge> es;
    for (auto [u, v] : a.edges)
        for (int x = 0; x < b.n; ++x) es.emplace_back(u * b.n + x, v * b.n + x);
    for (auto [x, y] : b.edges)
        for (int u = 0; u < a.n; ++u) es.emplace_back(u * b.n + x, u * b.n + y);
    return Graph::build_relaxed(a.n * b.n, es);
}

QuotientGraph cartesian_product(const QuotientGraph& a, const QuotientGraph& b) {
    std::set<std::pair<int, int>> es;
    auto put = [&](int p, int q) { es.emplace(std::min(p, q), std::max(p, q)); };
    for (auto [u, v] : a.edges)
        for (int x = 0; x < b.k; ++x) put(u * b.k + x, v * b.k + x);
    for (auto [x, y] : b.edges)
        for (int u = 0; u < a.k; ++u) put(u * b.k + x, u * b.k + y);
    QuotientGraph q;
    q.k = a.k * b.k;
    q.edges.assign(es.begin(), es.end());
    return q;
}

WeightedDigraph cartesian_product_weighted(const WeightedDigraph& a, const WeightedDigraph& b) {
    WeightedDigraph w;
    w.k = a.k * b.k;
    w.weight.assign(w.k, std::vector<int>(w.k, 0));
    for (int g1 = 0; g1 < a.k; ++g1)
        for (int h1 = 0; h1 < b.k; ++h1)
            for (int g2 = 0; g2 < a.k; ++g2)
                for (int h2 = 0; h2 < b.k; ++h2) {
                    int val = 0;
                    if (h1 == h2 && g1 != g2) val = a.weight[g1][g2];
                    else if (g1 == g2 && h1 != h2) val = b.weight[h1][h2];
                    else if (g1 == g2 && h1 == h2) val = a.weight[g1][g1] + b.weight[h1][h1];
                    w.weight[g1 * b.k + h1][g2 * b.k + h2] = val;
                }
    return w;
}

ProductRelation product_relation_of(const std::vector<Graph>& factors) {
    if (factors.size() < 2)
        fail(ErrorKind::InvalidArgument, "a product needs at least two factors");
    int total = 1;
    for (const Graph& f : factors) total *= f.n;
    std::vector<int> radix(factors.size());
    {
        int acc = 1;
        for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
            radix[i] = acc;
            acc *= factors[i].n;
        }
    }
    std::vector<Edge> es;
    std::vector<int> cls_raw;
    for (size_t j = 0; j < factors.size(); ++j) {
        // edges moving in coordinate j, all combinations of other coordinates
        std::vector<int> rest_sizes;
        for (size_t i = 0; i < factors.size(); ++i)
            if (i != j) rest_sizes.push_back(factors[i].n);
        std::vector<int> idx(rest_sizes.size(), 0);
        while (true) {
            int base = 0;
            size_t pos = 0;
            for (size_t i = 0; i < factors.size(); ++i)
                if (i != j) base += idx[pos++] * radix[i];
            for (auto [u, v] : factors[j].edges) {
                es.emplace_back(base + u * radix[j], base + v * radix[j]);
                cls_raw.push_back(static_cast<int>(j));
            }
            size_t c = rest_sizes.size();
            while (c > 0 && ++idx[c - 1] == rest_sizes[c - 1]) idx[--c] = 0;
            if (c == 0) break;
        }
        if (rest_sizes.empty()) break;  // unreachable with >= 2 factors
    }
    // edge list must be sorted for Graph; carry classes along
    std::vector<size_t> order(es.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        Edge a{std::min(es[x].first, es[x].second), std::max(es[x].first, es[x].second)};
        Edge b{std::min(es[y].first, es[y].second), std::max(es[y].first, es[y].second)};
        return a < b;
    });
    std::vector<Edge> sorted_edges;
    std::vector<int> sorted_cls;
    for (size_t i : order) {
        sorted_edges.push_back(es[i]);
        sorted_cls.push_back(cls_raw[i]);
    }
    auto graph = std::make_shared<const Graph>(Graph::build_relaxed(total, sorted_edges));
    // compact class ids in coordinate order, skipping edgeless factors
    std::vector<int> remap(factors.size(), -1);
    int next = 0;
    for (size_t j = 0; j < factors.size(); ++j)
        if (!factors[j].edges.empty()) remap[j] = next++;
    for (int& c : sorted_cls) c = remap[c];
    EdgeRelation rel = EdgeRelation::make(graph, sorted_cls, next);
    return {graph, std::move(rel)};
}

namespace {

std::vector<int> block_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Graph component_subgraph(const Graph& g, const EdgeSubset& s, int through_vertex,
                         const VertexPartition& comps) {
    int blk = comps.block_of[through_vertex];
    const std::vector<int>& verts = comps.blocks[blk];
    std::vector<int> dense(g.n, -1);
    for (size_t i = 0; i < verts.size(); ++i) dense[verts[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (!s[e]) continue;
        auto [u, v] = g.edges[e];
        if (dense[u] >= 0 && dense[v] >= 0) es.emplace_back(dense[u], dense[v]);
    }
    return Graph::build(static_cast<int>(verts.size()), es);
}

void require_certified(const UspStatus& status) {
    if (!status.certified())
        fail(ErrorKind::NotCertifiedUsp, "relation is not certified as a USP-relation");
}

} // namespace

ProductPairCheck is_product_relation_pair(const EdgeRelation& r, const UspStatus& status) {
    if (r.num_classes != 2)
        fail(ErrorKind::NotTwoClasses, "criterion needs exactly two classes");
    require_certified(status);
    const Graph& g = r.g();
    VertexPartition pa = class_partition(r, 0);
    VertexPartition pb = class_partition(r, 1);
    ProductPairCheck out;
    for (int a = 0; a < pa.block_count(); ++a)
        for (int b = 0; b < pb.block_count(); ++b) {
            int size = static_cast<int>(block_intersection(pa.blocks[a], pb.blocks[b]).size());
            if (size != 1) {
                out.is_product = false;
                out.counterexample = ProductPairCheck::Counterexample{a, b, size};
                return out;
            }
        }
    out.is_product = true;
    out.factors = std::pair{component_subgraph(g, r.class_edges(0), 0, pa),
                            component_subgraph(g, r.class_edges(1), 0, pb)};
    return out;
}

ProductDecomposition verify_quotient_decomposition(const EdgeRelation& r,
                                                   const UspStatus& status) {
    require_certified(status);
    const Graph& g = r.g();
    const int k = r.num_classes;

    ProductDecomposition dec;
    std::vector<VertexPartition> pbar;
    for (int c = 0; c < k; ++c) {
        pbar.push_back(complement_partition(r, c));
        std::vector<Edge> phi_edges;
        EdgeSubset s = r.class_edges(c);
        for (size_t e = 0; e < g.edges.size(); ++e)
            if (s[e]) phi_edges.push_back(g.edges[e]);
        Graph g_phi = Graph::build_relaxed(g.n, phi_edges);
        dec.factors.push_back(quotient_graph(g_phi, pbar.back()));
    }
    dec.refinement = common_refinement(r);
    dec.quotient = quotient_graph(g, dec.refinement);

    const int blocks = dec.refinement.block_count();
    dec.block_tuple.assign(blocks, std::vector<int>(k, -1));
    for (int b = 0; b < blocks; ++b) {
        int x0 = dec.refinement.blocks[b].front();
        for (int c = 0; c < k; ++c) dec.block_tuple[b][c] = pbar[c].block_of[x0];
        // well-definedness: the tuple may not depend on the representative
        for (int u : dec.refinement.blocks[b])
            for (int c = 0; c < k; ++c)
                if (pbar[c].block_of[u] != dec.block_tuple[b][c])
                    fail(ErrorKind::IsomorphismFailure,
                         "map not well defined at vertex " + std::to_string(u));
    }
    std::set<std::vector<int>> images(dec.block_tuple.begin(), dec.block_tuple.end());
    if (static_cast<int>(images.size()) != blocks)
        fail(ErrorKind::IsomorphismFailure, "map is not injective");
    long long tuple_count = 1;
    for (int c = 0; c < k; ++c) {
        tuple_count *= pbar[c].block_count();
        if (tuple_count > g.n) break;  // cannot be onto a larger set than V(G)
    }
    if (tuple_count != blocks)
        fail(ErrorKind::IsomorphismFailure, "map is not surjective");

    for (int a = 0; a < blocks; ++a) {
        for (int b = a; b < blocks; ++b) {
            bool lhs = dec.quotient.has_edge(a, b);
            bool rhs;
            if (a == b) {
                rhs = false;
                for (int c = 0; c < k; ++c)
                    if (dec.factors[c].has_loop(dec.block_tuple[a][c])) rhs = true;
            } else {
                int moving = -1;
                bool multi = false;
                for (int c = 0; c < k; ++c)
                    if (dec.block_tuple[a][c] != dec.block_tuple[b][c]) {
                        if (moving >= 0) multi = true;
                        moving = c;
                    }
                rhs = !multi && moving >= 0 &&
                      dec.factors[moving].has_edge(dec.block_tuple[a][moving],
                                                   dec.block_tuple[b][moving]);
            }
            if (lhs != rhs)
                fail(ErrorKind::IsomorphismFailure,
                     "edge correspondence fails between blocks " + std::to_string(a) + " and " +
                         std::to_string(b));
        }
    }
    return dec;
}

bool verify_weighted_decomposition(const EdgeRelation& r, const UspStatus& status) {
    ProductDecomposition dec = verify_quotient_decomposition(r, status);
    const Graph& g = r.g();
    const int k = r.num_classes;

    WeightedDigraph lhs = weighted_quotient(g, dec.refinement);
    std::vector<WeightedDigraph> wfactors;
    for (int c = 0; c < k; ++c) {
        EdgeSubset s = r.class_edges(c);
        std::vector<Edge> phi_edges;
        for (size_t e = 0; e < g.edges.size(); ++e)
            if (s[e]) phi_edges.push_back(g.edges[e]);
        Graph g_phi = Graph::build_relaxed(g.n, phi_edges);
        wfactors.push_back(weighted_quotient(g_phi, complement_partition(r, c)));
    }
    WeightedDigraph rhs = wfactors.front();
    for (int c = 1; c < k; ++c) rhs = cartesian_product_weighted(rhs, wfactors[c]);

    // index of a tuple in the left-folded product
    auto index_of = [&](const std::vector<int>& tuple) {
        long long idx = 0;
        for (int c = 0; c < k; ++c) idx = idx * wfactors[c].k + tuple[c];
        return static_cast<int>(idx);
    };
    for (int a = 0; a < lhs.k; ++a)
        for (int b = 0; b < lhs.k; ++b)
            if (lhs.weight[a][b] !=
                rhs.weight[index_of(dec.block_tuple[a])][index_of(dec.block_tuple[b])])
                return false;
    return true;
}

bool verify_loopless_decomposition(const EdgeRelation& r, const UspStatus& status) {
    const Graph& g = r.g();
    for (int c = 0; c < r.num_classes; ++c)
        if (!components_induced(g, r.complement_edges(c)))
            fail(ErrorKind::PreconditionNotMet,
                 "complement of class " + std::to_string(c) + " has a non-induced component");
    ProductDecomposition dec = verify_quotient_decomposition(r, status);
    // induced complements promise a loop-free quotient
    for (auto [a, b] : dec.quotient.edges)
        if (a == b) return false;

    // factors per the statement: quotient of the whole graph, loops dropped
    std::vector<QuotientGraph> nfactors;
    for (int c = 0; c < r.num_classes; ++c) {
        QuotientGraph q = quotient_graph(g, complement_partition(r, c));
        QuotientGraph stripped;
        stripped.k = q.k;
        for (auto [a, b] : q.edges)
            if (a != b) stripped.edges.emplace_back(a, b);
        stripped.blocks = q.blocks;
        nfactors.push_back(std::move(stripped));
    }
    for (int a = 0; a < dec.refinement.block_count(); ++a) {
        for (int b = a + 1; b < dec.refinement.block_count(); ++b) {
            bool lhs = dec.quotient.has_edge(a, b);
            int moving = -1;
            bool multi = false;
            for (int c = 0; c < r.num_classes; ++c)
                if (dec.block_tuple[a][c] != dec.block_tuple[b][c]) {
                    if (moving >= 0) multi = true;
                    moving = c;
                }
            bool rhs = !multi && moving >= 0 &&
                       nfactors[moving].has_edge(dec.block_tuple[a][moving],
                                                 dec.block_tuple[b][moving]);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

namespace {

void factorize_rec(const Graph& g, int class_bound, FactorizationResult& out) {
    auto gp = std::make_shared<const Graph>(g);
    EdgeRelation delta = compute_delta(gp);
    const int k = delta.num_classes;
    if (k > class_bound)
        fail(ErrorKind::BudgetExceeded,
             "delta closure has " + std::to_string(k) + " classes, bound is " +
                 std::to_string(class_bound));
    if (k >= 2) {
        // two-class coarsenings; class 0 stays on the first side, so each
        // unordered split appears once, in increasing mask order
        for (std::uint64_t mask = 1; mask < (1ULL << k) - 1; mask += 2) {
            std::vector<int> cls(g.edge_count());
            for (int e = 0; e < g.edge_count(); ++e)
                cls[e] = (mask >> delta.class_of[e]) & 1 ? 0 : 1;
            EdgeRelation split = EdgeRelation::make(gp, cls, 2);
            UspStatus status = certify_usp(split);
            if (!status.certified()) continue;  // coarsenings of delta* always certify
            ProductPairCheck check = is_product_relation_pair(split, status);
            if (check.is_product) {
                out.certificates.push_back(split);
                factorize_rec(check.factors->first, class_bound, out);
                factorize_rec(check.factors->second, class_bound, out);
                return;
            }
        }
    }
    out.factors.push_back(g);  // prime
}

} // namespace

FactorizationResult prime_factorize_small(const Graph& g, int class_bound) {
    if (!g.connected)
        fail(ErrorKind::Disconnected, "factorization needs a connected graph");
    FactorizationResult out;
    factorize_rec(g, class_bound, out);
    long long total = 1;
    for (const Graph& f : out.factors) total *= f.n;
    if (total != g.n)
        fail(ErrorKind::InternalInconsistency, "factor sizes do not multiply to the input size");
    std::sort(out.factors.begin(), out.factors.end(), [](const Graph& a, const Graph& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
        if (a.n > 12) return a.edges < b.edges;  // canonical form is capped
        return canonical_form(a) < canonical_form(b);
    });
    return out;
}

} // namespace usp
