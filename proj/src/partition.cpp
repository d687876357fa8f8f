#include "usp/partition.hpp"

#include <algorithm>
#include <map>

#include "usp/error.hpp"
#include "usp/graph.hpp"

namespace usp {

VertexPartition VertexPartition::from_block_assignment(int n, const std::vector<int>& raw) {
    if (static_cast<int>(raw.size()) != n)
        fail(ErrorKind::PartitionMismatch, "block assignment size does not match vertex count");
    // Ascending vertex scan assigns fresh ids on first encounter, which
    // orders block ids by each block's smallest vertex.
    std::map<int, int> newid;
    VertexPartition p;
    p.n = n;
    p.block_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        auto it = newid.find(raw[v]);
        if (it == newid.end()) {
            it = newid.emplace(raw[v], static_cast<int>(p.blocks.size())).first;
            p.blocks.emplace_back();
        }
        p.block_of[v] = it->second;
        p.blocks[it->second].push_back(v);
    }
    return p;
}

VertexPartition VertexPartition::singletons(int n) {
    std::vector<int> raw(n);
    for (int v = 0; v < n; ++v) raw[v] = v;
    return from_block_assignment(n, raw);
}

VertexPartition refine(const VertexPartition& a, const VertexPartition& b) {
    if (a.n != b.n)
        fail(ErrorKind::PartitionMismatch, "partitions over different vertex sets");
    std::map<std::pair<int, int>, int> cell;
    std::vector<int> raw(a.n);
    for (int v = 0; v < a.n; ++v) {
        auto key = std::pair{a.block_of[v], b.block_of[v]};
        auto it = cell.find(key);
        if (it == cell.end()) it = cell.emplace(key, static_cast<int>(cell.size())).first;
        raw[v] = it->second;
    }
    return VertexPartition::from_block_assignment(a.n, raw);
}

bool partition_refines(const VertexPartition& fine, const VertexPartition& coarse) {
    if (fine.n != coarse.n)
        fail(ErrorKind::PartitionMismatch, "partitions over different vertex sets");
    for (const auto& block : fine.blocks) {
        int target = coarse.block_of[block.front()];
        for (int v : block)
            if (coarse.block_of[v] != target) return false;
    }
    return true;
}

EquitabilityResult is_equitable(const Graph& g, const VertexPartition& p) {
    if (p.n != g.n)
        fail(ErrorKind::PartitionMismatch, "partition does not cover the graph's vertex set");
    const int k = p.block_count();
    // counts[v][B] = |N(v) cap block B|
    std::vector<std::vector<int>> counts(g.n, std::vector<int>(k, 0));
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v]) counts[v][p.block_of[w]]++;

    EquitabilityResult res;
    for (int a = 0; a < k; ++a) {
        int x0 = p.blocks[a].front();
        for (int b = 0; b < k; ++b) {
            for (int x : p.blocks[a]) {
                if (counts[x][b] != counts[x0][b]) {
                    res.violation = EquitabilityResult::Violation{a, b, x0, x};
                    return res;
                }
            }
        }
    }
    DegreeMatrix m;
    m.k = k;
    m.m.assign(k, std::vector<int>(k, 0));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) m.m[a][b] = counts[p.blocks[a].front()][b];
    res.matrix = std::move(m);
    return res;
}

} // namespace usp
