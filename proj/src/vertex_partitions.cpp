#include "usp/vertex_partitions.hpp"

#include "usp/error.hpp"

namespace usp {

VertexPartition class_partition(const EdgeRelation& r, int cls) {
    return connected_components(r.g(), r.class_edges(cls));
}

VertexPartition complement_partition(const EdgeRelation& r, int cls) {
    return connected_components(r.g(), r.complement_edges(cls));
}

VertexPartition common_refinement(const EdgeRelation& r) {
    // Empty intersection convention: with no classes the whole vertex set
    // is one block.
    if (r.num_classes == 0) {
        std::vector<int> raw(r.g().n, 0);
        return VertexPartition::from_block_assignment(r.g().n, raw);
    }
    VertexPartition p = complement_partition(r, 0);
    for (int c = 1; c < r.num_classes; ++c) p = refine(p, complement_partition(r, c));
    return p;
}

std::vector<int> neighbor_set_in_class(const EdgeRelation& r, int u, int cls) {
    const Graph& g = r.g();
    if (u < 0 || u >= g.n)
        fail(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(u) + " out of range");
    r.check_class(cls);
    std::vector<int> out;
    for (int v : g.adj[u])
        if (r.class_of[g.edge_id(u, v)] == cls) out.push_back(v);
    return out;
}

} // namespace usp
