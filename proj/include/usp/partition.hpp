#pragma once

#include <optional>
#include <vector>

namespace usp {

struct Graph;

/// Partition of {0..n-1} in canonical form: block ids are assigned in
/// increasing order of each block's smallest vertex, so two partitions are
/// equal exactly when they are the same set of blocks.
struct VertexPartition {
    int n = 0;
    std::vector<int> block_of;             // vertex -> block id
    std::vector<std::vector<int>> blocks;  // sorted vertex lists

    static VertexPartition from_block_assignment(int n, const std::vector<int>& raw);
    static VertexPartition singletons(int n);

    int block_count() const { return static_cast<int>(blocks.size()); }
    bool operator==(const VertexPartition& other) const {
        return n == other.n && blocks == other.blocks;
    }
};

/// Common refinement: blocks are the nonempty pairwise intersections.
VertexPartition refine(const VertexPartition& a, const VertexPartition& b);

/// True iff every block of `fine` is contained in some block of `coarse`.
bool partition_refines(const VertexPartition& fine, const VertexPartition& coarse);

struct DegreeMatrix {
    int k = 0;
    std::vector<std::vector<int>> m;  // m[A][B] = neighbors in B of any vertex of A
};

struct EquitabilityResult {
    struct Violation {
        int block_a;
        int block_b;
        int x;        // two vertices of block_a with different counts into block_b
        int x_prime;
    };
    std::optional<DegreeMatrix> matrix;
    std::optional<Violation> violation;
    bool equitable() const { return matrix.has_value(); }
};

/// Checks whether p is an equitable partition of g; on success yields the
/// partition degree matrix, otherwise the lexicographically first violating
/// (A, B, x, x') tuple.
EquitabilityResult is_equitable(const Graph& g, const VertexPartition& p);

} // namespace usp
