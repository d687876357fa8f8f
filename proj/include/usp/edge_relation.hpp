#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "usp/graph.hpp"

namespace usp {

using GraphPtr = std::shared_ptr<const Graph>;

/// Equivalence relation on E(G), stored as one class id per edge.
/// Class ids are contiguous and every class is nonempty.
struct EdgeRelation {
    GraphPtr graph;
    std::vector<int> class_of;  // edge id -> class id
    int num_classes = 0;

    /// Validates contiguity/nonemptiness; keeps the given numbering.
    static EdgeRelation make(GraphPtr g, std::vector<int> class_of, int num_classes);

    /// Accepts arbitrary ids and renumbers classes by smallest member edge.
    static EdgeRelation canonicalized(GraphPtr g, const std::vector<int>& raw);

    static EdgeRelation single_class(GraphPtr g);

    const Graph& g() const { return *graph; }
    std::vector<std::vector<int>> classes() const;  // edge ids per class
    EdgeSubset class_edges(int cls) const;
    EdgeSubset complement_edges(int cls) const;
    void check_class(int cls) const;

    bool operator==(const EdgeRelation& other) const {
        return class_of == other.class_of && num_classes == other.num_classes &&
               *graph == *other.graph;
    }
};

/// Raw pairs of the edge relation delta, before transitive closure.
/// Pairs are (e, f) with e < f; the reflexive pairs (e, e) are implicit.
struct DeltaPairs {
    std::vector<std::pair<int, int>> opposite_pairs;   // opposite edges of a chordless square
    std::vector<std::pair<int, int>> no_square_pairs;  // adjacent, spanning no chordless square
    std::vector<std::pair<int, int>> all() const;
};

DeltaPairs delta_pairs(const Graph& g);

/// Transitive closure of delta as an edge relation (classes numbered by
/// smallest member edge).
EdgeRelation compute_delta(GraphPtr g);

struct S1Violation {
    enum class Kind { NoQualifyingSquare, MultipleQualifyingSquares };
    int e = -1;
    int f = -1;
    Kind kind = Kind::NoQualifyingSquare;
    std::vector<Square> witnesses;  // the qualifying squares found
};

struct S1Result {
    bool holds = false;
    std::optional<S1Violation> violation;
};

/// A square qualifies for a relation when both of its opposite-edge pairs
/// lie in one class. S1: every adjacent cross-class edge pair spans exactly
/// one qualifying square. The first violation in lexicographic (e, f) order
/// is reported.
S1Result satisfies_s1(const EdgeRelation& r);

struct S2Result {
    bool holds = false;
    std::optional<Square> witness;  // first violating square in canonical order
};

/// S2: both opposite-edge pairs of every chordless square are same-class.
S2Result satisfies_s2(const EdgeRelation& r);

/// Square property, computed along two routes that are provably equivalent:
/// (S1 and S2) versus containment of every delta pair. Disagreement means an
/// implementation bug and raises InternalInconsistency.
bool has_square_property(const EdgeRelation& r);

/// True iff every class of q is contained in a class of r.
bool is_finer(const EdgeRelation& q, const EdgeRelation& r);

/// Unites the named classes into one; remaining ids are renumbered
/// contiguously by smallest member edge.
EdgeRelation merge_classes(const EdgeRelation& r, const std::vector<int>& ids);

struct UspBudget {
    std::uint64_t max_candidates = 200000;  // refinements examined before giving up
};

/// Certification outcome for the USP-relation property ("some refinement
/// satisfies S1"). NotUsp is only returned after exhausting the full
/// refinement space; a budget cut yields Unknown.
struct UspStatus {
    enum class Kind { HasUsp, UspByWitness, NotUsp, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<EdgeRelation> witness;  // for UspByWitness: a finer relation satisfying S1
    bool certified() const { return kind == Kind::HasUsp || kind == Kind::UspByWitness; }
};

UspStatus certify_usp(const EdgeRelation& r,
                      const std::optional<EdgeRelation>& witness = std::nullopt,
                      UspBudget budget = {});

} // namespace usp
