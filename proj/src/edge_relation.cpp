#include "usp/edge_relation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "usp/error.hpp"

namespace usp {

EdgeRelation EdgeRelation::make(GraphPtr g, std::vector<int> class_of, int num_classes) {
    if (!g) fail(ErrorKind::InvalidArgument, "relation needs a graph");
    if (class_of.size() != g->edges.size())
        fail(ErrorKind::GraphMismatch, "class assignment size does not match edge count");
    std::vector<bool> used(num_classes, false);
    for (int c : class_of) {
        if (c < 0 || c >= num_classes)
            fail(ErrorKind::UnknownClassId, "class id " + std::to_string(c) + " out of range");
        used[c] = true;
    }
    for (int c = 0; c < num_classes; ++c)
        if (!used[c]) fail(ErrorKind::InvalidArgument, "empty class " + std::to_string(c));
    EdgeRelation r;
    r.graph = std::move(g);
    r.class_of = std::move(class_of);
    r.num_classes = num_classes;
    return r;
}

EdgeRelation EdgeRelation::canonicalized(GraphPtr g, const std::vector<int>& raw) {
    if (!g) fail(ErrorKind::InvalidArgument, "relation needs a graph");
    if (raw.size() != g->edges.size())
        fail(ErrorKind::GraphMismatch, "class assignment size does not match edge count");
    std::map<int, int> newid;
    std::vector<int> class_of(raw.size());
    for (size_t e = 0; e < raw.size(); ++e) {
        auto it = newid.find(raw[e]);
        if (it == newid.end()) it = newid.emplace(raw[e], static_cast<int>(newid.size())).first;
        class_of[e] = it->second;
    }
    return make(std::move(g), std::move(class_of), static_cast<int>(newid.size()));
}

EdgeRelation EdgeRelation::single_class(GraphPtr g) {
    if (!g) fail(ErrorKind::InvalidArgument, "relation needs a graph");
    if (g->edges.empty()) fail(ErrorKind::InvalidArgument, "graph has no edges");
    std::vector<int> cls(g->edges.size(), 0);
    return make(std::move(g), std::move(cls), 1);
}

std::vector<std::vector<int>> EdgeRelation::classes() const {
    std::vector<std::vector<int>> out(num_classes);
    for (size_t e = 0; e < class_of.size(); ++e) out[class_of[e]].push_back(static_cast<int>(e));
    return out;
}

EdgeSubset EdgeRelation::class_edges(int cls) const {
    check_class(cls);
    EdgeSubset s(class_of.size(), false);
    for (size_t e = 0; e < class_of.size(); ++e) s[e] = (class_of[e] == cls);
    return s;
}

EdgeSubset EdgeRelation::complement_edges(int cls) const {
    check_class(cls);
    EdgeSubset s(class_of.size(), false);
    for (size_t e = 0; e < class_of.size(); ++e) s[e] = (class_of[e] != cls);
    return s;
}

void EdgeRelation::check_class(int cls) const {
    if (cls < 0 || cls >= num_classes)
        fail(ErrorKind::UnknownClassId, "class id " + std::to_string(cls) + " out of range");
}

namespace {

// Adjacent edge pairs (i, j) with i < j; in a simple graph two distinct
// edges share at most one vertex, so each pair arises once.
std::vector<std::pair<int, int>> adjacent_edge_pairs(const Graph& g) {
    std::vector<std::vector<int>> incident(g.n);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        incident[g.edges[e].first].push_back(static_cast<int>(e));
        incident[g.edges[e].second].push_back(static_cast<int>(e));
    }
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < g.n; ++v)
        for (size_t i = 0; i < incident[v].size(); ++i)
            for (size_t j = i + 1; j < incident[v].size(); ++j)
                out.emplace_back(std::min(incident[v][i], incident[v][j]),
                                 std::max(incident[v][i], incident[v][j]));
    std::sort(out.begin(), out.end());
    return out;
}

bool square_qualifies(const Square& sq, const Graph& g, const std::vector<int>& class_of) {
    for (const auto& [a, b] : sq.opposite_pairs()) {
        int ea = g.edge_id(a.first, a.second);
        int eb = g.edge_id(b.first, b.second);
        if (class_of[ea] != class_of[eb]) return false;
    }
    return true;
}

} // namespace

DeltaPairs delta_pairs(const Graph& g) {
    DeltaPairs d;
    for (const Square& sq : enumerate_chordless_squares(g)) {
        for (const auto& [a, b] : sq.opposite_pairs()) {
            int ea = g.edge_id(a.first, a.second);
            int eb = g.edge_id(b.first, b.second);
            d.opposite_pairs.emplace_back(std::min(ea, eb), std::max(ea, eb));
        }
    }
    for (auto [i, j] : adjacent_edge_pairs(g))
        if (squares_spanned_by(g, g.edges[i], g.edges[j]).empty())
            d.no_square_pairs.emplace_back(i, j);
    std::sort(d.opposite_pairs.begin(), d.opposite_pairs.end());
    d.opposite_pairs.erase(std::unique(d.opposite_pairs.begin(), d.opposite_pairs.end()),
                           d.opposite_pairs.end());
    return d;
}

std::vector<std::pair<int, int>> DeltaPairs::all() const {
    std::vector<std::pair<int, int>> out = opposite_pairs;
    out.insert(out.end(), no_square_pairs.begin(), no_square_pairs.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EdgeRelation compute_delta(GraphPtr g) {
    if (!g) fail(ErrorKind::InvalidArgument, "compute_delta needs a graph");
    const int m = g->edge_count();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (auto [a, b] : delta_pairs(*g).all()) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<int> raw(m);
    for (int e = 0; e < m; ++e) raw[e] = find(e);
    return EdgeRelation::canonicalized(std::move(g), raw);
}

S1Result satisfies_s1(const EdgeRelation& r) {
    const Graph& g = r.g();
    S1Result res;
    for (auto [i, j] : adjacent_edge_pairs(g)) {
        if (r.class_of[i] == r.class_of[j]) continue;
        std::vector<Square> qual;
        for (const Square& sq : squares_spanned_by(g, g.edges[i], g.edges[j]))
            if (square_qualifies(sq, g, r.class_of)) qual.push_back(sq);
        if (qual.size() != 1) {
            res.holds = false;
            res.violation = S1Violation{
                i, j,
                qual.empty() ? S1Violation::Kind::NoQualifyingSquare
                             : S1Violation::Kind::MultipleQualifyingSquares,
                std::move(qual)};
            return res;
        }
    }
    res.holds = true;
    return res;
}

S2Result satisfies_s2(const EdgeRelation& r) {
    const Graph& g = r.g();
    for (const Square& sq : enumerate_chordless_squares(g))
        if (!square_qualifies(sq, g, r.class_of)) return {false, sq};
    return {true, std::nullopt};
}

bool has_square_property(const EdgeRelation& r) {
    bool via_squares = satisfies_s1(r).holds && satisfies_s2(r).holds;
    bool via_delta = true;
    for (auto [a, b] : delta_pairs(r.g()).all())
        if (r.class_of[a] != r.class_of[b]) {
            via_delta = false;
            break;
        }
    if (via_squares != via_delta)
        fail(ErrorKind::InternalInconsistency,
             "S1&S2 route and delta-containment route disagree");
    return via_delta;
}

bool is_finer(const EdgeRelation& q, const EdgeRelation& r) {
    if (!(*q.graph == *r.graph))
        fail(ErrorKind::GraphMismatch, "relations live on different graphs");
    std::vector<int> image(q.num_classes, -1);
    for (size_t e = 0; e < q.class_of.size(); ++e) {
        int qc = q.class_of[e];
        if (image[qc] == -1) image[qc] = r.class_of[e];
        else if (image[qc] != r.class_of[e]) return false;
    }
    return true;
}

EdgeRelation merge_classes(const EdgeRelation& r, const std::vector<int>& ids) {
    std::vector<int> uniq = ids;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int c : uniq) r.check_class(c);
    if (uniq.size() < 2)
        fail(ErrorKind::InvalidArgument, "need at least two distinct classes to merge");
    int target = uniq.front();
    std::vector<int> raw = r.class_of;
    for (int& c : raw)
        if (std::binary_search(uniq.begin(), uniq.end(), c)) c = target;
    return EdgeRelation::canonicalized(r.graph, raw);
}

namespace {

// Precomputed S1 data: for every adjacent edge pair, the spanned squares'
// opposite pairs as edge-id quadruples (a1,b1,a2,b2).
struct S1Cache {
    struct PairEntry {
        int e, f;
        std::vector<std::array<int, 4>> squares;
    };
    std::vector<PairEntry> pairs;

    explicit S1Cache(const Graph& g) {
        for (auto [i, j] : adjacent_edge_pairs(g)) {
            PairEntry entry{i, j, {}};
            for (const Square& sq : squares_spanned_by(g, g.edges[i], g.edges[j])) {
                auto ops = sq.opposite_pairs();
                entry.squares.push_back(
                    {g.edge_id(ops[0].first.first, ops[0].first.second),
                     g.edge_id(ops[0].second.first, ops[0].second.second),
                     g.edge_id(ops[1].first.first, ops[1].first.second),
                     g.edge_id(ops[1].second.first, ops[1].second.second)});
            }
            pairs.push_back(std::move(entry));
        }
    }

    bool s1_holds(const std::vector<int>& cls) const {
        for (const auto& p : pairs) {
            if (cls[p.e] == cls[p.f]) continue;
            int qual = 0;
            for (const auto& q : p.squares)
                if (cls[q[0]] == cls[q[1]] && cls[q[2]] == cls[q[3]] && ++qual > 1) break;
            if (qual != 1) return false;
        }
        return true;
    }
};

// Restricted growth strings enumerate the set partitions of {0..n-1};
// the all-zero string (single block) comes first.
bool next_rgs(std::vector<int>& rgs) {
    const int n = static_cast<int>(rgs.size());
    std::vector<int> maxv(n, 0);
    for (int i = 1; i < n; ++i) maxv[i] = std::max(maxv[i - 1], rgs[i - 1] + 1);
    for (int i = n - 1; i >= 1; --i) {
        if (rgs[i] < maxv[i]) {
            rgs[i]++;
            std::fill(rgs.begin() + i + 1, rgs.end(), 0);
            return true;
        }
    }
    return false;
}

} // namespace

UspStatus certify_usp(const EdgeRelation& r, const std::optional<EdgeRelation>& witness,
                      UspBudget budget) {
    if (witness && !is_finer(*witness, r))
        fail(ErrorKind::WitnessNotFiner, "supplied witness is not finer than the relation");

    if (satisfies_s1(r).holds) return {UspStatus::Kind::HasUsp, std::nullopt};
    if (witness && satisfies_s1(*witness).holds)
        return {UspStatus::Kind::UspByWitness, *witness};

    const Graph& g = r.g();
    const int m = g.edge_count();

    // Adjacent edges spanning no square must share a class in any relation
    // with S1, hence in every refinement considered below.
    DeltaPairs dp = delta_pairs(g);
    for (auto [a, b] : dp.no_square_pairs)
        if (r.class_of[a] != r.class_of[b])
            return {UspStatus::Kind::NotUsp, std::nullopt};

    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (auto [a, b] : dp.no_square_pairs) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    // Atoms (forced-pair closure blocks) per class; refinements that split an
    // atom fail S1 outright, so the search runs over partitions of atoms.
    std::map<int, int> atom_id;
    std::vector<std::vector<int>> atoms_of_class(r.num_classes);
    std::vector<std::vector<int>> atom_edges;
    for (int e = 0; e < m; ++e) {
        int root = find(e);
        auto it = atom_id.find(root);
        if (it == atom_id.end()) {
            it = atom_id.emplace(root, static_cast<int>(atom_edges.size())).first;
            atom_edges.emplace_back();
            atoms_of_class[r.class_of[e]].push_back(it->second);
        }
        atom_edges[it->second].push_back(e);
    }

    S1Cache cache(g);
    std::vector<std::vector<int>> rgs(r.num_classes);
    for (int c = 0; c < r.num_classes; ++c)
        rgs[c].assign(atoms_of_class[c].size(), 0);

    std::vector<int> cls(m);
    std::uint64_t tested = 0;
    bool first = true;  // the all-intact candidate equals r, already rejected
    while (true) {
        if (!first) {
            if (++tested > budget.max_candidates)
                return {UspStatus::Kind::Unknown, std::nullopt};
            int next_class = 0;
            for (int c = 0; c < r.num_classes; ++c) {
                for (size_t a = 0; a < atoms_of_class[c].size(); ++a)
                    for (int e : atom_edges[atoms_of_class[c][a]])
                        cls[e] = next_class + rgs[c][a];
                int parts = atoms_of_class[c].empty()
                                ? 0
                                : *std::max_element(rgs[c].begin(), rgs[c].end()) + 1;
                next_class += parts;
            }
            if (cache.s1_holds(cls)) {
                EdgeRelation q = EdgeRelation::canonicalized(r.graph, cls);
                return {UspStatus::Kind::UspByWitness, std::move(q)};
            }
        }
        first = false;
        // odometer over per-class partitions, last class fastest
        int c = r.num_classes - 1;
        while (c >= 0 && !next_rgs(rgs[c])) {
            rgs[c].assign(atoms_of_class[c].size(), 0);
            --c;
        }
        if (c < 0) break;  // every refinement examined
    }
    return {UspStatus::Kind::NotUsp, std::nullopt};
}

} // namespace usp
