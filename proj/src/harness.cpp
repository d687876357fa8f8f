#include "usp/harness.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "usp/error.hpp"
#include "usp/partition.hpp"
#include "usp/product.hpp"
#include "usp/quotient.hpp"
#include "usp/vertex_partitions.hpp"

namespace usp {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skipped: return "skipped";
    }
    return "?";
}

namespace {

void require_certified(const UspStatus& status) {
    if (!status.certified())
        fail(ErrorKind::NotCertifiedUsp, "relation is not certified as a USP-relation");
}

nlohmann::json edge_json(const Graph& g, int e) {
    return nlohmann::json{g.edges[e].first, g.edges[e].second};
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

const std::vector<int>& block_of(const VertexPartition& p, int x) {
    return p.blocks[p.block_of[x]];
}

// components of the spanning subgraph on the union of two classes
VertexPartition union_partition(const EdgeRelation& r, int phi, int psi) {
    EdgeSubset s(r.class_of.size(), false);
    for (size_t e = 0; e < r.class_of.size(); ++e)
        s[e] = (r.class_of[e] == phi || r.class_of[e] == psi);
    return connected_components(r.g(), s);
}

// components avoiding both classes
VertexPartition union_complement_partition(const EdgeRelation& r, int phi, int psi) {
    EdgeSubset s(r.class_of.size(), false);
    for (size_t e = 0; e < r.class_of.size(); ++e)
        s[e] = (r.class_of[e] != phi && r.class_of[e] != psi);
    return connected_components(r.g(), s);
}

} // namespace

namespace stmt {

CheckResult incidence(const EdgeRelation& r) {
    for (int u = 0; u < r.g().n; ++u)
        for (int c = 0; c < r.num_classes; ++c)
            if (neighbor_set_in_class(r, u, c).empty())
                return CheckResult::fail({{"vertex", u}, {"class", c}});
    return CheckResult::pass();
}

CheckResult degree_bijection(const EdgeRelation& r) {
    const Graph& g = r.g();
    for (size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v] = g.edges[e];
        int phi = r.class_of[e];
        for (int psi = 0; psi < r.num_classes; ++psi) {
            if (psi == phi) continue;
            size_t du = neighbor_set_in_class(r, u, psi).size();
            size_t dv = neighbor_set_in_class(r, v, psi).size();
            if (du != dv)
                return CheckResult::fail({{"edge", edge_json(g, static_cast<int>(e))},
                                          {"class", psi},
                                          {"degree_u", du},
                                          {"degree_v", dv}});
        }
    }
    return CheckResult::pass();
}

CheckResult neighbor_counts(const EdgeRelation& r) {
    for (int phi = 0; phi < r.num_classes; ++phi) {
        VertexPartition comps = class_partition(r, phi);
        for (int psi = 0; psi < r.num_classes; ++psi) {
            if (psi == phi) continue;
            for (const auto& cv : comps.blocks) {
                for (int w = 0; w < comps.block_count(); ++w) {
                    const auto& cw = comps.blocks[w];
                    int expected = -1;
                    for (int x : cv) {
                        auto nbr = neighbor_set_in_class(r, x, psi);
                        int count = static_cast<int>(intersect(nbr, cw).size());
                        if (expected < 0) expected = count;
                        else if (count != expected)
                            return CheckResult::fail({{"phi", phi},
                                                      {"psi", psi},
                                                      {"component_v", cv},
                                                      {"component_w", cw},
                                                      {"vertex", x},
                                                      {"count", count},
                                                      {"expected", expected}});
                    }
                }
            }
        }
    }
    return CheckResult::pass();
}

CheckResult nonempty_intersection(const EdgeRelation& r) {
    if (r.num_classes != 2)
        fail(ErrorKind::NotTwoClasses, "statement needs exactly two classes");
    VertexPartition pa = class_partition(r, 0);
    VertexPartition pb = class_partition(r, 1);
    for (const auto& a : pa.blocks)
        for (const auto& b : pb.blocks)
            if (intersect(a, b).empty())
                return CheckResult::fail({{"component_a", a}, {"component_b", b}});
    return CheckResult::pass();
}

CheckResult union_components(const EdgeRelation& r, int phi, int psi) {
    r.check_class(phi);
    r.check_class(psi);
    VertexPartition pu = union_partition(r, phi, psi);
    VertexPartition pp = class_partition(r, phi);
    VertexPartition pq = class_partition(r, psi);
    const std::pair<const VertexPartition*, const VertexPartition*> dirs[2] = {{&pp, &pq},
                                                                               {&pq, &pp}};
    for (int x = 0; x < r.g().n; ++x) {
        const auto& target = block_of(pu, x);
        for (auto [first, second] : dirs) {
            std::set<int> acc;
            for (int y : block_of(*first, x))
                for (int z : block_of(*second, y)) acc.insert(z);
            std::vector<int> got(acc.begin(), acc.end());
            if (got != target)
                return CheckResult::fail(
                    {{"x", x}, {"union", got}, {"joined_component", target}});
        }
    }
    return CheckResult::pass();
}

CheckResult intersection_criterion(const EdgeRelation& r, int phi, int psi) {
    r.check_class(phi);
    r.check_class(psi);
    VertexPartition pbar_phi = complement_partition(r, phi);
    VertexPartition pbar_psi = complement_partition(r, psi);
    VertexPartition pbar_u = union_complement_partition(r, phi, psi);
    VertexPartition pphi = class_partition(r, phi);
    for (int x = 0; x < r.g().n; ++x) {
        bool lhs = intersect(block_of(pbar_phi, x), block_of(pbar_psi, x)) == block_of(pbar_u, x);
        bool rhs = subset_of(intersect(block_of(pphi, x), block_of(pbar_phi, x)),
                             block_of(pbar_u, x));
        if (lhs != rhs)
            return CheckResult::fail({{"x", x}, {"lhs", lhs}, {"rhs", rhs}});
    }
    return CheckResult::pass();
}

CheckResult subset_props(const EdgeRelation& r, int phi, int psi) {
    r.check_class(phi);
    r.check_class(psi);
    const Graph& g = r.g();
    VertexPartition pphi = class_partition(r, phi);
    VertexPartition ppsi = class_partition(r, psi);
    VertexPartition pbar_phi = complement_partition(r, phi);
    VertexPartition pbar_u = union_complement_partition(r, phi, psi);

    // (1) containment of a phi-component in a psi-component propagates
    for (int x = 0; x < g.n; ++x) {
        if (!subset_of(block_of(pphi, x), block_of(ppsi, x))) continue;
        for (int y : block_of(ppsi, x))
            if (!subset_of(block_of(pphi, y), block_of(ppsi, x)))
                return CheckResult::fail({{"clause", 1}, {"x", x}, {"y", y}});
    }
    // (2) a phi-component inside its complement component forces a spanning complement
    for (int x = 0; x < g.n; ++x) {
        if (!subset_of(block_of(pphi, x), block_of(pbar_phi, x))) continue;
        if (static_cast<int>(block_of(pbar_phi, x).size()) != g.n)
            return CheckResult::fail({{"clause", 2}, {"x", x}});
    }
    // (3) under a spanning complement the mixed containment loses its intersection
    bool spanning = false;
    for (int x = 0; x < g.n && !spanning; ++x)
        spanning = static_cast<int>(block_of(pbar_phi, x).size()) == g.n;
    if (spanning) {
        for (int y = 0; y < g.n; ++y) {
            bool lhs = subset_of(intersect(block_of(pphi, y), block_of(pbar_phi, y)),
                                 block_of(pbar_u, y));
            bool rhs = subset_of(block_of(pphi, y), block_of(pbar_u, y));
            if (lhs != rhs)
                return CheckResult::fail({{"clause", 3}, {"y", y}, {"lhs", lhs}, {"rhs", rhs}});
        }
    }
    return CheckResult::pass();
}

} // namespace stmt

CheckResult check_incidence(const EdgeRelation& r, const UspStatus& status) {
    require_certified(status);
    return stmt::incidence(r);
}

CheckResult check_degree_bijection(const EdgeRelation& r, const UspStatus& status) {
    require_certified(status);
    return stmt::degree_bijection(r);
}

CheckResult check_neighbor_counts(const EdgeRelation& r, const UspStatus& status) {
    require_certified(status);
    return stmt::neighbor_counts(r);
}

CheckResult check_nonempty_intersection(const EdgeRelation& r, const UspStatus& status) {
    if (r.num_classes != 2)
        fail(ErrorKind::NotTwoClasses, "statement needs exactly two classes");
    require_certified(status);
    return stmt::nonempty_intersection(r);
}

CheckResult check_monotonicity(const EdgeRelation& q, const EdgeRelation& r) {
    if (!is_finer(q, r))
        fail(ErrorKind::NotFiner, "first relation must be finer than the second");
    // the coarser relation induces the finer vertex partition
    VertexPartition from_coarser = common_refinement(r);
    VertexPartition from_finer = common_refinement(q);
    if (partition_refines(from_coarser, from_finer)) return CheckResult::pass();
    for (int x = 0; x < q.g().n; ++x)
        if (!subset_of(block_of(from_coarser, x), block_of(from_finer, x)))
            return CheckResult::fail({{"x", x},
                                      {"block_under_coarser", block_of(from_coarser, x)},
                                      {"block_under_finer", block_of(from_finer, x)}});
    return CheckResult::fail(nullptr);
}

CheckResult check_union_components(const EdgeRelation& r, const UspStatus& status, int phi,
                                   int psi) {
    require_certified(status);
    return stmt::union_components(r, phi, psi);
}

CheckResult check_intersection_criterion(const EdgeRelation& r, const UspStatus& status, int phi,
                                         int psi) {
    require_certified(status);
    return stmt::intersection_criterion(r, phi, psi);
}

CheckResult check_subset_props(const EdgeRelation& r, const UspStatus& status, int phi, int psi) {
    require_certified(status);
    return stmt::subset_props(r, phi, psi);
}

bool belongs_to_factor(const EdgeRelation& r, const UspStatus& status, const EdgeSubset& edges) {
    require_certified(status);
    const Graph& g = r.g();
    VertexPartition pa = connected_components(g, edges);
    VertexPartition pb = connected_components(g, complement_subset(edges));
    for (const auto& a : pa.blocks)
        for (const auto& b : pb.blocks)
            if (intersect(a, b).size() != 1) return false;
    return true;
}

CheckResult check_join_classes(const EdgeRelation& r, const UspStatus& status, int phi, int psi,
                               UspBudget budget) {
    require_certified(status);
    r.check_class(phi);
    r.check_class(psi);
    if (phi == psi) fail(ErrorKind::InvalidArgument, "need two distinct classes");

    EdgeRelation s = merge_classes(r, {phi, psi});
    // the certificate of r (or r itself when it satisfies S1) refines s
    UspStatus s_status = certify_usp(s, status.witness ? *status.witness : r, budget);
    if (!s_status.certified())
        return CheckResult::skipped("joined relation not certified within budget");

    bool equal = common_refinement(r) == common_refinement(s);
    bool bf_phi = belongs_to_factor(r, status, r.class_edges(phi));
    bool bf_psi = belongs_to_factor(r, status, r.class_edges(psi));

    // (1) a class belonging to a factor keeps the partition unchanged
    if ((bf_phi || bf_psi) && !equal)
        return CheckResult::fail(
            {{"clause", 1}, {"phi_factor", bf_phi}, {"psi_factor", bf_psi}});

    // (2) with a phi-component inside its complement component, equality of
    // the partitions is equivalent to containment in the joined complement
    const Graph& g = r.g();
    VertexPartition pphi = class_partition(r, phi);
    VertexPartition pbar_phi = complement_partition(r, phi);
    VertexPartition pbar_u = union_complement_partition(r, phi, psi);
    bool hyp = false;
    for (int x = 0; x < g.n && !hyp; ++x)
        hyp = subset_of(block_of(pphi, x), block_of(pbar_phi, x));
    if (hyp) {
        bool rhs = true;
        for (int y = 0; y < g.n && rhs; ++y)
            rhs = subset_of(block_of(pphi, y), block_of(pbar_u, y));
        if (equal != rhs)
            return CheckResult::fail({{"clause", 2}, {"partitions_equal", equal}, {"containment", rhs}});
    }

    // (3) under equal partitions the joined class is a factor iff both are
    if (equal) {
        EdgeSubset joined(r.class_of.size(), false);
        for (size_t e = 0; e < r.class_of.size(); ++e)
            joined[e] = (r.class_of[e] == phi || r.class_of[e] == psi);
        bool bf_joined = belongs_to_factor(r, status, joined);
        if (bf_joined != (bf_phi && bf_psi))
            return CheckResult::fail({{"clause", 3},
                                      {"joined_factor", bf_joined},
                                      {"phi_factor", bf_phi},
                                      {"psi_factor", bf_psi}});
    }
    return CheckResult::pass();
}

namespace {

struct Registry {
    Report& report;

    void add(const std::string& id, const std::string& title, CheckResult res,
             bool informational = false) {
        report.entries.push_back({id, title, res.verdict, informational, std::move(res.witness)});
    }

    void add_skipped(const std::string& id, const std::string& title, const std::string& why,
                     bool informational = false) {
        add(id, title, CheckResult::skipped(why), informational);
    }
};

// Aggregates one statement over class pairs: any failure wins, otherwise
// pass when at least one pair was evaluated.
template <typename F>
CheckResult over_pairs(const EdgeRelation& r, bool ordered, F&& f) {
    bool any = false;
    for (int i = 0; i < r.num_classes; ++i) {
        for (int j = ordered ? 0 : i + 1; j < r.num_classes; ++j) {
            if (i == j) continue;
            CheckResult res = f(i, j);
            if (res.verdict == Verdict::Fail) {
                nlohmann::json w{{"phi", i}, {"psi", j}};
                if (!res.witness.is_null()) w["witness"] = res.witness;
                return CheckResult::fail(w);
            }
            if (res.verdict == Verdict::Pass) any = true;
        }
    }
    return any ? CheckResult::pass() : CheckResult::skipped("no applicable class pair");
}

} // namespace

Report run_all(const EdgeRelation& r, const RunOptions& opts) {
    Report report;
    report.instance_name = opts.instance_name;
    report.seed = opts.seed;
    Registry reg{report};

    UspStatus status = certify_usp(r, opts.witness, opts.budget);
    {
        const char* s = status.kind == UspStatus::Kind::HasUsp        ? "has-usp"
                        : status.kind == UspStatus::Kind::UspByWitness ? "usp-by-witness"
                        : status.kind == UspStatus::Kind::NotUsp       ? "not-usp"
                                                                       : "unknown";
        CheckResult res;
        res.verdict = status.certified()                          ? Verdict::Pass
                      : status.kind == UspStatus::Kind::NotUsp    ? Verdict::Fail
                                                                  : Verdict::Skipped;
        res.witness = nlohmann::json{{"status", s}};
        reg.add("usp-certificate", "USP-relation certification", res, true);
    }
    {
        S1Result s1 = satisfies_s1(r);
        CheckResult res = s1.holds ? CheckResult::pass()
                                   : CheckResult::fail(
                                         {{"e", edge_json(r.g(), s1.violation->e)},
                                          {"f", edge_json(r.g(), s1.violation->f)},
                                          {"kind", s1.violation->kind ==
                                                           S1Violation::Kind::NoQualifyingSquare
                                                       ? "no-qualifying-square"
                                                       : "multiple-qualifying-squares"}});
        reg.add("square-s1", "unique square property (S1)", res, true);
    }
    {
        S2Result s2 = satisfies_s2(r);
        CheckResult res = s2.holds
                              ? CheckResult::pass()
                              : CheckResult::fail({{"square", to_string(*s2.witness)}});
        reg.add("square-s2", "same-class opposite edges in every square (S2)", res, true);
    }
    reg.add("square-property", "square property (S1 and S2)",
            has_square_property(r) ? CheckResult::pass() : CheckResult::fail(nullptr), true);

    static const std::pair<const char*, const char*> kGated[] = {
        {"incidence", "every vertex is incident to an edge of every class"},
        {"degree-bijection", "edge endpoints have equal degree into every other class"},
        {"neighbor-counts", "neighbor counts between components are constant"},
        {"nonempty-intersection", "components of the two classes pairwise intersect"},
        {"monotonicity", "joining classes only grows the refinement blocks"},
        {"union-components", "components of a joined class are unions over either class"},
        {"intersection-criterion", "joined-complement intersection criterion"},
        {"subset-propagation", "containment between class components propagates"},
        {"join-classes", "effect of joining two classes on the vertex partition"},
        {"equitable-refinement", "the common refinement is an equitable partition"},
        {"quotient-product", "the quotient is the product of the class quotients"},
        {"weighted-quotient-product", "the weighted quotient decomposes with summed loop weights"},
        {"loopless-quotient-product",
         "with induced complements the quotient is loop-free and decomposes"},
    };
    auto title_of = [&](const char* id) {
        for (const auto& [key, title] : kGated)
            if (std::string(key) == id) return title;
        return "";
    };

    if (!status.certified()) {
        for (const auto& [id, title] : kGated)
            reg.add_skipped(id, title, "relation not certified");
        return report;
    }

    reg.add("incidence", title_of("incidence"), check_incidence(r, status));
    reg.add("degree-bijection", title_of("degree-bijection"), check_degree_bijection(r, status));
    reg.add("neighbor-counts", title_of("neighbor-counts"), check_neighbor_counts(r, status));
    if (r.num_classes == 2)
        reg.add("nonempty-intersection", title_of("nonempty-intersection"),
                check_nonempty_intersection(r, status));
    else
        reg.add_skipped("nonempty-intersection", title_of("nonempty-intersection"),
                        "needs exactly two classes");

    reg.add("monotonicity", title_of("monotonicity"), over_pairs(r, false, [&](int i, int j) {
                return check_monotonicity(r, merge_classes(r, {i, j}));
            }));
    reg.add("union-components", title_of("union-components"),
            over_pairs(r, false, [&](int i, int j) {
                return check_union_components(r, status, i, j);
            }));
    reg.add("intersection-criterion", title_of("intersection-criterion"),
            over_pairs(r, true, [&](int i, int j) {
                return check_intersection_criterion(r, status, i, j);
            }));
    reg.add("subset-propagation", title_of("subset-propagation"),
            over_pairs(r, true, [&](int i, int j) {
                return check_subset_props(r, status, i, j);
            }));
    reg.add("join-classes", title_of("join-classes"), over_pairs(r, true, [&](int i, int j) {
                return check_join_classes(r, status, i, j, opts.budget);
            }));

    {
        EquitabilityResult eq = is_equitable(r.g(), common_refinement(r));
        CheckResult res = eq.equitable()
                              ? CheckResult::pass()
                              : CheckResult::fail({{"block_a", eq.violation->block_a},
                                                   {"block_b", eq.violation->block_b},
                                                   {"x", eq.violation->x},
                                                   {"x_prime", eq.violation->x_prime}});
        reg.add("equitable-refinement", title_of("equitable-refinement"), res);
    }
    {
        CheckResult res;
        try {
            verify_quotient_decomposition(r, status);
            res = CheckResult::pass();
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::IsomorphismFailure) throw;
            res = CheckResult::fail({{"error", err.what()}});
        }
        reg.add("quotient-product", title_of("quotient-product"), res);
    }
    reg.add("weighted-quotient-product", title_of("weighted-quotient-product"),
            verify_weighted_decomposition(r, status) ? CheckResult::pass()
                                                     : CheckResult::fail(nullptr));
    {
        CheckResult res;
        try {
            res = verify_loopless_decomposition(r, status)
                      ? CheckResult::pass()
                      : CheckResult::fail(nullptr);
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::PreconditionNotMet) throw;
            res = CheckResult::skipped("some complement has a non-induced component");
        }
        reg.add("loopless-quotient-product", title_of("loopless-quotient-product"), res);
    }
    return report;
}

int Report::failures() const {
    int n = 0;
    for (const auto& e : entries)
        if (!e.informational && e.verdict == Verdict::Fail) ++n;
    return n;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "instance: " << instance_name << " (seed " << seed << ")\n";
    for (const auto& e : entries) {
        const char* tag = e.verdict == Verdict::Pass      ? "[pass]"
                          : e.verdict == Verdict::Fail    ? "[FAIL]"
                                                          : "[skip]";
        os << tag << " " << e.id;
        if (e.informational) os << " (info)";
        if (!e.title.empty()) os << " — " << e.title;
        if (e.verdict != Verdict::Pass && !e.witness.is_null())
            os << ": " << e.witness.dump();
        os << "\n";
    }
    if (failures() == 0) {
        os << "all statements hold\n";
    } else {
        os << "FAILURES: " << failures()
           << " (a failing statement on a certified relation indicates an implementation bug)\n";
    }
    return os.str();
}

nlohmann::json Report::to_json() const {
    nlohmann::json out{{"instance", instance_name}, {"seed", seed}, {"failures", failures()}};
    out["statements"] = nlohmann::json::array();
    for (const auto& e : entries)
        out["statements"].push_back({{"id", e.id},
                                     {"title", e.title},
                                     {"verdict", verdict_name(e.verdict)},
                                     {"informational", e.informational},
                                     {"witness", e.witness}});
    return out;
}

GraphPtr InstanceGenerator::random_connected_graph(int min_n, int max_n) {
    std::uniform_int_distribution<int> nd(min_n, max_n);
    int n = nd(rng_);
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> ud(0, v - 1);
        int u = ud(rng_);
        es.emplace_back(u, v);
    }
    std::uniform_real_distribution<double> pd(0.1, 0.5);
    double p = pd(rng_);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (std::find(es.begin(), es.end(), Edge{u, v}) != es.end()) continue;
            if (coin(rng_) < p) es.emplace_back(u, v);
        }
    return std::make_shared<const Graph>(Graph::build(n, es));
}

EdgeRelation InstanceGenerator::next_certified() {
    std::uniform_int_distribution<int> mode(0, 2);
    switch (mode(rng_)) {
        case 0: {
            GraphPtr g = random_connected_graph(3, 10);
            return compute_delta(g);
        }
        case 1: {
            GraphPtr g = random_connected_graph(3, 10);
            EdgeRelation d = compute_delta(g);
            std::uniform_int_distribution<int> merges(0, 2);
            int rounds = merges(rng_);
            for (int i = 0; i < rounds && d.num_classes >= 2; ++i) {
                std::uniform_int_distribution<int> pick(0, d.num_classes - 1);
                int a = pick(rng_), b = pick(rng_);
                if (a != b) d = merge_classes(d, {a, b});
            }
            return d;
        }
        default: {
            static const std::vector<std::vector<int>> shapes{
                {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}, {2, 2, 2}};
            std::uniform_int_distribution<int> sd(0, static_cast<int>(shapes.size()) - 1);
            std::vector<Graph> factors;
            for (int n : shapes[sd(rng_)]) {
                GraphPtr f = random_connected_graph(n, n);
                factors.push_back(*f);
            }
            return product_relation_of(factors).relation;
        }
    }
}

EdgeRelation InstanceGenerator::next_random() {
    GraphPtr g = random_connected_graph(3, 8);
    int m = g->edge_count();
    std::uniform_int_distribution<int> kd(2, std::max(2, std::min(4, m)));
    int k = kd(rng_);
    std::vector<int> raw(m);
    std::uniform_int_distribution<int> cd(0, k - 1);
    for (int& c : raw) c = cd(rng_);
    return EdgeRelation::canonicalized(g, raw);
}

} // namespace usp
