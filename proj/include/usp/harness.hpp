#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "usp/edge_relation.hpp"

namespace usp {

enum class Verdict { Pass, Fail, Skipped };

const char* verdict_name(Verdict v);

struct CheckResult {
    Verdict verdict = Verdict::Skipped;
    nlohmann::json witness;  // concrete vertices/edges/classes on failure

    static CheckResult pass() { return {Verdict::Pass, nullptr}; }
    static CheckResult fail(nlohmann::json w) { return {Verdict::Fail, std::move(w)}; }
    static CheckResult skipped(std::string reason) {
        return {Verdict::Skipped, nlohmann::json{{"reason", std::move(reason)}}};
    }
};

/// Statement evaluations, usable on any relation. The check_* wrappers below
/// add the certification gate that matches each statement's hypothesis.
namespace stmt {

CheckResult incidence(const EdgeRelation& r);
CheckResult degree_bijection(const EdgeRelation& r);
CheckResult neighbor_counts(const EdgeRelation& r);
CheckResult nonempty_intersection(const EdgeRelation& r);  // needs exactly two classes
CheckResult union_components(const EdgeRelation& r, int phi, int psi);
CheckResult intersection_criterion(const EdgeRelation& r, int phi, int psi);
CheckResult subset_props(const EdgeRelation& r, int phi, int psi);

} // namespace stmt

CheckResult check_incidence(const EdgeRelation& r, const UspStatus& status);
CheckResult check_degree_bijection(const EdgeRelation& r, const UspStatus& status);
CheckResult check_neighbor_counts(const EdgeRelation& r, const UspStatus& status);
CheckResult check_nonempty_intersection(const EdgeRelation& r, const UspStatus& status);
/// q must be finer than r; asserts that the coarser relation's refinement
/// blocks sit inside the finer relation's blocks.
CheckResult check_monotonicity(const EdgeRelation& q, const EdgeRelation& r);
CheckResult check_union_components(const EdgeRelation& r, const UspStatus& status, int phi,
                                   int psi);
CheckResult check_intersection_criterion(const EdgeRelation& r, const UspStatus& status, int phi,
                                         int psi);
CheckResult check_subset_props(const EdgeRelation& r, const UspStatus& status, int phi, int psi);
/// Behaviour of the vertex partition when two classes are joined; skipped
/// when the joined relation cannot be certified within budget.
CheckResult check_join_classes(const EdgeRelation& r, const UspStatus& status, int phi, int psi,
                               UspBudget budget = {});

/// True iff the two-class relation {edges, complement} meets the product
/// criterion, i.e. the edge set belongs to a factor of g.
bool belongs_to_factor(const EdgeRelation& r, const UspStatus& status, const EdgeSubset& edges);

struct ReportEntry {
    std::string id;
    std::string title;
    Verdict verdict = Verdict::Skipped;
    bool informational = false;  // descriptive status, not a proved statement
    nlohmann::json witness;
};

struct Report {
    std::string instance_name;
    std::uint64_t seed = 0;
    std::vector<ReportEntry> entries;

    int failures() const;  // non-informational failures
    bool all_pass() const { return failures() == 0; }
    std::string to_text() const;
    nlohmann::json to_json() const;
};

struct RunOptions {
    std::string instance_name = "instance";
    std::uint64_t seed = 0;
    UspBudget budget = {};
    std::optional<EdgeRelation> witness;  // finer relation offered to certification
};

/// Runs every registered statement with its preconditions on one instance.
Report run_all(const EdgeRelation& r, const RunOptions& opts = {});

/// Deterministic source of desk-scale instances: certified ones (closed
/// delta relations, their coarsenings, product relations) and uniformly
/// random relations on random connected graphs.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed) : rng_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    GraphPtr random_connected_graph(int min_n = 2, int max_n = 10);
    EdgeRelation next_certified();  // certifies under the default budget
    EdgeRelation next_random();     // arbitrary relation, any certification status

private:
    std::mt19937_64 rng_;
    std::uint64_t seed_;
};

} // namespace usp
