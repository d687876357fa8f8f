#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "usp/edge_relation.hpp"
#include "usp/graph.hpp"
#include "usp/partition.hpp"
#include "usp/quotient.hpp"

namespace usp {

/// A parsed instance: graph plus optional labeled relation and witness
/// relation, with the external vertex names kept for output.
struct Instance {
    std::string name = "instance";
    GraphPtr graph;
    std::optional<EdgeRelation> relation;
    std::optional<EdgeRelation> witness;
    std::vector<std::string> vertex_names;           // id -> name
    std::vector<std::string> class_labels;           // class id -> label
    std::vector<std::string> witness_class_labels;

    int vertex_id(const std::string& name) const;
    std::string vertex_name(int v) const { return vertex_names[v]; }
    std::string edge_name(const Edge& e) const;
    std::string square_name(const Square& s) const;
    std::string block_name(const std::vector<int>& block) const;
};

/// Line format: `graph NAME`, `vertices NAME...`, `edge U V [CLASS]`,
/// `witness U V CLASS`; '#' starts a comment. Class labels, when present,
/// must cover every edge; ids follow first occurrence in the document.
Instance parse_instance(const std::string& text);

std::string format_instance(const Instance& inst);

/// DOT rendering; classes map to edge styles (eight without an explicit
/// style list), partition blocks to clusters.
std::string export_dot(const Instance& inst, const std::optional<VertexPartition>& p = std::nullopt,
                       const std::vector<std::string>& styles = {});

std::string export_dot(const QuotientGraph& q, const std::string& name = "quotient",
                       const std::vector<std::string>& vertex_names = {});
std::string export_dot(const WeightedDigraph& w, const std::string& name = "quotient",
                       const std::vector<std::string>& vertex_names = {});

} // namespace usp
