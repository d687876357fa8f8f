#include "usp/instance_io.hpp"

#include <algorithm>
#include <sstream>

#include "usp/error.hpp"

namespace usp {

int Instance::vertex_id(const std::string& name) const {
    auto it = std::find(vertex_names.begin(), vertex_names.end(), name);
    return it == vertex_names.end() ? -1 : static_cast<int>(it - vertex_names.begin());
}

std::string Instance::edge_name(const Edge& e) const {
    return "[" + vertex_names[e.first] + "," + vertex_names[e.second] + "]";
}

std::string Instance::square_name(const Square& s) const {
    return "(" + vertex_names[s.v[0]] + "," + vertex_names[s.v[1]] + "," + vertex_names[s.v[2]] +
           "," + vertex_names[s.v[3]] + ")";
}

std::string Instance::block_name(const std::vector<int>& block) const {
    std::string out = "{";
    for (size_t i = 0; i < block.size(); ++i) {
        if (i) out += ",";
        out += vertex_names[block[i]];
    }
    return out + "}";
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& message) {
    fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message);
}

} // namespace

Instance parse_instance(const std::string& text) {
    Instance inst;
    std::unordered_map<std::string, int> vertex_ids;
    std::vector<std::tuple<std::string, std::string, std::string, int>> edge_records;
    std::vector<std::tuple<std::string, std::string, std::string, int>> witness_records;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;
        if (keyword == "graph") {
            if (!(ls >> inst.name)) parse_fail(lineno, "graph needs a name");
        } else if (keyword == "vertices") {
            std::string name;
            while (ls >> name) {
                if (vertex_ids.count(name)) parse_fail(lineno, "duplicate vertex name " + name);
                vertex_ids.emplace(name, static_cast<int>(inst.vertex_names.size()));
                inst.vertex_names.push_back(name);
            }
        } else if (keyword == "edge" || keyword == "witness") {
            std::string u, v, label;
            if (!(ls >> u >> v)) parse_fail(lineno, keyword + " needs two vertex names");
            ls >> label;  // optional for edge, required for witness
            if (keyword == "witness" && label.empty())
                parse_fail(lineno, "witness needs a class label");
            std::string extra;
            if (ls >> extra) parse_fail(lineno, "unexpected token " + extra);
            (keyword == "edge" ? edge_records : witness_records)
                .emplace_back(u, v, label, lineno);
        } else {
            parse_fail(lineno, "unknown keyword " + keyword);
        }
    }
    if (inst.vertex_names.empty()) fail(ErrorKind::ParseError, "no vertices declared");

    auto lookup = [&](const std::string& name, int lineno_) {
        auto it = vertex_ids.find(name);
        if (it == vertex_ids.end()) parse_fail(lineno_, "unknown vertex " + name);
        return it->second;
    };

    std::vector<Edge> edges;
    for (const auto& [u, v, label, ln] : edge_records) {
        int a = lookup(u, ln), b = lookup(v, ln);
        if (a == b) parse_fail(ln, "loop at " + u);
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    auto graph = std::make_shared<const Graph>(
        Graph::build(static_cast<int>(inst.vertex_names.size()), edges));
    inst.graph = graph;

    // labels aligned with the graph's sorted edge order
    std::vector<std::optional<std::string>> labels(graph->edges.size());
    std::vector<std::optional<std::string>> wlabels(graph->edges.size());
    for (const auto& [u, v, label, ln] : edge_records) {
        if (label.empty()) continue;
        int e = graph->edge_id(lookup(u, ln), lookup(v, ln));
        labels[e] = label;
    }
    // class ids by first occurrence in the document
    {
        std::unordered_map<std::string, int> first_seen;
        int next = 0;
        for (const auto& [u, v, label, ln] : edge_records)
            if (!label.empty() && !first_seen.count(label)) first_seen.emplace(label, next++);
        if (next > 0) {
            int labeled = 0;
            for (const auto& l : labels)
                if (l) ++labeled;
            if (labeled != static_cast<int>(labels.size()))
                fail(ErrorKind::ParseError, "edge labels must cover every edge or none");
            std::vector<int> cls(labels.size());
            inst.class_labels.assign(next, "");
            for (size_t e = 0; e < labels.size(); ++e) {
                cls[e] = first_seen.at(*labels[e]);
                inst.class_labels[cls[e]] = *labels[e];
            }
            inst.relation = EdgeRelation::make(graph, cls, next);
        }
    }
    for (const auto& [u, v, label, ln] : witness_records) {
        int a = lookup(u, ln), b = lookup(v, ln);
        int e = graph->edge_id(a, b);
        if (e < 0) parse_fail(ln, "witness names a non-edge " + u + "-" + v);
        wlabels[e] = label;
    }
    if (!witness_records.empty()) {
        std::unordered_map<std::string, int> first_seen;
        int next = 0;
        for (const auto& [u, v, label, ln] : witness_records)
            if (!first_seen.count(label)) first_seen.emplace(label, next++);
        int labeled = 0;
        for (const auto& l : wlabels)
            if (l) ++labeled;
        if (labeled != static_cast<int>(wlabels.size()))
            fail(ErrorKind::ParseError, "witness labels must cover every edge");
        std::vector<int> cls(wlabels.size());
        inst.witness_class_labels.assign(next, "");
        for (size_t e = 0; e < wlabels.size(); ++e) {
            cls[e] = first_seen.at(*wlabels[e]);
            inst.witness_class_labels[cls[e]] = *wlabels[e];
        }
        inst.witness = EdgeRelation::make(graph, cls, next);
    }
    return inst;
}

std::string format_instance(const Instance& inst) {
    std::ostringstream os;
    os << "graph " << inst.name << "\n";
    os << "vertices";
    for (const auto& name : inst.vertex_names) os << " " << name;
    os << "\n";
    const Graph& g = *inst.graph;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        os << "edge " << inst.vertex_names[g.edges[e].first] << " "
           << inst.vertex_names[g.edges[e].second];
        if (inst.relation) os << " " << inst.class_labels[inst.relation->class_of[e]];
        os << "\n";
    }
    if (inst.witness)
        for (size_t e = 0; e < g.edges.size(); ++e)
            os << "witness " << inst.vertex_names[g.edges[e].first] << " "
               << inst.vertex_names[g.edges[e].second] << " "
               << inst.witness_class_labels[inst.witness->class_of[e]] << "\n";
    return os.str();
}

namespace {

const std::vector<std::string>& default_styles() {
    static const std::vector<std::string> styles{
        "style=solid",
        "style=dashed",
        "style=dotted",
        "style=bold",
        "style=solid, color=red",
        "style=dashed, color=blue",
        "style=dotted, color=forestgreen",
        "style=bold, color=orange",
    };
    return styles;
}

} // namespace

std::string export_dot(const Instance& inst, const std::optional<VertexPartition>& p,
                       const std::vector<std::string>& styles) {
    const Graph& g = *inst.graph;
    const std::vector<std::string>& palette = styles.empty() ? default_styles() : styles;
    if (inst.relation && inst.relation->num_classes > static_cast<int>(palette.size()))
        fail(ErrorKind::TooManyClasses,
             std::to_string(inst.relation->num_classes) + " classes but only " +
                 std::to_string(palette.size()) + " styles");
    std::ostringstream os;
    os << "graph " << inst.name << " {\n";
    os << "  node [shape=circle];\n";
    if (p) {
        if (p->n != g.n) fail(ErrorKind::PartitionMismatch, "partition does not fit the graph");
        for (int b = 0; b < p->block_count(); ++b) {
            os << "  subgraph cluster_" << b << " {\n";
            for (int v : p->blocks[b]) os << "    \"" << inst.vertex_names[v] << "\";\n";
            os << "  }\n";
        }
    } else {
        for (int v = 0; v < g.n; ++v) os << "  \"" << inst.vertex_names[v] << "\";\n";
    }
    for (size_t e = 0; e < g.edges.size(); ++e) {
        os << "  \"" << inst.vertex_names[g.edges[e].first] << "\" -- \""
           << inst.vertex_names[g.edges[e].second] << "\"";
        if (inst.relation)
            os << " [" << palette[inst.relation->class_of[e]] << ", label=\""
               << inst.class_labels[inst.relation->class_of[e]] << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

namespace {

std::string quotient_vertex_label(const std::vector<std::vector<int>>& blocks, int a,
                                  const std::vector<std::string>& names) {
    if (blocks.empty()) return "B" + std::to_string(a);
    std::string out = "{";
    for (size_t i = 0; i < blocks[a].size(); ++i) {
        if (i) out += ",";
        int v = blocks[a][i];
        out += names.empty() ? std::to_string(v) : names[v];
    }
    return out + "}";
}

} // namespace

std::string export_dot(const QuotientGraph& q, const std::string& name,
                       const std::vector<std::string>& vertex_names) {
    std::ostringstream os;
    os << "graph " << name << " {\n  node [shape=box];\n";
    for (int a = 0; a < q.k; ++a)
        os << "  v" << a << " [label=\"" << quotient_vertex_label(q.blocks, a, vertex_names)
           << "\"];\n";
    for (auto [a, b] : q.edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string export_dot(const WeightedDigraph& w, const std::string& name,
                       const std::vector<std::string>& vertex_names) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  node [shape=box];\n";
    for (int a = 0; a < w.k; ++a)
        os << "  v" << a << " [label=\"" << quotient_vertex_label(w.blocks, a, vertex_names)
           << "\"];\n";
    for (int a = 0; a < w.k; ++a)
        for (int b = 0; b < w.k; ++b)
            if (w.weight[a][b] > 0)
                os << "  v" << a << " -> v" << b << " [label=\"" << w.weight[a][b] << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace usp
