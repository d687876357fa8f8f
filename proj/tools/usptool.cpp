#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "usp/error.hpp"
#include "usp/harness.hpp"
#include "usp/instance_io.hpp"
#include "usp/isomorphism.hpp"
#include "usp/product.hpp"
#include "usp/quotient.hpp"
#include "usp/vertex_partitions.hpp"

namespace {

usp::Instance load(const std::string& path) {
    std::ifstream in(path);
    if (!in) usp::fail(usp::ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return usp::parse_instance(buf.str());
}

usp::EdgeRelation relation_or_die(const usp::Instance& inst) {
    if (!inst.relation)
        usp::fail(usp::ErrorKind::ParseError, "instance has no edge-class labels");
    return *inst.relation;
}

std::string describe_partition(const usp::Instance& inst, const usp::VertexPartition& p) {
    std::string out = "{";
    for (int b = 0; b < p.block_count(); ++b) {
        if (b) out += ", ";
        out += inst.block_name(p.blocks[b]);
    }
    return out + "}";
}

// Small named shapes for factor output.
std::string pretty_graph_name(const usp::Graph& g) {
    const int n = g.n, m = g.edge_count();
    if (n == 1) return "K1";
    if (m == n * (n - 1) / 2) return "K" + std::to_string(n);
    bool cycle = (m == n) && n >= 3;
    bool path = (m == n - 1);
    for (int v = 0; v < n && (cycle || path); ++v) {
        if (cycle && g.degree(v) != 2) cycle = false;
        if (path && g.degree(v) > 2) path = false;
    }
    if (cycle) return "C" + std::to_string(n);
    if (path) return "P" + std::to_string(n);
    return "G(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) usp::fail(usp::ErrorKind::ParseError, "cannot write " + path);
    out << content;
}

int cmd_delta(const std::string& file) {
    usp::Instance inst = load(file);
    usp::DeltaPairs pairs = usp::delta_pairs(*inst.graph);
    usp::EdgeRelation delta = usp::compute_delta(inst.graph);
    std::cout << "delta pairs: " << pairs.all().size() << " (" << pairs.opposite_pairs.size()
              << " from squares, " << pairs.no_square_pairs.size() << " from square-free corners)\n";
    std::cout << "delta* classes: " << delta.num_classes << "\n";
    auto classes = delta.classes();
    for (int c = 0; c < delta.num_classes; ++c) {
        std::cout << "  class " << c << ":";
        for (int e : classes[c]) std::cout << " " << inst.edge_name(inst.graph->edges[e]);
        std::cout << "\n";
    }
    return 0;
}

int cmd_check(const std::string& file, const std::optional<std::string>& witness_file,
              std::uint64_t budget) {
    usp::Instance inst = load(file);
    usp::EdgeRelation r = relation_or_die(inst);
    std::optional<usp::EdgeRelation> witness = inst.witness;
    if (witness_file) {
        usp::Instance winst = load(*witness_file);
        if (!(*winst.graph == *inst.graph))
            usp::fail(usp::ErrorKind::GraphMismatch, "witness file describes a different graph");
        usp::EdgeRelation wrel = relation_or_die(winst);
        witness = usp::EdgeRelation::make(inst.graph, wrel.class_of, wrel.num_classes);
    }
    usp::UspStatus status = usp::certify_usp(r, witness, {budget});
    switch (status.kind) {
        case usp::UspStatus::Kind::HasUsp:
            std::cout << "USP: yes (relation itself satisfies the unique square property)\n";
            break;
        case usp::UspStatus::Kind::UspByWitness:
            std::cout << "USP: yes (a finer relation with " << status.witness->num_classes
                      << " classes satisfies the unique square property)\n";
            break;
        case usp::UspStatus::Kind::NotUsp:
            std::cout << "USP: no (refinement search exhausted)\n";
            break;
        case usp::UspStatus::Kind::Unknown:
            std::cout << "USP: unknown (search budget exhausted)\n";
            break;
    }
    usp::S1Result s1 = usp::satisfies_s1(r);
    std::cout << "unique square property (S1): " << (s1.holds ? "yes" : "no");
    if (!s1.holds) {
        std::cout << " (edges " << inst.edge_name(inst.graph->edges[s1.violation->e]) << ", "
                  << inst.edge_name(inst.graph->edges[s1.violation->f])
                  << (s1.violation->kind == usp::S1Violation::Kind::NoQualifyingSquare
                          ? " span no qualifying square)"
                          : " span several qualifying squares)");
    }
    std::cout << "\n";
    usp::S2Result s2 = usp::satisfies_s2(r);
    std::cout << "square property: " << (usp::has_square_property(r) ? "yes" : "no");
    if (!s2.holds) std::cout << " (witness square " << inst.square_name(*s2.witness) << ")";
    std::cout << "\n";
    return 0;
}

int cmd_partitions(const std::string& file) {
    usp::Instance inst = load(file);
    usp::EdgeRelation r = relation_or_die(inst);
    for (int c = 0; c < r.num_classes; ++c) {
        std::cout << "class " << inst.class_labels[c] << ":\n";
        std::cout << "  components:            "
                  << describe_partition(inst, usp::class_partition(r, c)) << "\n";
        std::cout << "  complement components: "
                  << describe_partition(inst, usp::complement_partition(r, c)) << "\n";
    }
    usp::VertexPartition common = usp::common_refinement(r);
    std::cout << "common refinement: " << describe_partition(inst, common) << "\n";
    usp::EquitabilityResult eq = usp::is_equitable(*inst.graph, common);
    if (eq.equitable()) {
        std::cout << "equitable: yes; degree matrix:\n";
        for (int a = 0; a < eq.matrix->k; ++a) {
            std::cout << " ";
            for (int b = 0; b < eq.matrix->k; ++b) std::cout << " " << eq.matrix->m[a][b];
            std::cout << "\n";
        }
    } else {
        std::cout << "equitable: no (blocks " << eq.violation->block_a << ","
                  << eq.violation->block_b << " vertices "
                  << inst.vertex_name(eq.violation->x) << ","
                  << inst.vertex_name(eq.violation->x_prime) << ")\n";
    }
    return 0;
}

int cmd_quotient(const std::string& file, bool weighted, const std::optional<std::string>& dot) {
    usp::Instance inst = load(file);
    usp::EdgeRelation r = relation_or_die(inst);
    usp::VertexPartition common = usp::common_refinement(r);
    if (weighted) {
        usp::WeightedDigraph w = usp::weighted_quotient(*inst.graph, common);
        std::cout << "weighted quotient on " << w.k << " blocks\n";
        for (int a = 0; a < w.k; ++a)
            for (int b = 0; b < w.k; ++b)
                if (w.weight[a][b] > 0)
                    std::cout << "  " << inst.block_name(w.blocks[a]) << " -> "
                              << inst.block_name(w.blocks[b]) << "  weight " << w.weight[a][b]
                              << "\n";
        if (dot) write_file(*dot, usp::export_dot(w, inst.name, inst.vertex_names));
    } else {
        usp::QuotientGraph q = usp::quotient_graph(*inst.graph, common);
        std::cout << "quotient on " << q.k << " blocks\n";
        for (auto [a, b] : q.edges)
            std::cout << "  " << inst.block_name(q.blocks[a])
                      << (a == b ? " (loop)" : " -- " + inst.block_name(q.blocks[b])) << "\n";
        if (dot) write_file(*dot, usp::export_dot(q, inst.name, inst.vertex_names));
    }
    return 0;
}

int cmd_decompose(const std::string& file, std::uint64_t budget) {
    usp::Instance inst = load(file);
    usp::EdgeRelation r = relation_or_die(inst);
    usp::UspStatus status = usp::certify_usp(r, std::nullopt, {budget});
    if (!status.certified()) {
        std::cout << "relation is not certified as a USP-relation; decomposition not applicable\n";
        return 1;
    }
    usp::ProductDecomposition dec = usp::verify_quotient_decomposition(r, status);
    std::cout << "quotient G/P^R has " << dec.quotient.k << " blocks and decomposes into "
              << dec.factors.size() << " class quotients:\n";
    for (size_t c = 0; c < dec.factors.size(); ++c) {
        const usp::QuotientGraph& f = dec.factors[c];
        int loops = static_cast<int>(f.edges.size()) - f.simple_edge_count();
        std::cout << "  class " << inst.class_labels[c] << ": " << f.k << " blocks, "
                  << f.simple_edge_count() << " edges, " << loops << " loops";
        usp::Graph simple = usp::underlying_simple(f);
        if (simple.connected && loops == 0) std::cout << "  (" << pretty_graph_name(simple) << ")";
        std::cout << "\n";
    }
    bool weighted_ok = usp::verify_weighted_decomposition(r, status);
    std::cout << "weighted decomposition: " << (weighted_ok ? "verified" : "FAILED") << "\n";
    try {
        bool loopless_ok = usp::verify_loopless_decomposition(r, status);
        std::cout << "loop-free decomposition: " << (loopless_ok ? "verified" : "FAILED") << "\n";
    } catch (const usp::Error& e) {
        if (e.kind() != usp::ErrorKind::PreconditionNotMet) throw;
        std::cout << "loop-free decomposition: skipped (" << e.what() << ")\n";
    }
    return weighted_ok ? 0 : 1;
}

int cmd_factor(const std::string& file, int bound) {
    usp::Instance inst = load(file);
    usp::FactorizationResult res = usp::prime_factorize_small(*inst.graph, bound);
    std::string line;
    for (size_t i = 0; i < res.factors.size(); ++i) {
        if (i) line += " \xE2\x96\xA1 ";  // box operator
        line += pretty_graph_name(res.factors[i]);
    }
    std::cout << line << "\n";
    if (res.factors.size() == 1) std::cout << "prime\n";
    return 0;
}

int cmd_verify(const std::string& file, std::uint64_t seed, std::uint64_t budget,
               const std::optional<std::string>& json_out) {
    usp::Instance inst = load(file);
    usp::EdgeRelation r = relation_or_die(inst);
    usp::RunOptions opts;
    opts.instance_name = inst.name;
    opts.seed = seed;
    opts.budget = {budget};
    opts.witness = inst.witness;
    usp::Report report = usp::run_all(r, opts);
    std::cout << report.to_text();
    if (json_out) {
        if (*json_out == "-") std::cout << report.to_json().dump(2) << "\n";
        else write_file(*json_out, report.to_json().dump(2) + "\n");
    }
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"square-property relations, equitable partitions and quotient products"};
    app.require_subcommand(1);

    std::string file;
    std::optional<std::string> witness_file, dot_file, json_out;
    std::uint64_t budget = usp::UspBudget{}.max_candidates;
    std::uint64_t seed = 0;
    int bound = 20;
    bool weighted = false;

    auto* delta = app.add_subcommand("delta", "delta pairs and closed classes");
    delta->add_option("file", file)->required();

    auto* check = app.add_subcommand("check", "USP certification and square-property verdicts");
    check->add_option("file", file)->required();
    check->add_option("--witness", witness_file, "instance file with a finer labeled relation");
    check->add_option("--budget", budget, "refinement-search budget");

    auto* partitions = app.add_subcommand("partitions", "induced vertex partitions");
    partitions->add_option("file", file)->required();

    auto* quotient = app.add_subcommand("quotient", "quotient by the common refinement");
    quotient->add_option("file", file)->required();
    quotient->add_flag("--weighted", weighted, "weighted directed quotient");
    quotient->add_option("--dot", dot_file, "write DOT output here");

    auto* decompose = app.add_subcommand("decompose", "verify the quotient product decomposition");
    decompose->add_option("file", file)->required();
    decompose->add_option("--budget", budget, "refinement-search budget");

    auto* factor = app.add_subcommand("factor", "prime factorization (desk scale)");
    factor->add_option("file", file)->required();
    factor->add_option("--bound", bound, "maximum number of delta* classes");

    auto* verify = app.add_subcommand("verify", "run every statement check");
    verify->add_option("file", file)->required();
    verify->add_option("--seed", seed, "seed recorded in the report");
    verify->add_option("--budget", budget, "refinement-search budget");
    verify->add_option("--json", json_out, "write the machine report here ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (delta->parsed()) return cmd_delta(file);
        if (check->parsed()) return cmd_check(file, witness_file, budget);
        if (partitions->parsed()) return cmd_partitions(file);
        if (quotient->parsed()) return cmd_quotient(file, weighted, dot_file);
        if (decompose->parsed()) return cmd_decompose(file, budget);
        if (factor->parsed()) return cmd_factor(file, bound);
        if (verify->parsed()) return cmd_verify(file, seed, budget, json_out);
    } catch (const usp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
