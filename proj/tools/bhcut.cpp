// bhcut: generate balanced hypercubes, build and verify structure-cut
// witnesses, and compute connectivity values by exhaustive search.
//
// Exit status: 0 success, 1 mismatch / not a cut / property failure,
// 2 usage error, 3 budget or cap exhausted.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bhcut/bhcut.hpp"

namespace {

using namespace bhcut;

enum Exit : int { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << text;
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Shape require_pattern(const std::string& name) {
    const auto s = parse_shape(name);
    if (!s || !is_pattern(*s)) throw ParseError("unknown pattern '" + name + "' (K1, K11, K12, K13, C4)");
    return *s;
}

SearchBudget budget_from(std::uint64_t flag) {
    SearchBudget b;
    if (flag) {
        b.families_per_level = flag;
    } else if (const char* env = std::getenv("BHCUT_BUDGET")) {
        b.families_per_level = std::stoull(env);
    }
    if (b.families_per_level == 0) throw ParseError("budget must be positive");
    return b;
}

struct GenOptions {
    int n = 2;
    int max_dim = kDefaultMaxDimension;
    std::string format = "json";
    std::string output;
};

int cmd_gen(const GenOptions& o) {
    const auto g = build(o.n, o.max_dim);
    const std::string text = o.format == "dot" ? graph_to_dot(g) : graph_to_json(g).dump(1) + "\n";
    write_output(o.output, text);
    (o.output.empty() ? std::cerr : std::cout)
        << "BH_" << o.n << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    return kOk;
}

struct CutOptions {
    int n = 2;
    std::string pattern = "K12";
    std::string base;
    std::string output;
};

int cmd_cut(const CutOptions& o) {
    const auto g = build(o.n);
    const auto pattern = require_pattern(o.pattern);
    const VertexId u = o.base.empty() ? 0 : g.id_of(parse_vertex(o.base));
    const auto f = cut_for(pattern, g, u);
    write_output(o.output, cut_to_json(g, f).dump(1) + "\n");
    (o.output.empty() ? std::cerr : std::cout)
        << to_string(pattern) << "-structure-cut at (" << g.vertex(u).to_string() << "): |F|=" << f.elements.size()
        << " |V(F)|=" << f.removed.size() << "\n";
    return kOk;
}

struct VerifyOptions {
    std::string graph;
    std::string witness;
};

int cmd_verify(const VerifyOptions& o) {
    const auto g = graph_from_json(read_json(o.graph));
    const auto f = cut_from_json(g, read_json(o.witness));
    const auto v = verify(g, f);
    for (const auto& s : v.violations) {
        std::cerr << "shape violation: element " << s.index << ": " << s.reason << "\n";
    }
    std::cout << verdict_to_json(v).dump(1) << "\n";
    return v.ok() ? kOk : kMismatch;
}

struct KappaOptions {
    int n = 2;
    std::string pattern;
    bool all = false;
    std::string mode = "structure";
    bool include_p4 = false;
    std::uint64_t budget = 0;
    std::string json_out;
};

// Closed-form values: 2n for K1 and K11, n for K12, K13 and C4 (n >= 2).
std::optional<int> formula_value(Shape h, int n) {
    if (h == Shape::K1) return 2 * n;
    if (n < 2) return std::nullopt;
    if (h == Shape::K11) return 2 * n;
    return n;
}

int cmd_kappa(const KappaOptions& o) {
    const auto g = build(o.n);
    const auto budget = budget_from(o.budget);
    std::vector<Shape> patterns;
    if (o.all) {
        patterns.assign(std::begin(kPatterns), std::end(kPatterns));
    } else if (!o.pattern.empty()) {
        patterns.push_back(require_pattern(o.pattern));
    } else {
        throw ParseError("give -H <pattern> or --all");
    }
    std::vector<Mode> modes;
    if (o.mode == "both") {
        modes = {Mode::Structure, Mode::Substructure};
    } else if (auto m = parse_mode(o.mode)) {
        modes = {*m};
    } else {
        throw ParseError("mode must be structure, substructure or both");
    }

    int status = kOk;
    json rows = json::array();
    std::cout << std::left << std::setw(4) << "n" << std::setw(8) << "H" << std::setw(14) << "mode" << std::setw(8)
              << "value" << std::setw(9) << "formula" << "match\n";
    auto run_row = [&](Shape h, Mode mode, bool p4) {
        std::string label = to_string(h);
        if (p4) label += "+P4";
        std::cout << std::left << std::setw(4) << o.n << std::setw(8) << label << std::setw(14) << to_string(mode);
        const auto expected = p4 ? std::nullopt : formula_value(h, o.n);
        json row{{"n", o.n}, {"H", label}, {"mode", to_string(mode)},
                 {"formula_value", expected ? json(*expected) : json(nullptr)}};
        try {
            const auto r = structure_connectivity(g, h, mode, {.include_p4 = p4}, budget);
            const bool match = expected && r.value == expected;
            std::cout << std::setw(8) << (r.value ? std::to_string(*r.value) : "none") << std::setw(9)
                      << (expected ? std::to_string(*expected) : "-") << (expected ? (match ? "yes" : "NO") : "n/a")
                      << "\n";
            if (expected && !match) status = kMismatch;
            row["value"] = r.value ? json(*r.value) : json(nullptr);
            row["match"] = expected ? json(match) : json(nullptr);
            row["report"] = report_to_json(g, r);
        } catch (const BudgetExhaustedError& e) {
            std::cout << std::setw(8) << ("> " + std::to_string(e.last_level_cleared())) << std::setw(9)
                      << (expected ? std::to_string(*expected) : "-") << "budget exhausted\n";
            if (status == kOk) status = kBudget;
            row["value"] = nullptr;
            row["error"] = e.what();
        }
        rows.push_back(row);
    };
    for (Shape h : patterns) {
        for (Mode mode : modes) {
            run_row(h, mode, false);
            if (h == Shape::C4 && mode == Mode::Substructure && o.include_p4) run_row(h, mode, true);
        }
    }
    if (!o.json_out.empty()) write_output(o.json_out, rows.dump(1) + "\n");
    return status;
}

struct PropsOptions {
    std::vector<int> dims;
    bool negative_controls = false;
    std::string output;
};

int cmd_props(const PropsOptions& o) {
    const std::vector<int> dims = o.dims.empty() ? std::vector<int>{1, 2, 3} : o.dims;
    json report = json::array();
    bool good = true;
    for (int n : dims) {
        if (o.negative_controls) {
            for (const auto& c : negative_controls(n)) {
                auto j = property_to_json(c.result);
                j["control"] = c.name;
                j["confirmed"] = c.confirmed;
                report.push_back(j);
                const bool failed_as_designed = !c.result.holds && c.confirmed;
                good &= failed_as_designed;
                std::cerr << (failed_as_designed ? "fails as designed  " : "CONTROL DID NOT FAIL  ") << c.name
                          << " n=" << n << "\n";
            }
        } else {
            for (const auto& r : run_suite(build(n))) {
                report.push_back(property_to_json(r));
                good &= r.holds;
                std::cerr << (r.holds ? "holds  " : "FAILS  ") << r.name << " n=" << n << "  " << r.detail << "\n";
            }
        }
    }
    write_output(o.output, report.dump(1) + "\n");
    return good ? kOk : kMismatch;
}

struct ExportOptions {
    std::string graph;
    int n = 0;
    std::string format = "dot";
    int subcube = -1;
    std::string output;
};

int cmd_export(const ExportOptions& o) {
    if (o.graph.empty() == (o.n == 0)) throw ParseError("give exactly one of --graph or -n");
    const auto g = o.graph.empty() ? build(o.n) : graph_from_json(read_json(o.graph));
    std::vector<VertexId> only;
    if (o.subcube >= 0) only = g.subcube(o.subcube).vertices;
    if (o.format == "dot") {
        write_output(o.output, graph_to_dot(g, only));
    } else if (o.subcube >= 0) {
        const auto s = g.subcube(o.subcube);
        json edges = json::array();
        for (const auto& e : s.edges) edges.push_back({e.u, e.v, e.dimension});
        json vertices = json::array();
        for (VertexId v : s.vertices) vertices.push_back(g.vertex(v).coords);
        write_output(o.output, json{{"n", g.n()}, {"subcube", o.subcube}, {"vertices", vertices}, {"edges", edges}}
                                       .dump(1) + "\n");
    } else {
        write_output(o.output, graph_to_json(g).dump(1) + "\n");
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Balanced hypercube structure-connectivity toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "write BH_n as JSON or DOT");
    gen_cmd->add_option("-n", gen.n, "dimension")->required();
    gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"json", "dot"}));
    gen_cmd->add_option("-o,--output", gen.output, "output file (default stdout)");
    gen_cmd->add_option("--max-dim", gen.max_dim, "dimension cap")->check(CLI::PositiveNumber);

    CutOptions cut;
    auto* cut_cmd = app.add_subcommand("cut", "emit the explicit H-structure-cut around a vertex");
    cut_cmd->add_option("-n", cut.n, "dimension")->required();
    cut_cmd->add_option("-H,--pattern", cut.pattern, "K1, K11, K12, K13 or C4")->required();
    cut_cmd->add_option("-u,--vertex", cut.base, "base vertex a0,a1,... (default all zeros)");
    cut_cmd->add_option("-o,--output", cut.output, "witness file (default stdout)");

    VerifyOptions ver;
    auto* verify_cmd = app.add_subcommand("verify", "check a witness family against a graph file");
    verify_cmd->add_option("graph", ver.graph, "graph JSON")->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("witness", ver.witness, "witness JSON")->required()->check(CLI::ExistingFile);

    KappaOptions kap;
    auto* kappa_cmd = app.add_subcommand("kappa", "exact structure / substructure connectivity by search");
    kappa_cmd->add_option("-n", kap.n, "dimension")->required();
    kappa_cmd->add_option("-H,--pattern", kap.pattern, "pattern");
    kappa_cmd->add_flag("--all", kap.all, "all five patterns");
    kappa_cmd->add_option("--mode", kap.mode, "structure, substructure or both");
    kappa_cmd->add_flag("--include-p4", kap.include_p4, "also run C4 substructure with P4 elements");
    kappa_cmd->add_option("--budget", kap.budget, "families per deepening level (env BHCUT_BUDGET)");
    kappa_cmd->add_option("--json", kap.json_out, "write rows as JSON");

    PropsOptions props;
    auto* props_cmd = app.add_subcommand("props", "run the structural property suite");
    props_cmd->add_option("-n", props.dims, "dimension(s); default 1 2 3");
    props_cmd->add_flag("--negative-controls", props.negative_controls, "run the deliberately broken graphs");
    props_cmd->add_option("-o,--output", props.output, "report file (default stdout)");

    ExportOptions exp;
    auto* export_cmd = app.add_subcommand("export", "convert a graph (or one subcube of it) to DOT or JSON");
    export_cmd->add_option("--graph", exp.graph, "graph JSON")->check(CLI::ExistingFile);
    export_cmd->add_option("-n", exp.n, "build BH_n instead of reading a file");
    export_cmd->add_option("--format", exp.format)->check(CLI::IsMember({"json", "dot"}));
    export_cmd->add_option("--subcube", exp.subcube, "restrict to BH_{n-1}^k")->check(CLI::Range(0, 3));
    export_cmd->add_option("-o,--output", exp.output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen);
        if (*cut_cmd) return cmd_cut(cut);
        if (*verify_cmd) return cmd_verify(ver);
        if (*kappa_cmd) return cmd_kappa(kap);
        if (*props_cmd) return cmd_props(props);
        if (*export_cmd) return cmd_export(exp);
    } catch (const BudgetExhaustedError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kBudget;
    } catch (const CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
