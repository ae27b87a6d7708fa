// Command-line front end: chordality certificates, scenario classification
// and enumeration, marginal extension, polytope membership, and quantum
// realizations. JSON on stdout, diagnostics on stderr.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ctxgraph/json_io.hpp"

using nlohmann::json;

namespace {

// Exit-code contract.
constexpr int kExitParseError = 2;
constexpr int kExitNonchordal = 10;
constexpr int kExitChordalNoContextuality = 11;
constexpr int kExitExtendNonchordal = 12;
constexpr int kExitInconsistent = 13;
constexpr int kExitContextual = 20;
constexpr int kExitSearchBudget = 30;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
    }
}

struct Options {
    double tol = 1e-8;
    uint64_t seed = 1;
    std::string filter_mode = "induced";
    std::string out_path;
    bool report = false;
};

ctx::FilterMode parse_mode(const std::string& s) {
    if (s == "any") return ctx::FilterMode::AnyCycle;
    if (s == "induced") return ctx::FilterMode::InducedCycle;
    throw CLI::ValidationError("--filter-mode must be 'any' or 'induced'");
}

int cmd_check_chordal(const std::string& path, const Options& opt) {
    ctx::Graph g = ctx::io::parse_graph(slurp(path));
    auto cert = ctx::is_chordal(g);
    emit(ctx::io::certificate_to_json(cert), opt.out_path);
    if (opt.report)
        std::cerr << "graph with " << g.size() << " vertices is "
                  << (cert.chordal() ? "chordal" : "nonchordal") << "\n";
    return cert.chordal() ? 0 : kExitNonchordal;
}

int cmd_classify(const std::string& path, const Options& opt) {
    ctx::Graph g = ctx::io::parse_graph(slurp(path));
    try {
        auto sc = ctx::classify(g);
        emit(ctx::io::scenario_class_to_json(sc), opt.out_path);
        if (opt.report) std::cerr << "class " << ctx::to_string(sc.label) << "\n";
        return 0;
    } catch (const ctx::NoContextualityPossible&) {
        std::cerr << "no contextuality possible\n";
        return kExitChordalNoContextuality;
    }
}

int cmd_enumerate(int max_n, const Options& opt, const std::string& csv_path) {
    auto records = ctx::enumerate_scenarios(max_n, parse_mode(opt.filter_mode));
    json arr = json::array();
    std::map<std::string, int> counts;
    for (const auto& rec : records) {
        arr.push_back(ctx::io::record_to_json(rec));
        ++counts[ctx::to_string(rec.scenario.label)];
    }
    json out{{"records", arr}, {"counts", counts}};
    emit(out, opt.out_path);
    if (opt.report) {
        std::cerr << records.size() << " scenario classes up to " << max_n << " vertices:";
        for (auto& [k, v] : counts) std::cerr << " " << k << "=" << v;
        std::cerr << "\n";
    }
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        csv << "index,n,edges,class,cycle_length\n";
        for (size_t i = 0; i < records.size(); ++i)
            csv << i << "," << records[i].graph.size() << "," << records[i].graph.edge_count()
                << "," << ctx::to_string(records[i].scenario.label) << ","
                << records[i].certificate.induced_cycle.size() << "\n";
    }
    return 0;
}

int cmd_extend(const std::string& path, const Options& opt) {
    auto m = ctx::io::marginals_from_json(json::parse(slurp(path)));
    try {
        auto joint = ctx::vorobyev_extend(m, opt.tol);
        emit(ctx::io::joint_to_json(m.outcomes, joint), opt.out_path);
        return 0;
    } catch (const ctx::NotChordalError&) {
        std::cerr << "graph is not chordal; no guaranteed extension\n";
        return kExitExtendNonchordal;
    } catch (const ctx::InconsistentMarginalsError& e) {
        std::cerr << e.what() << "\n";
        return kExitInconsistent;
    }
}

int cmd_membership(const std::string& path, const Options& opt) {
    auto b = ctx::io::marginals_from_json(json::parse(slurp(path)));
    try {
        auto result = ctx::membership(b, opt.tol);
        emit(ctx::io::membership_to_json(result, b), opt.out_path);
        bool contextual = result.verdict == ctx::Verdict::Contextual;
        if (opt.report) {
            std::cerr << (contextual ? "contextual" : "noncontextual")
                      << " (L1 deviation " << result.deviation << ")";
            if (contextual)
                std::cerr << ", witness value " << result.witness->value << " vs bound "
                          << result.witness->classical_bound;
            std::cerr << "\n";
        }
        return contextual ? kExitContextual : 0;
    } catch (const ctx::InconsistentBehaviorError& e) {
        std::cerr << e.what() << "\n";
        return kExitInconsistent;
    }
}

int cmd_realize(const std::string& path, const Options& opt) {
    ctx::Graph g = ctx::io::parse_graph(slurp(path));
    try {
        auto r = ctx::realize_nonchordal(g, opt.seed);
        emit(ctx::io::realization_to_json(r), opt.out_path);
        if (opt.report)
            std::cerr << "embedded C_" << r.cycle.size() << ", cycle witness "
                      << r.cycle_witness_result.value << " vs bound "
                      << r.cycle_witness_result.classical_bound << "\n";
        return 0;
    } catch (const ctx::NoContextualityPossible&) {
        std::cerr << "no contextuality possible\n";
        return kExitChordalNoContextuality;
    } catch (const ctx::SearchBudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitSearchBudget;
    }
}

int cmd_maxquantum(const std::string& graph_path, const std::string& witness_path, int dim,
                   int restarts, int iterations, const Options& opt) {
    ctx::Graph g = ctx::io::parse_graph(slurp(graph_path));
    auto outcomes = ctx::OutcomeSpace::binary(g.size());
    std::vector<double> coeffs;
    if (witness_path.empty()) {
        coeffs = ctx::cycle_witness(g.size());  // only meaningful for cycles
    } else {
        coeffs = ctx::io::witness_coeffs_from_json(json::parse(slurp(witness_path)), g, outcomes);
    }
    ctx::SeesawOptions so;
    so.dim = dim;
    so.restarts = restarts;
    so.iterations = iterations;
    so.seed = opt.seed;
    auto result = ctx::seesaw_max(coeffs, g, so);
    emit(json{{"value", result.value}, {"budget_exhausted", result.budget_exhausted}},
         opt.out_path);
    if (opt.report) std::cerr << "see-saw value " << result.value << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"contextuality toolkit for compatibility graphs"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--tol", opt.tol, "numerical tolerance");
    app.add_option("--seed", opt.seed, "seed for search-based paths");
    app.add_option("--filter-mode", opt.filter_mode, "relevance filter: any | induced");
    app.add_option("--out", opt.out_path, "write JSON to file instead of stdout");
    app.add_flag("--report", opt.report, "human-readable summary on stderr");

    std::string graph_path, marginals_path, behavior_path, witness_path, csv_path;
    int max_n = 6, dim = 4, restarts = 20, iterations = 400;

    auto* check = app.add_subcommand("check-chordal", "chordality certificate");
    check->add_option("graph", graph_path)->required();

    auto* classify = app.add_subcommand("classify", "scenario class a/b/c");
    classify->add_option("graph", graph_path)->required();

    auto* enumerate = app.add_subcommand("enumerate", "atlas of contextuality scenarios");
    enumerate->add_option("--max-n", max_n, "largest vertex count (<= 7)");
    enumerate->add_option("--csv", csv_path, "also write a per-record CSV");

    auto* extend = app.add_subcommand("extend", "global joint extension (chordal graphs)");
    extend->add_option("marginals", marginals_path)->required();

    auto* member = app.add_subcommand("membership", "noncontextual polytope membership");
    member->add_option("behavior", behavior_path)->required();

    auto* realize = app.add_subcommand("realize", "contextual quantum realization");
    realize->add_option("graph", graph_path)->required();

    auto* maxq = app.add_subcommand("maxquantum", "see-saw lower bound on a witness");
    maxq->add_option("graph", graph_path)->required();
    maxq->add_option("--witness", witness_path, "witness coefficient file");
    maxq->add_option("--dim", dim);
    maxq->add_option("--restarts", restarts);
    maxq->add_option("--iterations", iterations);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check_chordal(graph_path, opt);
        if (classify->parsed()) return cmd_classify(graph_path, opt);
        if (enumerate->parsed()) return cmd_enumerate(max_n, opt, csv_path);
        if (extend->parsed()) return cmd_extend(marginals_path, opt);
        if (member->parsed()) return cmd_membership(behavior_path, opt);
        if (realize->parsed()) return cmd_realize(graph_path, opt);
        if (maxq->parsed())
            return cmd_maxquantum(graph_path, witness_path, dim, restarts, iterations, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    }
    return kExitParseError;
}
