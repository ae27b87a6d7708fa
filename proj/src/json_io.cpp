#include "ctxgraph/json_io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace ctx::io {

Graph graph_from_json(const json& j) {
    int n = j.at("n").get<int>();
    Graph g(n);
    for (const auto& e : j.at("edges")) {
        int u = e.at(0).get<int>();
        int v = e.at(1).get<int>();
        if (u >= v) throw std::invalid_argument("graph edges must satisfy u < v");
        if (g.adjacent(u, v)) throw std::invalid_argument("duplicate edge in graph file");
        g.add_edge(u, v);
    }
    return g;
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.size()}, {"edges", edges}};
}

Graph graph_from_text(const std::string& line) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("text graph: missing ':'");
    int n = std::stoi(line.substr(0, colon));
    Graph g(n);
    std::string rest = line.substr(colon + 1);
    std::istringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) {
            if (tok.find_first_not_of(" \t\r\n") == std::string::npos) continue;
            throw std::invalid_argument("text graph: bad edge token '" + tok + "'");
        }
        g.add_edge(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
    }
    return g;
}

Graph parse_graph(const std::string& content) {
    auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{')
        return graph_from_json(json::parse(content));
    return graph_from_text(content);
}

json certificate_to_json(const ChordalityCertificate& cert) {
    if (cert.chordal()) return {{"verdict", "chordal"}, {"peo", cert.peo}};
    return {{"verdict", "nonchordal"}, {"induced_cycle", cert.induced_cycle}};
}

json scenario_class_to_json(const ScenarioClass& sc) {
    json out{{"label", to_string(sc.label)}};
    if (!sc.party_partition.empty()) out["partition"] = sc.party_partition;
    return out;
}

json record_to_json(const ScenarioRecord& rec) {
    json out{{"graph", graph_to_json(rec.graph)},
             {"class", scenario_class_to_json(rec.scenario)},
             {"certificate", certificate_to_json(rec.certificate)},
             {"canonical", rec.canonical.bits}};
    if (!rec.scenario.party_partition.empty()) out["partition"] = rec.scenario.party_partition;
    return out;
}

namespace {

std::string outcome_key(const OutcomeSpace& outcomes, const std::vector<int>& verts,
                        const std::vector<int>& choice) {
    std::string key;
    for (size_t i = 0; i < verts.size(); ++i) {
        if (i) key += ",";
        key += outcomes.labels[static_cast<size_t>(verts[i])][static_cast<size_t>(choice[i])];
    }
    return key;
}

json table_to_json(const OutcomeSpace& outcomes, const Table& t) {
    json p = json::object();
    for (uint64_t idx = 0; idx < t.size(); ++idx)
        p[outcome_key(outcomes, t.verts, decode_outcomes(outcomes, t.verts, idx))] = t.p[idx];
    return {{"clique", t.verts}, {"p", p}};
}

}  // namespace

ContextMarginals marginals_from_json(const json& j) {
    ContextMarginals m{graph_from_json(j.at("graph")), {}, {}};
    m.outcomes.labels.resize(static_cast<size_t>(m.graph.size()));
    for (auto& [key, labels] : j.at("outcomes").items()) {
        int v = std::stoi(key);
        if (v < 0 || v >= m.graph.size())
            throw std::invalid_argument("outcomes: vertex out of range");
        m.outcomes.labels[static_cast<size_t>(v)] = labels.get<std::vector<std::string>>();
    }
    for (auto& l : m.outcomes.labels)
        if (l.empty()) throw std::invalid_argument("outcomes: missing vertex entry");
    m.outcomes.validate();
    for (const auto& tj : j.at("tables")) {
        Table t;
        t.verts = tj.at("clique").get<std::vector<int>>();
        if (!std::is_sorted(t.verts.begin(), t.verts.end()))
            throw std::invalid_argument("tables: clique vertices must be ascending");
        t.p.assign(table_size(m.outcomes, t.verts), 0.0);
        for (auto& [key, prob] : tj.at("p").items()) {
            std::vector<int> choice;
            std::istringstream ss(key);
            std::string tok;
            size_t pos = 0;
            while (std::getline(ss, tok, ',')) {
                if (pos >= t.verts.size()) throw std::invalid_argument("outcome key too long: " + key);
                const auto& labels = m.outcomes.labels[static_cast<size_t>(t.verts[pos])];
                auto it = std::find(labels.begin(), labels.end(), tok);
                if (it == labels.end())
                    throw std::invalid_argument("unknown outcome label '" + tok + "'");
                choice.push_back(static_cast<int>(it - labels.begin()));
                ++pos;
            }
            if (pos != t.verts.size()) throw std::invalid_argument("outcome key too short: " + key);
            t.p[encode_outcomes(m.outcomes, t.verts, choice)] = prob.get<double>();
        }
        m.tables.push_back(std::move(t));
    }
    return m;
}

json marginals_to_json(const ContextMarginals& m) {
    json outcomes = json::object();
    for (int v = 0; v < m.graph.size(); ++v)
        outcomes[std::to_string(v)] = m.outcomes.labels[static_cast<size_t>(v)];
    json tables = json::array();
    for (const auto& t : m.tables) tables.push_back(table_to_json(m.outcomes, t));
    return {{"graph", graph_to_json(m.graph)}, {"outcomes", outcomes}, {"tables", tables}};
}

json joint_to_json(const OutcomeSpace& outcomes, const Table& joint) {
    return table_to_json(outcomes, joint);
}

json witness_to_json(const Witness& w, const Behavior& b) {
    json coeffs = json::array();
    size_t pos = 0;
    for (const auto& clique : b.graph.maximal_cliques()) {
        json c = json::object();
        uint64_t sz = table_size(b.outcomes, clique);
        for (uint64_t idx = 0; idx < sz; ++idx)
            c[outcome_key(b.outcomes, clique, decode_outcomes(b.outcomes, clique, idx))] =
                w.coeffs[pos++];
        coeffs.push_back({{"clique", clique}, {"c", c}});
    }
    return {{"coeffs", coeffs}, {"classical_bound", w.classical_bound}, {"value", w.value}};
}

json membership_to_json(const MembershipResult& r, const Behavior& b) {
    json out{{"verdict", r.verdict == Verdict::Noncontextual ? "noncontextual" : "contextual"},
             {"deviation", r.deviation},
             {"exact", r.exact}};
    if (r.verdict == Verdict::Noncontextual)
        out["weights"] = r.weights;
    else
        out["witness"] = witness_to_json(*r.witness, b);
    return out;
}

std::vector<double> witness_coeffs_from_json(const json& j, const Graph& g,
                                             const OutcomeSpace& outcomes) {
    auto cliques = g.maximal_cliques();
    size_t total = 0;
    std::vector<size_t> offsets;
    for (const auto& c : cliques) {
        offsets.push_back(total);
        total += table_size(outcomes, c);
    }
    std::vector<double> coeffs(total, 0.0);
    for (const auto& entry : j) {
        auto verts = entry.at("clique").get<std::vector<int>>();
        auto it = std::find(cliques.begin(), cliques.end(), verts);
        if (it == cliques.end())
            throw std::invalid_argument("witness clique is not a maximal clique");
        size_t base = offsets[static_cast<size_t>(it - cliques.begin())];
        for (auto& [key, val] : entry.at("c").items()) {
            std::vector<int> choice;
            std::istringstream ss(key);
            std::string tok;
            size_t pos = 0;
            while (std::getline(ss, tok, ',')) {
                const auto& labels = outcomes.labels[static_cast<size_t>(verts[pos])];
                auto lit = std::find(labels.begin(), labels.end(), tok);
                if (lit == labels.end())
                    throw std::invalid_argument("unknown outcome label '" + tok + "'");
                choice.push_back(static_cast<int>(lit - labels.begin()));
                ++pos;
            }
            coeffs[base + encode_outcomes(outcomes, verts, choice)] = val.get<double>();
        }
    }
    return coeffs;
}

namespace {

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c)
            row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(row);
    }
    return rows;
}

json tensorop_to_json(const TensorOp& op) {
    json terms = json::array();
    for (const auto& t : op.terms()) {
        json factors = json::array();
        for (const auto& f : t.factors)
            factors.push_back(f ? matrix_to_json(*f) : json(nullptr));
        terms.push_back({{"coeff", {t.coeff.real(), t.coeff.imag()}}, {"factors", factors}});
    }
    return terms;
}

}  // namespace

json realization_to_json(const NonchordalRealization& r) {
    json measurements = json::array();
    for (size_t v = 0; v < r.realization.set.measurements.size(); ++v) {
        const auto& m = r.realization.set.measurements[v];
        json projectors = json::array();
        for (const auto& p : m.projectors) projectors.push_back(tensorop_to_json(p));
        measurements.push_back(
            {{"vertex", v}, {"labels", m.labels}, {"projectors", projectors}});
    }
    json state = json::array();
    for (const auto& f : r.realization.state.factors) state.push_back(matrix_to_json(f));
    Graph verified = compatibility_graph(r.realization.set);
    return {{"dims", r.realization.set.dims},
            {"measurements", measurements},
            {"state", state},
            {"compatibility_graph", graph_to_json(verified)},
            {"embedded_cycle", r.cycle},
            {"membership", membership_to_json(r.membership, r.behavior)},
            {"cycle_witness",
             {{"classical_bound", r.cycle_witness_result.classical_bound},
              {"value", r.cycle_witness_result.value}}}};
}

}  // namespace ctx::io
