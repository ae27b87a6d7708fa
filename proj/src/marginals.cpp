#include "ctxgraph/marginals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "ctxgraph/chordal.hpp"

namespace ctx {

void OutcomeSpace::validate() const {
    for (const auto& l : labels) {
        if (l.empty()) throw std::invalid_argument("OutcomeSpace: empty outcome list");
        std::set<std::string> seen(l.begin(), l.end());
        if (seen.size() != l.size())
            throw std::invalid_argument("OutcomeSpace: duplicate outcome label");
    }
}

double Table::sum() const { return std::accumulate(p.begin(), p.end(), 0.0); }

uint64_t table_size(const OutcomeSpace& outcomes, const std::vector<int>& verts) {
    uint64_t total = 1;
    for (int v : verts) {
        total *= static_cast<uint64_t>(outcomes.count(v));
        if (total > kMaxJointSize) throw std::invalid_argument("joint table exceeds size bound");
    }
    return total;
}

std::vector<int> decode_outcomes(const OutcomeSpace& outcomes, const std::vector<int>& verts,
                                 uint64_t index) {
    std::vector<int> choice(verts.size());
    for (size_t i = verts.size(); i-- > 0;) {
        int c = outcomes.count(verts[i]);
        choice[i] = static_cast<int>(index % static_cast<uint64_t>(c));
        index /= static_cast<uint64_t>(c);
    }
    return choice;
}

uint64_t encode_outcomes(const OutcomeSpace& outcomes, const std::vector<int>& verts,
                         const std::vector<int>& choice) {
    uint64_t index = 0;
    for (size_t i = 0; i < verts.size(); ++i)
        index = index * static_cast<uint64_t>(outcomes.count(verts[i])) +
                static_cast<uint64_t>(choice[i]);
    return index;
}

Table marginalize(const OutcomeSpace& outcomes, const Table& t, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    std::vector<size_t> positions;  // of subset vertices inside t.verts
    for (int v : subset) {
        auto it = std::find(t.verts.begin(), t.verts.end(), v);
        if (it == t.verts.end())
            throw std::invalid_argument("marginalize: subset not contained in table");
        positions.push_back(static_cast<size_t>(it - t.verts.begin()));
    }
    Table out{subset, std::vector<double>(table_size(outcomes, subset), 0.0)};
    std::vector<int> sub_choice(subset.size());
    for (uint64_t idx = 0; idx < t.size(); ++idx) {
        auto choice = decode_outcomes(outcomes, t.verts, idx);
        for (size_t i = 0; i < subset.size(); ++i) sub_choice[i] = choice[positions[i]];
        out.p[encode_outcomes(outcomes, subset, sub_choice)] += t.p[idx];
    }
    return out;
}

namespace {

std::string clique_str(const std::vector<int>& c) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "}";
    return os.str();
}

const Table& table_for_clique(const ContextMarginals& m, const std::vector<int>& clique) {
    for (const auto& t : m.tables)
        if (t.verts == clique) return t;
    throw std::invalid_argument("missing table for clique " + clique_str(clique));
}

}  // namespace

ConsistencyReport check_consistency(const ContextMarginals& m, double tol) {
    m.outcomes.validate();
    auto cliques = m.graph.maximal_cliques();
    for (const auto& clique : cliques) {
        const Table& t = table_for_clique(m, clique);
        if (t.size() != table_size(m.outcomes, clique))
            throw std::invalid_argument("table shape mismatch for clique " + clique_str(clique));
        for (double v : t.p)
            if (v < -tol || !std::isfinite(v))
                return {false, "negative entry in clique " + clique_str(clique), clique, {}, -*std::min_element(t.p.begin(), t.p.end())};
        if (std::abs(t.sum() - 1.0) > tol)
            return {false, "table for clique " + clique_str(clique) + " not normalized", clique, {}, std::abs(t.sum() - 1.0)};
    }
    for (size_t a = 0; a < cliques.size(); ++a) {
        for (size_t b = a + 1; b < cliques.size(); ++b) {
            std::vector<int> common;
            std::set_intersection(cliques[a].begin(), cliques[a].end(), cliques[b].begin(),
                                  cliques[b].end(), std::back_inserter(common));
            if (common.empty()) continue;
            Table ma = marginalize(m.outcomes, table_for_clique(m, cliques[a]), common);
            Table mb = marginalize(m.outcomes, table_for_clique(m, cliques[b]), common);
            double dev = 0.0;
            for (uint64_t i = 0; i < ma.size(); ++i)
                dev = std::max(dev, std::abs(ma.p[i] - mb.p[i]));
            if (dev > tol)
                return {false,
                        "overlap mismatch between cliques " + clique_str(cliques[a]) + " and " +
                            clique_str(cliques[b]),
                        cliques[a], cliques[b], dev};
        }
    }
    return {};
}

Table vorobyev_extend(const ContextMarginals& m, double tol) {
    const Graph& g = m.graph;
    auto cert = is_chordal(g);
    if (!cert.chordal()) throw NotChordalError{};
    if (auto report = check_consistency(m, tol); !report)
        throw InconsistentMarginalsError(report.what);

    auto cliques = g.maximal_cliques();
    auto enclosing_marginal = [&](const std::vector<int>& set) -> Table {
        for (const auto& clique : cliques) {
            if (std::includes(clique.begin(), clique.end(), set.begin(), set.end()))
                return marginalize(m.outcomes, table_for_clique(m, clique), set);
        }
        throw std::logic_error("no maximal clique encloses " + clique_str(set));
    };

    // Process vertices in reverse elimination order; each vertex's already
    // processed neighbors form a clique.
    std::vector<int> proc(cert.peo.rbegin(), cert.peo.rend());
    const int n = g.size();

    Table current;  // distribution over the processed prefix
    std::vector<int> prefix;
    for (int k = 0; k < n; ++k) {
        int v = proc[static_cast<size_t>(k)];
        std::vector<int> anchors;  // processed neighbors of v
        for (int u : g.neighbors(v))
            if (std::find(prefix.begin(), prefix.end(), u) != prefix.end()) anchors.push_back(u);
        std::sort(anchors.begin(), anchors.end());

        std::vector<int> a_set = anchors;  // A_k = {v} + processed neighbors
        a_set.push_back(v);
        std::sort(a_set.begin(), a_set.end());

        if (k == 0) {
            current = enclosing_marginal({v});
            prefix = {v};
            continue;
        }

        Table num = enclosing_marginal(a_set);
        Table den = anchors.empty() ? Table{{}, {1.0}} : enclosing_marginal(anchors);

        std::vector<int> new_prefix = prefix;
        new_prefix.push_back(v);
        std::sort(new_prefix.begin(), new_prefix.end());
        Table next{new_prefix, std::vector<double>(table_size(m.outcomes, new_prefix), 0.0)};

        for (uint64_t idx = 0; idx < next.size(); ++idx) {
            auto choice = decode_outcomes(m.outcomes, new_prefix, idx);
            auto pick = [&](const std::vector<int>& set) {
                std::vector<int> c;
                for (int u : set) {
                    auto it = std::find(new_prefix.begin(), new_prefix.end(), u);
                    c.push_back(choice[static_cast<size_t>(it - new_prefix.begin())]);
                }
                return encode_outcomes(m.outcomes, set, c);
            };
            double d = anchors.empty() ? 1.0 : den.p[pick(anchors)];
            if (d <= 0.0) continue;  // consistency forces the numerator to 0 too
            next.p[idx] = num.p[pick(a_set)] * current.p[pick(current.verts)] / d;
        }
        current = std::move(next);
        prefix.push_back(v);
    }

    std::sort(current.verts.begin(), current.verts.end());
    return current;
}

ContextMarginals marginals_of_joint(const Graph& g, const OutcomeSpace& outcomes,
                                    const Table& joint) {
    ContextMarginals m{g, outcomes, {}};
    for (const auto& clique : g.maximal_cliques())
        m.tables.push_back(marginalize(outcomes, joint, clique));
    return m;
}

}  // namespace ctx
