#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "ctxgraph/classify.hpp"
#include "ctxgraph/marginals.hpp"
#include "ctxgraph/polytope.hpp"
#include "ctxgraph/quantum.hpp"

namespace ctx::io {

using nlohmann::json;

// Graph formats: {"n": 4, "edges": [[0,1], ...]} or the one-line text form
// "4: 0-1,1-2,2-3,0-3".
Graph graph_from_json(const json& j);
json graph_to_json(const Graph& g);
Graph graph_from_text(const std::string& line);
// Dispatches on leading '{'.
Graph parse_graph(const std::string& content);

json certificate_to_json(const ChordalityCertificate& cert);
json scenario_class_to_json(const ScenarioClass& sc);
json record_to_json(const ScenarioRecord& rec);

// {"graph": ..., "outcomes": {"0": [...], ...},
//  "tables": [{"clique": [...], "p": {"a,b": 0.25, ...}}]}
ContextMarginals marginals_from_json(const json& j);
json marginals_to_json(const ContextMarginals& m);

// Joint tables use the same clique/p encoding over all measurements.
json joint_to_json(const OutcomeSpace& outcomes, const Table& joint);

json membership_to_json(const MembershipResult& r, const Behavior& b);
json witness_to_json(const Witness& w, const Behavior& b);

json realization_to_json(const NonchordalRealization& r);

// Witness coefficient file: [{"clique": [...], "c": {"a,b": -1.0, ...}}, ...]
// indexed against the behavior coordinates of graph + outcomes.
std::vector<double> witness_coeffs_from_json(const json& j, const Graph& g,
                                             const OutcomeSpace& outcomes);

}  // namespace ctx::io
