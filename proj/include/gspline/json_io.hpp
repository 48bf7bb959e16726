#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gspline/basis.hpp"
#include "gspline/collapse.hpp"
#include "gspline/graph.hpp"
#include "gspline/numtheory.hpp"
#include "gspline/spline.hpp"

namespace gspline {

// Ordered maps keep output key order fixed, so identical inputs serialize to
// identical bytes.
using Json = nlohmann::ordered_json;

// Strict decimal integer: optional leading '-', digits only. All integers
// cross the JSON boundary as decimal strings to survive arbitrary precision.
Int int_from_string(const std::string& s);
std::string to_decimal(const Int& v);

// Accepts a decimal string or a plain JSON integer (floats are rejected).
Int int_from_json(const Json& j);

// {"vertices": ["v1", ...], "edges": [{"u":1,"v":2,"w":"6"}, ...]}
// Vertex order in the array defines v_1..v_n; edge ids are assigned 1..m in
// file order. Throws ParseError on shape problems, DomainError/InvalidVertex
// on bad indices or weights.
WeightedGraph graph_from_json(const Json& j);
Json graph_to_json(const WeightedGraph& g);
WeightedGraph load_graph(const std::string& path);

// {"entries": ["0", "12", ...]} in graph vertex order.
Spline spline_from_json(const Json& j);
Json spline_to_json(const Spline& s);
Spline load_spline(const std::string& path);

// {"valid": bool, "violations": [{"edge_id":6,"u":3,"v":4,"modulus":"8",
//  "difference":"60"}, ...]}
Json report_to_json(const VerifyReport& r);

// {"leading_terms": [...], "elements": [spline, ...], "trace_ref": path?}
Json basis_to_json(const FlowUpBasis& b, const std::optional<std::string>& trace_ref = {});

// {"op":"star_clique"|"edge_collapse", ...step fields, weights as strings}
Json step_to_json(const CollapseStep& step);
Json steps_to_json(const std::vector<CollapseStep>& steps);

// {"graphs": [...], "steps": [...], "star_weights":
//  [{"vertex":2,"weights":["12"]}, ...]}
Json sequence_to_json(const CollapseSequence& seq);

// [["3","4"],["1","6"]] → congruences x ≡ 3 (mod 4), x ≡ 1 (mod 6).
std::vector<Congruence> congruences_from_json(const Json& j);

// {"1":"0","2":"12"} → prefix labeling; keys must be exactly "1".."r".
std::vector<Int> partial_from_json(const Json& j);

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

}  // namespace gspline
