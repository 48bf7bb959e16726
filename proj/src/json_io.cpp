#include "gspline/json_io.hpp"

#include <fstream>

#include "gspline/errors.hpp"

namespace gspline {

namespace {

Json string_list(const std::vector<Int>& values) {
    Json arr = Json::array();
    for (const Int& v : values) arr.push_back(to_decimal(v));
    return arr;
}

const Json& require(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string(what) + " is missing the \"" + key + "\" field");
    }
    return j.at(key);
}

int int_field(const Json& j, const char* key, const char* what) {
    const Json& v = require(j, key, what);
    if (!v.is_number_integer()) {
        throw ParseError(std::string(what) + " field \"" + key + "\" must be an integer");
    }
    return v.get<int>();
}

}  // namespace

Int int_from_string(const std::string& s) {
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start) throw ParseError("not a decimal integer: \"" + s + "\"");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw ParseError("not a decimal integer: \"" + s + "\"");
    }
    return Int(s);
}

std::string to_decimal(const Int& v) { return v.str(); }

Int int_from_json(const Json& j) {
    if (j.is_string()) return int_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    throw ParseError("expected a decimal string or integer, got " + j.dump());
}

WeightedGraph graph_from_json(const Json& j) {
    const Json& vertices = require(j, "vertices", "graph");
    if (!vertices.is_array()) throw ParseError("graph \"vertices\" must be an array");
    std::vector<std::string> labels;
    for (const Json& v : vertices) {
        if (!v.is_string()) throw ParseError("graph vertex labels must be strings");
        labels.push_back(v.get<std::string>());
    }
    const Json& edges = require(j, "edges", "graph");
    if (!edges.is_array()) throw ParseError("graph \"edges\" must be an array");
    std::vector<std::tuple<int, int, Int>> list;
    for (const Json& e : edges) {
        int u = int_field(e, "u", "edge");
        int v = int_field(e, "v", "edge");
        Int w = int_from_json(require(e, "w", "edge"));
        list.emplace_back(u, v, w);
    }
    int n = static_cast<int>(labels.size());
    return make_graph(n, list, std::move(labels));
}

Json graph_to_json(const WeightedGraph& g) {
    Json j = Json::object();
    j["vertices"] = g.labels();
    Json edges = Json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back({{"u", e.u}, {"v", e.v}, {"w", to_decimal(e.w)}});
    }
    j["edges"] = std::move(edges);
    return j;
}

WeightedGraph load_graph(const std::string& path) { return graph_from_json(load_json(path)); }

Spline spline_from_json(const Json& j) {
    const Json& entries = require(j, "entries", "spline");
    if (!entries.is_array()) throw ParseError("spline \"entries\" must be an array");
    Spline s;
    for (const Json& e : entries) s.entries.push_back(int_from_json(e));
    return s;
}

Json spline_to_json(const Spline& s) { return Json{{"entries", string_list(s.entries)}}; }

Spline load_spline(const std::string& path) { return spline_from_json(load_json(path)); }

Json report_to_json(const VerifyReport& r) {
    Json violations = Json::array();
    for (const Violation& v : r.violations) {
        violations.push_back({{"edge_id", v.edge_id},
                              {"u", v.u},
                              {"v", v.v},
                              {"modulus", to_decimal(v.modulus)},
                              {"difference", to_decimal(v.difference)}});
    }
    return Json{{"valid", r.valid()}, {"violations", std::move(violations)}};
}

Json basis_to_json(const FlowUpBasis& b, const std::optional<std::string>& trace_ref) {
    Json terms = Json::array();
    for (const KernelGenerator& gen : b.generators) terms.push_back(to_decimal(gen.value));
    Json elements = Json::array();
    for (const Spline& m : b.elements) elements.push_back(spline_to_json(m));
    Json j = Json{{"leading_terms", std::move(terms)}, {"elements", std::move(elements)}};
    if (trace_ref) j["trace_ref"] = *trace_ref;
    return j;
}

Json step_to_json(const CollapseStep& step) {
    if (const auto* sc = std::get_if<StarCliqueStep>(&step)) {
        Json new_edges = Json::array();
        for (const StarCliqueStep::NewEdge& e : sc->new_edges) {
            new_edges.push_back({{"u", e.u}, {"v", e.v}, {"w", to_decimal(e.w)}});
        }
        return Json{{"op", "star_clique"},
                    {"removed", sc->removed},
                    {"neighbors", sc->neighbors},
                    {"star_weights", string_list(sc->star_weights)},
                    {"new_edges", std::move(new_edges)},
                    {"index_remap", sc->index_remap}};
    }
    const auto& ec = std::get<EdgeCollapseStep>(step);
    return Json{{"op", "edge_collapse"},
                {"u", ec.u},
                {"v", ec.v},
                {"merged", string_list(ec.merged_weights)},
                {"w", to_decimal(ec.new_weight)}};
}

Json steps_to_json(const std::vector<CollapseStep>& steps) {
    Json arr = Json::array();
    for (const CollapseStep& s : steps) arr.push_back(step_to_json(s));
    return arr;
}

Json sequence_to_json(const CollapseSequence& seq) {
    Json graphs = Json::array();
    for (const WeightedGraph& g : seq.graphs) graphs.push_back(graph_to_json(g));
    Json stars = Json::array();
    for (const auto& [vertex, weights] : seq.star_weights_of) {
        stars.push_back({{"vertex", vertex}, {"weights", string_list(weights)}});
    }
    return Json{{"graphs", std::move(graphs)},
                {"steps", steps_to_json(seq.steps)},
                {"star_weights", std::move(stars)}};
}

std::vector<Congruence> congruences_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("congruences must be an array of [residue, modulus] pairs");
    std::vector<Congruence> out;
    for (const Json& pair : j) {
        if (!pair.is_array() || pair.size() != 2) {
            throw ParseError("each congruence must be a [residue, modulus] pair");
        }
        Int r = int_from_json(pair.at(0));
        Int m = int_from_json(pair.at(1));
        if (m < 1) throw ParseError("congruence modulus must be >= 1, got " + to_decimal(m));
        out.emplace_back(r, m);
    }
    return out;
}

std::vector<Int> partial_from_json(const Json& j) {
    if (!j.is_object() || j.empty()) {
        throw ParseError("partial labeling must be a non-empty object of index → value");
    }
    std::vector<Int> out(j.size());
    std::vector<bool> seen(j.size(), false);
    for (const auto& [key, value] : j.items()) {
        Int index = int_from_string(key);
        if (index < 1 || index > Int(out.size())) {
            throw ParseError("partial labeling keys must be exactly 1..r; got \"" + key + "\"");
        }
        auto at = static_cast<std::size_t>(index) - 1;
        if (seen[at]) throw ParseError("duplicate index \"" + key + "\" in partial labeling");
        seen[at] = true;
        out[at] = int_from_json(value);
    }
    return out;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace gspline
