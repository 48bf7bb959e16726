#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gspline/basis.hpp"
#include "gspline/collapse.hpp"
#include "gspline/errors.hpp"
#include "gspline/graph.hpp"
#include "gspline/json_io.hpp"
#include "gspline/minimality.hpp"
#include "gspline/numtheory.hpp"
#include "gspline/oracle.hpp"
#include "gspline/paths.hpp"
#include "gspline/spline.hpp"

namespace {

using gspline::Congruence;
using gspline::FlowUpBasis;
using gspline::Int;
using gspline::Json;
using gspline::Spline;
using gspline::WeightedGraph;

// Exit codes: 0 success / valid, 1 mathematically negative result, 2 usage or
// parse problem, 3 resource limit hit (with a JSON diagnostic on stdout).
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string format_spline(const Spline& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (i) out += ", ";
        out += gspline::to_decimal(s.entries[i]);
    }
    return out + ")";
}

std::string join_terms(const std::vector<Int>& terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ' ';
        out += gspline::to_decimal(terms[i]);
    }
    return out;
}

Json parse_inline_json(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw gspline::ParseError(std::string(what) + ": " + e.what());
    }
}

WeightedGraph load_ordered_graph(const std::string& path, const std::vector<int>& order) {
    WeightedGraph g = gspline::load_graph(path);
    if (order.empty()) return g;
    return gspline::permuted(g, order);
}

std::vector<Int> generator_values(const gspline::CollapseSequence& seq) {
    std::vector<Int> out;
    for (const gspline::KernelGenerator& kg : gspline::kernel_generators(seq)) {
        out.push_back(kg.value);
    }
    return out;
}

Json terms_json(const std::vector<Int>& terms) {
    Json arr = Json::array();
    for (const Int& t : terms) arr.push_back(gspline::to_decimal(t));
    return arr;
}

// Shared by `basis` and `leading-terms`: when both methods run, any mismatch
// is reported as a diff and treated as a negative result.
int report_method_mismatch(const std::vector<Int>& collapse_terms,
                           const std::vector<Int>& path_terms, bool json) {
    std::size_t first = 0;
    while (first < collapse_terms.size() && first < path_terms.size() &&
           collapse_terms[first] == path_terms[first]) {
        ++first;
    }
    if (json) {
        emit(Json{{"methods_agree", false},
                  {"collapse", terms_json(collapse_terms)},
                  {"paths", terms_json(path_terms)},
                  {"first_difference", first + 1}});
    } else {
        std::cout << "methods disagree at position " << first + 1 << "\n"
                  << "  collapse: " << join_terms(collapse_terms) << "\n"
                  << "  paths:    " << join_terms(path_terms) << "\n";
    }
    return kNegative;
}

int cmd_verify(const std::string& graph_path, const std::string& spline_path, bool json) {
    WeightedGraph g = gspline::load_graph(graph_path);
    Spline s = gspline::load_spline(spline_path);
    gspline::VerifyReport report = gspline::verify(g, s);
    if (json) {
        emit(gspline::report_to_json(report));
    } else if (report.valid()) {
        std::cout << "valid spline\n";
    } else {
        for (const gspline::Violation& v : report.violations) {
            std::cout << "violated: (" << g.label(v.u) << ", " << g.label(v.v) << ") weight "
                      << v.modulus << ", difference " << v.difference << "\n";
        }
    }
    return report.valid() ? kOk : kNegative;
}

int cmd_leading_terms(const std::string& graph_path, const std::vector<int>& order,
                      const std::string& method, std::size_t path_limit, bool json) {
    WeightedGraph g = load_ordered_graph(graph_path, order);
    std::vector<Int> collapse_terms, path_terms;
    if (method != "paths") collapse_terms = generator_values(gspline::complete_collapse(g));
    if (method != "collapse") {
        path_terms =
            gspline::leading_terms_via_paths(g, gspline::PathMethod::Shortcut, path_limit);
    }
    if (method == "both" && collapse_terms != path_terms) {
        return report_method_mismatch(collapse_terms, path_terms, json);
    }
    const std::vector<Int>& terms = method == "paths" ? path_terms : collapse_terms;
    if (json) {
        Json j{{"method", method}, {"leading_terms", terms_json(terms)}};
        if (method == "both") j["methods_agree"] = true;
        emit(j);
    } else {
        std::cout << join_terms(terms) << "\n";
    }
    return kOk;
}

int cmd_basis(const std::string& graph_path, const std::vector<int>& order,
              const std::string& method, const std::string& trace_path, unsigned threads,
              std::size_t path_limit, bool json) {
    WeightedGraph g = load_ordered_graph(graph_path, order);
    FlowUpBasis basis = gspline::build_basis(g, threads);
    if (method != "collapse") {
        std::vector<Int> collapse_terms;
        for (const gspline::KernelGenerator& kg : basis.generators) {
            collapse_terms.push_back(kg.value);
        }
        std::vector<Int> path_terms =
            gspline::leading_terms_via_paths(g, gspline::PathMethod::Shortcut, path_limit);
        if (collapse_terms != path_terms) {
            return report_method_mismatch(collapse_terms, path_terms, json);
        }
    }
    std::optional<std::string> trace_ref;
    if (!trace_path.empty()) {
        gspline::CollapseSequence seq = gspline::complete_collapse(g);
        gspline::save_json(trace_path, gspline::steps_to_json(seq.steps));
        trace_ref = trace_path;
    }
    if (json) {
        emit(gspline::basis_to_json(basis, trace_ref));
    } else {
        std::cout << "leading terms: ";
        std::vector<Int> terms;
        for (const gspline::KernelGenerator& kg : basis.generators) terms.push_back(kg.value);
        std::cout << join_terms(terms) << "\n";
        for (int i = 1; i <= basis.rank(); ++i) {
            std::cout << "M_" << i << " = " << format_spline(basis.elements[i - 1]) << "\n";
        }
    }
    return kOk;
}

int cmd_collapse(const std::string& graph_path, const std::vector<int>& order,
                 const std::string& trace_path, bool json) {
    WeightedGraph g = load_ordered_graph(graph_path, order);
    gspline::CollapseSequence seq = gspline::complete_collapse(g);
    if (!trace_path.empty()) gspline::save_json(trace_path, gspline::steps_to_json(seq.steps));
    if (json) {
        emit(gspline::sequence_to_json(seq));
    } else {
        for (const WeightedGraph& level : seq.graphs) {
            std::cout << "G_" << level.vertex_count() << ": " << level.edges().size()
                      << " edge(s)\n";
        }
        for (const auto& [vertex, weights] : seq.star_weights_of) {
            std::cout << "star of v" << vertex << ": " << join_terms(weights) << "\n";
        }
    }
    return kOk;
}

int cmd_extend(const std::string& graph_path, const std::string& partial_text, bool json) {
    WeightedGraph g = gspline::load_graph(graph_path);
    std::vector<Int> values =
        gspline::partial_from_json(parse_inline_json(partial_text, "--partial"));
    int n = g.vertex_count();
    int r = static_cast<int>(values.size());
    if (r > n) {
        throw gspline::ParseError("partial labeling has " + std::to_string(r) +
                                  " entries but the graph has " + std::to_string(n) +
                                  " vertices");
    }
    gspline::CollapseSequence seq = gspline::complete_collapse(g);
    Spline cur{std::move(values)};
    gspline::VerifyReport report = gspline::verify(seq.level(r), cur);
    if (!report.valid()) {
        if (json) {
            Json j = gspline::report_to_json(report);
            j["extended"] = false;
            emit(j);
        } else {
            std::cout << "prefix is not a spline on the first " << r << " vertices\n";
        }
        return kNegative;
    }
    while (static_cast<int>(cur.entries.size()) < n) cur = gspline::extend_spline(seq, cur);
    if (json) {
        emit(Json{{"extended", true}, {"spline", gspline::spline_to_json(cur)}});
    } else {
        std::cout << format_spline(cur) << "\n";
    }
    return kOk;
}

int cmd_crt(const std::string& congruences_text, bool json) {
    std::vector<Congruence> congruences =
        gspline::congruences_from_json(parse_inline_json(congruences_text, "--congruences"));
    if (congruences.empty()) throw gspline::ParseError("at least one congruence is required");
    gspline::CrtResult result = gspline::crt_solve(congruences);
    if (result.ok()) {
        if (json) {
            emit(Json{{"solvable", true},
                      {"residue", gspline::to_decimal(result.solution->residue)},
                      {"modulus", gspline::to_decimal(result.solution->modulus)}});
        } else {
            std::cout << "x ≡ " << result.solution->residue << " (mod "
                      << result.solution->modulus << ")\n";
        }
        return kOk;
    }
    if (json) {
        emit(Json{{"solvable", false},
                  {"conflict", Json{{"i", result.conflict->i}, {"j", result.conflict->j}}}});
    } else {
        std::cout << "incompatible: congruences " << result.conflict->i << " and "
                  << result.conflict->j << "\n";
    }
    return kNegative;
}

int cmd_check(const std::string& graph_path, std::size_t cap, std::size_t path_limit,
              unsigned threads, bool json) {
    WeightedGraph g = gspline::load_graph(graph_path);
    Json checks = Json::array();
    bool all_ok = true;

    gspline::CollapseSequence seq = gspline::complete_collapse(g);
    std::vector<Int> collapse_terms = generator_values(seq);
    std::vector<Int> path_terms =
        gspline::leading_terms_via_paths(g, gspline::PathMethod::Shortcut, path_limit);
    bool agree = collapse_terms == path_terms;
    all_ok = all_ok && agree;
    Json agreement{{"name", "method_agreement"}, {"status", agree ? "pass" : "fail"}};
    if (!agree) {
        agreement["collapse"] = terms_json(collapse_terms);
        agreement["paths"] = terms_json(path_terms);
    }
    checks.push_back(std::move(agreement));

    FlowUpBasis basis = gspline::build_basis(g, threads);
    bool basis_ok = basis.rank() == g.vertex_count();
    for (int i = 1; basis_ok && i <= basis.rank(); ++i) {
        const Spline& m = basis.elements[i - 1];
        basis_ok = gspline::verify(g, m).valid() && gspline::flow_up_index(m) == i - 1 &&
                   gspline::leading_term(m) == basis.leading(i);
    }
    all_ok = all_ok && basis_ok;
    checks.push_back(Json{{"name", "basis_verifies"}, {"status", basis_ok ? "pass" : "fail"}});

    Json box_check{{"name", "box_spans"}};
    try {
        gspline::ResidueBox box = gspline::enumerate_splines(g, cap);
        gspline::SpanCheck span = gspline::check_basis_spans(g, basis, box);
        all_ok = all_ok && span.ok;
        box_check["status"] = span.ok ? "pass" : "fail";
        box_check["splines"] = box.splines.size();
        box_check["modulus"] = gspline::to_decimal(box.modulus);
        if (!span.ok) {
            box_check["reason"] = span.reason;
            if (span.counterexample) {
                box_check["counterexample"] = gspline::spline_to_json(*span.counterexample);
            }
        }
    } catch (const gspline::CapExceeded&) {
        box_check["status"] = "skipped";
        box_check["reason"] = "residue box exceeds the enumeration cap";
    }
    checks.push_back(std::move(box_check));

    if (json) {
        emit(Json{{"ok", all_ok}, {"checks", checks}});
    } else {
        for (const Json& c : checks) {
            std::string status = c.at("status").get<std::string>();
            std::string tag = status == "pass" ? "PASS" : (status == "skipped" ? "SKIP" : "FAIL");
            std::cout << "[" << tag << "] " << c.at("name").get<std::string>() << "\n";
        }
        std::cout << (all_ok ? "certificate: OK" : "certificate: FAILED") << "\n";
    }
    return all_ok ? kOk : kNegative;
}

std::size_t default_path_limit() {
    const char* env = std::getenv("SPLINE_PATH_LIMIT");
    if (env == nullptr || *env == '\0') return gspline::kDefaultPathLimit;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') {
        throw gspline::ParseError(std::string("SPLINE_PATH_LIMIT is not a number: ") + env);
    }
    return static_cast<std::size_t>(v);
}

}  // namespace

int main(int argc, char** argv) {
    bool force_json = false;
    std::string graph_path, spline_path, trace_path, partial_text, congruences_text;
    std::string method = "collapse";
    std::vector<int> order;
    unsigned threads = 1;
    std::size_t path_limit = gspline::kDefaultPathLimit;
    std::size_t cap = 100000;

    CLI::App app{"generalized integer splines on edge-weighted graphs"};
    app.require_subcommand(1);
    app.add_flag("--json", force_json, "force JSON output even on a terminal");

    auto add_graph = [&](CLI::App* cmd) {
        cmd->add_option("graph", graph_path, "graph JSON file")->required();
    };
    auto add_order = [&](CLI::App* cmd) {
        cmd->add_option("--order", order, "permutation of 1..n applied to the vertex order")
            ->delimiter(',');
    };
    auto add_path_limit = [&](CLI::App* cmd) {
        cmd->add_option("--path-limit", path_limit, "cap on enumerated simple paths");
    };
    auto add_method = [&](CLI::App* cmd) {
        cmd->add_option("--method", method, "collapse, paths, or both")
            ->check(CLI::IsMember({"collapse", "paths", "both"}));
    };

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a labeling against every edge");
    add_graph(verify_cmd);
    verify_cmd->add_option("spline", spline_path, "spline JSON file")->required();

    CLI::App* basis_cmd = app.add_subcommand("basis", "construct the flow-up basis");
    add_graph(basis_cmd);
    add_method(basis_cmd);
    add_order(basis_cmd);
    add_path_limit(basis_cmd);
    basis_cmd->add_option("--trace", trace_path, "write the collapse trace to this file");
    basis_cmd->add_option("--threads", threads, "lift basis levels on this many threads");

    CLI::App* terms_cmd = app.add_subcommand("leading-terms", "compute basis leading terms");
    add_graph(terms_cmd);
    add_method(terms_cmd);
    add_order(terms_cmd);
    add_path_limit(terms_cmd);

    CLI::App* collapse_cmd = app.add_subcommand("collapse", "run a complete collapse sequence");
    add_graph(collapse_cmd);
    add_order(collapse_cmd);
    collapse_cmd->add_option("--trace", trace_path, "write the step trace to this file");

    CLI::App* extend_cmd = app.add_subcommand("extend", "complete a prefix labeling");
    add_graph(extend_cmd);
    extend_cmd->add_option("--partial", partial_text, "JSON object of index to value")
        ->required();

    CLI::App* crt_cmd = app.add_subcommand("crt", "solve simultaneous congruences");
    crt_cmd->add_option("--congruences", congruences_text, "JSON array of [residue, modulus]")
        ->required();

    CLI::App* check_cmd = app.add_subcommand("check", "run the oracle certification suite");
    add_graph(check_cmd);
    add_path_limit(check_cmd);
    check_cmd->add_option("--cap", cap, "residue box enumeration cap");
    check_cmd->add_option("--threads", threads, "lift basis levels on this many threads");

    try {
        path_limit = default_path_limit();
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            int code = app.exit(e);
            return code == 0 ? kOk : kUsage;
        }
        bool json = force_json || isatty(fileno(stdout)) == 0;

        if (*verify_cmd) return cmd_verify(graph_path, spline_path, json);
        if (*basis_cmd) {
            return cmd_basis(graph_path, order, method, trace_path, threads, path_limit, json);
        }
        if (*terms_cmd) return cmd_leading_terms(graph_path, order, method, path_limit, json);
        if (*collapse_cmd) return cmd_collapse(graph_path, order, trace_path, json);
        if (*extend_cmd) return cmd_extend(graph_path, partial_text, json);
        if (*crt_cmd) return cmd_crt(congruences_text, json);
        if (*check_cmd) return cmd_check(graph_path, cap, path_limit, threads, json);
        return kUsage;
    } catch (const gspline::PathExplosion& e) {
        emit(Json{{"error", e.what()}, {"limit", e.limit}, {"found", e.found}});
        return kResource;
    } catch (const gspline::CapExceeded& e) {
        emit(Json{{"error", e.what()}, {"cap", e.cap}});
        return kResource;
    } catch (const gspline::ScanTooLarge& e) {
        emit(Json{{"error", e.what()}});
        return kResource;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << '\n';
        return kUsage;
    }
}
