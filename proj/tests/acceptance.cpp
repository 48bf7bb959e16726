// Acceptance suite: one line per criterion, non-zero exit when any fails.
// Covers the worked K4 example exactly and the randomized property suites
// (CRT agreement, collapse invariance, edge-merge preservation, basis
// certification, method agreement, trace shape).
#include <chrono>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gspline/basis.hpp"
#include "gspline/collapse.hpp"
#include "gspline/errors.hpp"
#include "gspline/graph.hpp"
#include "gspline/json_io.hpp"
#include "gspline/numtheory.hpp"
#include "gspline/oracle.hpp"
#include "gspline/paths.hpp"
#include "gspline/spline.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using gspline::Int;
using gspline::Spline;
using gspline::WeightedGraph;
using testsupport::Rng;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;  // keep the first reason
        ok = false;
    }
};

int failures = 0;

template <typename Body>
void criterion(int number, const std::string& name, Body&& body) {
    Outcome result;
    try {
        result = body();
    } catch (const std::exception& e) {
        result.fail(std::string("exception: ") + e.what());
    }
    std::cout << (result.ok ? "[PASS] " : "[FAIL] ") << number << ". " << name;
    if (!result.ok && !result.detail.empty()) std::cout << " -- " << result.detail;
    std::cout << std::endl;
    if (!result.ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Int> collapse_terms(const WeightedGraph& g) {
    std::vector<Int> out;
    for (const gspline::KernelGenerator& kg :
         gspline::kernel_generators(gspline::complete_collapse(g))) {
        out.push_back(kg.value);
    }
    return out;
}

WeightedGraph fixture_k4() {
    return gspline::load_graph(std::string(GSPLINE_DATA_DIR) + "/k4.json");
}

}  // namespace

int main() {
    const std::vector<Int> golden{1, 12, 60, 120};

    criterion(1, "worked example leading terms by both methods, under one second", [&] {
        Outcome r;
        auto t0 = std::chrono::steady_clock::now();
        WeightedGraph k4 = fixture_k4();
        if (collapse_terms(k4) != golden) r.fail("collapse method is off");
        if (gspline::leading_terms_via_paths(k4, gspline::PathMethod::Shortcut) != golden) {
            r.fail("path method is off");
        }
        double secs = seconds_since(t0);
        if (secs >= 1.0) r.fail("took " + std::to_string(secs) + " s");
        return r;
    });

    criterion(2, "worked example basis elements and the corrected third element", [&] {
        Outcome r;
        WeightedGraph k4 = fixture_k4();
        gspline::FlowUpBasis basis = gspline::build_basis(k4);
        if (basis.elements[0] != Spline{{1, 1, 1, 1}}) r.fail("first element");
        if (basis.elements[1] != Spline{{0, 12, 12, 12}}) r.fail("second element");
        if (basis.elements[3] != Spline{{0, 0, 0, 120}}) r.fail("fourth element");
        const Spline& m3 = basis.elements[2];
        if (gspline::leading_term(m3) != 60) r.fail("third leading term");
        if (!gspline::verify(k4, m3).valid()) r.fail("third element does not verify");
        gspline::VerifyReport report = gspline::verify(k4, Spline{{0, 0, 60, 0}});
        if (report.valid() || report.violations.size() != 1) {
            r.fail("bad tuple not rejected with one violation");
        } else {
            const gspline::Violation& v = report.violations.front();
            if (v.u != 3 || v.v != 4 || v.modulus != 8) r.fail("wrong violation reported");
        }
        return r;
    });

    criterion(3, "non-coprime CRT agrees with brute force on 1000 random systems", [&] {
        Outcome r;
        using gspline::Congruence;
        gspline::CrtResult a = gspline::crt_solve({Congruence(3, 4), Congruence(1, 6)});
        if (!a.ok() || a.solution->residue != 7 || a.solution->modulus != 12) {
            r.fail("fixed solvable example");
        }
        if (gspline::crt_solve({Congruence(1, 4), Congruence(2, 6)}).ok()) {
            r.fail("fixed incompatible example");
        }
        Rng rng(20260301);
        int done = 0;
        while (done < 1000) {
            std::vector<Congruence> sys = testsupport::random_crt_system(rng, 5, 60);
            std::optional<gspline::CrtSolution> scanned;
            try {
                scanned = gspline::crt_scan(sys);
            } catch (const gspline::ScanTooLarge&) {
                continue;  // lcm past the scan range; draw another system
            }
            gspline::CrtResult solved = gspline::crt_solve(sys);
            if (solved.ok() != scanned.has_value()) {
                r.fail("solvability mismatch at system " + std::to_string(done));
                break;
            }
            if (solved.ok() && !(*solved.solution == *scanned)) {
                r.fail("residue mismatch at system " + std::to_string(done));
                break;
            }
            ++done;
        }
        return r;
    });

    criterion(4, "path aggregates invariant under every single collapse (200 graphs)", [&] {
        Outcome r;
        auto t0 = std::chrono::steady_clock::now();
        Rng rng(20260302);
        for (int round = 0; round < 200 && r.ok; ++round) {
            WeightedGraph g = testsupport::random_connected_simple(rng, 2, 6, 30);
            int n = g.vertex_count();
            for (int v = 1; v <= n && r.ok; ++v) {
                auto [h, steps] = gspline::collapse_once(g, v);
                const auto& sc = std::get<gspline::StarCliqueStep>(steps.front());
                for (int a = 1; a <= n; ++a) {
                    if (a == v) continue;
                    for (int b = a + 1; b <= n; ++b) {
                        if (b == v) continue;
                        Int before = gspline::path_lcm(g, a, b).lcm_value;
                        Int after = gspline::path_lcm(h, sc.index_remap[a - 1],
                                                      sc.index_remap[b - 1])
                                        .lcm_value;
                        if (before != after) {
                            r.fail("round " + std::to_string(round) + ", removed v" +
                                   std::to_string(v));
                        }
                    }
                }
            }
        }
        double secs = seconds_since(t0);
        if (secs >= 60.0) r.fail("took " + std::to_string(secs) + " s");
        return r;
    });

    criterion(5, "edge merging preserves the spline set (100 multigraphs)", [&] {
        Outcome r;
        Rng rng(20260303);
        for (int round = 0; round < 100 && r.ok; ++round) {
            WeightedGraph g = testsupport::random_boxable_multigraph(rng, 4, 10000, 10000);
            gspline::ResidueBox before = gspline::enumerate_splines(g, 10000);
            WeightedGraph merged = gspline::edge_collapse_all(g).first;
            gspline::ResidueBox after = gspline::enumerate_splines(merged, 10000);
            if (before.modulus != after.modulus || before.splines != after.splines) {
                r.fail("round " + std::to_string(round));
            }
        }
        return r;
    });

    // Criteria 6-8 run over one shared batch of graphs.
    Rng suite_rng(20260304);
    std::vector<WeightedGraph> suite;
    suite.reserve(100);
    for (int i = 0; i < 100; ++i) {
        suite.push_back(testsupport::random_boxable_simple(suite_rng, 1, 5, 5000, 8000));
    }

    criterion(6, "basis spans its residue box, round-trips, and has the right volume", [&] {
        Outcome r;
        Rng rng(20260305);
        int round_trips = 0;
        for (std::size_t k = 0; k < suite.size() && r.ok; ++k) {
            const WeightedGraph& g = suite[k];
            gspline::FlowUpBasis basis = gspline::build_basis(g);
            gspline::ResidueBox box = gspline::enumerate_splines(g, 8000);
            gspline::SpanCheck span = gspline::check_basis_spans(g, basis, box);
            if (!span.ok) {
                r.fail("span check failed on graph " + std::to_string(k) + ": " + span.reason);
                break;
            }
            int n = g.vertex_count();
            for (int t = 0; t < 10; ++t) {
                std::vector<Int> alpha;
                Spline s{std::vector<Int>(static_cast<std::size_t>(n), 0)};
                for (int i = 0; i < n; ++i) {
                    Int a(testsupport::rand_int(rng, -50, 50));
                    alpha.push_back(a);
                    for (int j = 0; j < n; ++j) {
                        s.entries[static_cast<std::size_t>(j)] +=
                            a * basis.elements[static_cast<std::size_t>(i)]
                                    .entries[static_cast<std::size_t>(j)];
                    }
                }
                if (gspline::decompose(basis, s) != alpha) {
                    r.fail("round-trip failed on graph " + std::to_string(k));
                    break;
                }
                ++round_trips;
            }
            Int det = testsupport::basis_determinant(basis);
            Int expected = 1;
            for (int i = 1; i <= basis.rank(); ++i) expected *= basis.leading(i);
            if (abs(det) != expected) r.fail("determinant off on graph " + std::to_string(k));
        }
        if (r.ok && round_trips != 1000) r.fail("expected 1000 round-trips");
        return r;
    });

    criterion(7, "collapse, shortcut and unrestricted path methods agree", [&] {
        Outcome r;
        for (std::size_t k = 0; k < suite.size() && r.ok; ++k) {
            const WeightedGraph& g = suite[k];
            std::vector<Int> via_collapse = collapse_terms(g);
            std::vector<Int> shortcut =
                gspline::leading_terms_via_paths(g, gspline::PathMethod::Shortcut);
            std::vector<Int> all_paths =
                gspline::leading_terms_via_paths(g, gspline::PathMethod::AllPaths);
            if (via_collapse != shortcut || shortcut != all_paths) {
                r.fail("graph " + std::to_string(k));
            }
        }
        return r;
    });

    criterion(8, "every collapse trace stays simple and connected down to one vertex", [&] {
        Outcome r;
        for (std::size_t k = 0; k < suite.size() && r.ok; ++k) {
            const WeightedGraph& g = suite[k];
            gspline::CollapseSequence seq = gspline::complete_collapse(g);
            int n = g.vertex_count();
            if (static_cast<int>(seq.graphs.size()) != n) {
                r.fail("trace length on graph " + std::to_string(k));
                break;
            }
            for (int stage = 0; stage < n; ++stage) {
                const WeightedGraph& level = seq.graphs[static_cast<std::size_t>(stage)];
                if (level.vertex_count() != n - stage || !gspline::is_simple(level) ||
                    !gspline::is_connected(level)) {
                    r.fail("stage " + std::to_string(stage) + " on graph " + std::to_string(k));
                    break;
                }
            }
            if (!seq.graphs.back().edges().empty()) r.fail("final stage still has edges");
        }
        return r;
    });

    if (failures == 0) {
        std::cout << "acceptance: all 8 criteria passed" << std::endl;
    } else {
        std::cout << "acceptance: " << failures << " criterion(s) failed" << std::endl;
    }
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
