#pragma once

#include "gspline/graph.hpp"

#include <vector>

namespace gspline {

// An integer vertex labeling (g_1,...,g_n) aligned to the graph's vertex
// order. Splines carry no back-reference to a graph: the same vector is
// checked against multiple graphs during collapse traces.
struct Spline {
    std::vector<Int> entries;

    bool operator==(const Spline&) const = default;
    bool is_zero() const;
};

// One violated defining congruence: entries across the edge differ by
// something not divisible by the weight.
struct Violation {
    int edge_id;
    int u, v;
    Int modulus;     // the edge weight
    Int difference;  // g_u - g_v

    bool operator==(const Violation&) const = default;
};

// Every violated edge, in edge order; empty means s is a spline on g.
struct VerifyReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
};

// Checks every defining equation g_u ≡ g_v (mod w). Works on multigraphs and
// disconnected graphs. Throws LengthMismatch.
VerifyReport verify(const WeightedGraph& g, const Spline& s);

// Number of leading zeros; n for the zero spline.
int flow_up_index(const Spline& s);

// First non-zero entry. Throws ZeroSpline.
Int leading_term(const Spline& s);

}  // namespace gspline
