#pragma once

#include "gspline/graph.hpp"

#include <vector>

namespace gspline {

// lcm of the per-path gcds over a set of simple paths between two vertices.
struct PathAggregate {
    int from = 0;
    int to = 0;
    std::vector<Int> per_path_gcds;  // in enumeration order
    Int lcm_value;                   // lcm of the gcds; 1 for an empty set
};

// Enumerates simple paths from w to u whose interior vertices pass the filter,
// gcds each path's weights, and lcms the results. Invariant under collapsing
// operations. Throws PathExplosion.
PathAggregate path_lcm(const WeightedGraph& g, int w, int u,
                       const VertexPredicate& interior_filter = {},
                       std::size_t limit = kDefaultPathLimit);

enum class PathMethod {
    // Only paths from v_i that stop at the first vertex of index < i, i.e.
    // all interior vertices have index > i. The default.
    Shortcut,
    // Every simple path from v_i to every v_j with j < i. Kept as a test
    // oracle for the shortcut; the extra paths only contribute divisors of
    // terms already present.
    AllPaths,
};

// The collapse-free route to the basis leading terms: L(M_1) = 1 and
// L(M_i) = lcm over j < i of path_lcm(v_i, v_j). Requires a simple connected
// graph.
std::vector<Int> leading_terms_via_paths(const WeightedGraph& g,
                                         PathMethod method = PathMethod::Shortcut,
                                         std::size_t limit = kDefaultPathLimit);

}  // namespace gspline
