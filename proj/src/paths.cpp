#include "gspline/paths.hpp"

#include "gspline/errors.hpp"

namespace gspline {

PathAggregate path_lcm(const WeightedGraph& g, int w, int u,
                       const VertexPredicate& interior_filter, std::size_t limit) {
    PathAggregate agg;
    agg.from = w;
    agg.to = u;
    for (const Path& p : simple_paths(g, w, u, interior_filter, limit)) {
        agg.per_path_gcds.push_back(path_gcd(g, p));
    }
    agg.lcm_value = lcm_all(agg.per_path_gcds);
    return agg;
}

std::vector<Int> leading_terms_via_paths(const WeightedGraph& g, PathMethod method,
                                         std::size_t limit) {
    if (!is_simple(g)) throw NotSimple("leading_terms_via_paths requires a simple graph");
    if (!is_connected(g)) throw Disconnected("leading_terms_via_paths requires a connected graph");
    int n = g.vertex_count();
    if (n == 0) return {};

    std::vector<Int> terms;
    terms.reserve(n);
    terms.push_back(1);
    for (int i = 2; i <= n; ++i) {
        VertexPredicate filter;
        if (method == PathMethod::Shortcut) {
            filter = [i](int x) { return x > i; };
        }
        std::vector<Int> per_target;
        per_target.reserve(i - 1);
        for (int j = 1; j < i; ++j) {
            // An empty aggregate lcms to 1 and drops out, which is exactly
            // right when the shortcut leaves no admissible path to v_j.
            per_target.push_back(path_lcm(g, i, j, filter, limit).lcm_value);
        }
        terms.push_back(lcm_all(per_target));
    }
    return terms;
}

}  // namespace gspline
