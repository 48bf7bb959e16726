#include "gspline/collapse.hpp"

#include "gspline/errors.hpp"

#include <algorithm>
#include <tuple>

namespace gspline {

std::pair<WeightedGraph, StarCliqueStep> star_clique(const WeightedGraph& g, int v) {
    if (!is_simple(g)) throw NotSimple("star_clique requires a simple graph");
    g.check_vertex(v);
    int n = g.vertex_count();

    StarCliqueStep step;
    step.removed = v;
    for (const StarEdge& s : g.star(v)) {  // sorted by neighbor
        step.neighbors.push_back(s.neighbor);
        step.star_weights.push_back(s.weight);
    }
    step.index_remap.resize(n);
    for (int k = 1; k <= n; ++k) {
        step.index_remap[k - 1] = k < v ? k : (k == v ? 0 : k - 1);
    }

    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (e.u == v || e.v == v) continue;
        Edge kept = e;
        kept.u = step.index_remap[e.u - 1];
        kept.v = step.index_remap[e.v - 1];
        edges.push_back(kept);
    }
    int next_id = g.max_edge_id() + 1;
    for (std::size_t i = 0; i < step.neighbors.size(); ++i) {
        for (std::size_t j = i + 1; j < step.neighbors.size(); ++j) {
            Int w = gcd(step.star_weights[i], step.star_weights[j]);
            step.new_edges.push_back({step.neighbors[i], step.neighbors[j], w});
            edges.push_back({step.index_remap[step.neighbors[i] - 1],
                             step.index_remap[step.neighbors[j] - 1], w, next_id++});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v, a.id) < std::tie(b.u, b.v, b.id);
    });

    std::vector<std::string> labels;
    labels.reserve(n - 1);
    for (int k = 1; k <= n; ++k) {
        if (k != v) labels.push_back(g.label(k));
    }
    return {WeightedGraph(n - 1, std::move(edges), std::move(labels)), std::move(step)};
}

std::pair<WeightedGraph, std::vector<EdgeCollapseStep>> edge_collapse_all(const WeightedGraph& g) {
    // Group parallel edges by endpoint pair, keeping edge-id order inside a group.
    std::map<std::pair<int, int>, std::vector<Edge>> groups;
    for (const Edge& e : g.edges()) groups[{e.u, e.v}].push_back(e);
    for (auto& [pair, group] : groups) {
        std::sort(group.begin(), group.end(),
                  [](const Edge& a, const Edge& b) { return a.id < b.id; });
    }

    std::vector<EdgeCollapseStep> steps;
    std::vector<Edge> edges;
    int next_id = g.max_edge_id() + 1;
    for (auto& [pair, group] : groups) {
        if (group.size() == 1) {
            edges.push_back(group.front());
            continue;
        }
        EdgeCollapseStep step;
        step.u = pair.first;
        step.v = pair.second;
        for (const Edge& e : group) step.merged_weights.push_back(e.w);
        step.new_weight = lcm_all(step.merged_weights);
        edges.push_back({pair.first, pair.second, step.new_weight, next_id++});
        steps.push_back(std::move(step));
    }
    return {WeightedGraph(g.vertex_count(), std::move(edges), g.labels()), std::move(steps)};
}

std::pair<WeightedGraph, std::vector<CollapseStep>> collapse_once(const WeightedGraph& g, int v) {
    if (g.vertex_count() < 2) throw DomainError("collapse_once needs at least two vertices");
    auto [after_star, star_step] = star_clique(g, v);
    auto [result, collapse_steps] = edge_collapse_all(after_star);
    std::vector<CollapseStep> steps;
    steps.emplace_back(std::move(star_step));
    for (auto& s : collapse_steps) steps.emplace_back(std::move(s));
    return {std::move(result), std::move(steps)};
}

const WeightedGraph& CollapseSequence::level(int i) const {
    int n = vertex_count();
    if (i < 1 || i > n) throw DomainError("no collapse stage with " + std::to_string(i) + " vertices");
    return graphs[n - i];
}

CollapseSequence complete_collapse(const WeightedGraph& g) {
    if (g.vertex_count() < 1) throw DomainError("complete_collapse needs at least one vertex");
    if (!is_simple(g)) throw NotSimple("complete_collapse requires a simple graph");
    if (!is_connected(g)) throw Disconnected("complete_collapse requires a connected graph");

    CollapseSequence seq;
    seq.graphs.push_back(g);
    for (int i = g.vertex_count(); i >= 2; --i) {
        const WeightedGraph& cur = seq.graphs.back();
        // Removing the top index leaves indices 1..i-1 untouched, so v_i is
        // literally vertex i in G_i.
        std::vector<Int> weights;
        for (const StarEdge& s : cur.star(i)) weights.push_back(s.weight);
        seq.star_weights_of[i] = std::move(weights);

        auto [next, steps] = collapse_once(cur, i);
        for (auto& s : steps) seq.steps.emplace_back(std::move(s));
        seq.graphs.push_back(std::move(next));
    }
    return seq;
}

}  // namespace gspline
