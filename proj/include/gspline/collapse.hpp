#pragma once

#include "gspline/graph.hpp"

#include <map>
#include <utility>
#include <variant>
#include <vector>

namespace gspline {

// Record of one star-clique operation. Vertex indices refer to the graph the
// operation was applied to; `index_remap` maps those onto the result graph
// (0 for the removed vertex), so traces can be replayed and splines re-aligned.
struct StarCliqueStep {
    int removed = 0;
    std::vector<int> neighbors;   // ascending
    std::vector<Int> star_weights;  // aligned with neighbors
    struct NewEdge {
        int u, v;  // pre-removal indices
        Int w;     // gcd of the two star weights
    };
    std::vector<NewEdge> new_edges;  // C(d,2) entries, sorted by endpoints
    std::vector<int> index_remap;    // index_remap[k-1] = new index of old v_k
};

// Record of collapsing r >= 2 parallel edges into one of weight lcm.
struct EdgeCollapseStep {
    int u = 0, v = 0;
    std::vector<Int> merged_weights;  // in edge-id order
    Int new_weight;
};

using CollapseStep = std::variant<StarCliqueStep, EdgeCollapseStep>;

// Removes v and its star, then joins every pair of former neighbors with an
// edge weighted by the gcd of their star weights. The result may be a
// multigraph. Surviving vertices keep their relative order; indices above v
// shift down by one. Throws NotSimple on multigraph input, InvalidVertex.
std::pair<WeightedGraph, StarCliqueStep> star_clique(const WeightedGraph& g, int v);

// Replaces every family of parallel edges by a single edge weighted with the
// lcm of the family. Endpoint pairs are processed in sorted order; the output
// is simple. Already-simple input comes back unchanged with no steps.
std::pair<WeightedGraph, std::vector<EdgeCollapseStep>> edge_collapse_all(const WeightedGraph& g);

// star_clique on v followed by edge_collapse_all. For simple connected input
// the result is simple and connected with one fewer vertex.
std::pair<WeightedGraph, std::vector<CollapseStep>> collapse_once(const WeightedGraph& g, int v);

// The chain G_n, G_{n-1}, ..., G_1 obtained by removing the highest-indexed
// vertex at each stage, with per-stage metadata.
struct CollapseSequence {
    std::vector<WeightedGraph> graphs;  // graphs[k] = G_{n-k}; G_1 is a lone vertex
    std::vector<CollapseStep> steps;
    // Star weights {c_1,...,c_d} of v_i read off G_i just before its removal.
    std::map<int, std::vector<Int>> star_weights_of;

    int vertex_count() const { return graphs.front().vertex_count(); }

    // G_i, the stage with i vertices.
    const WeightedGraph& level(int i) const;
};

// Collapses v_n, v_{n-1}, ..., v_2 in turn. Requires a simple connected graph
// with n >= 1; throws NotSimple / Disconnected.
CollapseSequence complete_collapse(const WeightedGraph& g);

}  // namespace gspline
