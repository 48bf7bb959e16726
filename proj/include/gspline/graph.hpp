#pragma once

#include "gspline/numtheory.hpp"

#include <functional>
#include <string>
#include <tuple>
#include <vector>

namespace gspline {

// Default cap on exhaustive path enumeration; the CLI exposes it as
// --path-limit / SPLINE_PATH_LIMIT.
inline constexpr std::size_t kDefaultPathLimit = 100000;

// One edge of a weighted multigraph. Endpoints are 1-based positions in the
// graph's vertex order, normalized so u < v. Parallel edges are permitted and
// carry distinct ids; self-loops are not.
struct Edge {
    int u = 0;
    int v = 0;
    Int w;
    int id = 0;
};

// An incident edge as seen from a vertex.
struct StarEdge {
    int neighbor;
    Int weight;
    int edge_id;
};

// Ordered-vertex weighted multigraph. The vertex order v_1..v_n is part of the
// data model: flow-up classes, collapse order and basis indices all key off it.
// Immutable after construction; all queries are read-only.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const;
    const Edge& edge_by_id(int id) const;
    bool has_edge_id(int id) const;
    int max_edge_id() const;

    int degree(int v) const;  // counting multiplicity

    // All incident edges of v with their far endpoints, sorted by
    // (neighbor index, edge id).
    std::vector<StarEdge> star(int v) const;

    // Throws InvalidVertex unless 1 <= v <= n.
    void check_vertex(int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::pair<int, std::size_t>>> adj_;  // (neighbor, edge index)
};

// Convenience constructor assigning edge ids 1..m in input order.
WeightedGraph make_graph(int n, const std::vector<std::tuple<int, int, Int>>& edges,
                         std::vector<std::string> labels = {});

// A simple path: pairwise-distinct vertices plus the chosen edge between each
// consecutive pair (the choice matters in multigraphs).
struct Path {
    std::vector<int> vertices;
    std::vector<int> edge_ids;

    bool operator==(const Path&) const = default;
};

// True iff every vertex is reachable from v_1. Graphs with zero or one vertex
// are vacuously connected.
bool is_connected(const WeightedGraph& g);

// True iff no two edges share the same endpoint pair.
bool is_simple(const WeightedGraph& g);

using VertexPredicate = std::function<bool(int)>;

// All simple paths from `from` to `to` whose interior vertices satisfy the
// filter. Endpoints are exempt from the filter. Deterministic order (DFS over
// adjacency sorted by neighbor then edge id). Throws PathExplosion when more
// than `limit` paths exist.
std::vector<Path> simple_paths(const WeightedGraph& g, int from, int to,
                               const VertexPredicate& interior_filter,
                               std::size_t limit = kDefaultPathLimit);

// gcd of the edge weights along p. Validates that p is a path of g.
Int path_gcd(const WeightedGraph& g, const Path& p);

// Re-orders the vertices: new v_k is old v_{order[k-1]}. `order` must be a
// permutation of 1..n. Edge ids are preserved.
WeightedGraph permuted(const WeightedGraph& g, const std::vector<int>& order);

// Structural equality: same vertex count, labels, and edge multiset (by
// endpoints and weight; ids are internal tags and ignored).
bool structurally_equal(const WeightedGraph& a, const WeightedGraph& b);

}  // namespace gspline
