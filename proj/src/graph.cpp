#include "gspline/graph.hpp"

#include "gspline/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace gspline {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 0) throw DomainError("vertex count must be non-negative");
    if (labels_.empty()) {
        labels_.reserve(n_);
        for (int i = 1; i <= n_; ++i) labels_.push_back("v" + std::to_string(i));
    }
    if (static_cast<int>(labels_.size()) != n_) {
        throw DomainError("label count does not match vertex count");
    }
    std::set<int> seen_ids;
    for (Edge& e : edges_) {
        if (e.u < 1 || e.u > n_) throw InvalidVertex(e.u);
        if (e.v < 1 || e.v > n_) throw InvalidVertex(e.v);
        if (e.u == e.v) throw DomainError("self-loops are not allowed");
        if (e.w < 1) throw DomainError("edge weights must be >= 1");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.id < 1 || !seen_ids.insert(e.id).second) {
            throw DomainError("edge ids must be positive and unique");
        }
    }
    adj_.assign(n_, {});
    for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
        const Edge& e = edges_[idx];
        adj_[e.u - 1].emplace_back(e.v, idx);
        adj_[e.v - 1].emplace_back(e.u, idx);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end(), [this](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return edges_[a.second].id < edges_[b.second].id;
        });
    }
}

const std::string& WeightedGraph::label(int v) const {
    check_vertex(v);
    return labels_[v - 1];
}

const Edge& WeightedGraph::edge_by_id(int id) const {
    for (const Edge& e : edges_) {
        if (e.id == id) return e;
    }
    throw DomainError("no edge with id " + std::to_string(id));
}

bool WeightedGraph::has_edge_id(int id) const {
    for (const Edge& e : edges_) {
        if (e.id == id) return true;
    }
    return false;
}

int WeightedGraph::max_edge_id() const {
    int m = 0;
    for (const Edge& e : edges_) m = std::max(m, e.id);
    return m;
}

int WeightedGraph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v - 1].size());
}

std::vector<StarEdge> WeightedGraph::star(int v) const {
    check_vertex(v);
    std::vector<StarEdge> out;
    out.reserve(adj_[v - 1].size());
    for (const auto& [nbr, idx] : adj_[v - 1]) {
        out.push_back({nbr, edges_[idx].w, edges_[idx].id});
    }
    return out;
}

void WeightedGraph::check_vertex(int v) const {
    if (v < 1 || v > n_) throw InvalidVertex(v);
}

WeightedGraph make_graph(int n, const std::vector<std::tuple<int, int, Int>>& edges,
                         std::vector<std::string> labels) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    int id = 1;
    for (const auto& [u, v, w] : edges) {
        es.push_back({u, v, w, id++});
    }
    return WeightedGraph(n, std::move(es), std::move(labels));
}

bool is_connected(const WeightedGraph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const StarEdge& s : g.star(v)) {
            if (!seen[s.neighbor]) {
                seen[s.neighbor] = 1;
                ++count;
                stack.push_back(s.neighbor);
            }
        }
    }
    return count == n;
}

bool is_simple(const WeightedGraph& g) {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges()) {
        if (!seen.insert({e.u, e.v}).second) return false;
    }
    return true;
}

std::vector<Path> simple_paths(const WeightedGraph& g, int from, int to,
                               const VertexPredicate& interior_filter, std::size_t limit) {
    g.check_vertex(from);
    g.check_vertex(to);
    if (from == to) throw DomainError("simple_paths: endpoints must differ");

    std::vector<Path> out;
    std::vector<char> used(g.vertex_count() + 1, 0);
    Path current;
    current.vertices.push_back(from);
    used[from] = 1;

    auto dfs = [&](auto&& self, int at) -> void {
        for (const StarEdge& s : g.star(at)) {
            if (s.neighbor == to) {
                if (out.size() >= limit) throw PathExplosion(limit, out.size());
                Path p = current;
                p.vertices.push_back(to);
                p.edge_ids.push_back(s.edge_id);
                out.push_back(std::move(p));
            } else if (!used[s.neighbor] && (!interior_filter || interior_filter(s.neighbor))) {
                used[s.neighbor] = 1;
                current.vertices.push_back(s.neighbor);
                current.edge_ids.push_back(s.edge_id);
                self(self, s.neighbor);
                current.vertices.pop_back();
                current.edge_ids.pop_back();
                used[s.neighbor] = 0;
            }
        }
    };
    dfs(dfs, from);
    return out;
}

Int path_gcd(const WeightedGraph& g, const Path& p) {
    if (p.vertices.size() != p.edge_ids.size() + 1) {
        throw DomainError("path_gcd: malformed path");
    }
    std::vector<Int> weights;
    weights.reserve(p.edge_ids.size());
    for (std::size_t k = 0; k < p.edge_ids.size(); ++k) {
        const Edge& e = g.edge_by_id(p.edge_ids[k]);
        int a = p.vertices[k], b = p.vertices[k + 1];
        if (std::minmax(a, b) != std::minmax(e.u, e.v)) {
            throw DomainError("path_gcd: edge does not join consecutive path vertices");
        }
        weights.push_back(e.w);
    }
    return gcd_all(weights);
}

WeightedGraph permuted(const WeightedGraph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) {
        throw DomainError("permutation length does not match vertex count");
    }
    std::vector<int> new_index(n + 1, 0);  // old -> new
    for (int k = 1; k <= n; ++k) {
        int old = order[k - 1];
        if (old < 1 || old > n || new_index[old] != 0) {
            throw DomainError("order is not a permutation of 1..n");
        }
        new_index[old] = k;
    }
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) {
        e.u = new_index[e.u];
        e.v = new_index[e.v];
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v, a.id) < std::tie(b.u, b.v, b.id);
    });
    std::vector<std::string> labels(n);
    for (int old = 1; old <= n; ++old) labels[new_index[old] - 1] = g.label(old);
    return WeightedGraph(n, std::move(edges), std::move(labels));
}

bool structurally_equal(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.labels() != b.labels()) return false;
    auto key = [](const WeightedGraph& g) {
        std::vector<std::tuple<int, int, Int>> k;
        k.reserve(g.edges().size());
        for (const Edge& e : g.edges()) k.emplace_back(e.u, e.v, e.w);
        std::sort(k.begin(), k.end());
        return k;
    };
    return key(a) == key(b);
}

}  // namespace gspline
