#include "chiforge/graph.hpp"

#include <algorithm>

namespace chiforge {

Graph::Graph(int n, std::span<const std::pair<int, int>> edges, std::string label)
    : n_(n), adj_(static_cast<std::size_t>(n)), label_(std::move(label)) {
    if (n < 0 || n > kMaxVertices) {
        throw ConstructionError("vertex count " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxVertices) + "]");
    }
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ConstructionError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                    ") has an endpoint outside 0.." + std::to_string(n - 1));
        }
        if (u == v) {
            throw ConstructionError("loop at vertex " + std::to_string(u));
        }
        adj_[static_cast<std::size_t>(u)].set(v);
        adj_[static_cast<std::size_t>(v)].set(u);
    }
}

Graph graph_from_adjacency(int n, std::vector<VertexSet> adj, std::string label) {
    Graph g;
    g.n_ = n;
    g.adj_ = std::move(adj);
    g.label_ = std::move(label);
    return g;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += static_cast<std::size_t>(row.count());
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        for (int v = adj_[static_cast<std::size_t>(u)].next(u); v >= 0;
             v = adj_[static_cast<std::size_t>(u)].next(v)) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::complement() const {
    std::vector<VertexSet> adj(static_cast<std::size_t>(n_));
    VertexSet all = VertexSet::full(n_);
    for (int v = 0; v < n_; ++v) {
        adj[static_cast<std::size_t>(v)] = all.and_not(adj_[static_cast<std::size_t>(v)]);
        adj[static_cast<std::size_t>(v)].reset(v);
    }
    return graph_from_adjacency(n_, std::move(adj), label_);
}

std::pair<Graph, std::vector<int>> Graph::induced(const VertexSet& s) const {
    std::vector<int> old_of = s.to_vector();
    int m = static_cast<int>(old_of.size());
    std::vector<int> new_of(static_cast<std::size_t>(n_), -1);
    for (int i = 0; i < m; ++i) new_of[static_cast<std::size_t>(old_of[static_cast<std::size_t>(i)])] = i;
    std::vector<VertexSet> adj(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        VertexSet row = adj_[static_cast<std::size_t>(old_of[static_cast<std::size_t>(i)])] & s;
        for (int w : row) adj[static_cast<std::size_t>(i)].set(new_of[static_cast<std::size_t>(w)]);
    }
    return {graph_from_adjacency(m, std::move(adj)), std::move(old_of)};
}

bool Graph::is_independent_set(const VertexSet& s) const {
    for (int v : s) {
        if (adj_[static_cast<std::size_t>(v)].intersects(s)) return false;
    }
    return true;
}

bool Graph::is_clique(const VertexSet& s) const {
    for (int v : s) {
        VertexSet need = s;
        need.reset(v);
        if (!need.is_subset_of(adj_[static_cast<std::size_t>(v)])) return false;
    }
    return true;
}

std::vector<VertexSet> Graph::components_within(const VertexSet& s) const {
    std::vector<VertexSet> out;
    VertexSet left = s;
    while (!left.empty()) {
        VertexSet comp;
        VertexSet frontier;
        frontier.set(left.first());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next;
            for (int v : frontier) next |= adj_[static_cast<std::size_t>(v)] & s;
            frontier = next.and_not(comp);
        }
        out.push_back(comp);
        left = left.and_not(comp);
    }
    return out;
}

std::vector<VertexSet> Graph::co_components_within(const VertexSet& s) const {
    std::vector<VertexSet> out;
    VertexSet left = s;
    while (!left.empty()) {
        VertexSet comp;
        VertexSet frontier;
        frontier.set(left.first());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next;
            for (int v : frontier) {
                VertexSet non = s.and_not(adj_[static_cast<std::size_t>(v)]);
                non.reset(v);
                next |= non;
            }
            frontier = next.and_not(comp);
        }
        out.push_back(comp);
        left = left.and_not(comp);
    }
    return out;
}

std::vector<VertexSet> Graph::components() const { return components_within(vertices()); }

Coloring make_coloring(std::vector<int> color) {
    int k = 0;
    for (int c : color) k = std::max(k, c + 1);
    return Coloring{std::move(color), k};
}

bool is_proper(const Graph& g, const Coloring& c) {
    if (c.size() != g.order()) {
        throw ConstructionError("coloring covers " + std::to_string(c.size()) + " vertices, graph has " +
                                std::to_string(g.order()));
    }
    for (auto [u, v] : g.edges()) {
        if (c.color[static_cast<std::size_t>(u)] == c.color[static_cast<std::size_t>(v)]) return false;
    }
    return true;
}

Graph expansion(const Graph& g, std::span<const ExpansionPart> parts) {
    if (static_cast<int>(parts.size()) != g.order()) {
        throw ConstructionError("expansion needs one part per vertex: got " +
                                std::to_string(parts.size()) + " for order " + std::to_string(g.order()));
    }
    int total = 0;
    std::vector<int> base(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].size < 1) {
            throw ConstructionError("expansion part " + std::to_string(i) + " has order " +
                                    std::to_string(parts[i].size) + "; every part needs order >= 1");
        }
        base[i] = total;
        total += parts[i].size;
    }
    if (total > kMaxVertices) {
        throw ConstructionError("expansion order " + std::to_string(total) + " exceeds " +
                                std::to_string(kMaxVertices));
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].kind == PartKind::Clique) {
            for (int a = 0; a < parts[i].size; ++a)
                for (int b = a + 1; b < parts[i].size; ++b)
                    edges.emplace_back(base[i] + a, base[i] + b);
        }
    }
    for (auto [u, v] : g.edges()) {
        for (int a = 0; a < parts[static_cast<std::size_t>(u)].size; ++a)
            for (int b = 0; b < parts[static_cast<std::size_t>(v)].size; ++b)
                edges.emplace_back(base[static_cast<std::size_t>(u)] + a,
                                   base[static_cast<std::size_t>(v)] + b);
    }
    return Graph(total, edges, g.label());
}

}  // namespace chiforge
