#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chiforge/errors.hpp"
#include "chiforge/vertex_set.hpp"

namespace chiforge {

// Immutable simple undirected graph, adjacency as per-vertex bitsets.
// All operations build new graphs; values are freely shareable across
// threads.
class Graph {
public:
    Graph() = default;

    // Validates endpoints, rejects loops, deduplicates edges.
    Graph(int n, std::span<const std::pair<int, int>> edges, std::string label = {});
    Graph(int n, std::initializer_list<std::pair<int, int>> edges, std::string label = {})
        : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()), std::move(label)) {}

    int order() const { return n_; }
    const std::string& label() const { return label_; }

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }
    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }

    VertexSet vertices() const { return VertexSet::full(n_); }

    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    Graph complement() const;

    // Subgraph induced by S. Vertex i of the result is the i-th smallest
    // member of S; the returned map sends new indices to old ones.
    std::pair<Graph, std::vector<int>> induced(const VertexSet& s) const;

    // True iff S has no internal edge / is pairwise adjacent.
    bool is_independent_set(const VertexSet& s) const;
    bool is_clique(const VertexSet& s) const;

    // Connected components, each as a vertex set, ordered by smallest member.
    std::vector<VertexSet> components() const;
    std::vector<VertexSet> components_within(const VertexSet& s) const;
    // Components of the complement restricted to S, without materializing it.
    std::vector<VertexSet> co_components_within(const VertexSet& s) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    Graph with_label(std::string label) const {
        Graph g = *this;
        g.label_ = std::move(label);
        return g;
    }

private:
    friend Graph graph_from_adjacency(int n, std::vector<VertexSet> adj, std::string label);
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::string label_;
};

// Unchecked assembly from a symmetric, irreflexive adjacency (internal fast
// path for decoders and mask enumeration).
Graph graph_from_adjacency(int n, std::vector<VertexSet> adj, std::string label = {});

inline Graph new_graph(int n, std::span<const std::pair<int, int>> edges, std::string label = {}) {
    return Graph(n, edges, std::move(label));
}

// Vertex -> color index map with its declared color count.
struct Coloring {
    std::vector<int> color;
    int k = 0;

    int size() const { return static_cast<int>(color.size()); }
};

// Normalizes k to 1 + max index (0 when empty).
Coloring make_coloring(std::vector<int> color);

// True iff no edge is monochromatic. Throws on a domain mismatch.
bool is_proper(const Graph& g, const Coloring& c);

enum class PartKind { Clique, Independent };

struct ExpansionPart {
    int size = 1;
    PartKind kind = PartKind::Independent;
};

// Substitutes part i for vertex i of g: internally complete or edgeless per
// kind, cross-part edges exactly where g has edges. Every part must have
// order >= 1.
Graph expansion(const Graph& g, std::span<const ExpansionPart> parts);

}  // namespace chiforge
