#include "chiforge/subsolvers.hpp"

#include <algorithm>

namespace chiforge {

namespace {

std::optional<Cotree> build_cotree_within(const Graph& g, const VertexSet& s) {
    if (s.count() == 1) return Cotree{Cotree::Kind::Leaf, s.first(), {}};
    auto comps = g.components_within(s);
    Cotree::Kind kind = Cotree::Kind::Union;
    if (comps.size() == 1) {
        comps = g.co_components_within(s);
        if (comps.size() == 1) return std::nullopt;
        kind = Cotree::Kind::Join;
    }
    Cotree node{kind, -1, {}};
    node.children.reserve(comps.size());
    for (const auto& c : comps) {
        auto child = build_cotree_within(g, c);
        if (!child) return std::nullopt;
        node.children.push_back(std::move(*child));
    }
    return node;
}

}  // namespace

std::optional<Cotree> build_cotree(const Graph& g) {
    if (g.order() == 0) return Cotree{Cotree::Kind::Union, -1, {}};
    return build_cotree_within(g, g.vertices());
}

namespace {

// Colors the subtree into `color` starting at index 0; returns colors used.
int color_cotree(const Cotree& t, std::vector<int>& color) {
    switch (t.kind) {
        case Cotree::Kind::Leaf:
            color[static_cast<std::size_t>(t.vertex)] = 0;
            return 1;
        case Cotree::Kind::Union: {
            int k = 0;
            for (const auto& c : t.children) k = std::max(k, color_cotree(c, color));
            return k;
        }
        case Cotree::Kind::Join: {
            int offset = 0;
            for (const auto& c : t.children) {
                std::vector<int> sub(color.size(), -1);
                int k = color_cotree(c, sub);
                for (std::size_t v = 0; v < sub.size(); ++v) {
                    if (sub[v] >= 0) color[v] = sub[v] + offset;
                }
                offset += k;
            }
            return offset;
        }
    }
    return 0;
}

}  // namespace

Coloring color_cograph(const Graph& g) {
    auto tree = build_cotree(g);
    if (!tree) {
        throw NotCograph("graph has a subset connected in both senses; not a cograph");
    }
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    int k = color_cotree(*tree, color);
    return Coloring{std::move(color), g.order() == 0 ? 0 : k};
}

Coloring color_chordal(const Graph& g) {
    auto visit = mcs_visit_order(g);
    if (!is_peo_reverse(g, visit)) {
        throw NotChordal("maximum cardinality search order failed elimination check");
    }
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    for (int v : visit) {
        VertexSet taken;
        for (int w : g.neighbors(v)) {
            if (color[static_cast<std::size_t>(w)] >= 0) taken.set(color[static_cast<std::size_t>(w)]);
        }
        int c = 0;
        while (taken.test(c)) ++c;
        color[static_cast<std::size_t>(v)] = c;
    }
    return make_coloring(std::move(color));
}

Coloring color_pseudo_split(const Graph& g) {
    const int n = g.order();
    if (n == 0) return Coloring{};
    auto c5 = find_c5(g);
    if (!c5) {
        // (2K2, C4, C5)-free input is a split graph, hence chordal.
        try {
            return color_chordal(g);
        } catch (const NotChordal&) {
            throw NotPseudoSplit("C5-free input is not chordal; not a pseudo-split graph");
        }
    }
    VertexSet cycle = c5->vertex_set();
    VertexSet clique_side;
    VertexSet stable_side;
    for (int v = 0; v < n; ++v) {
        if (cycle.test(v)) continue;
        VertexSet hits = g.neighbors(v) & cycle;
        if (hits == cycle) {
            clique_side.set(v);
        } else if (hits.empty()) {
            stable_side.set(v);
        } else {
            throw NotPseudoSplit("vertex " + std::to_string(v) +
                                 " sees the C5 partially; not a pseudo-split graph");
        }
    }
    if (!g.is_clique(clique_side)) {
        throw NotPseudoSplit("vertices complete to the C5 do not form a clique");
    }
    if (!g.is_independent_set(stable_side)) {
        throw NotPseudoSplit("vertices anticomplete to the C5 are not independent");
    }
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v : clique_side) color[static_cast<std::size_t>(v)] = next++;
    // C5 needs exactly three colors beyond the clique side.
    static constexpr int kCyclePattern[5] = {0, 1, 0, 1, 2};
    for (int i = 0; i < 5; ++i) {
        color[static_cast<std::size_t>(c5->mapping[static_cast<std::size_t>(i)])] =
            next + kCyclePattern[i];
    }
    next += 3;
    // Stable-side neighbors all sit in the clique side, so a free color
    // always exists below `next`.
    for (int v : stable_side) {
        VertexSet taken;
        for (int w : g.neighbors(v)) {
            if (color[static_cast<std::size_t>(w)] >= 0) taken.set(color[static_cast<std::size_t>(w)]);
        }
        int c = 0;
        while (taken.test(c)) ++c;
        color[static_cast<std::size_t>(v)] = c;
    }
    return make_coloring(std::move(color));
}

Coloring color_cobipartite(const Graph& g, const VertexSet& side1, const VertexSet& side2) {
    if ((side1 & side2).any() || (side1 | side2) != g.vertices()) {
        throw ConstructionError("sides must partition the vertex set");
    }
    if (!g.is_clique(side1) || !g.is_clique(side2)) {
        throw ConstructionError("each side of a co-bipartite graph must be a clique");
    }
    // Maximum matching on the non-edges across the sides (Kuhn augmenting
    // paths); each matched pair shares one color.
    std::vector<int> left = side1.to_vector();
    std::vector<int> match_of_right(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> match_of_left(static_cast<std::size_t>(g.order()), -1);
    auto try_augment = [&](auto&& self, int u, VertexSet& visited) -> bool {
        VertexSet options = side2.and_not(g.neighbors(u));
        for (int v : options) {
            if (visited.test(v)) continue;
            visited.set(v);
            if (match_of_right[static_cast<std::size_t>(v)] < 0 ||
                self(self, match_of_right[static_cast<std::size_t>(v)], visited)) {
                match_of_right[static_cast<std::size_t>(v)] = u;
                match_of_left[static_cast<std::size_t>(u)] = v;
                return true;
            }
        }
        return false;
    };
    for (int u : left) {
        VertexSet visited;
        try_augment(try_augment, u, visited);
    }
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (int u : side1) {
        color[static_cast<std::size_t>(u)] = next;
        if (match_of_left[static_cast<std::size_t>(u)] >= 0) {
            color[static_cast<std::size_t>(match_of_left[static_cast<std::size_t>(u)])] = next;
        }
        ++next;
    }
    for (int v : side2) {
        if (color[static_cast<std::size_t>(v)] < 0) color[static_cast<std::size_t>(v)] = next++;
    }
    return make_coloring(std::move(color));
}

Coloring color_multipartite(const Graph& g) {
    if (g.order() == 0) return Coloring{};
    auto parts = g.co_components_within(g.vertices());
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (const auto& part : parts) {
        if (!g.is_independent_set(part)) {
            throw NotMultipartite("complement component is not a clique; not complete multipartite");
        }
        for (int v : part) color[static_cast<std::size_t>(v)] = next;
        ++next;
    }
    return make_coloring(std::move(color));
}

Coloring color_exact_assert(const Graph& g, int bound, Budget budget) {
    ChromaticResult r = chromatic_exact(g, budget);
    if (r.chi > bound) throw BoundViolated(r.chi, bound);
    return std::move(r.coloring);
}

Coloring color_paw_block(const Graph& g, Budget budget) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    int k = 0;
    // 2K2-freeness leaves at most one component with an edge; isolated
    // vertices reuse color 0, components share the palette.
    for (const auto& comp : g.components()) {
        if (comp.count() == 1) {
            color[static_cast<std::size_t>(comp.first())] = 0;
            k = std::max(k, 1);
            continue;
        }
        auto [sub, old_of] = g.induced(comp);
        Coloring sub_coloring;
        try {
            sub_coloring = color_multipartite(sub);
        } catch (const NotMultipartite&) {
            try {
                sub_coloring = color_exact_assert(sub, 3, budget);
            } catch (const BoundViolated& e) {
                throw NotInClass("component is neither complete multipartite nor 3-colorable (chi=" +
                                 std::to_string(e.chi) + "); not (2K2, paw)-free");
            }
        }
        for (int i = 0; i < sub.order(); ++i) {
            color[static_cast<std::size_t>(old_of[static_cast<std::size_t>(i)])] =
                sub_coloring.color[static_cast<std::size_t>(i)];
        }
        k = std::max(k, sub_coloring.k);
    }
    return Coloring{std::move(color), k};
}

Coloring color_diamond_block(const Graph& g, Budget budget) {
    if (g.order() == 0) return Coloring{};
    CliqueResult omega = max_clique(g, budget);
    try {
        return color_exact_assert(g, omega.size + 1, budget);
    } catch (const BoundViolated& e) {
        throw NotInClass("chi=" + std::to_string(e.chi) + " exceeds omega+1=" +
                         std::to_string(e.bound) + "; not (2K2, diamond)-free");
    }
}

}  // namespace chiforge
