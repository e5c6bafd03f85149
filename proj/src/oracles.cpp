#include "chiforge/oracles.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace chiforge {

namespace {

struct CliqueSearch {
    const Graph& g;
    std::uint64_t max_nodes = 0;
    std::uint64_t nodes = 0;
    VertexSet best{};
    int best_size = 0;
    VertexSet current{};
    int cur_size = 0;

    void expand(VertexSet p) {
        if (++nodes > max_nodes) {
            throw BudgetExceeded("clique search exceeded node budget", nodes, best_size, g.order());
        }
        if (p.empty()) {
            if (cur_size > best_size) {
                best_size = cur_size;
                best = current;
            }
            return;
        }
        // Greedy color classes over the candidates; class index bounds the
        // clique extension, so iterate in reverse class order and prune.
        std::vector<std::pair<int, int>> order;
        order.reserve(static_cast<std::size_t>(p.count()));
        VertexSet rest = p;
        int c = 0;
        while (!rest.empty()) {
            ++c;
            VertexSet avail = rest;
            while (!avail.empty()) {
                int v = avail.first();
                order.emplace_back(v, c);
                rest.reset(v);
                avail.reset(v);
                avail = avail.and_not(g.neighbors(v));
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            auto [v, bound] = *it;
            if (cur_size + bound <= best_size) return;
            current.set(v);
            ++cur_size;
            expand(p & g.neighbors(v));
            current.reset(v);
            --cur_size;
            p.reset(v);
        }
    }
};

}  // namespace

CliqueResult max_clique(const Graph& g, Budget budget) {
    if (g.order() == 0) return {0, {}, 0};
    CliqueSearch search{g, budget.max_nodes};
    search.expand(g.vertices());
    return {search.best_size, search.best, search.nodes};
}

Coloring dsatur_greedy(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<VertexSet> nbr_colors(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int v = -1;
        int sat = -1;
        for (int u = 0; u < n; ++u) {
            if (color[static_cast<std::size_t>(u)] >= 0) continue;
            int s = nbr_colors[static_cast<std::size_t>(u)].count();
            if (s > sat) {
                sat = s;
                v = u;
            }
        }
        int c = 0;
        while (nbr_colors[static_cast<std::size_t>(v)].test(c)) ++c;
        color[static_cast<std::size_t>(v)] = c;
        for (int w : g.neighbors(v)) nbr_colors[static_cast<std::size_t>(w)].set(c);
    }
    return make_coloring(std::move(color));
}

namespace {

struct ColorSearch {
    const Graph& g;
    int k;
    std::uint64_t max_nodes;
    std::uint64_t& nodes;
    int fallback_ub;
    std::vector<int> color;
    // per-(vertex, color) count of colored neighbors; saturation bitsets
    // follow the zero/nonzero transitions, so undo needs no allocation
    std::vector<std::vector<std::uint16_t>> cnt;
    std::vector<VertexSet> nbr_colors;
    int used = 0;

    ColorSearch(const Graph& g, int k, std::uint64_t max_nodes, std::uint64_t& nodes, int ub)
        : g(g),
          k(k),
          max_nodes(max_nodes),
          nodes(nodes),
          fallback_ub(ub),
          color(static_cast<std::size_t>(g.order()), -1),
          cnt(static_cast<std::size_t>(g.order()),
              std::vector<std::uint16_t>(static_cast<std::size_t>(k), 0)),
          nbr_colors(static_cast<std::size_t>(g.order())) {}

    void place(int v, int c) {
        color[static_cast<std::size_t>(v)] = c;
        for (int w : g.neighbors(v)) {
            if (cnt[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)]++ == 0) {
                nbr_colors[static_cast<std::size_t>(w)].set(c);
            }
        }
    }

    void unplace(int v, int c) {
        color[static_cast<std::size_t>(v)] = -1;
        for (int w : g.neighbors(v)) {
            if (--cnt[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)] == 0) {
                nbr_colors[static_cast<std::size_t>(w)].reset(c);
            }
        }
    }

    bool solve(int colored) {
        if (++nodes > max_nodes) {
            throw BudgetExceeded("coloring search exceeded node budget", nodes, k, fallback_ub);
        }
        const int n = g.order();
        if (colored == n) return true;
        int v = -1;
        int sat = -1;
        for (int u = 0; u < n; ++u) {
            if (color[static_cast<std::size_t>(u)] >= 0) continue;
            int s = nbr_colors[static_cast<std::size_t>(u)].count();
            if (s > sat) {
                sat = s;
                v = u;
            }
        }
        // A fresh color index may only enter as the next unused one.
        const int limit = std::min(k - 1, used);
        for (int c = 0; c <= limit; ++c) {
            if (nbr_colors[static_cast<std::size_t>(v)].test(c)) continue;
            int prev_used = used;
            used = std::max(used, c + 1);
            place(v, c);
            if (solve(colored + 1)) return true;
            unplace(v, c);
            used = prev_used;
        }
        return false;
    }
};

}  // namespace

ChromaticResult chromatic_exact(const Graph& g, Budget budget) {
    const int n = g.order();
    if (n == 0) return {0, Coloring{}, 0};
    CliqueResult clique = max_clique(g, budget);
    std::uint64_t nodes = clique.nodes_explored;
    Coloring greedy = dsatur_greedy(g);
    const int lb = clique.size;
    const int ub = greedy.k;
    for (int k = lb; k < ub; ++k) {
        ColorSearch search(g, k, budget.max_nodes, nodes, ub);
        try {
            if (search.solve(0)) {
                return {k, make_coloring(std::move(search.color)), nodes};
            }
        } catch (BudgetExceeded& e) {
            e.best_coloring = greedy.color;
            throw;
        }
    }
    return {ub, std::move(greedy), nodes};
}

CliqueResult independence_number(const Graph& g, Budget budget) {
    CliqueResult r = max_clique(g.complement(), budget);
    return r;  // vertex ids coincide; a complement clique is a stable set here
}

ChromaticResult clique_cover_exact(const Graph& g, Budget budget) {
    ChromaticResult r = chromatic_exact(g.complement(), budget);
    return r;  // color classes are cliques of g
}

}  // namespace chiforge
