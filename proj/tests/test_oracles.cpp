#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chiforge/generators.hpp"
#include "chiforge/oracles.hpp"
#include "chiforge/patterns.hpp"
#include "oracle_ref.hpp"

using namespace chiforge;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("max_clique on the small menagerie") {
    CHECK(max_clique(pattern_graph(PatternId::K5)).size == 5);
    CHECK(max_clique(pattern_graph(PatternId::C5)).size == 2);
    auto para = max_clique(pattern_graph(PatternId::Paraglider));
    CHECK(para.size == 3);
    CHECK(pattern_graph(PatternId::Paraglider).is_clique(para.members));
    CHECK(para.nodes_explored > 0);
    CHECK(max_clique(Graph(0, {})).size == 0);
}

TEST_CASE("chromatic_exact on the small menagerie") {
    CHECK(chromatic_exact(pattern_graph(PatternId::C5)).chi == 3);

    Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(chromatic_exact(k33).chi == 2);

    Graph blown = c5_expansion_family({2, 1, 1, 1, 1});
    auto r = chromatic_exact(blown);
    CHECK(r.chi == 3);
    CHECK(is_proper(blown, r.coloring));
    CHECK(r.coloring.k == 3);
}

TEST_CASE("oracles match brute enumeration, exhaustive n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph g = graph_from_mask(n, mask);
            auto cl = max_clique(g);
            CHECK(cl.size == testref::brute_omega(g));
            CHECK(g.is_clique(cl.members));
            CHECK(cl.members.count() == cl.size);
            auto ch = chromatic_exact(g);
            CHECK(ch.chi == testref::brute_chi(g));
            if (n > 0) CHECK(is_proper(g, ch.coloring));
        }
    }
}

TEST_CASE("oracles match brute enumeration on random graphs up to n = 10") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 6 + static_cast<int>(rng() % 5);
        Graph g = random_graph(n, 0.3 + 0.05 * (trial % 8), rng);
        CHECK(max_clique(g).size == testref::brute_omega(g));
        CHECK(chromatic_exact(g).chi == testref::brute_chi(g));
    }
}

TEST_CASE("alpha and theta through the complement") {
    CHECK(independence_number(pattern_graph(PatternId::K5)).size == 1);
    CHECK(clique_cover_exact(pattern_graph(PatternId::K5)).chi == 1);
    CHECK(independence_number(pattern_graph(PatternId::C5)).size == 2);
    CHECK(clique_cover_exact(pattern_graph(PatternId::C5)).chi == 3);

    auto theta = clique_cover_exact(pattern_graph(PatternId::Paraglider));
    CHECK(theta.chi == 2);
    // certificate classes are cliques of the original graph
    VertexSet cls0, cls1;
    for (int v = 0; v < 5; ++v) {
        (theta.coloring.color[static_cast<std::size_t>(v)] == 0 ? cls0 : cls1).set(v);
    }
    CHECK(pattern_graph(PatternId::Paraglider).is_clique(cls0));
    CHECK(pattern_graph(PatternId::Paraglider).is_clique(cls1));

    // the independence certificate is a stable set
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(4 + static_cast<int>(rng() % 6), 0.5, rng);
        auto a = independence_number(g);
        CHECK(g.is_independent_set(a.members));
        CHECK(a.size == testref::brute_alpha(g));
        CHECK(clique_cover_exact(g).chi == testref::brute_theta(g));
    }
}

TEST_CASE("sandwich and monotonicity") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(rng() % 10);
        Graph g = random_graph(n, 0.5, rng);
        auto cl = max_clique(g);
        auto ch = chromatic_exact(g);
        CHECK(cl.size <= ch.chi);
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (rng() % 2) s.set(v);
        CHECK(chromatic_exact(g.induced(s).first).chi <= ch.chi);
    }
}

TEST_CASE("perfection matches the definitional check, n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph g = graph_from_mask(n, mask);
            bool def = true;
            for (unsigned sub = 0; sub < (1u << n) && def; ++sub) {
                VertexSet s;
                for (int v = 0; v < n; ++v)
                    if ((sub >> v) & 1) s.set(v);
                Graph h = g.induced(s).first;
                if (chromatic_exact(h).chi != max_clique(h).size) def = false;
            }
            CHECK(is_perfect_small(g) == def);
        }
    }
}

TEST_CASE("budget exhaustion is an error carrying bounds") {
    std::mt19937_64 rng(3);
    Graph g = random_graph(24, 0.5, rng);
    CHECK_THROWS_AS(max_clique(g, Budget{10}), BudgetExceeded);
    try {
        chromatic_exact(g, Budget{10});
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.nodes > 10);
        CHECK(e.best_lower >= 0);
    }
    // budget that covers the clique phase but starves the color search:
    // the error carries the greedy upper-bound coloring
    std::mt19937_64 rng16(1);
    Graph g16 = random_graph(16, 0.5, rng16);
    REQUIRE(max_clique(g16).nodes_explored == 7);
    REQUIRE(dsatur_greedy(g16).k == 6);
    try {
        chromatic_exact(g16, Budget{9});
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.best_coloring.size() == 16);
        CHECK(e.best_upper == 6);
        CHECK(is_proper(g16, make_coloring(std::vector<int>(e.best_coloring))));
    }
}
