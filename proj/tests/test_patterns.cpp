#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chiforge/generators.hpp"
#include "chiforge/patterns.hpp"
#include "oracle_ref.hpp"

using namespace chiforge;

namespace {

const Graph& c5() { return pattern_graph(PatternId::C5); }

Graph join_with_apex(const Graph& base) {
    std::vector<std::pair<int, int>> edges = base.edges();
    for (int v = 0; v < base.order(); ++v) edges.emplace_back(v, base.order());
    return Graph(base.order() + 1, edges);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("catalog shapes match their join constructions") {
    CHECK(testref::brute_isomorphic(pattern_graph(PatternId::Gem),
                                    join_with_apex(pattern_graph(PatternId::P4))));
    CHECK(testref::brute_isomorphic(pattern_graph(PatternId::Wheel4),
                                    join_with_apex(pattern_graph(PatternId::C4))));
    CHECK(testref::brute_isomorphic(pattern_graph(PatternId::Hvn),
                                    join_with_apex(pattern_graph(PatternId::Paw))));
    CHECK(testref::brute_isomorphic(pattern_graph(PatternId::K5MinusE),
                                    join_with_apex(pattern_graph(PatternId::Diamond))));
    CHECK(testref::brute_isomorphic(pattern_graph(PatternId::Paraglider),
                                    pattern_graph(PatternId::P2UnionP3).complement()));
    // the diamond labeling: v1v3 is the only non-edge, v2v4 the chord
    const Graph& d = pattern_graph(PatternId::Diamond);
    CHECK(d.edge_count() == 5);
    CHECK_FALSE(d.adjacent(0, 2));
    CHECK(d.adjacent(1, 3));
}

TEST_CASE("find_induced basics") {
    CHECK_FALSE(find_induced(c5(), PatternId::Gem));
    auto p4 = find_induced(c5(), PatternId::P4);
    REQUIRE(p4);
    CHECK(testref::brute_isomorphic(c5().induced(p4->vertex_set()).first,
                                    pattern_graph(PatternId::P4)));
    CHECK_FALSE(find_induced(pattern_graph(PatternId::Gem), PatternId::TwoK2));
}

TEST_CASE("find_induced matches the brute subset scan on random graphs") {
    std::mt19937_64 rng(11);
    const PatternId all[] = {PatternId::TwoK2,  PatternId::P4,        PatternId::C4,
                             PatternId::C5,     PatternId::P2UnionP3, PatternId::P2UnionP4,
                             PatternId::P4UnionK1, PatternId::Diamond, PatternId::Paw,
                             PatternId::Gem,    PatternId::Wheel4,    PatternId::Paraglider,
                             PatternId::Hvn,    PatternId::K5MinusE,  PatternId::K4,
                             PatternId::K5,     PatternId::Claw};
    for (int trial = 0; trial < 120; ++trial) {
        int n = static_cast<int>(rng() % 8);
        Graph g = random_graph(n, 0.2 + 0.1 * (trial % 7), rng);
        for (PatternId pid : all) {
            auto w = find_induced(g, pid);
            CHECK(static_cast<bool>(w) == testref::brute_has_induced(g, pattern_graph(pid)));
            if (w) {
                CHECK(testref::brute_isomorphic(g.induced(w->vertex_set()).first,
                                                pattern_graph(pid)));
            }
        }
    }
}

TEST_CASE("detector completeness, exhaustive n <= 6") {
    const PatternId all[] = {PatternId::TwoK2,    PatternId::P4,       PatternId::C4,
                             PatternId::C5,       PatternId::Diamond,  PatternId::Paw,
                             PatternId::K4,       PatternId::Claw,     PatternId::P4UnionK1,
                             PatternId::Gem,      PatternId::Wheel4,   PatternId::Paraglider,
                             PatternId::Hvn,      PatternId::K5MinusE, PatternId::K5,
                             PatternId::P2UnionP3, PatternId::P2UnionP4};
    for (int n = 0; n <= 6; ++n) {
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph g = graph_from_mask(n, mask);
            for (PatternId pid : all) {
                bool found = find_induced(g, pid).has_value();
                bool brute = testref::brute_has_induced(g, pattern_graph(pid));
                if (found != brute) {
                    CAPTURE(mask);
                    CAPTURE(pattern_info(pid).name);
                    REQUIRE(found == brute);
                }
            }
        }
    }
}

TEST_CASE("specialized finders") {
    auto hole = find_c5(c5());
    REQUIRE(hole);
    CHECK(hole->vertex_set() == VertexSet::full(5));

    CHECK_FALSE(find_c4(pattern_graph(PatternId::K4)));

    Graph diamond(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}});
    auto d = find_diamond(diamond);
    REQUIRE(d);
    CHECK(d->vertex_set() == VertexSet::full(4));
    // chord endpoints carry the two degree-3 vertices
    CHECK(diamond.degree(d->mapping[1]) == 3);
    CHECK(diamond.degree(d->mapping[3]) == 3);
    CHECK_FALSE(diamond.adjacent(d->mapping[0], d->mapping[2]));
}

TEST_CASE("is_free verdicts and witnesses") {
    CHECK(is_free(c5(), class_by_name("2k2-gem")).member);

    Graph two_k2(4, {{0, 1}, {2, 3}});
    auto fv = is_free(two_k2, class_by_name("2k2"));
    CHECK_FALSE(fv.member);
    CHECK(fv.witness->vertex_set() == VertexSet::full(4));

    auto fv5 = is_free(pattern_graph(PatternId::K5), class_by_name("2k2-k5"));
    CHECK_FALSE(fv5.member);
    CHECK(fv5.witness->pattern == PatternId::K5);
}

TEST_CASE("perfection at desk scale") {
    CHECK_FALSE(is_perfect_small(c5()));
    Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    CHECK(is_perfect_small(c6));
    CHECK(is_perfect_small(pattern_graph(PatternId::Gem)));
    Graph c7(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}});
    CHECK_FALSE(is_perfect_small(c7));
    CHECK_FALSE(is_perfect_small(c7.complement()));
    CHECK_THROWS_AS(is_perfect_small(Graph(13, {})), BudgetError);

    // gem: definitional check chi(H) == omega(H) for every induced subgraph
    const Graph& gem = pattern_graph(PatternId::Gem);
    for (unsigned mask = 0; mask < 32; ++mask) {
        VertexSet s;
        for (int v = 0; v < 5; ++v)
            if ((mask >> v) & 1) s.set(v);
        Graph h = gem.induced(s).first;
        CHECK(testref::brute_chi(h) == testref::brute_omega(h));
    }
}

TEST_CASE("perfection is self-complementary") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(3 + static_cast<int>(rng() % 6), 0.5, rng);
        CHECK(is_perfect_small(g) == is_perfect_small(g.complement()));
    }
}

TEST_CASE("complement duality of P2+P3 and the paraglider") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(5 + static_cast<int>(rng() % 3), 0.5, rng);
        CHECK(static_cast<bool>(find_induced(g, PatternId::P2UnionP3)) ==
              static_cast<bool>(find_induced(g.complement(), PatternId::Paraglider)));
    }
}

TEST_CASE("class predicates") {
    CHECK_FALSE(is_cograph(pattern_graph(PatternId::P4)));
    CHECK(is_cograph(pattern_graph(PatternId::K4)));
    CHECK(is_cograph(pattern_graph(PatternId::Diamond)));

    CHECK(is_split(pattern_graph(PatternId::Paw)));
    CHECK(is_pseudo_split(c5()));
    CHECK_FALSE(is_split(c5()));

    Graph tree(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
    CHECK(is_chordal(tree));
    CHECK(is_chordal(pattern_graph(PatternId::K5)));
    CHECK_FALSE(is_chordal(pattern_graph(PatternId::C4)));
    CHECK_FALSE(is_chordal(c5()));
}

TEST_CASE("chordality agrees with the no-long-induced-cycle scan, exhaustive n <= 6") {
    for (int n = 0; n <= 6; ++n) {
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph g = graph_from_mask(n, mask);
            bool hole = false;
            for (int len = 4; len <= n && !hole; ++len) {
                // brute scan for an induced cycle: 2-regular connected subset
                for (unsigned sub = 0; sub < (1u << n) && !hole; ++sub) {
                    if (std::popcount(sub) != len) continue;
                    VertexSet s;
                    for (int v = 0; v < n; ++v)
                        if ((sub >> v) & 1) s.set(v);
                    bool reg2 = true;
                    for (int v : s)
                        if ((g.neighbors(v) & s).count() != 2) reg2 = false;
                    if (reg2 && g.components_within(s).size() == 1) hole = true;
                }
            }
            CHECK(is_chordal(g) == !hole);
        }
    }
}

TEST_CASE("split implies pseudo-split implies 2K2-free") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(static_cast<int>(rng() % 8), 0.5, rng);
        if (is_split(g)) CHECK(is_pseudo_split(g));
        if (is_pseudo_split(g)) CHECK(is_pattern_free(g, PatternId::TwoK2));
    }
}

TEST_CASE("bound functions") {
    CHECK(class_by_name("2k2").bound.eval(3) == 6);
    CHECK(class_by_name("2k2").bound.eval(0) == 0);
    CHECK(class_by_name("2k2-gem").bound.eval(2) == 4);
    CHECK(class_by_name("2k2-wheel4").bound.eval(2) == 7);
    CHECK(class_by_name("2k2-k5").bound.eval(2) == 5);
    CHECK(class_by_name("2k2-k5").bound.eval(5) == 9);
    CHECK(class_by_name("p2p4").bound.eval(2) == 4);
    CHECK(class_by_name("p2p4").bound.eval(3) == 12);
    CHECK(class_by_name("split").bound.eval(4) == 4);
    CHECK_THROWS_AS(class_by_name("no-such-class"), UnknownClass);
    CHECK(class_names().size() == 11);
}
