#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chiforge/decompose.hpp"
#include "chiforge/generators.hpp"
#include "chiforge/report.hpp"
#include "oracle_ref.hpp"

using namespace chiforge;

namespace {

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

bool in_class(const Graph& g, const char* name) { return is_free(g, class_by_name(name)).member; }

// Exhaustive bound sweep for one constructive colorer.
template <typename Colorer>
void sweep_class(const char* name, int max_n, Colorer&& colorer, int slack) {
    for (int n = 0; n <= max_n; ++n) {
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (!in_class(g, name)) continue;
            BoundedColoring bc = colorer(g);
            if (n > 0) REQUIRE(is_proper(g, bc.coloring));
            REQUIRE(bc.coloring.k <= bc.omega + slack);
            REQUIRE(bc.coloring.k >= testref::brute_chi(g));
        }
    }
}

}  // namespace

TEST_CASE("decompose_gem outcomes") {
    CHECK(decompose_gem(complete(4)).perfect);

    const Graph& c5 = pattern_graph(PatternId::C5);
    GemOutcome out = decompose_gem(c5);
    REQUIRE_FALSE(out.perfect);
    const GemPartition& p = *out.partition;
    CHECK(p.v1.count() == 3);
    CHECK(p.v2.count() == 1);
    CHECK(p.v3.count() == 1);
    CHECK((p.v1 | p.v2 | p.v3) == c5.vertices());

    Graph gem = pattern_graph(PatternId::Gem);
    CHECK_THROWS_AS(decompose_gem(gem), NotInClass);
}

TEST_CASE("color_gem_free") {
    BoundedColoring bc = color_gem_free(pattern_graph(PatternId::C5));
    CHECK(bc.coloring.k == 3);
    CHECK(bc.omega == 2);
    CHECK(bc.bound == 4);
    CHECK(bc.certificate.theorem == Theorem::GEM_3_1);

    BoundedColoring kn = color_gem_free(complete(6));
    CHECK(kn.coloring.k == 6);

    sweep_class("2k2-gem", 6, [](const Graph& g) { return color_gem_free(g); }, 2);
}

TEST_CASE("decompose_wheel outcomes") {
    const Graph& c4 = pattern_graph(PatternId::C4);
    WheelOutcome out = decompose_wheel(c4);
    REQUIRE(out.kind == WheelOutcome::Kind::Case1);
    CHECK(out.case1->v1.count() == 2);
    CHECK(out.case1->v2.count() == 1);
    CHECK(out.case1->v3.count() == 1);
    CHECK(out.case1->v4.empty());

    CHECK(decompose_wheel(pattern_graph(PatternId::C5)).kind == WheelOutcome::Kind::PseudoSplit);

    CHECK_THROWS_AS(decompose_wheel(pattern_graph(PatternId::Wheel4)), NotInClass);
    CHECK_THROWS_AS(decompose_wheel(Graph(2, {})), Disconnected);

    // a triple-pattern vertex forces the second case: W4 contains one
    Graph w4 = pattern_graph(PatternId::Wheel4);
    VertexSet cycle4 = VertexSet::of({0, 1, 2, 3});
    auto [sub, _] = w4.induced(cycle4);
    REQUIRE(sub.edge_count() == 4);  // sanity: the rim alone

    Graph hub_minus(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}});
    REQUIRE(in_class(hub_minus, "2k2-wheel4"));
    WheelOutcome out2 = decompose_wheel(hub_minus);
    CHECK(out2.kind == WheelOutcome::Kind::Case2);
    CHECK(is_pseudo_split(hub_minus.induced(out2.case2->v1).first));
}

TEST_CASE("color_wheel_free") {
    BoundedColoring c5 = color_wheel_free(pattern_graph(PatternId::C5));
    CHECK(c5.coloring.k == 3);
    CHECK(c5.bound == 7);
    CHECK(c5.path_bound.has_value());
    CHECK(*c5.path_bound == 3);

    BoundedColoring c4 = color_wheel_free(pattern_graph(PatternId::C4));
    CHECK(c4.coloring.k == 2);
    CHECK(is_proper(pattern_graph(PatternId::C4), c4.coloring));

    sweep_class("2k2-wheel4", 6, [](const Graph& g) { return color_wheel_free(g); }, 5);
}

TEST_CASE("diamond_context classification") {
    Graph diamond = pattern_graph(PatternId::Diamond);
    DiamondContext ctx = diamond_context(diamond, {0, 1, 2, 3});
    CHECK(ctx.n_v4 == VertexSet::of({0, 1, 2}));
    CHECK(ctx.x1.empty());
    CHECK(ctx.l2.empty());
    CHECK(ctx.z2.empty());

    // K5-e: the fifth vertex is adjacent to everything, so it lands in N(v4)
    Graph k5e = pattern_graph(PatternId::K5MinusE);
    DiamondContext ctx2 = diamond_context(k5e, {0, 1, 2, 3});
    CHECK(ctx2.n_v4.test(4));
    CHECK(ctx2.z2.empty());

    // wheel4 anchored as a diamond puts the opposite rim vertex in Z2
    Graph w4(5, {{0, 4}, {4, 2}, {2, 3}, {3, 0}, {1, 0}, {1, 4}, {1, 2}, {1, 3}});
    // diamond (0, 1, 2, 4): non-edge 0-2, chord 1-4
    REQUIRE(w4.adjacent(1, 4));
    REQUIRE_FALSE(w4.adjacent(0, 2));
    DiamondContext ctx3 = diamond_context(w4, {0, 1, 2, 4});
    CHECK(ctx3.z2 == VertexSet::of({3}));

    CHECK_THROWS_AS(diamond_context(complete(4), {0, 1, 2, 3}), ConstructionError);
}

TEST_CASE("diamond_context cover holds for every anchored diamond of hvn") {
    Graph hvn = pattern_graph(PatternId::Hvn);
    int anchors = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c)
                for (int d = 0; d < 5; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (!(hvn.adjacent(a, b) && hvn.adjacent(b, c) && hvn.adjacent(c, d) &&
                          hvn.adjacent(d, a) && hvn.adjacent(b, d) && !hvn.adjacent(a, c)))
                        continue;
                    ++anchors;
                    DiamondContext ctx = diamond_context(hvn, {a, b, c, d});
                    VertexSet cover = ctx.n_v4 | ctx.x1 | ctx.x2 | ctx.x3 | ctx.y1 | ctx.y2 |
                                      ctx.z1 | ctx.z2 | ctx.l2;
                    cover.set(ctx.anchor[3]);
                    CHECK(cover == hvn.vertices());
                    CHECK(ctx.x3.empty());
                }
    CHECK(anchors > 0);
}

TEST_CASE("lemma assertions hold on 2K2-free graphs with diamonds, n <= 6") {
    for (int n = 4; n <= 6; ++n) {
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (find_induced(g, PatternId::TwoK2)) continue;
            auto dia = find_diamond(g);
            if (!dia) continue;
            DiamondContext ctx =
                diamond_context(g, {dia->mapping[0], dia->mapping[1], dia->mapping[2],
                                    dia->mapping[3]});
            CHECK(ctx.x3.empty());
        }
    }
}

TEST_CASE("color_hvn_free") {
    BoundedColoring k4 = color_hvn_free(complete(4));
    CHECK(k4.coloring.k == 4);
    CHECK(k4.coloring.k <= k4.omega + 3);

    BoundedColoring c5 = color_hvn_free(pattern_graph(PatternId::C5));
    CHECK(c5.coloring.k == 3);

    CHECK_THROWS_AS(color_hvn_free(pattern_graph(PatternId::Hvn)), NotInClass);

    sweep_class("2k2-hvn", 6, [](const Graph& g) { return color_hvn_free(g); }, 3);
}

TEST_CASE("color_k5e_free") {
    CHECK(color_k5e_free(pattern_graph(PatternId::C5)).coloring.k == 3);
    BoundedColoring k4 = color_k5e_free(complete(4));
    CHECK(is_proper(complete(4), k4.coloring));
    CHECK(k4.coloring.k <= k4.omega + 4);

    sweep_class("2k2-k5e", 6, [](const Graph& g) { return color_k5e_free(g); }, 4);
}

TEST_CASE("color_apex") {
    BlockSub sub;
    sub.color = [](const Graph& b) { return color_exact_assert(b, b.order()); };
    sub.f = [](int w) -> long long { return std::min(w + 1, 4); };
    sub.tag = BlockTag::Recurse;
    sub.recurse_class = "2k2-k4";

    BoundedColoring edgeless = color_apex(Graph(3, {}), sub);
    CHECK(edgeless.coloring.k == 1);

    BoundedColoring c5 = color_apex(pattern_graph(PatternId::C5), sub);
    CHECK(c5.coloring.k == 3);
    CHECK(c5.bound == 5);
    CHECK(is_proper(pattern_graph(PatternId::C5), c5.coloring));
    CHECK(c5.certificate.theorem == Theorem::APEX_3_10);
}

TEST_CASE("color_k5_free") {
    CHECK(color_k5_free(pattern_graph(PatternId::C5)).coloring.k == 3);
    BoundedColoring k4 = color_k5_free(complete(4));
    CHECK(k4.coloring.k == 4);
    CHECK(k4.bound == 9);
    CHECK_THROWS_AS(color_k5_free(complete(5)), NotInClass);

    sweep_class("2k2-k5", 6, [](const Graph& g) {
        BoundedColoring bc = color_k5_free(g);
        REQUIRE(bc.coloring.k <= std::min<long long>(2 * bc.omega + 1, 9));
        return bc;
    }, 9);
}

TEST_CASE("color_wagon and color_2k2") {
    BoundedColoring kn = color_2k2(complete(6));
    CHECK(kn.coloring.k == 6);

    BoundedColoring c5 = color_2k2(pattern_graph(PatternId::C5));
    CHECK(c5.coloring.k == 3);
    CHECK(c5.bound == 3);  // C(omega+1, 2) at omega 2
    CHECK(c5.certificate.theorem == Theorem::WAGON_4_1);

    Graph two_k2(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(color_2k2(two_k2), NotTwoK2Free);

    sweep_class("2k2", 6, [](const Graph& g) {
        BoundedColoring bc = color_2k2(g);
        REQUIRE(bc.coloring.k <= (bc.omega + 1) * bc.omega / 2);
        return bc;
    }, 100);
}

TEST_CASE("color_p2p4") {
    CHECK(color_p2p4(pattern_graph(PatternId::C5)).coloring.k == 3);
    CHECK(color_p2p4(complete(4)).coloring.k == 4);

    sweep_class("p2p4", 6, [](const Graph& g) {
        BoundedColoring bc = color_p2p4(g);
        long long w = bc.omega;
        REQUIRE(bc.coloring.k <= (w * w * w - w * w + 2 * w) / 2);
        return bc;
    }, 1000);
}

TEST_CASE("certificates re-verify and survive the JSON round trip") {
    std::vector<std::pair<std::string, Graph>> cases = {
        {"2k2-gem", pattern_graph(PatternId::C5)},
        {"2k2-wheel4", pattern_graph(PatternId::C4)},
        {"2k2-hvn", complete(4)},
        {"2k2-k5e", pattern_graph(PatternId::Paw)},
        {"2k2-k5", pattern_graph(PatternId::Diamond)},
        {"2k2", c5_expansion_family({2, 1, 1, 1, 1})},
        {"p2p4", pattern_graph(PatternId::Paraglider)},
        {"pseudo-split", pattern_graph(PatternId::C5)},
        {"split", pattern_graph(PatternId::Paw)},
    };
    for (const auto& [name, g] : cases) {
        CAPTURE(name);
        auto colorer = colorer_for_class(name);
        REQUIRE(colorer);
        BoundedColoring bc = (*colorer)(g, Budget{});
        verify_certificate(g, bc.certificate);
        std::string json = certificate_to_json(g, name, bc);
        check_certificate_json(json);

        // breaking the coloring must break the check
        std::string bad = json;
        auto pos = bad.find("\"k\":");
        REQUIRE(pos != std::string::npos);
        bad.replace(pos, 5, "\"k\": 99");
        CHECK_THROWS_AS(check_certificate_json(bad), CertificateError);
    }
}

TEST_CASE("verify_class_bound rows") {
    VerifyOptions opts;
    BoundReport para = verify_class_bound(pattern_graph(PatternId::C5),
                                          class_by_name("2k2-paraglider"), opts);
    CHECK(para.member);
    CHECK(para.omega == 2);
    CHECK(para.chi_exact == 3);
    CHECK(para.bound_value == 3);
    CHECK_FALSE(para.k_algorithm.has_value());
    CHECK(para.verdict == Verdict::Pass);

    BoundReport tight = verify_class_bound(c5_expansion_family({2, 1, 1, 1, 1}),
                                           class_by_name("2k2-paraglider"), opts);
    CHECK(tight.verdict == Verdict::Pass);
    CHECK(*tight.chi_exact == tight.omega + 1);

    BoundReport k4 = verify_class_bound(complete(4), class_by_name("2k2"), opts);
    CHECK(k4.verdict == Verdict::Pass);
    CHECK(k4.k_algorithm == 4);

    Graph two_k2(4, {{0, 1}, {2, 3}});
    BoundReport out = verify_class_bound(two_k2, class_by_name("2k2"), opts);
    CHECK(out.verdict == Verdict::NotMember);
    CHECK_FALSE(out.member);
}
