#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "chiforge/generators.hpp"
#include "chiforge/graph_io.hpp"
#include "oracle_ref.hpp"

using namespace chiforge;

TEST_CASE("labeled enumeration counts") {
    CHECK(enumerate_labeled(0).drain().size() == 1);
    CHECK(enumerate_labeled(3).drain().size() == 8);
    CHECK(enumerate_labeled(4).drain().size() == 64);
    for (int n = 0; n <= 5; ++n) CHECK(labeled_graph_count(n) == (1u << (n * (n - 1) / 2)));
    CHECK_THROWS_AS(enumerate_labeled(8), BudgetError);
}

TEST_CASE("filtered enumeration matches a brute count") {
    // count 4-vertex graphs with no induced 2K2 by subset scan
    std::size_t brute = 0;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        if (!testref::brute_has_induced(graph_from_mask(4, mask), pattern_graph(PatternId::TwoK2)))
            ++brute;
    }
    CHECK(brute == 61);  // exactly the three labeled perfect matchings fail
    const ClassSpec& spec = class_by_name("2k2");
    auto members = enumerate_labeled(4, &spec).drain();
    CHECK(members.size() == brute);
    for (const auto& item : members) CHECK(is_free(item.graph, spec).member);
}

TEST_CASE("edge mask order matches the graph6 bit layout") {
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        Graph g = graph_from_mask(4, mask);
        // graph6 body for n=4 is one byte holding the 6 mask bits, MSB first
        std::string line = write_graph6(g);
        REQUIRE(line.size() == 2);
        unsigned body = static_cast<unsigned>(line[1]) - 63;
        unsigned expect = 0;
        for (int b = 0; b < 6; ++b) expect |= ((mask >> b) & 1) << (5 - b);
        CHECK(body == expect);
    }
}

TEST_CASE("c5 expansion family") {
    CHECK(c5_expansion_family({1, 1, 1, 1, 1}) == pattern_graph(PatternId::C5));

    Graph g6 = c5_expansion_family({2, 1, 1, 1, 1});
    CHECK(g6.order() == 6);
    CHECK(testref::brute_omega(g6) == 2);
    CHECK(testref::brute_chi(g6) == 3);

    Graph g10 = c5_expansion_family({2, 2, 2, 2, 2});
    CHECK(g10.order() == 10);
    CHECK(testref::brute_omega(g10) == 2);
    CHECK(testref::brute_chi(g10) == 3);

    CHECK_THROWS_AS(c5_expansion_family({1, 0, 1, 1, 1}), ConstructionError);
}

TEST_CASE("random_in_class") {
    const ClassSpec& spec = class_by_name("2k2");
    auto g1 = random_in_class(5, spec, 7);
    REQUIRE(g1);
    CHECK(is_free(*g1, spec).member);
    auto g2 = random_in_class(5, spec, 7);
    REQUIRE(g2);
    CHECK(*g1 == *g2);

    // any K5-free 4-vertex sample qualifies if 2K2-free
    auto g3 = random_in_class(4, class_by_name("2k2-k5"), 3);
    REQUIRE(g3);
    CHECK(g3->order() == 4);
}

TEST_CASE("random_two_k2_free repairs to membership at larger n") {
    const ClassSpec& spec = class_by_name("2k2");
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = random_two_k2_free(20, seed);
        CHECK(is_free(g, spec).member);
        CHECK(g == random_two_k2_free(20, seed));
    }
    Graph big = random_two_k2_free(40, 99);
    CHECK(is_free(big, spec).member);
}

TEST_CASE("corpus reading with diagnostics") {
    const char* path = "test_corpus_tmp.g6";
    {
        std::ofstream out(path);
        out << write_graph6(pattern_graph(PatternId::C5)) << "\n";
        out << "not graph6 at all!!!\n";
        out << write_graph6(pattern_graph(PatternId::K4)) << "\n";
    }
    GraphStream stream = read_corpus(path);
    auto items = stream.drain();
    REQUIRE(items.size() == 2);
    CHECK(items[0].graph == pattern_graph(PatternId::C5));
    CHECK(items[1].graph == pattern_graph(PatternId::K4));
    CHECK(items[0].index == 0);
    CHECK(items[1].index == 1);
    REQUIRE(stream.diagnostics().size() == 1);
    CHECK(stream.diagnostics()[0].line == 2);
    std::remove(path);

    {
        std::ofstream out(path);
    }
    CHECK(read_corpus(path).drain().empty());
    std::remove(path);

    CHECK_THROWS_AS(read_corpus("definitely_missing_file.g6"), Error);
}
