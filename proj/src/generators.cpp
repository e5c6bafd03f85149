#include "chiforge/generators.hpp"

#include <fstream>
#include <memory>
#include <random>

#include "chiforge/graph_io.hpp"

namespace chiforge {

std::uint64_t labeled_graph_count(int n) {
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    int bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            if ((mask >> bit) & 1) {
                adj[static_cast<std::size_t>(row)].set(col);
                adj[static_cast<std::size_t>(col)].set(row);
            }
        }
    }
    return graph_from_adjacency(n, std::move(adj));
}

GraphStream enumerate_labeled(int n, const ClassSpec* filter) {
    if (n < 0 || n > 7) {
        throw BudgetError("exhaustive enumeration supports n <= 7; use a corpus file for n = " +
                          std::to_string(n));
    }
    const std::uint64_t total = labeled_graph_count(n);
    const std::string source = "exhaustive(" + std::to_string(n) + ")";
    auto state = std::make_shared<std::uint64_t>(0);
    return GraphStream([n, total, source, filter, state]() -> std::optional<StreamItem> {
        while (*state < total) {
            std::uint64_t mask = (*state)++;
            Graph g = graph_from_mask(n, mask);
            if (filter && !is_free(g, *filter).member) continue;
            return StreamItem{std::move(g), source, static_cast<std::size_t>(mask)};
        }
        return std::nullopt;
    });
}

Graph c5_expansion_family(const std::array<int, 5>& sizes) {
    std::vector<ExpansionPart> parts;
    parts.reserve(5);
    for (int s : sizes) parts.push_back({s, PartKind::Independent});
    return expansion(pattern_graph(PatternId::C5), parts);
}

namespace {

Graph gnp_sample(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                adj[static_cast<std::size_t>(u)].set(v);
                adj[static_cast<std::size_t>(v)].set(u);
            }
        }
    }
    return graph_from_adjacency(n, std::move(adj));
}

}  // namespace

std::optional<Graph> random_in_class(int n, const ClassSpec& spec, std::uint64_t seed, int attempts) {
    std::mt19937_64 rng(seed);
    for (int a = 0; a < attempts; ++a) {
        double p = 0.2 + 0.1 * (a % 7);
        Graph g = gnp_sample(n, p, rng);
        if (is_free(g, spec).member) return g;
    }
    return std::nullopt;
}

Graph random_two_k2_free(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.25, 0.75);
    Graph g = gnp_sample(n, unif(rng), rng);
    // Each repair adds one edge across a found 2K2, so this terminates.
    while (auto w = find_two_k2(g)) {
        const auto& m = w->mapping;
        static constexpr int kCross[4][2] = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
        const auto& pick = kCross[rng() % 4];
        std::vector<std::pair<int, int>> edges = g.edges();
        edges.emplace_back(m[static_cast<std::size_t>(pick[0])], m[static_cast<std::size_t>(pick[1])]);
        g = Graph(n, edges);
    }
    return g;
}

GraphStream read_corpus(const std::string& path) {
    auto in = std::make_shared<std::ifstream>(path);
    if (!*in) throw Error("cannot open corpus file " + path);
    auto lineno = std::make_shared<std::size_t>(0);
    auto count = std::make_shared<std::size_t>(0);
    auto sink = std::make_shared<std::vector<StreamDiagnostic>>();
    return GraphStream(
        [in, lineno, count, path, sink]() -> std::optional<StreamItem> {
            std::string line;
            while (std::getline(*in, line)) {
                ++*lineno;
                if (line.empty()) continue;
                try {
                    Graph g = read_graph6(line);
                    return StreamItem{std::move(g), path, (*count)++};
                } catch (const ParseError& e) {
                    sink->push_back({*lineno, e.what()});
                }
            }
            return std::nullopt;
        },
        sink);
}

}  // namespace chiforge
