#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chiforge/patterns.hpp"

namespace chiforge {

struct StreamItem {
    Graph graph;
    std::string source;
    std::size_t index = 0;
};

struct StreamDiagnostic {
    std::size_t line = 0;
    std::string message;
};

// Single-consumer graph source with a tag describing where each item came
// from. Diagnostics accumulate for inputs that keep going past bad lines;
// the sink is shared with the producer so post-drain reads see everything.
class GraphStream {
public:
    using DiagnosticSink = std::shared_ptr<std::vector<StreamDiagnostic>>;

    explicit GraphStream(std::function<std::optional<StreamItem>()> next,
                         DiagnosticSink diagnostics = nullptr)
        : next_(std::move(next)),
          diagnostics_(diagnostics ? std::move(diagnostics)
                                   : std::make_shared<std::vector<StreamDiagnostic>>()) {}

    std::optional<StreamItem> next() { return next_(); }

    std::vector<StreamItem> drain() {
        std::vector<StreamItem> out;
        while (auto item = next()) out.push_back(std::move(*item));
        return out;
    }

    const std::vector<StreamDiagnostic>& diagnostics() const { return *diagnostics_; }

private:
    std::function<std::optional<StreamItem>()> next_;
    DiagnosticSink diagnostics_;
};

// Number of labeled graphs on n vertices (2^C(n,2)).
std::uint64_t labeled_graph_count(int n);

// Graph for one edge mask; bit k of the mask is pair k in upper-triangle
// column-major order, matching the graph6 bit layout.
Graph graph_from_mask(int n, std::uint64_t mask);

// All labeled graphs on n vertices in edge-mask order, optionally filtered;
// n <= 7 (2^21 graphs). Larger n must come from corpus files.
GraphStream enumerate_labeled(int n, const ClassSpec* filter = nullptr);

// C5 with each vertex expanded into an independent set of the given size.
Graph c5_expansion_family(const std::array<int, 5>& sizes);

// Rejection sampling over G(n, p) with p swept across {0.2..0.8}; first
// member wins, reproducible per seed. Exhausted attempts yield nullopt.
std::optional<Graph> random_in_class(int n, const ClassSpec& spec, std::uint64_t seed,
                                     int attempts = 200);

// Seeded G(n, p) sample repaired into a 2K2-free graph by closing induced
// 2K2s with random cross edges. Scales to n where rejection cannot.
Graph random_two_k2_free(int n, std::uint64_t seed);

// Streaming graph6 corpus; per-line parse failures are recorded in the
// stream diagnostics and the stream continues.
GraphStream read_corpus(const std::string& path);

}  // namespace chiforge
