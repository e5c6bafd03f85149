#pragma once

#include <cstdint>

#include "chiforge/graph.hpp"

namespace chiforge {

// Node allowance for the exact searches. Exhaustion raises BudgetExceeded
// with the best bounds found; there is no approximate fallback.
struct Budget {
    std::uint64_t max_nodes = 10'000'000;
};

struct CliqueResult {
    int size = 0;
    VertexSet members;
    std::uint64_t nodes_explored = 0;
};

struct ChromaticResult {
    int chi = 0;
    Coloring coloring;
    std::uint64_t nodes_explored = 0;
};

// Exhaustive branch and bound with greedy-coloring upper-bound pruning.
CliqueResult max_clique(const Graph& g, Budget budget = {});

// DSATUR-ordered branch and bound, clique seed as lower bound. The search
// proves chi-1 colors infeasible before returning.
ChromaticResult chromatic_exact(const Graph& g, Budget budget = {});

// alpha(G) = omega of the complement; certificate mapped back.
CliqueResult independence_number(const Graph& g, Budget budget = {});

// theta(G) = chi of the complement; color classes become cliques.
ChromaticResult clique_cover_exact(const Graph& g, Budget budget = {});

// Greedy DSATUR coloring (upper bound; deterministic tie-breaks).
Coloring dsatur_greedy(const Graph& g);

}  // namespace chiforge
