#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "chiforge/oracles.hpp"
#include "chiforge/patterns.hpp"

namespace chiforge {

// Cotree over a cograph: leaves biject with vertices; a join node makes its
// children pairwise complete, a union node keeps them apart.
struct Cotree {
    enum class Kind { Leaf, Union, Join };
    Kind kind = Kind::Leaf;
    int vertex = -1;  // Leaf only
    std::vector<Cotree> children;
};

// Recursive complement-split construction; nullopt when some subset is
// connected in both the graph and its complement.
std::optional<Cotree> build_cotree(const Graph& g);

// Optimal coloring of a cograph with exactly omega colors: union nodes reuse
// palettes, join nodes stack them.
Coloring color_cograph(const Graph& g);  // throws NotCograph

// Greedy along the maximum-cardinality-search order; exactly omega colors.
Coloring color_chordal(const Graph& g);  // throws NotChordal

// (2K2, C4)-free coloring with at most omega+1 colors. Splits off a C5 when
// present (clique side fully adjacent to it, stable side anticomplete) and
// otherwise colors the split graph as chordal.
Coloring color_pseudo_split(const Graph& g);  // throws NotPseudoSplit

// Optimal coloring of a graph covered by two cliques: maximum matching in
// the bipartite complement pairs up color classes of size two.
Coloring color_cobipartite(const Graph& g, const VertexSet& side1, const VertexSet& side2);

// One color per part of a complete multipartite graph.
Coloring color_multipartite(const Graph& g);  // throws NotMultipartite

// Exact optimal coloring that must land within `bound` colors; certifies a
// caller's class assumption at desk scale.
Coloring color_exact_assert(const Graph& g, int bound, Budget budget = {});  // throws BoundViolated

// (2K2, paw)-free block: complete multipartite components get one color per
// part, triangle-free components are exact-colored within 3. At most omega+1
// colors overall.
Coloring color_paw_block(const Graph& g, Budget budget = {});  // throws NotInClass

// (2K2, diamond)-free block: exact coloring asserted within omega+1.
Coloring color_diamond_block(const Graph& g, Budget budget = {});  // throws NotInClass

}  // namespace chiforge
