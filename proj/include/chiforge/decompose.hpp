#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chiforge/subsolvers.hpp"

namespace chiforge {

// Provenance tag of a decomposition certificate.
enum class Theorem {
    GEM_3_1,
    WHEEL_3_3,
    DIAMOND_3_5,
    HVN_3_6,
    K5E_3_7,
    APEX_3_10,
    WAGON_4_1,
    R5_PSEUDO_SPLIT,
    SPLIT_CHORDAL,
};

std::string_view theorem_name(Theorem t);
std::optional<Theorem> theorem_by_name(std::string_view name);

enum class BlockTag {
    Cograph,
    Clique,
    Independent,
    PseudoSplit,
    Cobipartite,
    PawFreeBlock,
    DiamondFreeBlock,
    Recurse,
};

std::string_view block_tag_name(BlockTag t);
std::optional<BlockTag> block_tag_by_name(std::string_view name);

struct Block {
    VertexSet vertices;
    BlockTag tag = BlockTag::Independent;
    // Cobipartite blocks carry their two clique sides.
    std::vector<VertexSet> sides;
    // Recurse blocks carry the class the block must belong to.
    std::string recurse_class;
};

// Machine-checkable witness of a structure theorem: a labeled partition of
// the vertex set whose per-block tags re-verify independently of the
// algorithm that produced them.
struct DecompositionCertificate {
    Theorem theorem = Theorem::WAGON_4_1;
    std::vector<Block> blocks;
    VertexSet anchor;
};

// Re-verifies every block tag from scratch; throws CertificateError.
void verify_certificate(const Graph& g, const DecompositionCertificate& cert);

// A coloring together with the class guarantee it was constructed under.
struct BoundedColoring {
    Coloring coloring;
    int omega = 0;
    long long bound = 0;
    // Tighter guarantee from the branch actually taken, when it differs.
    std::optional<long long> path_bound;
    DecompositionCertificate certificate;
};

// ---- (2K2, gem)-free ----

struct GemPartition {
    VertexSet v1;  // induces a P4-free subgraph
    VertexSet v2;  // independent
    VertexSet v3;  // independent
    std::array<int, 5> anchor;  // C5 in cycle order of the complement
};

struct GemOutcome {
    bool perfect = false;
    std::optional<GemPartition> partition;
};

// Runs the structure argument in the complement (a (P4 u K1, C4)-free
// graph): no C5 there means the graph is perfect; otherwise every outside
// vertex meets the C5 in a K2, P3 or C5 pattern and the partition follows.
GemOutcome decompose_gem(const Graph& g);

BoundedColoring color_gem_free(const Graph& g, Budget budget = {});

// ---- (2K2, wheel4)-free ----

struct WheelCase1 {
    VertexSet v1;
    VertexSet side1, side2;  // clique sides of v1
    VertexSet v2, v3, v4, v5, v6;
    std::array<int, 4> anchor;
};

struct WheelCase2 {
    VertexSet v1;  // pseudo-split, omega one less than the whole graph
    VertexSet v2, v3, v4;
    std::array<int, 4> anchor;
};

struct WheelOutcome {
    enum class Kind { PseudoSplit, Case1, Case2 };
    Kind kind = Kind::PseudoSplit;
    std::optional<WheelCase1> case1;
    std::optional<WheelCase2> case2;
};

// Classifies against an anchored C4; requires a connected member graph.
WheelOutcome decompose_wheel(const Graph& g);

BoundedColoring color_wheel_free(const Graph& g, Budget budget = {});

// ---- diamond neighborhood classification (2K2-free graphs) ----

struct DiamondContext {
    std::array<int, 4> anchor;  // (v1, v2, v3, v4), v1v3 the non-edge
    VertexSet n_v4;             // neighbors of v4
    VertexSet x1, x2, x3;       // pendant on v1 / v2 / v3
    VertexSet y1, y2;           // seeing {v1,v2} / {v2,v3}
    VertexSet z1, z2;           // seeing {v1,v3} / {v1,v2,v3}
    VertexSet l2;               // no neighbor on the diamond
};

// Classifies every vertex against the diamond and asserts the cover,
// X1/X3 dichotomy, independence and separation facts. Normalized so that
// X3 is empty. Throws NotTwoK2Free when an assertion fails.
DiamondContext diamond_context(const Graph& g, const std::array<int, 4>& diamond);

BoundedColoring color_hvn_free(const Graph& g, Budget budget = {});
BoundedColoring color_k5e_free(const Graph& g, Budget budget = {});

// ---- combinators ----

// Block colorer handed to the combinators, with its certified guarantee f
// and how its blocks are tagged in certificates.
struct BlockSub {
    std::function<Coloring(const Graph&)> color;
    std::function<long long(int)> f;
    BlockTag tag = BlockTag::Recurse;
    std::string recurse_class;
};

// Splits on the lexicographically first edge: both closed sides are colored
// by `sub` (omega drops by one there), the rest is one independent set.
// Bound 2 f(omega-1) + 1.
BoundedColoring color_apex(const Graph& g, const BlockSub& sub, Budget budget = {});

// Covers the graph by the non-neighborhoods A(e) of the edges inside one
// maximum clique plus the near-dominated sets B_i. Bound
// C(omega, 2) * f(omega) + omega.
BoundedColoring color_wagon(const Graph& g, const BlockSub& sub, Budget budget = {});

BoundedColoring color_2k2(const Graph& g, Budget budget = {});
BoundedColoring color_p2p4(const Graph& g, Budget budget = {});
BoundedColoring color_k5_free(const Graph& g, Budget budget = {});

// ---- dispatch and reporting ----

using ClassColorer = std::function<BoundedColoring(const Graph&, Budget)>;

// Constructive colorer for a registry class, if the class has one.
std::optional<ClassColorer> colorer_for_class(std::string_view name);

enum class Verdict { Pass, Fail, Skipped, NotMember };

std::string_view verdict_name(Verdict v);

struct BoundReport {
    std::string source;
    std::size_t index = 0;
    std::string graph6;
    int n = 0;
    std::string class_name;
    bool member = false;
    int omega = 0;
    std::optional<int> chi_exact;
    std::optional<int> k_algorithm;
    long long bound_value = 0;
    Verdict verdict = Verdict::NotMember;
    double runtime_ms = 0.0;
    std::string note;
};

struct VerifyOptions {
    bool compute_chi = true;
    Budget budget;
};

// Checks membership, runs the class's constructive colorer when it has one
// (exact oracle only otherwise), and scores the row. NotInClass from the
// colorer records a skip, not a failure.
BoundReport verify_class_bound(const Graph& g, const ClassSpec& spec, const VerifyOptions& opts = {});

}  // namespace chiforge
