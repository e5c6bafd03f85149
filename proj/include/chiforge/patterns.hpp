#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chiforge/graph.hpp"

namespace chiforge {

// The small forbidden subgraphs handled by the detectors. Each id maps to
// one explicit edge list fixed in the catalog below.
enum class PatternId {
    TwoK2,
    P4,
    C4,
    C5,
    P2UnionP3,
    P2UnionP4,
    P4UnionK1,
    Diamond,
    Paw,
    Gem,         // apex joined to P4
    Wheel4,      // apex joined to C4
    Paraglider,  // complement of P2 u P3
    Hvn,         // apex joined to paw
    K5MinusE,    // apex joined to diamond
    K4,
    K5,
    Claw,
};

struct PatternInfo {
    PatternId id;
    std::string_view name;
    int order;
    std::vector<std::pair<int, int>> edges;
};

const PatternInfo& pattern_info(PatternId id);
const Graph& pattern_graph(PatternId id);
std::optional<PatternId> pattern_by_name(std::string_view name);

// An induced embedding of a pattern: mapping[i] is the graph vertex playing
// pattern vertex i (edges and non-edges both respected).
struct Witness {
    PatternId pattern;
    std::vector<int> mapping;

    VertexSet vertex_set() const {
        VertexSet s;
        for (int v : mapping) s.set(v);
        return s;
    }
};

// First induced embedding in lexicographic mapping order, or nullopt.
std::optional<Witness> find_induced(const Graph& g, PatternId pattern);

// Specialized detectors. find_c4/find_c5 return the witness in cycle order;
// find_diamond returns (v1, v2, v3, v4) with v1v3 the non-edge and v2v4 the
// chord.
std::optional<Witness> find_c4(const Graph& g);
std::optional<Witness> find_c5(const Graph& g);
std::optional<Witness> find_diamond(const Graph& g);
std::optional<Witness> find_two_k2(const Graph& g);

// chi-binding guarantee of a class, evaluated at the clique number.
struct BoundFn {
    enum class Kind {
        Affine,        // a*w + b
        CappedAffine,  // min(a*w + b, cap)
        Quadratic,     // C(w+1, 2)
        Cubic,         // (w^3 - w^2 + 2w) / 2
    };
    Kind kind = Kind::Affine;
    int a = 1;
    int b = 0;
    int cap = 0;

    long long eval(int omega) const;
    std::string describe() const;
};

// A named graph class: its forbidden-induced-subgraph list plus bound.
struct ClassSpec {
    std::string name;
    std::vector<PatternId> forbidden;
    BoundFn bound;
    bool has_constructive_colorer = false;
};

const ClassSpec& class_by_name(std::string_view name);  // throws UnknownClass
const std::vector<ClassSpec>& class_registry();
std::vector<std::string> class_names();

struct FreeVerdict {
    bool member = false;
    std::optional<Witness> witness;  // set when excluded
};

// Member iff no forbidden pattern embeds; otherwise the first witness in
// catalog order, lexicographic vertex order.
FreeVerdict is_free(const Graph& g, const ClassSpec& spec);
bool is_pattern_free(const Graph& g, PatternId pattern);

// Exhaustive odd-hole test on G and its complement; n <= 12.
bool is_perfect_small(const Graph& g);

bool is_cograph(const Graph& g);
bool is_chordal(const Graph& g);
bool is_split(const Graph& g);
bool is_pseudo_split(const Graph& g);

// Maximum cardinality search; reversing the visit order gives a perfect
// elimination ordering exactly when the graph is chordal.
std::vector<int> mcs_visit_order(const Graph& g);
bool is_peo_reverse(const Graph& g, const std::vector<int>& visit);

}  // namespace chiforge
