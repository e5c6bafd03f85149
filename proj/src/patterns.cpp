#include "chiforge/patterns.hpp"

#include <algorithm>
#include <bit>

namespace chiforge {

namespace {

std::vector<PatternInfo> build_catalog() {
    using P = PatternId;
    std::vector<PatternInfo> cat;
    cat.push_back({P::TwoK2, "2K2", 4, {{0, 1}, {2, 3}}});
    cat.push_back({P::P4, "P4", 4, {{0, 1}, {1, 2}, {2, 3}}});
    cat.push_back({P::C4, "C4", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}});
    cat.push_back({P::C5, "C5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}});
    cat.push_back({P::P2UnionP3, "P2+P3", 5, {{0, 1}, {2, 3}, {3, 4}}});
    cat.push_back({P::P2UnionP4, "P2+P4", 6, {{0, 1}, {2, 3}, {3, 4}, {4, 5}}});
    cat.push_back({P::P4UnionK1, "P4+K1", 5, {{0, 1}, {1, 2}, {2, 3}}});
    // diamond on (v1, v2, v3, v4): v1v3 missing, v2v4 the chord
    cat.push_back({P::Diamond, "diamond", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}}});
    // paw: triangle 0-1-2 plus pendant 3 on vertex 0
    cat.push_back({P::Paw, "paw", 4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}});
    cat.push_back({P::Gem, "gem", 5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}});
    cat.push_back(
        {P::Wheel4, "wheel4", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}});
    // complement of P2+P3; triangle on {0, 2, 4}
    cat.push_back(
        {P::Paraglider, "paraglider", 5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}}});
    cat.push_back(
        {P::Hvn, "hvn", 5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}});
    cat.push_back({P::K5MinusE,
                   "k5-e",
                   5,
                   {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}});
    cat.push_back({P::K4, "K4", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}});
    cat.push_back({P::K5,
                   "K5",
                   5,
                   {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}});
    cat.push_back({P::Claw, "claw", 4, {{0, 1}, {0, 2}, {0, 3}}});
    return cat;
}

const std::vector<PatternInfo>& catalog() {
    static const std::vector<PatternInfo> cat = build_catalog();
    return cat;
}

}  // namespace

const PatternInfo& pattern_info(PatternId id) {
    for (const auto& p : catalog()) {
        if (p.id == id) return p;
    }
    throw Error("pattern id missing from catalog");
}

const Graph& pattern_graph(PatternId id) {
    static const std::vector<Graph> graphs = [] {
        std::vector<Graph> gs;
        for (const auto& p : catalog()) gs.emplace_back(p.order, std::span(p.edges), std::string(p.name));
        return gs;
    }();
    for (std::size_t i = 0; i < catalog().size(); ++i) {
        if (catalog()[i].id == id) return graphs[i];
    }
    throw Error("pattern id missing from catalog");
}

std::optional<PatternId> pattern_by_name(std::string_view name) {
    for (const auto& p : catalog()) {
        if (p.name == name) return p.id;
    }
    return std::nullopt;
}

namespace {

// Backtracking injective embedding; pattern vertices mapped in index order,
// candidates tried ascending, so the first hit is the lexicographically
// smallest mapping.
bool embed(const Graph& g, const Graph& p, int depth, std::vector<int>& map, VertexSet& used) {
    const int k = p.order();
    VertexSet cand = g.vertices().and_not(used);
    for (int j = 0; j < depth; ++j) {
        if (p.adjacent(depth, j)) {
            cand &= g.neighbors(map[static_cast<std::size_t>(j)]);
        } else {
            cand = cand.and_not(g.neighbors(map[static_cast<std::size_t>(j)]));
        }
    }
    const int need = p.degree(depth);
    for (int v : cand) {
        if (g.degree(v) < need) continue;
        map[static_cast<std::size_t>(depth)] = v;
        if (depth + 1 == k) return true;
        used.set(v);
        if (embed(g, p, depth + 1, map, used)) return true;
        used.reset(v);
    }
    return false;
}

}  // namespace

std::optional<Witness> find_induced(const Graph& g, PatternId pattern) {
    const Graph& p = pattern_graph(pattern);
    if (p.order() > g.order()) return std::nullopt;
    std::vector<int> map(static_cast<std::size_t>(p.order()), -1);
    VertexSet used;
    if (!embed(g, p, 0, map, used)) return std::nullopt;
    return Witness{pattern, std::move(map)};
}

std::optional<Witness> find_c4(const Graph& g) { return find_induced(g, PatternId::C4); }
std::optional<Witness> find_c5(const Graph& g) { return find_induced(g, PatternId::C5); }
std::optional<Witness> find_diamond(const Graph& g) { return find_induced(g, PatternId::Diamond); }
std::optional<Witness> find_two_k2(const Graph& g) { return find_induced(g, PatternId::TwoK2); }

bool is_pattern_free(const Graph& g, PatternId pattern) { return !find_induced(g, pattern); }

long long BoundFn::eval(int omega) const {
    const long long w = omega;
    switch (kind) {
        case Kind::Affine:
            return a * w + b;
        case Kind::CappedAffine:
            return std::min<long long>(a * w + b, cap);
        case Kind::Quadratic:
            return (w + 1) * w / 2;
        case Kind::Cubic:
            return (w * w * w - w * w + 2 * w) / 2;
    }
    return 0;
}

std::string BoundFn::describe() const {
    auto affine = [](int a, int b) {
        std::string s = (a == 1) ? "w" : std::to_string(a) + "w";
        if (b > 0) s += "+" + std::to_string(b);
        return s;
    };
    switch (kind) {
        case Kind::Affine:
            return affine(a, b);
        case Kind::CappedAffine:
            return "min(" + affine(a, b) + ", " + std::to_string(cap) + ")";
        case Kind::Quadratic:
            return "C(w+1,2)";
        case Kind::Cubic:
            return "(w^3-w^2+2w)/2";
    }
    return "?";
}

const std::vector<ClassSpec>& class_registry() {
    using P = PatternId;
    using K = BoundFn::Kind;
    static const std::vector<ClassSpec> reg = {
        {"2k2", {P::TwoK2}, {K::Quadratic}, true},
        {"2k2-gem", {P::TwoK2, P::Gem}, {K::Affine, 1, 2}, true},
        {"2k2-wheel4", {P::TwoK2, P::Wheel4}, {K::Affine, 1, 5}, true},
        {"2k2-paraglider", {P::TwoK2, P::Paraglider}, {K::Affine, 1, 1}, false},
        {"2k2-hvn", {P::TwoK2, P::Hvn}, {K::Affine, 1, 3}, true},
        {"2k2-k5e", {P::TwoK2, P::K5MinusE}, {K::Affine, 1, 4}, true},
        {"2k2-k5", {P::TwoK2, P::K5}, {K::CappedAffine, 2, 1, 9}, true},
        // building block of the 2k2-k5 route; exact-colored at desk scale
        {"2k2-k4", {P::TwoK2, P::K4}, {K::CappedAffine, 1, 1, 4}, false},
        {"p2p4", {P::P2UnionP4}, {K::Cubic}, true},
        {"pseudo-split", {P::TwoK2, P::C4}, {K::Affine, 1, 1}, true},
        {"split", {P::TwoK2, P::C4, P::C5}, {K::Affine, 1, 0}, true},
    };
    return reg;
}

const ClassSpec& class_by_name(std::string_view name) {
    for (const auto& c : class_registry()) {
        if (c.name == name) return c;
    }
    std::string all;
    for (const auto& c : class_registry()) {
        if (!all.empty()) all += ", ";
        all += c.name;
    }
    throw UnknownClass("unknown class '" + std::string(name) + "'; known: " + all);
}

std::vector<std::string> class_names() {
    std::vector<std::string> out;
    for (const auto& c : class_registry()) out.push_back(c.name);
    return out;
}

FreeVerdict is_free(const Graph& g, const ClassSpec& spec) {
    for (PatternId pid : spec.forbidden) {
        if (auto w = find_induced(g, pid)) return {false, std::move(w)};
    }
    return {true, std::nullopt};
}

namespace {

bool has_odd_hole(const Graph& g) {
    const int n = g.order();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size < 5 || size % 2 == 0) continue;
        VertexSet s;
        for (int v = 0; v < n; ++v) {
            if ((mask >> v) & 1) s.set(v);
        }
        bool regular2 = true;
        for (int v : s) {
            if ((g.neighbors(v) & s).count() != 2) {
                regular2 = false;
                break;
            }
        }
        if (!regular2) continue;
        if (g.components_within(s).size() == 1) return true;
    }
    return false;
}

}  // namespace

bool is_perfect_small(const Graph& g) {
    if (g.order() > 12) {
        throw BudgetError("perfection test enumerates odd subsets; n <= 12 required, got " +
                          std::to_string(g.order()));
    }
    return !has_odd_hole(g) && !has_odd_hole(g.complement());
}

bool is_cograph(const Graph& g) {
    std::vector<VertexSet> stack;
    if (g.order() > 3) stack.push_back(g.vertices());
    while (!stack.empty()) {
        VertexSet s = stack.back();
        stack.pop_back();
        auto comps = g.components_within(s);
        if (comps.size() == 1) {
            comps = g.co_components_within(s);
            if (comps.size() == 1) return false;
        }
        for (const auto& c : comps) {
            if (c.count() > 3) stack.push_back(c);
        }
    }
    return true;
}

std::vector<int> mcs_visit_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    VertexSet left = g.vertices();
    while (!left.empty()) {
        int best = -1;
        for (int v : left) {
            if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)])
                best = v;
        }
        order.push_back(best);
        left.reset(best);
        for (int w : g.neighbors(best) & left) ++weight[static_cast<std::size_t>(w)];
    }
    return order;
}

bool is_peo_reverse(const Graph& g, const std::vector<int>& visit) {
    // Chordal iff every vertex's earlier-visited neighborhood is a clique.
    VertexSet seen;
    for (int v : visit) {
        VertexSet back = g.neighbors(v) & seen;
        if (!g.is_clique(back)) return false;
        seen.set(v);
    }
    return true;
}

bool is_chordal(const Graph& g) { return is_peo_reverse(g, mcs_visit_order(g)); }

bool is_split(const Graph& g) {
    return is_pattern_free(g, PatternId::TwoK2) && is_pattern_free(g, PatternId::C4) &&
           is_pattern_free(g, PatternId::C5);
}

bool is_pseudo_split(const Graph& g) {
    return is_pattern_free(g, PatternId::TwoK2) && is_pattern_free(g, PatternId::C4);
}

}  // namespace chiforge
