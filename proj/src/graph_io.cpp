#include "chiforge/graph_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace chiforge {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int g6_byte(std::string_view s, std::size_t pos) {
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) {
        throw ParseError("byte " + std::to_string(static_cast<int>(c)) + " outside graph6 range 63..126",
                         pos);
    }
    return c - kBias;
}

}  // namespace

Graph read_graph6(std::string_view line) {
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError("empty graph6 line", 0);

    std::size_t pos = 0;
    long long n = 0;
    int first = g6_byte(line, pos);
    if (first < 63) {
        n = first;
        ++pos;
    } else {
        // '~' prefix: 18-bit order in the next three bytes. The 8-byte
        // (~~) form exceeds the vertex cap anyway.
        ++pos;
        if (line.size() < 4) throw ParseError("truncated graph6 order field", pos);
        if (line[pos] == '~') throw ParseError("graph6 order beyond supported range", pos);
        n = 0;
        for (int i = 0; i < 3; ++i, ++pos) n = (n << 6) | g6_byte(line, pos);
    }
    if (n > kMaxVertices) {
        throw ParseError("graph6 order " + std::to_string(n) + " exceeds cap " +
                         std::to_string(kMaxVertices),
                         0);
    }
    int order = static_cast<int>(n);

    long long bits = static_cast<long long>(order) * (order - 1) / 2;
    std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos != body) {
        throw ParseError("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                         std::to_string(body),
                         pos);
    }

    std::vector<VertexSet> adj(static_cast<std::size_t>(order));
    long long bit = 0;
    for (std::size_t i = 0; i < body; ++i) {
        int word = g6_byte(line, pos + i);
        for (int b = 5; b >= 0 && bit < bits; --b, ++bit) {
            if (!((word >> b) & 1)) continue;
            // bit index -> upper-triangle pair (row, col), column-major
            long long t = bit;
            int col = 1;
            while (t >= col) t -= col, ++col;
            int row = static_cast<int>(t);
            adj[static_cast<std::size_t>(row)].set(col);
            adj[static_cast<std::size_t>(col)].set(row);
        }
    }
    return graph_from_adjacency(order, std::move(adj));
}

std::string write_graph6(const Graph& g) {
    std::string out;
    int n = g.order();
    if (n < 63) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph read_dimacs(std::istream& in) {
    std::string linebuf;
    std::size_t lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, linebuf)) {
        ++lineno;
        if (linebuf.empty() || linebuf[0] == 'c') continue;
        std::istringstream ls(linebuf);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string fmt;
            long long m = 0;
            long long nn = 0;
            if (!(ls >> fmt >> nn >> m) || (fmt != "edge" && fmt != "col")) {
                throw ParseError("bad DIMACS problem line", lineno);
            }
            if (nn < 0 || nn > kMaxVertices) {
                throw ParseError("DIMACS order " + std::to_string(nn) + " exceeds cap " +
                                 std::to_string(kMaxVertices),
                                 lineno);
            }
            n = static_cast<int>(nn);
        } else if (tag == 'e') {
            long long u = 0;
            long long v = 0;
            if (!(ls >> u >> v)) throw ParseError("bad DIMACS edge line", lineno);
            if (n < 0) throw ParseError("DIMACS edge before problem line", lineno);
            if (u < 1 || u > n || v < 1 || v > n || u == v) {
                throw ParseError("DIMACS edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                 ") out of range",
                                 lineno);
            }
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        }
    }
    if (n < 0) throw ParseError("DIMACS input has no problem line", lineno);
    return Graph(n, edges);
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_dimacs(in);
}

}  // namespace chiforge
