#include "chiforge/report.hpp"

#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "chiforge/graph_io.hpp"

namespace chiforge {

using nlohmann::json;

namespace {

json vertex_set_json(const VertexSet& s) { return json(s.to_vector()); }

VertexSet vertex_set_from_json(const json& j) {
    VertexSet s;
    for (int v : j.get<std::vector<int>>()) {
        if (v < 0 || v >= kMaxVertices) throw CertificateError("vertex index out of range in JSON");
        s.set(v);
    }
    return s;
}

}  // namespace

std::string certificate_to_json(const Graph& g, const std::string& class_name,
                                const BoundedColoring& bc) {
    json j;
    j["graph6"] = write_graph6(g);
    j["class"] = class_name;
    j["theorem"] = std::string(theorem_name(bc.certificate.theorem));
    j["omega"] = bc.omega;
    j["bound"] = bc.bound;
    j["k"] = bc.coloring.k;
    j["colors"] = bc.coloring.color;
    j["anchor"] = vertex_set_json(bc.certificate.anchor);
    json blocks = json::array();
    for (const Block& b : bc.certificate.blocks) {
        json jb;
        jb["vertices"] = vertex_set_json(b.vertices);
        jb["tag"] = std::string(block_tag_name(b.tag));
        if (b.tag == BlockTag::Cobipartite) {
            jb["sides"] = {vertex_set_json(b.sides[0]), vertex_set_json(b.sides[1])};
        }
        if (b.tag == BlockTag::Recurse) jb["recurse_class"] = b.recurse_class;
        blocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(blocks);
    if (bc.path_bound) j["path_bound"] = *bc.path_bound;
    return j.dump(2);
}

void check_certificate_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("certificate JSON: ") + e.what(), 0);
    }
    Graph g = read_graph6(j.at("graph6").get<std::string>());

    Coloring coloring;
    coloring.color = j.at("colors").get<std::vector<int>>();
    coloring.k = j.at("k").get<int>();
    if (coloring.size() != g.order()) throw CertificateError("coloring length mismatch");
    int max_idx = -1;
    for (int c : coloring.color) {
        if (c < 0) throw CertificateError("negative color index");
        max_idx = std::max(max_idx, c);
    }
    if (g.order() > 0 && coloring.k != max_idx + 1) {
        throw CertificateError("declared k does not match the colors used");
    }
    if (!is_proper(g, coloring)) throw CertificateError("coloring is not proper");

    const ClassSpec& spec = class_by_name(j.at("class").get<std::string>());
    if (!is_free(g, spec).member) throw CertificateError("graph is not in the declared class");
    const int omega = g.order() == 0 ? 0 : max_clique(g).size;
    if (j.at("omega").get<int>() != omega) throw CertificateError("declared omega is wrong");
    const long long bound = spec.bound.eval(omega);
    if (j.at("bound").get<long long>() != bound) throw CertificateError("declared bound is wrong");
    if (coloring.k > bound) throw CertificateError("color count exceeds the class bound");

    DecompositionCertificate cert;
    auto theorem = theorem_by_name(j.at("theorem").get<std::string>());
    if (!theorem) throw CertificateError("unknown theorem tag");
    cert.theorem = *theorem;
    cert.anchor = vertex_set_from_json(j.at("anchor"));
    for (const json& jb : j.at("blocks")) {
        Block b;
        auto tag = block_tag_by_name(jb.at("tag").get<std::string>());
        if (!tag) throw CertificateError("unknown block tag");
        b.tag = *tag;
        b.vertices = vertex_set_from_json(jb.at("vertices"));
        if (b.tag == BlockTag::Cobipartite) {
            for (const json& side : jb.at("sides")) b.sides.push_back(vertex_set_from_json(side));
        }
        if (b.tag == BlockTag::Recurse) b.recurse_class = jb.at("recurse_class").get<std::string>();
        cert.blocks.push_back(std::move(b));
    }
    verify_certificate(g, cert);
}

std::string bound_report_csv_header() {
    return "source,index,graph6,n,class,member,omega,chi_exact,k_algorithm,bound,verdict,runtime_ms";
}

std::string bound_report_csv_row(const BoundReport& r, bool include_timing) {
    std::ostringstream os;
    os << r.source << ',' << r.index << ',' << r.graph6 << ',' << r.n << ',' << r.class_name << ','
       << (r.member ? "true" : "false") << ',' << r.omega << ',';
    if (r.chi_exact) os << *r.chi_exact;
    os << ',';
    if (r.k_algorithm) os << *r.k_algorithm;
    os << ',' << r.bound_value << ',' << verdict_name(r.verdict) << ',';
    char ms[32];
    std::snprintf(ms, sizeof(ms), "%.3f", include_timing ? r.runtime_ms : 0.0);
    os << ms;
    return os.str();
}

std::string bound_report_json(const BoundReport& r, bool include_timing) {
    json j;
    j["source"] = r.source;
    j["index"] = r.index;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["class"] = r.class_name;
    j["member"] = r.member;
    j["omega"] = r.omega;
    if (r.chi_exact) j["chi_exact"] = *r.chi_exact;
    if (r.k_algorithm) j["k_algorithm"] = *r.k_algorithm;
    j["bound"] = r.bound_value;
    j["verdict"] = std::string(verdict_name(r.verdict));
    j["runtime_ms"] = include_timing ? r.runtime_ms : 0.0;
    if (!r.note.empty()) j["note"] = r.note;
    return j.dump();
}

}  // namespace chiforge
