// chiforge: certified colorings and bound sweeps for 2K2-free graph classes.
//
// Exit codes: 0 ok, 1 usage/input, 2 not-in-class, 3 structure violation,
// 4 bound or certificate failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chiforge/generators.hpp"
#include "chiforge/graph_io.hpp"
#include "chiforge/report.hpp"
#include "chiforge/sweep.hpp"

using namespace chiforge;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNotInClass = 2;
constexpr int kExitStructure = 3;
constexpr int kExitBoundFailure = 4;

Budget budget_from(std::uint64_t flag_value) {
    Budget b;
    if (flag_value > 0) {
        b.max_nodes = flag_value;
    } else if (const char* env = std::getenv("CHIFORGE_BUDGET")) {
        b.max_nodes = std::strtoull(env, nullptr, 10);
    }
    return b;
}

bool file_exists(const std::string& path) { return std::ifstream(path).good(); }

bool has_suffix(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<StreamItem> load_file(const std::string& path) {
    if (has_suffix(path, ".col")) {
        return {{read_dimacs_file(path), path, 0}};
    }
    GraphStream stream = read_corpus(path);
    std::vector<StreamItem> items = stream.drain();
    for (const auto& d : stream.diagnostics()) {
        std::cerr << path << ":" << d.line << ": " << d.message << "\n";
    }
    return items;
}

// Accepts a corpus path (graph6, or DIMACS via .col), an inline graph6
// string, or both inputs empty. Parse diagnostics go to stderr.
std::vector<StreamItem> load_inputs(const std::string& corpus, const std::string& inline_input) {
    if (!corpus.empty()) return load_file(corpus);
    if (inline_input.empty()) return {};
    if (file_exists(inline_input)) return load_file(inline_input);
    return {{read_graph6(inline_input), "inline", 0}};
}

std::string join_vertices(const std::vector<int>& vs) {
    std::string out;
    for (int v : vs) {
        if (!out.empty()) out += ",";
        out += std::to_string(v);
    }
    return out;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw Error("cannot open output file " + path);
    return file;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified colorings for 2K2-free graph classes"};
    app.require_subcommand(0, 1);

    std::string check_cert_path;
    app.add_option("--check-cert", check_cert_path, "re-verify a certificate JSON file and exit");

    std::uint64_t budget_flag = 0;
    app.add_option("--budget", budget_flag, "oracle node budget (overrides CHIFORGE_BUDGET)");

    // recognize
    auto* rec = app.add_subcommand("recognize", "test class membership, with witnesses");
    std::string rec_class, rec_corpus, rec_input;
    rec->add_option("--class", rec_class, "class name")->required();
    rec->add_option("--corpus", rec_corpus, "graph6 corpus file");
    rec->add_option("input", rec_input, "graph6 string or corpus path");

    // color
    auto* col = app.add_subcommand("color", "run the class's certified coloring");
    std::string col_class, col_corpus, col_input, col_out;
    col->add_option("--class", col_class, "class name")->required();
    col->add_option("--corpus", col_corpus, "graph6 corpus file");
    col->add_option("input", col_input, "graph6 string or corpus path");
    col->add_option("--out", col_out, "write certificate JSON here");

    // sweep
    auto* swp = app.add_subcommand("sweep", "verify bounds over a corpus or exhaustively");
    int swp_n = -1;
    std::vector<std::string> swp_classes;
    std::string swp_corpus, swp_out, swp_format = "csv";
    int swp_jobs = 0;
    bool swp_no_chi = false, swp_timing = false;
    swp->add_option("--n", swp_n, "exhaustive sweep over all labeled graphs on n vertices (n <= 7)");
    swp->add_option("--corpus", swp_corpus, "graph6 corpus file");
    swp->add_option("--class", swp_classes, "class names (repeat or comma-separate)")
        ->required()
        ->delimiter(',');
    swp->add_option("--out", swp_out, "report file (default stdout)");
    swp->add_option("--format", swp_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    swp->add_option("--jobs", swp_jobs, "worker count; 1 forces the serial reference");
    swp->add_flag("--no-chi", swp_no_chi, "skip the exact chromatic oracle");
    swp->add_flag("--timing", swp_timing, "emit real runtimes (breaks byte-stability)");

    // gen
    auto* gen = app.add_subcommand("gen", "emit generated families as graph6");
    std::string gen_family, gen_sizes, gen_class;
    int gen_n = 6;
    std::uint64_t gen_seed = 1;
    gen->add_option("--family", gen_family, "c5-expansion or random")->required();
    gen->add_option("--sizes", gen_sizes, "c5-expansion part sizes, e.g. 2,1,1,1,1");
    gen->add_option("--class", gen_class, "target class for random members");
    gen->add_option("--n", gen_n, "order for random members");
    gen->add_option("--seed", gen_seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        Budget budget = budget_from(budget_flag);

        if (!check_cert_path.empty()) {
            std::ifstream in(check_cert_path);
            if (!in) {
                std::cerr << "cannot open " << check_cert_path << "\n";
                return kExitUsage;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            try {
                check_certificate_json(buf.str());
            } catch (const CertificateError& e) {
                std::cerr << "certificate FAILED: " << e.what() << "\n";
                return kExitBoundFailure;
            }
            std::cout << "certificate OK\n";
            return 0;
        }

        if (rec->parsed()) {
            const ClassSpec& spec = class_by_name(rec_class);
            auto items = load_inputs(rec_corpus, rec_input);
            if (items.empty()) {
                std::cerr << "no input graphs\n";
                return kExitUsage;
            }
            for (const auto& item : items) {
                FreeVerdict fv = is_free(item.graph, spec);
                std::cout << item.source << ":" << item.index << " " << write_graph6(item.graph)
                          << " ";
                if (fv.member) {
                    std::cout << "member\n";
                } else {
                    std::cout << "excluded pattern=" << pattern_info(fv.witness->pattern).name
                              << " vertices=" << join_vertices(fv.witness->mapping) << "\n";
                }
            }
            return 0;
        }

        if (col->parsed()) {
            auto items = load_inputs(col_corpus, col_input);
            if (items.empty()) {
                std::cerr << "no input graphs\n";
                return kExitUsage;
            }
            const Graph& g = items.front().graph;
            const ClassSpec& spec = class_by_name(col_class);
            FreeVerdict fv = is_free(g, spec);
            if (!fv.member) {
                std::cerr << "not in class " << col_class << ": induced "
                          << pattern_info(fv.witness->pattern).name << " on vertices "
                          << join_vertices(fv.witness->mapping) << "\n";
                return kExitNotInClass;
            }
            auto colorer = colorer_for_class(col_class);
            if (!colorer) {
                std::cerr << "class " << col_class
                          << " has no constructive colorer (verification-only); use sweep\n";
                return kExitUsage;
            }
            BoundedColoring bc = (*colorer)(g, budget);
            std::ofstream file;
            open_out(file, col_out) << certificate_to_json(g, col_class, bc) << "\n";
            return 0;
        }

        if (swp->parsed()) {
            SweepOptions opts;
            opts.jobs = swp_jobs;
            opts.compute_chi = !swp_no_chi;
            opts.budget = budget;
            SweepResult result;
            if (!swp_corpus.empty()) {
                result = sweep_corpus(load_inputs(swp_corpus, ""), swp_classes, opts);
            } else if (swp_n >= 0) {
                result = sweep_exhaustive(swp_n, swp_classes, opts);
            } else {
                std::cerr << "sweep needs --n or --corpus\n";
                return kExitUsage;
            }
            std::ofstream file;
            std::ostream& out = open_out(file, swp_out);
            if (swp_format == "csv") {
                out << bound_report_csv_header() << "\n";
                for (const auto& r : result.rows) out << bound_report_csv_row(r, swp_timing) << "\n";
            } else {
                for (const auto& r : result.rows) out << bound_report_json(r, swp_timing) << "\n";
            }
            const auto& s = result.summary;
            std::cerr << "graphs=" << s.graphs << " rows=" << s.rows << " members=" << s.members
                      << " failures=" << s.failures << " skipped=" << s.skipped << "\n";
            for (const auto& [cls, gap] : s.max_gap) {
                std::cerr << "max chi-omega [" << cls << "] = " << gap << "\n";
            }
            return s.failures == 0 ? 0 : kExitBoundFailure;
        }

        if (gen->parsed()) {
            if (gen_family == "c5-expansion") {
                std::array<int, 5> sizes{1, 1, 1, 1, 1};
                std::stringstream ss(gen_sizes);
                std::string tok;
                std::size_t i = 0;
                while (std::getline(ss, tok, ',') && i < 5) sizes[i++] = std::stoi(tok);
                std::cout << write_graph6(c5_expansion_family(sizes)) << "\n";
                return 0;
            }
            if (gen_family == "random") {
                if (gen_class.empty()) {
                    std::cerr << "random family needs --class\n";
                    return kExitUsage;
                }
                const ClassSpec& spec = class_by_name(gen_class);
                auto g = random_in_class(gen_n, spec, gen_seed);
                if (!g) {
                    std::cerr << "no member found within the attempt budget\n";
                    return 0;
                }
                if (!is_free(*g, spec).member) {
                    std::cerr << "internal error: sampled graph fails re-verification\n";
                    return kExitBoundFailure;
                }
                std::cout << write_graph6(*g) << "\n";
                return 0;
            }
            std::cerr << "unknown family " << gen_family << " (know: c5-expansion, random)\n";
            return kExitUsage;
        }

        std::cout << app.help();
        return 0;
    } catch (const UnknownClass& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const StructureViolation& e) {
        std::cerr << "structure violation [" << e.claim << "] vertices "
                  << join_vertices(e.vertices) << "\n";
        return kExitStructure;
    } catch (const NotInClass& e) {
        std::cerr << e.what() << "\n";
        return kExitNotInClass;
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.offset << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}
