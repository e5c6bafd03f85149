// Compares the serial reference sweep against the OpenMP kernel on the same
// exhaustive range and checks that the reports match row for row.

#include <CLI11.hpp>
#include <iostream>

#include "chiforge/sweep.hpp"

using namespace chiforge;

namespace {

bool rows_equal(const std::vector<BoundReport>& a, const std::vector<BoundReport>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& x = a[i];
        const auto& y = b[i];
        if (x.index != y.index || x.graph6 != y.graph6 || x.class_name != y.class_name ||
            x.omega != y.omega || x.chi_exact != y.chi_exact || x.k_algorithm != y.k_algorithm ||
            x.bound_value != y.bound_value || x.verdict != y.verdict) {
            std::cerr << "mismatch at row " << i << ": " << x.graph6 << " vs " << y.graph6 << "\n";
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel sweep benchmark"};
    int n = 5;
    std::vector<std::string> classes = {"2k2", "2k2-gem"};
    int jobs = 0;
    app.add_option("--n", n, "exhaustive order (<= 7)");
    app.add_option("--class", classes, "classes to sweep")->delimiter(',');
    app.add_option("--jobs", jobs, "parallel worker count (0 = all cores)");
    CLI11_PARSE(app, argc, argv);

    SweepOptions serial_opts;
    serial_opts.jobs = 1;
    SweepResult serial = sweep_exhaustive_serial(n, classes, serial_opts);

    SweepOptions par_opts;
    par_opts.jobs = jobs;
    SweepResult parallel = sweep_exhaustive(n, classes, par_opts);

    std::cout << "n=" << n << " graphs=" << serial.summary.graphs
              << " member-rows=" << serial.summary.rows << "\n";
    std::cout << "serial:   " << serial.summary.total_ms << " ms\n";
    std::cout << "parallel: " << parallel.summary.total_ms << " ms\n";
    if (parallel.summary.total_ms > 0) {
        std::cout << "speedup:  " << serial.summary.total_ms / parallel.summary.total_ms << "x\n";
    }
    if (!rows_equal(serial.rows, parallel.rows)) {
        std::cout << "FAIL: parallel kernel disagrees with the serial reference\n";
        return 1;
    }
    std::cout << "reports identical\n";
    return 0;
}
