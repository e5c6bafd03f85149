#pragma once

#include <map>
#include <string>
#include <vector>

#include "chiforge/decompose.hpp"
#include "chiforge/generators.hpp"

namespace chiforge {

struct SweepOptions {
    int jobs = 0;  // 0 = all cores, 1 = forced serial
    bool compute_chi = true;
    Budget budget;
    // Exhaustive mode emits member rows only; corpus mode keeps every row.
    bool keep_non_members = false;
};

struct SweepSummary {
    std::size_t graphs = 0;
    std::size_t rows = 0;
    std::size_t members = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;
    // Largest observed chi - omega per class, members with exact chi only.
    std::map<std::string, int> max_gap;
    double total_ms = 0.0;
};

struct SweepResult {
    std::vector<BoundReport> rows;
    SweepSummary summary;
};

// Serial reference implementation; the parallel kernel must match it row
// for row.
SweepResult sweep_exhaustive_serial(int n, const std::vector<std::string>& classes,
                                    const SweepOptions& opts = {});

// OpenMP kernel over the edge-mask range. Rows come back ordered by
// (graph index, class index) regardless of scheduling.
SweepResult sweep_exhaustive(int n, const std::vector<std::string>& classes,
                             const SweepOptions& opts = {});

SweepResult sweep_corpus(const std::vector<StreamItem>& items,
                         const std::vector<std::string>& classes, const SweepOptions& opts = {});

}  // namespace chiforge
