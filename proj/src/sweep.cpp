#include "chiforge/sweep.hpp"

#include <algorithm>
#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chiforge {

namespace {

std::vector<const ClassSpec*> resolve(const std::vector<std::string>& names) {
    std::vector<const ClassSpec*> specs;
    specs.reserve(names.size());
    for (const auto& name : names) specs.push_back(&class_by_name(name));
    return specs;
}

// Scores one graph against every class; appends member rows (or all rows
// when keep_non_members is set).
void score_graph(const Graph& g, const std::string& source, std::size_t index,
                 const std::vector<const ClassSpec*>& specs, const SweepOptions& opts,
                 std::vector<BoundReport>& out) {
    for (const ClassSpec* spec : specs) {
        VerifyOptions vo;
        vo.compute_chi = opts.compute_chi;
        vo.budget = opts.budget;
        BoundReport rep = verify_class_bound(g, *spec, vo);
        rep.source = source;
        rep.index = index;
        if (rep.member || opts.keep_non_members) out.push_back(std::move(rep));
    }
}

SweepSummary summarize(const std::vector<BoundReport>& rows, std::size_t graphs, double ms) {
    SweepSummary s;
    s.graphs = graphs;
    s.rows = rows.size();
    s.total_ms = ms;
    for (const auto& r : rows) {
        if (r.member) ++s.members;
        if (r.verdict == Verdict::Fail) ++s.failures;
        if (r.verdict == Verdict::Skipped) ++s.skipped;
        if (r.member && r.chi_exact) {
            int gap = *r.chi_exact - r.omega;
            auto [it, inserted] = s.max_gap.try_emplace(r.class_name, gap);
            if (!inserted) it->second = std::max(it->second, gap);
        }
    }
    return s;
}

}  // namespace

SweepResult sweep_exhaustive_serial(int n, const std::vector<std::string>& classes,
                                    const SweepOptions& opts) {
    if (n < 0 || n > 7) {
        throw BudgetError("exhaustive sweep supports n <= 7; use a corpus file for n = " +
                          std::to_string(n));
    }
    const auto t0 = std::chrono::steady_clock::now();
    auto specs = resolve(classes);
    const std::uint64_t total = labeled_graph_count(n);
    const std::string source = "exhaustive(" + std::to_string(n) + ")";
    std::vector<BoundReport> rows;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_mask(n, mask);
        score_graph(g, source, static_cast<std::size_t>(mask), specs, opts, rows);
    }
    const auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    SweepSummary summary = summarize(rows, total, ms);
    return {std::move(rows), std::move(summary)};
}

SweepResult sweep_exhaustive(int n, const std::vector<std::string>& classes,
                             const SweepOptions& opts) {
    if (opts.jobs == 1) return sweep_exhaustive_serial(n, classes, opts);
    if (n < 0 || n > 7) {
        throw BudgetError("exhaustive sweep supports n <= 7; use a corpus file for n = " +
                          std::to_string(n));
    }
    const auto t0 = std::chrono::steady_clock::now();
    auto specs = resolve(classes);
    const std::uint64_t total = labeled_graph_count(n);
    const std::string source = "exhaustive(" + std::to_string(n) + ")";

#ifdef _OPENMP
    int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
    std::vector<std::vector<BoundReport>> shards(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
        std::vector<BoundReport>& mine = shards[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 1024)
        for (long long mask = 0; mask < static_cast<long long>(total); ++mask) {
            Graph g = graph_from_mask(n, static_cast<std::uint64_t>(mask));
            score_graph(g, source, static_cast<std::size_t>(mask), specs, opts, mine);
        }
    }
    std::vector<BoundReport> rows;
    for (auto& shard : shards) {
        rows.insert(rows.end(), std::make_move_iterator(shard.begin()),
                    std::make_move_iterator(shard.end()));
    }
#else
    std::vector<BoundReport> rows;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_mask(n, mask);
        score_graph(g, source, static_cast<std::size_t>(mask), specs, opts, rows);
    }
#endif
    // Deterministic output order by (graph index, class index).
    auto rank_of = [&](const BoundReport& r) {
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (classes[i] == r.class_name) return i;
        }
        return classes.size();
    };
    std::sort(rows.begin(), rows.end(), [&](const BoundReport& a, const BoundReport& b) {
        if (a.index != b.index) return a.index < b.index;
        return rank_of(a) < rank_of(b);
    });
    const auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    SweepSummary summary = summarize(rows, total, ms);
    return {std::move(rows), std::move(summary)};
}

SweepResult sweep_corpus(const std::vector<StreamItem>& items,
                         const std::vector<std::string>& classes, const SweepOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    auto specs = resolve(classes);
    SweepOptions corpus_opts = opts;
    corpus_opts.keep_non_members = true;
    std::vector<std::vector<BoundReport>> per_item(items.size());

#ifdef _OPENMP
    int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long long i = 0; i < static_cast<long long>(items.size()); ++i) {
        const auto& item = items[static_cast<std::size_t>(i)];
        score_graph(item.graph, item.source, item.index, specs, corpus_opts,
                    per_item[static_cast<std::size_t>(i)]);
    }
    std::vector<BoundReport> rows;
    for (auto& chunk : per_item) {
        rows.insert(rows.end(), std::make_move_iterator(chunk.begin()),
                    std::make_move_iterator(chunk.end()));
    }
    const auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    SweepSummary summary = summarize(rows, items.size(), ms);
    return {std::move(rows), std::move(summary)};
}

}  // namespace chiforge
