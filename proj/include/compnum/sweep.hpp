#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "compnum/analyze.hpp"

namespace compnum {

struct SweepOptions {
    AnalyzeOptions analyze;
    int jobs = 1;
    SweepOptions() { analyze.collect_holes = false; }
};

struct SweepSummary {
    int total = 0;
    int holds = 0;
    int violated = 0;
    int unknown = 0;
    std::map<int, int> slack_histogram; // dim H + 1 - k over graphs with exact k
    std::vector<std::string> unknown_ids;
    std::vector<std::string> violated_ids;
};

struct SweepResult {
    std::vector<Report> reports; // sorted by graph hash
    SweepSummary summary;
};

/// Analyzes every graph independently (optionally across threads); per-graph
/// failures are isolated into an "unknown" report and the sweep continues.
inline SweepResult run_sweep(const std::vector<Graph>& graphs, const SweepOptions& opt = {}) {
    SweepResult out;
    out.reports.resize(graphs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= graphs.size()) break;
            try {
                out.reports[i] = analyze(graphs[i], opt.analyze);
            } catch (const std::exception& e) {
                Report r;
                r.id = graph_hash(graphs[i]);
                r.n = graphs[i].vertex_count();
                r.m = graphs[i].edge_count();
                r.connected = is_connected(graphs[i]);
                r.notes.push_back(std::string("analysis failed: ") + e.what());
                out.reports[i] = std::move(r);
            }
        }
    };
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::sort(out.reports.begin(), out.reports.end(),
              [](const Report& a, const Report& b) { return a.id < b.id; });
    auto& s = out.summary;
    s.total = static_cast<int>(out.reports.size());
    for (const auto& r : out.reports) {
        switch (r.conjecture) {
            case ConjectureStatus::holds: ++s.holds; break;
            case ConjectureStatus::violated:
                ++s.violated;
                s.violated_ids.push_back(r.id);
                break;
            case ConjectureStatus::unknown:
                ++s.unknown;
                s.unknown_ids.push_back(r.id);
                break;
        }
        if (r.slack) ++s.slack_histogram[*r.slack];
    }
    return out;
}

} // namespace compnum
