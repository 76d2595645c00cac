#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "compnum/certify.hpp"
#include "compnum/competition.hpp"
#include "compnum/generate.hpp"
#include "compnum/graph.hpp"
#include "compnum/holes.hpp"
#include "compnum/holespace.hpp"

namespace compnum {

enum class ConjectureStatus { holds, violated, unknown };

inline std::string to_string(ConjectureStatus s) {
    switch (s) {
        case ConjectureStatus::holds: return "holds";
        case ConjectureStatus::violated: return "violated";
        case ConjectureStatus::unknown: return "unknown";
    }
    return "unknown";
}

struct AnalyzeOptions {
    int oracle_limit = 9;      // run the exact oracle when n <= this
    OracleOptions oracle;
    HoleOptions hole_budget;
    bool run_oracle = true;
    bool run_pipeline = true;
    bool collect_holes = true; // include the hole list in the report
    int hole_list_cap = 1000;
};

// Everything the tool can say about one graph. Optional fields stay empty
// when a stage was skipped or ran out of budget; "unknown" is never upgraded.
struct Report {
    std::string id;
    int n = 0, m = 0;
    bool connected = false;
    std::optional<int> hole_count;
    std::optional<int> dim_hole_space;
    std::optional<int> dim_cycle_space;
    std::optional<FamilyTags> families;
    std::vector<std::vector<int>> hole_list;
    bool hole_list_truncated = false;
    std::optional<int> k_exact;
    std::optional<int> k_lower; // proven lower bound when exact is unknown
    std::optional<int> k_upper;
    std::string upper_method; // empty when no constructive certificate applies
    std::optional<Certificate> upper_certificate;
    std::optional<Certificate> exact_certificate;
    ConjectureStatus conjecture = ConjectureStatus::unknown;
    std::optional<int> slack; // dim H + 1 - k(G) when both sides are known
    std::map<std::string, double> timings_ms;
    std::vector<std::string> notes;
};

inline Report analyze(const Graph& g, const AnalyzeOptions& opt = {}) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };
    Report r;
    r.id = graph_hash(g);
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.connected = is_connected(g);
    if (r.n == 0) r.notes.push_back("empty graph: competition number reported as 0");

    auto t0 = clock::now();
    try {
        auto tags = recognize_families(g, opt.hole_budget);
        r.hole_count = tags.hole_count;
        r.dim_cycle_space = cycle_space_dimension(g);
        Gf2Basis basis(g.edge_count());
        int listed = 0;
        detail::for_each_chordless_cycle(g, 4, opt.hole_budget, [&](const Cycle& c) {
            basis.insert(chi(g, c));
            if (opt.collect_holes) {
                if (listed < opt.hole_list_cap) {
                    r.hole_list.push_back(c.vertices);
                    ++listed;
                } else {
                    r.hole_list_truncated = true;
                }
            }
            return true;
        });
        r.dim_hole_space = basis.rank();
        r.families = std::move(tags);
    } catch (const BudgetExceeded& e) {
        r.notes.push_back(std::string("hole enumeration: ") + e.what());
    }
    r.timings_ms["holes"] = ms_since(t0);

    if (opt.run_pipeline && r.connected && r.m > 0 && r.families) {
        t0 = clock::now();
        try {
            auto pipe = upper_bound_pipeline(g, opt.hole_budget);
            if (pipe.found) {
                r.k_upper = pipe.k_upper;
                r.upper_method = to_string(pipe.method);
                r.upper_certificate = std::move(pipe.certificate);
            }
        } catch (const BudgetExceeded& e) {
            r.notes.push_back(std::string("certifier pipeline: ") + e.what());
        }
        r.timings_ms["certify"] = ms_since(t0);
    }

    if (opt.run_oracle && r.n <= opt.oracle_limit) {
        t0 = clock::now();
        try {
            auto res = competition_number_exact(g, opt.oracle);
            if (res.exact) {
                r.k_exact = res.k;
                r.exact_certificate = std::move(res.certificate);
            } else {
                r.k_lower = res.lower_bound;
                r.notes.push_back("oracle level " + std::to_string(res.lower_bound) +
                                  " exceeded its time budget; k >= " +
                                  std::to_string(res.lower_bound) + " is proven");
            }
        } catch (const PreconditionError& e) {
            r.notes.push_back(std::string("oracle: ") + e.what());
        }
        r.timings_ms["oracle"] = ms_since(t0);
    }

    if (r.dim_hole_space) {
        const int bound = *r.dim_hole_space + 1;
        if (r.k_exact) {
            r.conjecture =
                *r.k_exact <= bound ? ConjectureStatus::holds : ConjectureStatus::violated;
            r.slack = bound - *r.k_exact;
        } else if (r.k_lower && *r.k_lower > bound) {
            // the oracle exhausted every level up to the bound: a violation
            // is proven even without the exact value
            r.conjecture = ConjectureStatus::violated;
        } else if (r.k_upper && *r.k_upper <= bound) {
            r.conjecture = ConjectureStatus::holds;
        }
    }
    return r;
}

} // namespace compnum
