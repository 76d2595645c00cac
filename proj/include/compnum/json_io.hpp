#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "compnum/analyze.hpp"
#include "compnum/certify.hpp"
#include "compnum/competition.hpp"
#include "compnum/sweep.hpp"

namespace compnum {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Certificates

inline json certificate_to_json(const Certificate& c) {
    json arcs = json::array();
    for (auto [u, v] : c.d.arcs()) arcs.push_back({u, v});
    auto topo = topological_order(c.d);
    json j{{"base_n", c.base_n},
           {"k", c.k},
           {"method", to_string(c.method)},
           {"arcs", std::move(arcs)}};
    j["topo_order"] = topo.acyclic ? json(topo.order) : json(nullptr);
    return j;
}

inline Certificate certificate_from_json(const json& j) {
    try {
        Certificate c;
        c.base_n = j.at("base_n").get<int>();
        c.k = j.at("k").get<int>();
        auto method = cert_method_from_string(j.at("method").get<std::string>());
        c.method = method.value_or(CertMethod::user);
        std::vector<std::pair<int, int>> arcs;
        for (const auto& a : j.at("arcs"))
            arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
        c.d = Digraph(c.base_n + c.k, std::move(arcs));
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad certificate JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Witness subgraphs

inline json witness_to_json(const Graph& g, const SubgraphWitness& w) {
    auto edges_json = [&](const EdgeSet& s) {
        json arr = json::array();
        for (int e = s.next_set(0); e >= 0; e = s.next_set(e + 1)) {
            auto [u, v] = g.edge(e);
            arr.push_back({u, v});
        }
        return arr;
    };
    json chosen = json::array();
    for (const auto& [cycle, e] : w.chosen_edges) {
        auto [u, v] = g.edge(e);
        chosen.push_back({{"cycle", cycle.vertices}, {"edge", {u, v}}});
    }
    return json{{"kept_edges", edges_json(w.kept_edges)},
                {"star_edges", edges_json(w.star_edges)},
                {"chosen_edges", std::move(chosen)}};
}

/// Reads a witness from {"kept_edges": [[u,v],...]}; star edges are derived.
inline SubgraphWitness witness_from_json(const Graph& g, const json& j) {
    SubgraphWitness w{EdgeSet(g.edge_count()), EdgeSet(g.edge_count()), {}};
    try {
        for (const auto& p : j.at("kept_edges")) {
            int u = p.at(0).get<int>(), v = p.at(1).get<int>();
            int id = g.edge_id(u, v);
            if (id < 0)
                throw ParseError("witness keeps " + std::to_string(u) + "-" +
                                 std::to_string(v) + ", which is not an edge of the graph");
            w.kept_edges.set(id);
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad witness JSON: ") + e.what());
    }
    w.star_edges = g.all_edges_set();
    w.star_edges.subtract(w.kept_edges);
    return w;
}

// ---------------------------------------------------------------------------
// Reports

inline json report_to_json(const Report& r, bool include_certificates = true) {
    auto opt_int = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
    json j{{"id", r.id},
           {"n", r.n},
           {"m", r.m},
           {"connected", r.connected},
           {"hole_count", opt_int(r.hole_count)},
           {"dim_hole_space", opt_int(r.dim_hole_space)},
           {"dim_cycle_space", opt_int(r.dim_cycle_space)},
           {"k_exact", opt_int(r.k_exact)},
           {"k_lower", opt_int(r.k_lower)},
           {"k_upper", opt_int(r.k_upper)},
           {"upper_method", r.upper_method.empty() ? json(nullptr) : json(r.upper_method)},
           {"conjecture", to_string(r.conjecture)},
           {"slack", opt_int(r.slack)},
           {"notes", r.notes}};
    if (r.families) {
        const auto& t = *r.families;
        j["families"] = json{{"triangle_count", t.triangle_count},
                             {"chordal", t.chordal},
                             {"triangle_free", t.triangle_free},
                             {"exactly_one_triangle", t.exactly_one_triangle},
                             {"at_most_three_triangles", t.at_most_three_triangles},
                             {"g1_two_holes", t.g1_two_holes},
                             {"g2_independent_holes", t.g2_independent_holes},
                             {"g3_edge_disjoint_holes", t.g3_edge_disjoint_holes},
                             {"g4_private_edge", t.g4_private_edge}};
    } else {
        j["families"] = nullptr;
    }
    if (!r.hole_list.empty() || r.hole_list_truncated) {
        j["holes"] = r.hole_list;
        j["holes_truncated"] = r.hole_list_truncated;
    }
    json timings = json::object();
    for (const auto& [k, v] : r.timings_ms) timings[k] = v;
    j["timings_ms"] = std::move(timings);
    if (include_certificates) {
        j["exact_certificate"] =
            r.exact_certificate ? certificate_to_json(*r.exact_certificate) : json(nullptr);
        j["upper_certificate"] =
            r.upper_certificate ? certificate_to_json(*r.upper_certificate) : json(nullptr);
    }
    return j;
}

inline const char* kReportTsvHeader =
    "id\tn\tm\tconnected\thole_count\tdim_hole_space\tdim_cycle_space\t"
    "k_exact\tk_lower\tk_upper\tupper_method\tconjecture\tslack\tnotes";

inline std::string report_to_tsv(const Report& r) {
    auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : ""; };
    std::ostringstream out;
    out << r.id << '\t' << r.n << '\t' << r.m << '\t' << (r.connected ? "true" : "false") << '\t'
        << cell(r.hole_count) << '\t' << cell(r.dim_hole_space) << '\t'
        << cell(r.dim_cycle_space) << '\t' << cell(r.k_exact) << '\t' << cell(r.k_lower) << '\t'
        << cell(r.k_upper) << '\t' << r.upper_method << '\t' << to_string(r.conjecture) << '\t'
        << cell(r.slack) << '\t';
    for (std::size_t i = 0; i < r.notes.size(); ++i) {
        if (i) out << "; ";
        out << r.notes[i];
    }
    return out.str();
}

inline json sweep_to_json(const SweepResult& res, bool include_certificates = false) {
    json reports = json::array();
    for (const auto& r : res.reports) reports.push_back(report_to_json(r, include_certificates));
    json hist = json::object();
    for (const auto& [slack, count] : res.summary.slack_histogram)
        hist[std::to_string(slack)] = count;
    return json{{"summary",
                 {{"total", res.summary.total},
                  {"holds", res.summary.holds},
                  {"violated", res.summary.violated},
                  {"unknown", res.summary.unknown},
                  {"slack_histogram", std::move(hist)},
                  {"unknown_ids", res.summary.unknown_ids},
                  {"violated_ids", res.summary.violated_ids}}},
                {"reports", std::move(reports)}};
}

} // namespace compnum
