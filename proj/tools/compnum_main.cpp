// compnum: analyze graphs, build and verify competition-number certificates,
// and sweep graph corpora hunting for violations of k(G) <= dim H(G) + 1.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "compnum/compnum.hpp"
#include "compnum/graph6.hpp"

namespace {

using namespace compnum;

// exit codes; see README
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInternal = 2,
    kViolation = 3,
    kUnknown = 4,
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

bool looks_like_graph6(const std::string& text) {
    for (const char* p = text.c_str(); *p; ++p) {
        if (*p == '\n' || *p == '\r') continue;
        // an edge list line starts with a digit, 'n', or '#'
        return !(std::isdigit(static_cast<unsigned char>(*p)) || *p == 'n' || *p == '#');
    }
    return false;
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_file(path);
    std::string fmt = format;
    if (fmt == "auto") {
        if (path.size() > 3 && path.substr(path.size() - 3) == ".g6")
            fmt = "graph6";
        else if (path.size() > 6 && path.substr(path.size() - 6) == ".edges")
            fmt = "edges";
        else
            fmt = looks_like_graph6(text) ? "graph6" : "edges";
    }
    if (fmt == "graph6") {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty() || line[0] == '>' || line[0] == '#') continue;
            return parse_graph6(line);
        }
        throw ParseError(path + ": no graph6 line found");
    }
    return parse_edge_list(text);
}

std::vector<Graph> load_graph6_corpus(const std::string& path) {
    std::string text = read_file(path);
    std::istringstream in(text);
    std::string line;
    std::vector<Graph> out;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '>' || line[0] == '#') continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(path + " line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

int exit_code_for(const Report& r) {
    if (r.conjecture == ConjectureStatus::violated) return kViolation;
    if (r.conjecture == ConjectureStatus::unknown) return kUnknown;
    return kOk;
}

int cmd_analyze(const std::string& input, const std::string& format, const AnalyzeOptions& opt,
                bool tsv, const std::string& out_path) {
    Graph g = load_graph(input, format);
    Report r = analyze(g, opt);
    if (tsv)
        write_output(out_path, std::string(kReportTsvHeader) + "\n" + report_to_tsv(r));
    else
        write_output(out_path, report_to_json(r).dump(2));
    return exit_code_for(r);
}

int cmd_certify(const std::string& input, const std::string& format, const std::string& method,
                const std::string& witness_path, const AnalyzeOptions& opt,
                const std::string& out_path) {
    Graph g = load_graph(input, format);
    Certificate cert;
    if (method == "chordal") {
        cert = chordal_certificate(g);
    } else if (method == "triangle-free") {
        cert = triangle_free_certificate(g);
    } else if (method == "three-triangles") {
        auto res = newfamily_certificate(g, subgraph_for_three_triangles(g));
        res.certificate.method = CertMethod::three_triangles;
        cert = std::move(res.certificate);
    } else if (method == "g4") {
        auto res = newfamily_certificate(g, subgraph_for_g4(g));
        res.certificate.method = CertMethod::g4;
        cert = std::move(res.certificate);
    } else if (method == "newfamily") {
        if (witness_path.empty())
            throw PreconditionError("--method newfamily requires --witness FILE");
        auto w = witness_from_json(g, json::parse(read_file(witness_path)));
        auto res = newfamily_certificate(g, w, /*allow_oracle_base=*/true, opt.oracle);
        cert = std::move(res.certificate);
    } else if (method == "oracle") {
        auto res = competition_number_exact(g, opt.oracle);
        if (!res.exact)
            throw BudgetExceeded("oracle exhausted its budget; k >= " +
                                 std::to_string(res.lower_bound) + " proven, no certificate");
        cert = std::move(*res.certificate);
    } else if (method == "auto") {
        bool done = false;
        if (is_connected(g) && g.edge_count() > 0) {
            auto pipe = upper_bound_pipeline(g, opt.hole_budget);
            if (pipe.found) {
                cert = std::move(*pipe.certificate);
                done = true;
            }
        }
        if (!done) {
            if (g.vertex_count() > opt.oracle_limit)
                throw PreconditionError(
                    "no constructive method applies and the graph exceeds --oracle-limit");
            auto res = competition_number_exact(g, opt.oracle);
            if (!res.exact)
                throw BudgetExceeded("oracle exhausted its budget; k >= " +
                                     std::to_string(res.lower_bound) + " proven");
            cert = std::move(*res.certificate);
        }
    } else {
        throw PreconditionError("unknown method '" + method + "'");
    }
    if (auto check = verify_certificate(g, cert); !check.ok) {
        std::cerr << "internal error: emitted certificate failed verification: " << check.failure
                  << "\n";
        return kInternal;
    }
    write_output(out_path, certificate_to_json(cert).dump(2));
    return kOk;
}

int cmd_sweep(const std::string& file, int exhaustive_n, int random_n, double random_p,
              int random_count, std::uint64_t seed, const SweepOptions& opt, bool tsv,
              const std::string& out_path) {
    std::vector<Graph> graphs;
    int sources = (!file.empty()) + (exhaustive_n > 0) + (random_n > 0);
    if (sources != 1)
        throw PreconditionError(
            "choose exactly one source: FILE, --exhaustive N, or --random-n N");
    if (!file.empty()) {
        graphs = load_graph6_corpus(file);
    } else if (exhaustive_n > 0) {
        for (int n = 1; n <= exhaustive_n; ++n)
            for (const auto& g : connected_graphs(n)) graphs.push_back(g);
    } else {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < random_count; ++i) graphs.push_back(random_graph(random_n, random_p, rng));
    }
    SweepResult res = run_sweep(graphs, opt);
    if (tsv) {
        std::ostringstream out;
        out << kReportTsvHeader << "\n";
        for (const auto& r : res.reports) out << report_to_tsv(r) << "\n";
        out << "# total=" << res.summary.total << " holds=" << res.summary.holds
            << " violated=" << res.summary.violated << " unknown=" << res.summary.unknown << "\n";
        write_output(out_path, out.str());
    } else {
        write_output(out_path, sweep_to_json(res, res.summary.violated > 0).dump(2));
    }
    if (res.summary.violated > 0) return kViolation;
    if (res.summary.unknown > 0) return kUnknown;
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"competition numbers and hole spaces of graphs"};
    app.require_subcommand(1);

    std::string input, format = "auto", out_path, method = "auto", witness_path, sweep_file;
    bool tsv = false;
    int exhaustive_n = 0, random_n = 0, random_count = 100;
    double random_p = 0.5;
    std::uint64_t seed = 1;
    AnalyzeOptions opt;
    SweepOptions sweep_opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "input format: edges, graph6, auto")
            ->check(CLI::IsMember({"edges", "graph6", "auto"}));
        sub->add_option("--oracle-limit", opt.oracle_limit,
                        "run the exact oracle only when n <= this (default 9)");
        sub->add_option("--time-budget", opt.oracle.level_time_budget,
                        "seconds per oracle level (default 60)");
        sub->add_option("--out", out_path, "write output to this file instead of stdout");
        sub->add_flag("--tsv", tsv, "tab-separated output instead of JSON");
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for a single graph");
    analyze_cmd->add_option("input", input, "graph file")->required();
    add_common(analyze_cmd);

    auto* certify_cmd = app.add_subcommand("certify", "emit a verified certificate");
    certify_cmd->add_option("input", input, "graph file")->required();
    certify_cmd
        ->add_option("--method", method,
                     "auto, chordal, triangle-free, three-triangles, g4, newfamily, oracle")
        ->check(CLI::IsMember(
            {"auto", "chordal", "triangle-free", "three-triangles", "g4", "newfamily", "oracle"}));
    certify_cmd->add_option("--witness", witness_path, "witness JSON for --method newfamily");
    add_common(certify_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "analyze a corpus and tally the conjecture");
    sweep_cmd->add_option("file", sweep_file, "file of graph6 lines");
    sweep_cmd->add_option("--exhaustive", exhaustive_n,
                          "all connected graphs with 1 <= n <= N (N <= 7)");
    sweep_cmd->add_option("--random-n", random_n, "random model: vertex count");
    sweep_cmd->add_option("--random-p", random_p, "random model: edge probability");
    sweep_cmd->add_option("--random-count", random_count, "random model: number of samples");
    sweep_cmd->add_option("--seed", seed, "random model seed");
    sweep_cmd->add_option("--jobs", sweep_opt.jobs, "worker threads (default 1)");
    add_common(sweep_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(input, format, opt, tsv, out_path);
        if (certify_cmd->parsed())
            return cmd_certify(input, format, method, witness_path, opt, out_path);
        sweep_opt.analyze = opt;
        sweep_opt.analyze.collect_holes = false;
        return cmd_sweep(sweep_file, exhaustive_n, random_n, random_p, random_count, seed,
                         sweep_opt, tsv, out_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kUnknown;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
