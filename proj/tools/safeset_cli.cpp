// safeset: command-line front end.
// Exit codes: 0 success / pass, 1 verification failure, 2 input error.

#include "safeset/io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

using namespace safeset;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

// "@path" reads the argument from a file ("@-" from stdin).
std::string argument_text(const std::string& value) {
    return value.starts_with("@") ? slurp(value.substr(1)) : value;
}

Graph read_graph(const std::string& g6) {
    Graph g = from_graph6(argument_text(g6));
    return g;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<Graph> read_graph6_lines(const std::string& path) {
    std::istringstream in(slurp(path));
    std::vector<Graph> out;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (line.starts_with(">>graph6<<")) line.erase(0, 10);  // optional nauty header
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(from_graph6(line));
        } catch (const InputError& e) {
            throw InputError(path + " line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted safe sets: exact solver, family recognition, and s < cs certificates"};
    app.require_subcommand(1);

    std::string graph6, weights_arg, cert_arg, partition_arg, set_arg, pattern_arg, out_path, csv_path, input_path;
    bool all_optima = false, timing = false;
    std::uint64_t budget = kDefaultPatternBudget, seed = 1;
    int attempts = CertifyOptions{}.random_attempts;
    int max_order = 7, min_order = 1, samples = 50, jobs = 0;
    std::string filter = "bipartite,chordal,triangle-free";

    auto* solve = app.add_subcommand("solve", "exact s(G,w) and cs(G,w) with witness sets");
    solve->add_option("--graph6", graph6, "graph in graph6 (or @file)")->required();
    solve->add_option("--weights", weights_arg, "JSON array of rationals or {\"weights\": [...]} (or @file); default all ones");
    solve->add_flag("--all", all_optima, "also list every minimum safe set");

    auto* recognize = app.add_subcommand("recognize", "classify membership and report the family");
    recognize->add_option("--graph6", graph6, "graph in graph6 (or @file)")->required();

    auto* witness = app.add_subcommand("witness", "search for a verified s < cs certificate");
    witness->add_option("--graph6", graph6, "graph in graph6 (or @file)")->required();
    witness->add_option("--budget", budget, "candidate partitions per pattern search");
    witness->add_option("--seed", seed, "seed for the random fallback");
    witness->add_option("--attempts", attempts, "random weight functions tried after the patterns");

    auto* verify = app.add_subcommand("verify-certificate", "re-check a certificate with the exact solver");
    verify->add_option("--certificate", cert_arg, "certificate JSON (or @file, @- for stdin)")->required();

    auto* contract_cmd = app.add_subcommand("contract", "contract a partition, build beta(G,S), or search a pattern");
    contract_cmd->add_option("--graph6", graph6, "graph in graph6 (or @file)")->required();
    auto* part_opt = contract_cmd->add_option("--partition", partition_arg, "{\"bags\": [[ids], ...]} (or @file)");
    auto* set_opt = contract_cmd->add_option("--safe-set", set_arg, "JSON id array S; prints beta(G,S)");
    auto* pat_opt = contract_cmd->add_option("--pattern", pattern_arg, "H1, H2, H3 or KMN; prints a match if found");
    contract_cmd->add_option("--budget", budget, "candidate partitions for --pattern");
    part_opt->excludes(set_opt)->excludes(pat_opt);
    set_opt->excludes(pat_opt);

    auto* campaign = app.add_subcommand("campaign", "sweep small graphs and cross-check verdicts against the solver");
    campaign->add_option("--max-order", max_order, "largest order (<= 8)");
    campaign->add_option("--min-order", min_order, "smallest order");
    campaign->add_option("--samples", samples, "random weight functions per member graph");
    campaign->add_option("--seed", seed, "master seed");
    campaign->add_option("--filter", filter, "comma list of bipartite, chordal, triangle-free, all");
    campaign->add_option("--out", out_path, "report JSON path (default stdout)");
    campaign->add_option("--csv", csv_path, "also write a CSV summary");
    campaign->add_option("--input", input_path, "graph6 file, one graph per line, instead of enumeration");
    campaign->add_option("--jobs", jobs, "worker threads (0: all cores)");
    campaign->add_flag("--timing", timing, "include wall-clock time (reports are then not byte-identical)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*solve) {
            const Graph g = read_graph(graph6);
            const WeightFn w = weights_arg.empty() ? WeightFn::constant(g.order(), Rational(1))
                                                   : weights_from_json(parse_json_text(argument_text(weights_arg), "weights"));
            print(solution_report(g, safe_number(g, w, {.collect_all = all_optima}),
                                  connected_safe_number(g, w, {.collect_all = all_optima})));
            return kExitOk;
        }
        if (*recognize) {
            const Graph g = read_graph(graph6);
            print(classification_report(g, classify(g)));
            return kExitOk;
        }
        if (*witness) {
            const Graph g = read_graph(graph6);
            CertifyOptions opt;
            opt.pattern_budget = budget;
            opt.seed = seed;
            opt.random_attempts = attempts;
            if (auto c = certify_non_membership(g, opt)) {
                json j = to_json(*c);
                j["result"] = "certified";
                print(j);
            } else {
                print({{"schemaVersion", kSchemaVersion}, {"graph6", to_graph6(g)}, {"result", "unknown"}});
            }
            return kExitOk;
        }
        if (*verify) {
            const WitnessCertificate c = certificate_from_json(parse_json_text(argument_text(cert_arg), "certificate"));
            const auto why = certificate_violation(c);
            json j{{"schemaVersion", kSchemaVersion}, {"graph6", to_graph6(c.graph)}, {"valid", !why}};
            if (why) j["reason"] = *why;
            print(j);
            return why ? kExitFailed : kExitOk;
        }
        if (*contract_cmd) {
            const Graph g = read_graph(graph6);
            if (!pattern_arg.empty()) {
                auto p = parse_pattern(pattern_arg);
                if (!p) throw InputError("--pattern: expected H1, H2, H3 or KMN, got " + pattern_arg);
                if (!is_connected(g)) throw InputError("pattern search needs a connected graph");
                const auto r = search_pattern(g, *p, budget);
                json j{{"schemaVersion", kSchemaVersion}, {"graph6", to_graph6(g)}, {"examined", r.examined}};
                j["result"] = r.match ? "found" : (r.exhausted ? "none" : "unknown");
                if (r.match) j["match"] = to_json(*r.match);
                print(j);
                return kExitOk;
            }
            if (!set_arg.empty()) {
                const VertexSet s = vertex_set_from_json(parse_json_text(argument_text(set_arg), "safe set"), "safe-set");
                const auto q = beta(g, s);
                print(quotient_report(q.quotient, q.bags, &q.in_s));
                return kExitOk;
            }
            if (partition_arg.empty()) throw InputError("contract needs --partition, --safe-set or --pattern");
            const auto bags = partition_from_json(parse_json_text(argument_text(partition_arg), "partition"));
            print(quotient_report(contract(g, bags), bags));
            return kExitOk;
        }
        if (*campaign) {
            CampaignOptions opt;
            if (max_order < 1 || max_order > kMaxEnumerationOrder)
                throw InputError("--max-order must be in 1.." + std::to_string(kMaxEnumerationOrder));
            if (max_order == 8 && input_path.empty())
                std::cerr << "warning: order 8 adds 11117 graphs to enumerate; expect a long run\n";
            opt.min_order = min_order;
            opt.max_order = max_order;
            opt.samples = samples;
            opt.seed = seed;
            opt.jobs = jobs;
            opt.timing = timing;
            opt.sweeps.clear();
            std::stringstream list(filter);
            for (std::string item; std::getline(list, item, ',');) {
                auto s = parse_sweep(item);
                if (!s) throw InputError("--filter: unknown sweep '" + item + "'");
                opt.sweeps.push_back(*s);
            }
            if (opt.sweeps.empty()) throw InputError("--filter: no sweeps given");
            if (!input_path.empty()) opt.input = read_graph6_lines(input_path);
            const CampaignReport report = run_characterization_campaign(opt);
            const std::string text = to_json(report).dump(2) + "\n";
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream(out_path) << text;
                std::cerr << "graphs " << report.counts.total << ", failures " << report.failures.size() << "\n";
            }
            if (!csv_path.empty()) std::ofstream(csv_path) << campaign_csv(report);
            return report.passed() ? kExitOk : kExitFailed;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
