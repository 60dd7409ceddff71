#include "graphtensor/cli.hpp"

#include "graphtensor/counters.hpp"
#include "graphtensor/errors.hpp"
#include "graphtensor/oracle.hpp"
#include "graphtensor/plan.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace graphtensor::cli {

namespace {

struct Options {
    std::string input = "-";
    int r = 3;
    std::string strategy = "greedy";
    std::string order;
    int limit = kDefaultExhaustiveLimit;
    std::string x;
    std::string t = "0";
    int max_weight = -1;
    int threads = 1;
    std::uint64_t seed = SpectrumOptions{}.seed;
    std::vector<int> verify_r;
    bool stats = false;
};

Graph load_graph(const std::string& path, std::istream& in) {
    if (path == "-") return parse_graph(in);
    std::ifstream file(path);
    if (!file) throw ArgumentError("cannot open '" + path + "'");
    return parse_graph(file);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream stream(text);
    while (std::getline(stream, item, sep)) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<Vertex> parse_order(const std::string& text) {
    std::vector<Vertex> order;
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream stream(normalized);
    std::string tok;
    while (stream >> tok) {
        const BigInt v = parse_bigint(tok);
        if (!v.fits_sint_p()) throw ArgumentError("vertex id out of range: " + tok);
        order.push_back(static_cast<Vertex>(v.get_si()));
    }
    return order;
}

ContractionPlan make_plan(const Graph& g, const Options& opt, int r) {
    if (opt.strategy == "greedy") return plan_greedy(g, r);
    if (opt.strategy == "exhaustive") return plan_exhaustive(g, r, opt.limit);
    if (opt.strategy == "given") {
        if (opt.order.empty() && g.vertex_count() > 0) throw ArgumentError("--strategy given needs --order");
        return plan_given(g, parse_order(opt.order), r);
    }
    throw ArgumentError("unknown strategy '" + opt.strategy + "'");
}

void report_stats(std::ostream& err, const ContractionPlan& plan, const ContractStats& stats) {
    err << "predicted_cost " << plan.predicted_cost.get_str() << " peak_states " << stats.peak_states
        << " total_states " << stats.total_states << " completions " << stats.completions << '\n';
}

// Counting subcommand with the plan built for `r` colors.
int print_count(const Graph& g, const Options& opt, int r, std::ostream& out, std::ostream& err,
                const std::function<BigInt(const ContractionPlan*, ContractStats*)>& count) {
    const ContractionPlan plan = make_plan(g, opt, r);
    ContractStats stats;
    const BigInt value = count(&plan, &stats);
    out << value.get_str() << '\n';
    if (opt.stats) report_stats(err, plan, stats);
    return kExitOk;
}

std::string spectrum_json(int n, const CycleSpectrum& spectrum) {
    std::string s = "{\"n\": " + std::to_string(n) + ", \"spectrum\": {";
    bool first = true;
    for (const auto& [lambda, count] : spectrum) {
        if (!first) s += ", ";
        first = false;
        s += "\"" + lambda.to_string() + "\": " + count.get_str();
    }
    return s + "}}";
}

int run_verify(const Graph& g, const Options& opt, std::ostream& out) {
    bool ok = true;
    auto check = [&](const std::string& name, const BigInt& engine, const BigInt& brute) {
        const bool match = engine == brute;
        ok = ok && match;
        out << name << ": engine " << engine.get_str() << " oracle " << brute.get_str()
            << (match ? " ok" : " MISMATCH") << '\n';
    };

    std::vector<int> rs = opt.verify_r;
    if (rs.empty()) {
        const int d = std::max(1, g.max_degree());
        rs = {d, d + 1};
    }
    for (int r : rs) {
        check("colorings r=" + std::to_string(r), count_edge_colorings(g, r), oracle::brute_edge_colorings(g, r));
    }

    const CycleSpectrum brute = oracle::brute_cycle_spectrum(g);
    BigInt spanning_brute = 0;
    for (const auto& [lambda, count] : brute) {
        if (lambda.weight() == g.vertex_count()) spanning_brute += count;
    }
    check("spanning-cycles", count_spanning_cycles(g), spanning_brute);
    if (g.vertex_count() >= 3) check("hamiltonian", count_hamiltonian(g), oracle::brute_hamiltonian(g));

    SpectrumOptions so;
    so.threads = opt.threads;
    const CycleSpectrum engine = cycle_spectrum(g, so);
    const bool same = engine == brute;
    ok = ok && same;
    out << "spectrum: engine " << spectrum_json(g.vertex_count(), engine) << " oracle "
        << spectrum_json(g.vertex_count(), brute) << (same ? " ok" : " MISMATCH") << '\n';

    if (!ok) throw ConsistencyError("engine and oracle disagree");
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact graph counts by symmetric tensor contraction", "graphtensor"};
    app.require_subcommand(1, 1);
    Options opt;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, "Graph file in edge-list format, '-' for stdin")->required();
    };
    auto add_strategy = [&](CLI::App* sub) {
        sub->add_option("--strategy", opt.strategy, "Contraction order: greedy, exhaustive or given")
            ->check(CLI::IsMember({"greedy", "exhaustive", "given"}));
        sub->add_option("--order", opt.order, "Vertex order for --strategy given (space or comma separated)");
        sub->add_option("--limit", opt.limit, "Largest n for exhaustive planning")->check(CLI::Range(0, 26));
        sub->add_flag("--stats", opt.stats, "Report predicted and observed work on stderr");
    };

    auto* colorings = app.add_subcommand("colorings", "Count proper r-edge colorings");
    colorings->add_option("--r", opt.r, "Number of colors")->required()->check(CLI::Range(1, kMaxColors));
    auto* tait = app.add_subcommand("tait", "Count Tait colorings of a cubic graph");
    auto* spanning = app.add_subcommand("spanning-cycles", "Count 2-regular spanning subgraphs");
    auto* hamiltonian = app.add_subcommand("hamiltonian", "Count Hamiltonian cycles");
    auto* spectrum = app.add_subcommand("spectrum", "Recover the number of multicycles of every cycle type");
    spectrum->add_option("--max-weight", opt.max_weight, "Only report types of weight <= this")
        ->check(CLI::NonNegativeNumber);
    spectrum->add_option("--threads", opt.threads, "Concurrent evaluations")->check(CLI::Range(1, 256));
    spectrum->add_option("--seed", opt.seed, "Seed for the interpolation points");
    auto* eval = app.add_subcommand("eval", "Evaluate the cycle function at integer x and t");
    eval->add_option("--x", opt.x, "Comma-separated weights x_1,...,x_{r-1}")->required();
    eval->add_option("--t", opt.t, "Weight t");
    auto* plan = app.add_subcommand("plan", "Print a contraction order and its predicted cost");
    plan->add_option("--r", opt.r, "Number of colors for the cost model")->check(CLI::Range(1, kMaxColors));
    auto* verify = app.add_subcommand("verify", "Compare engine counts against brute-force oracles");
    verify->add_option("--r", opt.verify_r, "Color counts to check (default: max degree and max degree + 1)")
        ->delimiter(',')
        ->check(CLI::Range(1, 16));
    verify->add_option("--threads", opt.threads, "Concurrent evaluations")->check(CLI::Range(1, 256));

    for (auto* sub : {colorings, tait, spanning, hamiltonian, spectrum, eval, plan, verify}) add_input(sub);
    for (auto* sub : {colorings, tait, spanning, hamiltonian, eval, plan}) add_strategy(sub);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        const Graph g = load_graph(opt.input, in);
        if (colorings->parsed()) {
            return print_count(g, opt, opt.r, out, err, [&](const ContractionPlan* p, ContractStats* s) {
                return count_edge_colorings(g, opt.r, p, s);
            });
        }
        if (tait->parsed()) {
            return print_count(g, opt, 3, out, err,
                               [&](const ContractionPlan* p, ContractStats* s) { return count_tait(g, p, s); });
        }
        if (spanning->parsed()) {
            return print_count(g, opt, 2, out, err, [&](const ContractionPlan* p, ContractStats* s) {
                return count_spanning_cycles(g, p, s);
            });
        }
        if (hamiltonian->parsed()) {
            if (g.vertex_count() < 3) throw PreconditionError("Hamiltonian counting needs n >= 3");
            return print_count(g, opt, g.vertex_count() + 1, out, err, [&](const ContractionPlan* p, ContractStats* s) {
                return count_hamiltonian(g, p, s);
            });
        }
        if (spectrum->parsed()) {
            SpectrumOptions so;
            if (opt.max_weight >= 0) so.max_weight = opt.max_weight;
            so.threads = opt.threads;
            so.seed = opt.seed;
            out << spectrum_json(g.vertex_count(), cycle_spectrum(g, so)) << '\n';
            return kExitOk;
        }
        if (eval->parsed()) {
            std::vector<BigInt> x;
            for (const auto& item : split(opt.x, ',')) x.push_back(parse_bigint(item));
            if (x.empty()) throw ArgumentError("--x needs at least one value");
            const BigInt t = parse_bigint(opt.t);
            const int r = static_cast<int>(x.size()) + 1;
            const ContractionPlan p = make_plan(g, opt, r);
            ContractStats stats;
            const BigInt value = eval_cycle_function(g, x, t, &p, &stats);
            out << "{\"r\": " << r << ", \"x\": [";
            for (std::size_t i = 0; i < x.size(); ++i) out << (i ? ", " : "") << x[i].get_str();
            out << "], \"t\": " << t.get_str() << ", \"value\": " << value.get_str() << "}\n";
            if (opt.stats) report_stats(err, p, stats);
            return kExitOk;
        }
        if (plan->parsed()) {
            const ContractionPlan p = make_plan(g, opt, opt.r);
            for (std::size_t i = 0; i < p.order.size(); ++i) out << (i ? " " : "") << p.order[i];
            out << '\n' << p.predicted_cost.get_str() << '\n';
            return kExitOk;
        }
        return run_verify(g, opt, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const ConsistencyError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace graphtensor::cli
