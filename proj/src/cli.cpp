#include "walkper/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "walkper/arith.hpp"
#include "walkper/classifier.hpp"
#include "walkper/generators.hpp"
#include "walkper/graph6.hpp"
#include "walkper/identities.hpp"
#include "walkper/report.hpp"
#include "walkper/scan.hpp"

namespace walkper {

using nlohmann::ordered_json;

namespace {

/// Failure carrying its exit code.
struct CliFailure {
    int code;
    std::string message;
};

struct GraphInput {
    std::string path;
    std::string gen;
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("input", in.path, "graph6 file, or - for standard input");
    cmd->add_option("--gen", in.gen, "generator spec: cycle:n complete:n complete_bipartite:a,b multipartite:s "
                                     "kron:<spec>,t petersen");
}

struct LoadedGraph {
    Graph graph;
    std::optional<std::size_t> line;
};

std::vector<LoadedGraph> load_graphs(const GraphInput& in) {
    if (in.path.empty() == in.gen.empty()) throw CliFailure{kExitUsage, "give exactly one of a graph6 input or --gen"};
    std::vector<LoadedGraph> out;
    if (!in.gen.empty()) {
        try {
            out.push_back({generate(in.gen), std::nullopt});
        } catch (const std::exception& e) {
            throw CliFailure{kExitUsage, e.what()};
        }
        return out;
    }
    std::ifstream file;
    std::istream* stream = &std::cin;
    if (in.path != "-") {
        file.open(in.path);
        if (!file) throw CliFailure{kExitUsage, "cannot open " + in.path};
        stream = &file;
    }
    Graph6Line record;
    std::size_t counter = 0;
    while (next_graph6_line(*stream, record, counter)) {
        try {
            out.push_back({parse_graph6(record.text), record.line_number});
        } catch (const Graph6Error& e) {
            throw CliFailure{kExitUsage, "line " + std::to_string(record.line_number) + ": " + e.what()};
        }
    }
    if (stream->bad()) throw CliFailure{kExitUsage, "read error on " + in.path};
    if (out.empty()) throw CliFailure{kExitUsage, "no graph6 records in " + in.path};
    return out;
}

unsigned default_workers() {
    if (const char* env = std::getenv("WALKPER_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return unsigned(v);
        } catch (const std::exception&) {
        }
        throw CliFailure{kExitUsage, std::string("WALKPER_WORKERS must be a positive integer, got ") + env};
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_analyze(const GraphInput& in, std::ostream& out, std::ostream& err) {
    ordered_json reports = ordered_json::array();
    for (const auto& [g, line] : load_graphs(in)) {
        GraphAnalysis a;
        try {
            a = analyze_graph(g, line);
        } catch (const GraphError& e) {
            throw CliFailure{kExitInvalidGraph, e.what()};
        }
        err << a.graph6 << ": " << (a.certificate.periodic ? "period " + std::to_string(*a.certificate.period)
                                                           : std::string("not periodic"))
            << "\n";
        reports.push_back(to_json(a));
    }
    out << (reports.size() == 1 ? reports.front() : reports).dump(2) << "\n";
    return kExitOk;
}

ScanTask parse_task(const std::vector<std::string>& task, std::optional<std::int64_t> l) {
    auto number = [](const std::string& s) -> std::int64_t {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(s, &used);
            if (used == s.size()) return v;
        } catch (const std::exception&) {
        }
        throw CliFailure{kExitUsage, "expected an integer, got '" + s + "'"};
    };
    try {
        if (task.empty() || task[0] == "six-periodic") {
            if (task.size() > 1) throw CliFailure{kExitUsage, "six-periodic takes no value"};
            return ScanTask::six_periodic();
        }
        if (task[0] == "period") {
            if (task.size() != 2) throw CliFailure{kExitUsage, "--task period needs a value, e.g. --task period 4"};
            return ScanTask::period_equals(number(task[1]));
        }
        if (task[0] == "open-question") {
            if (task.size() == 2) l = number(task[1]);
            if (!l) throw CliFailure{kExitUsage, "--task open-question needs --l"};
            return ScanTask::open_question(*l);
        }
    } catch (const std::invalid_argument& e) {
        throw CliFailure{kExitUsage, e.what()};
    }
    throw CliFailure{kExitUsage, "unknown task '" + task[0] + "'"};
}

int cmd_scan(const std::string& corpus, const ScanTask& task, unsigned workers, const std::string& output,
             std::ostream& out, std::ostream& err) {
    std::ifstream file;
    std::istream* stream = &std::cin;
    if (corpus != "-") {
        file.open(corpus);
        if (!file) throw CliFailure{kExitUsage, "cannot open " + corpus};
        stream = &file;
    }
    ScanReport report;
    try {
        report = scan_corpus(*stream, task, workers);
    } catch (const std::runtime_error& e) {
        throw CliFailure{kExitUsage, e.what()};
    }
    const std::string json = to_json(report).dump(2) + "\n";
    if (output.empty()) {
        out << json;
    } else {
        std::ofstream o(output);
        if (!(o << json)) throw CliFailure{kExitUsage, "cannot write " + output};
    }
    err << human_summary(report);
    return kExitOk;
}

int cmd_identities(std::int64_t nmax, bool force_failure, std::ostream& out, std::ostream& err) {
    if (nmax < 3) throw CliFailure{kExitUsage, "--nmax must be >= 3"};
    const IdentityBattery b = run_identity_battery(nmax, force_failure);

    ordered_json summary = ordered_json::array();
    std::vector<std::string> order;
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // passed, total
    for (const auto& row : b.rows) {
        if (!tally.count(row.identity)) order.push_back(row.identity);
        auto& t = tally[row.identity];
        t.first += row.passed;
        ++t.second;
    }
    err << "identity                  passed/total\n";
    for (const auto& name : order) {
        const auto [passed, total] = tally[name];
        ordered_json failures = ordered_json::array();
        for (const auto& row : b.rows)
            if (row.identity == name && !row.passed) failures.push_back({{"n", row.n}, {"detail", row.detail}});
        summary.push_back({{"identity", name}, {"passed", passed}, {"total", total}, {"failures", failures}});
        err << name << std::string(26 - std::min<std::size_t>(25, name.size()), ' ') << passed << "/" << total
            << (passed == total ? "  ok" : "  FAIL") << "\n";
        for (const auto& row : b.rows)
            if (row.identity == name && !row.passed) err << "    n=" << row.n << ": " << row.detail << "\n";
    }
    out << ordered_json{{"nmax", nmax}, {"all_passed", b.all_passed()}, {"identities", summary}}.dump(2) << "\n";
    return b.all_passed() ? kExitOk : kExitIdentityFailure;
}

int cmd_bound(std::int64_t l, std::ostream& out) {
    BoundReport b;
    try {
        b = theorem_bound(l);
    } catch (const ArithmeticError& e) {
        throw CliFailure{kExitUsage, e.what()};
    }
    out << ordered_json{{"l", b.l},
                        {"p1", b.p1},
                        {"threshold", b.threshold.get_str()},
                        {"admissible", b.admissible_k}}
               .dump(2)
        << "\n";
    return kExitOk;
}

int cmd_simulate(const GraphInput& in, std::optional<std::size_t> steps, double tol, const std::string& csv,
                 std::ostream& out, std::ostream& err) {
    const auto graphs = load_graphs(in);
    if (graphs.size() != 1) throw CliFailure{kExitUsage, "simulate takes a single graph"};
    const Graph& g = graphs.front().graph;
    try {
        require_walkable(g);
    } catch (const GraphError& e) {
        throw CliFailure{kExitInvalidGraph, e.what()};
    }
    if (tol <= 0) throw CliFailure{kExitUsage, "--tol must be positive"};
    const std::size_t n_steps = steps.value_or(default_step_cap(g));
    if (n_steps < 1) throw CliFailure{kExitUsage, "--steps must be >= 1"};

    const SimulationResult sim = simulate_basis(g, n_steps, tol, csv.empty());
    if (!csv.empty()) {
        std::ofstream o(csv);
        o.precision(17);
        o << "t,fidelity\n";
        for (std::size_t t = 0; t < sim.fidelity.size(); ++t) o << t + 1 << "," << sim.fidelity[t] << "\n";
        if (!o) throw CliFailure{kExitUsage, "cannot write " + csv};
    }
    ordered_json j{{"graph6", emit_graph6(g)},
                   {"arcs", g.arc_count()},
                   {"steps_run", sim.fidelity.size()},
                   {"tol", tol},
                   {"empirical_period", sim.empirical_period ? ordered_json(*sim.empirical_period) : ordered_json(nullptr)},
                   {"max_return_fidelity", sim.max_return_fidelity},
                   {"sampled_arcs", sim.sampled_arcs.size()}};
    out << j.dump(2) << "\n";
    err << (sim.empirical_period ? "returned at t = " + std::to_string(*sim.empirical_period)
                                 : "no return within " + std::to_string(n_steps) + " steps")
        << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Grover walk periodicity on regular graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kReportSchema));

    GraphInput analyze_in;
    auto* analyze = app.add_subcommand("analyze", "exact spectrum and periodicity certificate (JSON)");
    add_graph_input(analyze, analyze_in);

    std::string corpus, output;
    std::vector<std::string> task;
    std::optional<std::int64_t> scan_l;
    std::optional<unsigned> workers;
    auto* scan = app.add_subcommand("scan", "scan a graph6 corpus of connected regular graphs");
    scan->add_option("corpus", corpus, "graph6 file, or - for standard input")->required();
    scan->add_option("--task", task, "six-periodic | period N | open-question")->expected(1, 2);
    scan->add_option("--l", scan_l, "odd l for open-question");
    scan->add_option("--workers", workers, "worker threads (default $WALKPER_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
    scan->add_option("-o,--output", output, "write JSON here instead of stdout");

    std::int64_t nmax = 200;
    bool force_failure = false;
    auto* identities = app.add_subcommand("identities", "cyclotomic identity battery");
    identities->add_option("--nmax", nmax, "largest n");
    identities->add_flag("--force-failure", force_failure, "corrupt one exact value (self-test)");

    std::int64_t bound_l = 0;
    auto* bound = app.add_subcommand("bound", "degree bound for 2l-periodic regular graphs");
    bound->add_option("l", bound_l, "odd l >= 3")->required();

    GraphInput sim_in;
    std::optional<std::size_t> steps;
    double tol = kDefaultSimulationTol;
    std::string csv;
    auto* simulate = app.add_subcommand("simulate", "floating-point walk from basis states");
    add_graph_input(simulate, sim_in);
    simulate->add_option("--steps", steps, "step cap (default 10|A|)");
    simulate->add_option("--tol", tol, "return tolerance");
    simulate->add_option("--csv", csv, "write t,fidelity here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kReportSchema << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*analyze) return cmd_analyze(analyze_in, out, err);
        if (*scan)
            return cmd_scan(corpus, parse_task(task, scan_l), workers.value_or(default_workers()), output, out, err);
        if (*identities) return cmd_identities(nmax, force_failure, out, err);
        if (*bound) return cmd_bound(bound_l, out);
        if (*simulate) return cmd_simulate(sim_in, steps, tol, csv, out, err);
    } catch (const CliFailure& f) {
        err << "error: " << f.message << "\n";
        return f.code;
    }
    return kExitUsage;
}

}  // namespace walkper
