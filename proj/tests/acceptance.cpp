// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "walkper/classifier.hpp"
#include "walkper/generators.hpp"
#include "walkper/graph6.hpp"
#include "walkper/grover.hpp"
#include "walkper/orbits.hpp"
#include "walkper/report.hpp"
#include "walkper/scan.hpp"

using namespace walkper;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kCyclePerGraphSeconds = 1.0;
constexpr double kScanBudgetSeconds = 30.0 * 60.0;
constexpr double kOrbitTol = 1e-9;
constexpr double kSpectrumTol = 1e-8;
constexpr double kSimulationTol = 1e-8;
constexpr std::size_t kNotPeriodicSteps = 1000;

// Connected regular graphs by vertex count (n = 1 omitted) and connected cubic graphs.
const std::map<std::size_t, std::size_t> kRegularCounts{{2, 1}, {3, 1}, {4, 2},  {5, 2},
                                                        {6, 5}, {7, 4}, {8, 17}, {9, 22}, {10, 167}};
const std::map<std::size_t, std::size_t> kCubicCounts{{4, 1}, {6, 2}, {8, 5}, {10, 19}, {12, 85}, {14, 509}};

struct Named {
    std::string name;
    Graph graph;
};

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void fail(const std::string& why) {
        if (pass) detail << why;
        pass = false;
    }
};

int failures = 0;

void report(int id, const std::string& title, Outcome& o, Clock::time_point start) {
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << title << "  [" << o.detail.str() << "; "
              << std::fixed << std::setprecision(2) << secs << " s]" << std::endl;
    std::cout.unsetf(std::ios::floatfield);
    if (!o.pass) ++failures;
}

std::vector<Named> read_corpus(const std::string& file) {
    std::ifstream in(std::string(WALKPER_DATA_DIR) + "/" + file);
    if (!in) throw std::runtime_error("missing corpus " + file);
    std::vector<Named> out;
    Graph6Line line;
    std::size_t counter = 0;
    while (next_graph6_line(in, line, counter)) out.push_back({line.text, parse_graph6(line.text)});
    return out;
}

std::string read_file(const std::string& file) {
    std::ifstream in(std::string(WALKPER_DATA_DIR) + "/" + file);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

bool counts_match(const std::vector<Named>& graphs, const std::map<std::size_t, std::size_t>& expected) {
    std::map<std::size_t, std::size_t> seen;
    std::set<std::string> distinct;
    for (const auto& g : graphs) {
        ++seen[g.graph.vertex_count()];
        distinct.insert(g.name);
    }
    return seen == expected && distinct.size() == graphs.size();
}

}  // namespace

int main() {
    std::cout << "walkper acceptance suite\n";

    // Every connected regular graph analyzed below, for the trace and simulation criteria.
    std::vector<std::pair<std::string, GraphAnalysis>> analyzed;
    std::map<std::string, std::int64_t> periodic;  // name -> certified period
    auto record = [&](const std::string& name, const Graph& g) -> const GraphAnalysis& {
        analyzed.emplace_back(name, analyze_graph(g));
        const auto& a = analyzed.back().second;
        if (a.certificate.periodic) periodic.emplace(name, *a.certificate.period);
        return a;
    };

    {  // 1
        const auto start = Clock::now();
        Outcome o;
        double slowest = 0;
        for (std::size_t n = 3; n <= 32; ++n) {
            const auto t0 = Clock::now();
            const auto& a = record("cycle:" + std::to_string(n), cycle(n));
            const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
            slowest = std::max(slowest, secs);
            if (!a.certificate.periodic || *a.certificate.period != std::int64_t(n))
                o.fail("C" + std::to_string(n) + " certificate wrong");
            if (secs >= kCyclePerGraphSeconds) o.fail("C" + std::to_string(n) + " took " + std::to_string(secs) + " s");
        }
        o.detail << (o.pass ? "" : "; ") << "C3..C32 exact, slowest " << slowest << " s";
        report(1, "cycle periods", o, start);
    }

    {  // 2
        const auto start = Clock::now();
        Outcome o;
        const std::vector<std::pair<Named, std::int64_t>> named{{{"K3", complete(3)}, 3},
                                                                {{"K3,3", complete_bipartite(3, 3)}, 4},
                                                                {{"P2", complete(2)}, 2},
                                                                {{"C5", cycle(5)}, 5}};
        for (const auto& [g, expected] : named) {
            const auto& a = record(g.name, g.graph);
            const auto got = a.certificate.period;
            o.detail << g.name << "=" << (got ? std::to_string(*got) : "none") << " ";
            if (!got || *got != expected) o.fail(g.name + " expected " + std::to_string(expected) + "; ");
        }
        report(2, "named periods", o, start);
    }

    const auto reg = read_corpus("reg_le10.g6");
    const auto cubic = read_corpus("cubic_le14.g6");
    ScanReport reg_scan, cubic_scan;

    {  // 3
        const auto start = Clock::now();
        Outcome o;
        if (!counts_match(reg, kRegularCounts)) o.fail("corpus counts differ from the enumeration; ");
        std::istringstream in(read_file("reg_le10.g6"));
        reg_scan = scan_corpus(in, ScanTask::six_periodic(), 0);
        std::size_t six = 0;
        for (const auto& e : reg_scan.entries) {
            if (!e.hit) continue;
            ++six;
            const Graph g = parse_graph6(e.graph6);
            if (!(g == cycle(6) || (g.vertex_count() == 6 && degree_profile(g).regular_k == 2u && g.is_connected())))
                o.fail("non-C6 hit " + e.graph6 + "; ");
        }
        if (six != 1) o.fail(std::to_string(six) + " six-periodic graphs; ");
        if (reg_scan.analyzed != reg.size() || reg_scan.errors) o.fail("not every record analyzed; ");
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (secs > kScanBudgetSeconds) o.fail("over the runtime budget; ");
        o.detail << reg.size() << " connected regular graphs on <= 10 vertices, six-periodic hits " << six;
        report(3, "six-periodic classification", o, start);
    }

    {  // 4
        const auto start = Clock::now();
        Outcome o;
        if (!counts_match(cubic, kCubicCounts)) o.fail("cubic corpus counts differ from the enumeration; ");
        std::istringstream in(read_file("cubic_le14.g6"));
        cubic_scan = scan_corpus(in, ScanTask::six_periodic(), 0);
        std::size_t classified = 0;
        for (const ScanReport* r : {&reg_scan, &cubic_scan})
            for (const auto& e : r->entries) {
                if (!e.analysis || !e.analysis->classification) continue;
                ++classified;
                const auto& c = *e.analysis->classification;
                const bool ok = c.verdict == Verdict::IsC2l || (c.verdict == Verdict::CandidateCubic && c.l % 3 == 0);
                if (!ok) o.fail(e.graph6 + " verdict " + to_string(c.verdict) + "; ");
            }
        if (reg_scan.theorem_violations + cubic_scan.theorem_violations) o.fail("theorem violations reported; ");
        o.detail << classified << " graphs with period 2l (l odd) classified, violations "
                 << reg_scan.theorem_violations + cubic_scan.theorem_violations;
        report(4, "2l dichotomy", o, start);
    }

    {  // 5
        const auto start = Clock::now();
        Outcome o;
        double worst = 0;
        for (std::int64_t n = 1; n <= 200; ++n) {
            const std::int64_t exact = orbit_sum_zeta(n, 1);
            std::complex<double> sum = 0;
            for (std::int64_t u = 1; u <= n; ++u)
                if (std::gcd(u, n) == 1) sum += std::polar(1.0, 2.0 * std::numbers::pi * double(u) / double(n));
            worst = std::max(worst, std::abs(sum - double(exact)));
            if (exact != oracle::mu(n)) o.fail("n=" + std::to_string(n) + " exact value differs from mu; ");
            if (std::abs(sum - double(exact)) >= kOrbitTol) o.fail("n=" + std::to_string(n) + " numeric mismatch; ");
        }
        o.detail << "n <= 200, worst numeric gap " << worst;
        report(5, "Moebius orbit sums", o, start);
    }

    {  // 6
        const auto start = Clock::now();
        Outcome o;
        double worst = 0;
        for (std::int64_t l = 3; l <= 99; l += 2) {
            const std::int64_t n = 2 * l;
            std::set<std::int64_t> distinct;  // cos(2 pi u/n) = cos(2 pi (n-u)/n)
            for (std::int64_t u = 1; u < n; ++u)
                if (std::gcd(u, n) == 1) distinct.insert(std::min(u, n - u));
            double sum = 0;
            for (std::int64_t u : distinct) sum += std::pow(std::cos(2.0 * std::numbers::pi * double(u) / double(n)), 2);
            const double gap = std::abs(orbit_sum_sq_cos(n).get_d() - sum);
            worst = std::max(worst, gap);
            if (gap >= kOrbitTol) o.fail("l=" + std::to_string(l) + "; ");
        }
        o.detail << "odd l in 3..99, worst gap " << worst;
        report(6, "cosine square orbit sums", o, start);
    }

    {  // 7
        const auto start = Clock::now();
        Outcome o;
        std::size_t checked = 0;
        auto check = [&](const std::string& name, const Graph& g, const SpectrumReport& s) {
            const auto k = degree_profile(g).regular_k;
            if (!k) return;
            ++checked;
            if (s.trace_power(1) != 0) o.fail(name + " S1 != 0; ");
            if (s.trace_power(2) != make_rational(long(g.vertex_count()), long(*k))) o.fail(name + " S2 != n/k; ");
        };
        for (const auto& [name, a] : analyzed) check(name, parse_graph6(a.graph6), a.spectrum);
        for (const auto* corpus : {&reg, &cubic})
            for (const auto& g : *corpus) check(g.name, g.graph, spectrum_report(g.graph));
        o.detail << checked << " regular graphs from criteria 1-4, exact";
        report(7, "trace identities", o, start);
    }

    {  // 8
        const auto start = Clock::now();
        Outcome o;
        for (std::int64_t l = 3; l <= 15; l += 2) {
            const Graph c = cycle(std::size_t(2 * l));
            const auto& a = record("cycle:" + std::to_string(2 * l) + " (l=" + std::to_string(l) + ")", c);
            const auto ci = verify_counting_identities(a.spectrum, l, 2);
            if (!ci.passed()) o.fail("C" + std::to_string(2 * l) + "; ");
            if (ci.n_rhs != long(2 * l) || ci.s2_rhs != long(l)) o.fail("C" + std::to_string(2 * l) + " values; ");
        }
        o.detail << "C_2l for odd l in 3..15, exact";
        report(8, "counting identities", o, start);
    }

    {  // 9
        const auto start = Clock::now();
        Outcome o;
        std::vector<Named> suite{{"P2", complete(2)}, {"Petersen", petersen()}, {"K2,2,2", complete_tripartite(2)},
                                 {"K3,3,3", complete_tripartite(3)}, {"C4xJ3", kronecker_all_ones(cycle(4), 3)},
                                 {"C3xJ2", kronecker_all_ones(cycle(3), 2)}, {"C6xJ2", kronecker_all_ones(cycle(6), 2)}};
        for (std::size_t n = 3; n <= 12; ++n) suite.push_back({"C" + std::to_string(n), cycle(n)});
        for (std::size_t n = 3; n <= 12; ++n) suite.push_back({"K" + std::to_string(n), complete(n)});
        for (std::size_t a = 1; a <= 6; ++a)
            for (std::size_t b = a; a + b <= 12; ++b)
                suite.push_back({"K" + std::to_string(a) + "," + std::to_string(b), complete_bipartite(a, b)});
        std::mt19937_64 rng(20261016);
        for (int i = 0; i < 150; ++i) {
            const std::size_t n = 2 + std::size_t(i) % 11;
            suite.push_back({"random#" + std::to_string(i), oracle::random_connected_graph(n, 0.3, rng)});
        }
        for (const auto& g : reg) suite.push_back(g);
        std::size_t compared = 0;
        for (const auto& [name, g] : suite) {
            if (g.vertex_count() > 12) continue;
            ++compared;
            const auto s = spectrum_report(g);
            if (!oracle::multiset_close(oracle::mapped_u_spectrum(s), oracle::u_eigenvalues(g), kSpectrumTol))
                o.fail(name + "; ");
        }
        o.detail << compared << " graphs on <= 12 vertices (named, random irregular, regular corpus), tol "
                 << kSpectrumTol;
        report(9, "spectral mapping vs numeric U", o, start);
    }

    {  // 10
        const auto start = Clock::now();
        Outcome o;
        record("K2,2,2", complete_tripartite(2));
        std::vector<std::pair<std::string, Graph>> periodic_graphs;
        for (const auto& [name, a] : analyzed)
            if (a.certificate.periodic) periodic_graphs.emplace_back(name, parse_graph6(a.graph6));
        for (const ScanReport* r : {&reg_scan, &cubic_scan})
            for (const auto& e : r->entries)
                if (e.period) periodic_graphs.emplace_back(e.graph6, parse_graph6(e.graph6));
        std::size_t agreed = 0;
        std::int64_t largest = 0;
        for (const auto& [name, g] : periodic_graphs) {
            const std::int64_t tau = certify_periodicity(g).period.value();
            largest = std::max(largest, tau);
            const auto sim = simulate_basis(g, std::size_t(tau) + 1, kSimulationTol);
            if (sim.empirical_period != std::size_t(tau)) {
                o.fail(name + " certified " + std::to_string(tau) + " simulated " +
                       (sim.empirical_period ? std::to_string(*sim.empirical_period) : "none") + "; ");
            } else {
                ++agreed;
            }
        }
        std::vector<Named> not_periodic{{"Petersen", petersen()}, {"K4", complete(4)}};
        const Graph c3j2 = kronecker_all_ones(cycle(3), 2);
        if (!certify_periodicity(c3j2).periodic) not_periodic.push_back({"C3xJ2", c3j2});
        for (const auto& [name, g] : not_periodic) {
            if (certify_periodicity(g).periodic) o.fail(name + " certified periodic; ");
            const auto sim = simulate_basis(g, kNotPeriodicSteps, kSimulationTol);
            if (sim.empirical_period) o.fail(name + " returned at " + std::to_string(*sim.empirical_period) + "; ");
        }
        o.detail << agreed << "/" << periodic_graphs.size() << " periodic graphs agree (largest period " << largest
                 << "), " << not_periodic.size() << " non-periodic fixtures silent for " << kNotPeriodicSteps
                 << " steps";
        report(10, "exact vs simulated periods", o, start);
    }

    {  // 11
        const auto start = Clock::now();
        Outcome o;
        for (std::int64_t l = 3; l <= 201; l += 2) {
            const auto b = theorem_bound(l);
            const std::vector<std::int64_t> expected =
                l % 3 == 0 ? std::vector<std::int64_t>{2, 3} : std::vector<std::int64_t>{2};
            if (b.admissible_k != expected) o.fail("l=" + std::to_string(l) + "; ");
        }
        o.detail << "odd l in 3..201";
        report(11, "degree bound", o, start);
    }

    std::cout << (failures ? "FAILED: " + std::to_string(failures) + " criteria" : std::string("all criteria passed"))
              << std::endl;
    return failures ? 1 : 0;
}
