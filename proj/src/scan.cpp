#include "walkper/scan.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "walkper/graph6.hpp"

namespace walkper {

using nlohmann::ordered_json;

ScanTask ScanTask::period_equals(std::int64_t tau) {
    if (tau < 1) throw std::invalid_argument("period must be >= 1");
    return {ScanTaskKind::PeriodEquals, tau};
}

ScanTask ScanTask::open_question(std::int64_t l) {
    if (l < 3 || l % 2 == 0) throw std::invalid_argument("open question needs odd l >= 3");
    return {ScanTaskKind::OpenQuestion, l};
}

std::string ScanTask::name() const {
    switch (kind) {
        case ScanTaskKind::SixPeriodic: return "six-periodic";
        case ScanTaskKind::PeriodEquals: return "period=" + std::to_string(parameter);
        case ScanTaskKind::OpenQuestion: return "open-question l=" + std::to_string(parameter);
    }
    return "?";
}

std::string to_string(EntryStatus s) {
    switch (s) {
        case EntryStatus::Analyzed: return "analyzed";
        case EntryStatus::Filtered: return "filtered";
        case EntryStatus::ParseError: return "parse_error";
        case EntryStatus::AnalysisError: return "analysis_error";
    }
    return "?";
}

namespace {

bool matches(const ScanTask& task, const ScanEntry& e) {
    if (!e.period) return false;
    switch (task.kind) {
        case ScanTaskKind::SixPeriodic: return *e.period == 6;
        case ScanTaskKind::PeriodEquals: return *e.period == task.parameter;
        case ScanTaskKind::OpenQuestion: return e.k == 3 && *e.period == 2 * task.parameter;
    }
    return false;
}

ScanEntry process(const Graph6Line& record, const ScanTask& task) {
    ScanEntry e;
    e.line = record.line_number;
    e.graph6 = record.text;
    std::optional<Graph> parsed;
    try {
        parsed = parse_graph6(record.text);
    } catch (const std::exception& ex) {
        e.status = EntryStatus::ParseError;
        e.message = ex.what();
        return e;
    }
    const Graph& g = *parsed;
    e.n = g.vertex_count();
    const auto profile = degree_profile(g);
    if (g.edge_count() == 0 || !g.is_connected() || !profile.regular_k) {
        e.status = EntryStatus::Filtered;
        e.message = g.edge_count() == 0 ? "edgeless" : !g.is_connected() ? "disconnected" : "irregular";
        return e;
    }
    e.k = std::int64_t(*profile.regular_k);
    try {
        GraphAnalysis a = analyze_graph(g, record.line_number);
        e.status = EntryStatus::Analyzed;
        e.period = a.certificate.period;
        e.failed_checks = a.failed_checks();
        e.trace_identities_hold = true;
        for (const auto& c : a.spectrum.checks)
            if ((c.name == "trace_s1" || c.name == "trace_s2") && !c.passed) e.trace_identities_hold = false;

        if (matches(task, e)) {
            e.hit = true;
            if (task.kind == ScanTaskKind::OpenQuestion) {
                const std::size_t tau = std::size_t(*e.period);
                const SimulationResult sim = simulate_basis(g, tau + 1);
                e.empirical_period = sim.empirical_period;
                if (sim.empirical_period != tau) {
                    e.hit = false;
                    e.disputed = true;
                }
            }
        }
        if (e.hit || e.disputed || a.classification) e.analysis = std::move(a);
    } catch (const std::exception& ex) {
        e.status = EntryStatus::AnalysisError;
        e.message = ex.what();
    }
    return e;
}

}  // namespace

ScanReport scan_corpus(std::istream& in, const ScanTask& task, unsigned workers) {
    std::vector<Graph6Line> records;
    std::size_t line_counter = 0;
    Graph6Line record;
    while (next_graph6_line(in, record, line_counter)) records.push_back(record);
    if (in.bad()) throw std::runtime_error("read error on graph6 stream");

    ScanReport r;
    r.task = task;
    r.records = records.size();
    r.entries.resize(records.size());

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = unsigned(std::min<std::size_t>(workers, std::max<std::size_t>(1, records.size())));
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < records.size();) r.entries[i] = process(records[i], task);
    };
    if (workers <= 1) {
        run();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    }

    for (const auto& e : r.entries) {
        switch (e.status) {
            case EntryStatus::Analyzed: ++r.analyzed; break;
            case EntryStatus::Filtered: ++r.filtered; break;
            default: ++r.errors; break;
        }
        if (e.period) ++r.period_histogram[*e.period];
        if (e.hit) ++r.hits;
        if (e.disputed) ++r.disputed;
        if (e.analysis && e.analysis->classification) {
            ++r.classified;
            if (e.analysis->classification->verdict == Verdict::TheoremViolation) ++r.theorem_violations;
        }
    }
    return r;
}

ordered_json to_json(const ScanReport& r) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["task"] = r.task.name();
    j["records"] = r.records;
    j["analyzed"] = r.analyzed;
    j["filtered"] = r.filtered;
    j["errors"] = r.errors;
    j["hit_count"] = r.hits;
    j["disputed_count"] = r.disputed;
    j["classified_count"] = r.classified;
    j["theorem_violations"] = r.theorem_violations;

    ordered_json histogram = ordered_json::array();
    for (const auto& [period, count] : r.period_histogram) histogram.push_back({{"period", period}, {"count", count}});
    j["period_histogram"] = std::move(histogram);

    ordered_json hits = ordered_json::array(), disputed = ordered_json::array(),
                 classified = ordered_json::array(), errors = ordered_json::array();
    for (const auto& e : r.entries) {
        if (e.hit) {
            ordered_json h = to_json(*e.analysis);
            if (e.empirical_period) h["empirical_period"] = *e.empirical_period;
            hits.push_back(std::move(h));
        }
        if (e.disputed) {
            disputed.push_back({{"input_line", e.line},
                                {"graph6", e.graph6},
                                {"period", *e.period},
                                {"empirical_period", e.empirical_period ? ordered_json(*e.empirical_period)
                                                                        : ordered_json(nullptr)}});
        }
        if (e.analysis && e.analysis->classification) {
            const auto& c = *e.analysis->classification;
            classified.push_back({{"input_line", e.line},
                                  {"graph6", e.graph6},
                                  {"n", e.n},
                                  {"k", c.k},
                                  {"l", c.l},
                                  {"verdict", to_string(c.verdict)},
                                  {"failed_checks", c.failed_checks()}});
        }
        if (e.status == EntryStatus::ParseError || e.status == EntryStatus::AnalysisError)
            errors.push_back({{"input_line", e.line}, {"status", to_string(e.status)}, {"message", e.message}});
    }
    j["hits"] = std::move(hits);
    j["disputed"] = std::move(disputed);
    j["classified"] = std::move(classified);
    j["line_errors"] = std::move(errors);
    return j;
}

std::string human_summary(const ScanReport& r) {
    std::ostringstream out;
    out << "task " << r.task.name() << ": " << r.records << " records, " << r.analyzed << " connected regular, "
        << r.filtered << " filtered, " << r.errors << " errors\n";
    out << "periodic:";
    if (r.period_histogram.empty()) out << " none";
    for (const auto& [period, count] : r.period_histogram) out << " " << period << "x" << count;
    out << "\nhits: " << r.hits;
    for (const auto& e : r.entries)
        if (e.hit) out << "\n  line " << e.line << "  " << e.graph6 << "  n=" << e.n << " k=" << e.k;
    out << "\n2l-periodic classified: " << r.classified << ", theorem violations: " << r.theorem_violations;
    if (r.disputed) out << "\nDISPUTED (exact vs simulation): " << r.disputed;
    out << "\n";
    return out.str();
}

}  // namespace walkper
