#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "walkper/report.hpp"

namespace walkper {

enum class ScanTaskKind { SixPeriodic, PeriodEquals, OpenQuestion };

struct ScanTask {
    ScanTaskKind kind = ScanTaskKind::SixPeriodic;
    std::int64_t parameter = 6;  // tau, or l for the open question

    static ScanTask six_periodic() { return {ScanTaskKind::SixPeriodic, 6}; }
    /// tau >= 1.
    static ScanTask period_equals(std::int64_t tau);
    /// Cubic 2l-periodic search; l odd >= 3.
    static ScanTask open_question(std::int64_t l);

    std::string name() const;
};

enum class EntryStatus {
    Analyzed,
    Filtered,    // disconnected, irregular or edgeless
    ParseError,
    AnalysisError,
};
std::string to_string(EntryStatus s);

struct ScanEntry {
    std::size_t line = 0;
    std::string graph6;
    EntryStatus status = EntryStatus::Filtered;
    std::string message;

    std::size_t n = 0;
    std::int64_t k = 0;
    std::optional<std::int64_t> period;
    bool trace_identities_hold = false;
    std::vector<std::string> failed_checks;

    bool hit = false;
    /// Exact certificate matched the task but the simulator did not confirm.
    bool disputed = false;
    std::optional<std::size_t> empirical_period;

    /// Set for hits and for every 2l-periodic graph (l odd >= 3).
    std::optional<GraphAnalysis> analysis;
};

struct ScanReport {
    ScanTask task;
    std::size_t records = 0;
    std::size_t analyzed = 0;
    std::size_t filtered = 0;
    std::size_t errors = 0;
    std::size_t hits = 0;
    std::size_t disputed = 0;
    std::size_t classified = 0;
    std::size_t theorem_violations = 0;
    std::map<std::int64_t, std::size_t> period_histogram;
    /// Every record, input order.
    std::vector<ScanEntry> entries;
};

/// Workers 0 means hardware concurrency. Output is independent of the worker count.
ScanReport scan_corpus(std::istream& in, const ScanTask& task, unsigned workers = 1);

/// Aggregate: counts, period histogram, hits, classified graphs and per-line errors.
nlohmann::ordered_json to_json(const ScanReport& r);
std::string human_summary(const ScanReport& r);

}  // namespace walkper
