#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "walkper/classifier.hpp"
#include "walkper/graph.hpp"
#include "walkper/grover.hpp"

namespace walkper {

inline constexpr const char* kReportSchema = "walkper-report/1";

/// Everything computed for one graph: exact spectrum, certificate, and the
/// 2l classification when the period is 2l with l odd >= 3.
struct GraphAnalysis {
    std::optional<std::size_t> input_line;
    std::string graph6;
    SpectrumReport spectrum;
    PeriodicityCertificate certificate;
    std::optional<ClassificationReport> classification;

    std::vector<std::string> failed_checks() const;
};

/// Throws GraphError for disconnected or edgeless graphs.
GraphAnalysis analyze_graph(const Graph& g, std::optional<std::size_t> input_line = std::nullopt);

/// Odd l >= 3 with period == 2l, if any.
std::optional<std::int64_t> odd_half_period(const PeriodicityCertificate& cert);

nlohmann::ordered_json to_json(const GraphAnalysis& a);
nlohmann::ordered_json to_json(const ClassificationReport& c);
nlohmann::ordered_json to_json(const Check& c);

}  // namespace walkper
