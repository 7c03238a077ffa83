#include "walkper/report.hpp"

#include "walkper/graph6.hpp"

namespace walkper {

using nlohmann::ordered_json;

std::vector<std::string> GraphAnalysis::failed_checks() const {
    std::vector<std::string> out = spectrum.failed_checks();
    if (classification)
        for (auto& name : classification->failed_checks()) out.push_back("classification." + name);
    return out;
}

std::optional<std::int64_t> odd_half_period(const PeriodicityCertificate& cert) {
    if (!cert.period) return std::nullopt;
    const std::int64_t p = *cert.period;
    if (p % 2 != 0 || (p / 2) % 2 == 0 || p / 2 < 3) return std::nullopt;
    return p / 2;
}

GraphAnalysis analyze_graph(const Graph& g, std::optional<std::size_t> input_line) {
    require_walkable(g);
    GraphAnalysis a;
    a.input_line = input_line;
    a.graph6 = emit_graph6(g);
    a.spectrum = spectrum_report(g);
    a.certificate = certify_periodicity(a.spectrum);
    if (a.spectrum.regular_k)
        if (auto l = odd_half_period(a.certificate))
            a.classification = classify_2l_regular(g, a.spectrum, *l, a.graph6);
    return a;
}

ordered_json to_json(const Check& c) {
    return ordered_json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}

ordered_json to_json(const ClassificationReport& c) {
    ordered_json j;
    j["l"] = c.l;
    j["k"] = c.k;
    j["verdict"] = to_string(c.verdict);
    j["reason"] = c.reason;
    j["checks"] = ordered_json::array();
    for (const auto& check : c.checks) j["checks"].push_back(to_json(check));
    return j;
}

ordered_json to_json(const GraphAnalysis& a) {
    const SpectrumReport& s = a.spectrum;
    ordered_json j;
    j["schema"] = kReportSchema;
    j["input_line"] = a.input_line ? ordered_json(*a.input_line) : ordered_json(nullptr);
    j["graph6"] = a.graph6;
    j["n"] = s.vertex_count;
    j["edges"] = s.edge_count;
    j["k"] = s.regular_k ? ordered_json(*s.regular_k) : ordered_json(nullptr);
    j["bipartite"] = s.bipartite;

    ordered_json spectrum = ordered_json::array();
    for (const auto& id : s.t_eigen_ids) {
        spectrum.push_back({{"label", id.label.to_string()},
                            {"modulus", id.label.modulus},
                            {"index", id.label.index},
                            {"multiplicity", id.multiplicity}});
    }
    j["spectrum"] = std::move(spectrum);
    j["t_unidentified"] = s.t_unidentified.degree() > 0 ? ordered_json(s.t_unidentified.to_string())
                                                        : ordered_json(nullptr);
    j["M1"] = s.m_plus;
    j["M_minus1"] = s.m_minus;
    j["verdict"] = a.certificate.periodic ? "Periodic" : "NotPeriodic";
    j["period"] = a.certificate.period ? ordered_json(*a.certificate.period) : ordered_json(nullptr);

    ordered_json factors = ordered_json::array();
    for (const auto& f : a.certificate.factorization.factors)
        factors.push_back({{"index", f.index}, {"multiplicity", f.multiplicity}});
    j["u_cyclotomic"] = std::move(factors);
    j["witness"] = a.certificate.periodic ? ordered_json(nullptr) : ordered_json(a.certificate.witness.to_string());
    j["classification"] = a.classification ? to_json(*a.classification) : ordered_json(nullptr);
    j["failed_checks"] = a.failed_checks();
    return j;
}

}  // namespace walkper
