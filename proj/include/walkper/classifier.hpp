#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "walkper/graph.hpp"
#include "walkper/grover.hpp"
#include "walkper/polynomial.hpp"
#include "walkper/rational.hpp"

namespace walkper {

/// Multiplicities a_0..a_l of cos(2 pi j / 2l) in Spec(T), or the reason the
/// spectrum does not fit that template.
struct SpectrumTemplate {
    std::int64_t l = 0;
    bool ok = false;
    std::vector<unsigned> multiplicities;  // a_0..a_l when ok
    std::string failure;
    /// Monic factor of det(xI - T) that falls outside the template.
    Polynomial offending_factor;
};

/// Requires a regular graph's report (throws std::invalid_argument otherwise) and l >= 1.
SpectrumTemplate check_spectrum_template(const SpectrumReport& report, std::int64_t l);

struct BoundReport {
    std::int64_t l;
    std::int64_t p1;             // smallest prime factor of l
    Rational threshold;          // 2 + 2 / (p1 - 2)
    Rational divisor_maximum;    // max over d' | l, d' != l of 2 phi(l/d') / (mu(l/d') + phi(l/d'))
    std::vector<std::int64_t> admissible_k;  // 2 <= k < threshold
};

/// Degree bound for 2l-periodic k-regular graphs. l odd >= 3, else ArithmeticError.
BoundReport theorem_bound(std::int64_t l);

/// One conjugacy class of cos(2 pi d / 2l), d | 2l.
struct ClassTerm {
    std::int64_t d;
    std::int64_t reduced_modulus;  // 2l / d
    std::int64_t class_size;       // phi(2l/d)/2, or 1 when 2l/d <= 2
    unsigned multiplicity;         // m_d
};

/// The counting identities of the 2l-periodic argument, evaluated exactly.
///
/// With X_{d'} = m_{d'} + m_{2d'} (d' | l):
///   n    = 1/2 sum_{d' != l} phi(l/d') X_{d'} + X_l
///   S^2  = 1/4 sum_{d' != l} (mu(l/d') + phi(l/d')) X_{d'} + X_l
///   sum_{d' != l} [k(mu + phi) - 2 phi] X_{d'} = -4 (k - 1) X_l   (from S^2 = n/k)
/// The d' = l term carries the classes of +1 and -1, which have one element
/// each; the half-weight form of that term is reported as degenerate_adjustment.
struct CountingIdentities {
    bool applicable = false;
    std::string precondition_failure;
    std::int64_t l = 0;
    std::int64_t k = 0;
    std::vector<ClassTerm> classes;
    std::vector<std::pair<std::int64_t, std::int64_t>> x;  // (d', X_{d'})
    Rational n_exact, n_rhs;
    Rational s2_exact, s2_rhs, n_over_k;
    Rational combined_lhs, combined_rhs;
    Rational degenerate_adjustment;  // X_l / 2
    std::vector<Check> checks;

    bool passed() const;
};

CountingIdentities verify_counting_identities(const SpectrumReport& report, std::int64_t l, std::int64_t k);

enum class Verdict { IsC2l, CandidateCubic, Excluded, TheoremViolation };
std::string to_string(Verdict v);

struct ClassificationReport {
    std::string graph_id;
    std::size_t vertex_count = 0;
    std::int64_t k = 0;
    std::int64_t l = 0;
    std::optional<std::int64_t> period;
    std::vector<Check> checks;
    Verdict verdict = Verdict::Excluded;
    std::string reason;

    std::vector<std::string> failed_checks() const;
};

/// Requires g connected and regular, l odd >= 3.
ClassificationReport classify_2l_regular(const Graph& g, std::int64_t l, std::string graph_id = {});
ClassificationReport classify_2l_regular(const Graph& g, const SpectrumReport& report, std::int64_t l,
                                         std::string graph_id = {});

struct SrgParameters {
    std::int64_t v, k, lambda, mu;
    friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

enum class PeriodicSrgFamily { CompleteBipartite, CompleteTripartite, Pentagon, None };
std::string to_string(PeriodicSrgFamily f);

struct SrgCheck {
    bool is_srg = false;
    std::optional<SrgParameters> params;
    PeriodicSrgFamily family = PeriodicSrgFamily::None;
};

/// SRG detection from exactly three distinct adjacency eigenvalues (connected,
/// regular, non-complete), parameters from the spectrum, family from the list
/// of parameter sets that admit periodic walks.
SrgCheck srg_whitelist_check(const Graph& g);

}  // namespace walkper
