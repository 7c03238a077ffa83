#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "walkper/cyclotomic.hpp"
#include "walkper/graph.hpp"
#include "walkper/matrix.hpp"
#include "walkper/orbits.hpp"
#include "walkper/polynomial.hpp"

namespace walkper {

/// U over the canonical arc order of the graph.
struct TimeEvolutionMatrix {
    RationalMatrix matrix;
    std::vector<Arc> arc_order;
};

/// U(a, b) = 2/deg t(b) - 1 if a = b^-1; 2/deg t(b) if t(b) = o(a), a != b^-1; else 0.
/// Throws GraphError for disconnected or edgeless graphs.
TimeEvolutionMatrix build_U(const Graph& g);

/// A rational matrix with the spectrum of T = D^-1/2 A D^-1/2: A/k for a
/// k-regular graph, D^-1 A otherwise (similar to T).
RationalMatrix transition_matrix(const Graph& g);

struct EigenId {
    CosLabel label;
    unsigned multiplicity;
};

/// Named exact consistency check and its outcome.
struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

struct SpectrumReport {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::optional<std::size_t> regular_k;
    bool bipartite = false;

    Polynomial t_char_poly;
    /// Eigenvalues of T identified as cos(2 pi j/m), one entry per distinct value.
    std::vector<EigenId> t_eigen_ids;
    /// Monic factor of t_char_poly whose roots are not of that form (1 if none).
    Polynomial t_unidentified;

    Polynomial u_char_poly;
    CyclotomicFactorization u_cyclotomic;

    std::int64_t m_plus = 0;   // |E| - |V| + 1
    std::int64_t m_minus = 0;  // |E| - |V| + dim Ker(T + I)
    std::size_t ker_t_plus_identity = 0;

    std::vector<Check> checks;

    /// Multiplicity of cos(2 pi j/m) in Spec(T); 0 if absent.
    unsigned multiplicity(const CosLabel& label) const;
    /// S^1 and S^2 of Spec(T), exact, from the characteristic polynomial.
    Rational trace_power(unsigned k) const;
    std::vector<std::string> failed_checks() const;
};

SpectrumReport spectrum_report(const Graph& g);

struct PeriodicityCertificate {
    bool periodic = false;
    /// lcm of the cyclotomic indices when periodic.
    std::optional<std::int64_t> period;
    /// Non-cyclotomic part of det(xI - U) when not periodic.
    Polynomial witness;
    CyclotomicFactorization factorization;
};

PeriodicityCertificate certify_periodicity(const SpectrumReport& report);
PeriodicityCertificate certify_periodicity(const Graph& g);

/// Floating-point evolution phi_t = U^t phi_0.
struct SimulationResult {
    std::optional<std::size_t> empirical_period;
    double max_return_fidelity = 0.0;
    /// fidelity[t - 1] for t = 1..steps run.
    std::vector<double> fidelity;
    std::vector<std::size_t> sampled_arcs;
};

inline constexpr double kDefaultSimulationTol = 1e-8;
inline constexpr std::size_t kMaxBasisSample = 32;
inline constexpr std::size_t kFullBasisLimit = 64;

/// 10 * |A|.
std::size_t default_step_cap(const Graph& g);

/// Dense double copy of U, column-major (column b holds U(., b)).
std::vector<double> numeric_U(const Graph& g);

/// First t <= steps with ||phi_t - phi_0|| < tol. fidelity(t) = <phi_0, phi_t>^2.
/// Throws std::invalid_argument unless | ||initial|| - 1 | < tol.
SimulationResult simulate(const Graph& g, std::span<const double> initial, std::size_t steps,
                          double tol = kDefaultSimulationTol);

/// Runs every basis state e_a (all arcs when |A| <= 64, else 32 evenly spaced
/// arcs) and reports the first t at which all of them return within tol.
/// fidelity(t) is the minimum over the sample.
SimulationResult simulate_basis(const Graph& g, std::size_t steps, double tol = kDefaultSimulationTol,
                                bool stop_at_return = true);

}  // namespace walkper
