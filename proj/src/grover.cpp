#include "walkper/grover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "walkper/arith.hpp"
#include "walkper/kernels.hpp"
#include "walkper/linalg.hpp"

namespace walkper {
namespace {

/// 2^n x^n chi_T((x + 1/x) / 2) = sum_i c_i (x^2 + 1)^i (2x)^(n - i).
Polynomial lifted_t_polynomial(const Polynomial& t_char_poly) {
    const int n = t_char_poly.degree();
    const Polynomial x2_plus_1{1, 0, 1};
    const Polynomial two_x{0, 2};
    Polynomial out;
    for (int i = 0; i <= n; ++i) {
        const Rational c = t_char_poly.coeff(i);
        if (sgn(c) == 0) continue;
        out += pow(x2_plus_1, unsigned(i)) * pow(two_x, unsigned(n - i)) * c;
    }
    return out;
}

unsigned factor_multiplicity(const CyclotomicFactorization& f, std::int64_t index) {
    for (const auto& fac : f.factors)
        if (fac.index == index) return fac.multiplicity;
    return 0;
}

Check make_check(std::string name, bool passed, std::string detail) {
    return {std::move(name), passed, std::move(detail)};
}

}  // namespace

TimeEvolutionMatrix build_U(const Graph& g) {
    require_walkable(g);
    const auto arcs = g.arcs();
    RationalMatrix u(arcs.size(), arcs.size());
    for (std::size_t b = 0; b < arcs.size(); ++b) {
        const Vertex v = arcs[b].terminus;
        const Rational forward(2, long(g.degree(v)));
        // Arcs a with o(a) = t(b) are the out-arcs of v.
        for (Vertex w : g.neighbors(v)) {
            const std::size_t a = g.arc_index(v, w);
            u(a, b) = a == g.inverse_arc(b) ? Rational(forward - 1) : forward;
            u(a, b).canonicalize();
        }
    }
    return {std::move(u), std::vector<Arc>(arcs.begin(), arcs.end())};
}

RationalMatrix transition_matrix(const Graph& g) {
    require_walkable(g);
    const std::size_t n = g.vertex_count();
    RationalMatrix t(n, n);
    for (Vertex u = 0; u < n; ++u) {
        Rational w(1, long(g.degree(u)));
        w.canonicalize();
        for (Vertex v : g.neighbors(u)) t(u, v) = w;
    }
    return t;
}

unsigned SpectrumReport::multiplicity(const CosLabel& label) const {
    for (const auto& id : t_eigen_ids)
        if (id.label == label) return id.multiplicity;
    return 0;
}

Rational SpectrumReport::trace_power(unsigned k) const { return root_power_sum(t_char_poly, k); }

std::vector<std::string> SpectrumReport::failed_checks() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.passed) out.push_back(c.name);
    return out;
}

SpectrumReport spectrum_report(const Graph& g) {
    require_walkable(g);
    SpectrumReport r;
    r.vertex_count = g.vertex_count();
    r.edge_count = g.edge_count();
    r.regular_k = degree_profile(g).regular_k;
    r.bipartite = is_bipartite(g);

    const RationalMatrix t = transition_matrix(g);
    const long n = long(r.vertex_count);
    r.t_char_poly = char_poly(t);

    // det(xI - 2T) = 2^n chi_T(x / 2); its psi_m factors name the eigenvalues.
    Rational two_pow_n = 1;
    for (long i = 0; i < n; ++i) two_pow_n *= 2;
    const Polynomial two_t = r.t_char_poly.scale_variable(Rational(1, 2)) * two_pow_n;
    const CyclotomicFactorization ids = factor_into_two_cos(two_t);
    for (const auto& f : ids.factors)
        for (const CosLabel& label : orbit_cos_elements(f.index, 1)) r.t_eigen_ids.push_back({label, f.multiplicity});
    std::sort(r.t_eigen_ids.begin(), r.t_eigen_ids.end(), [](const EigenId& a, const EigenId& b) {
        // cos decreases in j/m on [0, 1/2]
        return a.label.index * b.label.modulus < b.label.index * a.label.modulus;
    });
    r.t_unidentified = ids.remainder.scale_variable(2).monic();

    const TimeEvolutionMatrix u = build_U(g);
    r.u_char_poly = char_poly(u.matrix);
    r.u_cyclotomic = factor_into_cyclotomics(r.u_char_poly);

    r.ker_t_plus_identity = kernel_dimension(t + RationalMatrix::identity(r.vertex_count));
    const std::int64_t excess = std::int64_t(r.edge_count) - std::int64_t(r.vertex_count);
    r.m_plus = excess + 1;
    r.m_minus = excess + std::int64_t(r.ker_t_plus_identity);

    // Exact consistency checks.
    const Rational s1 = r.trace_power(1);
    r.checks.push_back(make_check("trace_s1", sgn(s1) == 0, "S1(Spec T) = " + s1.get_str()));
    const Rational s2 = r.trace_power(2);
    if (r.regular_k) {
        Rational expected(long(r.vertex_count), long(*r.regular_k));
        expected.canonicalize();
        r.checks.push_back(make_check("trace_s2", s2 == expected,
                                      "S2(Spec T) = " + s2.get_str() + ", n/k = " + expected.get_str()));
    }

    std::size_t t_total = std::size_t(std::max(0, r.t_unidentified.degree()));
    for (const auto& id : r.t_eigen_ids) t_total += id.multiplicity;
    r.checks.push_back(make_check("t_multiplicity_sum", t_total == r.vertex_count,
                                  std::to_string(t_total) + " of " + std::to_string(r.vertex_count)));

    std::size_t u_total = std::size_t(std::max(0, r.u_cyclotomic.remainder.degree()));
    for (const auto& f : r.u_cyclotomic.factors) u_total += std::size_t(euler_phi(f.index)) * f.multiplicity;
    r.checks.push_back(make_check("u_multiplicity_sum", u_total == 2 * r.edge_count,
                                  std::to_string(u_total) + " of " + std::to_string(2 * r.edge_count)));

    // det(xI - U) = (x^2 - 1)^(|E| - |V|) * prod_lambda (x^2 - 2 lambda x + 1).
    Polynomial predicted = lifted_t_polynomial(r.t_char_poly);
    const Polynomial x2_minus_1{-1, 0, 1};
    bool divisible = true;
    if (excess >= 0) {
        predicted *= pow(x2_minus_1, unsigned(excess));
    } else {
        auto [q, rem] = divmod(predicted, pow(x2_minus_1, unsigned(-excess)));
        divisible = rem.is_zero();
        predicted = q;
    }
    r.checks.push_back(make_check("spectral_mapping_exact", divisible && predicted == r.u_char_poly,
                                  "det(xI-U) against the lift of det(xI-T)"));

    const unsigned u_plus = factor_multiplicity(r.u_cyclotomic, 1);
    const unsigned u_minus = factor_multiplicity(r.u_cyclotomic, 2);
    const std::int64_t t_plus = r.multiplicity(CosLabel{1, 0});
    const std::int64_t t_minus = r.multiplicity(CosLabel{2, 1});
    r.checks.push_back(make_check("m_plus", std::int64_t(u_plus) == r.m_plus + t_plus,
                                  "mult(1, U) = " + std::to_string(u_plus) + ", M1 + mult(1, T) = " +
                                      std::to_string(r.m_plus + t_plus)));
    r.checks.push_back(make_check("m_minus", std::int64_t(u_minus) == r.m_minus + t_minus,
                                  "mult(-1, U) = " + std::to_string(u_minus) + ", M-1 + mult(-1, T) = " +
                                      std::to_string(r.m_minus + t_minus)));
    return r;
}

namespace {

PeriodicityCertificate certificate_from(CyclotomicFactorization factorization) {
    PeriodicityCertificate c;
    c.periodic = factorization.fully_cyclotomic();
    if (c.periodic) {
        // A root of Phi_d has order exactly d, so the lcm is the minimal period.
        std::int64_t tau = 1;
        for (const auto& f : factorization.factors) tau = lcm(tau, f.index);
        c.period = tau;
        c.witness = Polynomial::constant(1);
    } else {
        c.witness = factorization.remainder.monic();
    }
    c.factorization = std::move(factorization);
    return c;
}

}  // namespace

PeriodicityCertificate certify_periodicity(const SpectrumReport& report) {
    return certificate_from(report.u_cyclotomic);
}

PeriodicityCertificate certify_periodicity(const Graph& g) {
    return certificate_from(factor_into_cyclotomics(char_poly(build_U(g).matrix)));
}

std::size_t default_step_cap(const Graph& g) { return 10 * g.arc_count(); }

std::vector<double> numeric_U(const Graph& g) {
    require_walkable(g);
    const std::size_t na = g.arc_count();
    std::vector<double> u(na * na, 0.0);
    for (std::size_t b = 0; b < na; ++b) {
        const Vertex v = g.arcs()[b].terminus;
        const double forward = 2.0 / double(g.degree(v));
        for (Vertex w : g.neighbors(v)) {
            const std::size_t a = g.arc_index(v, w);
            u[b * na + a] = a == g.inverse_arc(b) ? forward - 1.0 : forward;
        }
    }
    return u;
}

namespace {

void step(const std::vector<double>& u, std::size_t na, const double* in, double* out) {
    const auto& kern = kernels::active_kernels();
    std::fill(out, out + na, 0.0);
    for (std::size_t b = 0; b < na; ++b)
        if (in[b] != 0.0) kern.axpy(out, &u[b * na], in[b], na);
}

}  // namespace

SimulationResult simulate(const Graph& g, std::span<const double> initial, std::size_t steps, double tol) {
    const std::size_t na = g.arc_count();
    if (initial.size() != na) throw std::invalid_argument("initial state must have one entry per arc");
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    const auto& kern = kernels::active_kernels();
    const double norm = std::sqrt(kern.dot(initial.data(), initial.data(), na));
    if (!(std::abs(norm - 1.0) < tol)) throw std::invalid_argument("initial state is not normalized");

    const std::vector<double> u = numeric_U(g);
    std::vector<double> cur(initial.begin(), initial.end()), next(na);
    SimulationResult r;
    for (std::size_t t = 1; t <= steps; ++t) {
        step(u, na, cur.data(), next.data());
        std::swap(cur, next);
        const double overlap = kern.dot(initial.data(), cur.data(), na);
        r.fidelity.push_back(overlap * overlap);
        r.max_return_fidelity = std::max(r.max_return_fidelity, overlap * overlap);
        if (std::sqrt(kern.squared_distance(cur.data(), initial.data(), na)) < tol) {
            r.empirical_period = t;
            break;
        }
    }
    return r;
}

SimulationResult simulate_basis(const Graph& g, std::size_t steps, double tol, bool stop_at_return) {
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    const std::size_t na = g.arc_count();
    const std::vector<double> u = numeric_U(g);
    const auto& kern = kernels::active_kernels();

    SimulationResult r;
    if (na <= kFullBasisLimit) {
        for (std::size_t a = 0; a < na; ++a) r.sampled_arcs.push_back(a);
    } else {
        for (std::size_t i = 0; i < kMaxBasisSample; ++i) r.sampled_arcs.push_back(i * na / kMaxBasisSample);
    }

    const std::size_t s = r.sampled_arcs.size();
    std::vector<double> cur(s * na, 0.0), next(s * na), origin(s * na, 0.0);
    for (std::size_t i = 0; i < s; ++i) {
        cur[i * na + r.sampled_arcs[i]] = 1.0;
        origin[i * na + r.sampled_arcs[i]] = 1.0;
    }
    for (std::size_t t = 1; t <= steps; ++t) {
        bool all_returned = true;
        double worst = 1.0;
        for (std::size_t i = 0; i < s; ++i) {
            step(u, na, &cur[i * na], &next[i * na]);
            const double overlap = next[i * na + r.sampled_arcs[i]];
            worst = std::min(worst, overlap * overlap);
            if (all_returned && !(std::sqrt(kern.squared_distance(&next[i * na], &origin[i * na], na)) < tol))
                all_returned = false;
        }
        std::swap(cur, next);
        r.fidelity.push_back(worst);
        r.max_return_fidelity = std::max(r.max_return_fidelity, worst);
        if (all_returned && !r.empirical_period) {
            r.empirical_period = t;
            if (stop_at_return) break;
        }
    }
    return r;
}

}  // namespace walkper
