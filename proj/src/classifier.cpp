#include "walkper/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "walkper/arith.hpp"
#include "walkper/linalg.hpp"
#include "walkper/orbits.hpp"

namespace walkper {
namespace {

void require_odd_l(std::int64_t l, std::int64_t min) {
    if (l < min || l % 2 == 0)
        throw ArithmeticError("l must be odd and >= " + std::to_string(min) + ", got " + std::to_string(l));
}

Rational frac(std::int64_t num, std::int64_t den) { return make_rational(num, den); }

std::string str(const Rational& r) { return r.get_str(); }

}  // namespace

SpectrumTemplate check_spectrum_template(const SpectrumReport& report, std::int64_t l) {
    if (!report.regular_k) throw std::invalid_argument("spectrum template requires a regular graph");
    require_odd_l(l, 1);
    SpectrumTemplate tpl;
    tpl.l = l;
    if (report.t_unidentified.degree() > 0) {
        tpl.failure = "eigenvalues outside {cos(2 pi j/m)}: " + report.t_unidentified.to_string();
        tpl.offending_factor = report.t_unidentified;
        return tpl;
    }
    std::vector<unsigned> a(std::size_t(l) + 1, 0);
    for (const auto& id : report.t_eigen_ids) {
        if ((2 * l) % id.label.modulus != 0) {
            tpl.failure = id.label.to_string() + " is not cos(2 pi j/" + std::to_string(2 * l) + ")";
            tpl.offending_factor = minimal_polynomial(id.label);
            return tpl;
        }
        a[std::size_t(id.label.index * (2 * l / id.label.modulus))] = id.multiplicity;
    }
    if (a[0] != 1) {
        tpl.failure = "eigenvalue 1 has multiplicity " + std::to_string(a[0]);
        return tpl;
    }
    if (a[std::size_t(l)] > 1 || (a[std::size_t(l)] == 1) != report.bipartite) {
        tpl.failure = "multiplicity of -1 inconsistent with bipartiteness";
        return tpl;
    }
    tpl.ok = true;
    tpl.multiplicities = std::move(a);
    return tpl;
}

BoundReport theorem_bound(std::int64_t l) {
    require_odd_l(l, 3);
    BoundReport b;
    b.l = l;
    b.p1 = smallest_prime_factor(l);
    b.threshold = 2 + frac(2, b.p1 - 2);
    b.divisor_maximum = 0;
    for (std::int64_t dp : divisors(l)) {
        if (dp == l) continue;
        const std::int64_t q = l / dp;
        const Rational value = frac(2 * euler_phi(q), moebius(q) + euler_phi(q));
        b.divisor_maximum = std::max(b.divisor_maximum, value);
    }
    for (std::int64_t k = 2; Rational(long(k)) < b.threshold; ++k) b.admissible_k.push_back(k);
    return b;
}

bool CountingIdentities::passed() const {
    return applicable && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

CountingIdentities verify_counting_identities(const SpectrumReport& report, std::int64_t l, std::int64_t k) {
    CountingIdentities ci;
    ci.l = l;
    ci.k = k;
    const SpectrumTemplate tpl = check_spectrum_template(report, l);
    if (!tpl.ok) {
        ci.precondition_failure = "spectrum template not satisfied: " + tpl.failure;
        return ci;
    }
    if (k < 1) throw std::invalid_argument("regularity k must be positive");
    ci.applicable = true;
    const auto& a = tpl.multiplicities;
    const std::int64_t two_l = 2 * l;

    // m_d for d | 2l: the multiplicity at j = d (or j = 0 for d = 2l).
    auto m_of = [&](std::int64_t d) -> unsigned { return d == two_l ? a[0] : a[std::size_t(d)]; };
    bool uniform = true;
    for (std::int64_t d : divisors(two_l)) {
        const std::int64_t reduced = two_l / d;
        const std::int64_t size = reduced <= 2 ? 1 : euler_phi(reduced) / 2;
        ci.classes.push_back({d, reduced, size, m_of(d)});
        for (std::int64_t j = 0; j <= l; ++j) {
            const std::int64_t cls = j == 0 ? two_l : gcd(j, two_l);
            if (cls == d && a[std::size_t(j)] != m_of(d)) uniform = false;
        }
    }
    ci.checks.push_back({"class_multiplicities_uniform", uniform, "conjugate eigenvalues share multiplicity"});

    ci.n_exact = long(report.vertex_count);
    Rational n_from_classes = 0;
    for (const auto& c : ci.classes) n_from_classes += long(c.class_size * c.multiplicity);
    ci.checks.push_back({"class_sizes_sum_to_n", n_from_classes == ci.n_exact,
                         "sum |class| m_d = " + str(n_from_classes)});

    std::int64_t x_l = 0;
    Rational n_rhs = 0, s2_rhs = 0, combined = 0;
    for (std::int64_t dp : divisors(l)) {
        const std::int64_t x = m_of(dp) + m_of(2 * dp);
        ci.x.emplace_back(dp, x);
        if (dp == l) {
            x_l = x;
            continue;
        }
        const std::int64_t q = l / dp;
        const std::int64_t phi = euler_phi(q);
        const std::int64_t mu = moebius(q);
        n_rhs += frac(phi * x, 2);
        s2_rhs += frac((mu + phi) * x, 4);
        combined += long((k * (mu + phi) - 2 * phi) * x);
    }
    ci.n_rhs = n_rhs + long(x_l);
    ci.s2_rhs = s2_rhs + long(x_l);
    ci.degenerate_adjustment = frac(x_l, 2);
    ci.combined_lhs = combined;
    ci.combined_rhs = long(-4 * (k - 1) * x_l);
    ci.s2_exact = report.trace_power(2);
    ci.n_over_k = frac(std::int64_t(report.vertex_count), k);

    ci.checks.push_back({"eq_n", ci.n_rhs == ci.n_exact, "n = " + str(ci.n_exact) + ", rhs = " + str(ci.n_rhs)});
    ci.checks.push_back({"eq_mphi", ci.s2_rhs == ci.s2_exact,
                         "S2(Spec T) = " + str(ci.s2_exact) + ", rhs = " + str(ci.s2_rhs)});
    ci.checks.push_back({"handshake", ci.s2_exact == ci.n_over_k,
                         "S2(Spec T) = " + str(ci.s2_exact) + ", n/k = " + str(ci.n_over_k)});
    ci.checks.push_back({"combined", ci.combined_lhs == ci.combined_rhs,
                         "lhs = " + str(ci.combined_lhs) + ", -4(k-1)X_l = " + str(ci.combined_rhs)});
    return ci;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::IsC2l: return "IsC2l";
        case Verdict::CandidateCubic: return "CandidateCubic";
        case Verdict::Excluded: return "Excluded";
        case Verdict::TheoremViolation: return "TheoremViolation";
    }
    return "?";
}

std::vector<std::string> ClassificationReport::failed_checks() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.passed) out.push_back(c.name);
    return out;
}

ClassificationReport classify_2l_regular(const Graph& g, std::int64_t l, std::string graph_id) {
    require_walkable(g);
    return classify_2l_regular(g, spectrum_report(g), l, std::move(graph_id));
}

ClassificationReport classify_2l_regular(const Graph& g, const SpectrumReport& report, std::int64_t l,
                                         std::string graph_id) {
    require_walkable(g);
    if (!report.regular_k) throw std::invalid_argument("classification requires a regular graph");
    require_odd_l(l, 3);

    ClassificationReport c;
    c.graph_id = std::move(graph_id);
    c.vertex_count = g.vertex_count();
    c.k = std::int64_t(*report.regular_k);
    c.l = l;

    const PeriodicityCertificate cert = certify_periodicity(report);
    c.period = cert.period;
    const bool period_ok = cert.period && *cert.period == 2 * l;
    c.checks.push_back({"period_equals_2l", period_ok,
                        cert.period ? "period " + std::to_string(*cert.period) : std::string("not periodic")});
    for (const auto& check : report.checks)
        if (check.name == "trace_s1" || check.name == "trace_s2") c.checks.push_back(check);

    const SpectrumTemplate tpl = check_spectrum_template(report, l);
    c.checks.push_back({"spectrum_template", tpl.ok, tpl.ok ? "fits cos(2 pi j/2l)" : tpl.failure});
    if (tpl.ok) {
        const CountingIdentities ci = verify_counting_identities(report, l, c.k);
        for (const auto& check : ci.checks) c.checks.push_back(check);
    }
    const BoundReport bound = theorem_bound(l);
    const bool admissible = std::find(bound.admissible_k.begin(), bound.admissible_k.end(), c.k) !=
                            bound.admissible_k.end();
    c.checks.push_back({"degree_bound", admissible,
                        "k = " + std::to_string(c.k) + ", threshold " + bound.threshold.get_str()});

    if (!period_ok) {
        c.verdict = Verdict::Excluded;
        c.reason = cert.period ? "period is " + std::to_string(*cert.period) + ", not " + std::to_string(2 * l)
                               : "not periodic";
        return c;
    }
    // A connected 2-regular graph is a cycle.
    if (c.k == 2 && c.vertex_count == std::size_t(2 * l)) {
        c.verdict = Verdict::IsC2l;
        c.reason = "connected 2-regular on 2l vertices";
    } else if (c.k == 3 && l % 3 == 0) {
        c.verdict = Verdict::CandidateCubic;
        c.reason = "3-regular with 3 | l";
    } else {
        c.verdict = Verdict::TheoremViolation;
        c.reason = "2l-periodic but neither C_2l nor cubic with 3 | l";
    }
    return c;
}

std::string to_string(PeriodicSrgFamily f) {
    switch (f) {
        case PeriodicSrgFamily::CompleteBipartite: return "K_kk";
        case PeriodicSrgFamily::CompleteTripartite: return "K_lll";
        case PeriodicSrgFamily::Pentagon: return "C5";
        case PeriodicSrgFamily::None: return "none";
    }
    return "?";
}

SrgCheck srg_whitelist_check(const Graph& g) {
    SrgCheck out;
    const auto profile = degree_profile(g);
    const std::size_t n = g.vertex_count();
    if (!g.is_connected() || !profile.regular_k || *profile.regular_k + 1 == n || g.edge_count() == 0) return out;
    const std::int64_t k = std::int64_t(*profile.regular_k);

    RationalMatrix adj(n, n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u)) adj(u, v) = 1;
    const Polynomial p = char_poly(adj);
    const Polynomial squarefree = divmod(p, gcd(p, p.derivative())).first.monic();
    if (squarefree.degree() != 3) return out;

    // (x - k)(x^2 - (r + s) x + rs)
    const auto [quad, rem] = divmod(squarefree, Polynomial::linear(Rational(long(k))));
    if (!rem.is_zero()) return out;
    const Rational sum = -quad.coeff(1);
    const Rational prod = quad.coeff(0);
    const Rational lambda = Rational(long(k)) + sum + prod;
    const Rational mu = Rational(long(k)) + prod;
    if (lambda.get_den() != 1 || mu.get_den() != 1) return out;

    SrgParameters params{std::int64_t(n), k, lambda.get_num().get_si(), mu.get_num().get_si()};
    out.is_srg = true;
    out.params = params;
    if (params.v == 2 * k && params.lambda == 0 && params.mu == k) {
        out.family = PeriodicSrgFamily::CompleteBipartite;
    } else if (params.v % 3 == 0 && 3 * k == 2 * params.v && 3 * params.lambda == params.v &&
               3 * params.mu == 2 * params.v) {
        out.family = PeriodicSrgFamily::CompleteTripartite;
    } else if (params == SrgParameters{5, 2, 0, 1}) {
        out.family = PeriodicSrgFamily::Pentagon;
    }
    return out;
}

}  // namespace walkper
